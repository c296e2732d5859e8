#include "archtrace/compose.hpp"

#include <map>
#include <string>
#include <vector>

namespace archtrace {

LinkSet compose_links(const LinkSet& sad_sam, const LinkSet& sam_code) {
    if (sad_sam.kind() != LinkKind::SadSam) {
        throw KindMismatchError("left operand must be a sad-sam link set");
    }
    if (sam_code.kind() != LinkKind::SamCode) {
        throw KindMismatchError("right operand must be a sam-code link set");
    }
    std::map<std::string, std::vector<std::string>> files_of_component;
    for (const auto& [component, file] : sam_code.pairs()) {
        files_of_component[component].push_back(file);
    }
    LinkSet result(LinkKind::SadCode);
    for (const auto& [sentence, component] : sad_sam.pairs()) {
        const auto it = files_of_component.find(component);
        if (it == files_of_component.end()) {
            continue;
        }
        for (const auto& file : it->second) {
            result.add(sentence, file);
        }
    }
    return result;
}

} // namespace archtrace
