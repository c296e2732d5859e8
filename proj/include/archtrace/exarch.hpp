#pragma once

#include "archtrace/gateway.hpp"
#include "archtrace/types.hpp"

#include <string>
#include <vector>

namespace archtrace {

/// How dash-list names are normalized after word removal.
/// Legacy strips spaces as-is; StrictCamel upper-cases each token's first letter.
enum class Casing { StrictCamel, LegacySpaceRemoval };

Casing parse_casing(std::string_view text);

enum class NameSource { Doc, Code, CombinedPrompt, CombinedSimilarity };

/// An ordered, duplicate-free list of extracted component names.
struct ComponentNameList {
    std::vector<std::string> names;
    NameSource source = NameSource::Doc;

    friend bool operator==(const ComponentNameList&, const ComponentNameList&) = default;
};

struct AggregationConfig {
    double threshold = 0.5; // names with similarity strictly above it merge
    Casing casing = Casing::StrictCamel;
};

/// Interpret a dash-list response: keep '-' lines, drop the standalone words
/// "component"/"components", normalize casing, drop empties, deduplicate.
std::vector<std::string> parse_component_list(std::string_view response, Casing casing);

/// Two-prompt extraction over the full documentation text.
ComponentNameList extract_names_from_sad(const SadDocument& sad, LlmGateway& gateway,
                                         Casing casing = Casing::StrictCamel);

/// Two-prompt extraction over rendered feature text (see render_feature_text).
ComponentNameList extract_names_from_code(const std::string& feature_text, LlmGateway& gateway,
                                          Casing casing = Casing::StrictCamel);

/// Merge doc-then-code names sequentially: a candidate is kept only when its
/// similarity to every kept name stays at or below the threshold.
ComponentNameList aggregate_via_similarity(const std::vector<std::string>& doc_names,
                                           const std::vector<std::string>& code_names,
                                           const AggregationConfig& config = {});

/// Merge via the aggregation prompt; the response is parsed like any dash list.
ComponentNameList aggregate_via_prompt(const std::vector<std::string>& doc_names,
                                       const std::vector<std::string>& code_names,
                                       LlmGateway& gateway, Casing casing = Casing::StrictCamel);

/// Turn a name list into a model with deterministic ids x-0, x-1, ...
Sam build_simple_sam(const ComponentNameList& names, const std::string& project);

} // namespace archtrace
