#include "archtrace/config.hpp"

#include "archtrace/errors.hpp"
#include "archtrace/io.hpp"
#include "archtrace/similarity.hpp"

namespace archtrace {

ConfigMap load_config(const std::filesystem::path& path) {
    const std::string content = read_file(path);
    ConfigMap config;
    std::size_t line_number = 0;
    std::size_t start = 0;
    while (start <= content.size()) {
        std::size_t end = content.find('\n', start);
        if (end == std::string::npos) {
            end = content.size();
        }
        ++line_number;
        std::string_view line = trim(std::string_view(content).substr(start, end - start));
        if (!line.empty() && line.front() != '#') {
            const std::size_t eq = line.find('=');
            if (eq == std::string_view::npos) {
                throw FormatError("config line " + std::to_string(line_number) +
                                  " is not key=value: " + std::string(line));
            }
            const std::string key(trim(line.substr(0, eq)));
            const std::string value(trim(line.substr(eq + 1)));
            if (key.empty()) {
                throw FormatError("config line " + std::to_string(line_number) +
                                  " has an empty key");
            }
            config.values[key] = value;
        }
        if (end == content.size()) {
            break;
        }
        start = end + 1;
    }
    return config;
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= value.size()) {
        std::size_t end = value.find(',', start);
        if (end == std::string::npos) {
            end = value.size();
        }
        const std::string item(trim(std::string_view(value).substr(start, end - start)));
        if (!item.empty()) {
            items.push_back(item);
        }
        if (end == value.size()) {
            break;
        }
        start = end + 1;
    }
    return items;
}

} // namespace archtrace
