#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace archtrace {

/// Flat key=value configuration. '#' starts a comment; blank lines are fine.
struct ConfigMap {
    std::map<std::string, std::string> values;

    std::optional<std::string> get(const std::string& key) const {
        const auto it = values.find(key);
        return it == values.end() ? std::nullopt : std::optional<std::string>(it->second);
    }
};

/// Parse a config file; a line without '=' fails with its line number.
ConfigMap load_config(const std::filesystem::path& path);

/// Split a comma-separated config value into trimmed, non-empty items.
std::vector<std::string> split_list(const std::string& value);

} // namespace archtrace
