#include "archtrace/scan.hpp"

#include "archtrace/errors.hpp"
#include "archtrace/io.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace fs = std::filesystem;

namespace archtrace {

bool glob_match(std::string_view pattern, std::string_view path) {
    // Iterative wildcard match with single-segment '*'/'?' and cross-segment "**".
    std::size_t p = 0;
    std::size_t s = 0;
    std::size_t star_p = std::string_view::npos;
    std::size_t star_s = 0;
    bool star_crosses = false;

    while (s < path.size()) {
        if (p < pattern.size() && pattern[p] == '*') {
            const bool double_star = p + 1 < pattern.size() && pattern[p + 1] == '*';
            star_crosses = double_star;
            p += double_star ? 2 : 1;
            star_p = p;
            star_s = s;
        } else if (p < pattern.size() &&
                   (pattern[p] == path[s] || (pattern[p] == '?' && path[s] != '/'))) {
            ++p;
            ++s;
        } else if (star_p != std::string_view::npos &&
                   (star_crosses || path[star_s] != '/')) {
            ++star_s;
            p = star_p;
            s = star_s;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') {
        ++p;
    }
    return p == pattern.size();
}

namespace {

std::vector<std::string> split_segments(std::string_view path) {
    std::vector<std::string> segments;
    std::size_t start = 0;
    while (start <= path.size()) {
        std::size_t end = path.find('/', start);
        if (end == std::string_view::npos) {
            end = path.size();
        }
        if (end > start) {
            segments.emplace_back(path.substr(start, end - start));
        }
        if (end == path.size()) {
            break;
        }
        start = end + 1;
    }
    return segments;
}

bool is_excluded(const std::string& relative_path, const ScanConfig& config) {
    const auto segments = split_segments(relative_path);
    for (const auto& glob : config.exclude_globs) {
        if (glob_match(glob, relative_path)) {
            return true;
        }
        for (const auto& segment : segments) {
            if (glob_match(glob, segment)) {
                return true;
            }
        }
    }
    if (config.exclude_test_code) {
        for (const auto& segment : segments) {
            if (segment == "test") {
                return true;
            }
        }
    }
    return false;
}

bool extension_matches(const std::string& filename, const ScanConfig& config) {
    for (const auto& ext : config.extensions) {
        if (filename.size() > ext.size() &&
            filename.compare(filename.size() - ext.size(), ext.size(), ext) == 0) {
            return true;
        }
    }
    return false;
}

void walk(const fs::path& dir, const std::string& relative_prefix, const ScanConfig& config,
          std::vector<CodeArtifact>& files) {
    std::vector<fs::directory_entry> entries;
    for (const auto& entry : fs::directory_iterator(dir)) {
        entries.push_back(entry);
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return a.path().filename().string() < b.path().filename().string();
    });
    for (const auto& entry : entries) {
        const std::string name = entry.path().filename().string();
        const std::string relative = relative_prefix.empty() ? name : relative_prefix + "/" + name;
        if (entry.is_directory()) {
            // Symlinked directories are skipped; following them can loop.
            if (!entry.is_symlink() && !is_excluded(relative, config)) {
                walk(entry.path(), relative, config, files);
            }
        } else if (entry.is_regular_file()) {
            if (extension_matches(name, config) && !is_excluded(relative, config)) {
                files.push_back(CodeArtifact{relative, CodeArtifact::Kind::File});
            }
        }
    }
}

} // namespace

std::string parse_package_declaration(std::string_view source) {
    static const std::regex decl(R"(^\s*package\s+([A-Za-z_$][\w$]*(?:\.[A-Za-z_$][\w$]*)*)\s*;)");
    std::size_t start = 0;
    while (start <= source.size()) {
        std::size_t end = source.find('\n', start);
        if (end == std::string_view::npos) {
            end = source.size();
        }
        const std::string line(source.substr(start, end - start));
        std::smatch match;
        if (std::regex_search(line, match, decl)) {
            return match[1].str();
        }
        if (end == source.size()) {
            break;
        }
        start = end + 1;
    }
    return {};
}

std::vector<std::string> extract_packages(const CodeModel& model, const ScanConfig& config) {
    // Source roots sorted longest-first so the most specific prefix wins.
    std::vector<std::string> roots = config.source_roots;
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });

    std::set<std::string> packages;
    for (const auto& file : model.files) {
        if (file.kind != CodeArtifact::Kind::File) {
            continue;
        }
        std::string package;
        try {
            package = parse_package_declaration(read_file(fs::path(model.root) / file.path));
        } catch (const IoError&) {
            // Unreadable file: fall back to path derivation.
        }
        if (package.empty()) {
            std::string_view dir = file.path;
            const std::size_t slash = dir.rfind('/');
            dir = slash == std::string_view::npos ? std::string_view{} : dir.substr(0, slash);
            for (const auto& root : roots) {
                if (dir == root) {
                    dir = {};
                    break;
                }
                if (dir.size() > root.size() && dir.substr(0, root.size()) == root &&
                    dir[root.size()] == '/') {
                    dir = dir.substr(root.size() + 1);
                    break;
                }
            }
            package.assign(dir);
            std::replace(package.begin(), package.end(), '/', '.');
        }
        if (!package.empty()) {
            packages.insert(std::move(package));
        }
    }
    return {packages.begin(), packages.end()};
}

CodeModel scan_source_tree(const fs::path& root, const ScanConfig& config) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw IoError("scan root is not a readable directory: " + root.string());
    }
    CodeModel model;
    model.root = root.generic_string();
    walk(root, "", config, model.files);
    std::sort(model.files.begin(), model.files.end());
    model.packages = extract_packages(model, config);
    return model;
}

std::string render_feature_text(const std::vector<std::string>& packages) {
    std::string text = "Packages:";
    if (packages.empty()) {
        text += "\n(none)";
        return text;
    }
    for (const auto& package : packages) {
        text.push_back('\n');
        text += package;
    }
    return text;
}

} // namespace archtrace
