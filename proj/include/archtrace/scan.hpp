#pragma once

#include "archtrace/types.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace archtrace {

/// Controls which files a source-tree scan picks up.
///
/// exclude_globs are matched against the '/'-joined relative path and against
/// every single path segment ('*' and '?' stay within a segment, "**" crosses
/// segment boundaries). The defaults drop VCS metadata and build output.
struct ScanConfig {
    std::vector<std::string> source_roots;                // relative to root; root itself if empty
    std::vector<std::string> extensions = {".java"};
    std::vector<std::string> exclude_globs = {".git", ".svn", ".hg", "build", "target", "out"};
    bool exclude_test_code = false;                       // drop paths containing a /test/ segment
};

/// A scanned source tree: matching files plus the non-empty packages they form.
struct CodeModel {
    std::string root;
    std::vector<CodeArtifact> files;    // kind=File, sorted by path
    std::vector<std::string> packages;  // sorted, unique, each with >=1 direct file

    friend bool operator==(const CodeModel&, const CodeModel&) = default;
};

/// Walk the tree under root and collect matching files and their packages.
CodeModel scan_source_tree(const std::filesystem::path& root, const ScanConfig& config = {});

/// The non-empty package list for a scanned model. A file's package is its
/// source declaration when one parses, otherwise the dotted directory path
/// relative to the nearest configured source root.
std::vector<std::string> extract_packages(const CodeModel& model, const ScanConfig& config = {});

/// Render the package list as the "Packages" feature text used as prompt input.
std::string render_feature_text(const std::vector<std::string>& packages);

/// Simple glob with '*'/'?' within a segment and "**" across segments.
bool glob_match(std::string_view pattern, std::string_view path);

/// The package declaration of a source file, or empty when none parses.
std::string parse_package_declaration(std::string_view source);

} // namespace archtrace
