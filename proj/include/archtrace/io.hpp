#pragma once

#include "archtrace/types.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace archtrace {

/// Load a one-sentence-per-line UTF-8 document. Line k becomes sentence id k.
/// Trailing empty lines are dropped; interior empty lines stay as empty sentences.
/// The project name is the file stem.
SadDocument load_sad(const std::filesystem::path& path);

/// Load a component list from CSV with header "id,name". Provenance is Manual.
Sam load_component_list(const std::filesystem::path& path);

/// Load a deduplicated link set of the given kind from CSV with header "left,right".
GoldStandard load_gold_links(const std::filesystem::path& path, LinkKind kind);

/// Write a link set as CSV "left,right", rows sorted by (left, right).
void write_links(const LinkSet& links, const std::filesystem::path& path);

/// Write a component list as CSV "id,name" (inverse of load_component_list).
void write_sam(const Sam& sam, const std::filesystem::path& path);

namespace csv {

/// Split one CSV record. Supports double-quoted fields with "" escapes.
std::vector<std::string> split_record(const std::string& line);

/// Quote a field if it contains a comma, quote, or line break.
std::string escape_field(const std::string& field);

} // namespace csv

/// True iff the byte sequence is structurally valid UTF-8.
bool is_valid_utf8(std::string_view bytes);

/// Read a whole file, failing with IoError when missing/unreadable.
std::string read_file(const std::filesystem::path& path);

/// Write a whole file, failing with IoError on failure.
void write_file(const std::filesystem::path& path, std::string_view content);

} // namespace archtrace
