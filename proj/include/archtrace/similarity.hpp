#pragma once

#include <span>
#include <string>
#include <string_view>

namespace archtrace {

/// Classic edit distance (insert/delete/substitute, unit costs).
std::size_t levenshtein_distance(std::string_view a, std::string_view b);

/// 1 - editDistance(lower(a), lower(b)) / max(len(a), len(b)); 1.0 when both empty.
double normalized_levenshtein_similarity(std::string_view a, std::string_view b);

/// Jaro similarity in [0,1].
double jaro_similarity(std::string_view a, std::string_view b);

/// Jaro-Winkler similarity with the standard prefix scale 0.1 over at most 4 chars.
double jaro_winkler_similarity(std::string_view a, std::string_view b);

/// Cosine of two equal-dimension vectors; 0 when either has zero norm.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

/// ASCII lowercase copy (non-ASCII bytes pass through unchanged).
std::string to_lower(std::string_view s);

/// Strip leading/trailing ASCII whitespace.
std::string_view trim(std::string_view s);

} // namespace archtrace
