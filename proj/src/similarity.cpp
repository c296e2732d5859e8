#include "archtrace/similarity.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <vector>

namespace archtrace {

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string_view trim(std::string_view s) {
    auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && is_space(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::size_t levenshtein_distance(std::string_view a, std::string_view b) {
    if (a.size() > b.size()) {
        std::swap(a, b);
    }
    std::vector<std::size_t> row(a.size() + 1);
    std::iota(row.begin(), row.end(), std::size_t{0});

    for (std::size_t j = 1; j <= b.size(); ++j) {
        std::size_t diagonal = row[0];
        row[0] = j;
        for (std::size_t i = 1; i <= a.size(); ++i) {
            std::size_t saved = row[i];
            if (a[i - 1] == b[j - 1]) {
                row[i] = diagonal;
            } else {
                row[i] = std::min({row[i - 1], row[i], diagonal}) + 1;
            }
            diagonal = saved;
        }
    }
    return row[a.size()];
}

double normalized_levenshtein_similarity(std::string_view a, std::string_view b) {
    if (a.empty() && b.empty()) {
        return 1.0;
    }
    const std::string la = to_lower(a);
    const std::string lb = to_lower(b);
    const double dist = static_cast<double>(levenshtein_distance(la, lb));
    const double longest = static_cast<double>(std::max(a.size(), b.size()));
    return 1.0 - dist / longest;
}

double jaro_similarity(std::string_view a, std::string_view b) {
    if (a.empty() && b.empty()) {
        return 1.0;
    }
    if (a.empty() || b.empty()) {
        return 0.0;
    }
    const std::size_t la = a.size();
    const std::size_t lb = b.size();
    const std::size_t window =
        std::max(la, lb) / 2 > 0 ? std::max(la, lb) / 2 - 1 : 0;

    std::vector<bool> matched_a(la, false);
    std::vector<bool> matched_b(lb, false);

    std::size_t matches = 0;
    for (std::size_t i = 0; i < la; ++i) {
        const std::size_t lo = i > window ? i - window : 0;
        const std::size_t hi = std::min(lb, i + window + 1);
        for (std::size_t j = lo; j < hi; ++j) {
            if (!matched_b[j] && a[i] == b[j]) {
                matched_a[i] = true;
                matched_b[j] = true;
                ++matches;
                break;
            }
        }
    }
    if (matches == 0) {
        return 0.0;
    }

    std::size_t transpositions = 0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < la; ++i) {
        if (!matched_a[i]) {
            continue;
        }
        while (!matched_b[k]) {
            ++k;
        }
        if (a[i] != b[k]) {
            ++transpositions;
        }
        ++k;
    }
    const double m = static_cast<double>(matches);
    const double t = static_cast<double>(transpositions) / 2.0;
    return (m / static_cast<double>(la) + m / static_cast<double>(lb) + (m - t) / m) / 3.0;
}

double jaro_winkler_similarity(std::string_view a, std::string_view b) {
    const double jaro = jaro_similarity(a, b);
    std::size_t prefix = 0;
    const std::size_t limit = std::min({a.size(), b.size(), std::size_t{4}});
    while (prefix < limit && a[prefix] == b[prefix]) {
        ++prefix;
    }
    return jaro + static_cast<double>(prefix) * 0.1 * (1.0 - jaro);
}

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.empty()) {
        return 0.0;
    }
    double dot = 0.0;
    double na = 0.0;
    double nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) {
        return 0.0;
    }
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

} // namespace archtrace
