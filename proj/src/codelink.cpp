#include "archtrace/codelink.hpp"

#include "archtrace/similarity.hpp"

#include <algorithm>
#include <cctype>

namespace archtrace {

namespace {

bool is_separator(char c) {
    return c == '.' || c == '/' || c == '_' || c == '-';
}

bool is_upper(char c) {
    return std::isupper(static_cast<unsigned char>(c)) != 0;
}

bool is_lower(char c) {
    return std::islower(static_cast<unsigned char>(c)) != 0;
}

bool is_digit(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

} // namespace

std::vector<std::string> tokenize_name(std::string_view name) {
    std::vector<std::string> tokens;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            tokens.push_back(to_lower(token));
            token.clear();
        }
    };
    for (std::size_t i = 0; i < name.size(); ++i) {
        const char c = name[i];
        if (is_separator(c)) {
            flush();
            continue;
        }
        if (!token.empty()) {
            const char prev = token.back();
            const bool camel = is_lower(prev) && is_upper(c);
            const bool acronym_end = is_upper(prev) && is_upper(c) && i + 1 < name.size() &&
                                     is_lower(name[i + 1]);
            const bool digit_edge = (is_digit(prev) && !is_digit(c) && !is_separator(c)) ||
                                    (!is_digit(prev) && is_digit(c));
            if (camel || acronym_end || digit_edge) {
                flush();
            }
        }
        token.push_back(c);
    }
    flush();
    return tokens;
}

namespace {

std::vector<std::string> path_segments(std::string_view path) {
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
    // The file extension is noise for name matching.
    if (!segments.empty()) {
        const std::size_t dot = segments.back().rfind('.');
        if (dot != std::string::npos && dot > 0) {
            segments.back().resize(dot);
        }
    }
    return segments;
}

std::string joined(const std::vector<std::string>& tokens) {
    std::string out;
    for (const auto& token : tokens) {
        out += token;
    }
    return out;
}

std::string letters_only_lower(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (std::isalnum(static_cast<unsigned char>(c)) != 0) {
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    return out;
}

} // namespace

LinkCandidate score_component_file(const Component& component, const std::string& path) {
    const auto component_tokens = tokenize_name(component.name);
    const auto segments = path_segments(path);

    std::vector<std::vector<std::string>> segment_tokens;
    segment_tokens.reserve(segments.size());
    for (const auto& segment : segments) {
        segment_tokens.push_back(tokenize_name(segment));
    }

    // h1: any path segment token equals any component token.
    double segment_equality = 0.0;
    for (const auto& tokens : segment_tokens) {
        for (const auto& token : tokens) {
            for (const auto& comp_token : component_tokens) {
                if (token == comp_token) {
                    segment_equality = 1.0;
                }
            }
        }
    }

    // h2: best similarity between the joined component name and any path prefix.
    const std::string component_joined = joined(component_tokens);
    double containment = 0.0;
    std::vector<std::string> prefix_tokens;
    for (const auto& tokens : segment_tokens) {
        prefix_tokens.insert(prefix_tokens.end(), tokens.begin(), tokens.end());
        containment = std::max(
            containment, normalized_levenshtein_similarity(component_joined, joined(prefix_tokens)));
    }

    // h3: component name spelled by the initials of consecutive path tokens.
    double acronym = 0.0;
    const std::string key = letters_only_lower(component.name);
    std::vector<std::string> flat_tokens;
    for (const auto& tokens : segment_tokens) {
        flat_tokens.insert(flat_tokens.end(), tokens.begin(), tokens.end());
    }
    if (!key.empty() && key.size() <= flat_tokens.size()) {
        for (std::size_t start = 0; start + key.size() <= flat_tokens.size(); ++start) {
            std::string initials;
            for (std::size_t k = 0; k < key.size(); ++k) {
                initials.push_back(flat_tokens[start + k][0]);
            }
            if (initials == key) {
                acronym = 1.0;
                break;
            }
        }
    }

    LinkCandidate candidate;
    candidate.component_id = component.id;
    candidate.path = path;
    candidate.evidence = {{"segment-equality", segment_equality},
                          {"name-containment", containment},
                          {"acronym", acronym}};
    candidate.confidence = std::max({segment_equality, containment, acronym});
    return candidate;
}

LinkSet link_sam_to_code(const Sam& sam, const CodeModel& code, const LinkerConfig& config) {
    LinkSet links(LinkKind::SamCode);
    for (const auto& file : code.files) {
        if (file.kind != CodeArtifact::Kind::File) {
            continue;
        }
        std::vector<LinkCandidate> passing;
        double best = 0.0;
        for (const auto& component : sam.components) {
            LinkCandidate candidate = score_component_file(component, file.path);
            best = std::max(best, candidate.confidence);
            if (candidate.confidence >= config.link_threshold) {
                passing.push_back(std::move(candidate));
            }
        }
        for (const auto& candidate : passing) {
            if (candidate.confidence >= best - config.dominance_band) {
                links.add(candidate.component_id, candidate.path);
            }
        }
    }
    return links;
}

} // namespace archtrace
