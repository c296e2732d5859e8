#include "archtrace/exarch.hpp"

#include "archtrace/prompts.hpp"
#include "archtrace/similarity.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>
#include <sstream>

namespace archtrace {

namespace prompts {

std::string substitute(std::string_view prompt_template, std::string_view placeholder,
                       std::string_view value) {
    std::string out(prompt_template);
    std::size_t pos = 0;
    while ((pos = out.find(placeholder, pos)) != std::string::npos) {
        out.replace(pos, placeholder.size(), value);
        pos += value.size();
    }
    return out;
}

} // namespace prompts

Casing parse_casing(std::string_view text) {
    if (text == "strict-camel") {
        return Casing::StrictCamel;
    }
    if (text == "legacy-space-removal") {
        return Casing::LegacySpaceRemoval;
    }
    throw FormatError("unknown casing mode: " + std::string(text));
}

namespace {

std::string remove_component_words(const std::string& name) {
    static const std::regex word(R"(\bcomponents?\b)", std::regex::icase);
    return std::regex_replace(name, word, "");
}

std::vector<std::string> whitespace_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::string token;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            if (!token.empty()) {
                tokens.push_back(std::move(token));
                token.clear();
            }
        } else {
            token.push_back(c);
        }
    }
    if (!token.empty()) {
        tokens.push_back(std::move(token));
    }
    return tokens;
}

std::string apply_casing(const std::string& name, Casing casing) {
    auto tokens = whitespace_tokens(name);
    std::string out;
    for (auto& token : tokens) {
        if (casing == Casing::StrictCamel) {
            token[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
        }
        out += token;
    }
    return out;
}

std::string sentences_as_text(const SadDocument& sad) {
    std::string text;
    for (const auto& sentence : sad.sentences) {
        if (!text.empty()) {
            text.push_back('\n');
        }
        text += sentence.text;
    }
    return text;
}

std::string dash_list(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& name : names) {
        if (!out.empty()) {
            out.push_back('\n');
        }
        out += "- ";
        out += name;
    }
    return out;
}

} // namespace

std::vector<std::string> parse_component_list(std::string_view response, Casing casing) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    std::size_t start = 0;
    while (start <= response.size()) {
        std::size_t end = response.find('\n', start);
        if (end == std::string_view::npos) {
            end = response.size();
        }
        std::string_view line = trim(response.substr(start, end - start));
        if (!line.empty() && line.front() == '-') {
            line = trim(line.substr(1));
            const std::string cleaned = remove_component_words(std::string(line));
            std::string name = apply_casing(cleaned, casing);
            if (!name.empty() && seen.insert(name).second) {
                names.push_back(std::move(name));
            }
        }
        if (end == response.size()) {
            break;
        }
        start = end + 1;
    }
    return names;
}

ComponentNameList extract_names_from_sad(const SadDocument& sad, LlmGateway& gateway,
                                         Casing casing) {
    if (sad.empty()) {
        throw PreconditionError("documentation is empty");
    }
    const std::string first = prompts::substitute(
        prompts::kDocToArchitecture1, "{Software Architecture Documentation}",
        sentences_as_text(sad));
    const std::string elaboration = gateway.chat({user_message(first)});
    const std::string listing = gateway.chat({user_message(first),
                                              assistant_message(elaboration),
                                              user_message(std::string(prompts::kDocToArchitecture2))});
    ComponentNameList result;
    result.names = parse_component_list(listing, casing);
    result.source = NameSource::Doc;
    if (result.names.empty()) {
        throw EmptyExtractionError("no component names parsed from documentation response");
    }
    return result;
}

ComponentNameList extract_names_from_code(const std::string& feature_text, LlmGateway& gateway,
                                          Casing casing) {
    if (trim(feature_text).empty()) {
        throw PreconditionError("feature text is empty");
    }
    // Rendered feature text is "<Name>:\n<body>".
    const std::size_t colon = feature_text.find(':');
    const std::string feature_name =
        colon == std::string::npos ? "Features" : feature_text.substr(0, colon);
    const std::size_t body_start = feature_text.find('\n');
    const std::string body =
        body_start == std::string::npos ? std::string{} : feature_text.substr(body_start + 1);

    std::string first = prompts::substitute(prompts::kCodeToArchitecture1, "{Features}",
                                            feature_name);
    first = prompts::substitute(first, "{Content}", body);
    const std::string summary = gateway.chat({user_message(first)});
    const std::string listing = gateway.chat({user_message(first),
                                              assistant_message(summary),
                                              user_message(std::string(prompts::kDocToArchitecture2))});
    ComponentNameList result;
    result.names = parse_component_list(listing, casing);
    result.source = NameSource::Code;
    if (result.names.empty()) {
        throw EmptyExtractionError("no component names parsed from code-feature response");
    }
    return result;
}

ComponentNameList aggregate_via_similarity(const std::vector<std::string>& doc_names,
                                           const std::vector<std::string>& code_names,
                                           const AggregationConfig& config) {
    if (config.threshold < 0.0 || config.threshold > 1.0) {
        throw PreconditionError("similarity threshold must be in [0,1]");
    }
    ComponentNameList result;
    result.source = NameSource::CombinedSimilarity;
    auto consider = [&](const std::string& candidate) {
        for (const auto& accepted : result.names) {
            if (accepted == candidate ||
                normalized_levenshtein_similarity(accepted, candidate) > config.threshold) {
                return;
            }
        }
        result.names.push_back(candidate);
    };
    for (const auto& name : doc_names) {
        consider(name);
    }
    for (const auto& name : code_names) {
        consider(name);
    }
    return result;
}

ComponentNameList aggregate_via_prompt(const std::vector<std::string>& doc_names,
                                       const std::vector<std::string>& code_names,
                                       LlmGateway& gateway, Casing casing) {
    if (doc_names.empty() && code_names.empty()) {
        throw PreconditionError("no candidate names to aggregate");
    }
    std::vector<std::string> combined = doc_names;
    combined.insert(combined.end(), code_names.begin(), code_names.end());
    const std::string prompt = prompts::substitute(
        prompts::kAggregation, "{Possible Component Names}", dash_list(combined));
    const std::string response = gateway.chat({user_message(prompt)});
    ComponentNameList result;
    result.names = parse_component_list(response, casing);
    result.source = NameSource::CombinedPrompt;
    return result;
}

Sam build_simple_sam(const ComponentNameList& names, const std::string& project) {
    if (names.names.empty()) {
        throw PreconditionError("cannot build a model from an empty name list");
    }
    Sam sam;
    sam.project = project;
    switch (names.source) {
    case NameSource::Doc:
        sam.provenance = Provenance::ExtractedDoc;
        break;
    case NameSource::Code:
        sam.provenance = Provenance::ExtractedCode;
        break;
    case NameSource::CombinedPrompt:
    case NameSource::CombinedSimilarity:
        sam.provenance = Provenance::ExtractedCombined;
        break;
    }
    sam.components.reserve(names.names.size());
    for (std::size_t i = 0; i < names.names.size(); ++i) {
        sam.components.push_back(Component{"x-" + std::to_string(i), names.names[i]});
    }
    return sam;
}

} // namespace archtrace
