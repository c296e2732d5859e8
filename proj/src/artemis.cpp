#include "archtrace/artemis.hpp"

#include "archtrace/prompts.hpp"
#include "archtrace/similarity.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace archtrace {

std::string recognize_entities(const SadDocument& sad, const std::vector<std::string>& sam_names,
                               LlmGateway& gateway) {
    if (sad.empty()) {
        throw PreconditionError("documentation is empty");
    }
    std::string prompt(prompts::kEntityRecognitionTask);
    if (!sam_names.empty()) {
        prompt += "\n\nPositive examples to look out for:";
        for (const auto& name : sam_names) {
            prompt += "\n- " + name;
        }
    }
    prompt += "\n\nText:\n";
    for (const auto& sentence : sad.sentences) {
        prompt += sentence.text;
        prompt.push_back('\n');
    }
    return gateway.chat({user_message(prompt)});
}

std::string format_entities(const std::string& plain_text, LlmGateway& gateway) {
    std::string prompt(prompts::kEntityFormatting);
    prompt += "\n\nLast answer:\n";
    prompt += plain_text;
    return gateway.chat({user_message(prompt)});
}

namespace {

// Extracts the first balanced top-level JSON array that parses, skipping
// brackets inside string literals.
std::string first_json_array(const std::string& text) {
    for (std::size_t start = text.find('['); start != std::string::npos;
         start = text.find('[', start + 1)) {
        int depth = 0;
        bool in_string = false;
        bool escaped = false;
        for (std::size_t i = start; i < text.size(); ++i) {
            const char c = text[i];
            if (in_string) {
                if (escaped) {
                    escaped = false;
                } else if (c == '\\') {
                    escaped = true;
                } else if (c == '"') {
                    in_string = false;
                }
                continue;
            }
            if (c == '"') {
                in_string = true;
            } else if (c == '[') {
                ++depth;
            } else if (c == ']') {
                --depth;
                if (depth == 0) {
                    std::string candidate = text.substr(start, i - start + 1);
                    if (nlohmann::json::accept(candidate)) {
                        return candidate;
                    }
                    break;
                }
            }
        }
    }
    return {};
}

} // namespace

std::vector<RecognizedEntity> parse_entities(const std::string& json_text) {
    const std::string array_text = first_json_array(json_text);
    if (array_text.empty()) {
        throw MalformedResponseError("no JSON array found in response");
    }
    const nlohmann::json array = nlohmann::json::parse(array_text);
    std::vector<RecognizedEntity> entities;
    for (const auto& item : array) {
        if (!item.is_object() || !item.contains("name") || !item.at("name").is_string()) {
            throw MalformedResponseError("entity element is missing a string \"name\"");
        }
        RecognizedEntity entity;
        entity.name = item.at("name").get<std::string>();
        if (entity.name.empty()) {
            throw MalformedResponseError("entity has an empty name");
        }
        if (item.contains("alternativeNames") && item.at("alternativeNames").is_array()) {
            for (const auto& alt : item.at("alternativeNames")) {
                if (alt.is_string()) {
                    entity.alternative_names.push_back(alt.get<std::string>());
                }
            }
        }
        if (item.contains("occurrences") && item.at("occurrences").is_array()) {
            for (const auto& occ : item.at("occurrences")) {
                if (occ.is_string()) {
                    entity.occurrences.push_back(occ.get<std::string>());
                }
            }
        }
        entities.push_back(std::move(entity));
    }
    return entities;
}

int map_occurrence_to_sentence(const std::string& occurrence, const SadDocument& sad) {
    if (sad.empty()) {
        throw PreconditionError("documentation is empty");
    }
    const std::string_view needle = trim(occurrence);
    for (const auto& sentence : sad.sentences) {
        if (trim(sentence.text) == needle) {
            return sentence.id;
        }
    }
    int best_id = sad.sentences.front().id;
    double best_score = -1.0;
    for (const auto& sentence : sad.sentences) {
        const double score = normalized_levenshtein_similarity(needle, trim(sentence.text));
        if (score > best_score) {
            best_score = score;
            best_id = sentence.id;
        }
    }
    return best_id;
}

namespace {

bool names_match(const std::string& entity_variant_lower, const std::string& component_lower,
                 const std::vector<double>& variant_embedding,
                 const std::vector<double>& component_embedding, const MatchConfig& config) {
    if (entity_variant_lower == component_lower) {
        return true;
    }
    if (jaro_winkler_similarity(entity_variant_lower, component_lower) >
        config.jaro_winkler_threshold) {
        return true;
    }
    if (normalized_levenshtein_similarity(entity_variant_lower, component_lower) >
        config.levenshtein_threshold) {
        return true;
    }
    return cosine_similarity(variant_embedding, component_embedding) > config.cosine_threshold;
}

} // namespace

LinkSet match_entities_to_sam(const std::vector<RecognizedEntity>& entities, const Sam& sam,
                              LlmGateway& gateway, const MatchConfig& config) {
    for (double threshold : {config.jaro_winkler_threshold, config.levenshtein_threshold,
                             config.cosine_threshold}) {
        if (threshold < 0.0 || threshold > 1.0) {
            throw PreconditionError("match thresholds must be in [0,1]");
        }
    }
    LinkSet links(LinkKind::SadSam);
    if (entities.empty() || sam.components.empty()) {
        return links;
    }

    // One embedding batch over all distinct lowercased names, in first-seen order.
    std::vector<std::string> texts;
    std::map<std::string, std::size_t> index;
    auto intern = [&](const std::string& raw) {
        const std::string lower = to_lower(raw);
        if (index.emplace(lower, texts.size()).second) {
            texts.push_back(lower);
        }
        return lower;
    };

    std::vector<std::vector<std::string>> entity_variants(entities.size());
    for (std::size_t e = 0; e < entities.size(); ++e) {
        entity_variants[e].push_back(intern(entities[e].name));
        for (const auto& alt : entities[e].alternative_names) {
            entity_variants[e].push_back(intern(alt));
        }
    }
    std::vector<std::string> component_names;
    component_names.reserve(sam.components.size());
    for (const auto& component : sam.components) {
        component_names.push_back(intern(component.name));
    }

    const auto embeddings = gateway.embed(texts);
    auto embedding_of = [&](const std::string& lower) -> const std::vector<double>& {
        return embeddings[index.at(lower)].values;
    };

    for (std::size_t e = 0; e < entities.size(); ++e) {
        for (std::size_t c = 0; c < sam.components.size(); ++c) {
            const bool matched = std::any_of(
                entity_variants[e].begin(), entity_variants[e].end(),
                [&](const std::string& variant) {
                    return names_match(variant, component_names[c], embedding_of(variant),
                                       embedding_of(component_names[c]), config);
                });
            if (matched) {
                for (int sentence_id : entities[e].resolved_sentences) {
                    links.add(std::to_string(sentence_id), sam.components[c].id);
                }
            }
        }
    }
    return links;
}

std::string entities_to_json(const std::vector<RecognizedEntity>& entities) {
    nlohmann::json array = nlohmann::json::array();
    for (const auto& entity : entities) {
        array.push_back({{"name", entity.name},
                         {"alternativeNames", entity.alternative_names},
                         {"occurrences", entity.occurrences},
                         {"resolvedSentences", entity.resolved_sentences}});
    }
    return array.dump(2) + "\n";
}

LinkSet run_artemis(const SadDocument& sad, const Sam& sam, LlmGateway& gateway,
                    const MatchConfig& config, std::vector<RecognizedEntity>* recognized_out) {
    if (sam.components.empty()) {
        return LinkSet(LinkKind::SadSam);
    }
    std::vector<std::string> sam_names;
    sam_names.reserve(sam.components.size());
    for (const auto& component : sam.components) {
        sam_names.push_back(component.name);
    }

    const std::string plain = recognize_entities(sad, sam_names, gateway);
    std::string formatted = format_entities(plain, gateway);
    std::vector<RecognizedEntity> entities;
    try {
        entities = parse_entities(formatted);
    } catch (const MalformedResponseError&) {
        formatted = format_entities(plain, gateway);
        entities = parse_entities(formatted); // second failure propagates
    }

    for (auto& entity : entities) {
        std::set<int> ids;
        for (const auto& occurrence : entity.occurrences) {
            ids.insert(map_occurrence_to_sentence(occurrence, sad));
        }
        entity.resolved_sentences.assign(ids.begin(), ids.end());
    }
    if (recognized_out != nullptr) {
        *recognized_out = entities;
    }
    return match_entities_to_sam(entities, sam, gateway, config);
}

} // namespace archtrace
