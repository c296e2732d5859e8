#pragma once

#include "archtrace/gateway.hpp"
#include "archtrace/types.hpp"

#include <string>
#include <vector>

namespace archtrace {

/// An architecture entity recognized in documentation text.
struct RecognizedEntity {
    std::string name;
    std::vector<std::string> alternative_names;
    std::vector<std::string> occurrences;    // raw line strings from the response
    std::vector<int> resolved_sentences;     // sorted, deduplicated sentence ids

    friend bool operator==(const RecognizedEntity&, const RecognizedEntity&) = default;
};

/// Per-channel match thresholds; a pair links when any score exceeds its
/// threshold (case-insensitive exact name equality always links).
struct MatchConfig {
    double jaro_winkler_threshold = 0.90;
    double levenshtein_threshold = 0.80;
    double cosine_threshold = 0.85;
};

/// Run the recognition task prompt over the documentation, with the model's
/// component names appended as positive examples. Returns raw assistant text.
std::string recognize_entities(const SadDocument& sad, const std::vector<std::string>& sam_names,
                               LlmGateway& gateway);

/// Run the formatting prompt over a prior plain-text answer. Returns raw text
/// expected to contain a JSON array.
std::string format_entities(const std::string& plain_text, LlmGateway& gateway);

/// Extract entities from the first top-level JSON array in the text,
/// tolerating surrounding prose and code fences.
std::vector<RecognizedEntity> parse_entities(const std::string& json_text);

/// Map one occurrence line to a sentence id: exact match (after trimming)
/// first, otherwise highest string similarity; ties go to the lowest id.
int map_occurrence_to_sentence(const std::string& occurrence, const SadDocument& sad);

/// Match entities (all name variants) against model components and emit one
/// link per (resolved sentence, matched component).
LinkSet match_entities_to_sam(const std::vector<RecognizedEntity>& entities, const Sam& sam,
                              LlmGateway& gateway, const MatchConfig& config = {});

/// Full pipeline: recognize, format (one retry on malformed JSON), parse,
/// map occurrences, match. When recognized_out is given it receives the
/// parsed entities with resolved sentence ids, for inspection dumps.
LinkSet run_artemis(const SadDocument& sad, const Sam& sam, LlmGateway& gateway,
                    const MatchConfig& config = {},
                    std::vector<RecognizedEntity>* recognized_out = nullptr);

/// Serialize entities as a JSON array (name, alternativeNames, occurrences,
/// resolvedSentences).
std::string entities_to_json(const std::vector<RecognizedEntity>& entities);

} // namespace archtrace
