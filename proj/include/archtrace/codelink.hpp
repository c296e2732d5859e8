#pragma once

#include "archtrace/scan.hpp"
#include "archtrace/types.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace archtrace {

/// Lowercase tokens split on camel-case, digit/letter boundaries, and
/// '.', '/', '_', '-'. A run of capitals followed by lowercase splits before
/// the last capital ("FSESLAkka" -> fsesl, akka).
std::vector<std::string> tokenize_name(std::string_view name);

/// One scored (component, file) pair with per-heuristic evidence.
struct LinkCandidate {
    std::string component_id;
    std::string path;
    double confidence = 0.0;
    std::vector<std::pair<std::string, double>> evidence;
};

/// Score a component against a code path with three name heuristics:
/// segment-token equality, prefix name containment, and acronym match.
/// Confidence is the maximum of the evidence scores.
LinkCandidate score_component_file(const Component& component, const std::string& path);

struct LinkerConfig {
    double link_threshold = 0.6;
    double dominance_band = 0.05; // keep only candidates near the file's best
};

/// Emit (componentId, path) for every candidate at or above the threshold,
/// keeping per file only those within the dominance band of its maximum.
LinkSet link_sam_to_code(const Sam& sam, const CodeModel& code, const LinkerConfig& config = {});

} // namespace archtrace
