#pragma once

#include "archtrace/types.hpp"

#include <span>
#include <string>

namespace archtrace {

struct ConfusionCounts {
    long tp = 0;
    long fp = 0;
    long fn = 0;

    friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

struct Metrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;

    friend bool operator==(const Metrics&, const Metrics&) = default;
};

struct ProjectResult {
    std::string project;
    Metrics metrics;
    long gold_link_count = 1; // averaging weight
};

/// TP = |found ∩ gold|, FP = |found \ gold|, FN = |gold \ found|.
ConfusionCounts confusion_counts(const LinkSet& found, const GoldStandard& gold);

/// Precision/recall with the empty-set conventions: an empty denominator is 1
/// when there was nothing to miss and 0 otherwise; F1 is the harmonic mean.
Metrics precision_recall_f1(const ConfusionCounts& counts);

/// Unweighted arithmetic mean per metric.
Metrics macro_average(std::span<const ProjectResult> results);

/// Mean per metric weighted by each project's gold-link count.
Metrics weighted_average(std::span<const ProjectResult> results);

} // namespace archtrace
