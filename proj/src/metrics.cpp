#include "archtrace/metrics.hpp"

#include "archtrace/errors.hpp"

namespace archtrace {

ConfusionCounts confusion_counts(const LinkSet& found, const GoldStandard& gold) {
    if (found.kind() != gold.kind) {
        throw KindMismatchError("found and gold link sets have different kinds");
    }
    ConfusionCounts counts;
    for (const auto& [left, right] : found.pairs()) {
        if (gold.links.contains(left, right)) {
            ++counts.tp;
        } else {
            ++counts.fp;
        }
    }
    counts.fn = static_cast<long>(gold.links.size()) - counts.tp;
    return counts;
}

Metrics precision_recall_f1(const ConfusionCounts& counts) {
    Metrics m;
    if (counts.tp + counts.fp > 0) {
        m.precision = static_cast<double>(counts.tp) / static_cast<double>(counts.tp + counts.fp);
    } else {
        m.precision = counts.fn == 0 ? 1.0 : 0.0;
    }
    if (counts.tp + counts.fn > 0) {
        m.recall = static_cast<double>(counts.tp) / static_cast<double>(counts.tp + counts.fn);
    } else {
        m.recall = counts.fp == 0 ? 1.0 : 0.0;
    }
    m.f1 = m.precision + m.recall > 0.0
               ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
               : 0.0;
    return m;
}

Metrics macro_average(std::span<const ProjectResult> results) {
    if (results.empty()) {
        throw PreconditionError("cannot average zero project results");
    }
    Metrics sum;
    for (const auto& result : results) {
        sum.precision += result.metrics.precision;
        sum.recall += result.metrics.recall;
        sum.f1 += result.metrics.f1;
    }
    const double n = static_cast<double>(results.size());
    return Metrics{sum.precision / n, sum.recall / n, sum.f1 / n};
}

Metrics weighted_average(std::span<const ProjectResult> results) {
    if (results.empty()) {
        throw PreconditionError("cannot average zero project results");
    }
    Metrics sum;
    double total_weight = 0.0;
    for (const auto& result : results) {
        if (result.gold_link_count < 1) {
            throw PreconditionError("gold link count must be >= 1 for project " + result.project);
        }
        const double w = static_cast<double>(result.gold_link_count);
        sum.precision += w * result.metrics.precision;
        sum.recall += w * result.metrics.recall;
        sum.f1 += w * result.metrics.f1;
        total_weight += w;
    }
    if (total_weight <= 0.0) {
        throw PreconditionError("total gold-link weight must be positive");
    }
    return Metrics{sum.precision / total_weight, sum.recall / total_weight,
                   sum.f1 / total_weight};
}

} // namespace archtrace
