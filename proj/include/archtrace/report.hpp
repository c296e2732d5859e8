#pragma once

#include "archtrace/metrics.hpp"
#include "archtrace/wilcoxon.hpp"

#include <json.hpp>

#include <span>
#include <string>
#include <vector>

namespace archtrace {

/// A named significance comparison (ours vs a baseline).
struct SignificanceComparison {
    std::string name;
    WilcoxonResult result;
};

/// Machine-readable JSON plus an aligned human-readable table.
struct Report {
    nlohmann::json machine;
    std::string text;
};

/// Format a metric for display, rounded half-up to two decimals (".87", "1.0").
std::string format_metric(double value);

/// Format a p-value rounded half-up to three decimals; '*' marks inexact values.
std::string format_p_value(const WilcoxonResult& result);

/// Assemble per-project rows plus Average / w. Average rows and an optional
/// significance section. JSON keeps full precision; the table is rounded.
Report build_report(std::span<const ProjectResult> results,
                    std::span<const SignificanceComparison> comparisons = {});

} // namespace archtrace
