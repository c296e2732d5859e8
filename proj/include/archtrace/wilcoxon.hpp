#pragma once

#include <span>

namespace archtrace {

/// One-sided Wilcoxon signed-rank test (alternative: differences > 0).
///
/// Zero differences are dropped; |d| ranks use average ranks for ties.
/// The p-value is computed exactly by enumerating all sign assignments when
/// n <= 20 and no |d| ties exist, otherwise by normal approximation with tie
/// and continuity corrections.
struct WilcoxonResult {
    double p = 1.0;
    bool exact = false;
    double statistic = 0.0; // W+ = sum of ranks of positive differences
    int n = 0;              // sample size after dropping zeros
};

enum class WilcoxonMethod { Auto, Exact, Approx };

WilcoxonResult wilcoxon_one_sided(std::span<const double> differences,
                                  WilcoxonMethod method = WilcoxonMethod::Auto);

} // namespace archtrace
