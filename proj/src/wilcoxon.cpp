#include "archtrace/wilcoxon.hpp"

#include "archtrace/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace archtrace {

WilcoxonResult wilcoxon_one_sided(std::span<const double> differences, WilcoxonMethod method) {
    if (differences.empty()) {
        throw PreconditionError("need at least one difference");
    }
    std::vector<double> d;
    for (double x : differences) {
        if (x != 0.0) {
            d.push_back(x);
        }
    }
    if (d.empty()) {
        throw UndefinedTestError("all differences are zero; the test is undefined");
    }
    const int n = static_cast<int>(d.size());

    std::vector<std::size_t> order(d.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(d[a]) < std::abs(d[b]);
    });

    // Average ranks for tied |d|; track tie-group sizes for the variance term.
    std::vector<double> ranks(d.size());
    std::vector<std::size_t> tie_groups;
    bool has_ties = false;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() &&
               std::abs(d[order[j + 1]]) == std::abs(d[order[i]])) {
            ++j;
        }
        const double average_rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            ranks[order[k]] = average_rank;
        }
        tie_groups.push_back(j - i + 1);
        has_ties = has_ties || j > i;
        i = j + 1;
    }

    double w_plus = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (d[k] > 0.0) {
            w_plus += ranks[k];
        }
    }

    bool use_exact = false;
    switch (method) {
    case WilcoxonMethod::Auto:
        use_exact = n <= 20 && !has_ties;
        break;
    case WilcoxonMethod::Exact:
        if (has_ties) {
            throw UndefinedTestError("exact p cannot be calculated with tied |d| values");
        }
        if (n > 25) {
            throw PreconditionError("exact enumeration limited to n <= 25");
        }
        use_exact = true;
        break;
    case WilcoxonMethod::Approx:
        use_exact = false;
        break;
    }

    WilcoxonResult result;
    result.statistic = w_plus;
    result.n = n;
    result.exact = use_exact;

    if (use_exact) {
        // Count subsets of ranks {1..n} with sum >= W+ over all 2^n sign patterns.
        const long long total = static_cast<long long>(n) * (n + 1) / 2;
        const long long w = std::llround(w_plus);
        std::vector<std::uint64_t> count(static_cast<std::size_t>(total) + 1, 0);
        count[0] = 1;
        for (int r = 1; r <= n; ++r) {
            for (long long s = total; s >= r; --s) {
                count[static_cast<std::size_t>(s)] += count[static_cast<std::size_t>(s - r)];
            }
        }
        std::uint64_t at_least = 0;
        for (long long s = w; s <= total; ++s) {
            at_least += count[static_cast<std::size_t>(s)];
        }
        result.p = static_cast<double>(at_least) / std::ldexp(1.0, n);
    } else {
        const double nn = static_cast<double>(n);
        const double mean = nn * (nn + 1.0) / 4.0;
        double tie_term = 0.0;
        for (std::size_t size : tie_groups) {
            const double t = static_cast<double>(size);
            tie_term += t * t * t - t;
        }
        const double variance = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0 - tie_term / 48.0;
        const double z = (w_plus - mean - 0.5) / std::sqrt(variance);
        result.p = 0.5 * std::erfc(z / std::sqrt(2.0));
    }
    return result;
}

} // namespace archtrace
