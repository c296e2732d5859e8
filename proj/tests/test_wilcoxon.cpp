#include "archtrace/wilcoxon.hpp"

#include "archtrace/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <vector>

using namespace archtrace;

namespace {

// Independent enumeration over all 2^n sign assignments: for each pattern,
// sum the integer ranks assigned '+' and count patterns at or above W+.
double enumeration_oracle(const std::vector<double>& differences) {
    std::vector<double> d;
    for (double x : differences) {
        if (x != 0.0) {
            d.push_back(x);
        }
    }
    const std::size_t n = d.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return std::abs(d[a]) < std::abs(d[b]); });
    std::vector<int> rank(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        rank[order[pos]] = static_cast<int>(pos) + 1;
    }
    long observed = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] > 0.0) {
            observed += rank[i];
        }
    }
    unsigned long long at_least = 0;
    const unsigned long long patterns = 1ULL << n;
    for (unsigned long long mask = 0; mask < patterns; ++mask) {
        long w = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1ULL << i)) {
                w += rank[i];
            }
        }
        if (w >= observed) {
            ++at_least;
        }
    }
    return static_cast<double>(at_least) / static_cast<double>(patterns);
}

} // namespace

TEST_SUITE("wilcoxon") {

TEST_CASE("five strictly positive tie-free differences give p = 1/32") {
    const std::vector<double> d = {0.05, 0.12, 0.31, 0.44, 0.58};
    const WilcoxonResult result = wilcoxon_one_sided(d);
    CHECK(result.exact);
    CHECK(result.p == 0.03125);
    CHECK(result.statistic == doctest::Approx(15.0));
    CHECK(result.p == enumeration_oracle(d)); // bit-for-bit
}

TEST_CASE("a single positive observation gives p = 0.5") {
    const std::vector<double> d = {1.0};
    const WilcoxonResult result = wilcoxon_one_sided(d);
    CHECK(result.exact);
    CHECK(result.p == 0.5);
}

TEST_CASE("tied absolute differences force the approximate path") {
    const std::vector<double> d = {0.2, 0.2, 0.5, -0.1, 0.4};
    const WilcoxonResult result = wilcoxon_one_sided(d);
    CHECK_FALSE(result.exact);
    CHECK(result.p > 0.0);
    CHECK(result.p < 1.0);
}

TEST_CASE("all-zero differences are rejected") {
    CHECK_THROWS_AS(wilcoxon_one_sided(std::vector<double>{0.0, 0.0}), UndefinedTestError);
    CHECK_THROWS_AS(wilcoxon_one_sided(std::vector<double>{}), PreconditionError);
}

TEST_CASE("zero differences are dropped before ranking") {
    const std::vector<double> with_zeros = {0.0, 0.3, 0.0, 0.7, 0.1};
    const std::vector<double> without = {0.3, 0.7, 0.1};
    CHECK(wilcoxon_one_sided(with_zeros).p == wilcoxon_one_sided(without).p);
    CHECK(wilcoxon_one_sided(with_zeros).n == 3);
}

TEST_CASE("all-positive tie-free samples of size n give p = 2^-n") {
    std::mt19937 rng(301);
    for (int n = 1; n <= 12; ++n) {
        std::vector<double> d;
        std::set<double> used;
        while (static_cast<int>(d.size()) < n) {
            const double value =
                std::uniform_real_distribution<double>(0.01, 1.0)(rng);
            if (used.insert(value).second) {
                d.push_back(value);
            }
        }
        const WilcoxonResult result = wilcoxon_one_sided(d);
        CHECK(result.exact);
        CHECK(result.p == doctest::Approx(std::pow(2.0, -n)));
    }
}

TEST_CASE("exact enumeration agrees with the oracle on random signs") {
    std::mt19937 rng(307);
    for (int round = 0; round < 40; ++round) {
        std::vector<double> d;
        std::set<double> magnitudes;
        std::uniform_int_distribution<int> n_dist(1, 10);
        const int n = n_dist(rng);
        while (static_cast<int>(d.size()) < n) {
            double value = std::uniform_real_distribution<double>(0.01, 2.0)(rng);
            if (magnitudes.insert(value).second) {
                if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
                    value = -value;
                }
                d.push_back(value);
            }
        }
        const WilcoxonResult result = wilcoxon_one_sided(d);
        REQUIRE(result.exact);
        CHECK(result.p == enumeration_oracle(d));
    }
}

TEST_CASE("exact and approximate p agree within 0.02 on tie-free n=15 samples") {
    std::mt19937 rng(311);
    for (int round = 0; round < 20; ++round) {
        std::vector<double> d;
        std::set<double> magnitudes;
        while (d.size() < 15) {
            double value = std::uniform_real_distribution<double>(0.01, 3.0)(rng);
            if (magnitudes.insert(value).second) {
                if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
                    value = -value;
                }
                d.push_back(value);
            }
        }
        const WilcoxonResult exact = wilcoxon_one_sided(d, WilcoxonMethod::Exact);
        const WilcoxonResult approx = wilcoxon_one_sided(d, WilcoxonMethod::Approx);
        REQUIRE(exact.exact);
        REQUIRE_FALSE(approx.exact);
        CHECK(std::abs(exact.p - approx.p) <= 0.02);
    }
}

TEST_CASE("approximate p-values match reference statistics packages") {
    // Values cross-checked against scipy.stats.wilcoxon(alternative="greater",
    // correction=True, mode="approx").
    const std::vector<double> tied = {0.2, 0.2, 0.3, -0.1, 0.5};
    CHECK(wilcoxon_one_sided(tied).p == doctest::Approx(0.05202961726446).epsilon(1e-10));

    const std::vector<double> n21 = {0.37, 0.51, -0.69, 0.55, 0.45, -0.2,  0.9,
                                     1.1,  -0.05, 0.33,  0.21, 0.47, -0.6,  0.7,
                                     0.02, 0.13,  -0.44, 0.56, 0.61, 0.77, 0.88};
    const WilcoxonResult result = wilcoxon_one_sided(n21);
    CHECK(result.statistic == doctest::Approx(187.0));
    CHECK(result.p == doctest::Approx(0.00679744272089).epsilon(1e-10));
}

TEST_CASE("samples larger than 20 switch to the approximation") {
    std::vector<double> d(25);
    std::iota(d.begin(), d.end(), 1.0);
    const WilcoxonResult result = wilcoxon_one_sided(d);
    CHECK_FALSE(result.exact);
    CHECK(result.p < 0.001); // everything improved, overwhelmingly significant
}

} // TEST_SUITE
