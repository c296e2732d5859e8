#include "archtrace/compose.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace archtrace;

namespace {

// Brute-force join over all (sentence, component, file) triples.
LinkSet join_oracle(const LinkSet& sad_sam, const LinkSet& sam_code) {
    LinkSet result(LinkKind::SadCode);
    for (const auto& [sentence, component] : sad_sam.pairs()) {
        for (const auto& [component2, file] : sam_code.pairs()) {
            if (component == component2) {
                result.add(sentence, file);
            }
        }
    }
    return result;
}

LinkSet random_links(std::mt19937& rng, LinkKind kind, int max_left, int max_right,
                     const std::string& left_prefix, const std::string& right_prefix,
                     int max_links) {
    LinkSet links(kind);
    std::uniform_int_distribution<int> count_dist(0, max_links);
    std::uniform_int_distribution<int> left_dist(1, max_left);
    std::uniform_int_distribution<int> right_dist(1, max_right);
    const int n = count_dist(rng);
    for (int i = 0; i < n; ++i) {
        links.add(left_prefix + std::to_string(left_dist(rng)),
                  right_prefix + std::to_string(right_dist(rng)));
    }
    return links;
}

} // namespace

TEST_SUITE("transitive composition") {

TEST_CASE("composition follows the definition") {
    LinkSet sad_sam(LinkKind::SadSam);
    sad_sam.add("1", "c1");
    LinkSet sam_code(LinkKind::SamCode);
    sam_code.add("c1", "a.java");
    sam_code.add("c1", "b.java");
    const LinkSet result = compose_links(sad_sam, sam_code);
    CHECK(result.contains("1", "a.java"));
    CHECK(result.contains("1", "b.java"));
    CHECK(result.size() == 2);
    CHECK(result.kind() == LinkKind::SadCode);
}

TEST_CASE("empty inputs give empty outputs") {
    CHECK(compose_links(LinkSet(LinkKind::SadSam), LinkSet(LinkKind::SamCode)).empty());
}

TEST_CASE("kind mismatches are rejected") {
    CHECK_THROWS_AS(compose_links(LinkSet(LinkKind::SamCode), LinkSet(LinkKind::SamCode)),
                    KindMismatchError);
    CHECK_THROWS_AS(compose_links(LinkSet(LinkKind::SadSam), LinkSet(LinkKind::SadCode)),
                    KindMismatchError);
}

TEST_CASE("composition equals the nested-loop oracle on random instances") {
    std::mt19937 rng(101);
    for (int round = 0; round < 100; ++round) {
        const LinkSet sad_sam = random_links(rng, LinkKind::SadSam, 10, 6, "", "c", 20);
        const LinkSet sam_code = random_links(rng, LinkKind::SamCode, 6, 30, "c", "f", 30);
        CHECK(compose_links(sad_sam, sam_code) == join_oracle(sad_sam, sam_code));
    }
}

TEST_CASE("composition is monotone under input growth") {
    std::mt19937 rng(103);
    for (int round = 0; round < 30; ++round) {
        LinkSet sad_sam = random_links(rng, LinkKind::SadSam, 8, 5, "", "c", 10);
        LinkSet sam_code = random_links(rng, LinkKind::SamCode, 5, 12, "c", "f", 15);
        const LinkSet before = compose_links(sad_sam, sam_code);
        sad_sam.add("9", "c1");
        sam_code.add("c1", "f99");
        const LinkSet after = compose_links(sad_sam, sam_code);
        for (const auto& [left, right] : before.pairs()) {
            CHECK(after.contains(left, right));
        }
    }
}

TEST_CASE("an identity-like right operand relabels the left operand") {
    std::mt19937 rng(107);
    const LinkSet sad_sam = random_links(rng, LinkKind::SadSam, 10, 6, "", "c", 15);
    LinkSet identity(LinkKind::SamCode);
    for (int c = 1; c <= 6; ++c) {
        identity.add("c" + std::to_string(c), "file-of-c" + std::to_string(c));
    }
    const LinkSet result = compose_links(sad_sam, identity);
    CHECK(result.size() == sad_sam.size());
    for (const auto& [sentence, component] : sad_sam.pairs()) {
        CHECK(result.contains(sentence, "file-of-" + component));
    }
}

TEST_CASE("output size is bounded by fan-out") {
    std::mt19937 rng(109);
    for (int round = 0; round < 20; ++round) {
        const LinkSet sad_sam = random_links(rng, LinkKind::SadSam, 10, 6, "", "c", 20);
        const LinkSet sam_code = random_links(rng, LinkKind::SamCode, 6, 30, "c", "f", 30);
        std::map<std::string, std::size_t> fan_out;
        for (const auto& [component, file] : sam_code.pairs()) {
            ++fan_out[component];
        }
        std::size_t max_fan_out = 0;
        for (const auto& [component, count] : fan_out) {
            max_fan_out = std::max(max_fan_out, count);
        }
        CHECK(compose_links(sad_sam, sam_code).size() <= sad_sam.size() * max_fan_out);
    }
}

} // TEST_SUITE
