#include <doctest.h>

#include <stdexcept>

#include <cstdint>
#include <random>
#include <sstream>
#include <vector>

#include "cryptlab/sequencing.hpp"

using namespace cryptlab;

namespace {

SequencingScheme uniform_scheme(std::size_t period, std::vector<std::uint32_t> offsets,
                                std::uint32_t window) {
    SequencingScheme s;
    s.period = period;
    s.window = window;
    s.taps.assign(period, offsets);
    return s;
}

// Exhaustive minimal domino count: BFS over GF(2) vectors on a small window.
std::size_t brute_min_pairs(const std::vector<std::uint32_t>& positions, std::size_t width) {
    std::uint32_t target = 0;
    for (std::uint32_t p : positions) target |= 1u << p;
    std::vector<int> dist(1u << width, -1);
    std::vector<std::uint32_t> frontier{0};
    dist[0] = 0;
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t v : frontier) {
            if (v == target) return static_cast<std::size_t>(dist[v]);
            for (std::size_t t = 0; t + 1 < width; t++) {
                std::uint32_t w = v ^ (3u << t);
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("pair decomposition equals the greedy gap total") {
    std::vector<std::uint32_t> set1 = {52, 56, 92, 93};
    CHECK(min_pair_decomposition(set1) == 5);
    std::vector<std::uint32_t> set2 = {0, 1};
    CHECK(min_pair_decomposition(set2) == 1);
    std::vector<std::uint32_t> empty;
    CHECK(min_pair_decomposition(empty) == 0);
    std::vector<std::uint32_t> odd = {1, 2, 3};
    CHECK_THROWS_AS(min_pair_decomposition(odd), std::invalid_argument);
    std::vector<std::uint32_t> dup = {1, 1};
    CHECK_THROWS_AS(min_pair_decomposition(dup), std::invalid_argument);
}

TEST_CASE("pair decomposition matches brute force on small random sets") {
    std::mt19937 rng(42);
    const std::size_t width = 12;
    for (int rep = 0; rep < 200; rep++) {
        std::vector<std::uint32_t> positions;
        for (std::uint32_t p = 0; p < width; p++)
            if (rng() & 1) positions.push_back(p);
        if (positions.size() % 2) positions.pop_back();
        if (positions.size() > 10) continue;
        CHECK(min_pair_decomposition(positions) == brute_min_pairs(positions, width));
    }
}

TEST_CASE("degenerate scheme y_i = x_i has a_min 1") {
    SequencingScheme s = uniform_scheme(4, {0}, 64);
    SearchResult r = min_pair_weight(s, 2);
    CHECK(r.a_min == 1);  // y_i ^ y_{i+1} = x_i ^ x_{i+1}
    CHECK(r.witness.b() == 2);
    CHECK(verify_witness(s, r.witness));
}

TEST_CASE("two-tap scheme y_i = x_i ^ x_{i-1} has a_min 1 with a single y") {
    SequencingScheme s = uniform_scheme(4, {0, 1}, 64);
    SearchResult r = min_pair_weight(s, 3);
    CHECK(r.a_min == 1);
    CHECK(r.witness.b() == 1);
    CHECK(verify_witness(s, r.witness));
}

TEST_CASE("search result is antitone in max_b") {
    SequencingScheme s = SequencingScheme::mv3_family();
    std::size_t prev = SIZE_MAX;
    for (std::size_t max_b : {1u, 2u, 3u, 4u}) {
        SearchResult r = min_pair_weight(s, max_b);
        CHECK(r.a_min <= prev);
        CHECK(verify_witness(s, r.witness));
        prev = r.a_min;
    }
}

TEST_CASE("family scheme: known relations are found") {
    SequencingScheme s = SequencingScheme::mv3_family();
    // Residue t=0 degenerates to a single tap 16 positions back: one output
    // word is itself a 16-pair relation.
    SearchResult r1 = min_pair_weight(s, 1);
    CHECK(r1.a_min == 16);
    // y_70 ^ y_93 cancels x_70 and leaves {52, 56, 92, 93}: five pairs.
    SearchResult r2 = min_pair_weight(s, 2);
    CHECK(r2.a_min == 5);
    CHECK(verify_witness(s, r2.witness));
}

TEST_CASE("buffer-rule scheme: the two-output relation has weight 12") {
    SequencingScheme s = SequencingScheme::mv3_buffer_rule();
    SearchResult r = min_pair_weight(s, 2);
    CHECK(r.a_min == 12);
    CHECK(verify_witness(s, r.witness));
    CHECK(r.witness.b() == 2);
}

TEST_CASE("witness verification catches corruption") {
    SequencingScheme s = SequencingScheme::mv3_family();
    SearchResult r = min_pair_weight(s, 2);
    REQUIRE(verify_witness(s, r.witness));
    RelationWitness bad = r.witness;
    bad.pair_indices.push_back(190);
    CHECK_FALSE(verify_witness(s, bad));
    bad = r.witness;
    REQUIRE(!bad.pair_indices.empty());
    bad.pair_indices[0] += 1;
    CHECK_FALSE(verify_witness(s, bad));
}

TEST_CASE("scheme validation") {
    SequencingScheme missing_zero = uniform_scheme(4, {1, 2}, 64);
    CHECK_THROWS_AS(min_pair_weight(missing_zero, 2), std::invalid_argument);

    SequencingScheme small_window = uniform_scheme(4, {0, 1}, 8);
    CHECK_THROWS_AS(min_pair_weight(small_window, 2), std::invalid_argument);
    CHECK_NOTHROW(min_pair_weight(small_window, 2, 0, /*relax_window=*/true));

    SequencingScheme s = SequencingScheme::mv3_family();
    CHECK_THROWS_AS(min_pair_weight(s, 0), std::invalid_argument);
    CHECK_THROWS_AS(min_pair_weight(s, 2, 100), std::invalid_argument);  // horizon < 4P+C
}

TEST_CASE("scheme text format round-trips") {
    std::istringstream in("0 5 18\n0 10 19\n# comment\n0 15 16\n0 4 17\n");
    SequencingScheme s = SequencingScheme::from_text(in);
    CHECK(s.period == 4);
    CHECK(s.window == 64);  // defaulted to the lower admissible bound
    CHECK(s.taps[2] == std::vector<std::uint32_t>{0, 15, 16});
    std::istringstream bad("0 x\n");
    CHECK_THROWS_AS(SequencingScheme::from_text(bad), std::invalid_argument);
}
