#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "cryptlab/complexity.hpp"

using namespace cryptlab;

TEST_CASE("distinguisher bound closed forms") {
    CHECK(distinguisher_bound(0.0, {{1, 5.0}, {12, 1e6}}) == 0.0);
    CHECK(distinguisher_bound(0.5, {{1, 1.0}}) == doctest::Approx(0.5));
    // A = {a=12: 10^6}, eps = 2^-4: sqrt(10^6 * 2^-96) = 10^3 * 2^-48.
    double b = distinguisher_bound(std::exp2(-4.0), {{12, 1e6}});
    CHECK(std::log2(b) == doctest::Approx(-38.034).epsilon(1e-3));
}

TEST_CASE("distinguisher bound is monotone in eps and in counts") {
    std::map<unsigned, double> counts{{2, 10.0}, {5, 100.0}};
    double prev = 0;
    for (double eps : {0.01, 0.05, 0.1, 0.3, 0.5}) {
        double v = distinguisher_bound(eps, counts);
        CHECK(v >= prev);
        prev = v;
    }
    CHECK(distinguisher_bound(0.1, {{2, 20.0}, {5, 100.0}}) >=
          distinguisher_bound(0.1, counts));
    CHECK_THROWS_AS(distinguisher_bound(0.6, counts), std::invalid_argument);
    CHECK_THROWS_AS(distinguisher_bound(0.1, {{2, -1.0}}), std::invalid_argument);
}

TEST_CASE("related-key complexity at the reported points") {
    // t=1 corresponds to 8192-bit keys: about 2^15 pairs of related IVs.
    RelatedKeyComplexity huge_key = related_key_complexity(1, 8);
    CHECK(huge_key.log2_m == doctest::Approx(15.0).epsilon(0.07));  // 15 +- 1

    // t=32 corresponds to 256-bit keys: data/time complexity at least 2^618.
    RelatedKeyComplexity small_key = related_key_complexity(32, 8);
    CHECK(small_key.log2_total >= 618.0);

    // The attack gets cheaper as keys get longer (t shrinks).
    CHECK(huge_key.log2_m < small_key.log2_m);
    CHECK(huge_key.m < small_key.m);
}

TEST_CASE("fewer loops make the related-key attack cheaper") {
    for (unsigned t : {1u, 8u, 32u}) {
        double m8 = related_key_complexity(t, 8).log2_m;
        double m4 = related_key_complexity(t, 4).log2_m;
        double m2 = related_key_complexity(t, 2).log2_m;
        CHECK(m2 < m4);
        CHECK(m4 < m8);
    }
}

TEST_CASE("insertion variant collapses the complexity") {
    // ((1 - t/256)^-256)^4 at t=32: 1024 * log2(256/224)... = -1024 log2(0.875).
    RelatedKeyComplexity ins = related_key_complexity(32, 8, true);
    CHECK(ins.log2_m == doctest::Approx(-1024.0 * std::log2(0.875)).epsilon(1e-9));
    CHECK(ins.log2_m < related_key_complexity(32, 8).log2_m);
}

TEST_CASE("related-key domain edges") {
    CHECK_THROWS_AS(related_key_complexity(64, 8), std::invalid_argument);
    CHECK_THROWS_AS(related_key_complexity(0, 8), std::invalid_argument);
    CHECK_THROWS_AS(related_key_complexity(8, 3), std::invalid_argument);
    CHECK_NOTHROW(related_key_complexity(63, 2));
}

TEST_CASE("state size and TMDTO margin") {
    TmdtoReport r = tmdto_margin(256);
    CHECK(r.state_bits == 11344);
    CHECK(r.state_bits > 11000);
    CHECK(r.margin_ok);

    CHECK(tmdto_margin(5500).margin_ok);
    CHECK(tmdto_margin(5672).margin_ok);   // 2 * 5672 = 11344 exactly
    CHECK_FALSE(tmdto_margin(5673).margin_ok);
    CHECK_FALSE(tmdto_margin(8192).margin_ok);
    CHECK_THROWS_AS(tmdto_margin(0), std::invalid_argument);
    CHECK_THROWS_AS(tmdto_margin(8193), std::invalid_argument);
}

TEST_CASE("guess-and-determine tally") {
    GuessDetermineCost c = guess_and_determine_cost();
    CHECK(c.words_guessed == 66);
    CHECK(c.bits_guessed == 2112);
    CHECK(c.bits_guessed > 2000);
    CHECK(c.collisions_needed == 70);
    CHECK(c.keystream_bits == 16384);
    CHECK(c.log2_time > 2000.0);
}
