#include <doctest.h>

#include <stdexcept>

#include <numeric>

#include "walklab/graph.hpp"
#include "walklab/spectrum.hpp"
#include "walklab/visits.hpp"

using namespace walklab;

TEST_CASE("bound at x=0 is exactly 1") {
    CHECK(visit_tail_bound(0.0, 0.25, 2000) == doctest::Approx(1.0));
}

TEST_CASE("target covering all vertices gives zero deviation") {
    WalkGraph g = build_nonlinear_graph(64, 3);
    WalkExperiment exp;
    exp.start = 0;
    exp.steps = 500;
    exp.trials = 1000;
    exp.target.resize(64);
    std::iota(exp.target.begin(), exp.target.end(), 0);
    double xs[] = {1.0, 10.0};
    TailReport r = visit_count_experiment(g, exp, xs, 0.1);
    for (std::size_t t : r.visit_counts) CHECK(t == exp.steps);
    for (const TailPoint& p : r.points) CHECK(p.empirical == 0.0);
    CHECK(r.expected_visits == doctest::Approx(500.0));
}

TEST_CASE("visit experiment validates inputs") {
    WalkGraph g = build_nonlinear_graph(16, 3);
    WalkExperiment exp;
    exp.steps = 10;
    exp.trials = 10;  // too few
    exp.target = {0, 1};
    double xs[] = {1.0};
    CHECK_THROWS_AS(visit_count_experiment(g, exp, xs, 0.1), std::invalid_argument);
    exp.trials = 1000;
    CHECK_THROWS_AS(visit_count_experiment(g, exp, xs, 0.0), std::invalid_argument);
    exp.start = 99;
    CHECK_THROWS_AS(visit_count_experiment(g, exp, xs, 0.1), std::invalid_argument);
}

TEST_CASE("empirical tails stay under the bound on a small graph") {
    const std::size_t n = 64;
    WalkGraph g = build_nonlinear_graph(n, 3);
    Spectrum s = spectrum(g);
    double lambda2 = s.second_signed();
    double epsilon = (4.0 - lambda2) / 4.0;
    REQUIRE(epsilon > 0.0);

    WalkExperiment exp;
    exp.start = 3;
    exp.steps = 1000;
    exp.trials = 2000;
    exp.seed = 77;
    exp.target.resize(16);  // |S| = n/4
    std::iota(exp.target.begin(), exp.target.end(), 0);

    double xs[] = {20.0, 40.0, 80.0};
    TailReport r = visit_count_experiment(g, exp, xs, epsilon);
    for (const TailPoint& p : r.points) {
        MESSAGE("x=", p.x, " empirical=", p.empirical, " bound=", p.bound);
        CHECK(p.empirical <= p.bound);
    }
}
