#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "walklab/graph.hpp"

namespace walklab {

// Monte-Carlo visit-count experiment: how often an n-step walk lands in a
// target set, compared against the Chernoff-type tail bound
// (1 + x ε / (10 n)) exp(-x^2 ε / (20 n)) with λ₂ = k - ε k.
struct WalkExperiment {
    std::size_t start = 0;
    std::size_t steps = 0;
    std::vector<Vertex> target;  // set S, distinct vertices
    std::size_t trials = 0;
    std::uint64_t seed = 1;
};

struct TailPoint {
    double x;
    double empirical;  // fraction of trials with |t_n - steps |S| / n| >= x
    double bound;
};

struct TailReport {
    double epsilon;
    double expected_visits;
    std::vector<std::size_t> visit_counts;  // t_n per trial
    std::vector<TailPoint> points;
};

double visit_tail_bound(double x, double epsilon, std::size_t steps);

// Runs the trials and evaluates the tail at each x.  Requires epsilon > 0
// (from the measured spectrum) and trials >= 1000.
TailReport visit_count_experiment(const WalkGraph& g, const WalkExperiment& exp,
                                  std::span<const double> xs, double epsilon);

}  // namespace walklab
