#pragma once

#include <cstddef>
#include <vector>

#include "walklab/graph.hpp"

namespace walklab {

struct MixingOptions {
    bool lazy = false;            // stay put with probability 1/2
    std::size_t max_steps = 100000;
};

// Smallest t such that the t-step walk distribution from `start` is within
// total-variation distance `eps` of uniform, computed by iterating the exact
// transition operator.  Throws on non-convergence within max_steps (that is
// the bipartite/disconnected signal when laziness is off).
std::size_t mixing_time(const WalkGraph& g, std::size_t start, double eps,
                        const MixingOptions& opts = {});

// One application of the (optionally lazy) transition operator.
std::vector<double> walk_step(const WalkGraph& g, const std::vector<double>& p, bool lazy);

double total_variation_from_uniform(const std::vector<double>& p);

// Walk-length bound from the spectral data: log(2 n / sqrt(|S|)) / log(k / sigma).
double landing_bound(std::size_t n, std::size_t set_size, double degree, double sigma);

}  // namespace walklab
