#include "walklab/visits.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace walklab {

double visit_tail_bound(double x, double epsilon, std::size_t steps) {
    const double n = static_cast<double>(steps);
    return (1.0 + x * epsilon / (10.0 * n)) * std::exp(-x * x * epsilon / (20.0 * n));
}

TailReport visit_count_experiment(const WalkGraph& g, const WalkExperiment& exp,
                                  std::span<const double> xs, double epsilon) {
    if (exp.trials < 1000)
        throw std::invalid_argument("walklab: visit experiment needs at least 1000 trials");
    if (exp.start >= g.n)
        throw std::invalid_argument("walklab: start vertex out of range");
    if (epsilon <= 0.0)
        throw std::invalid_argument("walklab: epsilon must be positive (no spectral gap?)");

    std::vector<bool> in_target(g.n, false);
    for (Vertex v : exp.target) {
        if (v >= g.n) throw std::invalid_argument("walklab: target vertex out of range");
        in_target[v] = true;
    }

    TailReport report;
    report.epsilon = epsilon;
    report.expected_visits = static_cast<double>(exp.steps) *
                             static_cast<double>(exp.target.size()) / static_cast<double>(g.n);
    report.visit_counts.reserve(exp.trials);

    // Trials share the read-only graph; counts merge at the end, so they could
    // fan out across threads.  Sequential keeps the draw order reproducible.
    std::mt19937_64 rng(exp.seed);
    for (std::size_t trial = 0; trial < exp.trials; trial++) {
        Vertex pos = static_cast<Vertex>(exp.start);
        std::size_t visits = 0;
        for (std::size_t s = 0; s < exp.steps; s++) {
            const auto& nbrs = g.adj[pos];
            pos = nbrs[rng() % nbrs.size()];
            visits += in_target[pos] ? 1u : 0u;
        }
        report.visit_counts.push_back(visits);
    }

    for (double x : xs) {
        std::size_t exceed = 0;
        for (std::size_t t : report.visit_counts)
            if (std::abs(static_cast<double>(t) - report.expected_visits) >= x) exceed++;
        report.points.push_back(TailPoint{
            x, static_cast<double>(exceed) / static_cast<double>(exp.trials),
            visit_tail_bound(x, epsilon, exp.steps)});
    }
    return report;
}

}  // namespace walklab
