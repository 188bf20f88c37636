#include "walklab/mixing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace walklab {

std::vector<double> walk_step(const WalkGraph& g, const std::vector<double>& p, bool lazy) {
    std::vector<double> next(g.n, 0.0);
    for (Vertex v = 0; v < g.n; v++) {
        if (p[v] == 0.0) continue;
        const double share = p[v] / static_cast<double>(g.adj[v].size());
        for (Vertex w : g.adj[v]) next[w] += share;
    }
    if (lazy)
        for (Vertex v = 0; v < g.n; v++) next[v] = 0.5 * p[v] + 0.5 * next[v];
    return next;
}

double total_variation_from_uniform(const std::vector<double>& p) {
    const double uniform = 1.0 / static_cast<double>(p.size());
    double tv = 0;
    for (double q : p) tv += std::abs(q - uniform);
    return 0.5 * tv;
}

std::size_t mixing_time(const WalkGraph& g, std::size_t start, double eps,
                        const MixingOptions& opts) {
    if (g.n == 0 || start >= g.n)
        throw std::invalid_argument("walklab: start vertex out of range");
    if (eps <= 0.0 || eps >= 1.0)
        throw std::invalid_argument("walklab: eps must lie in (0, 1)");
    std::vector<double> p(g.n, 0.0);
    p[start] = 1.0;
    for (std::size_t t = 1; t <= opts.max_steps; t++) {
        p = walk_step(g, p, opts.lazy);
        if (total_variation_from_uniform(p) < eps) return t;
    }
    throw std::runtime_error(
        "walklab: walk did not mix within " + std::to_string(opts.max_steps) +
        " steps (bipartite or disconnected graph? try the lazy walk)");
}

double landing_bound(std::size_t n, std::size_t set_size, double degree, double sigma) {
    return std::log(2.0 * static_cast<double>(n) / std::sqrt(static_cast<double>(set_size))) /
           std::log(degree / sigma);
}

}  // namespace walklab
