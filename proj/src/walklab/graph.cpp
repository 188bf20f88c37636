#include "walklab/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace walklab {

bool WalkGraph::is_out_regular() const {
    for (const auto& nbrs : adj)
        if (nbrs.size() != degree) return false;
    return true;
}

std::size_t WalkGraph::multiplicity(Vertex from, Vertex to) const {
    return static_cast<std::size_t>(
        std::count(adj[from].begin(), adj[from].end(), to));
}

bool WalkGraph::is_symmetric() const {
    std::map<std::pair<Vertex, Vertex>, long> balance;
    for (Vertex v = 0; v < n; v++)
        for (Vertex w : adj[v]) {
            if (v <= w)
                balance[{v, w}]++;
            else
                balance[{w, v}]--;
        }
    for (const auto& [edge, count] : balance) {
        if (edge.first == edge.second) continue;  // self-loops are their own reverse
        if (count != 0) return false;
    }
    return true;
}

bool WalkGraph::is_connected() const {
    if (n == 0) return true;
    // Treat edges as undirected for reachability.
    std::vector<std::vector<Vertex>> undirected(n);
    for (Vertex v = 0; v < n; v++)
        for (Vertex w : adj[v]) {
            undirected[v].push_back(w);
            undirected[w].push_back(v);
        }
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : undirected[v])
            if (!seen[w]) {
                seen[w] = true;
                reached++;
                stack.push_back(w);
            }
    }
    return reached == n;
}

std::uint64_t mod_inverse(std::uint64_t r, std::uint64_t n) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t rem = static_cast<std::int64_t>(n), new_rem = static_cast<std::int64_t>(r % n);
    while (new_rem != 0) {
        std::int64_t q = rem / new_rem;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = rem - q * new_rem;
        rem = new_rem;
        new_rem = tmp;
    }
    if (rem != 1)
        throw std::invalid_argument("walklab: gcd(r, n) = " + std::to_string(rem) +
                                    ", multiplier must be invertible mod n");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(n) : t);
}

WalkGraph build_nonlinear_graph(std::size_t n, std::uint64_t r) {
    if (n < 2 || r < 2)
        throw std::invalid_argument("walklab: nonlinear graph needs n > 1 and r > 1");
    const std::uint64_t rbar = mod_inverse(r, n);  // throws when gcd(r, n) != 1
    WalkGraph g;
    g.n = n;
    g.degree = 4;
    g.directed = false;
    g.adj.resize(n);
    const std::uint64_t m = n;
    for (std::uint64_t x = 0; x < m; x++) {
        g.adj[x] = {
            static_cast<Vertex>(r * ((x + 1) % m) % m),
            static_cast<Vertex>(r * ((x + m - 1) % m) % m),
            static_cast<Vertex>((rbar * x + 1) % m),
            static_cast<Vertex>((rbar * x + m - 1) % m),
        };
    }
    return g;
}

WalkGraph build_cayley_graph(std::size_t n, std::span<const std::uint64_t> generators) {
    if (n < 1) throw std::invalid_argument("walklab: Cayley graph needs n >= 1");
    if (generators.empty())
        throw std::invalid_argument("walklab: Cayley graph needs at least one generator");
    WalkGraph g;
    g.n = n;
    g.degree = 2 * generators.size();
    g.directed = false;
    g.adj.resize(n);
    for (std::uint64_t x = 0; x < n; x++) {
        g.adj[x].reserve(g.degree);
        for (std::uint64_t s : generators) {
            const std::uint64_t sm = s % n;
            g.adj[x].push_back(static_cast<Vertex>((x + sm) % n));
            g.adj[x].push_back(static_cast<Vertex>((x + n - sm) % n));
        }
    }
    return g;
}

WalkGraph build_square_walk_graph(std::size_t n) {
    if (n < 2) throw std::invalid_argument("walklab: square walk graph needs n > 1");
    WalkGraph g;
    g.n = n;
    g.degree = 2;
    g.directed = true;
    g.adj.resize(n);
    for (std::uint64_t x = 0; x < n; x++) {
        std::uint64_t up = ((x + 1) % n) | 1u;
        std::uint64_t down = ((x + n - 1) % n) | 1u;
        g.adj[x] = {static_cast<Vertex>(up * up % n), static_cast<Vertex>(down * down % n)};
    }
    return g;
}

WalkGraph symmetrize_additive(const WalkGraph& g) {
    WalkGraph out;
    out.n = g.n;
    out.directed = false;
    out.adj.resize(g.n);
    for (Vertex v = 0; v < g.n; v++)
        for (Vertex w : g.adj[v]) {
            out.adj[v].push_back(w);
            out.adj[w].push_back(v);
        }
    out.degree = 0;
    for (const auto& nbrs : out.adj) out.degree = std::max(out.degree, nbrs.size());
    return out;
}

WalkGraph symmetrize_multiplicative(const WalkGraph& g) {
    WalkGraph out;
    out.n = g.n;
    out.directed = false;
    out.adj.resize(g.n);
    // (M M^t)(u, v) = number of common out-neighbors; group by target first.
    std::vector<std::vector<Vertex>> sources(g.n);
    for (Vertex v = 0; v < g.n; v++)
        for (Vertex w : g.adj[v]) sources[w].push_back(v);
    for (const auto& into : sources)
        for (Vertex u : into)
            for (Vertex v : into) out.adj[u].push_back(v);
    out.degree = 0;
    for (const auto& nbrs : out.adj) out.degree = std::max(out.degree, nbrs.size());
    return out;
}

WalkGraph make_graph(std::vector<std::vector<Vertex>> adj, bool directed) {
    WalkGraph g;
    g.n = adj.size();
    g.adj = std::move(adj);
    g.directed = directed;
    for (const auto& nbrs : g.adj) g.degree = std::max(g.degree, nbrs.size());
    for (const auto& nbrs : g.adj)
        for (Vertex w : nbrs)
            if (w >= g.n) throw std::invalid_argument("walklab: neighbor index out of range");
    return g;
}

}  // namespace walklab
