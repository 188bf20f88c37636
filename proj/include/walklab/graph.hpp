#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

// Desk-scale graph constructions for random-walk experiments: the nonlinear
// 4-valent multiplier graph, abelian Cayley graphs, and the squaring-walk
// model of the cipher's multiplier update, plus the two reversalizations used
// to study directed walks.

namespace walklab {

using Vertex = std::uint32_t;

struct WalkGraph {
    std::size_t n = 0;
    std::size_t degree = 0;  // uniform out-degree when regular, else max out-degree
    bool directed = false;
    std::vector<std::vector<Vertex>> adj;  // adj[v] = out-neighbors, multi-edges kept

    std::size_t out_degree(std::size_t v) const { return adj[v].size(); }
    bool is_out_regular() const;
    // Edge multiplicity as a directed count; symmetric for undirected graphs.
    std::size_t multiplicity(Vertex from, Vertex to) const;
    bool is_symmetric() const;
    bool is_connected() const;
};

// 4-valent multigraph on Z/nZ: x adjacent to r(x+1), r(x-1), r'x+1, r'x-1
// where r r' = 1 (mod n).  The two map pairs are mutually reverse, so the
// adjacency matrix is symmetric by construction.  Requires gcd(r, n) = 1,
// n > 1, r > 1.
WalkGraph build_nonlinear_graph(std::size_t n, std::uint64_t r);

// Cayley graph of Z/nZ with the given generator set taken undirected:
// x adjacent to x + s and x - s for every s, degree 2|S|, multi-edges kept.
WalkGraph build_cayley_graph(std::size_t n, std::span<const std::uint64_t> generators);

// Directed 2-out-regular model of the multiplier update (add one, force odd,
// square): x -> ((x+1) | 1)^2 and x -> ((x-1) | 1)^2 on Z/nZ.  Offered for
// empirical gap measurement only.
WalkGraph build_square_walk_graph(std::size_t n);

// Additive reversalization M + M^t of a directed graph.
WalkGraph symmetrize_additive(const WalkGraph& g);
// Multiplicative reversalization M M^t (entry (u,v) = common out-neighbors).
WalkGraph symmetrize_multiplicative(const WalkGraph& g);

// Direct construction from adjacency lists (used by tests and loaders).
WalkGraph make_graph(std::vector<std::vector<Vertex>> adj, bool directed);

std::uint64_t mod_inverse(std::uint64_t r, std::uint64_t n);  // throws if gcd != 1

}  // namespace walklab
