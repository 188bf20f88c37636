#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "walklab/graph.hpp"

using namespace walklab;

TEST_CASE("nonlinear graph neighbors by direct evaluation") {
    // n=5, r=2 (rbar=3): vertex 0 -> {2(0+1), 2(0-1), 3*0+1, 3*0-1} = {2,3,1,4}
    WalkGraph g = build_nonlinear_graph(5, 2);
    CHECK(g.degree == 4);
    std::multiset<Vertex> nbrs(g.adj[0].begin(), g.adj[0].end());
    CHECK(nbrs == std::multiset<Vertex>{1, 2, 3, 4});
}

TEST_CASE("nonlinear graph rejects non-invertible multipliers") {
    CHECK_THROWS_AS(build_nonlinear_graph(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_nonlinear_graph(8, 6), std::invalid_argument);
    CHECK_THROWS_AS(build_nonlinear_graph(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_nonlinear_graph(7, 1), std::invalid_argument);
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(2, 5) == 3);
    CHECK(mod_inverse(3, 8) == 3);
    CHECK(mod_inverse(3, 1024) == 683);  // 3 * 683 = 2049
    CHECK_THROWS_AS(mod_inverse(4, 8), std::invalid_argument);
}

TEST_CASE("nonlinear graph is symmetric and regular") {
    for (auto [n, r] : {std::pair<std::size_t, std::uint64_t>{64, 3},
                        {100, 7},
                        {257, 5},
                        {31, 2}}) {
        WalkGraph g = build_nonlinear_graph(n, r);
        CHECK(g.is_out_regular());
        CHECK(g.is_symmetric());
        CHECK(g.is_connected());
    }
}

TEST_CASE("edge multiplicity matches its reverse") {
    WalkGraph g = build_nonlinear_graph(48, 5);
    for (Vertex v = 0; v < g.n; v++)
        for (Vertex w : g.adj[v]) CHECK(g.multiplicity(v, w) == g.multiplicity(w, v));
}

TEST_CASE("Cayley graph of Z/4 with S={1} is the 4-cycle") {
    std::uint64_t gens[] = {1};
    WalkGraph g = build_cayley_graph(4, gens);
    CHECK(g.degree == 2);
    std::multiset<Vertex> nbrs(g.adj[0].begin(), g.adj[0].end());
    CHECK(nbrs == std::multiset<Vertex>{1, 3});
    CHECK(g.is_symmetric());
}

TEST_CASE("Cayley graph keeps multi-edges and self-loops") {
    // S = {0}: two self-loops per vertex.
    std::uint64_t zero[] = {0};
    WalkGraph g = build_cayley_graph(3, zero);
    CHECK(g.adj[0] == std::vector<Vertex>{0, 0});
    // S = {1, 1}: doubled cycle edges.
    std::uint64_t doubled[] = {1, 1};
    WalkGraph d = build_cayley_graph(5, doubled);
    CHECK(d.multiplicity(0, 1) == 2);
    CHECK(d.degree == 4);
}

TEST_CASE("Cayley graph requires generators") {
    CHECK_THROWS_AS(build_cayley_graph(8, {}), std::invalid_argument);
}

TEST_CASE("square walk graph is directed 2-out-regular") {
    WalkGraph g = build_square_walk_graph(64);
    CHECK(g.directed);
    CHECK(g.is_out_regular());
    // x=0: up = (1|1)^2 = 1, down = (63|1)^2 = 63^2 mod 64 = 3969 mod 64
    CHECK(g.adj[0] == std::vector<Vertex>{1, 3969 % 64});
}

TEST_CASE("additive reversalization is symmetric") {
    WalkGraph g = symmetrize_additive(build_square_walk_graph(128));
    CHECK_FALSE(g.directed);
    CHECK(g.is_symmetric());
    // Every directed edge contributes twice: edge-endpoint total is 2 * 2n.
    std::size_t total = 0;
    for (const auto& nbrs : g.adj) total += nbrs.size();
    CHECK(total == 4 * g.n);
}

TEST_CASE("multiplicative reversalization is symmetric with out-degree diagonal") {
    WalkGraph m = build_square_walk_graph(64);
    WalkGraph g = symmetrize_multiplicative(m);
    CHECK(g.is_symmetric());
    // (M M^t)(u,u) = sum over targets of M(u,t)^2 = 2 for distinct targets.
    for (Vertex v = 0; v < g.n; v++) {
        std::size_t loops = g.multiplicity(v, v);
        bool distinct = m.adj[v][0] != m.adj[v][1];
        CHECK(loops == (distinct ? 2u : 4u));
    }
}

TEST_CASE("make_graph validates neighbor range") {
    CHECK_THROWS_AS(make_graph({{1}, {2}}, true), std::invalid_argument);
    WalkGraph g = make_graph({{1}, {0}}, false);
    CHECK(g.n == 2);
    CHECK(g.degree == 1);
}
