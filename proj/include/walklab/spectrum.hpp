#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "walklab/graph.hpp"

namespace walklab {

// All eigenvalues of the symmetric adjacency operator, sorted descending by
// absolute value.  `trivial` records the degree k, which is the top
// eigenvalue for connected regular graphs.
struct Spectrum {
    std::vector<double> eigenvalues;
    double trivial = 0;

    double second_by_magnitude() const;  // largest |λ| after removing one trivial k
    double second_signed() const;        // largest signed λ after removing one trivial k
};

struct SpectrumOptions {
    std::size_t dense_cap = 4096;  // exact dense solve up to this many vertices
};

// Exact dense eigensolve of the adjacency matrix.  Rejects graphs above the
// cap and directed graphs (symmetrize first).
Spectrum spectrum(const WalkGraph& g, const SpectrumOptions& opts = {});

// Power-iteration estimate of the largest nontrivial |λ| for regular graphs
// beyond the dense cap.
double estimate_lambda2(const WalkGraph& g, std::size_t iterations = 2000);

// Explicit eigenvalues of the nonlinear graph: {4 cos(2 pi k / n) : r k = k
// (mod n)}, one entry per satisfying k.
std::vector<double> explicit_eigenvalues(std::size_t n, std::uint64_t r);

// True iff every nontrivial, non-explicit eigenvalue satisfies
// |λ| <= 4 - c / (ln n)^2.  One spectrum entry per explicit value (matched
// within `tol`) is exempted along with the trivial eigenvalue.
bool check_gap_bound(const Spectrum& spec, std::size_t n, double c,
                     std::span<const double> explicit_eigs, double tol = 1e-9);

// Largest admissible constant: min over non-explicit eigenvalues of
// (4 - |λ|) (ln n)^2.
double fit_gap_constant(const Spectrum& spec, std::size_t n,
                        std::span<const double> explicit_eigs, double tol = 1e-9);

// True iff every explicit eigenvalue appears in the spectrum (multiset
// containment within tol).
bool contains_explicit(const Spectrum& spec, std::span<const double> explicit_eigs,
                       double tol = 1e-9);

}  // namespace walklab
