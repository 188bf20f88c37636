#include "walklab/spectrum.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace walklab {

double Spectrum::second_by_magnitude() const {
    bool skipped = false;
    double best = 0;
    for (double lam : eigenvalues) {
        if (!skipped && std::abs(lam - trivial) < 1e-9) {
            skipped = true;
            continue;
        }
        best = std::max(best, std::abs(lam));
    }
    return best;
}

double Spectrum::second_signed() const {
    bool skipped = false;
    double best = -std::numeric_limits<double>::infinity();
    for (double lam : eigenvalues) {
        if (!skipped && std::abs(lam - trivial) < 1e-9) {
            skipped = true;
            continue;
        }
        best = std::max(best, lam);
    }
    return best;
}

Spectrum spectrum(const WalkGraph& g, const SpectrumOptions& opts) {
    if (g.n > opts.dense_cap)
        throw std::invalid_argument("walklab: graph order " + std::to_string(g.n) +
                                    " exceeds the dense eigensolve cap of " +
                                    std::to_string(opts.dense_cap));
    if (g.directed)
        throw std::invalid_argument(
            "walklab: spectrum needs an undirected graph; symmetrize first");
    const std::size_t n = g.n;
    if (n == 0) return Spectrum{{}, 0};

    // The adjacency matrix is symmetric, so row- and column-major coincide.
    std::vector<double> a(n * n, 0.0);
    for (Vertex v = 0; v < n; v++)
        for (Vertex w : g.adj[v]) a[static_cast<std::size_t>(v) * n + w] += 1.0;
    for (std::size_t i = 0; i < n; i++)
        for (std::size_t k = i + 1; k < n; k++)
            if (a[i * n + k] != a[k * n + i])
                throw std::invalid_argument(
                    "walklab: adjacency lists are not symmetric; symmetrize first");

    std::vector<double> w(n);
    lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'U', static_cast<lapack_int>(n),
                                     a.data(), static_cast<lapack_int>(n), w.data());
    if (info != 0)
        throw std::runtime_error("walklab: eigensolver failed with info " + std::to_string(info));

    std::sort(w.begin(), w.end(), [](double lhs, double rhs) {
        if (std::abs(lhs) != std::abs(rhs)) return std::abs(lhs) > std::abs(rhs);
        return lhs > rhs;
    });
    return Spectrum{std::move(w), static_cast<double>(g.degree)};
}

double estimate_lambda2(const WalkGraph& g, std::size_t iterations) {
    const std::size_t n = g.n;
    if (n < 2) return 0;
    std::mt19937_64 rng(0x5eed);
    std::vector<double> v(n), next(n);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (auto& x : v) x = unit(rng);

    auto deflate = [&](std::vector<double>& vec) {
        double mean = 0;
        for (double x : vec) mean += x;
        mean /= static_cast<double>(n);
        for (double& x : vec) x -= mean;
    };
    auto norm = [&](const std::vector<double>& vec) {
        double s = 0;
        for (double x : vec) s += x * x;
        return std::sqrt(s);
    };

    deflate(v);
    double nv = norm(v);
    for (double& x : v) x /= nv;
    double estimate = 0;
    for (std::size_t it = 0; it < iterations; it++) {
        std::fill(next.begin(), next.end(), 0.0);
        for (Vertex s = 0; s < n; s++)
            for (Vertex t : g.adj[s]) next[t] += v[s];
        deflate(next);
        double nn = norm(next);
        if (nn == 0) return 0;
        estimate = nn;  // ||A v|| with ||v|| = 1
        for (std::size_t i = 0; i < n; i++) v[i] = next[i] / nn;
    }
    return estimate;
}

std::vector<double> explicit_eigenvalues(std::size_t n, std::uint64_t r) {
    std::vector<double> out;
    const std::uint64_t rm = r % n;
    for (std::uint64_t k = 0; k < n; k++)
        if (rm * k % n == k)
            out.push_back(4.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) /
                                         static_cast<double>(n)));
    return out;
}

namespace {

// Marks one spectrum entry per explicit value; returns false if any explicit
// value has no unused match within tol.
bool match_explicit(const Spectrum& spec, std::span<const double> explicit_eigs, double tol,
                    std::vector<bool>& used) {
    used.assign(spec.eigenvalues.size(), false);
    for (double e : explicit_eigs) {
        bool found = false;
        double best_gap = tol;
        std::size_t best = 0;
        for (std::size_t i = 0; i < spec.eigenvalues.size(); i++) {
            if (used[i]) continue;
            double gap = std::abs(spec.eigenvalues[i] - e);
            if (gap <= best_gap) {
                best_gap = gap;
                best = i;
                found = true;
            }
        }
        if (!found) return false;
        used[best] = true;
    }
    return true;
}

}  // namespace

bool contains_explicit(const Spectrum& spec, std::span<const double> explicit_eigs, double tol) {
    std::vector<bool> used;
    return match_explicit(spec, explicit_eigs, tol, used);
}

double fit_gap_constant(const Spectrum& spec, std::size_t n,
                        std::span<const double> explicit_eigs, double tol) {
    std::vector<bool> used;
    if (!match_explicit(spec, explicit_eigs, tol, used))
        throw std::invalid_argument("walklab: explicit eigenvalues missing from spectrum");
    const double log2n = std::log(static_cast<double>(n)) * std::log(static_cast<double>(n));
    double c = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < spec.eigenvalues.size(); i++) {
        if (used[i]) continue;
        c = std::min(c, (4.0 - std::abs(spec.eigenvalues[i])) * log2n);
    }
    return c;
}

bool check_gap_bound(const Spectrum& spec, std::size_t n, double c,
                     std::span<const double> explicit_eigs, double tol) {
    return fit_gap_constant(spec, n, explicit_eigs, tol) >= c;
}

}  // namespace walklab
