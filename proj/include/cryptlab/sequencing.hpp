#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

// Output-sequencing analysis: each output y_i is a XOR of k delayed walk
// values x_{i - o}, o in taps[i mod P].  The searched quantity is the minimal
// number a of consecutive pairs (x_t, x_{t+1}) whose XOR equals some XOR of
// outputs -- small a means linear properties of the walk leak into the
// output.

namespace cryptlab {

struct SequencingScheme {
    std::size_t period = 0;
    // taps[r] = offsets i - n_{ij} for residue r, kept as given (a formal
    // list; a repeated offset cancels over GF(2)).  Offset 0 must appear:
    // the newest term is always included.
    std::vector<std::vector<std::uint32_t>> taps;
    std::uint32_t window = 0;  // constant C: i - C <= n_{ij} <= i

    // Offsets for an arbitrary index, by residue.
    const std::vector<std::uint32_t>& taps_for(std::size_t index) const {
        return taps[index % period];
    }
    std::uint32_t max_offset() const;

    // The P=32, k=3 family with n_{i1} = i - (5t mod 16),
    // n_{i2} = i - 16 - (3t mod 16), n_{i3} = i, t = i mod 16.
    static SequencingScheme mv3_family();
    // The scheme realized by the cipher's buffer output rule: the A term lags
    // two blocks, the B term one block.
    static SequencingScheme mv3_buffer_rule();
    // Text format: one line per residue listing its offsets.
    static SequencingScheme from_text(std::istream& in, std::uint32_t window = 0);

    // Checks structure; 64 <= window <= 256 unless relax_window.
    void validate(bool relax_window = false) const;
};

struct RelationWitness {
    std::vector<std::uint32_t> y_indices;     // j_1..j_b
    std::vector<std::uint32_t> pair_indices;  // i_1..i_a, pair t = (x_t, x_{t+1})
    std::size_t a() const { return pair_indices.size(); }
    std::size_t b() const { return y_indices.size(); }
};

struct SearchResult {
    std::size_t a_min = 0;
    RelationWitness witness;
    std::size_t max_b = 0;      // combination-size bound the search ran with
    std::size_t horizon = 0;    // y-index window searched
    // The search is exhaustive within (max_b, horizon); a_min is therefore an
    // upper bound on the unbounded minimum.
};

// Branch-and-bound search over nonzero GF(2) combinations of at most max_b
// outputs within the horizon.  horizon = 0 selects the default 4 P + C.
// Throws if no feasible (finite, even-parity) combination exists in range.
SearchResult min_pair_weight(const SequencingScheme& scheme, std::size_t max_b = 6,
                             std::size_t horizon = 0, bool relax_window = false);

// Exact GF(2) check of Eq-style relations: XOR of the y supports equals the
// XOR of the pair vectors e_t + e_{t+1}.
bool verify_witness(const SequencingScheme& scheme, const RelationWitness& witness);

// Minimal number of consecutive-pair generators summing to the indicator of
// `positions` (distinct, even cardinality): matched sorted pairs' gap total.
std::size_t min_pair_decomposition(std::span<const std::uint32_t> positions);

}  // namespace cryptlab
