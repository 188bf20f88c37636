#pragma once

#include <cstddef>
#include <map>
#include <vector>

// Attack-cost arithmetic: the linear-distinguisher statistical-distance
// bound, the related-key complexity formulas, the TMDTO state-size margin,
// and the guess-and-determine cost tally.  Calculators only; none of these
// attacks is executable at desk scale.

namespace cryptlab {

// sqrt(sum_a A_N(a) eps^(2a)) for relation counts A_N; monotone in eps and in
// each count.
double distinguisher_bound(double eps, const std::map<unsigned, double>& counts);

struct RelatedKeyComplexity {
    double m;           // pairs of related IVs (inf if not representable)
    double log2_m;
    double log2_total;  // data/time complexity, log2(2^10 * M)
};

// t = number of table words one material word touches per phase-step
// (keylength = 8192 / (32 t) words).  loops_per_phase in {8, 4, 2} selects
// the full, halved, or quartered schedule; the insertion variant replaces
// XORing the phase output with inserting it.  Requires 1 <= t <= 63.
RelatedKeyComplexity related_key_complexity(unsigned t, unsigned loops_per_phase = 8,
                                            bool insertion_variant = false);

struct TmdtoReport {
    std::size_t state_bits;
    std::size_t key_bits;
    bool margin_ok;  // state >= 2 * key bits
};

// State-size margin against state-inversion tradeoff attacks.
TmdtoReport tmdto_margin(std::size_t key_bits);

struct GuessDetermineCost {
    unsigned words_guessed;   // two buffers plus j, c, x
    unsigned bits_guessed;
    unsigned collisions_needed;
    unsigned keystream_bits;
    double log2_time;
};

GuessDetermineCost guess_and_determine_cost();

}  // namespace cryptlab
