#include "cryptlab/complexity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mv3/state.hpp"

namespace cryptlab {

double distinguisher_bound(double eps, const std::map<unsigned, double>& counts) {
    if (eps < 0.0 || eps > 0.5)
        throw std::invalid_argument("cryptlab: bias must lie in [0, 1/2]");
    double sum = 0;
    for (const auto& [a, count] : counts) {
        if (count < 0)
            throw std::invalid_argument("cryptlab: relation counts must be non-negative");
        sum += count * std::pow(eps, 2.0 * a);
    }
    return std::sqrt(sum);
}

RelatedKeyComplexity related_key_complexity(unsigned t, unsigned loops_per_phase,
                                            bool insertion_variant) {
    if (t < 1 || t > 63)
        throw std::invalid_argument("cryptlab: t must lie in [1, 63] so 4t/256 < 1");

    double log2_m = 0;
    if (insertion_variant) {
        // ((1 - t/256)^-256)^4
        log2_m = -4.0 * 256.0 * std::log2(1.0 - t / 256.0);
    } else {
        unsigned exponent;
        switch (loops_per_phase) {
            case 8: exponent = 256; break;
            case 4: exponent = 128; break;
            case 2: exponent = 64; break;
            default:
                throw std::invalid_argument("cryptlab: loops per phase must be 8, 4, or 2");
        }
        for (unsigned mult = 1; mult <= 4; mult++)
            log2_m -= exponent * std::log2(1.0 - mult * t / 256.0);
        // Plus the first keystream loop itself: (1 - 4t/256)^-32.
        log2_m -= 32.0 * std::log2(1.0 - 4.0 * t / 256.0);
    }
    return RelatedKeyComplexity{std::exp2(log2_m), log2_m, 10.0 + log2_m};
}

TmdtoReport tmdto_margin(std::size_t key_bits) {
    if (key_bits == 0 || key_bits > 8192)
        throw std::invalid_argument("cryptlab: key size must lie in (0, 8192] bits");
    return TmdtoReport{mv3::kStateBits, key_bits, mv3::kStateBits >= 2 * key_bits};
}

GuessDetermineCost guess_and_determine_cost() {
    // Two 32-word buffers plus j, c, x round up to 66 words; each table
    // collision filters 32 bits, 70 of them outweigh the guess, and ten loops
    // of keystream (2^14 bits) are expected to supply them.
    GuessDetermineCost cost;
    cost.words_guessed = 66;
    cost.bits_guessed = 66 * 32;
    cost.collisions_needed = 70;
    cost.keystream_bits = 1u << 14;
    cost.log2_time = static_cast<double>(cost.bits_guessed);
    return cost;
}

}  // namespace cryptlab
