#pragma once

#include <array>
#include <cstddef>

#include "mv3/state.hpp"

// The main loop: 32 per-step updates producing one output word each, then a
// per-block table/multiplier refresh and the buffer revolution.

namespace mv3 {

struct KeystreamBlock {
    std::array<Word, kBufferWords> words{};
};

inline constexpr std::size_t kBlockBytes = kBufferWords * 4;  // 128

// One step of the inner loop at position i (0..31).  Walks j and x, stores
// the rotated walk value into C[i], and returns the output word
//   (x * c) ^ A[9i+5] ^ (B[7i+18] >>> 16)
// with buffer indices reduced mod 32.  Throws std::out_of_range for i >= 32.
Word step(CipherState& state, std::size_t i);

// Per-block tail, in listing order: u+1, table refresh from T[j], multiplier
// refresh (add, or-1, square or cube), then the buffer revolution.  Must be
// called after exactly 32 steps.
void finish_block(CipherState& state);

// Runs 32 steps plus finish_block and returns the 32 output words.
KeystreamBlock next_block(CipherState& state);

}  // namespace mv3
