#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "mv3/words.hpp"

namespace mv3 {

inline constexpr std::size_t kBufferWords = 32;
inline constexpr std::size_t kTableWords = 256;

using Buffer = std::array<Word, kBufferWords>;
using Table = std::array<Word, kTableWords>;

// Full mutable cipher state.  The three revolving buffers live in a ring of
// physical arrays; revolve() reassigns roles (A <- B, B <- C, C recycled)
// without copying words.  Plain value type: copying it deep-copies the state.
struct CipherState {
    std::array<Buffer, 3> ring{};
    std::uint8_t base = 0;  // ring[base] = A, ring[base+1] = B, ring[base+2] = C
    Table t{};
    ByteIndex u = 0;
    ByteIndex j = 0;
    Word c = 0;  // multiplier
    Word x = 0;  // walk position
    bool cube = false;  // multiplier refresh uses c^3 instead of c^2

    Buffer& a() noexcept { return ring[base]; }
    Buffer& b() noexcept { return ring[static_cast<std::uint8_t>((base + 1) % 3)]; }
    Buffer& c_buf() noexcept { return ring[static_cast<std::uint8_t>((base + 2) % 3)]; }
    const Buffer& a() const noexcept { return ring[base]; }
    const Buffer& b() const noexcept { return ring[static_cast<std::uint8_t>((base + 1) % 3)]; }
    const Buffer& c_buf() const noexcept { return ring[static_cast<std::uint8_t>((base + 2) % 3)]; }

    // A <- B, B <- C, C's storage is recycled; its slots are each overwritten
    // before being read in the next block, so no zeroing happens here.
    void revolve() noexcept { base = static_cast<std::uint8_t>((base + 1) % 3); }

    bool operator==(const CipherState& o) const noexcept {
        return a() == o.a() && b() == o.b() && c_buf() == o.c_buf() && t == o.t &&
               u == o.u && j == o.j && c == o.c && x == o.x && cube == o.cube;
    }
};

// Internal-state size in bits: 3 buffers + table + u + j + c + x.
inline constexpr std::size_t kStateBits =
    3 * kBufferWords * kWordBits + kTableWords * kWordBits + 8 + 8 + kWordBits + kWordBits;

static_assert(kStateBits == 11344);

}  // namespace mv3
