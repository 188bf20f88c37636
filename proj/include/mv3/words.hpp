#pragma once

#include <bit>
#include <cstdint>

// Word-level primitives shared by every cipher module.  All arithmetic is
// modulo 2^32; rotation amounts are reduced modulo the word width, buffer
// indices modulo 32 and table indices modulo 256.

namespace mv3 {

using Word = std::uint32_t;      // one "double word", the cipher's native unit
using ByteIndex = std::uint8_t;  // mod-256 index (j, u)

inline constexpr unsigned kWordBits = 32;

constexpr Word rotate_right(Word w, unsigned amount) noexcept {
    return std::rotr(w, static_cast<int>(amount % kWordBits));
}

constexpr Word add_mod(Word a, Word b) noexcept {
    return a + b;  // unsigned wraparound is the mod-2^32 reduction
}

constexpr Word mul_mod(Word a, Word b) noexcept {
    return a * b;
}

constexpr void store_le(Word w, std::uint8_t* out) noexcept {
    out[0] = static_cast<std::uint8_t>(w);
    out[1] = static_cast<std::uint8_t>(w >> 8);
    out[2] = static_cast<std::uint8_t>(w >> 16);
    out[3] = static_cast<std::uint8_t>(w >> 24);
}

constexpr Word load_le(const std::uint8_t* in) noexcept {
    return static_cast<Word>(in[0]) | static_cast<Word>(in[1]) << 8 |
           static_cast<Word>(in[2]) << 16 | static_cast<Word>(in[3]) << 24;
}

}  // namespace mv3
