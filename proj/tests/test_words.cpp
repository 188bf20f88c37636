#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "mv3/words.hpp"

using namespace mv3;

TEST_CASE("rotate_right basics") {
    CHECK(rotate_right(0x00000100u, 8) == 0x00000001u);
    CHECK(rotate_right(0xDEADBEEFu, 0) == 0xDEADBEEFu);
    CHECK(rotate_right(0x00000001u, 33) == 0x80000000u);  // amount reduced mod 32
    CHECK(rotate_right(0x00000001u, 32) == 0x00000001u);
}

TEST_CASE("rotate_right inverse pairs") {
    std::mt19937 rng(7);
    for (unsigned k = 1; k <= 31; k++) {
        for (int rep = 0; rep < 16; rep++) {
            Word w = rng();
            CHECK(rotate_right(rotate_right(w, k), 32 - k) == w);
        }
    }
}

TEST_CASE("add_mod and mul_mod examples") {
    CHECK(add_mod(0xFFFFFFFFu, 1) == 0x00000000u);
    CHECK(add_mod(5, 7) == 12);
    CHECK(add_mod(0x80000000u, 0x80000000u) == 0x00000000u);
    CHECK(mul_mod(3, 3) == 9);
    CHECK(mul_mod(0x10000u, 0x10000u) == 0x00000000u);
    CHECK(mul_mod(0xFFFFFFFFu, 2) == 0xFFFFFFFEu);
    CHECK(mul_mod(0x12345678u, 1) == 0x12345678u);
    CHECK(mul_mod(0x12345678u, 0) == 0u);
}

TEST_CASE("odd multiplier is a bijection, exact at 8-bit width") {
    // Reduced-width model: multiplication by an odd constant mod 2^8 permutes
    // the 256 byte values.
    for (unsigned c : {1u, 3u, 0x5Bu, 0xEFu, 0xFFu}) {
        std::vector<bool> seen(256, false);
        for (unsigned v = 0; v < 256; v++) {
            unsigned p = (v * c) & 0xFF;
            CHECK(!seen[p]);
            seen[p] = true;
        }
    }
}

TEST_CASE("odd multiplier collision-free on 2^16 random words") {
    std::mt19937 rng(99);
    const Word c = 0x9E3779B9u;  // odd
    std::vector<Word> inputs(1 << 16);
    for (Word& w : inputs) w = rng();
    std::sort(inputs.begin(), inputs.end());
    inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());
    std::vector<Word> outputs;
    outputs.reserve(inputs.size());
    for (Word w : inputs) outputs.push_back(mul_mod(w, c));
    std::sort(outputs.begin(), outputs.end());
    CHECK(std::adjacent_find(outputs.begin(), outputs.end()) == outputs.end());
}

TEST_CASE("squaring preserves the low bit of odd words") {
    std::mt19937 rng(3);
    for (int rep = 0; rep < 1000; rep++) {
        Word c = rng() | 1u;
        CHECK((mul_mod(c, c) & 1u) == 1u);
    }
}

TEST_CASE("little-endian word serialization round-trips") {
    std::uint8_t buf[4];
    store_le(0x33221100u, buf);
    CHECK(buf[0] == 0x00);
    CHECK(buf[1] == 0x11);
    CHECK(buf[2] == 0x22);
    CHECK(buf[3] == 0x33);
    CHECK(load_le(buf) == 0x33221100u);
}
