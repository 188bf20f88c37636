#include "mv3/keystream.hpp"

#include <stdexcept>

namespace mv3 {

namespace {

// Output-rule buffer indices, reduced mod 32 once at compile time.
constexpr std::array<std::uint8_t, kBufferWords> make_a_index() {
    std::array<std::uint8_t, kBufferWords> idx{};
    for (std::size_t i = 0; i < kBufferWords; i++)
        idx[i] = static_cast<std::uint8_t>((9 * i + 5) % kBufferWords);
    return idx;
}

constexpr std::array<std::uint8_t, kBufferWords> make_b_index() {
    std::array<std::uint8_t, kBufferWords> idx{};
    for (std::size_t i = 0; i < kBufferWords; i++)
        idx[i] = static_cast<std::uint8_t>((7 * i + 18) % kBufferWords);
    return idx;
}

constexpr auto kAIndex = make_a_index();
constexpr auto kBIndex = make_b_index();

inline Word step_unchecked(CipherState& s, const Buffer& a, const Buffer& b, Buffer& c_fill,
                           std::size_t i) {
    s.j = static_cast<ByteIndex>(s.j + (b[i] & 0xFF));
    s.x = add_mod(s.x, s.t[s.j]);
    c_fill[i] = rotate_right(s.x, 8);
    return mul_mod(s.x, s.c) ^ a[kAIndex[i]] ^ rotate_right(b[kBIndex[i]], 16);
}

}  // namespace

Word step(CipherState& state, std::size_t i) {
    if (i >= kBufferWords)
        throw std::out_of_range("mv3: step index must be < 32");
    return step_unchecked(state, state.a(), state.b(), state.c_buf(), i);
}

void finish_block(CipherState& state) {
    state.u = static_cast<ByteIndex>(state.u + 1);
    state.t[state.u] = add_mod(state.t[state.u], rotate_right(state.t[state.j], 13));
    state.c = add_mod(state.c, rotate_right(state.a()[0], 16));
    state.c |= 1u;
    state.c = state.cube ? mul_mod(mul_mod(state.c, state.c), state.c)
                         : mul_mod(state.c, state.c);
    state.revolve();
}

KeystreamBlock next_block(CipherState& state) {
    KeystreamBlock block;
    const Buffer& a = state.a();
    const Buffer& b = state.b();
    Buffer& c_fill = state.c_buf();
    for (std::size_t i = 0; i < kBufferWords; i++)
        block.words[i] = step_unchecked(state, a, b, c_fill, i);
    finish_block(state);
    return block;
}

}  // namespace mv3
