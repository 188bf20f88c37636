#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "mv3/keystream.hpp"
#include "mv3/state.hpp"

// Two-phase key/IV initialization.  The key half (phases 0..3) mixes the key
// into the table and clocks the generator; the IV half (phases 4..7) does the
// same with the IV.  A snapshot taken between the halves allows IV-only
// rekeying without repeating the key half.

namespace mv3 {

inline constexpr std::size_t kMaxKeyWords = 256;  // 8192 bits

// Validated key and IV, both arrays of words of equal length in [1, 256].
class KeyMaterial {
public:
    KeyMaterial(std::vector<Word> key, std::vector<Word> iv);

    // Hex strings, length a multiple of 8 chars, case-insensitive; each
    // 4-byte group is read little-endian into one word.
    static KeyMaterial from_hex(std::string_view key_hex, std::string_view iv_hex);
    // Raw bytes, length a multiple of 4, little-endian per word.
    static KeyMaterial from_bytes(std::span<const std::uint8_t> key,
                                  std::span<const std::uint8_t> iv);

    const std::vector<Word>& key() const noexcept { return key_; }
    const std::vector<Word>& iv() const noexcept { return iv_; }
    std::size_t keylength() const noexcept { return key_.size(); }

private:
    std::vector<Word> key_;
    std::vector<Word> iv_;
};

std::vector<Word> parse_hex_words(std::string_view hex);
std::vector<Word> bytes_to_words(std::span<const std::uint8_t> bytes);

// State captured after the key half; immutable once constructed.
class KeyPhaseSnapshot {
public:
    KeyPhaseSnapshot(CipherState state, std::size_t keylength)
        : state_(state), keylength_(keylength) {}

    const CipherState& state() const noexcept { return state_; }
    std::size_t keylength() const noexcept { return keylength_; }

private:
    CipherState state_;
    std::size_t keylength_;
};

struct InitResult {
    CipherState state;
    KeyPhaseSnapshot snapshot;
};

// Full initialization: zero the indices, set c = 1, byte-fill the buffers and
// table with 0xEF, run the key half, snapshot, run the IV half.
InitResult initialize(const KeyMaterial& km, bool cube = false);

// IV-only rekey: restores the snapshot and runs just the IV half.  For equal
// material, rekey_iv(snapshot, iv) equals initialize(km).state word for word.
CipherState rekey_iv(const KeyPhaseSnapshot& snapshot, std::span<const Word> iv);

namespace detail {

// One phase of material mixing: for l = 0..255,
//   T[(phase + l) % 256] += (material[l % keylength] >>> 8*phase) + l.
void mix_material_phase(CipherState& state, std::span<const Word> material, unsigned phase);

// Mixing plus the "produce 1024 bytes, XOR them into T" tail of one phase.
void run_phase(CipherState& state, std::span<const Word> material, unsigned phase);

}  // namespace detail

}  // namespace mv3
