#include "mv3/keyschedule.hpp"

#include <stdexcept>
#include <string>

namespace mv3 {

namespace {

void validate_lengths(std::size_t key_words, std::size_t iv_words) {
    if (key_words < 1 || key_words > kMaxKeyWords)
        throw std::invalid_argument("mv3: key length must be 1..256 words (32..8192 bits), got " +
                                    std::to_string(key_words * 32) + " bits");
    if (iv_words != key_words)
        throw std::invalid_argument("mv3: IV length (" + std::to_string(iv_words * 32) +
                                    " bits) must equal key length (" +
                                    std::to_string(key_words * 32) + " bits)");
}

int hex_nibble(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    return -1;
}

}  // namespace

KeyMaterial::KeyMaterial(std::vector<Word> key, std::vector<Word> iv)
    : key_(std::move(key)), iv_(std::move(iv)) {
    validate_lengths(key_.size(), iv_.size());
}

std::vector<Word> parse_hex_words(std::string_view hex) {
    if (hex.size() % 8 != 0)
        throw std::invalid_argument("mv3: hex length must be a multiple of 8 chars, got " +
                                    std::to_string(hex.size()));
    std::vector<Word> words;
    words.reserve(hex.size() / 8);
    for (std::size_t pos = 0; pos < hex.size(); pos += 8) {
        std::uint8_t bytes[4];
        for (std::size_t k = 0; k < 4; k++) {
            int hi = hex_nibble(hex[pos + 2 * k]);
            int lo = hex_nibble(hex[pos + 2 * k + 1]);
            if (hi < 0 || lo < 0)
                throw std::invalid_argument("mv3: invalid hex digit");
            bytes[k] = static_cast<std::uint8_t>(hi << 4 | lo);
        }
        words.push_back(load_le(bytes));
    }
    return words;
}

std::vector<Word> bytes_to_words(std::span<const std::uint8_t> bytes) {
    if (bytes.size() % 4 != 0)
        throw std::invalid_argument("mv3: byte length must be a multiple of 4, got " +
                                    std::to_string(bytes.size()));
    std::vector<Word> words;
    words.reserve(bytes.size() / 4);
    for (std::size_t pos = 0; pos < bytes.size(); pos += 4)
        words.push_back(load_le(bytes.data() + pos));
    return words;
}

KeyMaterial KeyMaterial::from_hex(std::string_view key_hex, std::string_view iv_hex) {
    return KeyMaterial(parse_hex_words(key_hex), parse_hex_words(iv_hex));
}

KeyMaterial KeyMaterial::from_bytes(std::span<const std::uint8_t> key,
                                    std::span<const std::uint8_t> iv) {
    return KeyMaterial(bytes_to_words(key), bytes_to_words(iv));
}

namespace detail {

void mix_material_phase(CipherState& state, std::span<const Word> material, unsigned phase) {
    const std::size_t keylength = material.size();
    for (std::size_t l = 0; l < kTableWords; l++) {
        Word& entry = state.t[(phase + l) % kTableWords];
        entry = add_mod(entry, add_mod(rotate_right(material[l % keylength], 8 * phase),
                                       static_cast<Word>(l)));
    }
}

void run_phase(CipherState& state, std::span<const Word> material, unsigned phase) {
    mix_material_phase(state, material, phase);
    // Produce the full 1024 bytes of ordinary output (8 blocks) first, then
    // encrypt T with it: keystream word k into T[k].
    Word keystream[kTableWords];
    for (std::size_t blk = 0; blk < 8; blk++) {
        KeystreamBlock block = next_block(state);
        for (std::size_t i = 0; i < kBufferWords; i++)
            keystream[blk * kBufferWords + i] = block.words[i];
    }
    for (std::size_t k = 0; k < kTableWords; k++) state.t[k] ^= keystream[k];
}

}  // namespace detail

namespace {

void run_iv_half(CipherState& state, std::span<const Word> iv) {
    for (unsigned phase = 4; phase < 8; phase++)
        detail::run_phase(state, iv, phase);
}

}  // namespace

InitResult initialize(const KeyMaterial& km, bool cube) {
    CipherState state;
    state.cube = cube;
    state.j = 0;
    state.x = 0;
    state.u = 0;
    state.c = 1;
    for (Buffer& buf : state.ring)
        buf.fill(0xEFEFEFEFu);
    state.t.fill(0xEFEFEFEFu);

    for (unsigned phase = 0; phase < 4; phase++)
        detail::run_phase(state, km.key(), phase);

    KeyPhaseSnapshot snapshot(state, km.keylength());
    run_iv_half(state, km.iv());
    return InitResult{state, std::move(snapshot)};
}

CipherState rekey_iv(const KeyPhaseSnapshot& snapshot, std::span<const Word> iv) {
    if (iv.size() != snapshot.keylength())
        throw std::invalid_argument("mv3: IV length (" + std::to_string(iv.size() * 32) +
                                    " bits) must equal key length (" +
                                    std::to_string(snapshot.keylength() * 32) + " bits)");
    CipherState state = snapshot.state();
    run_iv_half(state, iv);
    return state;
}

}  // namespace mv3
