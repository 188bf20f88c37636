#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mv3/keyschedule.hpp"

namespace mv3 {

// Byte-granular XOR stream layer over the block generator.  Blocks are
// generated on demand; unconsumed keystream bytes are buffered so arbitrary
// request sizes concatenate seamlessly.
class StreamSession {
public:
    explicit StreamSession(CipherState state) : state_(state) {}
    explicit StreamSession(const KeyMaterial& km, bool cube = false)
        : StreamSession(initialize(km, cube).state) {}

    // Next n keystream bytes (little-endian word serialization).
    std::vector<std::uint8_t> keystream_bytes(std::size_t n);
    void keystream_bytes(std::span<std::uint8_t> out);

    // out[i] = in[i] ^ keystream[i]; in and out may alias.  Decryption is the
    // same operation.
    void crypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out);
    std::vector<std::uint8_t> crypt(std::span<const std::uint8_t> in);

    std::uint64_t produced() const noexcept { return produced_; }
    const CipherState& state() const noexcept { return state_; }

private:
    void refill();

    CipherState state_;
    std::uint8_t pending_[kBlockBytes]{};
    std::size_t pending_pos_ = kBlockBytes;  // kBlockBytes means empty
    std::uint64_t produced_ = 0;
};

}  // namespace mv3
