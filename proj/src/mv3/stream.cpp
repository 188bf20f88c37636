#include "mv3/stream.hpp"

#include <cstring>
#include <stdexcept>

namespace mv3 {

void StreamSession::refill() {
    KeystreamBlock block = next_block(state_);
    for (std::size_t i = 0; i < kBufferWords; i++)
        store_le(block.words[i], pending_ + 4 * i);
    pending_pos_ = 0;
}

void StreamSession::keystream_bytes(std::span<std::uint8_t> out) {
    std::size_t done = 0;
    const std::size_t n = out.size();
    // Drain the pending buffer first.
    while (done < n && pending_pos_ < kBlockBytes)
        out[done++] = pending_[pending_pos_++];
    // Whole blocks straight into the destination.
    while (n - done >= kBlockBytes) {
        KeystreamBlock block = next_block(state_);
        for (std::size_t i = 0; i < kBufferWords; i++)
            store_le(block.words[i], out.data() + done + 4 * i);
        done += kBlockBytes;
    }
    // Tail from a fresh block, remainder kept pending.
    if (done < n) {
        refill();
        while (done < n)
            out[done++] = pending_[pending_pos_++];
    }
    produced_ += n;
}

std::vector<std::uint8_t> StreamSession::keystream_bytes(std::size_t n) {
    std::vector<std::uint8_t> out(n);
    keystream_bytes(std::span<std::uint8_t>(out));
    return out;
}

void StreamSession::crypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
    if (out.size() < in.size())
        throw std::invalid_argument("mv3: output buffer shorter than input");
    // XOR in chunks so arbitrarily long inputs need no full-length keystream
    // allocation.
    std::uint8_t ks[4096];
    std::size_t done = 0;
    while (done < in.size()) {
        std::size_t chunk = std::min(in.size() - done, sizeof(ks));
        keystream_bytes(std::span<std::uint8_t>(ks, chunk));
        for (std::size_t i = 0; i < chunk; i++)
            out[done + i] = in[done + i] ^ ks[i];
        done += chunk;
    }
}

std::vector<std::uint8_t> StreamSession::crypt(std::span<const std::uint8_t> in) {
    std::vector<std::uint8_t> out(in.size());
    crypt(in, std::span<std::uint8_t>(out));
    return out;
}

}  // namespace mv3
