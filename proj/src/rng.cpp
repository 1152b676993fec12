#include "aben/rng.hpp"

#include <random>
#include <stdexcept>

#include "aben/digest.hpp"

namespace aben {

namespace {

std::array<std::uint8_t, 32> derive_stream_key(std::string_view tag,
                                               std::span<const std::uint8_t> material,
                                               std::string_view label = {}) {
    Sha256 h;
    h.update(tag);
    h.update(material);
    if (!label.empty()) h.update(label);
    return h.finish();
}

}  // namespace

Rng::Rng(std::span<const std::uint8_t> seed)
    : key_(derive_stream_key("ABEN-RNG-v1", seed)) {}

Rng::Rng(std::uint64_t seed) {
    std::uint8_t buf[8];
    for (int i = 0; i < 8; ++i)
        buf[i] = static_cast<std::uint8_t>(seed >> (56 - 8 * i));
    key_ = derive_stream_key("ABEN-RNG-v1", std::span<const std::uint8_t>(buf, 8));
}

Rng Rng::from_entropy() {
    std::random_device rd;
    std::array<std::uint8_t, 32> seed{};
    for (std::size_t i = 0; i < seed.size(); i += 4) {
        std::uint32_t w = rd();
        seed[i] = static_cast<std::uint8_t>(w >> 24);
        seed[i + 1] = static_cast<std::uint8_t>(w >> 16);
        seed[i + 2] = static_cast<std::uint8_t>(w >> 8);
        seed[i + 3] = static_cast<std::uint8_t>(w);
    }
    return Rng(std::span<const std::uint8_t>(seed.data(), seed.size()));
}

void Rng::refill() {
    Sha256 h;
    h.update(std::span<const std::uint8_t>(key_.data(), key_.size()));
    h.update_u64(counter_++);
    block_ = h.finish();
    pos_ = 0;
}

void Rng::fill(std::span<std::uint8_t> out) {
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (pos_ >= block_.size()) refill();
        out[i] = block_[pos_++];
    }
}

std::vector<std::uint8_t> Rng::bytes(std::size_t n) {
    std::vector<std::uint8_t> out(n);
    fill(out);
    return out;
}

std::uint8_t Rng::byte() {
    std::uint8_t b;
    fill(std::span<std::uint8_t>(&b, 1));
    return b;
}

BigInt Rng::uniform_below(const BigInt& bound) {
    if (bound <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
    if (bound == 1) return 0;
    std::size_t bits = bit_length(bound - 1);
    std::size_t nbytes = (bits + 7) / 8;
    unsigned top_keep = bits % 8;  // 0 means the full top byte is used
    std::vector<std::uint8_t> buf(nbytes);
    // Rejection sampling from [0, 2^bits); acceptance probability > 1/2.
    for (;;) {
        fill(buf);
        if (top_keep) buf[0] &= static_cast<std::uint8_t>((1u << top_keep) - 1);
        BigInt v = bigint_from_bytes(buf);
        if (v < bound) return v;
    }
}

BigInt Rng::uniform_nonzero_below(const BigInt& bound) {
    if (bound <= 1)
        throw std::invalid_argument("uniform_nonzero_below: bound must exceed 1");
    return uniform_below(bound - 1) + 1;
}

BigInt Rng::uniform_bits(std::size_t bits) {
    if (bits == 0) throw std::invalid_argument("uniform_bits: bits must be >= 1");
    std::size_t nbytes = (bits + 7) / 8;
    std::vector<std::uint8_t> buf(nbytes);
    fill(buf);
    unsigned top_keep = bits % 8;
    if (top_keep) {
        buf[0] &= static_cast<std::uint8_t>((1u << top_keep) - 1);
        buf[0] |= static_cast<std::uint8_t>(1u << (top_keep - 1));
    } else {
        buf[0] |= 0x80;
    }
    return bigint_from_bytes(buf);
}

Rng Rng::fork(std::string_view label) const {
    Rng child(std::uint64_t{0});
    child.key_ = derive_stream_key(
        "ABEN-RNG-fork", std::span<const std::uint8_t>(key_.data(), key_.size()),
        label);
    child.counter_ = 0;
    child.pos_ = child.block_.size();
    return child;
}

}  // namespace aben
