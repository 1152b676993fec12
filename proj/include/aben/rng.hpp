#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "aben/bigint.hpp"

namespace aben {

// Deterministic randomness stream: a SHA-256 counter generator keyed by the
// seed. The same seed always yields the same stream, which is what makes
// key/ciphertext generation reproducible in tests and benchmarks. Not
// hardened against side channels (nothing in this library is).
//
// Each instance is single-owner: use one Rng per thread, or fork() substreams.
class Rng {
public:
    explicit Rng(std::span<const std::uint8_t> seed);
    explicit Rng(std::uint64_t seed);

    // Seeded from the operating system.
    static Rng from_entropy();

    void fill(std::span<std::uint8_t> out);
    std::vector<std::uint8_t> bytes(std::size_t n);
    std::uint8_t byte();

    // Uniform in [0, bound); bound must be positive.
    BigInt uniform_below(const BigInt& bound);
    // Uniform in [1, bound); bound must be > 1.
    BigInt uniform_nonzero_below(const BigInt& bound);
    // Uniform integer with exactly `bits` bits (top bit forced); bits >= 1.
    BigInt uniform_bits(std::size_t bits);

    // Independent substream; streams with distinct labels never overlap.
    Rng fork(std::string_view label) const;

private:
    std::array<std::uint8_t, 32> key_;
    std::uint64_t counter_ = 0;
    std::array<std::uint8_t, 32> block_{};
    std::size_t pos_ = 32;

    void refill();
};

}  // namespace aben
