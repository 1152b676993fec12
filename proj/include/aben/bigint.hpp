#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace aben {

// Arbitrary-precision non-negative integers are GMP's mpz_class throughout.
using BigInt = mpz_class;

// Number of significant bits; bit_length(0) == 0.
inline std::size_t bit_length(const BigInt& x) {
    if (x == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline std::size_t byte_length(const BigInt& x) {
    return (bit_length(x) + 7) / 8;
}

// Big-endian decode of an unsigned integer.
inline BigInt bigint_from_bytes(std::span<const std::uint8_t> bytes) {
    BigInt out;
    if (!bytes.empty())
        mpz_import(out.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
    return out;
}

// Big-endian encode into a fixed-width buffer, left-padded with zeros.
// Requires byte_length(x) <= out.size().
void bigint_to_bytes(const BigInt& x, std::span<std::uint8_t> out);

inline std::string bigint_to_hex(const BigInt& x) { return x.get_str(16); }

// Parses lowercase/uppercase hex without prefix; throws std::invalid_argument
// on empty or non-hex input.
BigInt bigint_from_hex(const std::string& hex);

}  // namespace aben
