#pragma once

#include <memory>
#include <optional>
#include <span>

#include "aben/bigint.hpp"

namespace aben {

class Fp;
class PrimeField;
using FieldPtr = std::shared_ptr<const PrimeField>;

// A prime field F_p. Shared immutable context; elements hold a handle to it.
// Two PrimeField instances with equal moduli are interchangeable.
class PrimeField : public std::enable_shared_from_this<PrimeField> {
public:
    static FieldPtr create(BigInt modulus);

    const BigInt& modulus() const { return p_; }
    std::size_t bit_width() const { return bits_; }
    std::size_t byte_width() const { return bytes_; }
    bool mod3mod4() const { return mod3mod4_; }

    Fp zero() const;
    Fp one() const;
    // Reduces v into the canonical range [0, p).
    Fp element(const BigInt& v) const;
    // Accepts only canonical residues; nullopt if v < 0 or v >= p.
    std::optional<Fp> element_canonical(const BigInt& v) const;
    Fp from_bytes(std::span<const std::uint8_t> bytes) const;  // reduces

    // Exponent of the q ≡ 3 mod 4 square-root formula, (p+1)/4.
    const BigInt& sqrt_exponent() const { return sqrt_exp_; }

private:
    explicit PrimeField(BigInt p);

    BigInt p_;
    BigInt sqrt_exp_;
    std::size_t bits_ = 0;
    std::size_t bytes_ = 0;
    bool mod3mod4_ = false;

    friend class Fp;
};

// Immutable element of a PrimeField, always stored as the canonical residue.
// Default-constructed elements are "null" and only support assignment.
class Fp {
public:
    Fp() = default;

    const BigInt& value() const { return v_; }
    const FieldPtr& field() const { return f_; }
    bool is_null() const { return !f_; }
    bool is_zero() const { return f_ && v_ == 0; }
    bool is_one() const { return f_ && v_ == 1; }

    Fp operator+(const Fp& rhs) const;
    Fp operator-(const Fp& rhs) const;
    Fp operator*(const Fp& rhs) const;
    Fp operator-() const;

    // Multiplicative inverse; throws std::domain_error on zero.
    Fp inv() const;
    // v^e mod p for e >= 0.
    Fp pow(const BigInt& e) const;
    // Legendre symbol: 1 (QR), -1 (non-residue), 0 (zero).
    int legendre() const;
    // Principal square root v^((p+1)/4); requires p ≡ 3 mod 4 and legendre() >= 0.
    Fp sqrt() const;

    bool operator==(const Fp& rhs) const;
    bool operator!=(const Fp& rhs) const = default;

    // Fixed-width big-endian encoding (field byte_width).
    void to_bytes(std::span<std::uint8_t> out) const;
    std::vector<std::uint8_t> to_bytes() const;

private:
    Fp(FieldPtr f, BigInt v) : f_(std::move(f)), v_(std::move(v)) {}

    FieldPtr f_;
    BigInt v_;

    const PrimeField& require_same_field(const Fp& rhs) const;
    const PrimeField& require_field() const;

    friend class PrimeField;
};

}  // namespace aben
