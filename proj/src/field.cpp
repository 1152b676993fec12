#include "aben/field.hpp"

#include <stdexcept>

namespace aben {

PrimeField::PrimeField(BigInt p) : p_(std::move(p)) {
    if (p_ < 2) throw std::invalid_argument("PrimeField: modulus must be >= 2");
    bits_ = bit_length(p_);
    bytes_ = (bits_ + 7) / 8;
    mod3mod4_ = mpz_tstbit(p_.get_mpz_t(), 0) && mpz_tstbit(p_.get_mpz_t(), 1);
    if (mod3mod4_) sqrt_exp_ = (p_ + 1) / 4;
}

FieldPtr PrimeField::create(BigInt modulus) {
    return FieldPtr(new PrimeField(std::move(modulus)));
}

Fp PrimeField::zero() const {
    return Fp(shared_from_this(), 0);
}

Fp PrimeField::one() const {
    return Fp(shared_from_this(), p_ > 1 ? 1 : 0);
}

Fp PrimeField::element(const BigInt& v) const {
    BigInt r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());  // result in [0, p)
    return Fp(shared_from_this(), std::move(r));
}

std::optional<Fp> PrimeField::element_canonical(const BigInt& v) const {
    if (v < 0 || v >= p_) return std::nullopt;
    return Fp(shared_from_this(), v);
}

Fp PrimeField::from_bytes(std::span<const std::uint8_t> bytes) const {
    return element(bigint_from_bytes(bytes));
}

const PrimeField& Fp::require_field() const {
    if (!f_) throw std::logic_error("Fp: null element");
    return *f_;
}

const PrimeField& Fp::require_same_field(const Fp& rhs) const {
    const PrimeField& f = require_field();
    rhs.require_field();
    if (f_ != rhs.f_ && f.p_ != rhs.f_->p_)
        throw std::logic_error("Fp: mixed fields");
    return f;
}

Fp Fp::operator+(const Fp& rhs) const {
    const PrimeField& f = require_same_field(rhs);
    BigInt r = v_ + rhs.v_;
    if (r >= f.p_) r -= f.p_;
    return Fp(f_, std::move(r));
}

Fp Fp::operator-(const Fp& rhs) const {
    const PrimeField& f = require_same_field(rhs);
    BigInt r = v_ - rhs.v_;
    if (r < 0) r += f.p_;
    return Fp(f_, std::move(r));
}

Fp Fp::operator*(const Fp& rhs) const {
    const PrimeField& f = require_same_field(rhs);
    BigInt r = v_ * rhs.v_;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), f.p_.get_mpz_t());
    return Fp(f_, std::move(r));
}

Fp Fp::operator-() const {
    const PrimeField& f = require_field();
    if (v_ == 0) return *this;
    return Fp(f_, f.p_ - v_);
}

Fp Fp::inv() const {
    const PrimeField& f = require_field();
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), v_.get_mpz_t(), f.p_.get_mpz_t()) == 0)
        throw std::domain_error("Fp: value not invertible");
    return Fp(f_, std::move(r));
}

Fp Fp::pow(const BigInt& e) const {
    const PrimeField& f = require_field();
    if (e < 0) throw std::invalid_argument("Fp::pow: negative exponent");
    BigInt r;
    mpz_powm(r.get_mpz_t(), v_.get_mpz_t(), e.get_mpz_t(), f.p_.get_mpz_t());
    return Fp(f_, std::move(r));
}

int Fp::legendre() const {
    const PrimeField& f = require_field();
    return mpz_legendre(v_.get_mpz_t(), f.p_.get_mpz_t());
}

Fp Fp::sqrt() const {
    const PrimeField& f = require_field();
    if (!f.mod3mod4())
        throw std::logic_error("Fp::sqrt: field modulus is not 3 mod 4");
    return pow(f.sqrt_exponent());
}

bool Fp::operator==(const Fp& rhs) const {
    if (is_null() || rhs.is_null()) return is_null() == rhs.is_null();
    if (f_ != rhs.f_ && f_->modulus() != rhs.f_->modulus()) return false;
    return v_ == rhs.v_;
}

void Fp::to_bytes(std::span<std::uint8_t> out) const {
    const PrimeField& f = require_field();
    if (out.size() != f.byte_width())
        throw std::invalid_argument("Fp::to_bytes: wrong buffer width");
    bigint_to_bytes(v_, out);
}

std::vector<std::uint8_t> Fp::to_bytes() const {
    std::vector<std::uint8_t> out(require_field().byte_width());
    to_bytes(std::span<std::uint8_t>(out.data(), out.size()));
    return out;
}

}  // namespace aben
