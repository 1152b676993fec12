#include "aben/fp2.hpp"

#include <stdexcept>

namespace aben {

Fp2::Fp2(Fp a, Fp b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.is_null() || b_.is_null())
        throw std::logic_error("Fp2: null coordinate");
    if (a_.field() != b_.field() &&
        a_.field()->modulus() != b_.field()->modulus())
        throw std::logic_error("Fp2: mixed fields");
}

Fp2 Fp2::zero(const FieldPtr& f) { return Fp2(f->zero(), f->zero()); }

Fp2 Fp2::one(const FieldPtr& f) { return Fp2(f->one(), f->zero()); }

Fp2 Fp2::operator+(const Fp2& rhs) const {
    return Fp2(a_ + rhs.a_, b_ + rhs.b_);
}

Fp2 Fp2::operator-(const Fp2& rhs) const {
    return Fp2(a_ - rhs.a_, b_ - rhs.b_);
}

Fp2 Fp2::operator*(const Fp2& rhs) const {
    // Karatsuba over i² = −1: three base-field multiplications.
    Fp ac = a_ * rhs.a_;
    Fp bd = b_ * rhs.b_;
    Fp cross = (a_ + b_) * (rhs.a_ + rhs.b_);
    return Fp2(ac - bd, cross - ac - bd);
}

Fp2 Fp2::operator-() const { return Fp2(-a_, -b_); }

Fp2 Fp2::square() const {
    // (a+bi)² = (a+b)(a−b) + 2ab·i, two multiplications.
    Fp re = (a_ + b_) * (a_ - b_);
    Fp im = a_ * b_;
    return Fp2(re, im + im);
}

Fp2 Fp2::conj() const { return Fp2(a_, -b_); }

Fp Fp2::norm() const { return a_ * a_ + b_ * b_; }

Fp2 Fp2::inv() const {
    Fp n = norm();
    if (n.is_zero()) throw std::domain_error("Fp2: inverse of zero");
    Fp ninv = n.inv();
    return Fp2(a_ * ninv, -(b_ * ninv));
}

Fp2 Fp2::pow(const BigInt& e) const {
    if (e < 0) throw std::invalid_argument("Fp2::pow: negative exponent");
    if (is_null()) throw std::logic_error("Fp2::pow: null element");
    Fp2 result = Fp2::one(field());
    std::size_t nbits = bit_length(e);
    for (std::size_t i = nbits; i-- > 0;) {
        result = result.square();
        if (mpz_tstbit(e.get_mpz_t(), i)) result = result * *this;
    }
    return result;
}

}  // namespace aben
