#pragma once

#include "aben/field.hpp"

namespace aben {

// Quadratic extension F_{p²} = F_p[i]/(i² + 1), valid because p ≡ 3 mod 4
// makes -1 a non-residue. Elements are a + b·i.
class Fp2 {
public:
    Fp2() = default;
    Fp2(Fp a, Fp b);

    static Fp2 zero(const FieldPtr& f);
    static Fp2 one(const FieldPtr& f);

    const Fp& a() const { return a_; }
    const Fp& b() const { return b_; }
    const FieldPtr& field() const { return a_.field(); }
    bool is_null() const { return a_.is_null(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }

    Fp2 operator+(const Fp2& rhs) const;
    Fp2 operator-(const Fp2& rhs) const;
    Fp2 operator*(const Fp2& rhs) const;
    Fp2 operator-() const;

    Fp2 square() const;
    // a - b·i; this is also the Frobenius map x ↦ x^p here.
    Fp2 conj() const;
    // a² + b², the norm to F_p.
    Fp norm() const;
    // Inverse conj/norm; throws std::domain_error on zero.
    Fp2 inv() const;
    // Square-and-multiply; e >= 0.
    Fp2 pow(const BigInt& e) const;

    bool operator==(const Fp2& rhs) const = default;

private:
    Fp a_, b_;
};

}  // namespace aben
