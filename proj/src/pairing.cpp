#include "aben/pairing.hpp"

#include <stdexcept>

#include "aben/errors.hpp"

namespace aben {

GtElement GtElement::one(const FieldPtr& fq) { return GtElement(Fp2::one(fq)); }

GtElement GtElement::operator*(const GtElement& rhs) const {
    return GtElement(v_ * rhs.v_);
}

GtElement GtElement::inv() const { return GtElement(v_.inv()); }

GtElement GtElement::pow(const BigInt& e) const {
    if (e < 0) return GtElement(v_.inv().pow(-e));
    return GtElement(v_.pow(e));
}

std::vector<uint8_t> GtElement::to_bytes() const {
    if (v_.is_null()) throw std::logic_error("GtElement: null element");
    std::size_t w = v_.field()->byte_width();
    std::vector<uint8_t> out(2 * w);
    v_.a().to_bytes(std::span<uint8_t>(out.data(), w));
    v_.b().to_bytes(std::span<uint8_t>(out.data() + w, w));
    return out;
}

namespace {

// Line through V with slope λ, evaluated at the distorted point
// φ(Q) = (−x_Q, i·y_Q): the value is λ·(x_Q + x_V) − y_V + i·y_Q.
// Vertical lines are never materialized — their values land in F_q and are
// erased by the final exponentiation (denominator elimination), so callers
// substitute 1.
Fp2 line_value(const Fp& lambda, const CurvePoint& v, const CurvePoint& q) {
    return Fp2(lambda * (q.x() + v.x()) - v.y(), q.y());
}

}  // namespace

GtElement pairing(const CurvePoint& p, const CurvePoint& q,
                  const GroupParams& params) {
    const FieldPtr& fq = params.fq();
    if (p.is_infinity() || q.is_infinity()) return GtElement::one(fq);

    const BigInt& r = params.r();
    Fp2 f = Fp2::one(fq);
    CurvePoint v = p;

    // Miller loop over the bits of r, MSB first with the top bit implicit.
    // After the loop v = [r]p, which must be infinity for subgroup members.
    for (std::size_t i = bit_length(r) - 1; i-- > 0;) {
        f = f.square();
        if (!v.is_infinity()) {
            if (v.y().is_zero()) {
                // Vertical tangent (2-torsion); factor eliminated.
                v = CurvePoint::infinity();
            } else {
                Fp x2 = v.x() * v.x();
                Fp lambda = (x2 + x2 + x2 + fq->one()) * (v.y() + v.y()).inv();
                Fp2 val = line_value(lambda, v, q);
                if (!val.is_zero()) f = f * val;
                Fp x3 = lambda * lambda - v.x() - v.x();
                Fp y3 = lambda * (v.x() - x3) - v.y();
                v = CurvePoint::affine(x3, y3);
            }
        }
        if (mpz_tstbit(r.get_mpz_t(), i)) {
            if (v.is_infinity() || v.x() == p.x()) {
                // Chord is vertical (or v is the identity); eliminated.
                v = point_add(v, p);
            } else {
                Fp lambda = (p.y() - v.y()) * (p.x() - v.x()).inv();
                Fp2 val = line_value(lambda, v, q);
                if (!val.is_zero()) f = f * val;
                Fp x3 = lambda * lambda - v.x() - p.x();
                Fp y3 = lambda * (v.x() - x3) - v.y();
                v = CurvePoint::affine(x3, y3);
            }
        }
    }
    if (!v.is_infinity())
        throw NotInSubgroup("pairing: left input is not killed by r");
    if (f.is_zero())
        throw NotInSubgroup("pairing: degenerate Miller value");

    // Final exponentiation to the power (q²−1)/r = (q−1)·h. The Frobenius
    // x ↦ x^q is conjugation here, so f^(q−1) = conj(f)·f⁻¹; then raise to h.
    Fp2 unitary = f.conj() * f.inv();
    return GtElement(unitary.pow(params.h()));
}

}  // namespace aben
