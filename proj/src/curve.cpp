#include "aben/curve.hpp"

#include <stdexcept>

namespace aben {

CurvePoint CurvePoint::affine(Fp x, Fp y) {
    if (x.is_null() || y.is_null())
        throw std::logic_error("CurvePoint: null coordinate");
    if (x.field() != y.field() && x.field()->modulus() != y.field()->modulus())
        throw std::logic_error("CurvePoint: mixed fields");
    CurvePoint p;
    p.x_ = std::move(x);
    p.y_ = std::move(y);
    p.infinity_ = false;
    return p;
}

bool CurvePoint::operator==(const CurvePoint& rhs) const {
    if (infinity_ || rhs.infinity_) return infinity_ == rhs.infinity_;
    return x_ == rhs.x_ && y_ == rhs.y_;
}

Fp curve_rhs(const Fp& x) { return x * x * x + x; }

bool on_curve(const CurvePoint& p) {
    if (p.is_infinity()) return true;
    return p.y() * p.y() == curve_rhs(p.x());
}

CurvePoint point_neg(const CurvePoint& p) {
    if (p.is_infinity()) return p;
    return CurvePoint::affine(p.x(), -p.y());
}

CurvePoint point_double(const CurvePoint& p) {
    if (p.is_infinity()) return p;
    if (p.y().is_zero()) return CurvePoint::infinity();  // 2-torsion
    const FieldPtr& f = p.x().field();
    // λ = (3x² + 1) / 2y for y² = x³ + x.
    Fp x2 = p.x() * p.x();
    Fp lambda = (x2 + x2 + x2 + f->one()) * (p.y() + p.y()).inv();
    Fp x3 = lambda * lambda - p.x() - p.x();
    Fp y3 = lambda * (p.x() - x3) - p.y();
    return CurvePoint::affine(x3, y3);
}

CurvePoint point_add(const CurvePoint& p, const CurvePoint& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    if (p.x() == q.x()) {
        if (p.y() == q.y()) return point_double(p);
        return CurvePoint::infinity();  // q = −p
    }
    Fp lambda = (q.y() - p.y()) * (q.x() - p.x()).inv();
    Fp x3 = lambda * lambda - p.x() - q.x();
    Fp y3 = lambda * (p.x() - x3) - p.y();
    return CurvePoint::affine(x3, y3);
}

CurvePoint scalar_mul(const BigInt& k, const CurvePoint& p) {
    if (k < 0) throw std::invalid_argument("scalar_mul: negative scalar");
    if (k == 0 || p.is_infinity()) return CurvePoint::infinity();
    CurvePoint acc = CurvePoint::infinity();
    for (std::size_t i = bit_length(k); i-- > 0;) {
        acc = point_double(acc);
        if (mpz_tstbit(k.get_mpz_t(), i)) acc = point_add(acc, p);
    }
    return acc;
}

CurvePoint scalar_mul(const Fp& k, const CurvePoint& p) {
    return scalar_mul(k.value(), p);
}

}  // namespace aben
