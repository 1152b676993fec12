#pragma once

#include "aben/field.hpp"

namespace aben {

// Affine point on the supersingular curve y² = x³ + x over F_q, plus the
// point at infinity. The curve coefficient pair (a=1, b=0) is fixed for the
// whole library.
class CurvePoint {
public:
    // Point at infinity (the group identity).
    CurvePoint() = default;

    static CurvePoint infinity() { return CurvePoint{}; }
    // Does not validate the curve equation; see on_curve().
    static CurvePoint affine(Fp x, Fp y);

    bool is_infinity() const { return infinity_; }
    const Fp& x() const { return x_; }
    const Fp& y() const { return y_; }

    bool operator==(const CurvePoint& rhs) const;
    bool operator!=(const CurvePoint& rhs) const = default;

private:
    Fp x_, y_;
    bool infinity_ = true;
};

// Right-hand side x³ + x of the curve equation.
Fp curve_rhs(const Fp& x);

// True for infinity or any (x, y) with y² = x³ + x.
bool on_curve(const CurvePoint& p);

CurvePoint point_neg(const CurvePoint& p);
CurvePoint point_add(const CurvePoint& p, const CurvePoint& q);
CurvePoint point_double(const CurvePoint& p);

// [k]P by double-and-add, k >= 0. No window/precomputation tables by design:
// timings reflect the plain algorithm.
CurvePoint scalar_mul(const BigInt& k, const CurvePoint& p);
CurvePoint scalar_mul(const Fp& k, const CurvePoint& p);

}  // namespace aben
