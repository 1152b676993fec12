#pragma once

#include <vector>

#include "aben/fp2.hpp"
#include "aben/params.hpp"

namespace aben {

// Element of the order-r subgroup of F_{q²}^* (image of the reduced Tate
// pairing after final exponentiation).
class GtElement {
public:
    GtElement() = default;
    explicit GtElement(Fp2 v) : v_(std::move(v)) {}

    static GtElement one(const FieldPtr& fq);

    const Fp2& value() const { return v_; }
    bool is_null() const { return v_.is_null(); }
    bool is_one() const { return v_.is_one(); }

    GtElement operator*(const GtElement& rhs) const;
    GtElement inv() const;
    GtElement pow(const BigInt& e) const;  // e may be negative

    bool operator==(const GtElement& rhs) const = default;

    // Canonical fixed-width encoding: a ‖ b of the Fp2 value a + b·i, each
    // coordinate big-endian padded to the byte width of q.
    std::vector<uint8_t> to_bytes() const;

private:
    Fp2 v_;
};

// Reduced Tate pairing ê(P, Q) with the distortion map φ(x, y) = (−x, i·y)
// folded in, so both inputs live in the order-r subgroup of E(F_q).
// Throws NotInSubgroup if P is not killed by r ([r]P ≠ ∞, detected at the
// end of the Miller loop) and treats either input being infinity as the
// identity of Gt. Symmetric: ê(P, Q) = ê(Q, P).
GtElement pairing(const CurvePoint& p, const CurvePoint& q,
                  const GroupParams& params);

}  // namespace aben
