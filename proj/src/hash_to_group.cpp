#include "aben/hash_to_group.hpp"

#include "aben/digest.hpp"
#include "aben/errors.hpp"

namespace aben {

namespace {

// Expand "ABEN-H2G" ‖ u32(counter) ‖ label to `width` bytes by chaining
// sub-digests, then one extra byte for the square-root sign.
std::vector<uint8_t> expand(std::string_view label, uint32_t counter,
                            std::size_t width) {
    std::vector<uint8_t> out;
    out.reserve(width + 1);
    uint32_t block = 0;
    while (out.size() < width + 1) {
        Sha256 h;
        h.update("ABEN-H2G");
        h.update_u32(counter);
        h.update_u32(block++);
        h.update(label);
        Digest256 d = h.finish();
        out.insert(out.end(), d.begin(), d.end());
    }
    out.resize(width + 1);
    return out;
}

}  // namespace

CurvePoint hash_to_subgroup(std::string_view label, const GroupParams& params) {
    const FieldPtr& fq = params.fq();
    for (uint32_t counter = 0; counter < 256; ++counter) {
        std::vector<uint8_t> bytes = expand(label, counter, fq->byte_width());
        uint8_t sign = bytes.back();
        bytes.pop_back();
        Fp x = fq->from_bytes(bytes);
        Fp rhs = curve_rhs(x);
        if (rhs.legendre() < 0) continue;
        Fp y = rhs.sqrt();
        if ((sign & 1) != 0) y = -y;
        CurvePoint p = scalar_mul(params.h(), CurvePoint::affine(x, y));
        if (!p.is_infinity()) return p;
    }
    throw HashToPointFailure("hash_to_subgroup: counter space exhausted");
}

}  // namespace aben
