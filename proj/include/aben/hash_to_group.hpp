#pragma once

#include <string_view>

#include "aben/params.hpp"

namespace aben {

// Hash an attribute string to a point of the order-r subgroup.
//
// Counter-mode try-and-increment: for counter c = 0, 1, 2, ...
//   x = SHA-256("ABEN-H2G" ‖ u32_be(c) ‖ label) widened to the byte width
//       of q (counter-chained digests), reduced mod q;
//   if x³ + x is a quadratic residue, y = (x³+x)^((q+1)/4), with y or −y
//   picked by one extra digest bit; the result is cleared by the cofactor h,
//   retrying from c+1 if that lands on infinity.
// Deterministic. Throws HashToPointFailure after 256 counters without
// success (probability ~2^-256; the bound exists so the loop is visibly
// finite).
CurvePoint hash_to_subgroup(std::string_view label, const GroupParams& params);

}  // namespace aben
