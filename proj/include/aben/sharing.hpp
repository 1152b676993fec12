#pragma once

#include "aben/bigint.hpp"
#include "aben/policy.hpp"
#include "aben/rng.hpp"

namespace aben {

// Secret shares for the leaves of one access tree, keyed by leaf position.
struct ShareMap {
    BigInt root_secret;
    std::vector<BigInt> shares;  // one entry per leaf, in leaf-position order
};

// Top-down polynomial sharing over Z_r: every gate gets a uniform random
// polynomial of degree k−1 whose constant term is the value inherited from
// above (the root inherits `secret`); child i inherits q(i). Leaves keep
// their inherited value as the share.
// Requires every gate arity n < r so the evaluation points 1..n stay
// distinct and nonzero mod r; otherwise DuplicateEvaluationPoint.
ShareMap share_secret(const AccessTree& tree, const BigInt& secret,
                      const BigInt& r, Rng& rng);

// Lagrange coefficient Δ_{i,S}(0) = ∏_{j∈S, j≠i} (0−j)·(i−j)⁻¹ mod r.
// Preconditions: i ∈ S; elements of S distinct and nonzero mod r
// (DuplicateEvaluationPoint otherwise).
BigInt lagrange_coeff(const BigInt& i, const std::vector<BigInt>& s,
                      const BigInt& r);

}  // namespace aben
