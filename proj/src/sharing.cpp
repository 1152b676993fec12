#include "aben/sharing.hpp"

#include "aben/errors.hpp"

namespace aben {

namespace {

// Evaluate c_0 + c_1·x + … + c_{d}·x^d mod r by Horner.
BigInt poly_eval(const std::vector<BigInt>& coeffs, unsigned x, const BigInt& r) {
    BigInt acc = 0;
    for (size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * x + coeffs[i];
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), r.get_mpz_t());
    }
    return acc;
}

void share_node(const AccessNode& n, const BigInt& inherited, const BigInt& r,
                Rng& rng, std::vector<BigInt>& shares) {
    if (n.is_leaf()) {
        shares.push_back(inherited);
        return;
    }
    size_t arity = n.children().size();
    if (BigInt(static_cast<unsigned long>(arity)) >= r)
        throw DuplicateEvaluationPoint(
            "gate arity " + std::to_string(arity) +
            " needs evaluation points that collide mod r");
    // Degree k−1 polynomial with q(0) = inherited.
    std::vector<BigInt> coeffs;
    coeffs.reserve(n.threshold());
    coeffs.push_back(inherited);
    for (unsigned i = 1; i < n.threshold(); ++i)
        coeffs.push_back(rng.uniform_below(r));
    unsigned index = 0;
    for (const AccessNode& c : n.children())
        share_node(c, poly_eval(coeffs, ++index, r), r, rng, shares);
}

}  // namespace

ShareMap share_secret(const AccessTree& tree, const BigInt& secret,
                      const BigInt& r, Rng& rng) {
    if (secret < 0 || secret >= r)
        throw std::invalid_argument("share_secret: secret outside Z_r");
    ShareMap out;
    out.root_secret = secret;
    out.shares.reserve(tree.leaf_count());
    share_node(tree.root, secret, r, rng, out.shares);
    return out;
}

BigInt lagrange_coeff(const BigInt& i, const std::vector<BigInt>& s,
                      const BigInt& r) {
    auto reduced = [&](const BigInt& v) {
        BigInt m;
        mpz_mod(m.get_mpz_t(), v.get_mpz_t(), r.get_mpz_t());
        return m;
    };

    BigInt iv = reduced(i);
    std::vector<BigInt> pts;
    pts.reserve(s.size());
    bool found = false;
    for (const BigInt& j : s) {
        BigInt jv = reduced(j);
        if (jv == 0)
            throw DuplicateEvaluationPoint(
                "evaluation point is 0 mod r (collides with the target)");
        for (const BigInt& seen : pts)
            if (seen == jv)
                throw DuplicateEvaluationPoint(
                    "evaluation points collide mod r");
        if (jv == iv) found = true;
        pts.push_back(std::move(jv));
    }
    if (!found) throw Error("lagrange_coeff: i is not a member of S");

    // Δ_{i,S}(0) = ∏_{j≠i} (0−j)/(i−j)
    BigInt num = 1, den = 1;
    for (const BigInt& jv : pts) {
        if (jv == iv) continue;
        num = reduced(num * (r - jv));
        den = reduced(den * reduced(iv - jv + r));
    }
    BigInt den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), r.get_mpz_t()) == 0)
        throw DuplicateEvaluationPoint("degenerate denominator mod r");
    return reduced(num * den_inv);
}

}  // namespace aben
