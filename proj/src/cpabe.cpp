#include "aben/cpabe.hpp"

#include "aben/errors.hpp"
#include "aben/hash_to_group.hpp"

namespace aben {

AttributeSet CpPrivateKey::attributes() const {
    AttributeSet out;
    for (const auto& [attr, pair] : components) out.insert(attr);
    return out;
}

std::pair<CpPublicParams, CpMasterKey> cp_setup(const GroupParams& params,
                                                Rng& rng) {
    const CurvePoint& g = params.generator();
    // Both exponents nonzero: α = 0 would make ê(g,g)^α degenerate and β
    // must be invertible for key extraction.
    BigInt alpha = params.random_nonzero_scalar(rng);
    BigInt beta = params.random_nonzero_scalar(rng);

    CpPublicParams pk{params, g, scalar_mul(beta, g),
                      pairing(g, g, params).pow(alpha)};
    CpMasterKey mk{beta, scalar_mul(alpha, g)};
    return {std::move(pk), std::move(mk)};
}

CpPrivateKey cp_keygen(const CpPublicParams& pk, const CpMasterKey& mk,
                       const AttributeSet& attrs, Rng& rng) {
    if (attrs.empty()) throw EmptyAttributeSet("cp_keygen: no attributes");
    const GroupParams& gp = pk.params;

    BigInt u = gp.random_scalar(rng);
    BigInt beta_inv;
    if (mpz_invert(beta_inv.get_mpz_t(), mk.beta.get_mpz_t(),
                   gp.r().get_mpz_t()) == 0)
        throw Error("cp_keygen: master key beta is not invertible");

    CpPrivateKey sk;
    // d = g^((α+u)/β) assembled from the α-image: [β⁻¹](g^α + [u]g).
    CurvePoint g_u = scalar_mul(u, pk.g);
    sk.d = scalar_mul(beta_inv, point_add(mk.g_alpha, g_u));
    for (const std::string& attr : attrs) {
        BigInt uj = gp.random_scalar(rng);
        CurvePoint hj = hash_to_subgroup(attr, gp);
        CpKeyPair pair;
        pair.d_attr = point_add(g_u, scalar_mul(uj, hj));
        pair.d_rand = scalar_mul(uj, pk.g);
        sk.components.emplace(attr, std::move(pair));
    }
    return sk;
}

CpEncryption cp_encrypt(const CpPublicParams& pk, const AccessTree& policy,
                        Rng& rng) {
    const GroupParams& gp = pk.params;
    BigInt s = gp.random_scalar(rng);
    ShareMap shares = share_secret(policy, s, gp.r(), rng);

    std::vector<std::string> leaf_attrs = policy.leaf_attributes();
    std::vector<CpCtPair> leaves;
    leaves.reserve(leaf_attrs.size());
    for (size_t y = 0; y < leaf_attrs.size(); ++y) {
        CpCtPair pair;
        pair.c_leaf = scalar_mul(shares.shares[y], pk.g);
        pair.c_hash = scalar_mul(shares.shares[y],
                                 hash_to_subgroup(leaf_attrs[y], gp));
        leaves.push_back(std::move(pair));
    }
    CpHeader header{scalar_mul(s, pk.h_point), std::move(leaves), policy};
    return CpEncryption{std::move(header), pk.egg_alpha.pow(s)};
}

namespace {

// Lagrange-fold the pruned tree: leaves contribute ê(g,g)^{u·q_y(0)},
// every gate interpolates its children at 0.
GtElement fold(const PrunedNode& node, const CpPrivateKey& sk,
               const CpHeader& header, const GroupParams& gp) {
    if (node.is_leaf()) {
        const CpKeyPair& kp = sk.components.at(node.attribute);
        const CpCtPair& ct = header.leaves.at(node.leaf_position);
        GtElement num = pairing(kp.d_attr, ct.c_leaf, gp);
        GtElement den = pairing(kp.d_rand, ct.c_hash, gp);
        return num * den.inv();
    }
    std::vector<BigInt> points;
    points.reserve(node.children.size());
    for (const PrunedChild& c : node.children) points.emplace_back(c.index);
    GtElement acc = GtElement::one(gp.fq());
    for (const PrunedChild& c : node.children) {
        BigInt coeff = lagrange_coeff(BigInt(c.index), points, gp.r());
        acc = acc * fold(c.node, sk, header, gp).pow(coeff);
    }
    return acc;
}

}  // namespace

GtElement cp_decrypt(const CpPublicParams& pk, const CpPrivateKey& sk,
                     const CpHeader& header) {
    if (header.leaves.size() != header.policy.leaf_count())
        throw MalformedEnvelope(0, "header leaf components do not match policy");
    PrunedNode selected;
    try {
        selected = select_satisfying_subtree(header.policy, sk.attributes());
    } catch (const NotSatisfied&) {
        throw PolicyNotSatisfied(
            "cp_decrypt: key attributes do not satisfy the header policy");
    }
    // A_root = ê(g,g)^{u·s}; ê(c, d) = ê(g,g)^{(α+u)s}.
    GtElement a_root = fold(selected, sk, header, pk.params);
    return pairing(header.c, sk.d, pk.params) * a_root.inv();
}

}  // namespace aben
