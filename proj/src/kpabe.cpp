#include "aben/kpabe.hpp"

#include <set>

#include "aben/errors.hpp"

namespace aben {

size_t KpPublicParams::attribute_index(std::string_view attribute) const {
    for (size_t i = 0; i < universe.size(); ++i)
        if (universe[i] == attribute) return i;
    throw UnknownAttribute("attribute \"" + std::string(attribute) +
                           "\" is not in the universe");
}

AttributeSet KpHeader::attributes() const {
    AttributeSet out;
    for (const auto& [attr, point] : e_components) out.insert(attr);
    return out;
}

std::pair<KpPublicParams, KpMasterKey> kp_setup(
    const GroupParams& params, const std::vector<std::string>& universe,
    Rng& rng) {
    if (universe.empty())
        throw EmptyAttributeSet("kp_setup: empty attribute universe");
    std::set<std::string> seen;
    for (const std::string& a : universe) {
        if (!is_valid_attribute(a))
            throw SyntaxError(0, {"attribute"}, "invalid attribute \"" + a + "\"");
        if (!seen.insert(a).second)
            throw DuplicateUniverseAttribute("attribute \"" + a +
                                             "\" repeats in the universe");
    }

    const CurvePoint& g = params.generator();
    std::vector<CurvePoint> t_images;
    KpMasterKey mk;
    t_images.reserve(universe.size());
    mk.t_values.reserve(universe.size());
    for (size_t i = 0; i < universe.size(); ++i) {
        BigInt t = params.random_nonzero_scalar(rng);
        t_images.push_back(scalar_mul(t, g));
        mk.t_values.push_back(std::move(t));
    }
    // y ≠ 0 keeps Y = ê(g,g)^y non-degenerate.
    mk.y_value = params.random_nonzero_scalar(rng);
    KpPublicParams pk{params, universe, std::move(t_images),
                      pairing(g, g, params).pow(mk.y_value)};
    return {std::move(pk), std::move(mk)};
}

KpEncryption kp_encrypt(const KpPublicParams& pk, const AttributeSet& attrs,
                        Rng& rng) {
    if (attrs.empty()) throw EmptyAttributeSet("kp_encrypt: no attributes");
    KpEncryption out;
    BigInt s = pk.params.random_scalar(rng);
    for (const std::string& attr : attrs) {
        size_t i = pk.attribute_index(attr);
        out.header.e_components.emplace(attr, scalar_mul(s, pk.t_images[i]));
    }
    out.session = pk.y_image.pow(s);
    return out;
}

KpPrivateKey kp_keygen(const KpPublicParams& pk, const KpMasterKey& mk,
                       const AccessTree& policy, Rng& rng) {
    if (mk.t_values.size() != pk.universe.size())
        throw MalformedKey(0, "master key does not match the universe size");
    std::vector<std::string> leaf_attrs = policy.leaf_attributes();
    std::vector<size_t> leaf_index;
    leaf_index.reserve(leaf_attrs.size());
    for (const std::string& attr : leaf_attrs)
        leaf_index.push_back(pk.attribute_index(attr));

    ShareMap shares = share_secret(policy, mk.y_value, pk.params.r(), rng);
    std::vector<CurvePoint> leaf_components;
    leaf_components.reserve(leaf_attrs.size());
    for (size_t x = 0; x < leaf_attrs.size(); ++x) {
        BigInt t_inv;
        if (mpz_invert(t_inv.get_mpz_t(),
                       mk.t_values[leaf_index[x]].get_mpz_t(),
                       pk.params.r().get_mpz_t()) == 0)
            throw Error("kp_keygen: master key t value is not invertible");
        BigInt exp = shares.shares[x] * t_inv;
        mpz_mod(exp.get_mpz_t(), exp.get_mpz_t(), pk.params.r().get_mpz_t());
        leaf_components.push_back(scalar_mul(exp, pk.params.generator()));
    }
    return KpPrivateKey{policy, std::move(leaf_components)};
}

namespace {

GtElement fold(const PrunedNode& node, const KpPrivateKey& sk,
               const KpHeader& header, const GroupParams& gp) {
    if (node.is_leaf()) {
        // F_x = ê(D_x, E_i) = ê(g,g)^{s·q_x(0)}
        return pairing(sk.leaf_components.at(node.leaf_position),
                       header.e_components.at(node.attribute), gp);
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

GtElement kp_decrypt(const KpPublicParams& pk, const KpPrivateKey& sk,
                     const KpHeader& header) {
    if (sk.leaf_components.size() != sk.policy.leaf_count())
        throw MalformedKey(0, "key leaf components do not match policy");
    PrunedNode selected;
    try {
        selected = select_satisfying_subtree(sk.policy, header.attributes());
    } catch (const NotSatisfied&) {
        throw PolicyNotSatisfied(
            "kp_decrypt: header attributes do not satisfy the key policy");
    }
    return fold(selected, sk, header, pk.params);
}

}  // namespace aben
