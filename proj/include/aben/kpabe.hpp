#pragma once

#include <map>
#include <utility>

#include "aben/pairing.hpp"
#include "aben/policy.hpp"
#include "aben/sharing.hpp"

namespace aben {

// Key-policy ABE (small universe) as a KEM: the attribute universe is fixed
// at setup, ciphertext headers carry attribute sets, keys carry policies.

struct KpPublicParams {
    GroupParams params;
    std::vector<std::string> universe;   // order is significant and serialized
    std::vector<CurvePoint> t_images;    // T_i = g^{t_i}, aligned with universe
    GtElement y_image;                   // Y = ê(g,g)^y

    // Index of an attribute in the universe; throws UnknownAttribute.
    size_t attribute_index(std::string_view attribute) const;
};

struct KpMasterKey {
    std::vector<BigInt> t_values;  // each t_i ≠ 0
    BigInt y_value;
};

struct KpPrivateKey {
    AccessTree policy;
    std::vector<CurvePoint> leaf_components;  // D_x = g^{q_x(0)/t_att(x)}, by leaf position
};

struct KpHeader {
    std::map<std::string, CurvePoint> e_components;  // attribute → T_i^s

    // The header's attribute set is exactly the component map's key set.
    AttributeSet attributes() const;
};

// t_i uniform nonzero (drawn in universe order), then y uniform.
// Throws DuplicateUniverseAttribute; universe must be non-empty and every
// entry a valid attribute token.
std::pair<KpPublicParams, KpMasterKey> kp_setup(
    const GroupParams& params, const std::vector<std::string>& universe,
    Rng& rng);

struct KpEncryption {
    KpHeader header;
    GtElement session;  // Y^s
};

// Draws s as its only randomness. Header carries |attrs| group elements.
// Throws UnknownAttribute (attrs ⊄ universe) or EmptyAttributeSet.
KpEncryption kp_encrypt(const KpPublicParams& pk, const AttributeSet& attrs,
                        Rng& rng);

// Shares y over the policy, then D_x = g^(q_x(0)·t_i⁻¹) per leaf.
// Component count = leaf count. Throws UnknownAttribute for leaves outside
// the universe.
KpPrivateKey kp_keygen(const KpPublicParams& pk, const KpMasterKey& mk,
                       const AccessTree& policy, Rng& rng);

// Recovers Y^s when the header's attributes satisfy the key policy; throws
// PolicyNotSatisfied otherwise.
GtElement kp_decrypt(const KpPublicParams& pk, const KpPrivateKey& sk,
                     const KpHeader& header);

}  // namespace aben
