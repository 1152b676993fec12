#pragma once

#include <map>
#include <utility>

#include "aben/pairing.hpp"
#include "aben/policy.hpp"
#include "aben/sharing.hpp"

namespace aben {

// Ciphertext-policy ABE as a key encapsulation mechanism: the policy rides
// with the header, attribute sets live in keys, and Encrypt outputs a GT
// session secret instead of multiplying a message into GT.

struct CpPublicParams {
    GroupParams params;
    CurvePoint g;          // subgroup generator
    CurvePoint h_point;    // g^β
    GtElement egg_alpha;   // ê(g,g)^α
};

struct CpMasterKey {
    BigInt beta;           // β ≠ 0
    CurvePoint g_alpha;    // g^α
};

// Per-attribute key material: d_attr = g^u · H(j)^{u_j}, d_rand = g^{u_j}.
struct CpKeyPair {
    CurvePoint d_attr;
    CurvePoint d_rand;
};

struct CpPrivateKey {
    CurvePoint d;  // g^((α+u)/β)
    std::map<std::string, CpKeyPair> components;

    // The key's attribute set is exactly the component map's key set.
    AttributeSet attributes() const;
};

// Per-leaf ciphertext material: c_leaf = g^{q_y(0)}, c_hash = H(att(y))^{q_y(0)}.
struct CpCtPair {
    CurvePoint c_leaf;
    CurvePoint c_hash;
};

struct CpHeader {
    CurvePoint c;  // h_point^s
    std::vector<CpCtPair> leaves;  // one per policy leaf, by leaf position
    AccessTree policy;
};

// α, β uniform with β ≠ 0; draws α then β from rng.
std::pair<CpPublicParams, CpMasterKey> cp_setup(const GroupParams& params,
                                                Rng& rng);

// Key over an attribute set: d = g^((α+u)/β) computed as [β⁻¹](g^α + [u]g),
// plus one CpKeyPair per attribute. Draws u first, then u_j per attribute
// in lexicographic order. 2·|attrs| + 1 group elements total.
// Throws EmptyAttributeSet.
CpPrivateKey cp_keygen(const CpPublicParams& pk, const CpMasterKey& mk,
                       const AttributeSet& attrs, Rng& rng);

struct CpEncryption {
    CpHeader header;
    GtElement session;  // ê(g,g)^{αs}; feed to derive_key, never stored
};

// Draws s first, then the sharing polynomials (share_secret order).
// Header carries 2·(leaf count) + 1 group elements.
CpEncryption cp_encrypt(const CpPublicParams& pk, const AccessTree& policy,
                        Rng& rng);

// Recovers ê(g,g)^{αs} when the key's attributes satisfy the header policy;
// throws PolicyNotSatisfied otherwise.
GtElement cp_decrypt(const CpPublicParams& pk, const CpPrivateKey& sk,
                     const CpHeader& header);

}  // namespace aben
