#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "aben/cpabe.hpp"
#include "aben/digest.hpp"
#include "aben/kpabe.hpp"

namespace aben {

enum class Scheme : uint8_t { cp = 0x01, kp = 0x02 };

// KEM-DEM envelope: an ABE header encapsulating the session secret, plus an
// AES-256-GCM ciphertext of the payload under the derived key. The header
// digest lets any corruption of the header surface as MalformedEnvelope
// before decapsulation is attempted, and the header is additionally bound
// into the AEAD as associated data.
struct Envelope {
    Scheme scheme = Scheme::cp;
    std::vector<uint8_t> header_bytes;     // serialized Cp/KpHeader
    Digest256 header_digest{};             // SHA-256 of header_bytes
    std::array<uint8_t, 12> nonce{};
    std::vector<uint8_t> ciphertext;       // same length as the payload
    std::array<uint8_t, 16> tag{};
};

// SHA-256("ABEN-KDF-v1" ‖ canonical GT bytes).
std::array<uint8_t, 32> derive_key(const GtElement& k);

Envelope seal_cp(const CpPublicParams& pk, const AccessTree& policy,
                 std::span<const uint8_t> payload, Rng& rng);
Envelope seal_kp(const KpPublicParams& pk, const AttributeSet& attrs,
                 std::span<const uint8_t> payload, Rng& rng);

// Decapsulate, derive, verify, return the payload.
// Throws MalformedEnvelope (digest mismatch, scheme mismatch, header parse
// failure), PolicyNotSatisfied (honest key that fails the policy), or
// AuthenticationFailure (AEAD tag rejection).
std::vector<uint8_t> open_cp(const CpPublicParams& pk, const CpPrivateKey& sk,
                             const Envelope& env);
std::vector<uint8_t> open_kp(const KpPublicParams& pk, const KpPrivateKey& sk,
                             const Envelope& env);

}  // namespace aben
