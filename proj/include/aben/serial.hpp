#pragma once

#include <span>
#include <string>
#include <vector>

#include "aben/envelope.hpp"

namespace aben {

// Binary wire format shared by every object:
//   "ABEN" (4 bytes) | version 0x01 | object-type byte | security-level byte
// followed by the object's fields in declared order, each framed as
// u32-big-endian length + payload. Curve points are two big-endian field
// elements of fixed width ⌈bitlen(q)/8⌉ (infinity encodes as all zeroes —
// (0,0) has order 2 and never appears in honest data); GT elements likewise;
// scalars are ⌈bitlen(r)/8⌉ bytes; strings are u32-length-prefixed UTF-8;
// access trees travel as canonical infix policy text.
//
// Deserialization consumes the input exactly (trailing bytes are an error)
// and reports failures as MalformedKey / MalformedEnvelope carrying the byte
// offset and a reason.
//
// Public parameter blobs embed the GroupParams text block, so they are
// self-contained; every other object is deserialized against the params of
// the public key it belongs to.

std::vector<uint8_t> serialize_cp_public(const CpPublicParams& pk);
CpPublicParams deserialize_cp_public(std::span<const uint8_t> bytes);

std::vector<uint8_t> serialize_cp_master(const CpMasterKey& mk,
                                         const GroupParams& params);
CpMasterKey deserialize_cp_master(std::span<const uint8_t> bytes,
                                  const GroupParams& params);

std::vector<uint8_t> serialize_cp_key(const CpPrivateKey& sk,
                                      const GroupParams& params);
CpPrivateKey deserialize_cp_key(std::span<const uint8_t> bytes,
                                const GroupParams& params);

std::vector<uint8_t> serialize_cp_header(const CpHeader& header,
                                         const GroupParams& params);
CpHeader deserialize_cp_header(std::span<const uint8_t> bytes,
                               const GroupParams& params);

std::vector<uint8_t> serialize_kp_public(const KpPublicParams& pk);
KpPublicParams deserialize_kp_public(std::span<const uint8_t> bytes);

std::vector<uint8_t> serialize_kp_master(const KpMasterKey& mk,
                                         const GroupParams& params);
KpMasterKey deserialize_kp_master(std::span<const uint8_t> bytes,
                                  const GroupParams& params);

std::vector<uint8_t> serialize_kp_key(const KpPrivateKey& sk,
                                      const GroupParams& params);
KpPrivateKey deserialize_kp_key(std::span<const uint8_t> bytes,
                                const GroupParams& params);

std::vector<uint8_t> serialize_kp_header(const KpHeader& header,
                                         const GroupParams& params);
KpHeader deserialize_kp_header(std::span<const uint8_t> bytes,
                               const GroupParams& params);

std::vector<uint8_t> serialize_envelope(const Envelope& env);
Envelope deserialize_envelope(std::span<const uint8_t> bytes);

// Peek at the object-type byte of a serialized blob and report which scheme
// family it belongs to; MalformedKey if the preamble is unrecognizable.
Scheme blob_scheme(std::span<const uint8_t> bytes);

// Whole-file helpers; failures raise IoError with the path in the message.
std::vector<uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const uint8_t> bytes);

}  // namespace aben
