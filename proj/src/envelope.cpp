#include "aben/envelope.hpp"

#include <stdexcept>

#include <openssl/evp.h>

#include "aben/errors.hpp"
#include "aben/serial.hpp"

namespace aben {

namespace {

// Associated data binding the DEM to the KEM side: scheme tag, serialized
// header, and its digest all become part of what the tag authenticates.
std::vector<uint8_t> aad_bytes(const Envelope& env) {
    static constexpr char tag[] = "ABEN-AAD-v1";
    std::vector<uint8_t> aad(tag, tag + sizeof(tag) - 1);
    aad.push_back(static_cast<uint8_t>(env.scheme));
    aad.insert(aad.end(), env.header_bytes.begin(), env.header_bytes.end());
    aad.insert(aad.end(), env.header_digest.begin(), env.header_digest.end());
    return aad;
}

struct CipherCtx {
    EVP_CIPHER_CTX* ctx;
    CipherCtx() : ctx(EVP_CIPHER_CTX_new()) {
        if (!ctx) throw std::runtime_error("AES-GCM: context allocation failed");
    }
    ~CipherCtx() { EVP_CIPHER_CTX_free(ctx); }
};

void aead_seal(const std::array<uint8_t, 32>& key,
               const std::array<uint8_t, 12>& nonce,
               std::span<const uint8_t> aad, std::span<const uint8_t> plaintext,
               std::vector<uint8_t>& ciphertext, std::array<uint8_t, 16>& tag) {
    CipherCtx c;
    int len = 0;
    if (EVP_EncryptInit_ex(c.ctx, EVP_aes_256_gcm(), nullptr, nullptr, nullptr) != 1 ||
        EVP_CIPHER_CTX_ctrl(c.ctx, EVP_CTRL_GCM_SET_IVLEN, 12, nullptr) != 1 ||
        EVP_EncryptInit_ex(c.ctx, nullptr, nullptr, key.data(), nonce.data()) != 1)
        throw std::runtime_error("AES-GCM: encrypt init failed");
    if (!aad.empty() &&
        EVP_EncryptUpdate(c.ctx, nullptr, &len, aad.data(),
                          static_cast<int>(aad.size())) != 1)
        throw std::runtime_error("AES-GCM: AAD failed");
    ciphertext.resize(plaintext.size());
    if (!plaintext.empty() &&
        EVP_EncryptUpdate(c.ctx, ciphertext.data(), &len, plaintext.data(),
                          static_cast<int>(plaintext.size())) != 1)
        throw std::runtime_error("AES-GCM: encrypt failed");
    uint8_t scratch[16];  // GCM final emits no bytes
    if (EVP_EncryptFinal_ex(c.ctx, scratch, &len) != 1 ||
        EVP_CIPHER_CTX_ctrl(c.ctx, EVP_CTRL_GCM_GET_TAG, 16, tag.data()) != 1)
        throw std::runtime_error("AES-GCM: tag extraction failed");
}

std::vector<uint8_t> aead_open(const std::array<uint8_t, 32>& key,
                               const std::array<uint8_t, 12>& nonce,
                               std::span<const uint8_t> aad,
                               std::span<const uint8_t> ciphertext,
                               const std::array<uint8_t, 16>& tag) {
    CipherCtx c;
    int len = 0;
    if (EVP_DecryptInit_ex(c.ctx, EVP_aes_256_gcm(), nullptr, nullptr, nullptr) != 1 ||
        EVP_CIPHER_CTX_ctrl(c.ctx, EVP_CTRL_GCM_SET_IVLEN, 12, nullptr) != 1 ||
        EVP_DecryptInit_ex(c.ctx, nullptr, nullptr, key.data(), nonce.data()) != 1)
        throw std::runtime_error("AES-GCM: decrypt init failed");
    if (!aad.empty() &&
        EVP_DecryptUpdate(c.ctx, nullptr, &len, aad.data(),
                          static_cast<int>(aad.size())) != 1)
        throw std::runtime_error("AES-GCM: AAD failed");
    std::vector<uint8_t> plaintext(ciphertext.size());
    if (!ciphertext.empty() &&
        EVP_DecryptUpdate(c.ctx, plaintext.data(), &len, ciphertext.data(),
                          static_cast<int>(ciphertext.size())) != 1)
        throw std::runtime_error("AES-GCM: decrypt failed");
    if (EVP_CIPHER_CTX_ctrl(c.ctx, EVP_CTRL_GCM_SET_TAG, 16,
                            const_cast<uint8_t*>(tag.data())) != 1)
        throw std::runtime_error("AES-GCM: tag set failed");
    uint8_t scratch[16];
    if (EVP_DecryptFinal_ex(c.ctx, scratch, &len) != 1)
        throw AuthenticationFailure("payload tag verification failed");
    return plaintext;
}

Envelope assemble(Scheme scheme, std::vector<uint8_t> header_bytes,
                  const GtElement& session, std::span<const uint8_t> payload,
                  Rng& rng) {
    Envelope env;
    env.scheme = scheme;
    env.header_bytes = std::move(header_bytes);
    env.header_digest = sha256(env.header_bytes);
    rng.fill(env.nonce);
    aead_seal(derive_key(session), env.nonce, aad_bytes(env), payload,
              env.ciphertext, env.tag);
    return env;
}

void check_envelope(const Envelope& env, Scheme expected) {
    if (sha256(env.header_bytes) != env.header_digest)
        throw MalformedEnvelope(0, "header digest mismatch");
    if (env.scheme != expected)
        throw MalformedEnvelope(0, "envelope was sealed under the other scheme");
}

}  // namespace

std::array<uint8_t, 32> derive_key(const GtElement& k) {
    Sha256 h;
    h.update("ABEN-KDF-v1");
    std::vector<uint8_t> bytes = k.to_bytes();
    h.update(std::span<const uint8_t>(bytes.data(), bytes.size()));
    return h.finish();
}

Envelope seal_cp(const CpPublicParams& pk, const AccessTree& policy,
                 std::span<const uint8_t> payload, Rng& rng) {
    CpEncryption enc = cp_encrypt(pk, policy, rng);
    return assemble(Scheme::cp, serialize_cp_header(enc.header, pk.params),
                    enc.session, payload, rng);
}

Envelope seal_kp(const KpPublicParams& pk, const AttributeSet& attrs,
                 std::span<const uint8_t> payload, Rng& rng) {
    KpEncryption enc = kp_encrypt(pk, attrs, rng);
    return assemble(Scheme::kp, serialize_kp_header(enc.header, pk.params),
                    enc.session, payload, rng);
}

std::vector<uint8_t> open_cp(const CpPublicParams& pk, const CpPrivateKey& sk,
                             const Envelope& env) {
    check_envelope(env, Scheme::cp);
    CpHeader header = deserialize_cp_header(env.header_bytes, pk.params);
    GtElement session = cp_decrypt(pk, sk, header);
    return aead_open(derive_key(session), env.nonce, aad_bytes(env),
                     env.ciphertext, env.tag);
}

std::vector<uint8_t> open_kp(const KpPublicParams& pk, const KpPrivateKey& sk,
                             const Envelope& env) {
    check_envelope(env, Scheme::kp);
    KpHeader header = deserialize_kp_header(env.header_bytes, pk.params);
    GtElement session = kp_decrypt(pk, sk, header);
    return aead_open(derive_key(session), env.nonce, aad_bytes(env),
                     env.ciphertext, env.tag);
}

}  // namespace aben
