#include "aben/digest.hpp"

#include <stdexcept>

#include <openssl/evp.h>

namespace aben {

Sha256::Sha256() {
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
        EVP_MD_CTX_free(ctx);
        throw std::runtime_error("SHA-256 init failed");
    }
    ctx_ = ctx;
}

Sha256::~Sha256() { EVP_MD_CTX_free(static_cast<EVP_MD_CTX*>(ctx_)); }

Sha256& Sha256::update(std::span<const std::uint8_t> data) {
    if (!data.empty() &&
        EVP_DigestUpdate(static_cast<EVP_MD_CTX*>(ctx_), data.data(),
                         data.size()) != 1)
        throw std::runtime_error("SHA-256 update failed");
    return *this;
}

Sha256& Sha256::update(std::string_view text) {
    return update(std::span(reinterpret_cast<const std::uint8_t*>(text.data()),
                            text.size()));
}

Sha256& Sha256::update_u32(std::uint32_t v) {
    std::uint8_t buf[4] = {static_cast<std::uint8_t>(v >> 24),
                           static_cast<std::uint8_t>(v >> 16),
                           static_cast<std::uint8_t>(v >> 8),
                           static_cast<std::uint8_t>(v)};
    return update(std::span<const std::uint8_t>(buf, 4));
}

Sha256& Sha256::update_u64(std::uint64_t v) {
    std::uint8_t buf[8];
    for (int i = 0; i < 8; ++i)
        buf[i] = static_cast<std::uint8_t>(v >> (56 - 8 * i));
    return update(std::span<const std::uint8_t>(buf, 8));
}

Digest256 Sha256::finish() {
    Digest256 out{};
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(static_cast<EVP_MD_CTX*>(ctx_), out.data(), &len) != 1 ||
        len != out.size())
        throw std::runtime_error("SHA-256 final failed");
    return out;
}

Digest256 sha256(std::span<const std::uint8_t> data) {
    Sha256 h;
    h.update(data);
    return h.finish();
}

}  // namespace aben
