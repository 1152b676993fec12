#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace aben {

using Digest256 = std::array<std::uint8_t, 32>;

// Incremental SHA-256. Thin wrapper so callers never touch the backing
// crypto library directly.
class Sha256 {
public:
    Sha256();
    ~Sha256();
    Sha256(const Sha256&) = delete;
    Sha256& operator=(const Sha256&) = delete;

    Sha256& update(std::span<const std::uint8_t> data);
    Sha256& update(std::string_view text);
    Sha256& update_u32(std::uint32_t v);  // big-endian
    Sha256& update_u64(std::uint64_t v);  // big-endian
    Digest256 finish();

private:
    void* ctx_;
};

Digest256 sha256(std::span<const std::uint8_t> data);

}  // namespace aben
