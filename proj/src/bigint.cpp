#include "aben/bigint.hpp"

#include <cstring>
#include <stdexcept>

namespace aben {

void bigint_to_bytes(const BigInt& x, std::span<std::uint8_t> out) {
    if (x < 0) throw std::invalid_argument("bigint_to_bytes: negative value");
    std::size_t need = byte_length(x);
    if (need > out.size())
        throw std::invalid_argument("bigint_to_bytes: buffer too small");
    std::memset(out.data(), 0, out.size());
    if (need == 0) return;
    std::size_t written = 0;
    mpz_export(out.data() + (out.size() - need), &written, 1, 1, 1, 0,
               x.get_mpz_t());
}

BigInt bigint_from_hex(const std::string& hex) {
    if (hex.empty()) throw std::invalid_argument("bigint_from_hex: empty string");
    for (char c : hex) {
        bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') ||
                  (c >= 'A' && c <= 'F');
        if (!ok)
            throw std::invalid_argument(std::string("bigint_from_hex: bad digit '") +
                                        c + "'");
    }
    BigInt out;
    if (mpz_set_str(out.get_mpz_t(), hex.c_str(), 16) != 0)
        throw std::invalid_argument("bigint_from_hex: parse failure");
    return out;
}

}  // namespace aben
