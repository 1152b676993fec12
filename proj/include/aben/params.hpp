#pragma once

#include <string>

#include "aben/curve.hpp"
#include "aben/field.hpp"
#include "aben/rng.hpp"

namespace aben {

struct GenOptions {
    unsigned max_q_trials = 100000;  // attempts at q for one candidate r
    int primality_rounds = 64;       // Miller-Rabin rounds via mpz_probab_prime_p
};

// Type-A pairing group: supersingular curve y² = x³ + x over F_q with
// q ≡ 3 (mod 4), q + 1 = h·r, r prime. G1 = G2 = order-r subgroup of
// E(F_q); the target group lives in F_{q²}.
class GroupParams {
public:
    // Generate fresh parameters for a named security level (80, 112 or 128).
    static GroupParams generate(int security_level, Rng& rng,
                                const GenOptions& opts = {});

    // Assemble from raw values, validating the algebra (q prime, q ≡ 3 mod 4,
    // r prime, q + 1 = h·r, generator on curve, order r). security_level 0
    // means "custom": bit-length requirements are not enforced. Levels
    // 80/112/128 additionally pin the exact bit lengths of r and q.
    static GroupParams from_values(const BigInt& q, const BigInt& r,
                                   const BigInt& h, const BigInt& gx,
                                   const BigInt& gy, int security_level);

    // Text form, e.g. for a params file:
    //   type=a
    //   q=<hex>
    //   r=<hex>
    //   h=<hex>
    //   gx=<hex>
    //   gy=<hex>
    //   level=<decimal>
    // Lowercase hex, no 0x prefix, one key=value per line, in this order.
    static GroupParams parse_text(const std::string& text);
    std::string to_text() const;

    const BigInt& q() const { return q_; }
    const BigInt& r() const { return r_; }
    const BigInt& h() const { return h_; }
    int security_level() const { return level_; }
    const CurvePoint& generator() const { return gen_; }

    // Field of definition F_q and scalar field F_r.
    const FieldPtr& fq() const { return fq_; }
    const FieldPtr& fr() const { return fr_; }

    // Uniform scalar in [0, r).
    BigInt random_scalar(Rng& rng) const;
    // Uniform scalar in [1, r).
    BigInt random_nonzero_scalar(Rng& rng) const;
    // Uniform point of E(F_q) (including possibly infinity is excluded:
    // resamples until a finite point is found).
    CurvePoint random_curve_point(Rng& rng) const;
    // Uniform non-identity point of the order-r subgroup.
    CurvePoint random_subgroup_point(Rng& rng) const;

private:
    GroupParams() = default;

    BigInt q_, r_, h_;
    int level_ = 0;
    CurvePoint gen_;
    FieldPtr fq_, fr_;
};

}  // namespace aben
