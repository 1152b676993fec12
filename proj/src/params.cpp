#include "aben/params.hpp"

#include <sstream>
#include <utility>

#include "aben/errors.hpp"

namespace aben {

namespace {

// Exact (r, q) bit lengths per named security level.
std::pair<std::size_t, std::size_t> level_bits(int level) {
    switch (level) {
        case 80: return {160, 512};
        case 112: return {224, 1024};
        case 128: return {256, 1536};
        default:
            throw Error("group params: unsupported security level " +
                        std::to_string(level));
    }
}

bool is_probable_prime(const BigInt& n, int rounds) {
    return mpz_probab_prime_p(n.get_mpz_t(), rounds) >= 1;
}

// Uniform point of E(F_q); sampling x until x³+x is square, y sign by one
// rng bit.
CurvePoint sample_curve_point(const FieldPtr& fq, Rng& rng) {
    for (;;) {
        Fp x = fq->element(rng.uniform_below(fq->modulus()));
        Fp rhs = curve_rhs(x);
        int leg = rhs.legendre();
        if (leg < 0) continue;
        Fp y = rhs.sqrt();
        if ((rng.byte() & 1) != 0) y = -y;
        return CurvePoint::affine(x, y);
    }
}

}  // namespace

GroupParams GroupParams::generate(int security_level, Rng& rng,
                                  const GenOptions& opts) {
    auto [rbits, qbits] = level_bits(security_level);

    BigInt r;
    bool have_r = false;
    for (unsigned trial = 0; trial < opts.max_q_trials; ++trial) {
        BigInt cand = rng.uniform_bits(rbits);
        mpz_setbit(cand.get_mpz_t(), 0);  // odd
        if (bit_length(cand) == rbits &&
            is_probable_prime(cand, opts.primality_rounds)) {
            r = cand;
            have_r = true;
            break;
        }
    }
    if (!have_r)
        throw ParameterSearchExhausted("no prime r found within budget");

    // q = 4·m·r − 1 is 3 mod 4 by construction; pick m so q has exactly
    // qbits bits.
    BigInt lo = ((BigInt(1) << (qbits - 1)) + 4 * r - 1) / (4 * r);  // ceil
    BigInt hi = (BigInt(1) << qbits) / (4 * r);                      // floor
    if (lo > hi)
        throw ParameterSearchExhausted("empty multiplier range for q search");

    BigInt span = hi - lo + 1;
    for (unsigned trial = 0; trial < opts.max_q_trials; ++trial) {
        BigInt m = lo + rng.uniform_below(span);
        BigInt q = 4 * m * r - 1;
        if (bit_length(q) != qbits) continue;
        if (!is_probable_prime(q, opts.primality_rounds)) continue;

        BigInt h = 4 * m;
        FieldPtr fq = PrimeField::create(q);
        CurvePoint gen;
        do {
            gen = scalar_mul(h, sample_curve_point(fq, rng));
        } while (gen.is_infinity());
        return from_values(q, r, h, gen.x().value(), gen.y().value(),
                           security_level);
    }
    throw ParameterSearchExhausted("no prime q = 4mr-1 found within budget");
}

GroupParams GroupParams::from_values(const BigInt& q, const BigInt& r,
                                     const BigInt& h, const BigInt& gx,
                                     const BigInt& gy, int security_level) {
    if (q < 3 || !is_probable_prime(q, 64))
        throw Error("group params: q is not prime");
    if (mpz_fdiv_ui(q.get_mpz_t(), 4) != 3)
        throw Error("group params: q is not 3 mod 4");
    if (r < 3 || mpz_even_p(r.get_mpz_t()) || !is_probable_prime(r, 64))
        throw Error("group params: r is not an odd prime");
    if (h < 4 || mpz_fdiv_ui(h.get_mpz_t(), 4) != 0)
        throw Error("group params: cofactor is not a positive multiple of 4");
    if (q + 1 != h * r)
        throw Error("group params: q + 1 != h * r");
    if (security_level != 0) {
        auto [rbits, qbits] = level_bits(security_level);
        if (bit_length(r) != rbits || bit_length(q) != qbits)
            throw Error("group params: bit lengths do not match level " +
                        std::to_string(security_level));
    }

    GroupParams p;
    p.q_ = q;
    p.r_ = r;
    p.h_ = h;
    p.level_ = security_level;
    p.fq_ = PrimeField::create(q);
    p.fr_ = PrimeField::create(r);

    auto x = p.fq_->element_canonical(gx);
    auto y = p.fq_->element_canonical(gy);
    if (!x || !y)
        throw Error("group params: generator coordinate out of range");
    CurvePoint g = CurvePoint::affine(*x, *y);
    if (!on_curve(g))
        throw Error("group params: generator is not on the curve");
    if (g.is_infinity() || !scalar_mul(r, g).is_infinity())
        throw Error("group params: generator does not have order r");
    p.gen_ = g;
    return p;
}

std::string GroupParams::to_text() const {
    if (level_ != 80 && level_ != 112 && level_ != 128)
        throw Error("group params: refusing to serialize custom level " +
                    std::to_string(level_));
    std::ostringstream os;
    os << "type=a\n"
       << "q=" << bigint_to_hex(q_) << "\n"
       << "r=" << bigint_to_hex(r_) << "\n"
       << "h=" << bigint_to_hex(h_) << "\n"
       << "gx=" << bigint_to_hex(gen_.x().value()) << "\n"
       << "gy=" << bigint_to_hex(gen_.y().value()) << "\n"
       << "level=" << level_ << "\n";
    return os.str();
}

GroupParams GroupParams::parse_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::pair<std::string, std::string>> kv;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error("group params: missing '=' in line \"" + line + "\"");
        kv.emplace_back(line.substr(0, eq), line.substr(eq + 1));
    }
    static const char* expected[] = {"type", "q", "r", "h", "gx", "gy", "level"};
    if (kv.size() != 7)
        throw Error("group params: expected 7 lines, got " +
                    std::to_string(kv.size()));
    for (std::size_t i = 0; i < 7; ++i)
        if (kv[i].first != expected[i])
            throw Error("group params: line " + std::to_string(i + 1) +
                        " must be \"" + expected[i] + "=...\"");
    if (kv[0].second != "a")
        throw Error("group params: unsupported pairing type \"" + kv[0].second +
                    "\"");

    auto hex = [](const std::string& name, const std::string& v) {
        if (v.empty()) throw Error("group params: empty value for " + name);
        for (char c : v)
            if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')))
                throw Error("group params: " + name +
                            " must be lowercase hex");
        return bigint_from_hex(v);
    };
    BigInt q = hex("q", kv[1].second);
    BigInt r = hex("r", kv[2].second);
    BigInt h = hex("h", kv[3].second);
    BigInt gx = hex("gx", kv[4].second);
    BigInt gy = hex("gy", kv[5].second);

    const std::string& lv = kv[6].second;
    if (lv != "80" && lv != "112" && lv != "128")
        throw Error("group params: level must be 80, 112 or 128");
    int level = std::stoi(lv);

    return from_values(q, r, h, gx, gy, level);
}

BigInt GroupParams::random_scalar(Rng& rng) const {
    return rng.uniform_below(r_);
}

BigInt GroupParams::random_nonzero_scalar(Rng& rng) const {
    return rng.uniform_nonzero_below(r_);
}

CurvePoint GroupParams::random_curve_point(Rng& rng) const {
    return sample_curve_point(fq_, rng);
}

CurvePoint GroupParams::random_subgroup_point(Rng& rng) const {
    for (;;) {
        CurvePoint p = scalar_mul(h_, sample_curve_point(fq_, rng));
        if (!p.is_infinity()) return p;
    }
}

}  // namespace aben
