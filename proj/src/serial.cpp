#include "aben/serial.hpp"

#include <cstring>
#include <fstream>
#include <set>

#include "aben/errors.hpp"

namespace aben {

namespace {

constexpr char kMagic[4] = {'A', 'B', 'E', 'N'};
constexpr uint8_t kVersion = 0x01;

constexpr uint8_t kTypeCpPublic = 0x01;
constexpr uint8_t kTypeCpMaster = 0x02;
constexpr uint8_t kTypeCpKey = 0x03;
constexpr uint8_t kTypeCpHeader = 0x04;
constexpr uint8_t kTypeKpPublic = 0x11;
constexpr uint8_t kTypeKpMaster = 0x12;
constexpr uint8_t kTypeKpKey = 0x13;
constexpr uint8_t kTypeKpHeader = 0x14;
constexpr uint8_t kTypeEnvelope = 0x21;

enum class Blob { key, envelope };  // which error family a parse failure uses

// ---- writing ----

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v >> 24));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

void put_point(std::vector<uint8_t>& out, const CurvePoint& p, size_t w) {
    size_t at = out.size();
    out.resize(at + 2 * w, 0);
    if (!p.is_infinity()) {
        p.x().to_bytes(std::span<uint8_t>(out.data() + at, w));
        p.y().to_bytes(std::span<uint8_t>(out.data() + at + w, w));
    }
}

void put_scalar(std::vector<uint8_t>& out, const BigInt& v, size_t wr) {
    size_t at = out.size();
    out.resize(at + wr, 0);
    bigint_to_bytes(v, std::span<uint8_t>(out.data() + at, wr));
}

void put_string(std::vector<uint8_t>& out, const std::string& s) {
    put_u32(out, static_cast<uint32_t>(s.size()));
    out.insert(out.end(), s.begin(), s.end());
}

void put_gt(std::vector<uint8_t>& out, const GtElement& v) {
    std::vector<uint8_t> bytes = v.to_bytes();
    out.insert(out.end(), bytes.begin(), bytes.end());
}

// Serialized objects are a fixed preamble plus u32-length-prefixed fields.
class Writer {
public:
    Writer(uint8_t type, uint8_t level) {
        buf_.insert(buf_.end(), kMagic, kMagic + 4);
        buf_.push_back(kVersion);
        buf_.push_back(type);
        buf_.push_back(level);
    }

    void field(const std::vector<uint8_t>& payload) {
        put_u32(buf_, static_cast<uint32_t>(payload.size()));
        buf_.insert(buf_.end(), payload.begin(), payload.end());
    }

    std::vector<uint8_t> take() { return std::move(buf_); }

private:
    std::vector<uint8_t> buf_;
};

// ---- reading ----

class Reader {
public:
    Reader(std::span<const uint8_t> data, Blob blob, size_t base = 0)
        : data_(data), blob_(blob), base_(base) {}

    [[noreturn]] void fail(const std::string& reason) const {
        if (blob_ == Blob::key) throw MalformedKey(base_ + pos_, reason);
        throw MalformedEnvelope(base_ + pos_, reason);
    }

    uint8_t preamble(uint8_t expected_type) {
        auto head = take(7, "truncated preamble");
        if (std::memcmp(head.data(), kMagic, 4) != 0)
            fail("bad magic (not an ABEN blob)");
        if (head[4] != kVersion)
            fail("unsupported format version " + std::to_string(head[4]));
        if (head[5] != expected_type)
            fail("object type 0x" + hex_byte(head[5]) + ", expected 0x" +
                 hex_byte(expected_type));
        return head[6];
    }

    std::span<const uint8_t> take(size_t n, const char* what) {
        if (data_.size() - pos_ < n) fail(what);
        auto out = data_.subspan(pos_, n);
        pos_ += n;
        return out;
    }

    uint32_t u32(const char* what) {
        auto b = take(4, what);
        return (uint32_t(b[0]) << 24) | (uint32_t(b[1]) << 16) |
               (uint32_t(b[2]) << 8) | uint32_t(b[3]);
    }

    // One length-prefixed field as a sub-reader with absolute offsets.
    Reader field(const char* what) {
        uint32_t len = u32(what);
        size_t start = base_ + pos_;
        auto body = take(len, what);
        return Reader(body, blob_, start);
    }

    void finish(const char* what) {
        if (pos_ != data_.size()) fail(std::string("trailing bytes after ") + what);
    }

    bool done() const { return pos_ == data_.size(); }
    size_t remaining() const { return data_.size() - pos_; }

    // ---- typed decoders ----

    CurvePoint point(const GroupParams& gp) {
        size_t w = gp.fq()->byte_width();
        auto xb = take(w, "truncated point");
        auto yb = take(w, "truncated point");
        BigInt x = bigint_from_bytes(xb);
        BigInt y = bigint_from_bytes(yb);
        if (x == 0 && y == 0) return CurvePoint::infinity();
        auto fx = gp.fq()->element_canonical(x);
        auto fy = gp.fq()->element_canonical(y);
        if (!fx || !fy) fail("point coordinate out of field range");
        CurvePoint p = CurvePoint::affine(*fx, *fy);
        if (!on_curve(p)) fail("point is not on the curve");
        return p;
    }

    GtElement gt(const GroupParams& gp) {
        size_t w = gp.fq()->byte_width();
        auto ab = take(w, "truncated GT element");
        auto bb = take(w, "truncated GT element");
        auto a = gp.fq()->element_canonical(bigint_from_bytes(ab));
        auto b = gp.fq()->element_canonical(bigint_from_bytes(bb));
        if (!a || !b) fail("GT coordinate out of field range");
        Fp2 v(*a, *b);
        if (v.is_zero()) fail("GT element is zero");
        return GtElement(v);
    }

    BigInt scalar(const GroupParams& gp) {
        auto b = take(gp.fr()->byte_width(), "truncated scalar");
        BigInt v = bigint_from_bytes(b);
        if (v >= gp.r()) fail("scalar is not reduced mod r");
        return v;
    }

    std::string string(const char* what) {
        uint32_t len = u32(what);
        auto b = take(len, what);
        return std::string(reinterpret_cast<const char*>(b.data()), b.size());
    }

private:
    static std::string hex_byte(uint8_t v) {
        static const char* digits = "0123456789abcdef";
        return {digits[v >> 4], digits[v & 0xf]};
    }

    std::span<const uint8_t> data_;
    Blob blob_;
    size_t base_;
    size_t pos_ = 0;
};

uint8_t level_byte(const GroupParams& gp) {
    return static_cast<uint8_t>(gp.security_level());
}

void check_level(Reader& r, uint8_t got, const GroupParams& gp) {
    if (got != level_byte(gp))
        r.fail("security level byte " + std::to_string(got) +
               " does not match params level " +
               std::to_string(gp.security_level()));
}

GroupParams params_field(Reader& r) {
    Reader f = r.field("params block");
    auto text = f.take(f.remaining(), "params block");
    try {
        return GroupParams::parse_text(
            std::string(reinterpret_cast<const char*>(text.data()), text.size()));
    } catch (const Error& e) {
        f.fail(e.what());
    }
}

AccessTree policy_field(Reader& r) {
    Reader f = r.field("policy text");
    auto body = f.take(f.remaining(), "policy text");
    std::string text(reinterpret_cast<const char*>(body.data()), body.size());
    try {
        return parse_policy(text);
    } catch (const Error& e) {
        f.fail(e.what());
    }
}

}  // namespace

// ---- CP-ABE objects ----

std::vector<uint8_t> serialize_cp_public(const CpPublicParams& pk) {
    const GroupParams& gp = pk.params;
    size_t w = gp.fq()->byte_width();
    Writer out(kTypeCpPublic, level_byte(gp));

    std::string text = gp.to_text();
    out.field(std::vector<uint8_t>(text.begin(), text.end()));

    std::vector<uint8_t> f;
    put_point(f, pk.g, w);
    out.field(f);
    f.clear();
    put_point(f, pk.h_point, w);
    out.field(f);
    f.clear();
    put_gt(f, pk.egg_alpha);
    out.field(f);
    return out.take();
}

CpPublicParams deserialize_cp_public(std::span<const uint8_t> bytes) {
    Reader r(bytes, Blob::key);
    uint8_t level = r.preamble(kTypeCpPublic);
    GroupParams params = params_field(r);
    check_level(r, level, params);

    Reader fg = r.field("field g");
    CurvePoint g = fg.point(params);
    fg.finish("field g");
    Reader fh = r.field("field h_point");
    CurvePoint h_point = fh.point(params);
    fh.finish("field h_point");
    Reader fe = r.field("field egg_alpha");
    GtElement egg_alpha = fe.gt(params);
    fe.finish("field egg_alpha");
    r.finish("public params");
    CpPublicParams pk{std::move(params), g, h_point, std::move(egg_alpha)};

    if (pk.g.is_infinity() || pk.h_point.is_infinity())
        r.fail("public points must not be infinity");
    if (pk.egg_alpha.is_one()) r.fail("egg_alpha must not be 1");
    return pk;
}

std::vector<uint8_t> serialize_cp_master(const CpMasterKey& mk,
                                         const GroupParams& params) {
    Writer out(kTypeCpMaster, level_byte(params));
    std::vector<uint8_t> f;
    put_scalar(f, mk.beta, params.fr()->byte_width());
    out.field(f);
    f.clear();
    put_point(f, mk.g_alpha, params.fq()->byte_width());
    out.field(f);
    return out.take();
}

CpMasterKey deserialize_cp_master(std::span<const uint8_t> bytes,
                                  const GroupParams& params) {
    Reader r(bytes, Blob::key);
    check_level(r, r.preamble(kTypeCpMaster), params);
    CpMasterKey mk;
    Reader fb = r.field("field beta");
    mk.beta = fb.scalar(params);
    fb.finish("field beta");
    Reader fa = r.field("field g_alpha");
    mk.g_alpha = fa.point(params);
    fa.finish("field g_alpha");
    r.finish("master key");
    if (mk.beta == 0) r.fail("beta must be nonzero");
    return mk;
}

std::vector<uint8_t> serialize_cp_key(const CpPrivateKey& sk,
                                      const GroupParams& params) {
    size_t w = params.fq()->byte_width();
    Writer out(kTypeCpKey, level_byte(params));
    std::vector<uint8_t> f;
    put_point(f, sk.d, w);
    out.field(f);
    f.clear();
    put_u32(f, static_cast<uint32_t>(sk.components.size()));
    for (const auto& [attr, pair] : sk.components) {
        put_string(f, attr);
        put_point(f, pair.d_attr, w);
        put_point(f, pair.d_rand, w);
    }
    out.field(f);
    return out.take();
}

CpPrivateKey deserialize_cp_key(std::span<const uint8_t> bytes,
                                const GroupParams& params) {
    Reader r(bytes, Blob::key);
    check_level(r, r.preamble(kTypeCpKey), params);
    CpPrivateKey sk;
    Reader fd = r.field("field d");
    sk.d = fd.point(params);
    fd.finish("field d");

    Reader fc = r.field("attribute components");
    uint32_t count = fc.u32("component count");
    std::string prev;
    for (uint32_t i = 0; i < count; ++i) {
        std::string attr = fc.string("attribute name");
        if (!is_valid_attribute(attr))
            fc.fail("invalid attribute \"" + attr + "\"");
        if (i > 0 && attr <= prev)
            fc.fail("attributes out of order or duplicated");
        CpKeyPair pair;
        pair.d_attr = fc.point(params);
        pair.d_rand = fc.point(params);
        sk.components.emplace(attr, std::move(pair));
        prev = std::move(attr);
    }
    fc.finish("attribute components");
    r.finish("private key");
    return sk;
}

std::vector<uint8_t> serialize_cp_header(const CpHeader& header,
                                         const GroupParams& params) {
    size_t w = params.fq()->byte_width();
    Writer out(kTypeCpHeader, level_byte(params));
    std::vector<uint8_t> f;
    std::string policy = render_policy(header.policy);
    out.field(std::vector<uint8_t>(policy.begin(), policy.end()));
    put_point(f, header.c, w);
    out.field(f);
    f.clear();
    put_u32(f, static_cast<uint32_t>(header.leaves.size()));
    for (const CpCtPair& pair : header.leaves) {
        put_point(f, pair.c_leaf, w);
        put_point(f, pair.c_hash, w);
    }
    out.field(f);
    return out.take();
}

CpHeader deserialize_cp_header(std::span<const uint8_t> bytes,
                               const GroupParams& params) {
    Reader r(bytes, Blob::envelope);
    check_level(r, r.preamble(kTypeCpHeader), params);
    AccessTree policy = policy_field(r);
    Reader fc = r.field("field c");
    CurvePoint c = fc.point(params);
    fc.finish("field c");

    Reader fl = r.field("leaf components");
    uint32_t count = fl.u32("leaf count");
    if (count != policy.leaf_count())
        fl.fail("leaf component count does not match the policy");
    std::vector<CpCtPair> leaves;
    leaves.reserve(count);
    for (uint32_t i = 0; i < count; ++i) {
        CpCtPair pair;
        pair.c_leaf = fl.point(params);
        pair.c_hash = fl.point(params);
        leaves.push_back(std::move(pair));
    }
    fl.finish("leaf components");
    r.finish("header");
    return CpHeader{c, std::move(leaves), std::move(policy)};
}

// ---- KP-ABE objects ----

std::vector<uint8_t> serialize_kp_public(const KpPublicParams& pk) {
    const GroupParams& gp = pk.params;
    size_t w = gp.fq()->byte_width();
    Writer out(kTypeKpPublic, level_byte(gp));

    std::string text = gp.to_text();
    out.field(std::vector<uint8_t>(text.begin(), text.end()));

    std::vector<uint8_t> f;
    put_u32(f, static_cast<uint32_t>(pk.universe.size()));
    for (const std::string& a : pk.universe) put_string(f, a);
    out.field(f);
    f.clear();
    put_u32(f, static_cast<uint32_t>(pk.t_images.size()));
    for (const CurvePoint& p : pk.t_images) put_point(f, p, w);
    out.field(f);
    f.clear();
    put_gt(f, pk.y_image);
    out.field(f);
    return out.take();
}

KpPublicParams deserialize_kp_public(std::span<const uint8_t> bytes) {
    Reader r(bytes, Blob::key);
    uint8_t level = r.preamble(kTypeKpPublic);
    GroupParams params = params_field(r);
    check_level(r, level, params);

    Reader fu = r.field("universe");
    uint32_t n = fu.u32("universe size");
    if (n == 0) fu.fail("universe must be non-empty");
    std::set<std::string> seen;
    std::vector<std::string> universe;
    universe.reserve(n);
    for (uint32_t i = 0; i < n; ++i) {
        std::string a = fu.string("universe attribute");
        if (!is_valid_attribute(a)) fu.fail("invalid attribute \"" + a + "\"");
        if (!seen.insert(a).second) fu.fail("duplicate attribute \"" + a + "\"");
        universe.push_back(std::move(a));
    }
    fu.finish("universe");

    Reader ft = r.field("t images");
    uint32_t tn = ft.u32("t image count");
    if (tn != n) ft.fail("t image count does not match the universe");
    std::vector<CurvePoint> t_images;
    t_images.reserve(tn);
    for (uint32_t i = 0; i < tn; ++i) {
        CurvePoint p = ft.point(params);
        if (p.is_infinity()) ft.fail("t image must not be infinity");
        t_images.push_back(std::move(p));
    }
    ft.finish("t images");

    Reader fy = r.field("field y_image");
    GtElement y_image = fy.gt(params);
    fy.finish("field y_image");
    r.finish("public params");
    if (y_image.is_one()) r.fail("y_image must not be 1");
    return KpPublicParams{std::move(params), std::move(universe),
                          std::move(t_images), std::move(y_image)};
}

std::vector<uint8_t> serialize_kp_master(const KpMasterKey& mk,
                                         const GroupParams& params) {
    size_t wr = params.fr()->byte_width();
    Writer out(kTypeKpMaster, level_byte(params));
    std::vector<uint8_t> f;
    put_u32(f, static_cast<uint32_t>(mk.t_values.size()));
    for (const BigInt& t : mk.t_values) put_scalar(f, t, wr);
    out.field(f);
    f.clear();
    put_scalar(f, mk.y_value, wr);
    out.field(f);
    return out.take();
}

KpMasterKey deserialize_kp_master(std::span<const uint8_t> bytes,
                                  const GroupParams& params) {
    Reader r(bytes, Blob::key);
    check_level(r, r.preamble(kTypeKpMaster), params);
    KpMasterKey mk;
    Reader ft = r.field("t values");
    uint32_t n = ft.u32("t value count");
    mk.t_values.reserve(n);
    for (uint32_t i = 0; i < n; ++i) {
        BigInt t = ft.scalar(params);
        if (t == 0) ft.fail("t value must be nonzero");
        mk.t_values.push_back(std::move(t));
    }
    ft.finish("t values");
    Reader fy = r.field("field y");
    mk.y_value = fy.scalar(params);
    fy.finish("field y");
    r.finish("master key");
    return mk;
}

std::vector<uint8_t> serialize_kp_key(const KpPrivateKey& sk,
                                      const GroupParams& params) {
    size_t w = params.fq()->byte_width();
    Writer out(kTypeKpKey, level_byte(params));
    std::string policy = render_policy(sk.policy);
    out.field(std::vector<uint8_t>(policy.begin(), policy.end()));
    std::vector<uint8_t> f;
    put_u32(f, static_cast<uint32_t>(sk.leaf_components.size()));
    for (const CurvePoint& p : sk.leaf_components) put_point(f, p, w);
    out.field(f);
    return out.take();
}

KpPrivateKey deserialize_kp_key(std::span<const uint8_t> bytes,
                                const GroupParams& params) {
    Reader r(bytes, Blob::key);
    check_level(r, r.preamble(kTypeKpKey), params);
    AccessTree policy = policy_field(r);
    Reader fl = r.field("leaf components");
    uint32_t count = fl.u32("leaf component count");
    if (count != policy.leaf_count())
        fl.fail("leaf component count does not match the policy");
    std::vector<CurvePoint> leaf_components;
    leaf_components.reserve(count);
    for (uint32_t i = 0; i < count; ++i)
        leaf_components.push_back(fl.point(params));
    fl.finish("leaf components");
    r.finish("private key");
    return KpPrivateKey{std::move(policy), std::move(leaf_components)};
}

std::vector<uint8_t> serialize_kp_header(const KpHeader& header,
                                         const GroupParams& params) {
    size_t w = params.fq()->byte_width();
    Writer out(kTypeKpHeader, level_byte(params));
    std::vector<uint8_t> f;
    put_u32(f, static_cast<uint32_t>(header.e_components.size()));
    for (const auto& [attr, point] : header.e_components) {
        put_string(f, attr);
        put_point(f, point, w);
    }
    out.field(f);
    return out.take();
}

KpHeader deserialize_kp_header(std::span<const uint8_t> bytes,
                               const GroupParams& params) {
    Reader r(bytes, Blob::envelope);
    check_level(r, r.preamble(kTypeKpHeader), params);
    KpHeader header;
    Reader fc = r.field("attribute components");
    uint32_t count = fc.u32("component count");
    std::string prev;
    for (uint32_t i = 0; i < count; ++i) {
        std::string attr = fc.string("attribute name");
        if (!is_valid_attribute(attr))
            fc.fail("invalid attribute \"" + attr + "\"");
        if (i > 0 && attr <= prev)
            fc.fail("attributes out of order or duplicated");
        header.e_components.emplace(attr, fc.point(params));
        prev = std::move(attr);
    }
    fc.finish("attribute components");
    r.finish("header");
    return header;
}

// ---- envelopes ----

std::vector<uint8_t> serialize_envelope(const Envelope& env) {
    if (env.header_bytes.size() < 7)
        throw MalformedEnvelope(0, "inner header blob is too short");
    Writer out(kTypeEnvelope, env.header_bytes[6]);
    out.field({static_cast<uint8_t>(env.scheme)});
    out.field(env.header_bytes);
    out.field(std::vector<uint8_t>(env.header_digest.begin(),
                                   env.header_digest.end()));
    out.field(std::vector<uint8_t>(env.nonce.begin(), env.nonce.end()));
    out.field(env.ciphertext);
    out.field(std::vector<uint8_t>(env.tag.begin(), env.tag.end()));
    return out.take();
}

Envelope deserialize_envelope(std::span<const uint8_t> bytes) {
    Reader r(bytes, Blob::envelope);
    uint8_t level = r.preamble(kTypeEnvelope);
    Envelope env;

    Reader fs = r.field("scheme tag");
    uint8_t scheme = fs.take(1, "scheme tag")[0];
    fs.finish("scheme tag");
    if (scheme != static_cast<uint8_t>(Scheme::cp) &&
        scheme != static_cast<uint8_t>(Scheme::kp))
        fs.fail("unknown scheme tag " + std::to_string(scheme));
    env.scheme = static_cast<Scheme>(scheme);

    Reader fh = r.field("inner header");
    auto hb = fh.take(fh.remaining(), "inner header");
    env.header_bytes.assign(hb.begin(), hb.end());
    if (env.header_bytes.size() < 7 ||
        std::memcmp(env.header_bytes.data(), kMagic, 4) != 0 ||
        env.header_bytes[4] != kVersion)
        fh.fail("inner header is not an ABEN blob");
    if (env.header_bytes[6] != level)
        fh.fail("inner header level disagrees with the envelope");
    uint8_t expect_type = env.scheme == Scheme::cp ? kTypeCpHeader : kTypeKpHeader;
    if (env.header_bytes[5] != expect_type)
        fh.fail("inner header type disagrees with the scheme tag");

    Reader fd = r.field("header digest");
    auto db = fd.take(32, "header digest");
    fd.finish("header digest");
    std::memcpy(env.header_digest.data(), db.data(), 32);

    Reader fn = r.field("nonce");
    auto nb = fn.take(12, "nonce");
    fn.finish("nonce");
    std::memcpy(env.nonce.data(), nb.data(), 12);

    Reader fc = r.field("payload ciphertext");
    auto cb = fc.take(fc.remaining(), "payload ciphertext");
    env.ciphertext.assign(cb.begin(), cb.end());

    Reader ftag = r.field("tag");
    auto tb = ftag.take(16, "tag");
    ftag.finish("tag");
    std::memcpy(env.tag.data(), tb.data(), 16);

    r.finish("envelope");
    return env;
}

Scheme blob_scheme(std::span<const uint8_t> bytes) {
    Reader r(bytes, Blob::key);
    if (bytes.size() < 7) r.fail("truncated preamble");
    if (std::memcmp(bytes.data(), kMagic, 4) != 0)
        r.fail("bad magic (not an ABEN blob)");
    if (bytes[4] != kVersion)
        r.fail("unsupported format version " + std::to_string(bytes[4]));
    uint8_t type = bytes[5];
    if (type >= kTypeCpPublic && type <= kTypeCpHeader) return Scheme::cp;
    if (type >= kTypeKpPublic && type <= kTypeKpHeader) return Scheme::kp;
    if (type == kTypeEnvelope) {
        Envelope env = deserialize_envelope(bytes);
        return env.scheme;
    }
    r.fail("unknown object type");
}

// ---- files ----

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open \"" + path + "\" for reading");
    std::vector<uint8_t> out((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failure on \"" + path + "\"");
    return out;
}

void write_file(const std::string& path, std::span<const uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open \"" + path + "\" for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failure on \"" + path + "\"");
}

}  // namespace aben
