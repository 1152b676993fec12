#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "aben/errors.hpp"
#include "aben/params.hpp"
#include "fixtures.hpp"

using namespace aben;

TEST_CASE("from_values accepts the toy profiles") {
    GroupParams toy = fixtures::toy();
    CHECK(toy.q() == 11);
    CHECK(toy.r() == 3);
    CHECK(toy.h() == 4);
    CHECK(toy.security_level() == 0);
    CHECK(toy.q() + 1 == toy.h() * toy.r());
    CHECK(scalar_mul(toy.r(), toy.generator()).is_infinity());

    GroupParams toy2 = fixtures::toy2();
    CHECK(toy2.q() + 1 == toy2.h() * toy2.r());
    CHECK(on_curve(toy2.generator()));
    CHECK(scalar_mul(toy2.r(), toy2.generator()).is_infinity());
}

TEST_CASE("from_values validates the algebra") {
    // q must be prime.
    CHECK_THROWS_AS(GroupParams::from_values(12, 3, 4, 5, 3, 0), Error);
    // q must be 3 mod 4 (13 is prime but 1 mod 4).
    CHECK_THROWS_AS(GroupParams::from_values(13, 7, 2, 5, 3, 0), Error);
    // r must be an odd prime (12 = 3*4 with r=4).
    CHECK_THROWS_AS(GroupParams::from_values(11, 4, 3, 5, 3, 0), Error);
    // r = 2 is prime but even.
    CHECK_THROWS_AS(GroupParams::from_values(11, 2, 6, 5, 3, 0), Error);
    // cofactor must be a multiple of 4.
    CHECK_THROWS_AS(GroupParams::from_values(11, 3, 5, 5, 3, 0), Error);
    // q + 1 = h*r must hold exactly.
    CHECK_THROWS_AS(GroupParams::from_values(11, 3, 8, 5, 3, 0), Error);
    // generator must be on the curve (no point has x = 1 mod 11).
    CHECK_THROWS_AS(GroupParams::from_values(11, 3, 4, 1, 1, 0), Error);
    // generator coordinates must be canonical residues.
    CHECK_THROWS_AS(GroupParams::from_values(11, 3, 4, 16, 3, 0), Error);
    // (9,1) is on the curve but not of order r = 3.
    CHECK_THROWS_AS(GroupParams::from_values(11, 3, 4, 9, 1, 0), Error);
    // (0,0) has order 2, not r.
    CHECK_THROWS_AS(GroupParams::from_values(11, 3, 4, 0, 0, 0), Error);
    // toy values cannot claim a named level: bit lengths are pinned there.
    CHECK_THROWS_AS(GroupParams::from_values(11, 3, 4, 5, 3, 80), Error);
}

TEST_CASE("pinned fixture parameters satisfy every level constraint") {
    const struct { int level; size_t rbits, qbits; } table[] = {
        {80, 160, 512}, {112, 224, 1024}, {128, 256, 1536}};
    for (const auto& row : table) {
        CAPTURE(row.level);
        const GroupParams& gp = fixtures::level_params(row.level);
        CHECK(gp.security_level() == row.level);
        CHECK(bit_length(gp.r()) == row.rbits);
        CHECK(bit_length(gp.q()) == row.qbits);
        CHECK(mpz_fdiv_ui(gp.q().get_mpz_t(), 4) == 3);
        CHECK(mpz_fdiv_ui(gp.h().get_mpz_t(), 4) == 0);
        CHECK(gp.q() + 1 == gp.h() * gp.r());
        CHECK(mpz_probab_prime_p(gp.q().get_mpz_t(), 64) >= 1);
        CHECK(mpz_probab_prime_p(gp.r().get_mpz_t(), 64) >= 1);
        CHECK(on_curve(gp.generator()));
        CHECK(!gp.generator().is_infinity());
        CHECK(scalar_mul(gp.r(), gp.generator()).is_infinity());
    }
}

TEST_CASE("text form round-trips byte for byte") {
    for (int level : {80, 112, 128}) {
        CAPTURE(level);
        std::string text = fixtures::params_text(level);
        GroupParams gp = GroupParams::parse_text(text);
        CHECK(gp.to_text() == text);
    }
}

TEST_CASE("parse_text rejects malformed input") {
    std::string good = fixtures::params_text(80);

    CHECK_THROWS_AS(GroupParams::parse_text(""), Error);
    CHECK_THROWS_AS(GroupParams::parse_text("type=a\n"), Error);
    // Uppercase hex is not canonical.
    {
        std::string t = good;
        auto pos = t.find("q=c");
        t[pos + 2] = 'C';
        CHECK_THROWS_AS(GroupParams::parse_text(t), Error);
    }
    // Spurious non-hex character.
    {
        std::string t = good;
        t[t.find("r=") + 2] = 'x';
        CHECK_THROWS_AS(GroupParams::parse_text(t), Error);
    }
    // Lines out of order.
    {
        std::string t = good;
        auto q0 = t.find("q=");
        auto r0 = t.find("r=");
        auto h0 = t.find("h=");
        std::string qline = t.substr(q0, r0 - q0);
        std::string rline = t.substr(r0, h0 - r0);
        std::string swapped = t.substr(0, q0) + rline + qline + t.substr(h0);
        CHECK_THROWS_AS(GroupParams::parse_text(swapped), Error);
    }
    // Unknown pairing type.
    {
        std::string t = good;
        t[t.find("type=a") + 5] = 'd';
        CHECK_THROWS_AS(GroupParams::parse_text(t), Error);
    }
    // Level not in the named set.
    {
        std::string t = good;
        auto pos = t.find("level=80");
        t.replace(pos, 8, "level=81");
        CHECK_THROWS_AS(GroupParams::parse_text(t), Error);
    }
    // Trailing garbage line.
    CHECK_THROWS_AS(GroupParams::parse_text(good + "extra=1\n"), Error);
    // A line without '='.
    CHECK_THROWS_AS(GroupParams::parse_text(good + "junk\n"), Error);
}

TEST_CASE("custom-level params refuse to serialize as text") {
    CHECK_THROWS_AS(fixtures::toy().to_text(), Error);
}

TEST_CASE("generation is deterministic under a fixed seed") {
    Rng a(uint64_t(42)), b(uint64_t(42)), c(uint64_t(43));
    GroupParams p1 = GroupParams::generate(80, a);
    GroupParams p2 = GroupParams::generate(80, b);
    GroupParams p3 = GroupParams::generate(80, c);
    CHECK(p1.to_text() == p2.to_text());
    CHECK(p1.q() != p3.q());
}

TEST_CASE("generated parameters satisfy the level contract") {
    for (int level : {80, 112}) {
        CAPTURE(level);
        Rng rng(uint64_t(4242 + level));
        GroupParams gp = GroupParams::generate(level, rng);
        CHECK(gp.security_level() == level);
        size_t rbits = level == 80 ? 160 : 224;
        size_t qbits = level == 80 ? 512 : 1024;
        CHECK(bit_length(gp.r()) == rbits);
        CHECK(bit_length(gp.q()) == qbits);
        CHECK(gp.q() + 1 == gp.h() * gp.r());
        CHECK(scalar_mul(gp.r(), gp.generator()).is_infinity());
        // Round-trips through the text form.
        CHECK(GroupParams::parse_text(gp.to_text()).to_text() == gp.to_text());
    }
}

TEST_CASE("generate rejects unknown levels and exhausted budgets") {
    Rng rng(uint64_t(7));
    CHECK_THROWS_AS(GroupParams::generate(96, rng), Error);
    GenOptions opts;
    opts.max_q_trials = 0;
    CHECK_THROWS_AS(GroupParams::generate(80, rng, opts),
                    ParameterSearchExhausted);
}

TEST_CASE("scalar and point sampling ranges") {
    GroupParams toy = fixtures::toy();
    Rng rng(uint64_t(99));
    std::set<long> seen, seen_nz;
    for (int i = 0; i < 60; ++i) {
        BigInt s = toy.random_scalar(rng);
        REQUIRE(s >= 0);
        REQUIRE(s < 3);
        seen.insert(s.get_si());
        BigInt n = toy.random_nonzero_scalar(rng);
        REQUIRE(n >= 1);
        REQUIRE(n < 3);
        seen_nz.insert(n.get_si());
    }
    CHECK(seen == std::set<long>{0, 1, 2});
    CHECK(seen_nz == std::set<long>{1, 2});

    // Subgroup sampling can only land on the two order-3 points.
    for (int i = 0; i < 20; ++i) {
        CurvePoint p = toy.random_subgroup_point(rng);
        REQUIRE(p.x() == toy.fq()->element(5));
        REQUIRE((p.y() == toy.fq()->element(3) || p.y() == toy.fq()->element(8)));
    }
}
