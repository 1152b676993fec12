#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aben/errors.hpp"
#include "aben/kpabe.hpp"
#include "aben/serial.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace aben;

namespace {

std::vector<std::string> numbered_universe(unsigned n) {
    std::vector<std::string> out;
    for (unsigned i = 1; i <= n; ++i) out.push_back("a" + std::to_string(i));
    return out;
}

}  // namespace

TEST_CASE("setup pins one image per universe attribute") {
    const GroupParams& gp = fixtures::level_params(80);
    Rng rng(uint64_t(5000));
    auto [pk, mk] = kp_setup(gp, numbered_universe(30), rng);

    REQUIRE(pk.universe.size() == 30);
    REQUIRE(pk.t_images.size() == 30);
    REQUIRE(mk.t_values.size() == 30);
    for (size_t i = 0; i < 30; ++i) {
        REQUIRE(mk.t_values[i] != 0);
        REQUIRE(pk.t_images[i] == scalar_mul(mk.t_values[i], gp.generator()));
    }
    CHECK(pk.y_image ==
          pairing(gp.generator(), gp.generator(), gp).pow(mk.y_value));
    CHECK(pk.attribute_index("a1") == 0);
    CHECK(pk.attribute_index("a30") == 29);
    CHECK_THROWS_AS(pk.attribute_index("zzz"), UnknownAttribute);
}

TEST_CASE("setup validates the universe") {
    const GroupParams& gp = fixtures::level_params(80);
    Rng rng(uint64_t(5100));
    CHECK_THROWS_AS(kp_setup(gp, {}, rng), EmptyAttributeSet);
    CHECK_THROWS_AS(kp_setup(gp, {"a", "b", "a"}, rng),
                    DuplicateUniverseAttribute);
    CHECK_THROWS_AS(kp_setup(gp, {"a", "not valid!"}, rng), SyntaxError);
    CHECK_THROWS_AS(kp_setup(gp, {"a", "or"}, rng), SyntaxError);
}

TEST_CASE("setup is deterministic per seed") {
    const GroupParams& gp = fixtures::level_params(80);
    Rng a(uint64_t(21)), b(uint64_t(21)), c(uint64_t(22));
    auto [pk1, mk1] = kp_setup(gp, {"x", "y"}, a);
    auto [pk2, mk2] = kp_setup(gp, {"x", "y"}, b);
    auto [pk3, mk3] = kp_setup(gp, {"x", "y"}, c);
    CHECK(mk1.t_values == mk2.t_values);
    CHECK(mk1.y_value == mk2.y_value);
    CHECK(pk1.y_image == pk2.y_image);
    CHECK(pk1.y_image != pk3.y_image);
}

TEST_CASE("encrypt: one component per attribute, replayable s") {
    const GroupParams& gp = fixtures::level_params(80);
    Rng rng(uint64_t(5200));
    auto [pk, mk] = kp_setup(gp, numbered_universe(10), rng);

    Rng replay = rng;
    KpEncryption enc = kp_encrypt(pk, AttributeSet{"a1", "a3", "a7"}, rng);
    REQUIRE(enc.header.e_components.size() == 3);
    CHECK(enc.header.attributes() == AttributeSet{"a1", "a3", "a7"});

    BigInt s = gp.random_scalar(replay);
    CHECK(enc.header.e_components.at("a1") == scalar_mul(s, pk.t_images[0]));
    CHECK(enc.header.e_components.at("a3") == scalar_mul(s, pk.t_images[2]));
    CHECK(enc.header.e_components.at("a7") == scalar_mul(s, pk.t_images[6]));
    CHECK(enc.session == pk.y_image.pow(s));

    CHECK_THROWS_AS(kp_encrypt(pk, AttributeSet{}, rng), EmptyAttributeSet);
    CHECK_THROWS_AS(kp_encrypt(pk, AttributeSet{"a1", "zzz"}, rng),
                    UnknownAttribute);

    // Component count for a few sizes.
    for (unsigned n : {1u, 5u, 10u}) {
        AttributeSet attrs;
        for (unsigned i = 1; i <= n; ++i) attrs.insert("a" + std::to_string(i));
        KpEncryption e = kp_encrypt(pk, attrs, rng);
        CHECK(e.header.e_components.size() == n);
    }
}

TEST_CASE("keygen: one component per policy leaf") {
    const GroupParams& gp = fixtures::level_params(80);
    Rng rng(uint64_t(5300));
    auto [pk, mk] = kp_setup(gp, numbered_universe(10), rng);

    // Single-leaf policy: D = g^{y/t}, so ê(D, T) = Y.
    KpPrivateKey single = kp_keygen(pk, mk, parse_policy("a4"), rng);
    REQUIRE(single.leaf_components.size() == 1);
    CHECK(pairing(single.leaf_components[0], pk.t_images[3], gp) == pk.y_image);

    AccessTree ten = parse_policy(
        "2 of (a1, a2, a3 and a4 and a5, (a6 or a7) and a8, a9 and a10)");
    REQUIRE(ten.leaf_count() == 10);
    KpPrivateKey sk = kp_keygen(pk, mk, ten, rng);
    CHECK(sk.leaf_components.size() == 10);
    CHECK(sk.policy == ten);

    CHECK_THROWS_AS(kp_keygen(pk, mk, parse_policy("a1 and zzz"), rng),
                    UnknownAttribute);
}

TEST_CASE("decrypt recovers the session secret exactly when satisfied") {
    const GroupParams& gp = fixtures::level_params(80);
    Rng rng(uint64_t(5400));
    auto [pk, mk] = kp_setup(gp, {"a", "b", "c", "d"}, rng);

    KpPrivateKey sk = kp_keygen(pk, mk, parse_policy("2 of (a, b, c)"), rng);
    for (AttributeSet attrs :
         {AttributeSet{"a", "b"}, AttributeSet{"a", "c"},
          AttributeSet{"a", "b", "c"}, AttributeSet{"b", "c", "d"}}) {
        KpEncryption enc = kp_encrypt(pk, attrs, rng);
        REQUIRE(kp_decrypt(pk, sk, enc.header) == enc.session);
    }
    for (AttributeSet attrs :
         {AttributeSet{"a"}, AttributeSet{"c"}, AttributeSet{"a", "d"}}) {
        KpEncryption enc = kp_encrypt(pk, attrs, rng);
        REQUIRE_THROWS_AS(kp_decrypt(pk, sk, enc.header), PolicyNotSatisfied);
    }
}

TEST_CASE("randomized round-trips with assorted policies") {
    const GroupParams& gp = fixtures::level_params(80);
    Rng rng(uint64_t(5500));
    std::vector<std::string> universe{"a", "b", "c", "d", "e", "f"};
    auto [pk, mk] = kp_setup(gp, universe, rng);
    std::mt19937_64 policy_rng(0xFACE);

    int satisfied = 0, denied = 0;
    for (int i = 0; i < 30; ++i) {
        AccessTree policy{oracles::random_policy(policy_rng, 6, universe)};
        KpPrivateKey sk = kp_keygen(pk, mk, policy, rng);

        auto subsets = oracles::all_subsets(universe);
        const auto& sub = subsets[1 + policy_rng() % (subsets.size() - 1)];
        AttributeSet attrs;
        for (const auto& a : sub) attrs.insert(a);
        KpEncryption enc = kp_encrypt(pk, attrs, rng);
        if (satisfies(policy, attrs)) {
            REQUIRE(kp_decrypt(pk, sk, enc.header) == enc.session);
            ++satisfied;
        } else {
            REQUIRE_THROWS_AS(kp_decrypt(pk, sk, enc.header),
                              PolicyNotSatisfied);
            ++denied;
        }
    }
    CHECK(satisfied > 0);
    CHECK(denied > 0);
}

TEST_CASE("exhaustive toy sweep: decryption works iff the policy is satisfied") {
    GroupParams toy = fixtures::toy();
    Rng rng(uint64_t(5600));
    std::vector<std::string> universe{"a", "b", "c"};
    auto [pk, mk] = kp_setup(toy, universe, rng);

    auto trees = oracles::enumerate_trees(3, 2, 2, {"a", "b"});
    auto subsets = oracles::all_subsets(universe);

    // One header per non-empty attribute subset.
    std::vector<std::pair<AttributeSet, KpEncryption>> headers;
    for (const auto& sub : subsets) {
        if (sub.empty()) continue;
        AttributeSet attrs;
        for (const auto& a : sub) attrs.insert(a);
        headers.emplace_back(attrs, kp_encrypt(pk, attrs, rng));
    }

    for (const AccessNode& root : trees) {
        AccessTree policy{root};
        KpPrivateKey sk = kp_keygen(pk, mk, policy, rng);
        REQUIRE(sk.leaf_components.size() == policy.leaf_count());
        for (const auto& [attrs, enc] : headers) {
            if (satisfies(policy, attrs)) {
                REQUIRE(kp_decrypt(pk, sk, enc.header) == enc.session);
            } else {
                REQUIRE_THROWS_AS(kp_decrypt(pk, sk, enc.header),
                                  PolicyNotSatisfied);
            }
        }
    }
}

TEST_CASE("master key must match the universe") {
    const GroupParams& gp = fixtures::level_params(80);
    Rng rng(uint64_t(5700));
    auto [pk, mk] = kp_setup(gp, {"a", "b"}, rng);
    KpMasterKey truncated = mk;
    truncated.t_values.pop_back();
    CHECK_THROWS_AS(kp_keygen(pk, truncated, parse_policy("a"), rng),
                    MalformedKey);
}

TEST_CASE("key with mismatched components is rejected") {
    const GroupParams& gp = fixtures::level_params(80);
    Rng rng(uint64_t(5800));
    auto [pk, mk] = kp_setup(gp, {"a", "b"}, rng);
    KpPrivateKey sk = kp_keygen(pk, mk, parse_policy("a and b"), rng);
    KpEncryption enc = kp_encrypt(pk, AttributeSet{"a", "b"}, rng);
    KpPrivateKey broken = sk;
    broken.leaf_components.pop_back();
    CHECK_THROWS_AS(kp_decrypt(pk, broken, enc.header), MalformedKey);
}
