#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dwork/common.hpp"
#include "dwork/ffield.hpp"

using namespace dwork;

namespace {

int order_mod(int a, int p) {
    int x = a % p, k = 1;
    while (x != 1) {
        x = x * a % p;
        ++k;
    }
    return k;
}

// Encoded product in F_p[x]/(x^2 + c1 x + c0), independent of the tables.
int mul_quadratic(int a, int b, int p, int c0, int c1) {
    int a0 = a % p, a1 = a / p, b0 = b % p, b1 = b / p;
    int t0 = a0 * b0, t1 = a0 * b1 + a1 * b0, t2 = a1 * b1;
    int r0 = ((t0 - t2 * c0) % p + p * p) % p;
    int r1 = ((t1 - t2 * c1) % p + p * p) % p;
    return r0 + p * r1;
}

}  // namespace

TEST_CASE("prime field generator is the least primitive root") {
    int expected = 0;
    for (int a = 2; a < 7; ++a) {
        if (order_mod(a, 7) == 6) {
            expected = a;
            break;
        }
    }
    auto F = build_field(7, 1);
    CHECK(F.generator() == static_cast<std::uint32_t>(expected));
    CHECK(F.generator() == 3);
}

TEST_CASE("quadratic modulus is the least irreducible") {
    const int p = 7;
    int c0 = -1, c1 = -1;
    for (int a = 0; a < p && c0 < 0; ++a) {
        for (int b = 0; b < p; ++b) {
            bool has_root = false;
            for (int x = 0; x < p; ++x) has_root |= (x * x + b * x + a) % p == 0;
            if (!has_root) {
                c0 = a;
                c1 = b;
                break;
            }
        }
    }
    auto F = build_field(7, 2);
    REQUIRE(F.modulus().size() == 2);
    CHECK(F.modulus()[0] == static_cast<std::uint32_t>(c0));
    CHECK(F.modulus()[1] == static_cast<std::uint32_t>(c1));
    CHECK(F.modulus() == std::vector<std::uint32_t>{1, 0});
}

TEST_CASE("table multiplication agrees with direct polynomial arithmetic") {
    auto F = build_field(7, 2);
    int c0 = F.modulus()[0], c1 = F.modulus()[1];
    for (std::uint32_t a = 1; a < 49; ++a)
        for (std::uint32_t b = 1; b < 49; ++b)
            CHECK_EQ(F.to_enc(F.mul(F.from_enc(a), F.from_enc(b))),
                     static_cast<std::uint32_t>(mul_quadratic(a, b, 7, c0, c1)));
}

TEST_CASE("characteristic two is allowed") {
    auto F = build_field(2, 1);
    CHECK(F.size() == 2);
    auto F4 = build_field(2, 3);
    CHECK(F4.size() == 8);
    CHECK(F4.add(F4.one(), F4.one()) == kZero);
}

TEST_CASE("build_field errors") {
    CHECK_THROWS_AS(build_field(9, 1), Error);
    CHECK_THROWS_AS(build_field(2, 27), Error);
    CHECK_THROWS_AS(build_field(7, 0), Error);
}

TEST_CASE("deterministic construction") {
    CHECK(build_field(13, 2) == build_field(13, 2));
    CHECK(build_field(3, 5) == build_field(3, 5));
}

TEST_CASE("exp/log round trip") {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{7, 1}, {7, 3}, {13, 2}, {2, 10}, {11, 2}}) {
        auto F = build_field(p, r);
        for (std::uint32_t e = 1; e < F.size(); ++e) CHECK_EQ(F.to_enc(F.from_enc(e)), e);
        CHECK(F.from_enc(0) == kZero);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(12345);
    for (auto [p, r] : std::vector<std::pair<int, int>>{{7, 2}, {13, 3}, {3, 4}, {11, 1}}) {
        auto F = build_field(p, r);
        std::uniform_int_distribution<std::uint32_t> pick(0, F.size() - 1);
        for (int i = 0; i < 10000; ++i) {
            FqElem a = F.from_enc(pick(rng)), b = F.from_enc(pick(rng)), c = F.from_enc(pick(rng));
            REQUIRE(F.add(a, b) == F.add(b, a));
            REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            REQUIRE(F.add(a, F.neg(a)) == kZero);
            REQUIRE(F.to_enc(F.add(a, b)) == F.add_enc(F.to_enc(a), F.to_enc(b)));
            if (a != kZero) REQUIRE(F.mul(a, F.inv(a)) == F.one());
        }
    }
}

TEST_CASE("nth_roots") {
    auto F7 = build_field(7, 1);
    auto r3 = nth_roots(F7, 3);
    std::vector<std::uint32_t> enc;
    for (auto z : r3) enc.push_back(F7.to_enc(z));
    CHECK(enc == std::vector<std::uint32_t>{1, 2, 4});
    CHECK(nth_roots(F7, 1).size() == 1);
    CHECK(F7.to_enc(nth_roots(F7, 1)[0]) == 1);

    auto F13 = build_field(13, 1);
    enc.clear();
    for (auto z : nth_roots(F13, 4)) enc.push_back(F13.to_enc(z));
    CHECK(enc == std::vector<std::uint32_t>{1, 5, 12, 8});
    for (auto z : nth_roots(F13, 4)) CHECK(F13.pow(z, 4) == F13.one());
    CHECK_THROWS_AS(nth_roots(F7, 4), Error);
}

TEST_CASE("embed is a homomorphism") {
    auto F7 = build_field(7, 1);
    auto F49 = build_field(7, 2);
    CHECK(embed(kZero, F7, F49) == kZero);
    CHECK(embed(F7.one(), F7, F49) == F49.one());
    FqElem three = embed(F7.from_enc(3), F7, F49);
    CHECK(F49.pow(three, 6) == F49.one());
    CHECK(F49.elem_order(three) == 6);
    // constants map to constants
    for (std::uint32_t c = 0; c < 7; ++c) CHECK(F49.to_enc(embed(F7.from_enc(c), F7, F49)) == c);

    std::mt19937_64 rng(7);
    for (auto [p, rs, rb] : std::vector<std::tuple<int, int, int>>{{7, 2, 4}, {3, 2, 6}, {13, 1, 3}, {2, 3, 6}}) {
        auto S = build_field(p, rs);
        auto B = build_field(p, rb);
        auto emb = make_embedding(S, B);
        std::uniform_int_distribution<std::uint32_t> pick(0, S.size() - 1);
        for (int i = 0; i < 1000; ++i) {
            FqElem a = S.from_enc(pick(rng)), b = S.from_enc(pick(rng));
            REQUIRE(emb(S.mul(a, b), B) == B.mul(emb(a, B), emb(b, B)));
            REQUIRE(emb(S.add(a, b), B) == B.add(emb(a, B), emb(b, B)));
            if (a != b) REQUIRE(emb(a, B) != emb(b, B));
        }
    }
    CHECK_THROWS_AS(make_embedding(build_field(7, 2), build_field(7, 3)), Error);
}

TEST_CASE("coset_root") {
    auto F7 = build_field(7, 1);
    CHECK(F7.to_enc(coset_root(F7, 3, F7.one())) == 1);
    CHECK(F7.to_enc(coset_root(F7, 3, F7.from_enc(2))) == 3);
    CHECK_THROWS_AS(coset_root(F7, 3, F7.from_enc(3)), Error);

    auto F49 = build_field(7, 2);
    FqElem z = embed(F7.from_enc(2), F7, F49);
    FqElem b = coset_root(F49, 3, z);
    CHECK(F49.pow(b, 16) == z);
    int solutions = 0;
    for (std::uint32_t e = 1; e < 49; ++e) solutions += F49.pow(F49.from_enc(e), 16) == z;
    CHECK(solutions == 48 / 3);
}
