#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dwork/counting.hpp"
#include "dwork/zeta.hpp"

using namespace dwork;

namespace {

IntPoly P(std::initializer_list<long long> c) {
    std::vector<BigInt> v;
    for (auto x : c) v.push_back(x);
    return make_poly(v);
}

std::vector<Rational> as_rational(const std::vector<BigInt>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("newton identities") {
    CHECK(newton_poly({5, 13}, 2) == P({1, -5, 6}));
    CHECK(newton_poly({0, 0, 0}, 3) == P({1}));
    CHECK_THROWS_AS(newton_poly({1, 0}, 2), Error);  // c_2 = 1/2
    CHECK_THROWS_AS(newton_poly({1}, 2), Error);
}

TEST_CASE("power sums invert newton identities") {
    std::mt19937 rng(17);
    for (int it = 0; it < 50; ++it) {
        int D = 1 + static_cast<int>(rng() % 6);
        std::vector<BigInt> c{1};
        for (int k = 1; k <= D; ++k) c.push_back(static_cast<long long>(rng() % 41) - 20);
        c.back() = c.back() == 0 ? BigInt(3) : c.back();
        IntPoly p = make_poly(c);
        CHECK(newton_poly(as_rational(power_sums(p, D)), D) == p);
    }
    // roots 2 and 3
    CHECK(power_sums(P({1, -5, 6}), 3) == std::vector<BigInt>{5, 13, 35});
}

TEST_CASE("polynomial products and printing") {
    CHECK(poly_pow(P({1, 0, -169}), 3).degree() == 6);
    CHECK(poly_mul(P({1, -13}), P({1, 13})) == P({1, 0, -169}));
    CHECK(to_string(P({1, -5, 6})) == "1 - 5t + 6t^2");
    CHECK(to_string(P({1, 0, -169})) == "1 - 169t^2");
}

TEST_CASE("exact functional equation") {
    CHECK(functional_sign(P({1, 1, 7}), 1, 7) == 1);
    CHECK(functional_sign(P({1, 0, -169}), 2, 13) == -1);
    CHECK(functional_sign(P({1, 13}), 2, 13) == 1);
    CHECK(functional_sign(P({1, -13}), 2, 13) == -1);
    CHECK_FALSE(functional_sign(P({1, 2, 7}), 2, 7).has_value());
}

TEST_CASE("weil modulus check") {
    CHECK(weil_check(P({1, 1, 7}), 1, 7).pass);
    CHECK(weil_check(P({1, 0, -169}), 2, 13).pass);
    CHECK_FALSE(weil_check(P({1, -10, 7}), 1, 7).pass);
    CHECK_FALSE(weil_check(P({1, -14}), 2, 13).pass);
    // repeated roots
    CHECK(weil_check(poly_pow(P({1, -22, 1331}), 2), 3, 11).pass);
}

TEST_CASE("functional completion") {
    for (long long a : {-5LL, -3LL, -1LL, 1LL, 2LL, 5LL}) {
        auto c = functional_completion({Rational(a)}, 2, 1, 7);
        REQUIRE(c.has_value());
        CHECK(c->poly == P({1, -a, 7}));
        CHECK(c->sign == 1);
    }
    // a = 0 leaves both signs open until p_2 is known
    CHECK_FALSE(functional_completion({0}, 2, 1, 7).has_value());
    CHECK(functional_completion({0, -14}, 2, 1, 7)->poly == P({1, 0, 7}));
    // odd degree, w = 2, q = 13: the fixed root is +-13
    for (long long b : {-20LL, -3LL, 0LL, 7LL, 26LL}) {
        for (long long s : {13LL, -13LL}) {
            IntPoly target = poly_mul(P({1, -s}), P({1, b, 169}));
            auto sums = as_rational(power_sums(target, 3));
            auto c = functional_completion({sums[0]}, 3, 2, 13);
            if (!c) c = functional_completion({sums[0], sums[1]}, 3, 2, 13);
            REQUIRE(c.has_value());
            CHECK(c->poly == target);
        }
    }
    // one sum cannot tell 1 - 169t^2 from 1 + 169t^2
    CHECK_FALSE(functional_completion({0}, 2, 2, 13).has_value());
    auto c = functional_completion({0, 338}, 2, 2, 13);
    REQUIRE(c.has_value());
    CHECK(c->poly == P({1, 0, -169}));
    CHECK(poly_pow(c->poly, 3) == P({1, 0, -507, 0, 85683, 0, -4826809}));
    CHECK_THROWS_AS(functional_completion({100}, 2, 1, 7), Error);
}

TEST_CASE("quadratic fields from Gaussian periods") {
    CHECK(quadratic_field_discriminant(5, {1, 4}) == 5);
    CHECK(quadratic_field_discriminant(4, {1}) == -1);
    CHECK(quadratic_field_discriminant(3, {1}) == -3);
    CHECK(quadratic_field_discriminant(8, {1, 7}) == 2);
    CHECK(quadratic_field_discriminant(8, {1, 3}) == -2);
    CHECK(quadratic_field_discriminant(7, {1, 2, 4}) == -7);
}

TEST_CASE("quadratic split over Q(sqrt 5)") {
    // P = 1 + ((1 + 3 sqrt5)/2) t + (4 + 2 sqrt5) t^2 times its conjugate
    // c1: 1, c2: (1 - 45)/4 + 8 = -3, c3: ((1+3s)(4-2s) + (1-3s)(4+2s))/2 = (8 - 60)/2 = -26, c4: 16 - 20 = -4
    IntPoly Qa = P({1, 1, -3, -26, -4});
    auto s = quadratic_split_check(Qa, 5, 2);
    REQUIRE(s.has_value());
    std::vector<QuadNumber> expect{{1, 0}, {Rational(1, 2), Rational(3, 2)}, {4, 2}};
    std::vector<QuadNumber> conj{{1, 0}, {Rational(1, 2), Rational(-3, 2)}, {4, -2}};
    CHECK((s->first == expect || s->first == conj));
    CHECK((s->second == expect || s->second == conj));
    // already split over Q
    IntPoly sq = poly_pow(P({1, -3, 2}), 2);
    auto t = quadratic_split_check(sq, 5, 2);
    REQUIRE(t.has_value());
    for (const auto& c : t->first) CHECK(c.v == 0);
    // two rational quadratics that are not conjugate
    CHECK_FALSE(quadratic_split_check(poly_mul(P({1, 1, 2}), P({1, 3, 5})), 5, 2).has_value());
    // degree mismatch is a reported absence
    CHECK_FALSE(quadratic_split_check(P({1, 1, 2}), 5, 2).has_value());
}

TEST_CASE("n = 3: orbit factor is the numerator from N_1 and agrees with N_2") {
    struct Case {
        int q, psi;
    };
    for (auto c : {Case{7, 3}, Case{13, 2}, Case{7, 5}, Case{19, 2}}) {
        auto inst = make_instance(3, c.q, c.psi);
        BigInt N1 = count_points(inst, 1), N2 = count_points(inst, 2);
        BigInt a = BigInt(c.q) + 1 - N1;
        auto f = orbit_factor(inst, {0, 0, 0});
        CHECK(f.base == make_poly({1, -a, c.q}));
        CHECK(f.cert.pass());
        auto ps = power_sums(f.base, 2);
        CHECK(ps[1] == BigInt(c.q) * c.q + 1 - N2);
    }
}

TEST_CASE("n = 4, q = 13, psi = 2: published factors") {
    auto inst = make_instance(4, 13, 2);
    auto f = orbit_factor(inst, {0, 0, 2, 2});
    CHECK(f.base == P({1, 0, -169}));
    CHECK(f.exponent == 3);
    CHECK(poly_pow(f.base, f.exponent) == poly_pow(P({1, 0, -169}), 3));
    auto split = omega_split(inst, {0, 0, 2, 2});
    REQUIRE(split.size() == 2);
    CHECK(split[0].base == P({1, -13}));
    CHECK(split[1].base == P({1, 13}));
    for (const auto& s : split) CHECK(s.cert.pass());
    CHECK_THROWS_AS(omega_split(inst, {0, 0, 1, 3}), Error);
}

TEST_CASE("n = 4 report: degrees, certificates and global consistency") {
    auto rep = zeta_report(make_instance(4, 13, 2));
    CHECK(rep.pass());
    int total = 0;
    for (const auto& f : rep.factors)
        if (f.kind == "orbit") total += f.base.degree() * static_cast<int>(f.exponent);
    CHECK(total == 21);
    REQUIRE(rep.consistency.size() == 2);
    for (const auto& c : rep.consistency) CHECK(c.direct == c.assembled);
}

TEST_CASE("n = 5, q = 11, psi = 2: Q(sqrt 5) factors split") {
    auto inst = make_instance(5, 11, 2);
    for (auto rep : {std::vector<int>{0, 0, 0, 1, 4}, std::vector<int>{0, 0, 1, 1, 3}}) {
        auto f = orbit_factor(inst, rep);
        CHECK(f.base.degree() == 4);
        CHECK(f.cert.pass());
        REQUIRE(f.split.has_value());
        CHECK(f.split->m == 5);
    }
    auto rep = zeta_report(inst);
    CHECK(rep.pass());
}

TEST_CASE("prediction-only report for n = 7") {
    auto rep = zeta_report(make_instance(7, 29, 2), ZetaMode::predict);
    CHECK(rep.predictions.rows.size() == 11);
    CHECK(rep.predictions.total_dim == 39990);
    CHECK(rep.factors.empty());
    CHECK_THROWS_AS(zeta_report(make_instance(7, 29, 2), ZetaMode::extract), Error);
}
