#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dwork/chars.hpp"
#include "dwork/common.hpp"
#include "dwork/published.hpp"
#include "oracles.hpp"

using namespace dwork;

TEST_CASE("class enumeration matches brute force") {
    for (int n = 3; n <= 7; ++n) {
        auto classes = enumerate_classes(n);
        auto ref = oracle::all_classes(n);
        std::set<std::vector<int>> got;
        for (auto& c : classes) got.insert(c.rep);
        CHECK(got.size() == classes.size());
        CHECK(got == ref);
    }
    CHECK(enumerate_classes(3).size() == 3);
    CHECK(enumerate_classes(4).size() == 16);
    CHECK(enumerate_classes(5).size() == 125);
    CHECK_THROWS_AS(enumerate_classes(2), Error);
    CHECK_THROWS_AS(enumerate_classes(10), Error);
}

TEST_CASE("make_class normalizes and validates") {
    auto c = make_class(4, {1, 1, 3, 3});
    CHECK(c.rep == std::vector<int>{0, 0, 2, 2});
    CHECK(make_class(4, c.rep) == c);
    CHECK_THROWS_AS(make_class(4, {0, 0, 1, 2}), Error);
    CHECK_THROWS_AS(make_class(4, {0, 0, 2}), Error);
}

TEST_CASE("orbits match brute-force closure") {
    for (int n = 3; n <= 7; ++n) {
        auto orbits = full_orbits(n);
        auto ref = oracle::all_orbits(n);
        REQUIRE(orbits.size() == ref.size());
        std::uint64_t total = 0;
        for (const auto& o : orbits) {
            total += o.size;
            bool found = false;
            for (const auto& r : ref) {
                if (r.count(oracle::normalize(o.rep, n))) {
                    CHECK(r.size() == o.size);
                    found = true;
                    for (const auto& v : r) CHECK(orbit_key(n, v) == o.rep);
                }
            }
            CHECK(found);
        }
        std::uint64_t expected = 1;
        for (int i = 0; i < n - 2; ++i) expected *= n;
        CHECK(total == expected);
    }
}

TEST_CASE("orbit examples") {
    auto o4 = full_orbits(4);
    REQUIRE(o4.size() == 3);
    CHECK(o4[0].rep == std::vector<int>{0, 0, 0, 0});
    CHECK(o4[0].size == 1);
    CHECK(o4[1].rep == std::vector<int>{0, 0, 1, 3});
    CHECK(o4[1].size == 12);
    CHECK(o4[2].rep == std::vector<int>{0, 0, 2, 2});
    CHECK(o4[2].size == 3);

    auto o5 = full_orbits(5);
    REQUIRE(o5.size() == 4);
    std::map<std::vector<int>, std::pair<std::uint64_t, bool>> got;
    for (auto& o : o5) got[o.rep] = {o.size, o.excluded};
    CHECK(got[{0, 0, 0, 0, 0}] == std::make_pair<std::uint64_t, bool>(1, false));
    CHECK(got[{0, 0, 0, 1, 4}] == std::make_pair<std::uint64_t, bool>(40, false));
    CHECK(got[{0, 0, 1, 1, 3}] == std::make_pair<std::uint64_t, bool>(60, false));
    CHECK(got[{0, 1, 2, 3, 4}] == std::make_pair<std::uint64_t, bool>(24, true));

    auto o3 = full_orbits(3);
    REQUIRE(o3.size() == 2);
    CHECK(!o3[0].excluded);
    CHECK(o3[1].excluded);
}

TEST_CASE("invariants against direct definitions") {
    for (int n = 3; n <= 7; ++n) {
        auto perms = oracle::all_perms(n);
        for (const auto& o : full_orbits(n)) {
            const auto& a = o.rep;
            const auto& I = o.inv;
            std::set<int> distinct(a.begin(), a.end());
            CHECK(I.m == n - static_cast<int>(distinct.size()));
            CHECK(I.nprime == oracle::shift_period(a, n));
            CHECK(I.gamma == oracle::distinct_permutations(a));
            int f = n;
            for (int x : a)
                for (int y : a) f = std::gcd(f, oracle::md(x - y, n));
            CHECK(I.f == f);
            if (n <= 6) {
                std::set<int> im;
                std::uint64_t sizeS = 0, sizeSbar = 0, sizeSprime = 0;
                for (const auto& s : perms) {
                    int k = 0;
                    if (oracle::in_S_a(a, s, n, &k)) {
                        ++sizeS;
                        im.insert(I.n_a == 1 ? 1 : k % I.n_a);
                        bool shift_only = true, fixes = true;
                        int c = oracle::md(a[s[0]] - a[0], n);
                        for (int i = 0; i < n; ++i) {
                            shift_only &= oracle::md(a[s[i]] - a[i], n) == c;
                            fixes &= a[s[i]] == a[i];
                        }
                        sizeSbar += shift_only;
                        sizeSprime += fixes;
                    }
                }
                CHECK(std::vector<int>(im.begin(), im.end()) == I.im_k);
                CHECK(sizeS == I.size_S);
                CHECK(sizeSbar == I.size_Sbar);
                CHECK(sizeSprime == I.size_Sprime);
            }
        }
    }
}

TEST_CASE("invariant identities for n up to 8") {
    for (int n = 3; n <= 8; ++n) {
        std::uint64_t dim = 0;
        for (const auto& o : full_orbits(n)) {
            const auto& I = o.inv;
            CHECK(n == I.nprime * I.d);
            CHECK(n == I.e * I.f * I.d);
            CHECK(n == I.n_a * I.f);
            CHECK(I.n_a == I.e * I.d);
            CHECK(I.nprime == I.e * I.f);
            CHECK(I.m == I.d * I.mprime);
            CHECK(I.exponent * I.d == I.gamma);
            CHECK(I.deg_Q * static_cast<int>(I.im_k.size()) == I.mprime * static_cast<int>(euler_phi(I.n_a)));
            std::set<int> h(I.im_k.begin(), I.im_k.end());
            for (int x : h)
                for (int y : h) CHECK(h.count(I.n_a == 1 ? 1 : x * y % I.n_a));
            for (int k = 1; k < std::max(I.n_a, 2); ++k)
                if (std::gcd(k, I.n_a) == 1 && k % I.e == 1 % I.e) CHECK(h.count(k));
            bool standard = true;
            for (std::size_t i = 0; i < o.rep.size(); ++i) standard &= o.rep[i] == static_cast<int>(i);
            CHECK(o.excluded == (I.m == 0));
            CHECK((I.m == 0) == (standard && n % 2 == 1));
            if (!o.excluded) dim += static_cast<std::uint64_t>(I.d) * I.deg_Q * I.exponent;
        }
        CHECK(dim == prim_dimension(n));
    }
    CHECK(prim_dimension(3) == 2);
    CHECK(prim_dimension(4) == 21);
    CHECK(prim_dimension(5) == 204);
    CHECK(prim_dimension(7) == 39990);
}

TEST_CASE("invariant examples") {
    auto I = invariants(4, {0, 0, 2, 2});
    CHECK(I.m == 2);
    CHECK(I.nprime == 2);
    CHECK(I.d == 2);
    CHECK(I.f == 2);
    CHECK(I.n_a == 2);
    CHECK(I.e == 1);
    CHECK(I.gamma == 6);
    CHECK(I.mprime == 1);
    CHECK(I.im_k == std::vector<int>{1});
    CHECK(I.deg_Q == 1);
    CHECK(I.exponent == 3);

    auto J = invariants(5, {0, 0, 0, 1, 4});
    CHECK(J.m == 2);
    CHECK(J.d == 1);
    CHECK(J.f == 1);
    CHECK(J.n_a == 5);
    CHECK(J.e == 5);
    CHECK(J.gamma == 20);
    CHECK(J.mprime == 2);
    CHECK(J.im_k == std::vector<int>{1, 4});
    CHECK(J.deg_Q == 4);
    CHECK(J.exponent == 20);
    CHECK(J.D_label == "Q(sqrt(5))");

    for (int n = 3; n <= 9; ++n) {
        auto Z = invariants(n, std::vector<int>(n, 0));
        CHECK(Z.m == n - 1);
        CHECK(Z.nprime == n);
        CHECK(Z.d == 1);
        CHECK(Z.f == n);
        CHECK(Z.n_a == 1);
        CHECK(Z.gamma == 1);
        CHECK(Z.deg_Q == n - 1);
        CHECK(Z.exponent == 1);
        CHECK(Z.D_label == "Q");
    }

    auto K = invariants(5, {0, 0, 1, 1, 3});
    CHECK(std::find(K.im_k.begin(), K.im_k.end(), 2) == K.im_k.end());
}

TEST_CASE("field labels") {
    CHECK(field_label(7, {1, 2, 4}) == "Q(sqrt(-7))");
    CHECK(field_label(7, {1, 6}) == "Q(mu_7)+");
    CHECK(field_label(1, {1}) == "Q");
    CHECK(field_label(7, {1}) == "Q(mu_7)");
    CHECK(field_label(7, {1, 2, 3, 4, 5, 6}) == "Q");
    CHECK(field_label(5, {1, 4}) == "Q(sqrt(5))");
    CHECK(field_label(8, {1, 3}) == "(8; {1,3})");
    CHECK_THROWS_AS(field_label(7, {1, 2}), Error);
    CHECK_THROWS_AS(field_label(7, {2, 4}), Error);
}

TEST_CASE("prediction tables match the published examples") {
    for (int n : {3, 4, 5, 7}) {
        auto R = predict_report(n);
        const auto& T = published::table(n);
        REQUIRE(R.rows.size() == T.size());
        for (const auto& row : T) {
            auto key = orbit_key(n, row.rep);
            auto it = std::find_if(R.rows.begin(), R.rows.end(), [&](const PredictRow& x) { return x.rep == key; });
            REQUIRE(it != R.rows.end());
            CHECK(it->deg_Q == row.deg_Q);
            CHECK(it->exponent == row.exponent);
            CHECK(it->D_label == row.D_label);
            CHECK(it->d == row.d);
        }
        CHECK(R.total_dim == R.expected_dim);
    }
    CHECK(predict_report(4).total_dim == 21);
    CHECK(predict_report(7).total_dim == 39990);
    auto R3 = predict_report(3);
    REQUIRE(R3.rows.size() == 1);
    CHECK(R3.rows[0].deg_Q == 2);
    CHECK(R3.excluded.size() == 1);
}
