#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "dwork/reptheory.hpp"
#include "oracles.hpp"

using namespace dwork;
using cd = std::complex<double>;

namespace {

int distinct_count(const std::vector<int>& a) { return static_cast<int>(std::set<int>(a.begin(), a.end()).size()); }

// Resynthesis from the multiplicity formula: sum over classes fixed pointwise by
// sigma of eps(sigma) m_a a(t), evaluated numerically.
double resynthesis(int n, const std::vector<int>& t, const Perm& sigma) {
    cd acc = 0;
    for (const auto& a : oracle::all_classes(n)) {
        bool fixed = true;
        for (int i = 0; i < n; ++i) fixed &= a[sigma[i]] == a[i];
        if (!fixed) continue;
        long long s = 0;
        for (int i = 0; i < n; ++i) s += static_cast<long long>(a[i]) * t[i];
        acc += static_cast<double>(n - distinct_count(a)) * std::polar(1.0, 2 * M_PI * (s % n) / n);
    }
    return acc.real() * sign(sigma);
}

Matrix matmul(const Matrix& A, const Matrix& B) {
    Matrix C(A.size(), std::vector<Rational>(B[0].size(), 0));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t k = 0; k < B.size(); ++k)
            for (std::size_t j = 0; j < B[0].size(); ++j) C[i][j] += A[i][k] * B[k][j];
    return C;
}

}  // namespace

TEST_CASE("hirzebruch characteristic") {
    CHECK(hirzebruch_chi(3, 3) == 0);
    for (int d = 1; d < 10; ++d) {
        CHECK(hirzebruch_chi(2, d) == d);
        CHECK(hirzebruch_chi(1, d) == 0);
    }
    // plane curves: chi = 3d - d^2
    for (int d = 1; d < 10; ++d) CHECK(hirzebruch_chi(3, d) == 3 * d - d * d);
}

TEST_CASE("closed-form traces") {
    CHECK(trace_closed_form(3, group_identity(3)) == 2);
    CHECK(trace_closed_form(3, make_element(3, {0, 1, 2}, identity_perm(3))) == 2);
    Perm tau = identity_perm(4);
    std::swap(tau[0], tau[1]);
    CHECK(transposition_trace(4) == -7);
    CHECK(transposition_trace(4) == (((-3) * (-3) * (-3) + 3) / 4 - 1));
    CHECK_THROWS_AS(trace_closed_form(4, GroupElement{{0, 0, 0, 0}, tau}), Error);
    for (int n = 3; n <= 8; ++n) CHECK(trace_closed_form(n, group_identity(n)) == BigInt(prim_dimension(n)));
}

TEST_CASE("closed form equals resynthesis from multiplicities") {
    std::mt19937 rng(11);
    for (int n = 3; n <= 5; ++n) {
        for (const auto& t : all_A_parts(n))
            CHECK(std::abs(static_cast<double>(trace_closed_form(n, GroupElement{t, identity_perm(n)})) -
                           resynthesis(n, t, identity_perm(n))) < 1e-6);
        auto perms = all_permutations(n);
        auto As = all_A_parts(n);
        for (int trial = 0; trial < 40; ++trial) {
            const Perm& s = perms[rng() % perms.size()];
            auto ct = cycle_type(s);
            if (ct.front() != ct.back()) continue;
            const auto& t = As[rng() % As.size()];
            CHECK(std::abs(static_cast<double>(trace_closed_form(n, GroupElement{t, s})) - resynthesis(n, t, s)) < 1e-6);
        }
    }
}

TEST_CASE("Fourier multiplicities") {
    for (int n = 3; n <= 6; ++n) {
        auto m = fourier_multiplicities(n);
        CHECK(m.size() == oracle::all_classes(n).size());
        for (const auto& [a, v] : m) CHECK(v == n - distinct_count(a));
    }
    CHECK(fourier_multiplicity(3, {0, 0, 0}) == 2);
    CHECK(fourier_multiplicity(3, {0, 1, 2}) == 0);
    CHECK(fourier_multiplicity(4, {0, 0, 2, 2}) == 2);
    CHECK(fourier_multiplicity(5, {0, 1, 2, 3, 4}) == 0);
    for (const auto& o : full_orbits(7)) CHECK(fourier_multiplicity(7, o.rep) == o.inv.m);
}

TEST_CASE("lemma sums") {
    auto [l1, r1] = lemma_sum_check(3, 3, 1, {0});
    CHECK(l1 == 0);
    CHECK(r1 == 0);
    auto [l2, r2] = lemma_sum_check(3, 1, 1, {0});
    CHECK(l2 == 2);
    CHECK(r2 == 2);
    auto [l3, r3] = lemma_sum_check(5, 5, 3, {0, 1, 2});
    CHECK(l3 == r3);
    std::mt19937 rng(5);
    for (int n = 3; n <= 6; ++n)
        for (int np = 1; np <= n; ++np) {
            if (n % np) continue;
            for (int r = 1; r <= 4; ++r)
                for (int k = 0; k < 10; ++k) {
                    std::vector<int> mus(r);
                    for (int& x : mus) x = static_cast<int>(rng() % n);
                    auto [l, rr] = lemma_sum_check(n, np, r, mus);
                    CHECK(l == rr);
                }
        }
    CHECK_THROWS_AS(lemma_sum_check(6, 4, 1, {0}), Error);
}

TEST_CASE("stabilizer structure") {
    auto C = class_data(4, {0, 0, 2, 2});
    auto S = stabilizer_structure(C);
    CHECK(S.sigma_a == Perm{2, 3, 0, 1});
    CHECK(format_cycles(S.sigma_a) == "(1 3)(2 4)");
    CHECK(S.homomorphism_ok);
    CHECK(S.size_S_enumerated == C.inv.size_S);

    auto Z = class_data(5, {0, 0, 0, 0, 0});
    auto SZ = stabilizer_structure(Z);
    CHECK(SZ.sigma_a == identity_perm(5));
    CHECK(SZ.sprime_generators.size() == 4);

    auto D = class_data(5, {0, 0, 0, 1, 4});
    CHECK(stabilizer_structure(D).size_S_enumerated == 12);

    for (int n = 3; n <= 6; ++n)
        for (const auto& o : full_orbits(n)) {
            auto Cd = class_data(n, o.rep);
            auto St = stabilizer_structure(Cd);
            CHECK(St.homomorphism_ok);
            CHECK(St.size_S_enumerated == Cd.inv.size_S);
            CHECK(cycle_type(St.sigma_a) == std::vector<int>(Cd.inv.nprime, Cd.inv.d));
            for (int i = 0; i < n; ++i) CHECK(Cd.a[St.sigma_a[i]] == (Cd.a[i] + Cd.inv.nprime) % n);
            CHECK(St.splitting.size() == Cd.inv.size_S / Cd.inv.size_Sprime);
        }
}

TEST_CASE("u and v") {
    auto C = class_data(4, {0, 0, 2, 2});
    CHECK(u_v_of(C, identity_perm(4)) == UV{0, 1});
    CHECK(u_v_of(C, Perm{2, 3, 0, 1}) == UV{1, 1});
    auto D = class_data(5, {0, 0, 0, 1, 4});
    CHECK(u_v_of(D, Perm{0, 1, 2, 4, 3}) == UV{0, 4});
    CHECK_THROWS_AS(u_v_of(D, Perm{1, 2, 3, 4, 0}), Error);
    // elements of the shift stabilizer have v = 1 and u in e_a Z
    for (int n = 3; n <= 6; ++n)
        for (const auto& o : full_orbits(n)) {
            auto Cd = class_data(n, o.rep);
            for (const auto& s : all_permutations(n)) {
                auto uv = try_u_v(Cd, s);
                if (!uv) continue;
                bool shift = true;
                int c = oracle::md(Cd.a[s[0]] - Cd.a[0], n);
                for (int i = 0; i < n; ++i) shift &= oracle::md(Cd.a[s[i]] - Cd.a[i], n) == c;
                if (shift) {
                    CHECK(uv->v == 1);
                    CHECK(uv->u % Cd.inv.e == 0);
                }
            }
        }
}

TEST_CASE("mu is multiplicative") {
    std::mt19937 rng(99);
    for (int n = 3; n <= 6; ++n)
        for (const auto& o : full_orbits(n)) {
            auto C = class_data(n, o.rep);
            std::vector<Perm> Sa;
            for (const auto& s : all_permutations(n))
                if (try_u_v(C, s)) Sa.push_back(s);
            auto As = all_A_parts(n);
            int trials = n <= 5 ? 1000 : 200;
            for (int w = 0; w < C.inv.d; ++w)
                for (int k = 0; k < trials; ++k) {
                    GroupElement g{As[rng() % As.size()], Sa[rng() % Sa.size()]};
                    GroupElement h{As[rng() % As.size()], Sa[rng() % Sa.size()]};
                    REQUIRE(matmul(mu_matrix(C, w, g), mu_matrix(C, w, h)) == mu_matrix(C, w, multiply(g, h, n)));
                }
        }
}

TEST_CASE("mu examples") {
    auto C = class_data(4, {0, 0, 2, 2});
    auto M = mu_matrix(C, 1, GroupElement{{0, 0, 0, 0}, Perm{2, 3, 0, 1}});
    REQUIRE(M.size() == 1);
    CHECK(M[0][0] == -1);
    auto I = mu_matrix(C, 0, group_identity(4));
    CHECK(I[0][0] == 1);
    Perm tau{1, 0, 2, 3};
    CHECK(mu_matrix(C, 0, GroupElement{{0, 0, 0, 0}, tau})[0][0] == -1);
    auto D = class_data(5, {0, 0, 0, 1, 4});
    auto T = mu_matrix(D, 0, GroupElement{{0, 0, 0, 0, 0}, Perm{1, 0, 2, 3, 4}});
    for (std::size_t i = 0; i < T.size(); ++i)
        for (std::size_t j = 0; j < T.size(); ++j) CHECK(T[i][j] == (i == j ? -1 : 0));
}

TEST_CASE("xi degrees") {
    for (int n = 3; n <= 6; ++n)
        for (const auto& o : full_orbits(n)) {
            auto C = class_data(n, o.rep);
            for (int w = 0; w < C.inv.d; ++w)
                CHECK(xi_character(C, w, group_identity(n)) == BigInt(C.inv.exponent * C.inv.D_degree));
        }
    CHECK(xi_character(class_data(3, {0, 0, 0}), 0, group_identity(3)) == 1);
    CHECK(xi_character(class_data(4, {0, 0, 2, 2}), 1, group_identity(4)) == 3);
    CHECK(xi_character(class_data(5, {0, 0, 0, 1, 4}), 0, group_identity(5)) == 40);
}

TEST_CASE("xi orthogonality on G for n=4") {
    const int n = 4;
    auto G = all_elements(n);
    std::vector<std::pair<ClassData, int>> reps;
    for (const auto& o : full_orbits(n)) {
        auto C = class_data(n, o.rep);
        for (int w = 0; w < C.inv.d; ++w) reps.emplace_back(C, w);
    }
    std::vector<std::vector<BigInt>> vals;
    for (auto& [C, w] : reps) {
        std::vector<BigInt> v;
        for (const auto& g : G) v.push_back(xi_character(C, w, g));
        vals.push_back(v);
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j) {
            BigInt s = 0;
            for (std::size_t k = 0; k < G.size(); ++k) {
                // characters are rational so xi(g^-1) = xi(g)
                s += vals[i][k] * vals[j][k];
            }
            Rational ip(s, BigInt(G.size()));
            CHECK(ip == (i == j ? Rational(reps[i].first.inv.D_degree) : Rational(0)));
        }
    // class function and g^-1 symmetry
    auto C = class_data(4, {0, 0, 2, 2});
    std::mt19937 rng(1);
    for (int k = 0; k < 200; ++k) {
        const auto& g = G[rng() % G.size()];
        const auto& h = G[rng() % G.size()];
        auto c = multiply(multiply(h, g, n), group_inverse(h, n), n);
        CHECK(xi_character(C, 1, g) == xi_character(C, 1, c));
        CHECK(xi_character(C, 1, g) == xi_character(C, 1, group_inverse(g, n)));
    }
}

TEST_CASE("projector weights") {
    auto P0 = orbit_projector(4, {0, 0, 0, 0});
    for (const auto& e : P0.entries) CHECK(e.weight == Rational(1, 16));
    auto P = orbit_projector(4, {0, 0, 2, 2});
    std::uint64_t total = 0;
    for (const auto& e : P.entries) {
        total += e.size;
        if (e.rep == group_identity(4)) CHECK(e.weight == Rational(3, 16));
    }
    CHECK(total == 16);

    auto C = class_data(4, {0, 0, 2, 2});
    auto W = omega_projector(C, 1);
    CHECK(W.full_group);
    bool found = false;
    for (const auto& e : W.entries)
        if (e.rep == group_identity(4)) {
            CHECK(e.weight == Rational(3, 128));
            found = true;
        }
    CHECK(found);
    CHECK_THROWS_AS(omega_projector(class_data(4, {0, 0, 1, 3}), 1), Error);

    // applied to characters: trace of the projector on W' is dim W' or 0
    for (const auto& o : full_orbits(4)) {
        auto Co = class_data(4, o.rep);
        for (int w = 0; w < Co.inv.d; ++w) {
            auto Pw = omega_projector(Co, w);
            for (const auto& o2 : full_orbits(4)) {
                auto C2 = class_data(4, o2.rep);
                for (int w2 = 0; w2 < C2.inv.d; ++w2) {
                    Rational s = 0;
                    for (const auto& e : Pw.entries) s += e.weight * Rational(e.size) * Rational(xi_character(C2, w2, e.rep));
                    bool same = o.rep == o2.rep && w == w2;
                    CHECK(s == (same ? Rational(xi_character(C2, w2, group_identity(4))) : Rational(0)));
                }
            }
        }
    }
    // orbit projectors sum to the identity indicator on A
    std::map<std::vector<int>, Rational> sum;
    for (const auto& o : full_orbits(5))
        for (const auto& e : orbit_projector(5, o.rep).entries) sum[e.rep.t] += e.weight;
    for (const auto& [t, v] : sum) CHECK(v == (t == std::vector<int>(5, 0) ? Rational(1) : Rational(0)));
}

TEST_CASE("regular structure and vanishing traces") {
    for (int n = 3; n <= 6; ++n) {
        for (const auto& o : full_orbits(n)) {
            auto C = class_data(n, o.rep);
            for (const auto& c : verify_regular_structure(C)) {
                INFO(c.name << " " << c.witness);
                CHECK(c.pass);
            }
        }
        CHECK(transposition_sum_check(n).pass);
    }
    CHECK(transposition_sum_check(7).pass);
    CHECK(verify_regular_structure(class_data(4, {0, 0, 0, 0})).size() == 1);
}
