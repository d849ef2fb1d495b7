#include "dwork/acceptance.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "dwork/chars.hpp"
#include "dwork/counting.hpp"
#include "dwork/published.hpp"
#include "dwork/zeta.hpp"

namespace dwork {

namespace {

struct Tally {
    bool pass = true;
    std::vector<std::string> notes;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (notes.size() < 8) notes.push_back(what);
        }
    }
    std::string detail(const std::string& ok_text) const {
        if (pass) return ok_text;
        std::string s;
        for (const auto& n : notes) s += (s.empty() ? "" : "; ") + n;
        return s;
    }
};

std::uint64_t distinct_arrangements(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    BigInt r = factorial(static_cast<int>(v.size()));
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        r /= factorial(static_cast<int>(j - i));
        i = j;
    }
    return static_cast<std::uint64_t>(r);
}

// Projective points over F_q with plain modular integers.
BigInt naive_projective_count(int n, std::uint32_t q, std::uint32_t psi) {
    std::uint64_t count = 0;
    std::vector<std::uint64_t> x(n);
    for (int lead = 0; lead < n; ++lead) {
        std::uint64_t total = 1;
        for (int i = lead + 1; i < n; ++i) total *= q;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::fill(x.begin(), x.end(), 0);
            x[lead] = 1;
            std::uint64_t c = code;
            for (int i = lead + 1; i < n; ++i) {
                x[i] = c % q;
                c /= q;
            }
            std::uint64_t s = 0, prod = 1;
            for (int i = 0; i < n; ++i) {
                s = (s + powmod(x[i], n, q)) % q;
                prod = prod * x[i] % q;
            }
            std::uint64_t rhs = static_cast<std::uint64_t>(n) * psi % q * prod % q;
            if (s == rhs) ++count;
        }
    }
    return count;
}

std::vector<GroupElement> class_representatives(int n) {
    std::set<GroupElement> reps;
    for (const auto& g : all_elements(n)) reps.insert(sn_class_key(g, n));
    return {reps.begin(), reps.end()};
}

std::string poly_list(const std::vector<FactorReport>& fs) {
    std::string s;
    for (const auto& f : fs) s += (s.empty() ? "" : ", ") + to_string(f.base);
    return s;
}

CriterionResult c1() {
    Tally t;
    for (int n : {3, 4, 5, 7}) {
        auto R = predict_report(n);
        const auto& T = published::table(n);
        t.require(R.rows.size() == T.size(), "n=" + std::to_string(n) + " row count");
        for (const auto& row : T) {
            auto key = orbit_key(n, row.rep);
            auto it = std::find_if(R.rows.begin(), R.rows.end(), [&](const PredictRow& x) { return x.rep == key; });
            if (it == R.rows.end()) {
                t.require(false, "missing " + class_string(row.rep));
                continue;
            }
            t.require(it->deg_Q == row.deg_Q && it->exponent == row.exponent && it->D_label == row.D_label && it->d == row.d,
                      "row " + class_string(row.rep));
        }
    }
    return {1, "prediction tables n=3,4,5,7", t.pass, t.detail("all rows match"), 0};
}

CriterionResult c2() {
    Tally t;
    std::string dims;
    for (int n = 3; n <= 8; ++n) {
        auto R = predict_report(n);
        BigInt formula = (big_pow(BigInt(n - 1), n) + (n % 2 ? -1 : 1) * BigInt(n - 1)) / n;
        t.require(BigInt(R.total_dim) == formula, "n=" + std::to_string(n));
        dims += (dims.empty() ? "" : ",") + std::to_string(R.total_dim);
    }
    t.require(predict_report(3).total_dim == 2 && predict_report(4).total_dim == 21 && predict_report(5).total_dim == 204 &&
                  predict_report(7).total_dim == 39990,
              "published dimensions");
    return {2, "dimension bookkeeping n=3..8", t.pass, t.detail("dims " + dims), 0};
}

CriterionResult c3() {
    Tally t;
    int count = 0;
    for (int n = 3; n <= 8; ++n)
        for (const auto& o : full_orbits(n)) {
            const auto& I = o.inv;
            const std::string tag = class_string(o.rep);
            ++count;
            t.require(n == I.nprime * I.d && n == I.e * I.f * I.d && n == I.n_a * I.f, tag + " n factorizations");
            t.require(I.n_a == I.e * I.d && I.nprime == I.e * I.f, tag + " n_a = e d");
            t.require(I.m == I.d * I.mprime, tag + " m = d m'");
            t.require(I.exponent * I.d == I.gamma && I.gamma == distinct_arrangements(o.rep), tag + " gamma");
            t.require(static_cast<std::uint64_t>(I.deg_Q) * I.im_k.size() == static_cast<std::uint64_t>(I.mprime) * euler_phi(I.n_a),
                      tag + " deg_Q |Im k| = m' phi(n_a)");
            t.require(static_cast<std::uint64_t>(I.D_degree) * I.im_k.size() == euler_phi(I.n_a), tag + " [D:Q]");
            t.require(I.m == n - static_cast<int>(std::set<int>(o.rep.begin(), o.rep.end()).size()), tag + " m_a");
        }
    return {3, "invariant identities n<=8", t.pass, t.detail(std::to_string(count) + " orbits"), 0};
}

CriterionResult c4() {
    Tally t;
    int count = 0;
    for (int n = 3; n <= 6; ++n)
        for (const auto& [a, m] : fourier_multiplicities(n)) {
            ++count;
            int expect = n - static_cast<int>(std::set<int>(a.begin(), a.end()).size());
            t.require(m == expect, "n=" + std::to_string(n) + " " + class_string(a));
        }
    for (const auto& o : full_orbits(7)) {
        ++count;
        t.require(fourier_multiplicity(7, o.rep) == o.inv.m, "n=7 " + class_string(o.rep));
    }
    return {4, "multiplicity theorem", t.pass, t.detail(std::to_string(count) + " classes"), 0};
}

CriterionResult c5() {
    Tally t;
    std::mt19937 rng(2024);
    int count = 0;
    for (int n = 3; n <= 6; ++n)
        for (int np = 1; np <= n; ++np) {
            if (n % np) continue;
            for (int r = 1; r <= 4; ++r)
                for (int k = 0; k < 50; ++k) {
                    std::vector<int> mus(r);
                    for (int& x : mus) x = static_cast<int>(rng() % n);
                    auto [lhs, rhs] = lemma_sum_check(n, np, r, mus);
                    ++count;
                    t.require(lhs == rhs, "n=" + std::to_string(n) + " n'=" + std::to_string(np) + " r=" + std::to_string(r));
                }
        }
    return {5, "lemma sums", t.pass, t.detail(std::to_string(count) + " tuples"), 0};
}

CriterionResult c6() {
    Tally t;
    int count = 0;
    for (int n = 3; n <= 6; ++n) {
        for (const auto& o : full_orbits(n))
            for (const auto& c : verify_regular_structure(class_data(n, o.rep))) {
                ++count;
                t.require(c.pass, c.name + " " + c.witness);
            }
        auto tr = transposition_sum_check(n);
        ++count;
        t.require(tr.pass, tr.name + " " + tr.witness);
    }
    return {6, "character structure n<=6", t.pass, t.detail(std::to_string(count) + " checks"), 0};
}

CriterionResult c7() {
    Tally t;
    int count = 0;
    for (int n = 3; n <= 7; ++n)
        for (const auto& o : full_orbits(n)) {
            auto C = class_data(n, o.rep);
            for (int w = 0; w < C.inv.d; ++w) {
                ++count;
                t.require(xi_character(C, w, group_identity(n)) == BigInt(C.inv.exponent * C.inv.D_degree),
                          class_string(o.rep) + " omega " + std::to_string(w));
            }
        }
    return {7, "xi degrees n<=7", t.pass, t.detail(std::to_string(count) + " characters"), 0};
}

CriterionResult c8() {
    Tally t;
    std::string polys;
    for (auto [q, psi] : {std::pair{7u, 3u}, std::pair{13u, 2u}}) {
        auto inst = make_instance(3, q, psi);
        BigInt N1 = naive_projective_count(3, q, psi);
        BigInt a = BigInt(q) + 1 - N1;
        auto from_n1 = functional_completion({Rational(a)}, 2, 1, q);
        auto f = orbit_factor(inst, {0, 0, 0});
        t.require(from_n1.has_value(), "N_1 leaves the sign open");
        if (from_n1) t.require(from_n1->poly == f.base, "projected factor differs from the N_1 numerator");
        BigInt N2 = count_points(inst, 2);
        t.require(power_sums(f.base, 2)[1] == BigInt(q) * q + 1 - N2, "N_2 mismatch");
        polys += (polys.empty() ? "" : "; ") + to_string(f.base);
    }
    return {8, "end-to-end n=3", t.pass, t.detail(polys), 0};
}

CriterionResult c9() {
    Tally t;
    auto inst = make_instance(4, 13, 2);
    auto f = orbit_factor(inst, {0, 0, 2, 2});
    IntPoly target = make_poly({1, 0, -169});
    t.require(poly_pow(f.base, f.exponent) == poly_pow(target, 3), "orbit factor " + to_string(f.base));
    auto split = omega_split(inst, {0, 0, 2, 2});
    t.require(split.size() == 2 && split[0].base == make_poly({1, -13}) && split[1].base == make_poly({1, 13}),
              "omega multiset " + poly_list(split));
    return {9, "published n=4 factors", t.pass, t.detail("(" + to_string(f.base) + ")^3, {" + poly_list(split) + "}"), 0};
}

CriterionResult c10() {
    Tally t;
    auto rep = zeta_report(make_instance(4, 13, 2));
    std::string rows;
    for (const auto& c : rep.consistency) {
        t.require(c.pass, "r=" + std::to_string(c.r));
        rows += (rows.empty() ? "" : ", ") + std::string("r=") + std::to_string(c.r) + ": " + c.direct.str();
    }
    t.require(rep.consistency.size() == 2, "missing rows");
    return {10, "global consistency n=4", t.pass, t.detail(rows), 0};
}

CriterionResult c11() {
    Tally t;
    auto inst = make_instance(5, 11, 2);
    std::string polys;
    for (auto a : {std::vector<int>{0, 0, 0, 1, 4}, std::vector<int>{0, 0, 1, 1, 3}}) {
        auto f = orbit_factor(inst, a);
        t.require(f.base.degree() == 4, class_string(a) + " degree");
        t.require(f.cert.pass(), class_string(a) + " certificate");
        t.require(f.split.has_value() && f.split->m == 5, class_string(a) + " no split over Q(sqrt 5)");
        polys += (polys.empty() ? "" : "; ") + to_string(f.base);
    }
    return {11, "n=5 extraction and Q(sqrt 5) split", t.pass, t.detail(polys), 0};
}

CriterionResult c12() {
    Tally t;
    int count = 0;
    auto run = [&](const DworkInstance& inst, const std::vector<GroupElement>& gs, int r) {
        for (const auto& g : gs) {
            ++count;
            t.require(fixed_count_general(inst, g, r) == oracle_fixed_count(inst, g, r),
                      "n=" + std::to_string(inst.n) + " " + class_string(g.t) + " " + format_cycles(g.sigma) + " r=" + std::to_string(r));
        }
    };
    auto i3 = make_instance(3, 7, 3);
    run(i3, all_elements(3), 1);
    run(i3, class_representatives(3), 2);
    run(make_instance(4, 13, 2), class_representatives(4), 1);
    return {12, "oracle equivalence", t.pass, t.detail(std::to_string(count) + " elements"), 0};
}

CriterionResult c13() {
    Tally t;
    std::vector<FactorReport> all;
    for (auto [q, psi] : {std::pair{7u, 3u}, std::pair{13u, 2u}})
        for (auto& f : zeta_report(make_instance(3, q, psi), ZetaMode::extract).factors) all.push_back(f);
    for (auto& f : zeta_report(make_instance(4, 13, 2), ZetaMode::extract).factors) all.push_back(f);
    for (auto& f : zeta_report(make_instance(5, 11, 2), ZetaMode::extract).factors) all.push_back(f);
    double worst = 0;
    for (const auto& f : all) {
        worst = std::max(worst, f.cert.weil_deviation);
        t.require(f.cert.weil && f.cert.functional, class_string(f.rep) + " " + to_string(f.base));
    }
    std::ostringstream os;
    os << all.size() << " factors, max deviation " << worst;
    return {13, "Weil and functional certificates", t.pass, t.detail(os.str()), 0};
}

}  // namespace

CriterionResult run_criterion(int id) {
    using Fn = CriterionResult (*)();
    static const Fn table[kCriteria] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13};
    if (id < 1 || id > kCriteria) invalid_input("criterion", "must lie in 1.." + std::to_string(kCriteria));
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = table[id - 1]();
    } catch (const Error& e) {
        r = CriterionResult{id, "criterion " + std::to_string(id), false, e.what(), 0};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriteria; ++id) {
        out.push_back(run_criterion(id));
        if (on_result) on_result(out.back());
    }
    return out;
}

std::vector<NamedCheck> verify_rep_checks(int n) {
    if (n < 3 || n > 9) invalid_input("n", "must lie in 3..9");
    std::vector<NamedCheck> out;
    const bool exhaustive = n <= 6;
    if (n <= 7) {
        NamedCheck fm{"multiplicities n - #distinct", true, ""};
        if (exhaustive) {
            for (const auto& [a, m] : fourier_multiplicities(n))
                if (m != n - static_cast<int>(std::set<int>(a.begin(), a.end()).size())) {
                    fm.pass = false;
                    fm.witness += class_string(a) + " ";
                }
        } else {
            for (const auto& o : full_orbits(n))
                if (fourier_multiplicity(n, o.rep) != o.inv.m) {
                    fm.pass = false;
                    fm.witness += class_string(o.rep) + " ";
                }
        }
        out.push_back(fm);
    }
    if (n <= 7) out.push_back(transposition_sum_check(n));
    for (const auto& o : full_orbits(n)) {
        auto C = class_data(n, o.rep);
        if (n <= 6)
            for (auto& c : verify_regular_structure(C)) out.push_back(std::move(c));
        if (n <= 7)
            for (int w = 0; w < C.inv.d; ++w) {
                NamedCheck x{"xi degree " + class_string(o.rep) + " omega " + std::to_string(w), true, ""};
                BigInt deg = xi_character(C, w, group_identity(n));
                if (deg != BigInt(C.inv.exponent * C.inv.D_degree)) {
                    x.pass = false;
                    x.witness = "xi(1) = " + deg.str();
                }
                out.push_back(x);
            }
    }
    NamedCheck dim{"dimension sum", true, ""};
    auto R = predict_report(n);
    if (R.total_dim != R.expected_dim) {
        dim.pass = false;
        dim.witness = std::to_string(R.total_dim) + " vs " + std::to_string(R.expected_dim);
    }
    out.push_back(dim);
    return out;
}

}  // namespace dwork
