#include "dwork/reptheory.hpp"

#include <mutex>
#include <set>
#include <sstream>

namespace dwork {

namespace {

BigInt ipow_signed(std::int64_t base, int e) { return big_pow(BigInt(base), static_cast<unsigned>(e)); }

std::vector<int> units_or_one(int m) { return m <= 2 ? std::vector<int>{1} : units_mod(m); }

const std::vector<BigInt>& diagonal_traces(int n) {
    static std::map<int, std::vector<BigInt>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<BigInt> out;
    Perm id = identity_perm(n);
    for (const auto& t : all_A_parts(n)) out.push_back(trace_closed_form(n, GroupElement{t, id}));
    return cache.emplace(n, std::move(out)).first->second;
}

std::string vec_str(const std::vector<int>& v) { return class_string(v); }

}  // namespace

BigInt hirzebruch_chi(int k, int d) {
    if (k < 1 || d < 1) invalid_input("hirzebruch_chi", "k and d must be positive");
    BigInt num = ipow_signed(1 - d, k) + (d - 1);
    if (num % d != 0) check_failed("hirzebruch_chi", "divisibility failed");
    return BigInt(k - 1) + num / d;
}

BigInt trace_closed_form(int n, const GroupElement& g) {
    auto cyc = cycles(g.sigma);
    int d = static_cast<int>(cyc.front().size());
    for (const auto& c : cyc)
        if (static_cast<int>(c.size()) != d) invalid_input("sigma", "cycle type is not uniform");
    int nprime = static_cast<int>(cyc.size());
    std::vector<int> k(n, 0);
    for (const auto& c : cyc) {
        std::int64_t s = 0;
        for (int i : c) s += g.t[i];
        ++k[mod(s, n)];
    }
    BigInt sum = 0;
    for (int e = 0; e < n; e += d) sum += ipow_signed(1 - n, k[e]);
    if (n % 2) sum = -sum;
    if (sum % nprime != 0) check_failed("trace_closed_form", "non-integral trace");
    return sum / nprime;
}

BigInt transposition_trace(int n) {
    BigInt num = ipow_signed(1 - n, n - 1) + (n - 1);
    if (num % n != 0) check_failed("transposition_trace", "non-integral");
    BigInt v = num / n - (n % 2 == 0 ? 1 : 0);
    return n % 2 == 0 ? v : BigInt(-v);
}

std::pair<Rational, Rational> lemma_sum_check(int n, int nprime, int r, const std::vector<int>& mus) {
    if (nprime < 1 || n % nprime != 0) invalid_input("nprime", "must divide n");
    if (r < 1 || static_cast<int>(mus.size()) != r) invalid_input("mus", "need r >= 1 exponents");
    double cost = 1;
    for (int i = 0; i < r; ++i) cost *= (n - 1);
    require_cost("lemma_sum_check", cost);
    std::vector<std::int64_t> counts(n, 0);
    std::vector<int> c(r, 1);
    while (true) {
        std::int64_t s = 0, e = 0;
        for (int i = 0; i < r; ++i) {
            s += c[i];
            e += static_cast<std::int64_t>(c[i]) * mus[i];
        }
        if (mod(s, nprime) == 0) ++counts[mod(e, n)];
        int i = 0;
        while (i < r && ++c[i] == n) c[i++] = 1;
        if (i == r) break;
    }
    Rational lhs = Cyclotomic::from_exponents(n, counts).rational_value();
    int d = n / nprime;
    std::vector<int> k(n, 0);
    for (int m : mus) ++k[mod(m, n)];
    BigInt sum = 0;
    for (int e = 0; e < n; e += d) sum += ipow_signed(1 - n, k[e]);
    Rational rhs = Rational(sum, nprime);
    if (r % 2) rhs = -rhs;
    return {lhs, rhs};
}

int pairing(int n, const std::vector<int>& a, const std::vector<int>& t) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::int64_t>(a[i]) * t[i];
    return static_cast<int>(mod(s, n));
}

Rational fourier_multiplicity(int n, const std::vector<int>& a) {
    const auto& T = diagonal_traces(n);
    auto As = all_A_parts(n);
    std::vector<Rational> S(n, 0);
    for (std::size_t i = 0; i < As.size(); ++i) S[mod(-pairing(n, a, As[i]), n)] += Rational(T[i]);
    return Cyclotomic::from_exponents(n, S).rational_value() / Rational(As.size());
}

std::map<std::vector<int>, Rational> fourier_multiplicities(int n) {
    double sz = 1;
    for (int i = 0; i < n - 2; ++i) sz *= n;
    require_cost("fourier_multiplicities", sz * sz * n);
    std::map<std::vector<int>, Rational> out;
    for (const auto& c : enumerate_classes(n)) out[c.rep] = fourier_multiplicity(n, c.rep);
    return out;
}

Rational trace_on_isotypic(int n, const std::vector<int>& a, const Perm& sigma) {
    auto sa = make_class(n, act(sigma, a)).rep;
    if (sa != make_class(n, a).rep) invalid_input("sigma", "does not fix the class");
    std::vector<Rational> S(n, 0);
    auto As = all_A_parts(n);
    for (const auto& t : As) {
        BigInt tr = trace_closed_form(n, GroupElement{t, sigma});
        S[mod(-pairing(n, a, t), n)] += Rational(tr);
    }
    return Cyclotomic::from_exponents(n, S).rational_value() / Rational(As.size());
}

ClassData class_data(int n, const std::vector<int>& a) {
    ClassData C;
    C.n = n;
    C.a = make_class(n, a).rep;
    C.inv = invariants(n, C.a);
    C.levels.assign(n, {});
    for (int i = 0; i < n; ++i) {
        C.b.push_back(C.a[i] / C.inv.f);
        C.levels[C.a[i]].push_back(i);
    }
    return C;
}

std::optional<UV> try_u_v(const ClassData& C, const Perm& sigma) {
    const int na = C.inv.n_a;
    for (int v : units_or_one(na)) {
        int u = static_cast<int>(mod(C.b[sigma[0]] - static_cast<std::int64_t>(v) * C.b[0], na));
        bool ok = true;
        for (int i = 0; i < C.n && ok; ++i) ok = mod(C.b[sigma[i]] - static_cast<std::int64_t>(v) * C.b[i] - u, na) == 0;
        if (ok) return UV{u, v};
    }
    return std::nullopt;
}

UV u_v_of(const ClassData& C, const Perm& sigma) {
    auto r = try_u_v(C, sigma);
    if (!r) invalid_input("sigma", format_cycles(sigma) + " is not in S_a for " + vec_str(C.a));
    return *r;
}

StabilizerStructure stabilizer_structure(const ClassData& C, bool enumerate) {
    StabilizerStructure S;
    const int n = C.n, f = C.inv.f, na = C.inv.n_a;
    for (const auto& lv : C.levels)
        for (std::size_t l = 0; l + 1 < lv.size(); ++l) {
            Perm t = identity_perm(n);
            std::swap(t[lv[l]], t[lv[l + 1]]);
            S.sprime_generators.push_back(t);
        }
    S.sigma_a = identity_perm(n);
    for (int val = 0; val < n; ++val) {
        const auto& src = C.levels[val];
        const auto& dst = C.levels[(val + C.inv.nprime) % n];
        for (std::size_t l = 0; l < src.size(); ++l) S.sigma_a[src[l]] = dst[l];
    }
    std::map<std::pair<int, int>, Perm> table;
    for (int v : units_or_one(na)) {
        for (int u = 0; u < na; ++u) {
            bool ok = true;
            for (int beta = 0; beta < na && ok; ++beta) {
                int img = static_cast<int>(mod(static_cast<std::int64_t>(v) * beta + u, na));
                ok = C.levels[beta * f].size() == C.levels[img * f].size();
            }
            if (!ok) continue;
            Perm s = identity_perm(n);
            for (int beta = 0; beta < na; ++beta) {
                int img = static_cast<int>(mod(static_cast<std::int64_t>(v) * beta + u, na));
                const auto& src = C.levels[beta * f];
                const auto& dst = C.levels[img * f];
                for (std::size_t l = 0; l < src.size(); ++l) s[src[l]] = dst[l];
            }
            table[{u, v}] = s;
            S.splitting.push_back(SplitEntry{UV{u, v}, s});
        }
    }
    S.homomorphism_ok = true;
    for (const auto& x : S.splitting) {
        auto uv = try_u_v(C, x.sigma);
        if (!uv || !(*uv == x.uv)) S.homomorphism_ok = false;
        for (const auto& y : S.splitting) {
            int u = static_cast<int>(mod(x.uv.u + static_cast<std::int64_t>(x.uv.v) * y.uv.u, na));
            int v = static_cast<int>(mod(static_cast<std::int64_t>(x.uv.v) * y.uv.v, std::max(na, 1)));
            if (na <= 2) v = 1;
            auto it = table.find({u, v});
            if (it == table.end() || it->second != compose(x.sigma, y.sigma)) S.homomorphism_ok = false;
        }
    }
    if (enumerate && n <= 7) {
        for (const auto& s : all_permutations(n))
            if (try_u_v(C, s)) ++S.size_S_enumerated;
    }
    return S;
}

Matrix mu_matrix(const ClassData& C, int omega_exp, const GroupElement& g) {
    UV uv = u_v_of(C, g.sigma);
    const int na = C.inv.n_a;
    const auto& red = reduced_monomials(na);
    const std::size_t phi = red[0].size();
    std::int64_t e0 = pairing(na, C.b, g.t) + static_cast<std::int64_t>(omega_exp) * uv.u;
    int eps = sign(g.sigma);
    Matrix M(phi, std::vector<Rational>(phi, 0));
    for (std::size_t i = 0; i < phi; ++i) {
        const auto& col = red[mod(e0 + static_cast<std::int64_t>(uv.v) * i, na)];
        for (std::size_t r = 0; r < phi; ++r) M[r][i] = eps * col[r];
    }
    return M;
}

Rational mu_trace(const ClassData& C, int omega_exp, const GroupElement& g) {
    UV uv = u_v_of(C, g.sigma);
    const int na = C.inv.n_a;
    const auto& red = reduced_monomials(na);
    const std::size_t phi = red[0].size();
    std::int64_t e0 = pairing(na, C.b, g.t) + static_cast<std::int64_t>(omega_exp) * uv.u;
    Rational tr = 0;
    for (std::size_t i = 0; i < phi; ++i) tr += red[mod(e0 + static_cast<std::int64_t>(uv.v) * i, na)][i];
    return sign(g.sigma) * tr;
}

BigInt xi_character(const ClassData& C, int omega_exp, const GroupElement& g) {
    Rational total = 0;
    for (const auto& s : all_permutations(C.n)) {
        GroupElement c = conjugate_by_perm(g, s, C.n);
        if (try_u_v(C, c.sigma)) total += mu_trace(C, omega_exp, c);
    }
    total /= Rational(C.inv.size_S);
    return to_integer(total, "xi_character");
}

ClassFunction orbit_projector(int n, const std::vector<int>& orbit_rep) {
    auto key = orbit_key(n, make_class(n, orbit_rep).rep);
    std::vector<std::vector<int>> members;
    for_each_class(n, [&](const std::vector<int>& v) {
        if (orbit_key(n, v) == key) members.push_back(v);
    });
    std::map<std::vector<int>, std::uint64_t> classes;
    auto As = all_A_parts(n);
    for (const auto& t : As) ++classes[sn_key(n, t)];
    ClassFunction F;
    F.n = n;
    F.full_group = false;
    for (const auto& [t, size] : classes) {
        std::vector<std::int64_t> cnt(n, 0);
        for (const auto& a : members) ++cnt[mod(-pairing(n, a, t), n)];
        Rational w = Cyclotomic::from_exponents(n, cnt).rational_value() / Rational(As.size());
        F.entries.push_back(ClassEntry{make_element(n, t, identity_perm(n)), size, w});
    }
    return F;
}

ClassFunction omega_projector(const ClassData& C, int omega_exp) {
    const int n = C.n;
    if (omega_exp < 0 || omega_exp >= C.inv.d) {
        if (C.inv.d == 1) invalid_input("omega", "d_a = 1, only the trivial omega exists");
        invalid_input("omega", "exponent must lie in [0, d_a)");
    }
    double order = static_cast<double>(factorial(n));
    for (int i = 0; i < n - 2; ++i) order *= n;
    require_cost("omega_projector", order * static_cast<double>(factorial(n)) * n);
    std::map<GroupElement, std::uint64_t> classes;
    for (const auto& g : all_elements(n)) ++classes[sn_class_key(g, n)];
    Rational lambda(C.inv.exponent);
    ClassFunction F;
    F.n = n;
    F.full_group = true;
    for (const auto& [g, size] : classes) {
        BigInt xi = xi_character(C, omega_exp, group_inverse(g, n));
        if (xi == 0) continue;
        F.entries.push_back(ClassEntry{g, size, lambda * Rational(xi) / Rational(BigInt(static_cast<std::uint64_t>(order)))});
    }
    return F;
}

ClassFunction identity_indicator(int n) {
    ClassFunction F;
    F.n = n;
    F.entries.push_back(ClassEntry{group_identity(n), 1, Rational(1)});
    return F;
}

std::vector<NamedCheck> verify_regular_structure(const ClassData& C) {
    std::vector<NamedCheck> out;
    const int n = C.n, d = C.inv.d, na = C.inv.n_a;
    const Rational m_a = C.inv.m;
    auto S = stabilizer_structure(C, false);
    auto fixes = [&](const Perm& s) {
        for (int i = 0; i < n; ++i)
            if (C.a[s[i]] != C.a[i]) return false;
        return true;
    };
    const std::string tag = vec_str(C.a);
    if (d > 1) {
        NamedCheck reg{"regular identity " + tag, true, ""};
        NamedCheck van{"sigma_a powers on H_a " + tag, true, ""};
        for (int i = 0; i <= d; ++i) {
            Perm si = perm_power(S.sigma_a, i);
            UV uv = u_v_of(C, si);
            bool in_sprime = fixes(si);
            std::vector<std::int64_t> ex(na, 0);
            for (int j = 0; j < d; ++j) ++ex[mod(static_cast<std::int64_t>(j) * uv.u, na)];
            Cyclotomic sum = Cyclotomic::from_exponents(na, ex);
            Rational expect = in_sprime ? Rational(d) : Rational(0);
            if (uv.v != 1 || !sum.is_rational() || sum.rational_value() != expect) {
                reg.pass = false;
                reg.witness += "i=" + std::to_string(i) + " ";
            }
            Rational tr = trace_on_isotypic(n, C.a, si);
            Rational texp = in_sprime ? Rational(sign(si)) * m_a : Rational(0);
            if (tr != texp) {
                van.pass = false;
                van.witness += "i=" + std::to_string(i) + " trace=" + to_string(tr) + " ";
            }
        }
        out.push_back(reg);
        out.push_back(van);
    }
    if (n <= 6) {
        NamedCheck scan{"uniform elements of the shift stabilizer " + tag, true, ""};
        for (const auto& s : all_permutations(n)) {
            auto uv = try_u_v(C, s);
            if (!uv || uv->v != 1) continue;
            auto ct = cycle_type(s);
            if (ct.front() != ct.back()) continue;
            Rational tr = trace_on_isotypic(n, C.a, s);
            Rational texp = fixes(s) ? Rational(sign(s)) * m_a : Rational(0);
            if (tr != texp) {
                scan.pass = false;
                scan.witness = format_cycles(s) + " trace=" + to_string(tr);
                break;
            }
        }
        out.push_back(scan);
    }
    return out;
}

NamedCheck transposition_sum_check(int n) {
    BigInt sum = 0;
    for_each_class(n, [&](const std::vector<int>& a) {
        if (a[0] == a[1]) sum += invariants(n, a).m;
    });
    BigInt expect = -transposition_trace(n);
    NamedCheck c{"transposition sum n=" + std::to_string(n), sum == expect, ""};
    if (!c.pass) c.witness = "sum=" + sum.str() + " expected=" + expect.str();
    return c;
}

}  // namespace dwork
