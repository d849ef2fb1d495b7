#include "dwork/zeta.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "dwork/reptheory.hpp"

namespace dwork {

namespace mp = boost::multiprecision;
using Real = mp::cpp_bin_float_quad;
using Complex = mp::cpp_complex_quad;

bool IntPoly::operator<(const IntPoly& o) const {
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    return c < o.c;
}

IntPoly make_poly(std::vector<BigInt> c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    if (c.empty() || c[0] != 1) check_failed("poly", "constant term must be 1");
    IntPoly p;
    p.c = std::move(c);
    return p;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    return make_poly(std::move(c));
}

IntPoly poly_pow(const IntPoly& a, std::uint64_t e) {
    IntPoly r;
    for (std::uint64_t i = 0; i < e; ++i) r = poly_mul(r, a);
    return r;
}

std::string to_string(const IntPoly& p) {
    std::string s = "1";
    for (int k = 1; k <= p.degree(); ++k) {
        const BigInt& c = p.c[k];
        if (c == 0) continue;
        BigInt a = abs(c);
        s += c < 0 ? " - " : " + ";
        if (a != 1) s += a.str();
        s += "t";
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

std::vector<BigInt> power_sums(const IntPoly& p, int R) {
    std::vector<BigInt> ps(R + 1, 0);
    auto coef = [&](int k) { return k <= p.degree() ? p.c[k] : BigInt(0); };
    for (int k = 1; k <= R; ++k) {
        BigInt v = -BigInt(k) * coef(k);
        for (int i = 1; i < k; ++i) v -= ps[i] * coef(k - i);
        ps[k] = v;
    }
    return {ps.begin() + 1, ps.end()};
}

std::vector<Rational> PowerSumSeries::normalized() const {
    if (divisor == 0) invalid_input("divisor", "must be nonzero");
    std::vector<Rational> out;
    for (const auto& x : raw) out.push_back(x / divisor);
    return out;
}

std::vector<Rational> newton_coefficients(const std::vector<Rational>& sums, int K) {
    if (static_cast<int>(sums.size()) < K) invalid_input("sums", "need " + std::to_string(K) + " power sums");
    std::vector<Rational> c(K + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= K; ++k) {
        Rational s = 0;
        for (int i = 1; i <= k; ++i) s += sums[i - 1] * c[k - i];
        c[k] = -s / k;
    }
    return c;
}

IntPoly newton_poly(const std::vector<Rational>& sums, int D) {
    auto c = newton_coefficients(sums, D);
    std::vector<BigInt> ic;
    for (int k = 0; k <= D; ++k) ic.push_back(to_integer(c[k], "newton coefficient c_" + std::to_string(k)));
    return make_poly(std::move(ic));
}

namespace {

// q^(e/2) when e is even
std::optional<BigInt> half_power(std::uint64_t q, std::int64_t e) {
    if (e % 2) return std::nullopt;
    return big_pow(BigInt(q), static_cast<unsigned>(e / 2));
}

// Reciprocal roots alpha of p, i.e. roots of t^D p(1/t).
std::vector<Complex> reciprocal_roots(const IntPoly& p, const Real& scale) {
    const int D = p.degree();
    std::vector<Complex> a(D + 1);  // monic in beta = alpha / scale, a[k] multiplies beta^(D-k)
    Real sp = 1;
    for (int k = 0; k <= D; ++k) {
        a[k] = Complex(Real(p.c[k]) / sp);
        sp *= scale;
    }
    auto eval = [&](const Complex& z) {
        Complex v = a[0];
        for (int k = 1; k <= D; ++k) v = v * z + a[k];
        return v;
    };
    std::vector<Complex> z(D);
    Complex seed(Real("0.4"), Real("0.9")), cur(1);
    for (int i = 0; i < D; ++i) {
        cur *= seed;
        z[i] = cur;
    }
    const Real eps("1e-32");
    for (int it = 0; it < 5000; ++it) {
        Real step = 0;
        for (int i = 0; i < D; ++i) {
            Complex den(1);
            for (int j = 0; j < D; ++j)
                if (j != i) den *= z[i] - z[j];
            if (abs(den) == 0) den = Complex(eps);
            Complex dz = eval(z[i]) / den;
            z[i] -= dz;
            step = std::max(step, Real(abs(dz)));
        }
        if (step < eps) break;
    }
    for (auto& x : z) x *= scale;
    return z;
}

Real weil_scale(int w, std::uint64_t q) { return sqrt(pow(Real(q), w)); }

}  // namespace

std::optional<int> functional_sign(const IntPoly& p, int w, std::uint64_t q) {
    const int D = p.degree();
    for (int eps : {1, -1}) {
        bool ok = true;
        for (int k = 0; k <= D && ok; ++k) {
            auto f = half_power(q, static_cast<std::int64_t>(w) * (D - 2 * k >= 0 ? D - 2 * k : 2 * k - D));
            if (!f) {
                ok = false;
                break;
            }
            // c_{D-k} = eps q^(w(D-2k)/2) c_k, written without negative powers
            if (D - 2 * k >= 0)
                ok = p.c[D - k] == eps * *f * p.c[k];
            else
                ok = *f * p.c[D - k] == eps * p.c[k];
        }
        if (ok) return eps;
    }
    return std::nullopt;
}

WeilResult weil_check(const IntPoly& p, int w, std::uint64_t q, double tol) {
    WeilResult res;
    if (p.degree() == 0) {
        res.pass = true;
        return res;
    }
    Real s = weil_scale(w, q);
    Real worst = 0;
    for (const auto& a : reciprocal_roots(p, s)) worst = std::max(worst, Real(abs(Real(abs(a)) / s - 1)));
    res.max_deviation = static_cast<double>(worst);
    res.pass = res.max_deviation <= tol;
    return res;
}

std::optional<Completion> functional_completion(const std::vector<Rational>& sums, int D, int w, std::uint64_t q) {
    if (D == 0) return Completion{IntPoly{}, 1, 1};
    const int h = D / 2;
    auto c = newton_coefficients(sums, h);
    std::vector<Completion> survivors;
    for (int eps : {1, -1}) {
        std::vector<Rational> full(D + 1, 0);
        for (int k = 0; k <= h; ++k) full[k] = c[k];
        bool ok = true;
        for (int k = 0; D - k > h; ++k) {
            auto f = half_power(q, static_cast<std::int64_t>(w) * (D - 2 * k));
            if (!f) {
                ok = false;
                break;
            }
            full[D - k] = Rational(eps) * Rational(*f) * c[k];
        }
        if (!ok) continue;
        if (D % 2 == 0 && eps == -1 && full[h] != 0) continue;
        if (!std::all_of(full.begin(), full.end(), [](const Rational& x) { return is_integer(x); })) continue;
        std::vector<BigInt> ic;
        for (const auto& x : full) ic.push_back(numerator(x));
        IntPoly cand = make_poly(ic);
        if (cand.degree() != D) continue;
        auto ps = power_sums(cand, static_cast<int>(sums.size()));
        bool match = true;
        for (std::size_t i = 0; i < sums.size(); ++i) match = match && Rational(ps[i]) == sums[i];
        if (!match || !weil_check(cand, w, q).pass) continue;
        survivors.push_back(Completion{cand, eps, 0});
    }
    if (survivors.empty()) check_failed("functional_completion", "no candidate satisfies integrality, the given sums and the Weil bound");
    if (survivors.size() > 1) return std::nullopt;
    survivors[0].candidates = 1;
    return survivors[0];
}

namespace {

QuadNumber qmul(const QuadNumber& a, const QuadNumber& b, int m) {
    return QuadNumber{a.u * b.u + Rational(m) * a.v * b.v, a.u * b.v + a.v * b.u};
}

}  // namespace

std::optional<QuadraticSplit> quadratic_split_check(const IntPoly& Qa, int m, int mprime) {
    const int D = Qa.degree();
    if (mprime < 1 || D != 2 * mprime) return std::nullopt;
    auto roots = reciprocal_roots(Qa, Real(1));
    const Complex sq = sqrt(Complex(Real(m)));
    // subsets of size mprime containing root 0; the complement is the conjugate
    std::vector<int> sel(D, 0);
    std::fill(sel.begin(), sel.begin() + mprime, 1);
    std::sort(sel.begin(), sel.end());
    do {
        if (!sel[0]) continue;
        std::vector<Complex> P{Complex(1)}, Pc{Complex(1)};
        for (int i = 0; i < D; ++i) {
            auto& T = sel[i] ? P : Pc;
            T.push_back(Complex(0));
            for (std::size_t k = T.size() - 1; k > 0; --k) T[k] -= roots[i] * T[k - 1];
        }
        QuadraticSplit out;
        out.m = m;
        bool ok = true;
        for (int k = 0; k <= mprime && ok; ++k) {
            Complex u = (P[k] + Pc[k]) / Real(2), v = (P[k] - Pc[k]) / (Real(2) * sq);
            Real U = round(Real(2) * u.real()), V = round(Real(2) * v.real());
            Real tol = Real("1e-12") * (1 + abs(U) + abs(V));
            if (abs(u.imag()) > tol || abs(v.imag()) > tol || abs(Real(2) * u.real() - U) > tol || abs(Real(2) * v.real() - V) > tol) {
                ok = false;
                break;
            }
            BigInt Ui(static_cast<long long>(U)), Vi(static_cast<long long>(V));
            if (mod(m, 4) == 1 ? ((Ui - Vi) % 2 != 0) : (Ui % 2 != 0 || Vi % 2 != 0)) {
                ok = false;
                break;
            }
            out.first.push_back(QuadNumber{Rational(Ui, 2), Rational(Vi, 2)});
            out.second.push_back(QuadNumber{Rational(Ui, 2), -Rational(Vi, 2)});
        }
        if (!ok) continue;
        // exact product over Q(sqrt m)
        std::vector<QuadNumber> prod(D + 1, QuadNumber{0, 0});
        for (int i = 0; i <= mprime; ++i)
            for (int j = 0; j <= mprime; ++j) {
                auto t = qmul(out.first[i], out.second[j], m);
                prod[i + j].u += t.u;
                prod[i + j].v += t.v;
            }
        bool exact = true;
        for (int k = 0; k <= D; ++k) exact = exact && prod[k].v == 0 && prod[k].u == Rational(Qa.c[k]);
        if (exact) return out;
    } while (std::next_permutation(sel.begin(), sel.end()));
    return std::nullopt;
}

int quadratic_field_discriminant(int n_a, const std::vector<int>& im_k) {
    auto units = units_mod(n_a);
    if (units.size() != 2 * im_k.size()) invalid_input("im_k", "subgroup does not have index 2");
    std::vector<std::int64_t> e0(n_a, 0), e1(n_a, 0);
    for (auto u : units) {
        bool in = std::find(im_k.begin(), im_k.end(), static_cast<int>(u)) != im_k.end();
        ++(in ? e0 : e1)[u];
    }
    Cyclotomic diff = Cyclotomic::from_exponents(n_a, e0) - Cyclotomic::from_exponents(n_a, e1);
    BigInt disc = to_integer((diff * diff).rational_value(), "period discriminant");
    if (disc == 0) check_failed("quadratic_field", "Gaussian periods coincide");
    int sgn = disc < 0 ? -1 : 1;
    std::uint64_t a = static_cast<std::uint64_t>(abs(disc));
    std::uint64_t sf = 1;
    for (auto p : prime_factors(a)) {
        int e = 0;
        while (a % p == 0) {
            a /= p;
            ++e;
        }
        if (e % 2) sf *= p;
    }
    return sgn * static_cast<int>(sf);
}

namespace {

std::vector<Rational> raw_traces(const DworkInstance& inst, const ClassFunction& w, int from, int to) {
    std::vector<Rational> out;
    for (int r = from; r <= to; ++r) out.push_back(weighted_trace(inst, w, r));
    return out;
}

void certify(FactorReport& f, const DworkInstance& inst, const std::vector<Rational>& sums) {
    const int w = inst.n - 2;
    f.cert.integrality = std::all_of(sums.begin(), sums.end(), [](const Rational& x) { return is_integer(x); });
    f.cert.degree_match = f.base.degree() == f.expected_degree;
    auto sg = functional_sign(f.base, w, inst.q);
    f.cert.functional = sg.has_value();
    f.cert.sign = sg.value_or(0);
    auto wr = weil_check(f.base, w, inst.q);
    f.cert.weil = wr.pass;
    f.cert.weil_deviation = wr.max_deviation;
    auto ps = power_sums(f.base, static_cast<int>(sums.size()));
    f.cert.consistency = true;
    for (std::size_t i = 0; i < sums.size(); ++i) f.cert.consistency = f.cert.consistency && Rational(ps[i]) == sums[i];
}

void maybe_split(FactorReport& f, const OrbitInvariants& inv) {
    if (inv.D_degree != 2 || f.base.degree() != 2 * inv.mprime) return;
    int m = quadratic_field_discriminant(inv.n_a, inv.im_k);
    f.split = quadratic_split_check(f.base, m, inv.mprime);
    f.cert.quadratic_split = f.split.has_value();
}

}  // namespace

FactorReport orbit_factor(const DworkInstance& inst, const std::vector<int>& orbit_rep) {
    const int n = inst.n;
    auto cls = make_class(n, orbit_rep);
    auto inv = invariants(cls);
    FactorReport f;
    f.rep = cls.rep;
    f.kind = "orbit";
    f.exponent = inv.exponent;
    f.expected_degree = inv.d * inv.deg_Q;
    auto weights = orbit_projector(n, cls.rep);
    const int D = f.expected_degree;
    PowerSumSeries series;
    series.divisor = Rational(inv.exponent);
    if (D == 0) {
        series.raw = raw_traces(inst, weights, 1, 1);
        f.raw_sums = series.raw;
        certify(f, inst, series.normalized());
        return f;
    }
    int R = std::max(1, D / 2);
    series.raw = raw_traces(inst, weights, 1, R);
    while (true) {
        auto sums = series.normalized();
        if (R >= D) {
            f.base = newton_poly(sums, D);
            break;
        }
        if (auto c = functional_completion(sums, D, n - 2, inst.q)) {
            f.base = c->poly;
            break;
        }
        ++R;
        series.raw.push_back(weighted_trace(inst, weights, R));
    }
    f.raw_sums = series.raw;
    certify(f, inst, series.normalized());
    if (inv.d == 1) maybe_split(f, inv);
    return f;
}

std::vector<FactorReport> omega_split(const DworkInstance& inst, const std::vector<int>& a) {
    const int n = inst.n;
    auto cls = make_class(n, a);
    auto C = class_data(n, cls.rep);
    if (C.inv.d <= 1) invalid_input("orbit", "omega split needs d_a > 1");
    std::vector<FactorReport> out;
    for (int w = 0; w < C.inv.d; ++w) {
        auto weights = omega_projector(C, w);
        FactorReport f;
        f.rep = cls.rep;
        f.kind = "omega";
        f.omega = w;
        f.exponent = C.inv.exponent;
        f.expected_degree = C.inv.deg_Q;
        PowerSumSeries series{raw_traces(inst, weights, 1, C.inv.deg_Q), Rational(C.inv.exponent)};
        f.raw_sums = series.raw;
        auto sums = series.normalized();
        f.base = newton_poly(sums, C.inv.deg_Q);
        certify(f, inst, sums);
        maybe_split(f, C.inv);
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const FactorReport& x, const FactorReport& y) { return x.base < y.base; });
    IntPoly prod;
    for (const auto& f : out) prod = poly_mul(prod, f.base);
    if (!(prod == orbit_factor(inst, cls.rep).base))
        check_failed("omega_split", "product of omega factors differs from the orbit factor");
    return out;
}

bool ZetaReport::pass() const {
    for (const auto& f : factors)
        if (!f.cert.pass()) return false;
    for (const auto& c : consistency)
        if (!c.pass) return false;
    return true;
}

ZetaReport zeta_report(const DworkInstance& inst, ZetaMode mode, const std::optional<std::vector<int>>& orbit) {
    const int n = inst.n;
    ZetaReport rep;
    rep.inst = inst;
    rep.predictions = predict_report(n);
    if (mode == ZetaMode::predict) return rep;
    if (n > 5) invalid_input("mode", "factor extraction is limited to n <= 5; use mode predict");
    std::optional<std::vector<int>> key;
    if (orbit) key = orbit_key(n, make_class(n, *orbit).rep);
    rep.extracted = true;
    for (const auto& o : full_orbits(n)) {
        if (key && orbit_key(n, o.rep) != *key) continue;
        rep.factors.push_back(orbit_factor(inst, o.rep));
        if (o.inv.d > 1 && !o.excluded)
            for (auto& f : omega_split(inst, o.rep)) rep.factors.push_back(std::move(f));
    }
    if (mode == ZetaMode::check && !orbit) {
        for (int r = 1; r <= 2; ++r) {
            ConsistencyRow row;
            row.r = r;
            row.direct = twisted_trace(inst, group_identity(n), r);
            row.assembled = 0;
            for (const auto& f : rep.factors) {
                if (f.kind != "orbit" || f.base.degree() == 0) continue;
                row.assembled += BigInt(f.exponent) * power_sums(f.base, r)[r - 1];
            }
            row.pass = row.direct == row.assembled;
            rep.consistency.push_back(row);
        }
    }
    return rep;
}

}  // namespace dwork
