#include <algorithm>
#include <random>

#include "dwork/counting.hpp"

namespace dwork {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, low degree first

struct PolyField {
    std::uint32_t p;
    int K;
    Poly f;  // monic, degree K

    Poly zero() const { return Poly(K, 0); }
    Poly one() const {
        Poly r(K, 0);
        r[0] = 1 % p;
        return r;
    }
    Poly constant(std::uint64_t c) const {
        Poly r(K, 0);
        r[0] = static_cast<std::uint32_t>(c % p);
        return r;
    }
    bool is_zero(const Poly& a) const {
        return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
    }
    Poly add(const Poly& a, const Poly& b) const {
        Poly r(K);
        for (int i = 0; i < K; ++i) r[i] = (a[i] + b[i]) % p;
        return r;
    }
    Poly scale(const Poly& a, std::uint64_t c) const {
        Poly r(K);
        for (int i = 0; i < K; ++i) r[i] = static_cast<std::uint32_t>(a[i] * (c % p) % p);
        return r;
    }
    Poly mul(const Poly& a, const Poly& b) const {
        std::vector<std::uint64_t> t(2 * K - 1, 0);
        for (int i = 0; i < K; ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < K; ++j) t[i + j] = (t[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
        }
        for (int d = 2 * K - 2; d >= K; --d) {
            std::uint64_t c = t[d];
            if (!c) continue;
            t[d] = 0;
            for (int i = 0; i < K; ++i) t[d - K + i] = (t[d - K + i] + (p - c) * f[i]) % p;
        }
        return Poly(t.begin(), t.begin() + K);
    }
    Poly pow(Poly a, BigInt e) const {
        Poly r = one();
        while (e > 0) {
            if ((e & 1) != 0) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

// polynomial arithmetic over F_p for the irreducibility test
Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    a = trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t inv = static_cast<std::uint64_t>(invmod(b.back(), p));
    while (a.size() >= b.size()) {
        std::uint64_t c = a.back() * inv % p;
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i] % p) % p);
        a = trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    a = trim(a);
    b = trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

bool rabin_irreducible(const Poly& f, std::uint32_t p) {
    const int K = static_cast<int>(f.size()) - 1;
    PolyField F{p, K, f};
    Poly x = F.zero();
    if (K == 1) return true;
    x[1] = 1;
    // x^{p^k} for k = 1..K
    std::vector<Poly> frob(K + 1);
    frob[0] = x;
    for (int k = 1; k <= K; ++k) frob[k] = F.pow(frob[k - 1], p);
    if (frob[K] != x) return false;
    for (auto l : prime_factors(static_cast<std::uint64_t>(K))) {
        Poly d = frob[K / l];
        d[1] = (d[1] + p - 1) % p;
        Poly g = poly_gcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

// Scans monic polynomials with the constant term as the fastest digit.
Poly find_irreducible(std::uint32_t p, int K) {
    Poly f(K + 1, 0);
    f[K] = 1;
    while (true) {
        if (f[0] != 0 && rabin_irreducible(f, p)) return f;
        int i = 0;
        while (i < K && ++f[i] == p) f[i++] = 0;
        if (i == K) check_failed("oracle", "no irreducible polynomial found");
    }
}

using FpMatrix = std::vector<std::vector<std::uint32_t>>;

// Kernel basis of a K x K matrix over F_p.
std::vector<Poly> kernel(FpMatrix m, std::uint32_t p) {
    const int K = static_cast<int>(m.size());
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < K && row < K; ++col) {
        int piv = -1;
        for (int i = row; i < K; ++i)
            if (m[i][col]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[row], m[piv]);
        std::uint64_t inv = static_cast<std::uint64_t>(invmod(m[row][col], p));
        for (auto& v : m[row]) v = static_cast<std::uint32_t>(v * inv % p);
        for (int i = 0; i < K; ++i) {
            if (i == row || !m[i][col]) continue;
            std::uint64_t c = m[i][col];
            for (int j = 0; j < K; ++j) m[i][j] = static_cast<std::uint32_t>((m[i][j] + (p - c) * m[row][j]) % p);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<Poly> basis;
    for (int free = 0; free < K; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
        Poly v(K, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = (p - m[r][free]) % p;
        basis.push_back(v);
    }
    return basis;
}

}  // namespace

BigInt oracle_fixed_count(const DworkInstance& inst, const GroupElement& g, int r, std::uint64_t seed) {
    const int n = inst.n;
    const std::uint32_t p = inst.q;
    const std::uint64_t Q = field_size(inst, r);
    if (static_cast<int>(g.t.size()) != n || static_cast<int>(g.sigma.size()) != n) invalid_input("g", "size mismatch");

    // least residue of exact order n
    std::uint64_t zeta = 0;
    for (std::uint64_t a = 2; a < p && !zeta; ++a) {
        if (powmod(a, n, p) != 1) continue;
        bool exact = true;
        for (int d = 1; d < n; ++d)
            if (n % d == 0 && powmod(a, d, p) == 1) exact = false;
        if (exact) zeta = a;
    }
    auto zpow = [&](std::int64_t e) { return powmod(zeta, static_cast<std::uint64_t>(mod(e, n)), p); };

    const auto cyc = cycles(g.sigma);
    std::vector<std::uint64_t> Zc, oc;
    std::uint64_t L = 1;
    for (const auto& c : cyc) {
        std::int64_t e = 0;
        for (int i : c) e += g.t[i];
        std::uint64_t Z = zpow(e), o = 1;
        while (powmod(Z, o, p) != 1) ++o;
        Zc.push_back(Z);
        oc.push_back(o);
        L = lcm_u(L, c.size() * o);
    }
    const int K = static_cast<int>(r * L);
    double tuples = std::pow(static_cast<double>(Q), n);
    require_cost("oracle_fixed_count", tuples * n + tuples * static_cast<double>(K) * K);

    PolyField F{p, K, find_irreducible(p, K)};
    const BigInt N = big_pow(BigInt(p), K) - 1;

    // matrix of x -> x^Q on the power basis
    FpMatrix frobQ(K, std::vector<std::uint32_t>(K));
    for (int j = 0; j < K; ++j) {
        Poly e = F.zero();
        e[j] = 1;
        Poly im = F.pow(e, BigInt(Q));
        for (int i = 0; i < K; ++i) frobQ[i][j] = im[i];
    }
    auto apply = [&](const FpMatrix& m, const Poly& v) {
        Poly out(K, 0);
        for (int i = 0; i < K; ++i) {
            std::uint64_t s = 0;
            for (int j = 0; j < K; ++j) s += static_cast<std::uint64_t>(m[i][j]) * v[j] % p;
            out[i] = static_cast<std::uint32_t>(s % p);
        }
        return out;
    };
    auto mat_mul = [&](const FpMatrix& a, const FpMatrix& b) {
        FpMatrix c(K, std::vector<std::uint32_t>(K, 0));
        for (int i = 0; i < K; ++i)
            for (int k = 0; k < K; ++k) {
                if (!a[i][k]) continue;
                for (int j = 0; j < K; ++j) c[i][j] = static_cast<std::uint32_t>((c[i][j] + static_cast<std::uint64_t>(a[i][k]) * b[k][j]) % p);
            }
        return c;
    };

    std::mt19937_64 rng(seed);
    // per cycle: the (sum x^n, prod x) pair of every solution, zero included
    struct SP {
        Poly s, prod;
        bool all_zero;
    };
    std::vector<std::vector<SP>> per(cyc.size());
    for (std::size_t c = 0; c < cyc.size(); ++c) {
        const auto& mem = cyc[c];
        const std::size_t d = mem.size();
        const BigInt M = big_pow(BigInt(Q), static_cast<int>(d)) - 1;
        const std::uint64_t o = oc[c];

        // beta with beta^M = Z_c
        Poly beta;
        const Poly target = F.constant(Zc[c]);
        for (int attempt = 0; attempt < 200 && beta.empty(); ++attempt) {
            Poly z(K);
            for (auto& v : z) v = static_cast<std::uint32_t>(rng() % p);
            if (F.is_zero(z)) continue;
            Poly w = F.pow(z, N / (M * o));
            Poly wM = F.pow(w, M), acc = F.one();
            for (std::uint64_t j = 0; j < o; ++j) {
                if (acc == target) {
                    beta = F.pow(w, BigInt(j));
                    break;
                }
                acc = F.mul(acc, wM);
            }
        }
        if (beta.empty()) check_failed("oracle", "no root of the cycle constant found");

        // F_{Q^d} = ker(Frob_Q^d - I)
        FpMatrix fd = frobQ;
        for (std::size_t k = 1; k < d; ++k) fd = mat_mul(fd, frobQ);
        for (int i = 0; i < K; ++i) fd[i][i] = (fd[i][i] + p - 1) % p;
        auto basis = kernel(fd, p);
        if (static_cast<std::uint64_t>(basis.size()) != static_cast<std::uint64_t>(r) * d)
            check_failed("oracle", "subfield has the wrong dimension");

        // coefficient of x_{sigma^k j0}: inverse of the partial zeta product
        std::vector<Poly> coef(d);
        std::int64_t partial = 0;
        coef[0] = F.one();
        for (std::size_t k = 1; k < d; ++k) {
            partial += g.t[mem[k]];
            coef[k] = F.constant(zpow(-partial));
        }

        std::vector<std::uint32_t> digits(basis.size(), 0);
        while (true) {
            Poly y = F.zero();
            for (std::size_t b = 0; b < basis.size(); ++b)
                if (digits[b]) y = F.add(y, F.scale(basis[b], digits[b]));
            Poly s = F.mul(beta, y);
            std::vector<Poly> xs(d);
            Poly sk = s;
            for (std::size_t k = 0; k < d; ++k) {
                xs[k] = F.mul(coef[k], sk);
                sk = apply(frobQ, sk);
            }
            for (std::size_t k = 0; k < d; ++k) {
                Poly lhs = apply(frobQ, xs[k]);
                Poly rhs = F.mul(F.constant(zpow(g.t[mem[(k + 1) % d]])), xs[(k + 1) % d]);
                if (lhs != rhs) check_failed("oracle", "coordinate fails the twisted Frobenius relation");
            }
            SP e{F.zero(), F.one(), F.is_zero(s)};
            for (std::size_t k = 0; k < d; ++k) {
                e.s = F.add(e.s, F.pow(xs[k], n));
                e.prod = F.mul(e.prod, xs[k]);
            }
            per[c].push_back(std::move(e));
            std::size_t b = 0;
            while (b < digits.size() && ++digits[b] == p) digits[b++] = 0;
            if (b == digits.size()) break;
        }
    }

    const Poly npsi = F.constant(static_cast<std::uint64_t>(n) * inst.psi);
    BigInt count = 0;
    std::vector<std::size_t> idx(cyc.size(), 0);
    while (true) {
        Poly s = F.zero(), prod = F.one();
        bool all_zero = true;
        for (std::size_t c = 0; c < cyc.size(); ++c) {
            const auto& e = per[c][idx[c]];
            s = F.add(s, e.s);
            prod = F.mul(prod, e.prod);
            all_zero = all_zero && e.all_zero;
        }
        Poly val = F.add(s, F.scale(F.mul(npsi, prod), p - 1));
        if (!all_zero && F.is_zero(val)) ++count;
        std::size_t c = 0;
        while (c < idx.size() && ++idx[c] == per[c].size()) idx[c++] = 0;
        if (c == idx.size()) break;
    }
    if (count % (Q - 1) != 0) check_failed("oracle", "affine count not divisible by Q-1");
    return count / (Q - 1);
}

}  // namespace dwork
