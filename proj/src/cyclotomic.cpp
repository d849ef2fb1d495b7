#include "dwork/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace dwork {

namespace {

std::mutex g_mu;

std::vector<BigInt> poly_div_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    std::vector<BigInt> q(num.size() - den.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        BigInt c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const auto& x : num)
        if (x != 0) check_failed("cyclotomic_poly", "inexact division");
    return q;
}

std::vector<BigInt> compute_phi(int m) {
    std::vector<BigInt> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d == 0) num = poly_div_exact(num, cyclotomic_poly(d));
    }
    return num;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_poly(int m) {
    if (m < 1) invalid_input("m", "conductor must be positive");
    static std::map<int, std::vector<BigInt>> cache;
    {
        std::lock_guard<std::mutex> lock(g_mu);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    auto phi = compute_phi(m);
    std::lock_guard<std::mutex> lock(g_mu);
    return cache.emplace(m, std::move(phi)).first->second;
}

const std::vector<std::vector<Rational>>& reduced_monomials(int m) {
    static std::map<int, std::vector<std::vector<Rational>>> cache;
    static std::mutex mu;
    const auto& phi = cyclotomic_poly(m);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::size_t deg = phi.size() - 1;
    std::vector<std::vector<Rational>> out;
    std::vector<Rational> cur(deg, 0);
    cur[0] = 1;
    if (deg == 0) cur = {};
    for (int e = 0; e < m; ++e) {
        out.push_back(cur);
        // multiply by x
        std::vector<Rational> nxt(deg, 0);
        Rational top = deg ? cur[deg - 1] : Rational(0);
        for (std::size_t i = deg; i-- > 1;) nxt[i] = cur[i - 1];
        for (std::size_t i = 0; i < deg; ++i) nxt[i] -= top * Rational(phi[i]);
        cur = nxt;
    }
    return cache.emplace(m, std::move(out)).first->second;
}

Cyclotomic::Cyclotomic(int m) : m_(m) {
    c_.assign(cyclotomic_poly(m).size() - 1, 0);
}

Cyclotomic Cyclotomic::rational(int m, const Rational& c) {
    Cyclotomic z(m);
    z.c_[0] = c;
    return z;
}

Cyclotomic Cyclotomic::root(int m, std::int64_t k) {
    Cyclotomic z(m);
    z.c_ = reduced_monomials(m)[mod(k, m)];
    return z;
}

Cyclotomic Cyclotomic::from_exponents(int m, const std::vector<Rational>& c) {
    std::vector<Rational> folded(m, 0);
    for (std::size_t j = 0; j < c.size(); ++j) folded[j % m] += c[j];
    Cyclotomic z(m);
    const auto& red = reduced_monomials(m);
    for (int e = 0; e < m; ++e) {
        if (folded[e] == 0) continue;
        for (std::size_t i = 0; i < z.c_.size(); ++i) z.c_[i] += folded[e] * red[e][i];
    }
    return z;
}

Cyclotomic Cyclotomic::from_exponents(int m, const std::vector<std::int64_t>& c) {
    std::vector<Rational> r(c.begin(), c.end());
    return from_exponents(m, r);
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) check_failed("cyclotomic", "value is not rational");
    return c_[0];
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (m_ != o.m_) invalid_input("cyclotomic", "conductor mismatch");
    Cyclotomic z = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] += o.c_[i];
    return z;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic z = *this;
    for (auto& x : z.c_) x = -x;
    return z;
}

Cyclotomic Cyclotomic::operator*(const Rational& s) const {
    Cyclotomic z = *this;
    for (auto& x : z.c_) x *= s;
    return z;
}

void Cyclotomic::reduce(std::vector<Rational> full) {
    const auto& phi = cyclotomic_poly(m_);
    std::size_t deg = phi.size() - 1;
    for (std::size_t i = full.size(); i-- > deg;) {
        Rational c = full[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) full[i - deg + j] -= c * Rational(phi[j]);
    }
    full.resize(deg);
    c_ = std::move(full);
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (m_ != o.m_) invalid_input("cyclotomic", "conductor mismatch");
    std::size_t deg = c_.size();
    std::vector<Rational> full(deg ? 2 * deg - 1 : 0, 0);
    for (std::size_t i = 0; i < deg; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) full[i + j] += c_[i] * o.c_[j];
    }
    Cyclotomic z(m_);
    z.reduce(std::move(full));
    return z;
}

Cyclotomic Cyclotomic::galois(std::int64_t v) const {
    std::vector<Rational> e(m_, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) e[mod(static_cast<std::int64_t>(i) * v, m_)] += c_[i];
    return from_exponents(m_, e);
}

Rational Cyclotomic::trace() const {
    Rational t = 0;
    for (int v : units_mod(m_)) t += galois(v).c_[0];
    return t;
}

}  // namespace dwork
