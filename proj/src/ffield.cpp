#include "dwork/ffield.hpp"

#include <map>
#include <mutex>
#include <string>

#include "dwork/common.hpp"

namespace dwork {

namespace {

using Poly = std::vector<std::int64_t>;  // low degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::int64_t p) {
    trim(a);
    std::int64_t lead_inv = invmod(m.back(), p);
    while (a.size() >= m.size()) {
        std::int64_t c = a.back() * lead_inv % p;
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = mod(a[shift + i] - c * m[i], p);
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return poly_mod(c, m, p);
}

Poly poly_powmod(Poly a, std::uint64_t e, const Poly& m, std::int64_t p) {
    Poly r{1};
    a = poly_mod(a, m, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, a, m, p);
        a = poly_mulmod(a, a, m, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool irreducible(const Poly& f, std::int64_t p) {
    std::size_t r = f.size() - 1;
    Poly xp{0, 1};
    for (std::size_t i = 1; i <= r / 2; ++i) {
        xp = poly_powmod(xp, static_cast<std::uint64_t>(p), f, p);
        Poly h = xp;
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = mod(h[1] - 1, p);
        Poly g = poly_gcd(f, h, p);
        if (g.size() != 1) return false;
    }
    return true;
}

Poly decode(std::uint32_t e, std::uint32_t p, std::uint32_t r) {
    Poly a(r, 0);
    for (std::uint32_t i = 0; i < r; ++i) {
        a[i] = e % p;
        e /= p;
    }
    trim(a);
    return a;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
    std::uint32_t e = 0;
    for (std::size_t i = a.size(); i-- > 0;) e = e * p + static_cast<std::uint32_t>(a[i]);
    return e;
}

}  // namespace

FqElem FieldTable::from_int(std::int64_t c) const { return log_[static_cast<std::uint32_t>(mod(c, p_))]; }

FqElem FieldTable::inv(FqElem a) const {
    if (a == kZero) invalid_input("inv", "zero has no inverse");
    return a == 0 ? 0 : order() - a;
}

FqElem FieldTable::pow(FqElem a, std::int64_t e) const {
    if (a == kZero) {
        if (e < 0) invalid_input("pow", "zero to a negative power");
        return e == 0 ? 0 : kZero;
    }
    return static_cast<FqElem>(mulmod(a, static_cast<std::uint64_t>(mod(e, order())), order()));
}

std::uint32_t FieldTable::add_enc(std::uint32_t a, std::uint32_t b) const {
    if (r_ == 1) return (a + b) % p_;
    std::uint32_t out = 0, mult = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        out += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

std::uint64_t FieldTable::elem_order(FqElem a) const {
    if (a == kZero) invalid_input("elem_order", "zero");
    return order() / gcd_u(a, order());
}

FieldTable build_field(std::uint32_t p, std::uint32_t r) {
    if (!is_prime(p)) invalid_input("p", std::to_string(p) + " is not prime");
    if (r < 1) invalid_input("r", "extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        q *= p;
        if (q > kFieldCap) invalid_input("p^r", "field size exceeds 2^26");
    }
    FieldTable F;
    F.p_ = p;
    F.r_ = r;
    F.q_ = static_cast<std::uint32_t>(q);

    // Least monic irreducible, comparing (c_0, ..., c_{r-1}) with c_0 first.
    Poly f;
    for (std::uint64_t idx = 0; idx < q; ++idx) {
        Poly cand(r + 1, 0);
        std::uint64_t v = idx;
        for (std::uint32_t i = r; i-- > 0;) {
            cand[i] = static_cast<std::int64_t>(v % p);
            v /= p;
        }
        cand[r] = 1;
        if (irreducible(cand, p)) {
            f = cand;
            break;
        }
    }
    for (std::uint32_t i = 0; i < r; ++i) F.modulus_.push_back(static_cast<std::uint32_t>(f[i]));

    const std::uint64_t ord = q - 1;
    auto factors = prime_factors(ord);
    std::uint32_t gen = 1;
    if (ord > 1) {
        for (std::uint32_t e = 2; e < q; ++e) {
            Poly c = decode(e, p, r);
            bool prim = true;
            for (auto l : factors) {
                Poly t = poly_powmod(c, ord / l, f, p);
                if (t.size() == 1 && t[0] == 1) {
                    prim = false;
                    break;
                }
            }
            if (prim) {
                gen = e;
                break;
            }
        }
    }

    F.exp_.assign(ord, 0);
    F.log_.assign(q, kZero);
    Poly g = decode(gen, p, r);
    Poly cur{1};
    for (std::uint64_t k = 0; k < ord; ++k) {
        std::uint32_t e = encode(cur, p);
        F.exp_[k] = e;
        if (F.log_[e] != kZero) check_failed("build_field", "generator is not primitive");
        F.log_[e] = static_cast<FqElem>(k);
        cur = poly_mulmod(cur, g, f, p);
    }
    F.minus_one_ = F.log_[p - 1];
    F.zech_.assign(ord, kZero);
    for (std::uint64_t k = 0; k < ord; ++k) {
        F.zech_[k] = F.log_[F.add_enc(1, F.exp_[k])];
    }
    return F;
}

std::shared_ptr<const FieldTable> field(std::uint32_t p, std::uint32_t r) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const FieldTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, r);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto F = std::make_shared<const FieldTable>(build_field(p, r));
    cache.emplace(key, F);
    return F;
}

std::vector<FqElem> nth_roots(const FieldTable& F, std::uint32_t n) {
    if (n == 0 || F.order() % n != 0)
        invalid_input("n", std::to_string(n) + " does not divide Q-1 = " + std::to_string(F.order()));
    FqElem z0 = kZero;
    for (std::uint32_t e = 1; e < F.size(); ++e) {
        FqElem a = F.from_enc(e);
        if (F.elem_order(a) == n) {
            z0 = a;
            break;
        }
    }
    std::vector<FqElem> out;
    for (std::uint32_t k = 0; k < n; ++k) out.push_back(F.pow(z0, k));
    return out;
}

FqElem Embedding::operator()(FqElem x, const FieldTable& big) const {
    if (x == kZero) return kZero;
    return static_cast<FqElem>(mulmod(x, scale, big.order()));
}

Embedding make_embedding(const FieldTable& small, const FieldTable& big) {
    if (small.p() != big.p() || big.r() % small.r() != 0)
        invalid_input("embed", "target degree is not a multiple of the source degree");
    const std::uint64_t M = big.order() / small.order();
    auto eval = [&](const std::vector<std::uint32_t>& coeffs, FqElem at) {
        FqElem acc = kZero;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            acc = big.add(big.mul(acc, at), big.from_int(coeffs[i]));
        }
        return acc;
    };
    std::vector<std::uint32_t> fmod = small.modulus();
    fmod.push_back(1);
    FqElem alpha = kZero;
    if (small.r() == 1) {
        alpha = 0;
    } else {
        for (std::uint64_t j = 0; j < small.order(); ++j) {
            FqElem cand = static_cast<FqElem>(j * M);
            if (eval(fmod, cand) == kZero) {
                alpha = cand;
                break;
            }
        }
        if (alpha == kZero) check_failed("embed", "no root of the source modulus in the target");
    }
    std::vector<std::uint32_t> gpoly;
    std::uint32_t g = small.generator();
    for (std::uint32_t i = 0; i < small.r(); ++i) {
        gpoly.push_back(g % small.p());
        g /= small.p();
    }
    FqElem image = small.r() == 1 ? big.from_int(small.generator()) : eval(gpoly, alpha);
    return Embedding{image};
}

FqElem embed(FqElem x, const FieldTable& small, const FieldTable& big) {
    return make_embedding(small, big)(x, big);
}

FqElem coset_root(const FieldTable& F, std::uint32_t n, FqElem zeta) {
    if (n == 0 || F.order() % n != 0) invalid_input("n", "does not divide Q-1");
    if (zeta == kZero || F.pow(zeta, n) != 0) invalid_input("zeta", "not an n-th root of unity");
    std::uint32_t step = F.order() / n;
    return zeta / step;
}

}  // namespace dwork
