#include "dwork/chars.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "dwork/common.hpp"

namespace dwork {

namespace {

void check_n(int n) {
    if (n < 3 || n > 9) invalid_input("n", "must lie in 3..9, got " + std::to_string(n));
}

std::vector<int> counts_of(int n, const std::vector<int>& v) {
    std::vector<int> c(n, 0);
    for (int x : v) ++c[mod(x, n)];
    return c;
}

bool is_subgroup(int n_a, const std::vector<int>& h) {
    if (h.empty()) return false;
    std::set<int> s(h.begin(), h.end());
    if (n_a == 1) return s == std::set<int>{1} || s == std::set<int>{0};
    if (!s.count(1)) return false;
    for (int x : s) {
        if (x <= 0 || x >= n_a || std::gcd(x, n_a) != 1) return false;
        for (int y : s)
            if (!s.count(x * y % n_a)) return false;
    }
    return true;
}

}  // namespace

CharClass make_class(int n, std::vector<int> v) {
    if (n < 1) invalid_input("n", "must be positive");
    if (static_cast<int>(v.size()) != n) invalid_input("class", "expected " + std::to_string(n) + " entries");
    int s = 0;
    for (int& x : v) {
        x = static_cast<int>(mod(x, n));
        s += x;
    }
    if (s % n != 0) invalid_input("class", "entries must sum to 0 mod n");
    int shift = v[0];
    for (int& x : v) x = static_cast<int>(mod(x - shift, n));
    return CharClass{n, v};
}

std::vector<int> sn_key(int n, std::vector<int> v) {
    std::vector<int> best;
    for (int j = 0; j < n; ++j) {
        std::vector<int> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = static_cast<int>(mod(v[i] + j, n));
        std::sort(w.begin(), w.end());
        if (best.empty() || w < best) best = std::move(w);
    }
    return best;
}

std::vector<int> orbit_key(int n, const std::vector<int>& v) {
    std::vector<int> best;
    for (int k : units_mod(n)) {
        std::vector<int> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = static_cast<int>(mod(static_cast<std::int64_t>(k) * v[i], n));
        auto key = sn_key(n, w);
        if (best.empty() || key < best) best = std::move(key);
    }
    return best;
}

void for_each_class(int n, const std::function<void(const std::vector<int>&)>& fn) {
    check_n(n);
    std::vector<int> v(n, 0);
    // v[0] = 0, v[1..n-2] free, v[n-1] fixed by the sum condition
    std::function<void(int, int)> rec = [&](int pos, int sum) {
        if (pos == n - 1) {
            v[n - 1] = static_cast<int>(mod(-sum, n));
            fn(v);
            return;
        }
        for (int x = 0; x < n; ++x) {
            v[pos] = x;
            rec(pos + 1, sum + x);
        }
    };
    rec(1, 0);
}

std::vector<CharClass> enumerate_classes(int n) {
    std::vector<CharClass> out;
    for_each_class(n, [&](const std::vector<int>& v) { out.push_back(CharClass{n, v}); });
    return out;
}

OrbitInvariants invariants(int n, const std::vector<int>& a) {
    if (static_cast<int>(a.size()) != n) invalid_input("class", "length mismatch");
    OrbitInvariants I;
    I.n = n;
    auto cnt = counts_of(n, a);
    I.level_counts = cnt;
    int distinct = 0;
    for (int c : cnt) distinct += c > 0;
    I.m = n - distinct;

    I.nprime = n;
    for (int j = 1; j < n; ++j) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) ok = cnt[(b + j) % n] == cnt[b];
        if (ok) {
            I.nprime = j;
            break;
        }
    }
    I.d = n / I.nprime;

    int f = n;
    for (int x : a) f = std::gcd(f, static_cast<int>(mod(x - a[0], n)));
    I.f = f;
    I.n_a = n / f;
    if (I.nprime % f != 0) check_failed("invariants", "f_a does not divide n'_a");
    I.e = I.nprime / f;

    std::uint64_t denom = 1;
    for (int c : cnt) denom *= factorial(c);
    I.gamma = factorial(n) / denom;
    I.size_Sprime = denom;
    if (I.m % I.d != 0) check_failed("invariants", "d_a does not divide m_a");
    I.mprime = I.m / I.d;

    std::set<int> im;
    for (int k : units_mod(n)) {
        std::vector<int> ck(n, 0);
        for (int x : a) ++ck[mod(static_cast<std::int64_t>(k) * x, n)];
        for (int j = 0; j < n; ++j) {
            bool ok = true;
            for (int b = 0; b < n && ok; ++b) ok = ck[(b + j) % n] == cnt[b];
            if (ok) {
                im.insert(I.n_a == 1 ? 1 : k % I.n_a);
                break;
            }
        }
    }
    I.im_k.assign(im.begin(), im.end());
    int phi = static_cast<int>(euler_phi(I.n_a));
    if (phi % static_cast<int>(I.im_k.size()) != 0) check_failed("invariants", "|im_k| does not divide phi(n_a)");
    I.D_degree = phi / static_cast<int>(I.im_k.size());
    I.deg_Q = I.mprime * I.D_degree;
    I.exponent = I.gamma / I.d;
    I.size_Sbar = I.size_Sprime * I.d;
    I.size_S = I.size_Sbar * I.im_k.size();
    I.D_label = field_label(I.n_a, I.im_k);
    return I;
}

std::string field_label(int n_a, const std::vector<int>& im_k) {
    if (n_a < 1) invalid_input("n_a", "must be positive");
    if (!is_subgroup(n_a, im_k)) invalid_input("im_k", "not a subgroup of the unit group");
    std::set<int> h(im_k.begin(), im_k.end());
    std::size_t phi = euler_phi(n_a);
    if (n_a <= 2 || h.size() == phi) return "Q";
    if (h.size() == 1) return "Q(mu_" + std::to_string(n_a) + ")";
    if (n_a % 2 == 1 && is_prime(n_a)) {
        std::set<int> squares;
        for (int x = 1; x < n_a; ++x) squares.insert(x * x % n_a);
        if (h == squares) {
            int D = ((n_a - 1) / 2) % 2 == 0 ? n_a : -n_a;
            return "Q(sqrt(" + std::to_string(D) + "))";
        }
    }
    if (h == std::set<int>{1, n_a - 1}) return "Q(mu_" + std::to_string(n_a) + ")+";
    std::ostringstream os;
    os << "(" << n_a << "; {";
    bool first = true;
    for (int x : h) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    os << "})";
    return os.str();
}

std::vector<Orbit> full_orbits(int n) {
    check_n(n);
    std::set<std::vector<int>> keys;
    std::vector<int> v(n);
    std::function<void(int, int, int)> rec = [&](int pos, int lo, int sum) {
        if (pos == n) {
            if (sum % n == 0) keys.insert(orbit_key(n, v));
            return;
        }
        for (int x = lo; x < n; ++x) {
            v[pos] = x;
            rec(pos + 1, x, sum + x);
        }
    };
    v[0] = 0;
    rec(1, 0, 0);  // every S_n-class has a sorted representative starting with 0
    std::vector<Orbit> out;
    for (const auto& key : keys) {
        Orbit o;
        o.rep = key;
        o.inv = invariants(n, key);
        o.size = static_cast<std::uint64_t>(o.inv.D_degree) * o.inv.exponent;
        o.excluded = o.inv.m == 0;
        out.push_back(std::move(o));
    }
    return out;
}

std::uint64_t prim_dimension(int n) {
    std::int64_t a = 1, sign = (n % 2 == 0) ? 1 : -1;
    for (int i = 0; i < n; ++i) a *= (n - 1);
    return static_cast<std::uint64_t>((a + sign * (n - 1)) / n);
}

std::string omega_set_label(int d) {
    if (d == 1) return "1";
    if (d == 2) return "+-1";
    return "mu_" + std::to_string(d);
}

std::string class_string(const std::vector<int>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

PredictReport predict_report(int n) {
    PredictReport R;
    R.n = n;
    for (const auto& o : full_orbits(n)) {
        if (o.excluded) {
            R.excluded.push_back(o.rep);
            continue;
        }
        PredictRow row;
        row.rep = o.rep;
        row.m = o.inv.m;
        row.deg_Q = o.inv.deg_Q;
        row.exponent = o.inv.exponent;
        row.D_label = o.inv.D_label;
        row.d = o.inv.d;
        R.rows.push_back(row);
        R.total_dim += static_cast<std::uint64_t>(o.inv.d) * o.inv.deg_Q * o.inv.exponent;
    }
    R.expected_dim = prim_dimension(n);
    return R;
}

}  // namespace dwork
