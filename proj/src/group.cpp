#include "dwork/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "dwork/common.hpp"

namespace dwork {

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& s, const Perm& t) {
    Perm r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) r[i] = s[t[i]];
    return r;
}

Perm inverse(const Perm& s) {
    Perm r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) r[s[i]] = static_cast<int>(i);
    return r;
}

std::vector<std::vector<int>> cycles(const Perm& s) {
    std::vector<bool> seen(s.size(), false);
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        for (int j = static_cast<int>(i); !seen[j]; j = s[j]) {
            seen[j] = true;
            c.push_back(j);
        }
        out.push_back(c);
    }
    return out;
}

int sign(const Perm& s) {
    int sg = 1;
    for (const auto& c : cycles(s))
        if (c.size() % 2 == 0) sg = -sg;
    return sg;
}

std::vector<int> cycle_type(const Perm& s) {
    std::vector<int> t;
    for (const auto& c : cycles(s)) t.push_back(static_cast<int>(c.size()));
    std::sort(t.rbegin(), t.rend());
    return t;
}

Perm perm_power(const Perm& s, int k) {
    Perm r = identity_perm(static_cast<int>(s.size()));
    Perm base = k >= 0 ? s : inverse(s);
    for (int i = 0; i < std::abs(k); ++i) r = compose(base, r);
    return r;
}

std::vector<Perm> all_permutations(int n) {
    std::vector<Perm> out;
    Perm p = identity_perm(n);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Perm parse_cycles(int n, const std::string& text) {
    Perm p = identity_perm(n);
    std::vector<bool> used(n, false);
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(') invalid_input("sigma", "expected '(' in cycle notation");
        std::size_t j = text.find(')', i);
        if (j == std::string::npos) invalid_input("sigma", "unbalanced parenthesis");
        std::istringstream is(text.substr(i + 1, j - i - 1));
        std::string tok;
        std::vector<int> cyc;
        while (is >> tok) {
            for (char& ch : tok)
                if (ch == ',') ch = ' ';
            std::istringstream inner(tok);
            int v;
            while (inner >> v) {
                if (v < 1 || v > n) invalid_input("sigma", "point out of range");
                if (used[v - 1]) invalid_input("sigma", "point repeated");
                used[v - 1] = true;
                cyc.push_back(v - 1);
            }
        }
        for (std::size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
        i = j + 1;
    }
    return p;
}

std::string format_cycles(const Perm& s) {
    std::ostringstream os;
    for (const auto& c : cycles(s)) {
        if (c.size() < 2) continue;
        os << "(";
        for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k] + 1;
        os << ")";
    }
    std::string r = os.str();
    return r.empty() ? "()" : r;
}

GroupElement make_element(int n, std::vector<int> t, Perm sigma) {
    if (static_cast<int>(t.size()) != n) invalid_input("twist", "expected " + std::to_string(n) + " entries");
    if (static_cast<int>(sigma.size()) != n) invalid_input("sigma", "wrong size");
    std::vector<bool> seen(n, false);
    for (int x : sigma) {
        if (x < 0 || x >= n || seen[x]) invalid_input("sigma", "not a permutation");
        seen[x] = true;
    }
    int s = 0;
    for (int& x : t) {
        x = static_cast<int>(mod(x, n));
        s += x;
    }
    if (s % n != 0) invalid_input("twist", "exponents must sum to 0 mod n");
    int shift = t[0];
    for (int& x : t) x = static_cast<int>(mod(x - shift, n));
    return GroupElement{t, sigma};
}

GroupElement group_identity(int n) { return GroupElement{std::vector<int>(n, 0), identity_perm(n)}; }

std::vector<int> act(const Perm& sigma, const std::vector<int>& t) {
    std::vector<int> r(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) r[sigma[i]] = t[i];
    return r;
}

GroupElement multiply(const GroupElement& g, const GroupElement& h, int n) {
    auto st = act(g.sigma, h.t);
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i) t[i] = g.t[i] + st[i];
    return make_element(n, t, compose(g.sigma, h.sigma));
}

GroupElement group_inverse(const GroupElement& g, int n) {
    Perm si = inverse(g.sigma);
    auto t = act(si, g.t);
    for (int& x : t) x = -x;
    return make_element(n, t, si);
}

GroupElement conjugate_by_perm(const GroupElement& g, const Perm& s, int n) {
    Perm si = inverse(s);
    return make_element(n, act(si, g.t), compose(si, compose(g.sigma, s)));
}

GroupElement sn_class_key(const GroupElement& g, int n) {
    GroupElement best = g;
    for (const auto& s : all_permutations(n)) {
        auto c = conjugate_by_perm(g, s, n);
        if (c < best) best = c;
    }
    return best;
}

std::vector<std::vector<int>> all_A_parts(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(n, 0);
    std::size_t total = 1;
    for (int i = 0; i < n - 2; ++i) total *= n;
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t x = idx;
        int s = 0;
        for (int i = 1; i < n - 1; ++i) {
            t[i] = static_cast<int>(x % n);
            x /= n;
            s += t[i];
        }
        t[n - 1] = static_cast<int>(mod(-s, n));
        out.push_back(t);
    }
    return out;
}

std::vector<GroupElement> all_elements(int n) {
    std::vector<GroupElement> out;
    auto As = all_A_parts(n);
    for (const auto& s : all_permutations(n))
        for (const auto& t : As) out.push_back(GroupElement{t, s});
    return out;
}

}  // namespace dwork
