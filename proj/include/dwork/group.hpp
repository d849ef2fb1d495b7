#pragma once

#include <string>
#include <vector>

namespace dwork {

// 0-based permutation, i -> sigma[i].
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& s, const Perm& t);  // (s o t)(i) = s(t(i))
Perm inverse(const Perm& s);
int sign(const Perm& s);
std::vector<std::vector<int>> cycles(const Perm& s);  // each cycle starts at its least element
std::vector<int> cycle_type(const Perm& s);           // sorted descending
Perm perm_power(const Perm& s, int k);
std::vector<Perm> all_permutations(int n);
// Parses "(1 3)(2 4)" style 1-based cycle notation.
Perm parse_cycles(int n, const std::string& text);
std::string format_cycles(const Perm& s);

// Element zeta * sigma of A x| S_n. The A-part is an exponent vector mod n
// with zero sum, normalized so t[0] == 0. It acts on points by
// P -> (zeta_{sigma(i)} x_{sigma(i)})_i.
struct GroupElement {
    std::vector<int> t;
    Perm sigma;
    bool operator==(const GroupElement& o) const { return t == o.t && sigma == o.sigma; }
    bool operator<(const GroupElement& o) const {
        return sigma != o.sigma ? sigma < o.sigma : t < o.t;
    }
};

GroupElement make_element(int n, std::vector<int> t, Perm sigma);
GroupElement group_identity(int n);
GroupElement multiply(const GroupElement& g, const GroupElement& h, int n);
GroupElement group_inverse(const GroupElement& g, int n);
// (sigma t)_i = t_{sigma^{-1}(i)}
std::vector<int> act(const Perm& sigma, const std::vector<int>& t);
// s^{-1} g s for s in S_n
GroupElement conjugate_by_perm(const GroupElement& g, const Perm& s, int n);
// Canonical representative of the S_n-conjugacy class.
GroupElement sn_class_key(const GroupElement& g, int n);
std::vector<GroupElement> all_elements(int n);
std::vector<std::vector<int>> all_A_parts(int n);

}  // namespace dwork
