#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dwork/chars.hpp"
#include "dwork/common.hpp"
#include "dwork/cyclotomic.hpp"
#include "dwork/group.hpp"

namespace dwork {

BigInt hirzebruch_chi(int k, int d);
// Trace on primitive cohomology of g whose permutation part has uniform cycle type.
BigInt trace_closed_form(int n, const GroupElement& g);
BigInt transposition_trace(int n);
// Sum over exponent vectors c in (Z/n \ 0)^r with sum in n'Z/n of mu^c.
std::pair<Rational, Rational> lemma_sum_check(int n, int nprime, int r, const std::vector<int>& mus);

// <a, t> = sum a_i t_i mod n
int pairing(int n, const std::vector<int>& a, const std::vector<int>& t);

Rational fourier_multiplicity(int n, const std::vector<int>& a);
std::map<std::vector<int>, Rational> fourier_multiplicities(int n);

// Trace of sigma on H_a by Fourier inversion over A of closed-form traces.
Rational trace_on_isotypic(int n, const std::vector<int>& a, const Perm& sigma);

// Everything about a class needed to build M_{a,omega}; a must be in normal
// form (a[0] == 0), so every entry is a multiple of f_a.
struct ClassData {
    int n = 0;
    std::vector<int> a;
    OrbitInvariants inv;
    std::vector<int> b;  // a / f_a
    std::vector<std::vector<int>> levels;  // positions of value v, ascending
};
ClassData class_data(int n, const std::vector<int>& a);

struct UV {
    int u;
    int v;
    bool operator==(const UV& o) const { return u == o.u && v == o.v; }
};
std::optional<UV> try_u_v(const ClassData& C, const Perm& sigma);
UV u_v_of(const ClassData& C, const Perm& sigma);

struct SplitEntry {
    UV uv;
    Perm sigma;
};
struct StabilizerStructure {
    std::vector<Perm> sprime_generators;
    Perm sigma_a;
    std::vector<SplitEntry> splitting;
    bool homomorphism_ok = false;
    std::uint64_t size_S_enumerated = 0;  // 0 when not enumerated
};
StabilizerStructure stabilizer_structure(const ClassData& C, bool enumerate = true);

using Matrix = std::vector<std::vector<Rational>>;
Matrix mu_matrix(const ClassData& C, int omega_exp, const GroupElement& g);
Rational mu_trace(const ClassData& C, int omega_exp, const GroupElement& g);
BigInt xi_character(const ClassData& C, int omega_exp, const GroupElement& g);

struct ClassEntry {
    GroupElement rep;
    std::uint64_t size = 0;
    Rational weight;  // value on each element of the class
};
struct ClassFunction {
    int n = 0;
    bool full_group = false;
    std::vector<ClassEntry> entries;
};

// Orbit projector, supported on A, constant on S_n-classes.
ClassFunction orbit_projector(int n, const std::vector<int>& orbit_rep);
// (a, omega) projector over G. Classes with zero weight are dropped.
ClassFunction omega_projector(const ClassData& C, int omega_exp);
// A-supported class function taking the value 1 at the identity only.
ClassFunction identity_indicator(int n);

struct NamedCheck {
    std::string name;
    bool pass = true;
    std::string witness;
};
std::vector<NamedCheck> verify_regular_structure(const ClassData& C);
// Sum of m_a over the classes fixed by a transposition, against the closed form.
NamedCheck transposition_sum_check(int n);

}  // namespace dwork
