#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dwork {

// Element of the character group: entries mod n summing to 0, modulo the
// diagonal. Normal form has rep[0] == 0.
struct CharClass {
    int n = 0;
    std::vector<int> rep;
    bool operator==(const CharClass& o) const { return n == o.n && rep == o.rep; }
    bool operator<(const CharClass& o) const { return rep < o.rep; }
};

CharClass make_class(int n, std::vector<int> v);
// Key of the S_n-orbit: sorted, then least under diagonal shifts.
std::vector<int> sn_key(int n, std::vector<int> v);
// Key of the orbit under S_n and unit multiples.
std::vector<int> orbit_key(int n, const std::vector<int>& v);

std::vector<CharClass> enumerate_classes(int n);
void for_each_class(int n, const std::function<void(const std::vector<int>&)>& fn);

struct OrbitInvariants {
    int n = 0;
    int m = 0;
    int nprime = 0;
    int d = 0;
    int f = 0;
    int n_a = 0;
    int e = 0;
    std::uint64_t gamma = 0;
    int mprime = 0;
    std::vector<int> im_k;
    int deg_Q = 0;
    std::uint64_t exponent = 0;
    int D_degree = 0;  // [D_a : Q]
    std::string D_label;
    std::uint64_t size_Sprime = 0;
    std::uint64_t size_Sbar = 0;
    std::uint64_t size_S = 0;
    std::vector<int> level_counts;  // |I(b)| for b in Z/n
};

OrbitInvariants invariants(int n, const std::vector<int>& a);
inline OrbitInvariants invariants(const CharClass& a) { return invariants(a.n, a.rep); }

struct Orbit {
    std::vector<int> rep;
    std::uint64_t size = 0;
    OrbitInvariants inv;
    bool excluded = false;
};

std::vector<Orbit> full_orbits(int n);

std::string field_label(int n_a, const std::vector<int>& im_k);

std::uint64_t prim_dimension(int n);

struct PredictRow {
    std::vector<int> rep;
    int m = 0;
    int deg_Q = 0;
    std::uint64_t exponent = 0;
    std::string D_label;
    int d = 1;  // omega ranges over mu_d
};

struct PredictReport {
    int n = 0;
    std::vector<PredictRow> rows;
    std::vector<std::vector<int>> excluded;
    std::uint64_t total_dim = 0;
    std::uint64_t expected_dim = 0;
};

PredictReport predict_report(int n);
std::string omega_set_label(int d);
std::string class_string(const std::vector<int>& v);

}  // namespace dwork
