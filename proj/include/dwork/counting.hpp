#pragma once

#include <cstdint>
#include <vector>

#include "dwork/common.hpp"
#include "dwork/ffield.hpp"
#include "dwork/group.hpp"
#include "dwork/reptheory.hpp"

namespace dwork {

// x_1^n + ... + x_n^n - n psi x_1 ... x_n over F_q.
struct DworkInstance {
    int n = 0;
    std::uint32_t q = 0;
    std::uint32_t psi = 0;  // residue mod q
};

DworkInstance make_instance(int n, std::int64_t q, std::int64_t psi);

// R[b][s] = #{x in F : x^n - b x + s = 0}, indexed by encodings.
struct RootCountTable {
    std::uint32_t Q = 0;
    int n = 0;
    std::vector<std::uint8_t> R;
    std::uint32_t at(std::uint32_t b, std::uint32_t s) const { return R[static_cast<std::size_t>(b) * Q + s]; }
};
RootCountTable build_root_count_table(const FieldTable& F, int n);

std::uint64_t field_size(const DworkInstance& inst, int r);

// Projective points over F_{q^r}, by eliminating the last coordinate.
BigInt count_points(const DworkInstance& inst, int r);

// #{P : Frob^r(P) = P^g}. theta_exp picks the generator H^theta_exp of the
// working field; the result does not depend on it.
BigInt fixed_count_A(const DworkInstance& inst, const std::vector<int>& t, int r, std::uint64_t theta_exp = 1);
BigInt fixed_count_general(const DworkInstance& inst, const GroupElement& g, int r, std::uint64_t theta_exp = 1);

// Independent count: polynomial-basis extension field, one seed per cycle,
// every seed tuple substituted into the original equation.
BigInt oracle_fixed_count(const DworkInstance& inst, const GroupElement& g, int r, std::uint64_t seed = 1);

// (-1)^n (Fix - sum_{j<=n-2} Q^j), checked against the Weil bound. Cached.
BigInt twisted_trace(const DworkInstance& inst, const GroupElement& g, int r);
Rational weighted_trace(const DworkInstance& inst, const ClassFunction& weights, int r);

void set_jobs(int jobs);
int jobs();
void clear_count_cache();

}  // namespace dwork
