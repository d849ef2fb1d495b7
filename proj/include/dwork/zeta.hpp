#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dwork/chars.hpp"
#include "dwork/common.hpp"
#include "dwork/counting.hpp"

namespace dwork {

// Integer polynomial with constant term 1, low degree first.
struct IntPoly {
    std::vector<BigInt> c{1};
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool operator==(const IntPoly& o) const { return c == o.c; }
    bool operator<(const IntPoly& o) const;
};

IntPoly make_poly(std::vector<BigInt> c);  // trims, requires c[0] == 1
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_pow(const IntPoly& a, std::uint64_t e);
std::string to_string(const IntPoly& p);
// Power sums of the reciprocal roots, r = 1..R.
std::vector<BigInt> power_sums(const IntPoly& p, int R);

// Raw isotypic power sums for r = 1, 2, ... and the divisor gamma/d.
struct PowerSumSeries {
    std::vector<Rational> raw;
    Rational divisor{1};
    std::vector<Rational> normalized() const;
};

// Coefficients c_0..c_K from the first K power sums; c_0 = 1.
std::vector<Rational> newton_coefficients(const std::vector<Rational>& sums, int K);
// Unique degree-D polynomial matching sums 1..D; throws if not integral.
IntPoly newton_poly(const std::vector<Rational>& sums, int D);

// Sign eps with t^D q^(Dw/2) P(1/(q^w t)) = eps P(t), checked exactly.
std::optional<int> functional_sign(const IntPoly& p, int w, std::uint64_t q);

struct WeilResult {
    bool pass = false;
    double max_deviation = 0;  // max | |alpha| / q^(w/2) - 1 |
};
WeilResult weil_check(const IntPoly& p, int w, std::uint64_t q, double tol = 1e-9);

struct Completion {
    IntPoly poly;
    int sign = 1;
    int candidates = 0;  // survivors before the uniqueness requirement
};
// Uses sums r = 1..floor(D/2) to build candidates for both signs; every
// given sum, integrality and the Weil bound filter them. nullopt when
// more than one survives.
std::optional<Completion> functional_completion(const std::vector<Rational>& sums, int D, int w, std::uint64_t q);

// Element u + v sqrt(m) of Q(sqrt m).
struct QuadNumber {
    Rational u, v;
    bool operator==(const QuadNumber& o) const { return u == o.u && v == o.v; }
};
struct QuadraticSplit {
    int m = 0;
    std::vector<QuadNumber> first;   // coefficients of P, constant term first
    std::vector<QuadNumber> second;  // its conjugate
};
std::optional<QuadraticSplit> quadratic_split_check(const IntPoly& Qa, int m, int mprime);
// Squarefree m with D_a = Q(sqrt m), from the Gaussian periods of Im k.
int quadratic_field_discriminant(int n_a, const std::vector<int>& im_k);

struct Certificate {
    bool integrality = false;
    bool degree_match = false;
    bool functional = false;
    int sign = 0;
    bool weil = false;
    double weil_deviation = 0;
    bool consistency = false;  // completed polynomial reproduces every computed sum
    std::optional<bool> quadratic_split;
    bool pass() const {
        return integrality && degree_match && functional && weil && consistency && quadratic_split.value_or(true);
    }
};

struct FactorReport {
    std::vector<int> rep;
    std::string kind;  // "orbit" or "omega"
    int omega = -1;    // projector index for kind "omega"
    IntPoly base;
    std::uint64_t exponent = 1;
    int expected_degree = 0;
    std::vector<Rational> raw_sums;
    Certificate cert;
    std::optional<QuadraticSplit> split;
};

FactorReport orbit_factor(const DworkInstance& inst, const std::vector<int>& orbit_rep);
// Per-omega factors sorted as a multiset; their product must equal the
// orbit factor base.
std::vector<FactorReport> omega_split(const DworkInstance& inst, const std::vector<int>& a);

struct ConsistencyRow {
    int r = 0;
    BigInt direct;     // (-1)^n (N_r - sum q^(rj))
    BigInt assembled;  // sum of exponent * power sums of extracted factors
    bool pass = false;
};

struct ZetaReport {
    DworkInstance inst;
    PredictReport predictions;
    std::vector<FactorReport> factors;
    std::vector<ConsistencyRow> consistency;
    bool extracted = false;
    bool pass() const;
};

enum class ZetaMode { predict, extract, check };
// extract: factors plus omega splits and quadratic checks. check: also the
// global power-sum consistency for r = 1, 2. orbit restricts extraction.
ZetaReport zeta_report(const DworkInstance& inst, ZetaMode mode = ZetaMode::check,
                       const std::optional<std::vector<int>>& orbit = std::nullopt);

}  // namespace dwork
