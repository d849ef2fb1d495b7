#pragma once

#include <vector>

#include "dwork/common.hpp"

namespace dwork {

// Coefficients of the m-th cyclotomic polynomial, low degree first.
const std::vector<BigInt>& cyclotomic_poly(int m);

// Element of Q(mu_m) in the power basis 1, x, ..., x^{phi(m)-1}.
class Cyclotomic {
public:
    Cyclotomic() = default;
    explicit Cyclotomic(int m);
    static Cyclotomic rational(int m, const Rational& c);
    static Cyclotomic root(int m, std::int64_t k);  // x^k
    // sum_j c_j x^j for an exponent-indexed coefficient list of any length
    static Cyclotomic from_exponents(int m, const std::vector<Rational>& c);
    static Cyclotomic from_exponents(int m, const std::vector<std::int64_t>& c);

    int conductor() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_rational() const;
    Rational rational_value() const;  // throws unless rational
    bool is_zero() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator*(const Rational& s) const;
    Cyclotomic operator-() const;
    bool operator==(const Cyclotomic& o) const { return m_ == o.m_ && c_ == o.c_; }
    // x -> x^v, v a unit mod m
    Cyclotomic galois(std::int64_t v) const;
    Rational trace() const;  // field trace to Q

private:
    int m_ = 1;
    std::vector<Rational> c_;
    void reduce(std::vector<Rational> full);
};

// Reduced coefficient vectors of x^e for e = 0..m-1.
const std::vector<std::vector<Rational>>& reduced_monomials(int m);

}  // namespace dwork
