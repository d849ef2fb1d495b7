#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dwork {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorKind { InvalidInput, CostCap, CheckFailure };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string parameter, const std::string& message);
    ErrorKind kind() const { return kind_; }
    const std::string& parameter() const { return parameter_; }
    int exit_code() const;
    std::string kind_name() const;

private:
    ErrorKind kind_;
    std::string parameter_;
};

[[noreturn]] void invalid_input(const std::string& parameter, const std::string& message);
[[noreturn]] void cost_cap_exceeded(const std::string& what, double estimate);
[[noreturn]] void check_failed(const std::string& what, const std::string& message);

// Work budget in elementary operations. DWORK_COST_CAP overrides the default.
double cost_cap();
void set_cost_cap(double ops);
void require_cost(const std::string& what, double estimate);

std::int64_t mod(std::int64_t a, std::int64_t m);
std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::int64_t invmod(std::int64_t a, std::int64_t m);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::vector<int> units_mod(int n);
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);
std::uint64_t factorial(int n);
BigInt big_pow(const BigInt& base, unsigned exp);

bool is_integer(const Rational& x);
BigInt to_integer(const Rational& x, const std::string& what);
std::string to_string(const Rational& x);

}  // namespace dwork
