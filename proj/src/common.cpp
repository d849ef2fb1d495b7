#include "dwork/common.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

namespace dwork {

Error::Error(ErrorKind kind, std::string parameter, const std::string& message)
    : std::runtime_error(message), kind_(kind), parameter_(std::move(parameter)) {}

int Error::exit_code() const {
    switch (kind_) {
        case ErrorKind::InvalidInput: return 4;
        case ErrorKind::CostCap: return 3;
        case ErrorKind::CheckFailure: return 2;
    }
    return 2;
}

std::string Error::kind_name() const {
    switch (kind_) {
        case ErrorKind::InvalidInput: return "invalid_input";
        case ErrorKind::CostCap: return "cost_cap";
        case ErrorKind::CheckFailure: return "check_failure";
    }
    return "unknown";
}

void invalid_input(const std::string& parameter, const std::string& message) {
    throw Error(ErrorKind::InvalidInput, parameter, parameter + ": " + message);
}

void cost_cap_exceeded(const std::string& what, double estimate) {
    std::ostringstream os;
    os << what << ": estimated " << estimate << " operations exceeds cap " << cost_cap();
    throw Error(ErrorKind::CostCap, what, os.str());
}

void check_failed(const std::string& what, const std::string& message) {
    throw Error(ErrorKind::CheckFailure, what, what + ": " + message);
}

namespace {
double g_cap = -1;
}

double cost_cap() {
    if (g_cap > 0) return g_cap;
    if (const char* env = std::getenv("DWORK_COST_CAP")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return 1e9;
}

void set_cost_cap(double ops) { g_cap = ops; }

void require_cost(const std::string& what, double estimate) {
    if (estimate > cost_cap()) cost_cap_exceeded(what, estimate);
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::int64_t invmod(std::int64_t a, std::int64_t m) {
    std::int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
    while (a1) {
        std::int64_t q = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - q * a1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) invalid_input("invmod", "not invertible");
    return mod(x, m);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

std::vector<int> units_mod(int n) {
    std::vector<int> out;
    for (int k = 0; k < n; ++k) {
        if (std::gcd(k, n) == 1) out.push_back(k);
    }
    if (n == 1) out = {0};
    return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            invalid_input("power", "overflow");
        r *= base;
    }
    return r;
}

std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

BigInt big_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

bool is_integer(const Rational& x) {
    return boost::multiprecision::denominator(x) == 1;
}

BigInt to_integer(const Rational& x, const std::string& what) {
    if (!is_integer(x)) check_failed(what, "expected an integer, got " + to_string(x));
    return boost::multiprecision::numerator(x);
}

std::string to_string(const Rational& x) {
    if (is_integer(x)) return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" +
           boost::multiprecision::denominator(x).str();
}

}  // namespace dwork
