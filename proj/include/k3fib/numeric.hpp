#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace k3fib {

// Exact arbitrary-precision integers and rationals. Rationals are kept
// reduced with a positive denominator; zero is 0/1.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Base class for everything this library throws.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text input (polynomials, fiber names, lattice specs, ...).
struct parse_error : error {
    using error::error;
};

// A Weierstrass model that still admits a (f^4, f^6) reduction.
struct non_minimal_error : error {
    using error::error;
};

// A valuation triple or configuration no classification row covers.
struct inconsistent_error : error {
    using error::error;
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw error("rational with zero denominator");
    return Rat(num, den);
}

std::string rat_to_string(const Rat& x);

// Accepts "27", "-3", "13/6", "-3/4".
Rat parse_rat(const std::string& text);

// Checked narrowing for report output.
std::int64_t to_int64(const Int& x);

std::int64_t gcd_i64(std::int64_t a, std::int64_t b);

// x mod m in [0, m).
std::int64_t mod_i64(std::int64_t x, std::int64_t m);

bool is_prime_i64(std::int64_t p);

}  // namespace k3fib
