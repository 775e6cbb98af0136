#include "k3fib/numeric.hpp"

#include <limits>

namespace k3fib {

std::string rat_to_string(const Rat& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) {
        s += "/";
        s += denominator(x).str();
    }
    return s;
}

Rat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator in '" + text + "'");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw parse_error("bad rational literal '" + text + "'");
    }
}

std::int64_t to_int64(const Int& x) {
    if (x > std::numeric_limits<std::int64_t>::max() ||
        x < std::numeric_limits<std::int64_t>::min())
        throw error("integer too large for report field: " + x.str());
    return static_cast<std::int64_t>(x);
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t mod_i64(std::int64_t x, std::int64_t m) {
    if (m <= 0) throw error("modulus must be positive");
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

bool is_prime_i64(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace k3fib
