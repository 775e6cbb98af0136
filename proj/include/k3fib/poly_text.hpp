#pragma once

#include "k3fib/poly.hpp"

#include <string>

namespace k3fib {

// Grammar: integer or rational literals (27, -3/4), the variable t,
// operators + - * ^ and parentheses; whitespace is insignificant and
// juxtaposition multiplies (4t^2, t(t-1)).
QPoly parse_poly(const std::string& text);

// Canonical form, descending powers: "t^21 + 27/4*t^2", "0".
// Round-trips through parse_poly.
std::string poly_to_string(const QPoly& p);

}  // namespace k3fib
