#pragma once

#include "k3fib/lattice.hpp"
#include "k3fib/poly.hpp"

#include <array>
#include <vector>

namespace k3fib {

// Automorphism orders with non-unimodular transcendental lattice.
inline constexpr std::array<std::int64_t, 10> kNonUnimodularOrders = {3, 9, 27, 5, 25, 7, 11, 13, 17, 19};
// Automorphism orders with unimodular transcendental lattice.
inline constexpr std::array<std::int64_t, 6> kUnimodularOrders = {66, 44, 42, 36, 28, 12};

bool is_non_unimodular_order(std::int64_t n);

std::int64_t phi_euler(std::int64_t n);
std::int64_t mobius(std::int64_t n);

// c_n(k) = sum over d | gcd(n, k) of d * mobius(n/d); equals the trace of
// the k-th power of the multiplication-by-zeta_n matrix.
std::int64_t ramanujan_sum(std::int64_t n, std::int64_t k);

// The n-th cyclotomic polynomial, by exact division of x^n - 1 by all
// proper-divisor cyclotomic polynomials.
QPoly cyclotomic_poly(std::int64_t n);

// Multiplication by zeta_n on the power basis 1, zeta, ..., zeta^{phi-1}
// of Z[zeta_n].
struct CycloModel {
    std::int64_t n;
    std::int64_t phi;
    IMat companion;
};

CycloModel cyclo_model(std::int64_t n);

// Trace of companion^k; cross-checks ramanujan_sum through an independent
// matrix-power path.
std::int64_t trace_power(std::int64_t n, std::int64_t k);

// Basis of ker(companion - I) over F_p, each vector with entries in
// [0, p) and first nonzero coordinate scaled to 1. This is the fixed part
// of (1/p)T/T under the generator itself.
std::vector<std::vector<std::int64_t>> fixed_kernel_mod_p(std::int64_t n, std::int64_t p);

// Dimension of the fixed part; 1 for every order in kNonUnimodularOrders.
std::int64_t fixed_discriminant_dimension(std::int64_t n, std::int64_t p);

}  // namespace k3fib
