#pragma once

#include "k3fib/fibration.hpp"
#include "k3fib/numeric.hpp"

#include <string>
#include <vector>

namespace k3fib {

// (x, y, t) -> (zeta^alpha x, zeta^beta y, zeta^gamma t) for a primitive
// order-th root of unity zeta.
struct MonomialAutomorphism {
    std::int64_t order;  // N >= 1
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    std::int64_t gamma = 0;

    MonomialAutomorphism normalized() const {
        return {order, mod_i64(alpha, order), mod_i64(beta, order), mod_i64(gamma, order)};
    }
    bool operator==(const MonomialAutomorphism&) const = default;
    auto operator<=>(const MonomialAutomorphism&) const = default;
};

struct InvarianceReport {
    bool valid = true;
    std::vector<std::string> failures;  // one line per violated congruence
};

// The equation y^2 = x^3 + a x + b is preserved exactly (every term picks
// up the common factor zeta^{2 beta}): 3a == 2b for the cubic term,
// m*gamma + alpha == 2*beta per a-monomial t^m, m*gamma == 2*beta per
// b-monomial, all mod order.
InvarianceReport check_weierstrass_invariance(const WeierstrassModel& m, const MonomialAutomorphism& g);

// Exponent k with g* omega = zeta^k omega for omega = dx ^ dt / 2y:
// alpha + gamma - beta mod order.
std::int64_t omega_multiplier(const MonomialAutomorphism& g);

struct Orders {
    std::int64_t total;  // order of g
    std::int64_t base;   // order of the induced base rotation t -> zeta^gamma t
};

Orders orders(const MonomialAutomorphism& g);

struct PlaceOrbit {
    Place place;
    std::int64_t orbit_size;   // base order
    std::int64_t orbit_count;  // degree / orbit_size
};

struct OrbitStructure {
    std::vector<Place> stable;      // pointwise-fixed places (t = 0 and infinity)
    std::vector<PlaceOrbit> orbits;
};

// Orbit decomposition of the configuration's places under the base
// rotation. Every non-stable place must be semi-invariant (support
// exponents constant mod the base order) with degree divisible by the
// base order; throws inconsistent_error otherwise.
OrbitStructure orbit_structure(const FiberConfiguration& config, const MonomialAutomorphism& g);

struct OrbitIdentity {
    std::int64_t chi_stable = 0;  // Euler sum over pointwise-fixed fibers
    std::int64_t residual = 0;    // 24 - chi_stable
    std::int64_t c1 = 0;          // orbits of I_1 fibers
    std::int64_t c2 = 0;          // orbits of II fibers
    bool consistent = false;      // residual == q*c1 + 2*q*c2
};

// Euler bookkeeping 24 = chi(X_0) + chi(X_inf) + q*c1 + 2q*c2 for base
// order q >= 2. An orbit fiber outside {I_1, II} throws; a degree not
// divisible by the base order reports consistent = false.
OrbitIdentity euler_orbit_identity(const FiberConfiguration& config, const MonomialAutomorphism& g);

// 2 + rank_S + ramanujan_sum(n, k): the Lefschetz-style fixed-point count
// for the k-th power acting trivially on the rank-rank_S piece. Throws
// when k == 0 mod n.
std::int64_t chi_fixed_trace(std::int64_t rank_s, std::int64_t n, std::int64_t k);

// Hypersurface { sum coeff * prod x_i^{e_i} = 0 } in a weighted projective
// space; sum of weights = degree is the K3 condition.
struct WeightedMonomial {
    std::vector<int> exponents;
    Rat coeff;
};

struct WeightedHypersurface {
    std::vector<int> weights;
    int degree;
    std::vector<WeightedMonomial> monomials;
};

// Validates weighted degrees and the K3 weight sum.
WeightedHypersurface make_weighted_hypersurface(std::vector<int> weights, int degree,
                                                std::vector<WeightedMonomial> monomials);

// x_i -> zeta^{e_i} x_i.
struct WeightedAutomorphism {
    std::int64_t order;
    std::vector<std::int64_t> exponents;
};

struct WeightedInvarianceReport {
    bool valid = true;
    std::int64_t equation_multiplier = 0;  // common factor zeta^{a_f}
    std::int64_t omega_multiplier = 0;     // (sum of exponents) - a_f mod order
    std::vector<std::string> failures;
};

WeightedInvarianceReport check_weighted_invariance(const WeightedHypersurface& h,
                                                   const WeightedAutomorphism& g);

std::int64_t weighted_order(const WeightedAutomorphism& g);

// Parses "x3^2 + x0^6 + x0*x1^5 + x1*x2^5" (coordinates x0, x1, ...;
// optional rational coefficients; '*' optional between factors) into
// monomials of the given arity.
std::vector<WeightedMonomial> parse_weighted_equation(const std::string& text, std::size_t arity);

// Every (alpha, beta, gamma) mod n preserving the model; closed under
// composition and inverse.
std::vector<MonomialAutomorphism> solve_automorphisms(const WeierstrassModel& m, std::int64_t n);

struct CyclicAutomorphismGroup {
    MonomialAutomorphism generator;
    std::int64_t order;
};

// The distinct cyclic subgroups generated by the solutions, each with a
// canonical generator (maximal order, then smallest gamma, alpha, beta).
std::vector<CyclicAutomorphismGroup> automorphism_groups(const std::vector<MonomialAutomorphism>& solutions,
                                                         std::int64_t n);

}  // namespace k3fib
