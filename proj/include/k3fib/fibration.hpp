#pragma once

#include "k3fib/kodaira.hpp"
#include "k3fib/lattice.hpp"
#include "k3fib/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3fib {

// y^2 = x^3 + a(t) x + b(t) over Q(t). K3 normalization bounds:
// deg a <= 8, deg b <= 12.
struct WeierstrassModel {
    QPoly a;
    QPoly b;

    bool operator==(const WeierstrassModel&) const = default;
};

inline constexpr int kK3WeightA = 8;
inline constexpr int kK3WeightB = 12;
inline constexpr int kK3WeightDisc = 24;

// A Galois-stable cluster of base points: a monic squarefree polynomial,
// or the point at infinity. degree() counts geometric points.
struct Place {
    bool at_infinity = false;
    QPoly poly;  // monic, squarefree, non-constant when finite

    static Place infinity() { return Place{true, QPoly()}; }
    static Place finite(QPoly f);

    int degree() const { return at_infinity ? 1 : poly.degree(); }
    bool is_origin() const { return !at_infinity && poly == QPoly::variable(); }
    std::string to_string() const;

    bool operator==(const Place&) const = default;
};

struct FiberAssignment {
    Place place;
    FiberType fiber;
    ExtVal va;
    ExtVal vb;
    std::int64_t vd = 0;
};

struct FiberConfiguration {
    std::vector<FiberAssignment> assignments;  // finite singular places, then infinity

    std::int64_t euler_total() const;
    const FiberAssignment& at_infinity() const;
    const FiberAssignment* at_origin() const;  // null when the fiber at t=0 is smooth
};

// 4a^3 + 27b^2; throws when identically zero.
QPoly discriminant(const WeierstrassModel& m);

// Removes every finite place f with v_f(a) >= 4 and v_f(b) >= 6 by the
// (a, b) -> (a/f^4, b/f^6) substitution; idempotent.
WeierstrassModel minimalize(const WeierstrassModel& m);

// Finite places with uniform valuation triples covering the discriminant
// locus, plus the place at infinity. Requires a minimal model.
std::vector<Place> decompose_places(const WeierstrassModel& m);

// Full fiber classification of a minimal K3 model. Throws
// non_minimal_error, inconsistent_error, or plain error with a
// "rational elliptic" message if the Euler characteristic is 12.
FiberConfiguration analyze(const WeierstrassModel& m);

// U plus one copy of the fiber root lattice per geometric point.
IntLattice trivial_lattice(const FiberConfiguration& config);

// Geometric twist test: a2 = la * a1 and b2 = lb * b1 with la^3 = lb^2
// (la free when a = 0, lb free when b = 0).
bool twist_equivalent(const WeierstrassModel& m1, const WeierstrassModel& m2);

// t -> c * t, c nonzero.
WeierstrassModel base_scale(const WeierstrassModel& m, const Rat& c);

// t -> 1/t with the K3 weighted chart change, then minimalize.
WeierstrassModel base_invert(const WeierstrassModel& m);

// Summary used for configuration comparisons: fiber at the origin (I_0
// when the origin is smooth), fiber at infinity, and the remaining finite
// places as (type, degree) pairs, sorted.
struct ConfigSummary {
    FiberType at_zero = fiber_In(0);
    FiberType at_inf = fiber_In(0);
    std::vector<std::pair<FiberType, int>> others;

    ConfigSummary swapped() const;
    bool operator==(const ConfigSummary&) const = default;
};

ConfigSummary summarize(const FiberConfiguration& config);

// Equality of geometric fiber multisets with the 0 and infinity fibers
// pinned (place degrees expanded to point counts).
bool same_geometric_configuration(const ConfigSummary& a, const ConfigSummary& b);

// Brute-force search over a = t^m (m <= 8), b = t^n (n <= 12).
struct MonomialSearch {
    std::vector<std::pair<int, int>> exact;    // configuration matches target
    std::vector<std::pair<int, int>> swapped;  // matches after a 0 <-> infinity swap
};

MonomialSearch reconstruct_monomial_models(const ConfigSummary& target);

}  // namespace k3fib
