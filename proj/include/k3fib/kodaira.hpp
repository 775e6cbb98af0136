#pragma once

#include "k3fib/lattice.hpp"
#include "k3fib/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3fib {

enum class FiberKind { In, InStar, II, III, IV, IIStar, IIIStar, IVStar };

// Kodaira type of a fiber of a minimal elliptic fibration. n is used only
// by the I_n and I_n* families; I_0 is the smooth fiber.
struct FiberType {
    FiberKind kind;
    int n = 0;

    bool operator==(const FiberType&) const = default;
    auto operator<=>(const FiberType&) const = default;
};

inline FiberType fiber_In(int n) {
    if (n < 0) throw error("I_n requires n >= 0");
    return {FiberKind::In, n};
}
inline FiberType fiber_InStar(int n) {
    if (n < 0) throw error("I_n* requires n >= 0");
    return {FiberKind::InStar, n};
}
inline constexpr FiberType kFiberII{FiberKind::II};
inline constexpr FiberType kFiberIII{FiberKind::III};
inline constexpr FiberType kFiberIV{FiberKind::IV};
inline constexpr FiberType kFiberIIStar{FiberKind::IIStar};
inline constexpr FiberType kFiberIIIStar{FiberKind::IIIStar};
inline constexpr FiberType kFiberIVStar{FiberKind::IVStar};

// "I3", "I3*", "II", "III", "IV", "II*", "III*", "IV*". Round-trips with
// parse_fiber_type.
std::string fiber_type_name(const FiberType& t);
FiberType parse_fiber_type(const std::string& name);

// Classification of the fiber from the valuations of a, b and the
// discriminant at a place, for a minimal short Weierstrass model in
// residue characteristic 0. Throws non_minimal_error when va >= 4 and
// vb >= 6, and inconsistent_error when no row covers the triple.
FiberType classify_valuations(const ExtVal& va, const ExtVal& vb, std::int64_t vd);

// Topological Euler number: equals vd on every classification row.
std::int64_t euler_number(const FiberType& t);

// Irreducible components (I_0 counts as 1).
std::int64_t component_count(const FiberType& t);

// Root lattice spanned by fiber components away from the zero section:
// A_{n-1} for I_n (n >= 2), A1/A2 for III/IV, D_{n+4} for I_n*, E6/E7/E8
// for IV*/III*/II*; nullopt for irreducible fibers.
std::optional<IntLattice> fiber_root_lattice(const FiberType& t);

// Possible local height-pairing correction terms, sorted ascending.
std::vector<Rat> contribution_values(const FiberType& t);

// Whether the type can appear as a pointwise-stable fiber for an
// automorphism of prime order p >= 5: I_n and I_n* need p | n (n = 0
// permitted); the additive types are always allowed.
bool stable_type_allowed(const FiberType& t, std::int64_t p);

}  // namespace k3fib
