#pragma once

#include "k3fib/kodaira.hpp"
#include "k3fib/lattice.hpp"

#include <vector>

namespace k3fib {

// Unordered pair of fiber types allowed at the two fixed base points.
struct StablePair {
    FiberType first;   // ordered canonically: first <= second
    FiberType second;

    bool operator==(const StablePair&) const = default;
    auto operator<=>(const StablePair&) const = default;
};

StablePair make_stable_pair(FiberType a, FiberType b);

// All unordered pairs of types allowed for prime order p (including I_0)
// with Euler numbers summing to 24 - p; I_n/I_n* restricted to p | n and
// n <= 24. `include_istar0` exists for the regression pinning that I_0*
// never changes the output.
std::vector<StablePair> enumerate_stable_pairs(std::int64_t p, bool include_istar0 = true);

// Non-negative (c1, c2) with 24 - chi_pair = p*c1 + 2*p*c2.
std::vector<std::pair<std::int64_t, std::int64_t>> orbit_count_solutions(std::int64_t p,
                                                                          std::int64_t chi_pair);

// The unique even hyperbolic 3-elementary candidate of the right rank:
// U+A2 (N=27, rank 4), U+E8+E6 (N=9, rank 16), U+E8+E8+A2 (N=3, rank 20).
IntLattice candidate_ns_lattice(std::int64_t n);

struct RankCheck {
    std::int64_t rank_s;               // 22 - (p - 1)
    bool forces_trivial_action;        // rank_s < p - 1
};

// Rank arithmetic for prime automorphism orders; requires p - 1 <= 21.
RankCheck corollary_rank_check(std::int64_t p);

}  // namespace k3fib
