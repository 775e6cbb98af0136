#pragma once

#include "k3fib/fibration.hpp"

#include <optional>
#include <vector>

namespace k3fib {

// Inputs to the Shioda height pairing on sections of a K3 fibration.
struct HeightContext {
    std::int64_t chi_structure = 2;  // chi(O_X), 2 for a K3 surface
    FiberConfiguration config;
};

HeightContext make_k3_height_context(const FiberConfiguration& config);

// A section described by its intersection numbers only: P.O and, per
// reducible assignment, the local correction term chosen from the fiber's
// contribution set. contributions[i] belongs to assignment i (reducible
// assignments only; irreducible assignments must carry 0).
struct SectionData {
    std::int64_t intersection_with_zero = 0;
    std::vector<Rat> contributions;  // aligned with config.assignments
};

// 2*chi + 2*(P.O) - sum of contributions; throws on a contribution not in
// the fiber's value set.
Rat height(const HeightContext& ctx, const SectionData& s);

// Minimum height over component choices with P.O = 0; positive means the
// Mordell-Weil group is torsion free. Degree-d places charge d times the
// maximal contribution.
Rat torsion_free_bound(const HeightContext& ctx);

struct ShiodaTate {
    std::int64_t mw_rank;
    std::int64_t trivial_rank;
};

// rho = trivial rank + Mordell-Weil rank; throws when rho is smaller than
// the trivial rank.
ShiodaTate shioda_tate(const HeightContext& ctx, std::int64_t rho);

// |det MW| = det_S * torsion^2 / det_trivial; in rank 1 this is the
// height of a generator.
Rat mw_determinant(const Int& det_s_abs, const Int& det_trivial_abs, std::int64_t torsion_order);

// Search over P.O in [0, 3] and all component choices for a section of
// the exact target height.
std::optional<SectionData> find_height_realization(const HeightContext& ctx, const Rat& target);

}  // namespace k3fib
