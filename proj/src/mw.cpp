#include "k3fib/mw.hpp"

#include <algorithm>

namespace k3fib {

HeightContext make_k3_height_context(const FiberConfiguration& config) {
    if (config.euler_total() != 24)
        throw error("height context requires a K3 configuration (Euler total 24)");
    return {2, config};
}

Rat height(const HeightContext& ctx, const SectionData& s) {
    if (s.intersection_with_zero < 0) throw error("P.O must be non-negative");
    if (s.contributions.size() != ctx.config.assignments.size())
        throw error("one contribution per configuration place expected");
    Rat h = Rat(2 * ctx.chi_structure) + Rat(2 * s.intersection_with_zero);
    for (std::size_t i = 0; i < s.contributions.size(); ++i) {
        const auto allowed = contribution_values(ctx.config.assignments[i].fiber);
        if (std::find(allowed.begin(), allowed.end(), s.contributions[i]) == allowed.end())
            throw error("contribution " + rat_to_string(s.contributions[i]) +
                        " is not valid for a fiber of type " +
                        fiber_type_name(ctx.config.assignments[i].fiber));
        h -= s.contributions[i];
    }
    return h;
}

Rat torsion_free_bound(const HeightContext& ctx) {
    Rat bound = Rat(2 * ctx.chi_structure);
    for (const auto& fa : ctx.config.assignments) {
        const auto values = contribution_values(fa.fiber);
        bound -= Rat(fa.place.degree()) * values.back();  // sorted ascending
    }
    return bound;
}

ShiodaTate shioda_tate(const HeightContext& ctx, std::int64_t rho) {
    const std::int64_t trivial_rank = trivial_lattice(ctx.config).rank();
    if (rho < trivial_rank)
        throw inconsistent_error("Picard rank " + std::to_string(rho) +
                                 " below the trivial-lattice rank " + std::to_string(trivial_rank));
    return {rho - trivial_rank, trivial_rank};
}

Rat mw_determinant(const Int& det_s_abs, const Int& det_trivial_abs, std::int64_t torsion_order) {
    if (det_s_abs <= 0 || det_trivial_abs <= 0 || torsion_order <= 0)
        throw error("mw_determinant requires positive inputs");
    return Rat(det_s_abs * Int(torsion_order) * Int(torsion_order), det_trivial_abs);
}

std::optional<SectionData> find_height_realization(const HeightContext& ctx, const Rat& target) {
    const auto& fas = ctx.config.assignments;
    std::vector<std::vector<Rat>> choices;
    choices.reserve(fas.size());
    for (const auto& fa : fas) choices.push_back(contribution_values(fa.fiber));

    for (std::int64_t po = 0; po <= 3; ++po) {
        SectionData s{po, std::vector<Rat>(fas.size(), Rat(0))};
        // Depth-first over the (tiny) product of contribution sets.
        std::vector<std::size_t> idx(fas.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < fas.size(); ++i) s.contributions[i] = choices[i][idx[i]];
            if (height(ctx, s) == target) return s;
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
    }
    return std::nullopt;
}

}  // namespace k3fib
