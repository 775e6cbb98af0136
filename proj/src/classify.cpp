#include "k3fib/classify.hpp"

#include <algorithm>

namespace k3fib {

StablePair make_stable_pair(FiberType a, FiberType b) {
    if (b < a) std::swap(a, b);
    return {a, b};
}

namespace {

std::vector<FiberType> allowed_stable_types(std::int64_t p, bool include_istar0) {
    std::vector<FiberType> types = {kFiberII, kFiberIII, kFiberIV, kFiberIIStar, kFiberIIIStar,
                                    kFiberIVStar};
    for (int n = 0; n <= 24; n += static_cast<int>(p)) {
        types.push_back(fiber_In(n));
        if (n > 0 || include_istar0) types.push_back(fiber_InStar(n));
    }
    return types;
}

}  // namespace

std::vector<StablePair> enumerate_stable_pairs(std::int64_t p, bool include_istar0) {
    if (!is_prime_i64(p) || p < 5) throw error("enumerate_stable_pairs requires a prime p >= 5");
    const std::int64_t target = 24 - p;
    const auto types = allowed_stable_types(p, include_istar0);
    std::vector<StablePair> pairs;
    for (std::size_t i = 0; i < types.size(); ++i)
        for (std::size_t j = i; j < types.size(); ++j)
            if (euler_number(types[i]) + euler_number(types[j]) == target)
                pairs.push_back(make_stable_pair(types[i], types[j]));
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

std::vector<std::pair<std::int64_t, std::int64_t>> orbit_count_solutions(std::int64_t p,
                                                                          std::int64_t chi_pair) {
    if (p < 1) throw error("orbit_count_solutions requires p >= 1");
    std::vector<std::pair<std::int64_t, std::int64_t>> solutions;
    const std::int64_t residual = 24 - chi_pair;
    if (residual < 0) return solutions;
    for (std::int64_t c2 = 0; 2 * p * c2 <= residual; ++c2) {
        std::int64_t rest = residual - 2 * p * c2;
        if (rest % p == 0) solutions.emplace_back(rest / p, c2);
    }
    std::sort(solutions.begin(), solutions.end());
    return solutions;
}

IntLattice candidate_ns_lattice(std::int64_t n) {
    switch (n) {
        case 27: return parse_lattice_spec("U+A2");
        case 9: return parse_lattice_spec("U+E8+E6");
        case 3: return parse_lattice_spec("U+E8+E8+A2");
        default: throw error("candidate lattice defined only for orders 3, 9, 27");
    }
}

RankCheck corollary_rank_check(std::int64_t p) {
    if (!is_prime_i64(p)) throw error("corollary_rank_check requires a prime");
    if (p - 1 > 21) throw error("phi(p) exceeds the K3 bound");
    const std::int64_t rank_s = 22 - (p - 1);
    return {rank_s, rank_s < p - 1};
}

}  // namespace k3fib
