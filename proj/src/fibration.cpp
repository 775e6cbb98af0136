#include "k3fib/fibration.hpp"

#include "k3fib/poly_text.hpp"

#include <algorithm>

namespace k3fib {

Place Place::finite(QPoly f) {
    if (f.degree() < 1) throw error("finite place must be non-constant");
    if (!f.is_monic()) throw error("finite place must be monic");
    if (gcd_poly(f, f.derivative()).degree() != 0) throw error("finite place must be squarefree");
    return Place{false, std::move(f)};
}

std::string Place::to_string() const {
    return at_infinity ? "inf" : poly_to_string(poly);
}

std::int64_t FiberConfiguration::euler_total() const {
    std::int64_t total = 0;
    for (const auto& fa : assignments) total += fa.place.degree() * euler_number(fa.fiber);
    return total;
}

const FiberAssignment& FiberConfiguration::at_infinity() const {
    for (const auto& fa : assignments)
        if (fa.place.at_infinity) return fa;
    throw error("configuration has no fiber at infinity");
}

const FiberAssignment* FiberConfiguration::at_origin() const {
    for (const auto& fa : assignments)
        if (fa.place.is_origin()) return &fa;
    return nullptr;
}

QPoly discriminant(const WeierstrassModel& m) {
    QPoly d = Rat(4) * m.a.pow(3) + Rat(27) * m.b.pow(2);
    if (d.is_zero()) throw error("discriminant vanishes identically (cuspidal generic fiber)");
    return d;
}

namespace {

std::vector<QPoly> squarefree_layers(const QPoly& p) {
    std::vector<QPoly> layers;
    if (p.is_zero() || p.degree() < 1) return layers;
    for (const auto& [factor, mult] : squarefree_decomposition(p).factors) layers.push_back(factor);
    return layers;
}

// Shared refinement basis for a, b and the discriminant. The variable t is
// always a basis member, so the origin never hides inside a larger place.
std::vector<QPoly> place_basis(const WeierstrassModel& m, const QPoly& disc) {
    std::vector<QPoly> inputs = {QPoly::variable()};
    for (const QPoly* p : {&m.a, &m.b, &disc})
        for (QPoly& layer : squarefree_layers(*p)) inputs.push_back(std::move(layer));
    return gcd_free_basis(inputs);
}

}  // namespace

WeierstrassModel minimalize(const WeierstrassModel& m) {
    QPoly disc = discriminant(m);  // validates the model
    WeierstrassModel r = m;
    bool reduced = true;
    while (reduced) {
        reduced = false;
        std::vector<QPoly> inputs;
        for (const QPoly* p : {&r.a, &r.b})
            for (QPoly& layer : squarefree_layers(*p)) inputs.push_back(std::move(layer));
        for (const QPoly& f : gcd_free_basis(inputs)) {
            if (valuation_at(r.a, f) >= 4 && valuation_at(r.b, f) >= 6) {
                QPoly f4 = f.pow(4), f6 = f.pow(6);
                if (!r.a.is_zero()) r.a = exact_div(r.a, f4);
                if (!r.b.is_zero()) r.b = exact_div(r.b, f6);
                reduced = true;
                break;
            }
        }
    }
    return r;
}

std::vector<Place> decompose_places(const WeierstrassModel& m) {
    QPoly disc = discriminant(m);
    std::vector<Place> places;
    for (const QPoly& f : place_basis(m, disc)) {
        ExtVal vd = valuation_at(disc, f);
        if (vd >= 1) places.push_back(Place::finite(f));
    }
    places.push_back(Place::infinity());
    return places;
}

namespace {

struct ValuationTriple {
    ExtVal va, vb;
    std::int64_t vd;
};

ValuationTriple valuations_at_place(const WeierstrassModel& m, const QPoly& disc, const Place& place) {
    if (place.at_infinity) {
        ExtVal va = m.a.is_zero() ? ExtVal::infinity() : ExtVal::of(kK3WeightA - m.a.degree());
        ExtVal vb = m.b.is_zero() ? ExtVal::infinity() : ExtVal::of(kK3WeightB - m.b.degree());
        return {va, vb, kK3WeightDisc - disc.degree()};
    }
    ExtVal vd = valuation_at(disc, place.poly);
    return {valuation_at(m.a, place.poly), valuation_at(m.b, place.poly), vd.value()};
}

}  // namespace

FiberConfiguration analyze(const WeierstrassModel& m) {
    QPoly disc = discriminant(m);
    if (m.a.degree() > kK3WeightA || m.b.degree() > kK3WeightB)
        throw error("degree bounds exceeded: need deg a <= 8 and deg b <= 12");
    // A model that also fits the weight-(4, 6) chart is not a K3 surface.
    if (m.a.degree() <= 4 && m.b.degree() <= 6) {
        if (m.a.degree() <= 0 && m.b.degree() <= 0)
            throw error("constant coefficients: no elliptic K3 (Euler characteristic 0)");
        throw error("rational elliptic surface, not K3 (Euler characteristic 12)");
    }

    FiberConfiguration config;
    for (const Place& place : decompose_places(m)) {
        if (place.at_infinity) continue;
        auto [va, vb, vd] = valuations_at_place(m, disc, place);
        config.assignments.push_back({place, classify_valuations(va, vb, vd), va, vb, vd});
    }
    Place inf = Place::infinity();
    auto [va, vb, vd] = valuations_at_place(m, disc, inf);
    config.assignments.push_back({inf, classify_valuations(va, vb, vd), va, vb, vd});

    if (config.euler_total() != 24)
        throw inconsistent_error("Euler total " + std::to_string(config.euler_total()) +
                                 " != 24 for a K3 configuration");
    return config;
}

IntLattice trivial_lattice(const FiberConfiguration& config) {
    std::vector<IntLattice> parts = {named_lattice(LatticeName::U)};
    for (const auto& fa : config.assignments) {
        auto root = fiber_root_lattice(fa.fiber);
        if (!root) continue;
        for (int i = 0; i < fa.place.degree(); ++i) parts.push_back(*root);
    }
    return direct_sum(parts);
}

namespace {

// Proportionality factor b = lambda * a, if any.
std::optional<Rat> proportionality(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    if (a.degree() != b.degree()) return std::nullopt;
    Rat lambda = b.leading() / a.leading();
    if (a * lambda == b) return lambda;
    return std::nullopt;
}

}  // namespace

bool twist_equivalent(const WeierstrassModel& m1, const WeierstrassModel& m2) {
    if (m1.a.is_zero() != m2.a.is_zero()) return false;
    if (m1.b.is_zero() != m2.b.is_zero()) return false;
    if (m1.a.is_zero()) return proportionality(m1.b, m2.b).has_value();
    if (m1.b.is_zero()) return proportionality(m1.a, m2.a).has_value();
    auto la = proportionality(m1.a, m2.a);
    auto lb = proportionality(m1.b, m2.b);
    if (!la || !lb) return false;
    return *la * *la * *la == *lb * *lb;
}

WeierstrassModel base_scale(const WeierstrassModel& m, const Rat& c) {
    if (c == 0) throw error("base scaling by zero");
    return {m.a.scale_argument(c), m.b.scale_argument(c)};
}

WeierstrassModel base_invert(const WeierstrassModel& m) {
    if (m.a.degree() > kK3WeightA || m.b.degree() > kK3WeightB)
        throw error("degree bounds exceeded: need deg a <= 8 and deg b <= 12");
    WeierstrassModel flipped{reverse_at_infinity(m.a, kK3WeightA),
                             reverse_at_infinity(m.b, kK3WeightB)};
    return minimalize(flipped);
}

ConfigSummary ConfigSummary::swapped() const {
    ConfigSummary s = *this;
    std::swap(s.at_zero, s.at_inf);
    return s;
}

ConfigSummary summarize(const FiberConfiguration& config) {
    ConfigSummary s;
    s.at_inf = config.at_infinity().fiber;
    for (const auto& fa : config.assignments) {
        if (fa.place.at_infinity) continue;
        if (fa.place.is_origin()) s.at_zero = fa.fiber;
        else s.others.emplace_back(fa.fiber, fa.place.degree());
    }
    std::sort(s.others.begin(), s.others.end());
    return s;
}

bool same_geometric_configuration(const ConfigSummary& a, const ConfigSummary& b) {
    if (a.at_zero != b.at_zero || a.at_inf != b.at_inf) return false;
    auto expand = [](const ConfigSummary& s) {
        std::vector<FiberType> points;
        for (const auto& [fiber, degree] : s.others)
            for (int i = 0; i < degree; ++i) points.push_back(fiber);
        std::sort(points.begin(), points.end());
        return points;
    };
    return expand(a) == expand(b);
}

MonomialSearch reconstruct_monomial_models(const ConfigSummary& target) {
    MonomialSearch found;
    for (int m = 0; m <= kK3WeightA; ++m)
        for (int n = 0; n <= kK3WeightB; ++n) {
            if (m >= 4 && n >= 6) continue;  // non-minimal at the origin
            WeierstrassModel model{QPoly::monomial(Rat(1), m), QPoly::monomial(Rat(1), n)};
            FiberConfiguration config;
            try {
                config = analyze(model);
            } catch (const error&) {
                continue;
            }
            ConfigSummary s = summarize(config);
            if (s == target) found.exact.emplace_back(m, n);
            else if (s == target.swapped()) found.swapped.emplace_back(m, n);
        }
    return found;
}

}  // namespace k3fib
