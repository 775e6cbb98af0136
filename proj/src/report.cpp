#include "k3fib/report.hpp"

#include "k3fib/classify.hpp"
#include "k3fib/cyclotomic.hpp"
#include "k3fib/poly_text.hpp"

#include <algorithm>

namespace k3fib {

namespace {

json extval_json(const ExtVal& v) {
    if (v.is_infinite()) return json("inf");
    return json(v.value());
}

ExtVal extval_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "inf") throw parse_error("bad valuation value");
        return ExtVal::infinity();
    }
    return ExtVal::of(j.get<std::int64_t>());
}

json model_json(const WeierstrassModel& m) {
    return json{{"a", poly_to_string(m.a)}, {"b", poly_to_string(m.b)}};
}

json places_json(const FiberConfiguration& config) {
    json places = json::array();
    for (const auto& fa : config.assignments) {
        places.push_back(json{{"place", fa.place.to_string()},
                              {"degree", fa.place.degree()},
                              {"va", extval_json(fa.va)},
                              {"vb", extval_json(fa.vb)},
                              {"vd", fa.vd},
                              {"fiber", fiber_type_name(fa.fiber)},
                              {"euler", euler_number(fa.fiber)}});
    }
    return places;
}

}  // namespace

AnalysisReport analyze_report(const WeierstrassModel& input) {
    AnalysisReport r;
    r.input = input;
    r.minimal = minimalize(input);
    r.config = analyze(r.minimal);
    r.trivial = trivial_lattice(r.config);
    r.flags.push_back("k3");
    if (r.minimal.a.is_zero()) r.flags.push_back("j=0");
    if (r.minimal.b.is_zero()) r.flags.push_back("j=1");
    return r;
}

json to_json(const AnalysisReport& report) {
    return json{{"model", model_json(report.input)},
                {"minimal_model", model_json(report.minimal)},
                {"places", places_json(report.config)},
                {"euler_total", report.config.euler_total()},
                {"trivial_lattice", lattice_json(report.trivial)},
                {"flags", report.flags}};
}

json lattice_json(const IntLattice& lattice) {
    auto [pos, neg] = signature(lattice);
    DiscriminantGroup group = discriminant_group(lattice);
    json factors = json::array();
    for (const Int& d : group.invariant_factors) factors.push_back(to_int64(d));
    json profiles = json::object();
    std::vector<std::int64_t> primes;
    for (const Int& d : group.invariant_factors) {
        std::int64_t v = to_int64(d);
        for (std::int64_t p = 2; p * p <= v; ++p)
            while (v % p == 0) {
                primes.push_back(p);
                v /= p;
            }
        if (v > 1) primes.push_back(v);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (std::int64_t p : primes) {
        auto [elementary, ell] = p_elementary_profile(lattice, p);
        profiles[std::to_string(p)] = json{{"is_elementary", elementary}, {"ell", ell}};
    }
    return json{{"spec", lattice.name},
                {"rank", lattice.rank()},
                {"signature", json::array({pos, neg})},
                {"det", to_int64(determinant(lattice.gram))},
                {"discriminant_group", factors},
                {"p_elementary", profiles}};
}

json invariance_json(const WeierstrassModel& m, const MonomialAutomorphism& g) {
    const InvarianceReport inv = check_weierstrass_invariance(m, g);
    const Orders ord = orders(g);
    const std::int64_t omega = omega_multiplier(g);
    json j{{"model", model_json(m)},
           {"order", g.order},
           {"alpha", g.alpha},
           {"beta", g.beta},
           {"gamma", g.gamma},
           {"valid", inv.valid},
           {"failures", inv.failures},
           {"orders", json{{"total", ord.total}, {"base", ord.base}}},
           {"omega_multiplier", omega},
           {"omega_primitive", gcd_i64(omega, g.order) == 1}};
    return j;
}

json weighted_json(const WeightedHypersurface& h, const WeightedAutomorphism& g) {
    const WeightedInvarianceReport rep = check_weighted_invariance(h, g);
    return json{{"weights", h.weights},
                {"degree", h.degree},
                {"order", g.order},
                {"exponents", g.exponents},
                {"valid", rep.valid},
                {"failures", rep.failures},
                {"equation_multiplier", rep.equation_multiplier},
                {"omega_multiplier", rep.omega_multiplier},
                {"omega_primitive", gcd_i64(rep.omega_multiplier, g.order) == 1},
                {"automorphism_order", weighted_order(g)}};
}

json enumerate_json(std::int64_t p) {
    json pairs = json::array();
    for (const StablePair& pair : enumerate_stable_pairs(p))
        pairs.push_back(json::array({fiber_type_name(pair.first), fiber_type_name(pair.second)}));
    json solutions = json::array();
    for (auto [c1, c2] : orbit_count_solutions(p, 24 - p)) solutions.push_back(json::array({c1, c2}));
    return json{{"prime", p}, {"pairs", pairs}, {"orbit_solutions", solutions}};
}

json three_power_json(std::int64_t n) {
    const IntLattice lattice = candidate_ns_lattice(n);
    json feasible = json::object();
    // Euler bookkeeping for each candidate base order: which orbit counts
    // can absorb the non-stable singular fibers.
    const std::int64_t stable_chi = n == 3 ? 24 : n == 9 ? 18 : 6;
    for (std::int64_t q : {std::int64_t(3), std::int64_t(9), std::int64_t(27)}) {
        if (q > n) continue;
        json sols = json::array();
        for (auto [c1, c2] : orbit_count_solutions(q, stable_chi))
            sols.push_back(json::array({c1, c2}));
        feasible[std::to_string(q)] = sols;
    }
    return json{{"order", n},
                {"rank", lattice.rank()},
                {"candidate_lattice", lattice_json(lattice)},
                {"stable_euler_sum", stable_chi},
                {"orbit_solutions_by_base_order", feasible}};
}

json cyclo_json(std::int64_t n, std::optional<std::int64_t> k) {
    json j{{"n", n},
           {"phi", phi_euler(n)},
           {"mobius", mobius(n)},
           {"cyclotomic", poly_to_string(cyclotomic_poly(n))}};
    if (k) {
        j["k"] = *k;
        j["ramanujan_sum"] = ramanujan_sum(n, *k);
        j["trace_power"] = trace_power(n, *k);
    }
    if (is_non_unimodular_order(n)) {
        json fixed = json::object();
        for (std::int64_t p = 2; p <= n; ++p) {
            if (!is_prime_i64(p) || n % p != 0) continue;
            json basis = json::array();
            for (const auto& v : fixed_kernel_mod_p(n, p)) basis.push_back(v);
            fixed[std::to_string(p)] =
                json{{"dimension", fixed_discriminant_dimension(n, p)}, {"kernel_basis", basis}};
        }
        j["fixed_discriminant"] = fixed;
    }
    return j;
}

json mw_json(const FiberConfiguration& config, std::int64_t rho, std::optional<Int> det_s) {
    const HeightContext ctx = make_k3_height_context(config);
    const ShiodaTate st = shioda_tate(ctx, rho);
    const IntLattice trivial = trivial_lattice(config);
    Int det_trivial = determinant(trivial.gram);
    if (det_trivial < 0) det_trivial = -det_trivial;
    json j{{"rho", rho},
           {"trivial_lattice", lattice_json(trivial)},
           {"trivial_rank", st.trivial_rank},
           {"mw_rank", st.mw_rank},
           {"torsion_free_bound", rat_to_string(torsion_free_bound(ctx))},
           {"torsion_free", torsion_free_bound(ctx) > 0}};
    if (det_s) {
        const Rat target = mw_determinant(*det_s, det_trivial, 1);
        j["mw_determinant"] = rat_to_string(target);
        auto realization = find_height_realization(ctx, target);
        j["height_realized"] = realization.has_value();
        if (realization) {
            json contr = json::array();
            for (const Rat& c : realization->contributions) contr.push_back(rat_to_string(c));
            j["realization"] =
                json{{"intersection_with_zero", realization->intersection_with_zero},
                     {"contributions", contr}};
        }
    }
    return j;
}

json catalog_report_json(const CatalogSummary& summary) {
    json entries = json::array();
    for (const auto& report : summary.reports) {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back(json{{"name", c.name},
                                  {"status", check_status_name(c.status)},
                                  {"detail", c.detail}});
        entries.push_back(json{{"id", report.id}, {"status", report.status()}, {"checks", checks}});
    }
    json cross = json::array();
    for (const auto& c : summary.cross_checks)
        cross.push_back(json{{"name", c.name},
                             {"status", check_status_name(c.status)},
                             {"detail", c.detail}});
    return json{{"entries", entries},
                {"cross_checks", cross},
                {"summary", json{{"total", summary.reports.size()},
                                 {"flagged", summary.flagged},
                                 {"failed", summary.failed},
                                 {"ok", summary.ok()}}}};
}

FiberConfiguration config_from_json(const json& j) {
    if (!j.contains("places")) throw parse_error("report has no 'places' array");
    FiberConfiguration config;
    for (const json& pj : j.at("places")) {
        FiberAssignment fa;
        const std::string place = pj.at("place").get<std::string>();
        fa.place = place == "inf" ? Place::infinity() : Place::finite(parse_poly(place).monic());
        fa.fiber = parse_fiber_type(pj.at("fiber").get<std::string>());
        fa.va = extval_from_json(pj.at("va"));
        fa.vb = extval_from_json(pj.at("vb"));
        fa.vd = pj.at("vd").get<std::int64_t>();
        if (classify_valuations(fa.va, fa.vb, fa.vd) != fa.fiber)
            throw inconsistent_error("place " + place + ": fiber type does not match valuations");
        config.assignments.push_back(std::move(fa));
    }
    return config;
}

}  // namespace k3fib
