#include "k3fib/autom.hpp"

#include "k3fib/cyclotomic.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string_view>
#include <tuple>

namespace k3fib {

namespace {

void check_congruence(std::int64_t lhs, std::int64_t rhs, std::int64_t n, const std::string& label,
                      InvarianceReport& report) {
    if (mod_i64(lhs - rhs, n) == 0) return;
    std::ostringstream msg;
    msg << label << ": " << mod_i64(lhs, n) << " != " << mod_i64(rhs, n) << " (mod " << n << ")";
    report.valid = false;
    report.failures.push_back(msg.str());
}

}  // namespace

InvarianceReport check_weierstrass_invariance(const WeierstrassModel& m, const MonomialAutomorphism& g) {
    if (g.order < 1) throw error("automorphism order must be >= 1");
    InvarianceReport report;
    const std::int64_t n = g.order;
    const std::int64_t rhs = 2 * g.beta;
    check_congruence(3 * g.alpha, rhs, n, "x^3 term: 3*alpha", report);
    for (int k = 0; k <= m.a.degree(); ++k) {
        if (m.a.coeff(k) == 0) continue;
        check_congruence(k * g.gamma + g.alpha, rhs, n,
                         "a monomial t^" + std::to_string(k) + ": " + std::to_string(k) +
                             "*gamma + alpha",
                         report);
    }
    for (int k = 0; k <= m.b.degree(); ++k) {
        if (m.b.coeff(k) == 0) continue;
        check_congruence(k * g.gamma, rhs, n,
                         "b monomial t^" + std::to_string(k) + ": " + std::to_string(k) + "*gamma",
                         report);
    }
    return report;
}

std::int64_t omega_multiplier(const MonomialAutomorphism& g) {
    return mod_i64(g.alpha + g.gamma - g.beta, g.order);
}

Orders orders(const MonomialAutomorphism& g) {
    std::int64_t d = gcd_i64(gcd_i64(g.order, g.alpha), gcd_i64(g.beta, g.gamma));
    return {g.order / d, g.order / gcd_i64(g.order, g.gamma)};
}

OrbitStructure orbit_structure(const FiberConfiguration& config, const MonomialAutomorphism& g) {
    const std::int64_t q = orders(g).base;
    OrbitStructure out;
    for (const auto& fa : config.assignments) {
        if (q == 1 || fa.place.at_infinity || fa.place.is_origin()) {
            out.stable.push_back(fa.place);
            continue;
        }
        // The place must be semi-invariant under t -> zeta^gamma t: all
        // support exponents congruent mod the base order.
        const QPoly& f = fa.place.poly;
        std::int64_t residue = -1;
        for (int k = 0; k <= f.degree(); ++k) {
            if (f.coeff(k) == 0) continue;
            std::int64_t r = mod_i64(k, q);
            if (residue < 0) residue = r;
            else if (r != residue)
                throw inconsistent_error("place " + fa.place.to_string() +
                                         " is not semi-invariant under the base rotation");
        }
        if (f.eval(Rat(0)) == 0)
            throw inconsistent_error("non-origin place vanishing at t = 0");
        const int d = fa.place.degree();
        if (d % q != 0)
            throw inconsistent_error("place " + fa.place.to_string() + " of degree " +
                                     std::to_string(d) + " does not split into orbits of size " +
                                     std::to_string(q));
        out.orbits.push_back({fa.place, q, d / q});
    }
    return out;
}

OrbitIdentity euler_orbit_identity(const FiberConfiguration& config, const MonomialAutomorphism& g) {
    const std::int64_t q = orders(g).base;
    if (q < 2) throw error("euler_orbit_identity requires a nontrivial base action");
    OrbitIdentity id;
    OrbitStructure orbits;
    try {
        orbits = orbit_structure(config, g);
    } catch (const inconsistent_error&) {
        for (const auto& fa : config.assignments)
            if (fa.place.at_infinity || fa.place.is_origin())
                id.chi_stable += euler_number(fa.fiber);
        id.residual = 24 - id.chi_stable;
        id.consistent = false;
        return id;
    }

    for (const auto& fa : config.assignments) {
        bool stable = std::find(orbits.stable.begin(), orbits.stable.end(), fa.place) !=
                      orbits.stable.end();
        if (stable) id.chi_stable += fa.place.degree() * euler_number(fa.fiber);
    }
    id.residual = 24 - id.chi_stable;
    for (const auto& orbit : orbits.orbits) {
        FiberType fiber = fiber_In(0);
        for (const auto& fa : config.assignments)
            if (fa.place == orbit.place) fiber = fa.fiber;
        if (fiber == fiber_In(1)) id.c1 += orbit.orbit_count;
        else if (fiber == kFiberII) id.c2 += orbit.orbit_count;
        else
            throw inconsistent_error("moving fiber of type " + fiber_type_name(fiber) +
                                     " (only I1 and II can move)");
    }
    id.consistent = id.residual == q * id.c1 + 2 * q * id.c2;
    return id;
}

std::int64_t chi_fixed_trace(std::int64_t rank_s, std::int64_t n, std::int64_t k) {
    if (mod_i64(k, n) == 0) throw error("chi_fixed_trace requires a nontrivial power");
    return 2 + rank_s + ramanujan_sum(n, k);
}

WeightedHypersurface make_weighted_hypersurface(std::vector<int> weights, int degree,
                                                std::vector<WeightedMonomial> monomials) {
    if (weights.empty()) throw error("weighted hypersurface needs coordinates");
    int weight_sum = 0;
    for (int w : weights) {
        if (w < 1) throw error("weights must be positive");
        weight_sum += w;
    }
    if (weight_sum != degree)
        throw error("K3 weighted hypersurface needs sum(weights) == degree");
    for (const auto& mono : monomials) {
        if (mono.exponents.size() != weights.size())
            throw error("monomial arity mismatch");
        int d = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) d += weights[i] * mono.exponents[i];
        if (d != degree)
            throw error("monomial of weighted degree " + std::to_string(d) + ", expected " +
                        std::to_string(degree));
    }
    return {std::move(weights), degree, std::move(monomials)};
}

WeightedInvarianceReport check_weighted_invariance(const WeightedHypersurface& h,
                                                   const WeightedAutomorphism& g) {
    if (g.exponents.size() != h.weights.size())
        throw error("automorphism arity mismatch");
    if (g.order < 1) throw error("automorphism order must be >= 1");
    WeightedInvarianceReport report;
    const std::int64_t n = g.order;
    std::int64_t common = -1;
    for (const auto& mono : h.monomials) {
        std::int64_t mult = 0;
        for (std::size_t i = 0; i < g.exponents.size(); ++i)
            mult += g.exponents[i] * mono.exponents[i];
        mult = mod_i64(mult, n);
        if (common < 0) {
            common = mult;
        } else if (mult != common) {
            report.valid = false;
            std::ostringstream msg;
            msg << "monomial #" << (&mono - h.monomials.data()) << ": factor " << mult
                << " != " << common << " (mod " << n << ")";
            report.failures.push_back(msg.str());
        }
    }
    report.equation_multiplier = common < 0 ? 0 : common;
    std::int64_t exp_sum = 0;
    for (std::int64_t e : g.exponents) exp_sum += e;
    report.omega_multiplier = mod_i64(exp_sum - report.equation_multiplier, n);
    return report;
}

std::int64_t weighted_order(const WeightedAutomorphism& g) {
    std::int64_t d = g.order;
    for (std::int64_t e : g.exponents) d = gcd_i64(d, e);
    return g.order / d;
}

namespace {

struct WeightedEquationParser {
    std::string_view s;
    std::size_t pos = 0;
    std::size_t arity;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw parse_error("weighted equation parse error at position " + std::to_string(pos) + ": " +
                          what);
    }

    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return std::stoll(std::string(s.substr(start, pos - start)));
    }

    WeightedMonomial term() {
        WeightedMonomial mono{std::vector<int>(arity, 0), Rat(1)};
        bool saw_factor = false;
        while (true) {
            char c = peek();
            if (c == 'x') {
                ++pos;
                std::int64_t index = integer();
                if (index < 0 || static_cast<std::size_t>(index) >= arity)
                    fail("coordinate x" + std::to_string(index) + " out of range");
                std::int64_t e = 1;
                if (peek() == '^') {
                    ++pos;
                    e = integer();
                }
                mono.exponents[static_cast<std::size_t>(index)] += static_cast<int>(e);
                saw_factor = true;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::int64_t num = integer();
                Rat value(num);
                if (peek() == '/') {
                    ++pos;
                    std::int64_t den = integer();
                    if (den == 0) fail("zero denominator");
                    value = Rat(Int(num), Int(den));
                }
                mono.coeff *= value;
                saw_factor = true;
            } else if (c == '*') {
                ++pos;
            } else {
                break;
            }
        }
        if (!saw_factor) fail("expected a monomial");
        return mono;
    }

    std::vector<WeightedMonomial> equation() {
        std::vector<WeightedMonomial> monomials;
        bool negative = false;
        if (peek() == '-') {
            ++pos;
            negative = true;
        }
        while (true) {
            WeightedMonomial mono = term();
            if (negative) mono.coeff = -mono.coeff;
            monomials.push_back(std::move(mono));
            char c = peek();
            if (c == '+') negative = false;
            else if (c == '-') negative = true;
            else break;
            ++pos;
        }
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return monomials;
    }
};

}  // namespace

std::vector<WeightedMonomial> parse_weighted_equation(const std::string& text, std::size_t arity) {
    WeightedEquationParser parser{text, 0, arity};
    return parser.equation();
}

std::vector<MonomialAutomorphism> solve_automorphisms(const WeierstrassModel& m, std::int64_t n) {
    if (n < 1) throw error("order must be >= 1");
    std::vector<MonomialAutomorphism> solutions;
    for (std::int64_t alpha = 0; alpha < n; ++alpha)
        for (std::int64_t beta = 0; beta < n; ++beta)
            for (std::int64_t gamma = 0; gamma < n; ++gamma) {
                MonomialAutomorphism g{n, alpha, beta, gamma};
                if (check_weierstrass_invariance(m, g).valid) solutions.push_back(g);
            }
    return solutions;
}

std::vector<CyclicAutomorphismGroup> automorphism_groups(
    const std::vector<MonomialAutomorphism>& solutions, std::int64_t n) {
    using Key = std::set<std::array<std::int64_t, 3>>;
    std::map<Key, std::vector<MonomialAutomorphism>> groups;
    for (const auto& g : solutions) {
        Key elements;
        for (std::int64_t k = 0; k < n; ++k)
            elements.insert({mod_i64(k * g.alpha, n), mod_i64(k * g.beta, n), mod_i64(k * g.gamma, n)});
        groups[elements].push_back(g);
    }
    std::vector<CyclicAutomorphismGroup> out;
    for (auto& [elements, members] : groups) {
        const std::int64_t group_order = static_cast<std::int64_t>(elements.size());
        std::vector<MonomialAutomorphism> generators;
        for (const auto& g : members)
            if (orders(g).total == group_order) generators.push_back(g);
        auto best = std::min_element(generators.begin(), generators.end(),
                                     [](const MonomialAutomorphism& a, const MonomialAutomorphism& b) {
                                         return std::tie(a.gamma, a.alpha, a.beta) <
                                                std::tie(b.gamma, b.alpha, b.beta);
                                     });
        out.push_back({*best, group_order});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.order != b.order) return a.order > b.order;
        return std::tie(a.generator.gamma, a.generator.alpha, a.generator.beta) <
               std::tie(b.generator.gamma, b.generator.alpha, b.generator.beta);
    });
    return out;
}

}  // namespace k3fib
