#include "k3fib/cli.hpp"

#include "k3fib/classify.hpp"
#include "k3fib/cyclotomic.hpp"
#include "k3fib/poly_text.hpp"
#include "k3fib/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace k3fib {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> values;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) throw parse_error("empty entry in list '" + text + "'");
        values.push_back(std::stoll(token));
    }
    if (values.empty()) throw parse_error("empty list");
    return values;
}

int run_analyze(const std::string& a, const std::string& b, bool as_json, std::ostream& out) {
    AnalysisReport report;
    try {
        report = analyze_report({parse_poly(a), parse_poly(b)});
    } catch (const parse_error&) {
        throw;
    } catch (const error& err) {
        if (as_json) out << dump(json{{"error", err.what()}});
        else out << "error: " << err.what() << "\n";
        return kExitVerificationFailure;
    }
    if (as_json) {
        out << dump(to_json(report));
        return kExitOk;
    }
    out << "model:         y^2 = x^3 + (" << poly_to_string(report.input.a) << ")x + ("
        << poly_to_string(report.input.b) << ")\n";
    out << "minimal model: y^2 = x^3 + (" << poly_to_string(report.minimal.a) << ")x + ("
        << poly_to_string(report.minimal.b) << ")\n";
    out << "places:\n";
    for (const auto& fa : report.config.assignments) {
        out << "  " << fa.place.to_string() << "  (degree " << fa.place.degree() << ", va "
            << fa.va.to_string() << ", vb " << fa.vb.to_string() << ", vd " << fa.vd << "): "
            << fiber_type_name(fa.fiber) << ", euler " << euler_number(fa.fiber) << "\n";
    }
    out << "Euler total: " << report.config.euler_total() << ", K3: yes\n";
    out << "trivial lattice: " << report.trivial.name << " (rank " << report.trivial.rank() << ")\n";
    return kExitOk;
}

int run_autocheck_weierstrass(const std::string& a, const std::string& b,
                              const MonomialAutomorphism& g, bool as_json, std::ostream& out) {
    WeierstrassModel m{parse_poly(a), parse_poly(b)};
    json j = invariance_json(m, g);
    if (as_json) {
        out << dump(j);
    } else {
        out << "equation invariance: " << (j["valid"].get<bool>() ? "valid" : "INVALID") << "\n";
        for (const auto& f : j["failures"]) out << "  violated: " << f.get<std::string>() << "\n";
        out << "orders: total " << j["orders"]["total"] << ", base " << j["orders"]["base"] << "\n";
        out << "2-form multiplier: " << j["omega_multiplier"] << " (primitive: "
            << (j["omega_primitive"].get<bool>() ? "yes" : "no") << ")\n";
    }
    return j["valid"].get<bool>() ? kExitOk : kExitVerificationFailure;
}

int run_autocheck_weighted(const std::string& weights, const std::string& equation,
                           const std::string& exponents, std::int64_t order, bool as_json,
                           std::ostream& out) {
    std::vector<std::int64_t> w64 = parse_int_list(weights);
    std::vector<int> w(w64.begin(), w64.end());
    int degree = 0;
    for (int x : w) degree += x;
    WeightedHypersurface h =
        make_weighted_hypersurface(w, degree, parse_weighted_equation(equation, w.size()));
    WeightedAutomorphism g{order, parse_int_list(exponents)};
    json j = weighted_json(h, g);
    if (as_json) {
        out << dump(j);
    } else {
        out << "equation invariance: " << (j["valid"].get<bool>() ? "valid" : "INVALID") << "\n";
        for (const auto& f : j["failures"]) out << "  violated: " << f.get<std::string>() << "\n";
        out << "equation multiplier: " << j["equation_multiplier"] << "\n";
        out << "automorphism order: " << j["automorphism_order"] << "\n";
        out << "2-form multiplier: " << j["omega_multiplier"] << " (primitive: "
            << (j["omega_primitive"].get<bool>() ? "yes" : "no") << ")\n";
    }
    return j["valid"].get<bool>() ? kExitOk : kExitVerificationFailure;
}

int run_enumerate(std::int64_t prime, std::int64_t power3, bool as_json, std::ostream& out) {
    if (prime > 0 && (!is_prime_i64(prime) || prime < 5))
        throw parse_error("--prime expects a prime >= 5");
    if (power3 > 0 && power3 != 3 && power3 != 9 && power3 != 27)
        throw parse_error("--power-of-three expects 3, 9 or 27");
    if (prime > 0) {
        json j = enumerate_json(prime);
        if (as_json) {
            out << dump(j);
        } else {
            out << "stable fiber pairs for order " << prime << ":\n";
            for (const auto& pair : j["pairs"])
                out << "  (" << pair[0].get<std::string>() << ", " << pair[1].get<std::string>()
                    << ")\n";
            out << "orbit count solutions (c1, c2) for residual " << prime << ":";
            for (const auto& sol : j["orbit_solutions"]) out << " (" << sol[0] << ", " << sol[1] << ")";
            out << "\n";
        }
        return kExitOk;
    }
    json j = three_power_json(power3);
    if (as_json) {
        out << dump(j);
    } else {
        out << "candidate lattice for order " << power3 << ": "
            << j["candidate_lattice"]["spec"].get<std::string>() << " (rank " << j["rank"] << ")\n";
        out << "discriminant group: " << j["candidate_lattice"]["discriminant_group"].dump() << "\n";
        out << "stable Euler sum: " << j["stable_euler_sum"] << "\n";
        out << "orbit solutions by base order: " << j["orbit_solutions_by_base_order"].dump() << "\n";
    }
    return kExitOk;
}

int run_lattice(const std::string& spec, bool as_json, std::ostream& out) {
    IntLattice lattice = parse_lattice_spec(spec);
    json j = lattice_json(lattice);
    if (as_json) {
        out << dump(j);
    } else {
        out << "lattice " << j["spec"].get<std::string>() << ": rank " << j["rank"] << ", signature ("
            << j["signature"][0] << ", " << j["signature"][1] << "), det " << j["det"] << "\n";
        out << "discriminant group invariant factors: " << j["discriminant_group"].dump() << "\n";
        for (const auto& [p, profile] : j["p_elementary"].items())
            out << "  p=" << p << ": " << (profile["is_elementary"].get<bool>() ? "" : "not ")
                << "elementary, l = " << profile["ell"] << "\n";
    }
    return kExitOk;
}

int run_cyclo(std::int64_t n, std::optional<std::int64_t> k, bool as_json, std::ostream& out) {
    if (n < 1) throw parse_error("--n expects a positive order");
    if (k && *k < 0) throw parse_error("--k expects a non-negative power");
    json j = cyclo_json(n, k);
    if (as_json) {
        out << dump(j);
    } else {
        out << "phi(" << n << ") = " << j["phi"] << ", mobius = " << j["mobius"] << "\n";
        out << "cyclotomic polynomial: " << j["cyclotomic"].get<std::string>() << "\n";
        if (k)
            out << "ramanujan sum c_" << n << "(" << *k << ") = " << j["ramanujan_sum"]
                << ", trace of power = " << j["trace_power"] << "\n";
        if (j.contains("fixed_discriminant"))
            for (const auto& [p, data] : j["fixed_discriminant"].items())
                out << "fixed discriminant dimension at p=" << p << ": " << data["dimension"]
                    << "\n";
    }
    return kExitOk;
}

int run_mw(const std::string& config_path, std::int64_t rho, std::optional<std::int64_t> det_s,
           bool as_json, std::ostream& out) {
    std::ifstream in(config_path);
    if (!in) throw parse_error("cannot open '" + config_path + "'");
    json config_json;
    try {
        config_json = json::parse(in);
    } catch (const json::exception& err) {
        throw parse_error(std::string("bad JSON: ") + err.what());
    }
    FiberConfiguration config = config_from_json(config_json);
    std::optional<Int> det;
    if (det_s) det = Int(*det_s);
    json j = mw_json(config, rho, det);
    if (as_json) {
        out << dump(j);
    } else {
        out << "trivial lattice: " << j["trivial_lattice"]["spec"].get<std::string>() << " (rank "
            << j["trivial_rank"] << ")\n";
        out << "Mordell-Weil rank: " << j["mw_rank"] << "\n";
        out << "torsion-free bound: " << j["torsion_free_bound"].get<std::string>() << " ("
            << (j["torsion_free"].get<bool>() ? "torsion free" : "inconclusive") << ")\n";
        if (j.contains("mw_determinant"))
            out << "MW determinant: " << j["mw_determinant"].get<std::string>() << ", realized: "
                << (j["height_realized"].get<bool>() ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int run_catalog_list(bool as_json, std::ostream& out) {
    if (as_json) {
        json entries = json::array();
        for (const auto& e : catalog_entries()) {
            json flags = json::array();
            for (EntryFlag f : e.flags) flags.push_back(entry_flag_name(f));
            entries.push_back(json{{"id", e.id},
                                   {"description", e.description},
                                   {"order", e.expected_order},
                                   {"flags", flags}});
        }
        out << dump(json{{"entries", entries}});
        return kExitOk;
    }
    for (const auto& e : catalog_entries()) {
        out << e.id << "  (order " << e.expected_order << ")  " << e.description;
        for (EntryFlag f : e.flags) out << " [" << entry_flag_name(f) << "]";
        out << "\n";
    }
    return kExitOk;
}

int run_catalog_verify(const std::vector<std::string>& ids, bool parallel, bool as_json,
                       std::ostream& out) {
    std::optional<std::vector<std::string>> filter;
    if (!ids.empty()) filter = ids;
    CatalogSummary summary = verify_catalog(filter, parallel);
    if (as_json) {
        out << dump(catalog_report_json(summary));
    } else {
        for (const auto& report : summary.reports) {
            out << report.id << ": " << report.status() << "\n";
            for (const auto& c : report.checks) {
                if (c.status == CheckStatus::Pass) continue;
                out << "  " << c.name << " [" << check_status_name(c.status) << "] " << c.detail
                    << "\n";
            }
        }
        for (const auto& c : summary.cross_checks)
            out << "cross-check " << c.name << ": " << check_status_name(c.status) << " (" << c.detail
                << ")\n";
        out << summary.reports.size() << " entries verified, " << summary.flagged.size()
            << " flagged discrepancies";
        if (!summary.flagged.empty()) {
            out << " (";
            for (std::size_t i = 0; i < summary.flagged.size(); ++i)
                out << (i ? ", " : "") << summary.flagged[i];
            out << ")";
        }
        out << ", " << summary.failed.size() << " failures\n";
    }
    return summary.ok() ? kExitOk : kExitVerificationFailure;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;

    CLI::App app{"Exact-arithmetic verification toolkit for elliptic K3 fibrations"};
    app.require_subcommand(1);

    // analyze
    std::string a_text = "0", b_text = "0";
    bool analyze_json = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Classify the singular fibers of a model");
    analyze_cmd->add_option("--a", a_text, "coefficient a(t)")->required();
    analyze_cmd->add_option("--b", b_text, "coefficient b(t)")->required();
    analyze_cmd->add_flag("--json", analyze_json, "machine readable output");

    // autocheck
    std::string auto_a = "0", auto_b = "0";
    std::int64_t order = 1, alpha = 0, beta = 0, gamma = 0;
    std::string weighted, equation, exponents;
    bool auto_json = false;
    auto* auto_cmd = app.add_subcommand("autocheck", "Verify a monomial automorphism");
    auto* opt_a = auto_cmd->add_option("--a", auto_a, "coefficient a(t)");
    auto* opt_b = auto_cmd->add_option("--b", auto_b, "coefficient b(t)");
    auto_cmd->add_option("--order", order, "order of the root of unity")->required();
    auto* opt_alpha = auto_cmd->add_option("--alpha", alpha, "exponent on x");
    auto* opt_beta = auto_cmd->add_option("--beta", beta, "exponent on y");
    auto* opt_gamma = auto_cmd->add_option("--gamma", gamma, "exponent on t");
    auto* opt_weighted = auto_cmd->add_option("--weighted", weighted, "weights w0,w1,...");
    auto* opt_equation = auto_cmd->add_option("--equation", equation, "weighted equation");
    auto* opt_exponents = auto_cmd->add_option("--exponents", exponents, "exponents e0,e1,...");
    auto_cmd->add_flag("--json", auto_json, "machine readable output");
    opt_weighted->needs(opt_equation)->needs(opt_exponents);
    opt_weighted->excludes(opt_a)->excludes(opt_b)->excludes(opt_alpha)->excludes(opt_beta)->excludes(
        opt_gamma);

    // enumerate
    std::int64_t prime = 0, power3 = 0;
    bool enum_json = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "Stable fiber pairs and orbit counts");
    auto* opt_prime = enum_cmd->add_option("--prime", prime, "prime order >= 5");
    auto* opt_power = enum_cmd->add_option("--power-of-three", power3, "order 3, 9 or 27");
    enum_cmd->add_flag("--json", enum_json, "machine readable output");
    opt_prime->excludes(opt_power);

    // lattice
    std::string lattice_spec;
    bool lattice_json_flag = false;
    auto* lattice_cmd = app.add_subcommand("lattice", "Invariants of a named even lattice");
    lattice_cmd->add_option("spec", lattice_spec, "summands joined by '+', e.g. U+E8+A2")->required();
    lattice_cmd->add_flag("--json", lattice_json_flag, "machine readable output");

    // cyclo
    std::int64_t cyclo_n = 1;
    std::int64_t cyclo_k = -1;
    bool cyclo_json_flag = false;
    auto* cyclo_cmd = app.add_subcommand("cyclo", "Cyclotomic and trace data");
    cyclo_cmd->add_option("--n", cyclo_n, "order")->required();
    cyclo_cmd->add_option("--k", cyclo_k, "power for trace/Ramanujan data");
    cyclo_cmd->add_flag("--json", cyclo_json_flag, "machine readable output");

    // mw
    std::string config_path;
    std::int64_t rho = 0;
    std::int64_t det_s = 0;
    bool mw_json_flag = false;
    auto* mw_cmd = app.add_subcommand("mw", "Mordell-Weil data from an analysis report");
    mw_cmd->add_option("--config", config_path, "analysis report JSON file")->required();
    mw_cmd->add_option("--rho", rho, "Picard rank")->required();
    auto* opt_det = mw_cmd->add_option("--det-s", det_s, "|det| of the Neron-Severi lattice");
    mw_cmd->add_flag("--json", mw_json_flag, "machine readable output");

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "Built-in surface corpus");
    catalog_cmd->require_subcommand(1);
    bool list_json = false;
    auto* list_cmd = catalog_cmd->add_subcommand("list", "List catalog entries");
    list_cmd->add_flag("--json", list_json, "machine readable output");
    std::vector<std::string> verify_ids;
    bool verify_parallel = false, verify_json = false;
    auto* verify_cmd = catalog_cmd->add_subcommand("verify", "Verify catalog entries");
    verify_cmd->add_option("--id", verify_ids, "entry id (repeatable)");
    verify_cmd->add_flag("--parallel", verify_parallel, "verify entries concurrently");
    verify_cmd->add_flag("--json", verify_json, "machine readable output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return {kExitOk, out.str()};
    } catch (const CLI::ParseError& e) {
        out << "error: " << e.what() << "\n";
        return {kExitInputError, out.str()};
    }

    try {
        int code = kExitOk;
        if (*analyze_cmd) {
            code = run_analyze(a_text, b_text, analyze_json, out);
        } else if (*auto_cmd) {
            if (!weighted.empty()) {
                code = run_autocheck_weighted(weighted, equation, exponents, order, auto_json, out);
            } else {
                if (!*opt_a || !*opt_b)
                    throw parse_error("autocheck needs --a and --b (or the --weighted form)");
                code = run_autocheck_weierstrass(
                    auto_a, auto_b, MonomialAutomorphism{order, alpha, beta, gamma}, auto_json, out);
            }
        } else if (*enum_cmd) {
            if (prime == 0 && power3 == 0)
                throw parse_error("enumerate needs --prime or --power-of-three");
            code = run_enumerate(prime, power3, enum_json, out);
        } else if (*lattice_cmd) {
            code = run_lattice(lattice_spec, lattice_json_flag, out);
        } else if (*cyclo_cmd) {
            code = run_cyclo(cyclo_n, cyclo_k >= 0 ? std::optional<std::int64_t>(cyclo_k) : std::nullopt,
                             cyclo_json_flag, out);
        } else if (*mw_cmd) {
            code = run_mw(config_path, rho, *opt_det ? std::optional<std::int64_t>(det_s) : std::nullopt,
                          mw_json_flag, out);
        } else if (*catalog_cmd) {
            if (*list_cmd) code = run_catalog_list(list_json, out);
            else code = run_catalog_verify(verify_ids, verify_parallel, verify_json, out);
        }
        return {code, out.str()};
    } catch (const parse_error& err) {
        out << "error: " << err.what() << "\n";
        return {kExitInputError, out.str()};
    } catch (const error& err) {
        out << "error: " << err.what() << "\n";
        return {kExitVerificationFailure, out.str()};
    } catch (const std::exception& err) {
        out << "error: " << err.what() << "\n";
        return {kExitInputError, out.str()};
    }
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    CliResult result = run_cli(args);
    std::cout << result.output;
    return result.exit_code;
}

}  // namespace k3fib
