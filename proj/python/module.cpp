#include "k3fib/classify.hpp"
#include "k3fib/cli.hpp"
#include "k3fib/cyclotomic.hpp"
#include "k3fib/poly_text.hpp"
#include "k3fib/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;

namespace {

using namespace k3fib;

WeierstrassModel model_of(const std::string& a, const std::string& b) {
    return {parse_poly(a), parse_poly(b)};
}

std::string analyze_json_str(const std::string& a, const std::string& b) {
    return to_json(analyze_report(model_of(a, b))).dump();
}

std::pair<std::string, std::string> minimalize_strs(const std::string& a, const std::string& b) {
    WeierstrassModel m = minimalize(model_of(a, b));
    return {poly_to_string(m.a), poly_to_string(m.b)};
}

std::string discriminant_str(const std::string& a, const std::string& b) {
    return poly_to_string(discriminant(model_of(a, b)));
}

std::vector<std::pair<std::string, std::string>> stable_pairs(std::int64_t p) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const StablePair& pair : enumerate_stable_pairs(p))
        out.emplace_back(fiber_type_name(pair.first), fiber_type_name(pair.second));
    return out;
}

std::string lattice_json_str(const std::string& spec) {
    return lattice_json(parse_lattice_spec(spec)).dump();
}

std::string autocheck_json_str(const std::string& a, const std::string& b, std::int64_t order,
                               std::int64_t alpha, std::int64_t beta, std::int64_t gamma) {
    return invariance_json(model_of(a, b), {order, alpha, beta, gamma}).dump();
}

std::string weighted_check_json_str(const std::vector<int>& weights, const std::string& equation,
                                    const std::vector<std::int64_t>& exponents, std::int64_t order) {
    int degree = 0;
    for (int w : weights) degree += w;
    WeightedHypersurface h =
        make_weighted_hypersurface(weights, degree, parse_weighted_equation(equation, weights.size()));
    return weighted_json(h, {order, exponents}).dump();
}

std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> solve_autos(
    const std::string& a, const std::string& b, std::int64_t n) {
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> out;
    for (const auto& group : automorphism_groups(solve_automorphisms(model_of(a, b), n), n))
        out.emplace_back(group.generator.alpha, group.generator.beta, group.generator.gamma,
                         group.order);
    return out;
}

std::string mw_json_str(const std::string& report_json, std::int64_t rho,
                        std::optional<std::int64_t> det_s) {
    FiberConfiguration config = config_from_json(json::parse(report_json));
    std::optional<Int> det;
    if (det_s) det = Int(*det_s);
    return mw_json(config, rho, det).dump();
}

std::vector<std::string> catalog_ids() {
    std::vector<std::string> ids;
    for (const auto& e : catalog_entries()) ids.push_back(e.id);
    return ids;
}

std::string catalog_verify_json_str(std::optional<std::vector<std::string>> ids, bool parallel) {
    return catalog_report_json(verify_catalog(ids, parallel)).dump();
}

std::pair<int, std::string> run_cli_py(const std::vector<std::string>& args) {
    CliResult r = run_cli(args);
    return {r.exit_code, r.output};
}

}  // namespace

PYBIND11_MODULE(_k3fib, m) {
    m.doc() = "Exact-arithmetic verification toolkit for elliptic K3 fibrations";

    py::register_exception<k3fib::error>(m, "K3FibError");

    m.def("analyze_json", &analyze_json_str, py::arg("a"), py::arg("b"),
          "Fiber classification report for y^2 = x^3 + a(t)x + b(t), as JSON");
    m.def("minimalize", &minimalize_strs, py::arg("a"), py::arg("b"));
    m.def("discriminant", &discriminant_str, py::arg("a"), py::arg("b"));
    m.def("twist_equivalent",
          [](const std::string& a1, const std::string& b1, const std::string& a2,
             const std::string& b2) { return twist_equivalent(model_of(a1, b1), model_of(a2, b2)); });
    m.def("base_invert", [](const std::string& a, const std::string& b) {
        WeierstrassModel inv = base_invert(model_of(a, b));
        return std::make_pair(poly_to_string(inv.a), poly_to_string(inv.b));
    });

    m.def("enumerate_stable_pairs", &stable_pairs, py::arg("p"));
    m.def("orbit_count_solutions", &orbit_count_solutions, py::arg("p"), py::arg("chi_pair"));
    m.def("candidate_ns_lattice",
          [](std::int64_t n) { return candidate_ns_lattice(n).name; }, py::arg("n"));
    m.def("corollary_rank_check", [](std::int64_t p) {
        RankCheck c = corollary_rank_check(p);
        return std::make_pair(c.rank_s, c.forces_trivial_action);
    });

    m.def("lattice_json", &lattice_json_str, py::arg("spec"));

    m.def("cyclotomic_poly", [](std::int64_t n) { return poly_to_string(cyclotomic_poly(n)); });
    m.def("phi_euler", &phi_euler);
    m.def("mobius", &mobius);
    m.def("ramanujan_sum", &ramanujan_sum, py::arg("n"), py::arg("k"));
    m.def("trace_power", &trace_power, py::arg("n"), py::arg("k"));
    m.def("fixed_discriminant_dimension", &fixed_discriminant_dimension, py::arg("n"), py::arg("p"));
    m.def("fixed_kernel", &fixed_kernel_mod_p, py::arg("n"), py::arg("p"));

    m.def("autocheck_json", &autocheck_json_str, py::arg("a"), py::arg("b"), py::arg("order"),
          py::arg("alpha"), py::arg("beta"), py::arg("gamma"));
    m.def("weighted_check_json", &weighted_check_json_str, py::arg("weights"), py::arg("equation"),
          py::arg("exponents"), py::arg("order"));
    m.def("solve_automorphisms", &solve_autos, py::arg("a"), py::arg("b"), py::arg("n"),
          "Generators (alpha, beta, gamma, order) of the cyclic symmetry groups");
    m.def("chi_fixed_trace", &chi_fixed_trace, py::arg("rank_s"), py::arg("n"), py::arg("k"));

    m.def("mw_json", &mw_json_str, py::arg("report_json"), py::arg("rho"),
          py::arg("det_s") = std::nullopt);

    m.def("catalog_ids", &catalog_ids);
    m.def("catalog_verify_json", &catalog_verify_json_str, py::arg("ids") = std::nullopt,
          py::arg("parallel") = false);

    m.def("run_cli", &run_cli_py, py::arg("args"), "Run a CLI invocation; returns (exit_code, output)");

#ifdef K3FIB_VERSION
    m.attr("__version__") = K3FIB_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
