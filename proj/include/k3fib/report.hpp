#pragma once

#include "k3fib/autom.hpp"
#include "k3fib/catalog.hpp"
#include "k3fib/fibration.hpp"
#include "k3fib/lattice.hpp"
#include "k3fib/mw.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace k3fib {

using json = nlohmann::json;

// Minimalization + full fiber classification of one model.
struct AnalysisReport {
    WeierstrassModel input;
    WeierstrassModel minimal;
    FiberConfiguration config;
    IntLattice trivial;
    std::vector<std::string> flags;  // "k3", "j=0", "j=1"
};

AnalysisReport analyze_report(const WeierstrassModel& input);

json to_json(const AnalysisReport& report);
json lattice_json(const IntLattice& lattice);
json invariance_json(const WeierstrassModel& m, const MonomialAutomorphism& g);
json weighted_json(const WeightedHypersurface& h, const WeightedAutomorphism& g);
json enumerate_json(std::int64_t p);
json three_power_json(std::int64_t n);
json cyclo_json(std::int64_t n, std::optional<std::int64_t> k);
json mw_json(const FiberConfiguration& config, std::int64_t rho, std::optional<Int> det_s);
json catalog_report_json(const CatalogSummary& summary);

// Rebuilds a configuration from the "places" array of an analysis report.
FiberConfiguration config_from_json(const json& j);

}  // namespace k3fib
