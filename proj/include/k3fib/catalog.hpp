#pragma once

#include "k3fib/autom.hpp"
#include "k3fib/fibration.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace k3fib {

enum class EntryFlag { AsPrinted, Corrected, ExpectInvarianceFailure, ExpectConfigMismatch };

std::string entry_flag_name(EntryFlag f);

// One surface/automorphism pair together with everything the verifier is
// expected to reproduce. Discrepant published equations stay in the corpus
// permanently, flagged, next to their corrected twins.
struct CatalogEntry {
    std::string id;
    std::string description;

    std::optional<WeierstrassModel> model;
    std::optional<MonomialAutomorphism> automorphism;
    std::optional<WeightedHypersurface> weighted_model;
    std::optional<WeightedAutomorphism> weighted_automorphism;

    std::int64_t expected_order = 1;
    std::int64_t expected_rho = 0;  // 22 - phi(expected_order)
    std::optional<ConfigSummary> expected_config;
    std::optional<IntLattice> expected_ns;
    std::optional<std::int64_t> expected_omega;

    std::set<EntryFlag> flags;

    bool is_weighted() const { return weighted_model.has_value(); }
    bool has_flag(EntryFlag f) const { return flags.count(f) > 0; }
};

// The built-in corpus (21 entries).
const std::vector<CatalogEntry>& catalog_entries();

const CatalogEntry& catalog_entry(const std::string& id);

enum class CheckStatus { Pass, Fail, ExpectedDiscrepancy, Skipped };

std::string check_status_name(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct VerificationReport {
    std::string id;
    std::vector<CheckResult> checks;

    bool failed() const;
    bool flagged() const;
    // "pass", "flagged", or "fail"
    std::string status() const;
};

VerificationReport verify_entry(const CatalogEntry& entry);

// Relations between the published equations and their normalized twins:
// twist equivalence composed with at most one base transform, or, for the
// order-11 pair, membership of both configurations in the stable-pair
// list.
std::vector<CheckResult> catalog_cross_checks();

struct CatalogSummary {
    std::vector<VerificationReport> reports;
    std::vector<CheckResult> cross_checks;
    std::vector<std::string> flagged;
    std::vector<std::string> failed;

    bool ok() const { return failed.empty(); }
};

// ids = nullopt verifies everything (an empty list verifies nothing).
CatalogSummary verify_catalog(const std::optional<std::vector<std::string>>& ids, bool parallel);

}  // namespace k3fib
