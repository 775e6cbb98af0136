#include "k3fib/catalog.hpp"

#include "k3fib/cyclotomic.hpp"
#include "k3fib/poly_text.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace k3fib;

namespace {

const CheckResult& check_named(const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return c;
    REQUIRE_MESSAGE(false, "missing check " << name);
    throw error("unreachable");
}

}  // namespace

TEST_CASE("corpus shape") {
    const auto& entries = catalog_entries();
    CHECK(entries.size() == 21);

    std::set<std::string> ids;
    for (const auto& e : entries) {
        CHECK(ids.insert(e.id).second);
        CHECK(e.expected_rho == 22 - phi_euler(e.expected_order));
        CHECK((e.model.has_value() != e.weighted_model.has_value()));
    }
    for (const char* id : {"X19", "X17", "X13-printed", "X13-corrected", "X11", "X7", "X25",
                           "X5", "X27", "X9", "X3-printed", "X3-corrected", "W19", "W17", "W13",
                           "W11", "W7", "W5", "M3", "M9", "M27"})
        CHECK(ids.count(id) == 1);
}

TEST_CASE("published entries carry the printed data") {
    const CatalogEntry& x19 = catalog_entry("X19");
    CHECK(x19.model == WeierstrassModel{parse_poly("t^7"), parse_poly("t")});
    CHECK(*x19.automorphism == MonomialAutomorphism{19, 7, 1, 2});
    CHECK(x19.expected_order == 19);
    CHECK(x19.expected_rho == 4);
    CHECK(x19.flags.empty());

    const CatalogEntry& printed = catalog_entry("X13-printed");
    CHECK(printed.has_flag(EntryFlag::AsPrinted));
    CHECK(printed.has_flag(EntryFlag::ExpectInvarianceFailure));
    CHECK(printed.model == WeierstrassModel{parse_poly("t^5"), parse_poly("t^4")});

    const CatalogEntry& x3 = catalog_entry("X3-printed");
    CHECK(x3.has_flag(EntryFlag::ExpectConfigMismatch));
    CHECK(x3.expected_ns->name == "U+E8+E8+A2");

    CHECK(catalog_entry("X25").is_weighted());
    CHECK(*catalog_entry("X25").expected_omega == 21);

    CHECK_THROWS_AS(catalog_entry("X23"), parse_error);
}

TEST_CASE("verify X19: the full check column passes") {
    VerificationReport r = verify_entry(catalog_entry("X19"));
    CHECK(r.status() == "pass");
    for (const char* name : {"invariance", "orders", "omega", "analysis", "euler-total",
                             "configuration", "stable-pair", "trace-identity", "orbit-identity",
                             "mordell-weil"})
        CHECK(check_named(r, name).status == CheckStatus::Pass);
}

TEST_CASE("verify X9: three-power entry with base order 3") {
    VerificationReport r = verify_entry(catalog_entry("X9"));
    CHECK(r.status() == "pass");
    CHECK(check_named(r, "trace-identity").status == CheckStatus::Pass);
    CHECK(check_named(r, "trace-identity").detail.find("18") != std::string::npos);
    CHECK(check_named(r, "trivial-lattice").status == CheckStatus::Pass);
    CHECK(check_named(r, "mordell-weil").status == CheckStatus::Pass);
}

TEST_CASE("verify X13-printed: flagged, not failed") {
    VerificationReport r = verify_entry(catalog_entry("X13-printed"));
    CHECK(r.status() == "flagged");
    CHECK(check_named(r, "invariance").status == CheckStatus::ExpectedDiscrepancy);
    CHECK(check_named(r, "orders").status == CheckStatus::Skipped);
    CHECK(check_named(r, "analysis").status == CheckStatus::Pass);
    CHECK(check_named(r, "euler-total").status == CheckStatus::Pass);
    CHECK(!r.failed());
}

TEST_CASE("verify X3-printed: configuration mismatch is the documented outcome") {
    VerificationReport r = verify_entry(catalog_entry("X3-printed"));
    CHECK(r.status() == "flagged");
    CHECK(check_named(r, "invariance").status == CheckStatus::Pass);
    CHECK(check_named(r, "configuration").status == CheckStatus::ExpectedDiscrepancy);
    CHECK(check_named(r, "trivial-lattice").status == CheckStatus::ExpectedDiscrepancy);
    CHECK(check_named(r, "mordell-weil").status == CheckStatus::ExpectedDiscrepancy);
}

TEST_CASE("verify X25: weighted checks only") {
    VerificationReport r = verify_entry(catalog_entry("X25"));
    CHECK(r.status() == "pass");
    CHECK(r.checks.size() == 3);
    CHECK(check_named(r, "omega").detail.find("21") != std::string::npos);
}

TEST_CASE("full corpus: two flagged discrepancies, no failures") {
    CatalogSummary summary = verify_catalog(std::nullopt, /*parallel=*/false);
    CHECK(summary.reports.size() == 21);
    CHECK(summary.failed.empty());
    CHECK(summary.flagged == std::vector<std::string>{"X13-printed", "X3-printed"});
    CHECK(summary.ok());
    for (const auto& c : summary.cross_checks) CHECK(c.status == CheckStatus::Pass);
    CHECK(summary.cross_checks.size() == 6);
}

TEST_CASE("parallel verification agrees with serial") {
    CatalogSummary serial = verify_catalog(std::nullopt, false);
    CatalogSummary parallel = verify_catalog(std::nullopt, true);
    REQUIRE(serial.reports.size() == parallel.reports.size());
    for (std::size_t i = 0; i < serial.reports.size(); ++i) {
        CHECK(serial.reports[i].id == parallel.reports[i].id);
        CHECK(serial.reports[i].status() == parallel.reports[i].status());
    }
}

TEST_CASE("filtering") {
    CatalogSummary empty = verify_catalog(std::vector<std::string>{}, false);
    CHECK(empty.reports.empty());
    CHECK(empty.ok());

    CatalogSummary one = verify_catalog(std::vector<std::string>{"X25"}, false);
    REQUIRE(one.reports.size() == 1);
    CHECK(one.reports[0].id == "X25");

    CHECK_THROWS_AS(verify_catalog(std::vector<std::string>{"nope"}, false), parse_error);
}

TEST_CASE("prime entries sit inside the admissible pair lists") {
    for (const char* id : {"X19", "X17", "X13-corrected", "X11", "X7", "X5", "W19", "W17", "W13",
                           "W11", "W7", "W5"}) {
        VerificationReport r = verify_entry(catalog_entry(id));
        CHECK(check_named(r, "stable-pair").status == CheckStatus::Pass);
    }
}

TEST_CASE("solved generators expose the published ones as powers") {
    // The normalized order-19 model's canonical generator, squared, is the
    // published action.
    const CatalogEntry& w19 = catalog_entry("W19");
    REQUIRE(w19.automorphism.has_value());
    const MonomialAutomorphism g = *w19.automorphism;
    CHECK(orders(g).total == 19);
    MonomialAutomorphism squared{19, 2 * g.alpha, 2 * g.beta, 2 * g.gamma};
    CHECK(squared.normalized() == MonomialAutomorphism{19, 7, 1, 2});
}
