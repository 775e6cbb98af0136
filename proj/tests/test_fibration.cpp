#include "k3fib/fibration.hpp"

#include "k3fib/poly_text.hpp"

#include <doctest.h>

#include <algorithm>

using namespace k3fib;

namespace {

QPoly P(const std::string& s) { return parse_poly(s); }

WeierstrassModel M(const std::string& a, const std::string& b) { return {P(a), P(b)}; }

ConfigSummary S(const std::string& zero, const std::string& inf,
                std::vector<std::pair<std::string, int>> others) {
    ConfigSummary s;
    s.at_zero = parse_fiber_type(zero);
    s.at_inf = parse_fiber_type(inf);
    for (auto& [name, deg] : others) s.others.emplace_back(parse_fiber_type(name), deg);
    std::sort(s.others.begin(), s.others.end());
    return s;
}

}  // namespace

TEST_CASE("discriminant") {
    CHECK(discriminant(M("t^7", "t")) == P("4t^21+27t^2"));
    CHECK(discriminant(M("0", "t^2(t^10-1)")) == Rat(27) * P("t^4") * P("t^10-1").pow(2));
    CHECK(discriminant(M("t^5", "t^4")) == P("t^8") * P("4t^7+27"));
    CHECK_THROWS_AS(discriminant(M("0", "0")), error);
    // 4a^3 = -27b^2 with a = -3c^2, b = 2c^3.
    CHECK_THROWS_AS(discriminant(M("-3t^2", "2t^3")), error);
}

TEST_CASE("minimalize") {
    CHECK(minimalize(M("t^11", "t^7")) == M("t^7", "t"));
    CHECK(minimalize(M("t^7", "t")) == M("t^7", "t"));
    CHECK(minimalize(M("t^4", "t^6")) == M("1", "1"));
    CHECK(minimalize(M("0", "t^8(t-1)^6")) == M("0", "t^2"));

    // idempotent on every catalog-style model
    for (const char* spec : {"t^7", "t^5", "t^3"}) {
        WeierstrassModel m = minimalize(M(spec, "t"));
        CHECK(minimalize(m) == m);
    }
}

TEST_CASE("place decomposition") {
    auto places = decompose_places(M("t^7", "t"));
    REQUIRE(places.size() == 3);
    CHECK(places[0].poly == P("t"));
    CHECK(places[0].degree() == 1);
    CHECK(places[1].poly == P("t^19+27/4"));
    CHECK(places[1].degree() == 19);
    CHECK(places[2].at_infinity);

    auto places2 = decompose_places(M("0", "t^2(t^10-1)"));
    REQUIRE(places2.size() == 3);
    CHECK(places2[0].poly == P("t"));
    CHECK(places2[1].poly == P("t^10-1"));
    CHECK(places2[1].degree() == 10);

    auto trivial = decompose_places(M("1", "1"));
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].at_infinity);
}

TEST_CASE("place product reconstitutes the discriminant") {
    for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
             {"t^7", "t"}, {"t^5", "t^4"}, {"0", "t^2(t^2-1)^5"}, {"0", "t^5(t^3-1)"}}) {
        WeierstrassModel m = M(a, b);
        QPoly disc = discriminant(m);
        QPoly rebuilt{disc.leading()};
        for (const Place& place : decompose_places(m)) {
            if (place.at_infinity) continue;
            ExtVal vd = valuation_at(disc, place.poly);
            rebuilt = rebuilt * place.poly.pow(static_cast<int>(vd.value()));
        }
        CHECK(rebuilt == disc);
    }
}

TEST_CASE("analyze: normalized order-19 model") {
    FiberConfiguration config = analyze(M("t^7", "t"));
    CHECK(summarize(config) == S("II", "III", {{"I1", 19}}));
    CHECK(config.euler_total() == 24);
    const FiberAssignment* zero = config.at_origin();
    REQUIRE(zero != nullptr);
    CHECK(zero->va == 7);
    CHECK(zero->vb == 1);
    CHECK(zero->vd == 2);
    CHECK(config.at_infinity().vd == 3);
}

TEST_CASE("analyze: worked configurations") {
    CHECK(summarize(analyze(M("t^5", "t^4"))) == S("IV*", "III*", {{"I1", 7}}));
    CHECK(summarize(analyze(M("0", "t^2(t^2-1)^5"))) == S("IV", "I0", {{"II*", 2}}));
    CHECK(summarize(analyze(M("0", "t^5(t^3-1)"))) == S("II*", "IV*", {{"II", 3}}));
    CHECK(summarize(analyze(M("0", "t(t^9-1)"))) == S("II", "IV", {{"II", 9}}));
    CHECK(summarize(analyze(M("0", "t^2(t^10-1)"))) == S("IV", "I0", {{"II", 10}}));
}

TEST_CASE("analyze rejects what is not a minimal elliptic K3") {
    CHECK_THROWS_WITH_AS(analyze(M("t^3", "t^5")),
                         doctest::Contains("rational elliptic"), error);
    CHECK_THROWS_WITH_AS(analyze(M("1", "1")), doctest::Contains("Euler characteristic 0"), error);
    CHECK_THROWS_AS(analyze(M("t^4(t-1)^4", "t^6(t-1)^6")), non_minimal_error);
    CHECK_THROWS_WITH_AS(analyze(M("t^9", "t")), doctest::Contains("degree bounds"), error);
    CHECK_THROWS_WITH_AS(analyze(M("0", "t^13")), doctest::Contains("degree bounds"), error);
}

TEST_CASE("trivial lattice") {
    CHECK(trivial_lattice(analyze(M("t^7", "t"))).name == "U+A1");
    CHECK(trivial_lattice(analyze(M("t^7", "t"))).rank() == 3);

    IntLattice big = trivial_lattice(analyze(M("0", "t^2(t^2-1)^5")));
    CHECK(big.rank() == 20);
    std::vector<std::string> c = big.components;
    std::sort(c.begin(), c.end());
    CHECK(c == std::vector<std::string>{"A2", "E8", "E8", "U"});

    // Configuration with only irreducible fibers contributes nothing.
    FiberConfiguration only_i1;
    only_i1.assignments.push_back(
        {Place::finite(P("t^23-t")), fiber_In(1), ExtVal::of(0), ExtVal::of(0), 1});
    only_i1.assignments.push_back(
        {Place::infinity(), fiber_In(1), ExtVal::of(0), ExtVal::of(0), 1});
    CHECK(trivial_lattice(only_i1).name == "U");
}

TEST_CASE("twist equivalence") {
    CHECK(twist_equivalent(M("0", "7/3t^2(t^10-1)"), M("0", "t^2(t^10-1)")));
    CHECK(twist_equivalent(M("16t^7", "64t"), M("t^7", "t")));  // (x, y) -> (4x, 8y)
    CHECK(!twist_equivalent(M("t^7", "t"), M("t^7", "t^2")));
    CHECK(!twist_equivalent(M("4t^7", "4t"), M("t^7", "t")));  // 4^3 != 4^2
    CHECK(!twist_equivalent(M("0", "t"), M("t", "t")));
    CHECK(twist_equivalent(M("t^7", "0"), M("5t^7", "0")));
}

TEST_CASE("base transforms") {
    CHECK(base_invert(M("t^3", "t^8")) == M("t^5", "t^4"));
    CHECK(base_scale(M("t^7", "t"), Rat(1)) == M("t^7", "t"));
    CHECK(base_scale(M("t^2", "1"), Rat(3)) == M("9t^2", "1"));
    CHECK_THROWS_AS(base_scale(M("t", "t"), Rat(0)), error);

    for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
             {"t^7", "t"}, {"t^5", "t^4"}, {"t^3", "t^8"}, {"t^5", "t^5"}}) {
        WeierstrassModel m = M(a, b);
        CHECK(base_invert(base_invert(m)) == m);
    }

    // The fiber multiset is preserved; 0 and infinity swap under inversion.
    ConfigSummary direct = summarize(analyze(M("t^3", "t^8")));
    ConfigSummary flipped = summarize(analyze(base_invert(M("t^3", "t^8"))));
    CHECK(flipped == direct.swapped());

    // Scaling the base moves places but not types.
    ConfigSummary scaled = summarize(analyze(base_scale(M("t^7", "t"), Rat(5))));
    CHECK(scaled == summarize(analyze(M("t^7", "t"))));
}

TEST_CASE("analyze is twist-invariant") {
    CHECK(summarize(analyze(M("16t^7", "64t"))) == summarize(analyze(M("t^7", "t"))));
    CHECK(summarize(analyze(M("0", "5t^2(t^2-1)^5"))) ==
          summarize(analyze(M("0", "t^2(t^2-1)^5"))));
}

TEST_CASE("analysis respects twists and base transforms on every model") {
    const std::vector<std::pair<const char*, const char*>> models = {
        {"t^7", "t"},  {"t^7", "t^2"}, {"t^5", "t"},         {"t^5", "t^2"},
        {"t^3", "t^8"}, {"t^7", "t^5"}, {"t^5", "t^4"},       {"t^3", "t^7"},
        {"t^5", "t^5"}, {"0", "t(t^9-1)"}, {"0", "t^5(t^3-1)"}, {"0", "t^2(t^2-1)^5"},
        {"0", "t^2(t^10-1)"}};
    for (auto [a, b] : models) {
        WeierstrassModel m = M(a, b);
        ConfigSummary base = summarize(analyze(m));
        // twist by u = 3: (a, b) -> (u^4 a, u^6 b)
        WeierstrassModel twisted{m.a * Rat(81), m.b * Rat(729)};
        CHECK(twist_equivalent(m, twisted));
        CHECK(summarize(analyze(twisted)) == base);
        // base rescaling keeps the whole summary
        CHECK(summarize(analyze(base_scale(m, Rat(Int(2), Int(3))))) == base);
        // base inversion swaps the ends
        CHECK(summarize(analyze(base_invert(m))) == base.swapped());
    }
}

TEST_CASE("every assignment satisfies vd = euler") {
    for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
             {"t^7", "t"}, {"t^5", "t^4"}, {"0", "t^2(t^2-1)^5"}, {"0", "t(t^9-1)"}}) {
        for (const FiberAssignment& fa : analyze(M(a, b)).assignments)
            CHECK(fa.vd == euler_number(fa.fiber));
    }
}

TEST_CASE("monomial reconstruction finds a unique model up to orientation") {
    MonomialSearch found = reconstruct_monomial_models(S("II", "III", {{"I1", 19}}));
    CHECK(found.exact == std::vector<std::pair<int, int>>{{7, 1}});
    CHECK(found.swapped == std::vector<std::pair<int, int>>{{1, 11}});

    MonomialSearch p7 = reconstruct_monomial_models(S("IV*", "III*", {{"I1", 7}}));
    CHECK(p7.exact == std::vector<std::pair<int, int>>{{5, 4}});
    CHECK(p7.swapped == std::vector<std::pair<int, int>>{{3, 8}});
    // The swapped match is the base inversion of the exact one.
    CHECK(base_invert(M("t^5", "t^4")) == M("t^3", "t^8"));
}
