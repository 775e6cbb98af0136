#include "k3fib/kodaira.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace k3fib;
using k3fib::testing::Rng;

namespace {

FiberType classify(std::int64_t va, std::int64_t vb, std::int64_t vd) {
    return classify_valuations(ExtVal::of(va), ExtVal::of(vb), vd);
}

const ExtVal kInf = ExtVal::infinity();

}  // namespace

TEST_CASE("classification of valuation triples") {
    CHECK(classify(7, 1, 2) == kFiberII);
    CHECK(classify(1, 11, 3) == kFiberIII);
    CHECK(classify_valuations(kInf, ExtVal::of(5), 10) == kFiberIIStar);
    CHECK(classify(0, 0, 1) == fiber_In(1));
    CHECK(classify(0, 0, 0) == fiber_In(0));
    CHECK(classify(5, 4, 8) == kFiberIVStar);
    CHECK(classify(3, 8, 9) == kFiberIIIStar);
    CHECK(classify(2, 2, 4) == kFiberIV);
    CHECK(classify(2, 3, 6) == fiber_InStar(0));
    CHECK(classify(2, 3, 13) == fiber_InStar(7));
    CHECK(classify_valuations(kInf, ExtVal::of(3), 6) == fiber_InStar(0));
    CHECK(classify_valuations(ExtVal::of(3), kInf, 9) == kFiberIIIStar);
    CHECK(classify(0, 5, 7) == fiber_In(7));
}

TEST_CASE("non-minimal and inconsistent triples raise") {
    CHECK_THROWS_AS(classify(4, 6, 12), non_minimal_error);
    CHECK_THROWS_AS(classify_valuations(kInf, ExtVal::of(6), 12), non_minimal_error);
    CHECK_THROWS_AS(classify_valuations(kInf, kInf, 0), non_minimal_error);
    CHECK_THROWS_AS(classify(1, 1, 5), inconsistent_error);  // pattern II but vd != 2
    CHECK_THROWS_AS(classify(2, 3, 5), inconsistent_error);  // below the I*_0 row
    CHECK_THROWS_AS(classify(3, 3, 8), inconsistent_error);
}

TEST_CASE("classification is total-or-raising on fuzzed triples, euler == vd") {
    Rng rng(3001);
    for (int iter = 0; iter < 2000; ++iter) {
        std::int64_t raw_a = rng.int_in(0, 8);
        std::int64_t raw_b = rng.int_in(0, 8);
        ExtVal va = raw_a == 8 ? kInf : ExtVal::of(raw_a);
        ExtVal vb = raw_b == 8 ? kInf : ExtVal::of(raw_b);
        std::int64_t vd = rng.int_in(0, 30);
        try {
            FiberType t = classify_valuations(va, vb, vd);
            CHECK(euler_number(t) == vd);
        } catch (const non_minimal_error&) {
            CHECK((va >= 4 && vb >= 6));
        } catch (const inconsistent_error&) {
        }
    }
}

TEST_CASE("euler numbers and component counts") {
    CHECK(euler_number(kFiberIIStar) == 10);
    CHECK(euler_number(fiber_In(0)) == 0);
    CHECK(euler_number(kFiberIVStar) == 8);
    CHECK(euler_number(kFiberII) == 2);
    CHECK(10 + 8 + 3 * 2 == 24);  // II* + IV* + three II
    CHECK(euler_number(fiber_InStar(5)) == 11);

    CHECK(component_count(kFiberIII) == 2);
    CHECK(component_count(kFiberIIStar) == 9);
    CHECK(component_count(fiber_In(3)) == 3);
    CHECK(component_count(fiber_In(0)) == 1);
    CHECK(component_count(fiber_InStar(0)) == 5);
}

TEST_CASE("fiber root lattices") {
    CHECK(fiber_root_lattice(kFiberIIStar)->name == "E8");
    CHECK(fiber_root_lattice(kFiberIV)->name == "A2");
    CHECK(!fiber_root_lattice(fiber_In(1)).has_value());
    CHECK(!fiber_root_lattice(fiber_In(0)).has_value());
    CHECK(!fiber_root_lattice(kFiberII).has_value());
    CHECK(fiber_root_lattice(fiber_In(4))->name == "A3");
    CHECK(fiber_root_lattice(fiber_InStar(0))->name == "D4");
    CHECK(fiber_root_lattice(fiber_InStar(3))->name == "D7");
    CHECK(fiber_root_lattice(kFiberIIIStar)->name == "E7");
    CHECK(fiber_root_lattice(kFiberIVStar)->name == "E6");
}

TEST_CASE("root-lattice rank is one less than the component count") {
    std::vector<FiberType> types = {kFiberIII, kFiberIV, kFiberIIStar, kFiberIIIStar, kFiberIVStar};
    for (int n = 2; n <= 24; ++n) types.push_back(fiber_In(n));
    for (int n = 0; n <= 18; ++n) types.push_back(fiber_InStar(n));
    for (const FiberType& t : types) {
        auto root = fiber_root_lattice(t);
        REQUIRE(root.has_value());
        CHECK(root->rank() == component_count(t) - 1);
    }
}

TEST_CASE("contribution values") {
    CHECK(contribution_values(kFiberIVStar) == std::vector<Rat>{Rat(0), Rat(Int(4), Int(3))});
    CHECK(contribution_values(kFiberIII) == std::vector<Rat>{Rat(0), Rat(Int(1), Int(2))});
    CHECK(contribution_values(kFiberII) == std::vector<Rat>{Rat(0)});
    CHECK(contribution_values(kFiberIIStar) == std::vector<Rat>{Rat(0)});
    CHECK(contribution_values(kFiberIV) == std::vector<Rat>{Rat(0), Rat(Int(2), Int(3))});
    CHECK(contribution_values(kFiberIIIStar) == std::vector<Rat>{Rat(0), Rat(Int(3), Int(2))});
    CHECK(contribution_values(fiber_In(1)) == std::vector<Rat>{Rat(0)});
    CHECK(contribution_values(fiber_In(4)) ==
          std::vector<Rat>{Rat(0), Rat(Int(3), Int(4)), Rat(1)});
    CHECK(contribution_values(fiber_InStar(2)) ==
          std::vector<Rat>{Rat(0), Rat(1), Rat(Int(3), Int(2))});
}

TEST_CASE("additive types keep the torsion bound positive") {
    // Max correction of any additive type is 3/2, so a pair of additive
    // stable fibers leaves 4 - ci - cj >= 7/6 > 0.
    const std::vector<FiberType> additive = {kFiberII,      kFiberIII,     kFiberIV,
                                             kFiberIIStar,  kFiberIIIStar, kFiberIVStar};
    for (const FiberType& t : additive) {
        CHECK(contribution_values(t).back() <= Rat(Int(3), Int(2)));
        CHECK(contribution_values(t).back() < 2);
    }
    for (const FiberType& a : additive)
        for (const FiberType& b : additive)
            CHECK(Rat(4) - contribution_values(a).back() - contribution_values(b).back() > 0);
    // The I_n / I_n* families do cross 2 eventually; pin the boundary.
    CHECK(contribution_values(fiber_In(7)).back() == Rat(Int(12), Int(7)));
    CHECK(contribution_values(fiber_In(8)).back() == Rat(2));
    CHECK(contribution_values(fiber_InStar(4)).back() == Rat(2));
}

TEST_CASE("stable type admissibility") {
    CHECK(stable_type_allowed(fiber_In(11), 11));
    CHECK(!stable_type_allowed(fiber_In(3), 11));
    CHECK(stable_type_allowed(fiber_InStar(0), 5));
    CHECK(stable_type_allowed(fiber_In(0), 7));
    CHECK(stable_type_allowed(kFiberIIStar, 19));
    CHECK(!stable_type_allowed(fiber_InStar(7), 5));
    CHECK_THROWS_AS(stable_type_allowed(kFiberII, 4), error);
    CHECK_THROWS_AS(stable_type_allowed(kFiberII, 3), error);
}

TEST_CASE("fiber type names round-trip") {
    const std::vector<FiberType> types = {fiber_In(0),  fiber_In(1),     fiber_In(19),
                                          fiber_InStar(0), fiber_InStar(3), kFiberII,
                                          kFiberIII,    kFiberIV,        kFiberIIStar,
                                          kFiberIIIStar, kFiberIVStar};
    for (const FiberType& t : types) CHECK(parse_fiber_type(fiber_type_name(t)) == t);
    CHECK(fiber_type_name(fiber_In(3)) == "I3");
    CHECK(fiber_type_name(fiber_InStar(3)) == "I3*");
    CHECK(fiber_type_name(kFiberIIStar) == "II*");
    CHECK_THROWS_AS(parse_fiber_type("V"), parse_error);
    CHECK_THROWS_AS(parse_fiber_type("I"), parse_error);
    CHECK_THROWS_AS(parse_fiber_type("Ix"), parse_error);
}

TEST_CASE("every table row with n <= 24 satisfies euler == vd") {
    // I_n rows.
    for (int n = 0; n <= 24; ++n) {
        FiberType t = classify(0, 0, n);
        CHECK(t == fiber_In(n));
        CHECK(euler_number(t) == n);
    }
    // Additive rows, including the a = 0 / b = 0 columns.
    struct Row {
        ExtVal va, vb;
        std::int64_t vd;
        FiberType expect;
    };
    std::vector<Row> rows = {
        {ExtVal::of(1), ExtVal::of(1), 2, kFiberII},
        {ExtVal::of(7), ExtVal::of(1), 2, kFiberII},
        {kInf, ExtVal::of(1), 2, kFiberII},
        {ExtVal::of(1), ExtVal::of(2), 3, kFiberIII},
        {ExtVal::of(1), kInf, 3, kFiberIII},
        {ExtVal::of(2), ExtVal::of(2), 4, kFiberIV},
        {kInf, ExtVal::of(2), 4, kFiberIV},
        {ExtVal::of(2), ExtVal::of(4), 6, fiber_InStar(0)},
        {ExtVal::of(3), ExtVal::of(3), 6, fiber_InStar(0)},
        {ExtVal::of(2), kInf, 6, fiber_InStar(0)},
        {ExtVal::of(3), ExtVal::of(4), 8, kFiberIVStar},
        {kInf, ExtVal::of(4), 8, kFiberIVStar},
        {ExtVal::of(3), ExtVal::of(5), 9, kFiberIIIStar},
        {ExtVal::of(3), kInf, 9, kFiberIIIStar},
        {ExtVal::of(4), ExtVal::of(5), 10, kFiberIIStar},
        {kInf, ExtVal::of(5), 10, kFiberIIStar},
    };
    for (int n = 1; n <= 18; ++n)
        rows.push_back({ExtVal::of(2), ExtVal::of(3), 6 + n, fiber_InStar(n)});
    for (const Row& row : rows) {
        FiberType t = classify_valuations(row.va, row.vb, row.vd);
        CHECK(t == row.expect);
        CHECK(euler_number(t) == row.vd);
    }
}
