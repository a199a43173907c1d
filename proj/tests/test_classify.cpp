#include "brouwer/classify.hpp"

#include <random>

#include "brouwer/enumerate.hpp"
#include "doctest.h"

using namespace brouwer;

namespace {
DiagramWithWalls irreducible_structure(const char* s) {
    for (auto& dw : wall_structures(parse_diagram(s)))
        if (!dw.irreducible.empty()) return dw;
    throw Error("no irreducible structure");
}
const char* kFlatND = "r=4; cyc=1- 2- 2+ 3- 3+ 4- 4+ 1+";
const char* kCrossND = "r=4; cyc=1- 2- 2+ 3- 1+ 4- 4+ 3+";
}

TEST_CASE("deflector") {
    CHECK(deflector(horizontal_family(), horizontal_family()).empty());
    CircleFamily b{act(MCGWord{{"S", 2}}, gamma_std())};
    auto lifts = deflector(horizontal_family(), b);
    CHECK(act(lift_word(lifts), gamma_std()) == b.separator);
    CHECK(epsilon_total(lift_word(lifts)) == 0);
    for (size_t j = 1; j < lifts.size(); ++j) CHECK(lifts[j - 1].domain > lifts[j].domain);
    for (auto& l : lifts) CHECK(factor_violation(l.factor).empty());
    // S moves p below: partitions differ
    CHECK_THROWS_AS(deflector(horizontal_family(), {act(MCGWord{{"S", 1}}, gamma_std())}), Error);
    CHECK_THROWS_AS(deflector(horizontal_family(), {curve_from_slope(1, 0)}), Error);
}

TEST_CASE("couples") {
    auto flow = compute_walls(parse_diagram("r=4; cyc=1- 1+ 2- 2+ 3- 3+ 4- 4+"));
    CHECK_NOTHROW(make_couple(flow, tangle_of(MCGWord{})));
    CHECK_THROWS_AS(make_couple(flow, tangle_of(MCGWord{{"S", 2}})), Error);
    auto nd = irreducible_structure(kFlatND);
    CHECK_THROWS_AS(make_couple(nd, tangle_of(MCGWord{})), Error);
    // q above needs a crossing
    CHECK_THROWS_AS(make_couple(nd, tangle_of(MCGWord{{"S", 3}})), Error);
    CHECK_NOTHROW(make_couple(nd, tangle_of(MCGWord{{"S", 2}})));
    CHECK_THROWS_AS(make_couple(compute_walls(parse_diagram("r=2; cyc=1- 2- 2+ 1+")), tangle_of(MCGWord{})), Error);
}

TEST_CASE("invariant of recipes") {
    Recipe flow{parse_diagram("r=4; cyc=1- 1+ 2- 2+ 3- 3+ 4- 4+"), {}, {}};
    auto c = invariant_of(flow);
    CHECK(c.tangle.trivial);
    CHECK(is_determinant(c.dw));
    // a single free half twist on the two inner orbits
    Recipe b{parse_diagram(kFlatND), OrbitSet{1, 3}, {{make_factor(BraidWord{3, {}}, 1, 1, 3), 1}}};
    auto cb = invariant_of(b);
    CHECK_FALSE(crossings(cb.dw.diagram).empty());
    CHECK(adaptedness(cb.tangle) == Adaptedness::CrossingDiagram);
    // T-conjugate lift words give one couple
    Recipe b2 = b;
    b2.lifts = {{make_factor(BraidWord{3, {2, 2}}, 1, 1, 3), 1}};
    CHECK(conjugate_equal(invariant_of(b2), cb));
    Recipe bad{parse_diagram(kCrossND), {}, {}};
    CHECK_THROWS_AS(invariant_of(bad), Error);
}

TEST_CASE("realize round trip on one example of each kind") {
    for (const char* s : {kFlatND, kCrossND}) {
        auto dw = irreducible_structure(s);
        for (auto& c : generate_distinct(dw, 3)) {
            auto rec = realize(c);
            CHECK_FALSE(rec.lifts.empty());
            CHECK(crossings(rec.flow).empty());
            CHECK(conjugate_equal(invariant_of(rec), c));
            CHECK(conjugate_equal(invariant_of(parse_recipe(recipe_json(rec))), c));
            CHECK(conjugate_equal(parse_couple(couple_json(c)), c));
        }
    }
    auto det = make_couple(compute_walls(parse_diagram("r=4; cyc=1- 1+ 2- 2+ 3- 3+ 4- 4+")), tangle_of(MCGWord{}));
    auto rec = realize(det);
    CHECK(rec.lifts.empty());
    CHECK(conjugate_equal(invariant_of(rec), det));
}

TEST_CASE("generate distinct") {
    auto dw = irreducible_structure(kFlatND);
    CHECK(generate_distinct(dw, 1).size() == 1);
    auto cs = generate_distinct(irreducible_structure(kCrossND), 10);
    for (size_t i = 0; i < cs.size(); ++i) {
        CHECK(adaptedness(cs[i].tangle) == Adaptedness::CrossingDiagram);
        for (size_t j = 0; j < i; ++j) CHECK_FALSE(conjugate_equal(cs[i], cs[j]));
    }
    CHECK_THROWS_AS(generate_distinct(dw, 0), Error);
}

TEST_CASE("swap of plus ends") {
    auto d = swap_plus_ends(parse_diagram(kCrossND), {1, 3});
    CHECK(format_cyc(d) == "1- 2- 2+ 3- 3+ 4- 4+ 1+");
    CHECK_THROWS_AS(swap_plus_ends(d, {1}), Error);
}

TEST_CASE("json errors") {
    CHECK_THROWS_AS(parse_couple("{"), Error);
    CHECK_THROWS_AS(parse_couple("{\"diagram\":\"r=4; cyc=1- 1+ 2- 2+ 3- 3+ 4- 4+\"}"), Error);
    CHECK_THROWS_AS(parse_recipe("{\"lifts\":[]}"), Error);
}
