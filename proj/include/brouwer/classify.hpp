#pragma once
#include <optional>
#include <string>
#include <vector>

#include "brouwer/tangle.hpp"
#include "brouwer/walls.hpp"

namespace brouwer {

// The two marked circles of a family are determined by the curve running
// between them, so a family is stored as that separating curve.
struct CircleFamily {
    Curve separator;
};
CircleFamily horizontal_family();

struct Lift {
    HalfTwistFactor factor;
    int domain = 1;
};

// word on 3 strands: strands 1, 2 are the marked points, 3 the bottom end
BraidWord lift_word(const std::vector<Lift>& lifts);

// a finite product of half twists avoiding the bottom end, with zero total
// linking, sending alpha to beta
std::vector<Lift> deflector(const CircleFamily& alpha, const CircleFamily& beta);

struct InvariantCouple {
    DiagramWithWalls dw;
    Tangle tangle;
};

struct Recipe {
    Diagram flow;
    std::optional<OrbitSet> area;  // needed when the flow diagram carries two irreducible structures
    std::vector<Lift> lifts;
};

// checks the couple and brings its diagram to canonical form
InvariantCouple make_couple(const DiagramWithWalls& dw, const Tangle& t);
InvariantCouple invariant_of(const Recipe& rec);
bool conjugate_equal(const InvariantCouple& a, const InvariantCouple& b);
Recipe realize(const InvariantCouple& c);
std::vector<InvariantCouple> generate_distinct(const DiagramWithWalls& dw, int k);

// diagram with the plus ends of the two orbits of z exchanged
Diagram swap_plus_ends(const Diagram& d, const OrbitSet& z);

std::string couple_json(const InvariantCouple& c);
InvariantCouple parse_couple(const std::string& json_text);
std::string recipe_json(const Recipe& r);
Recipe parse_recipe(const std::string& json_text);
std::string factor_json(const HalfTwistFactor& f);

} // namespace brouwer
