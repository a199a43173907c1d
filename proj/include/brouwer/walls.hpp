#pragma once
#include <string>
#include <string_view>
#include <vector>

#include "brouwer/diagram.hpp"

namespace brouwer {

// gap g_k sits between positions k and k+1 of the cyclic word

struct Face {
    std::vector<int> gaps;    // boundary gaps it touches
    std::vector<int> arrows;  // orbits whose arrow bounds it
};

struct FaceComplex {
    int vertices = 0;
    int edges = 0;
    int faces = 0;  // outer face included
    std::vector<Face> interior;
    std::vector<int> gap_face;

    bool euler_ok() const { return vertices - edges + faces == 2; }
};

FaceComplex planarize(const Diagram& d);

struct Wall {
    int a = 0, b = 0;  // gap indices, a < b
    std::vector<int> route;

    bool operator==(const Wall& o) const { return a == o.a && b == o.b; }
    auto operator<=>(const Wall& o) const {
        if (auto c = a <=> o.a; c != 0) return c;
        return b <=> o.b;
    }
};

// every chord between two gaps leaving each arrow on one side and orbits on both
std::vector<Wall> reducing_chords(const Diagram& d);
bool chords_disjoint(const Wall& w1, const Wall& w2, const FaceComplex& fc);

enum class AreaKind { Translation, Irreducible, Empty, Unresolved };
std::string kind_name(AreaKind k);

struct StableArea {
    std::vector<int> orbits;
    AreaKind kind = AreaKind::Empty;
    std::vector<int> boundary;  // indices into walls
};

using OrbitSet = std::vector<int>;  // sorted

struct DiagramWithWalls {
    Diagram diagram;
    std::vector<OrbitSet> irreducible;  // the orbit sets declared irreducible
    std::vector<Wall> walls;
    std::vector<StableArea> areas;
    bool consistent = true;
};

// walls and areas when the sets in s are declared irreducible
DiagramWithWalls walls_for(const Diagram& d, const std::vector<OrbitSet>& s);
// every consistent declaration, the flow one (no irreducible set) first
std::vector<DiagramWithWalls> wall_structures(const Diagram& d);
// first irreducible structure if there is one, else the flow structure
DiagramWithWalls compute_walls(const Diagram& d);
bool is_obstructed(const Diagram& d);

bool is_determinant(const DiagramWithWalls& dw);
// violated conditions among 1 (ends not adjacent), 2 (two boundary walls), 3 (no alternation)
std::vector<int> irreducible_constraints(const DiagramWithWalls& dw, const StableArea& area);
bool is_translation_set(const Diagram& d, const OrbitSet& orbits);

// walls=(g2,g7;f0),(g4,g5;f1)
std::string format_walls(const DiagramWithWalls& dw);
std::vector<Wall> parse_walls(std::string_view text);
// the structure on d whose walls are exactly these
DiagramWithWalls structure_with_walls(const Diagram& d, const std::vector<Wall>& walls);
std::string area_json(const StableArea& a);

// diagram in canonical form, irreducible sets carried along (least image over symmetries)
DiagramWithWalls canonical_dw(const DiagramWithWalls& dw);
bool same_dw(const DiagramWithWalls& a, const DiagramWithWalls& b);

} // namespace brouwer
