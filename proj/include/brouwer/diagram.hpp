#pragma once
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brouwer/error.hpp"

namespace brouwer {

enum class Sign { Minus = 0, Plus = 1 };

// sign major: every minus end sorts before every plus end
struct Endpoint {
    Sign sign = Sign::Minus;
    int orbit = 1;

    auto operator<=>(const Endpoint&) const = default;
};

struct Diagram {
    int r = 1;
    std::vector<Endpoint> cyc;

    bool operator==(const Diagram&) const = default;
    auto operator<=>(const Diagram& o) const { return cyc <=> o.cyc; }

    int size() const { return (int)cyc.size(); }
    int position(int orbit, Sign s) const;
};

Diagram parse_diagram(std::string_view text);  // "r=2; cyc=1- 2- 2+ 1+"
std::string format_diagram(const Diagram& d);
std::string format_cyc(const Diagram& d);
void validate(const Diagram& d);

// rotation start plus relabeling old orbit -> new orbit (index 0 unused)
struct DiagramMap {
    int shift = 0;
    std::vector<int> relabel;
};
Diagram apply_map(const Diagram& d, const DiagramMap& m);

// least word over rotations and relabelings
Diagram canonical_form(const Diagram& d);
// every map reaching the canonical word (more than one when d has symmetry)
std::vector<DiagramMap> canonical_maps(const Diagram& d);

struct Block {
    Sign sign = Sign::Minus;
    std::vector<int> orbits;
    int start = 0;  // position of the first end in cyc
};

struct AdjacencyProfile {
    std::vector<Block> blocks;
    int r_prime = 0;
};

AdjacencyProfile adjacency_profile(const Diagram& d);

std::vector<std::pair<int, int>> crossings(const Diagram& d);

// removes removable crossings: least (crossing count, canonical word) over
// all reorderings inside adjacency blocks
Diagram normalize(const Diagram& d);

} // namespace brouwer
