#pragma once
#include <string>
#include <vector>

#include "brouwer/walls.hpp"

namespace brouwer {

struct EnumerateOptions {
    bool include_obstructed = false;
};

// normalized canonical diagrams in lexicographic order
std::vector<Diagram> enumerate_diagrams(int r, const EnumerateOptions& opt = {});

enum class Verdict { DeterminantFlow, NonDeterminant, Unconstrained, Obstructed };
std::string verdict_name(Verdict v);

struct Classified {
    DiagramWithWalls dw;
    Verdict verdict = Verdict::DeterminantFlow;
    int structures = 0;  // consistent wall structures with an irreducible area
    bool forbidden = false;
};

Classified classify(const Diagram& d);
std::vector<Classified> classify_all(int r, const EnumerateOptions& opt = {});

// canonical diagram strings marked "forbidden"
std::vector<std::string> read_annotations(const std::string& path);

std::string report_line(const Classified& c);
std::string report_line(const Diagram& d);

} // namespace brouwer
