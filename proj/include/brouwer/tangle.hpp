#pragma once
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "brouwer/braid.hpp"

namespace brouwer {

// Cylinder with two marked points seen as a sphere with four punctures:
// t (top end), p (upper marked point), q (lower marked point), b (bottom end).
// Pillowcase triangulation: square t p q b with front diagonal tq, back diagonal pb.
enum Edge { TP = 0, BQ = 1, TB = 2, PQ = 3, TQ = 4, PB = 5 };

struct Curve {
    std::array<long long, 6> coords{};  // intersection numbers with the six edges

    bool operator==(const Curve&) const = default;
    auto operator<=>(const Curve&) const = default;
};

Curve curve_from_slope(long long p, long long q);
Curve gamma_std();  // horizontal circle between p and q, slope 0/1
void check_curve(const Curve& c);
std::string format_curve(const Curve& c);

enum class Partition { TP_BQ, TQ_BP, TB_PQ };
std::string partition_name(Partition p);
Partition partition(const Curve& c);

struct Slope {
    long long p = 0, q = 1;  // q >= 0, q == 0 only for 1/0
    Partition part = Partition::TP_BQ;
    bool operator==(const Slope&) const = default;
};
Slope slope(const Curve& c);

// S half twist swapping p and q, T twist along gamma_std, Tt and Tb twists at the ends
struct MCGLetter {
    std::string gen;
    int exp = 1;
    bool operator==(const MCGLetter&) const = default;
};
using MCGWord = std::vector<MCGLetter>;

MCGWord parse_mcg(std::string_view text);  // "S^2 T^-1 Tt"
std::string format_mcg(const MCGWord& w);
MCGWord mcg_inverse(const MCGWord& w);
// sigma_1 = S, sigma_2^2 = T, Tt = full twist, Tb = identity
BraidWord mcg_to_braid(const MCGWord& w);

// left action: act(uv, c) = act(u, act(v, c)); letters apply right to left
Curve act(const MCGWord& w, const Curve& c);
// braid on 3 strands (p, q, b): sigma_1 swaps p and q, sigma_2 swaps q and b
Curve act(const BraidWord& b, const Curve& c);

struct Tangle {
    Curve rep;
    bool trivial = true;
    bool operator==(const Tangle&) const = default;
};

// T-orbit canonical form: least |q|, tie at |p| = 1 broken by lexicographic coords
Tangle tangle_of_curve(const Curve& c);
Tangle tangle_of(const MCGWord& mu);
Tangle tangle_of(const BraidWord& mu);
bool tangle_equal(const Tangle& a, const Tangle& b);

enum class Adaptedness { NonCrossingDiagram, CrossingDiagram, NotApplicable };
std::string adaptedness_name(Adaptedness a);
Adaptedness adaptedness(const Tangle& t);

// tangle=p/q@tp|bq or tangle=trivial
std::string format_tangle(const Tangle& t);
Tangle parse_tangle(std::string_view text);

} // namespace brouwer
