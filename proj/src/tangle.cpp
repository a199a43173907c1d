#include "brouwer/tangle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace brouwer {

namespace {

using C6 = std::array<long long, 6>;

// Each move flips both diagonals of the pillowcase (quad rule
// e' = max(a + c, b + d) - e) and relabels edges back onto the
// fixed triangulation.
C6 move_s(const C6& c) {
    long long m = std::max(c[TP] + c[BQ], c[PQ] + c[TB]);
    return {m - c[TQ], m - c[PB], c[TB], c[PQ], c[TP], c[BQ]};
}
C6 move_s_inv(const C6& c) {
    long long m = std::max(c[TQ] + c[PB], c[TB] + c[PQ]);
    return {c[TQ], c[PB], c[TB], c[PQ], m - c[TP], m - c[BQ]};
}
C6 move_h(const C6& c) {
    long long m = std::max(c[TP] + c[BQ], c[TQ] + c[PB]);
    return {c[TP], c[BQ], c[TQ], c[PB], m - c[TB], m - c[PQ]};
}
C6 move_h_inv(const C6& c) {
    long long m = std::max(c[TP] + c[BQ], c[TB] + c[PQ]);
    return {c[TP], c[BQ], m - c[TQ], m - c[PB], c[TB], c[PQ]};
}

Curve apply_gen(int g, const Curve& c) {
    switch (g) {
    case 1: return {move_s(c.coords)};
    case -1: return {move_s_inv(c.coords)};
    case 2: return {move_h(c.coords)};
    case -2: return {move_h_inv(c.coords)};
    }
    return c;
}

} // namespace

Curve curve_from_slope(long long p, long long q) {
    if (std::gcd(p, q) != 1) throw Error("slope must be coprime");
    long long x = std::llabs(p), y = std::llabs(q), z = std::llabs(p + q);
    return {{x, x, y, y, z, z}};
}

Curve gamma_std() { return curve_from_slope(0, 1); }

void check_curve(const Curve& c) {
    const auto& v = c.coords;
    for (long long e : v)
        if (e < 0) throw Error("negative curve coordinate");
    if (v[TP] != v[BQ] || v[TB] != v[PQ] || v[TQ] != v[PB]) throw Error("curve coordinates are not symmetric");
    long long x = v[TP], y = v[TB], z = v[TQ];
    if (!(z == x + y || x == y + z || y == x + z)) throw Error("curve coordinates break the triangle matching");
    if (std::gcd(x, y) != 1) throw Error("coordinates describe several curves");
}

std::string format_curve(const Curve& c) {
    std::string out = "(";
    for (int i = 0; i < 6; ++i) out += (i ? "," : "") + std::to_string(c.coords[i]);
    return out + ")";
}

std::string partition_name(Partition p) {
    switch (p) {
    case Partition::TP_BQ: return "tp|bq";
    case Partition::TQ_BP: return "tq|bp";
    default: return "tb|pq";
    }
}

Partition partition(const Curve& c) {
    // two punctures share a side iff the edge joining them is crossed an even number of times
    if (c.coords[TP] % 2 == 0) return Partition::TP_BQ;
    if (c.coords[TQ] % 2 == 0) return Partition::TQ_BP;
    return Partition::TB_PQ;
}

Slope slope(const Curve& c) {
    check_curve(c);
    long long x = c.coords[TP], y = c.coords[TB], z = c.coords[TQ];
    Slope s;
    s.part = partition(c);
    if (y == 0) {
        s.p = 1, s.q = 0;
    } else {
        s.q = y;
        s.p = (z == x + y) ? x : -x;
    }
    return s;
}

MCGWord parse_mcg(std::string_view text) {
    std::stringstream ss{std::string(text)};
    std::string tok;
    MCGWord w;
    while (ss >> tok) {
        auto hat = tok.find('^');
        std::string g = tok.substr(0, hat);
        if (g != "S" && g != "T" && g != "Tt" && g != "Tb") throw Error("unknown mapping class letter '" + g + "'");
        int e = 1;
        if (hat != std::string::npos) {
            try {
                size_t used = 0;
                e = std::stoi(tok.substr(hat + 1), &used);
                if (used != tok.size() - hat - 1) throw Error("bad exponent");
            } catch (const std::logic_error&) {
                throw Error("bad exponent in '" + tok + "'");
            }
        }
        if (e == 0) throw Error("zero exponent in '" + tok + "'");
        w.push_back({g, e});
    }
    return w;
}

std::string format_mcg(const MCGWord& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += " ";
        out += w[i].gen;
        if (w[i].exp != 1) out += "^" + std::to_string(w[i].exp);
    }
    return out;
}

MCGWord mcg_inverse(const MCGWord& w) {
    MCGWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
    return out;
}

BraidWord mcg_to_braid(const MCGWord& w) {
    BraidWord out{3, {}};
    for (auto& l : w) {
        BraidWord piece{3, {}};
        if (l.gen == "S")
            piece.letters = {1};
        else if (l.gen == "T")
            piece.letters = {2, 2};
        else if (l.gen == "Tt")
            piece.letters = {1, 2, 1, 2, 1, 2};
        out = concat(out, power(piece, l.exp));
    }
    return out;
}

Curve act(const MCGWord& w, const Curve& c) {
    Curve cur = c;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        int g = 0;
        if (it->gen == "S") g = 1;
        if (it->gen == "T") g = 2;
        if (!g) continue;  // end twists fix every curve
        int reps = std::abs(it->exp) * (g == 2 ? 2 : 1);
        for (int k = 0; k < reps; ++k) cur = apply_gen(it->exp > 0 ? g : -g, cur);
    }
    return cur;
}

Curve act(const BraidWord& b, const Curve& c) {
    if (b.strands != 3) throw Error("curve action needs a braid on 3 strands");
    check_word(b);
    Curve cur = c;
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) cur = apply_gen(*it, cur);
    return cur;
}

Tangle tangle_of_curve(const Curve& c) {
    check_curve(c);
    if (c.coords[TP] == 0) return {gamma_std(), true};
    const MCGWord t{{"T", 1}}, ti{{"T", -1}};
    Curve cur = c;
    // |q| along a T-orbit is convex, so walking downhill finds the minimum
    for (bool moved = true; moved;) {
        moved = false;
        for (const auto* w : {&t, &ti}) {
            Curve nx = act(*w, cur);
            if (nx.coords[TB] < cur.coords[TB]) {
                cur = nx;
                moved = true;
            }
        }
    }
    for (const auto* w : {&t, &ti}) {
        Curve nx = act(*w, cur);
        if (nx.coords[TB] == cur.coords[TB] && nx < cur) cur = nx;
    }
    return {cur, false};
}

Tangle tangle_of(const MCGWord& mu) { return tangle_of_curve(act(mu, gamma_std())); }
Tangle tangle_of(const BraidWord& mu) { return tangle_of_curve(act(mu, gamma_std())); }

bool tangle_equal(const Tangle& a, const Tangle& b) { return a == b; }

std::string adaptedness_name(Adaptedness a) {
    switch (a) {
    case Adaptedness::NonCrossingDiagram: return "NonCrossingDiagram";
    case Adaptedness::CrossingDiagram: return "CrossingDiagram";
    default: return "NotApplicable";
    }
}

Adaptedness adaptedness(const Tangle& t) {
    if (t.trivial) return Adaptedness::NotApplicable;
    switch (partition(t.rep)) {
    case Partition::TP_BQ: return Adaptedness::NonCrossingDiagram;
    case Partition::TQ_BP: return Adaptedness::CrossingDiagram;
    default: throw Error("tangle curve does not separate the marked points");
    }
}

std::string format_tangle(const Tangle& t) {
    if (t.trivial) return "tangle=trivial";
    Slope s = slope(t.rep);
    // print with positive numerator
    long long p = s.p, q = s.q;
    if (p < 0) p = -p, q = -q;
    return "tangle=" + std::to_string(p) + "/" + std::to_string(q) + "@" + partition_name(s.part);
}

Tangle parse_tangle(std::string_view text) {
    std::string s(text);
    if (s.rfind("tangle=", 0) == 0) s = s.substr(7);
    if (s == "trivial") return {gamma_std(), true};
    auto slash = s.find('/'), at = s.find('@');
    if (slash == std::string::npos || at == std::string::npos || at < slash) throw Error("tangle must look like p/q@tp|bq");
    long long p, q;
    try {
        p = std::stoll(s.substr(0, slash));
        q = std::stoll(s.substr(slash + 1, at - slash - 1));
    } catch (const std::logic_error&) {
        throw Error("bad tangle slope '" + s + "'");
    }
    Curve c = curve_from_slope(p, q);
    std::string part = s.substr(at + 1);
    if (part != partition_name(partition(c))) throw Error("tangle partition " + part + " does not match slope " + std::to_string(p) + "/" + std::to_string(q));
    if (partition(c) == Partition::TB_PQ) throw Error("tangle curve must separate the marked points");
    return tangle_of_curve(c);
}

} // namespace brouwer
