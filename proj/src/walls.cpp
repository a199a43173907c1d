#include "brouwer/walls.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace brouwer {

// ---- planarization ----

namespace {

struct Pt {
    double x, y;
};

struct HalfEdge {
    int from, to;
    double angle;  // direction leaving `from`
    int gap = -1;  // boundary arc index, -1 for arrow pieces
    int arrow = 0;
};

bool build_complex(const Diagram& d, double wobble, FaceComplex& fc) {
    int n = d.size();
    std::vector<double> th(n);
    for (int p = 0; p < n; ++p) {
        double f = std::fmod((p + 1) * wobble, 1.0);
        th[p] = 2 * std::numbers::pi * (p + 0.4 * f) / n;
    }
    std::vector<Pt> pts;
    for (int p = 0; p < n; ++p) pts.push_back({std::cos(th[p]), std::sin(th[p])});

    // pieces along each arrow, by parameter from the minus end
    std::map<int, std::vector<std::pair<double, int>>> along;
    auto xs = crossings(d);
    for (auto [i, j] : xs) {
        Pt a = pts[d.position(i, Sign::Minus)], b = pts[d.position(i, Sign::Plus)];
        Pt c = pts[d.position(j, Sign::Minus)], e = pts[d.position(j, Sign::Plus)];
        double den = (b.x - a.x) * (e.y - c.y) - (b.y - a.y) * (e.x - c.x);
        double t = ((c.x - a.x) * (e.y - c.y) - (c.y - a.y) * (e.x - c.x)) / den;
        double u = ((c.x - a.x) * (b.y - a.y) - (c.y - a.y) * (b.x - a.x)) / den;
        int v = (int)pts.size();
        pts.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        along[i].push_back({t, v});
        along[j].push_back({u, v});
    }
    // reject embeddings with near triple points
    for (size_t v = n; v < pts.size(); ++v)
        for (size_t w = v + 1; w < pts.size(); ++w)
            if (std::hypot(pts[v].x - pts[w].x, pts[v].y - pts[w].y) < 1e-7) return false;

    std::vector<HalfEdge> hs;
    auto add = [&](int u, int v, double au, double av, int gap, int arrow) {
        hs.push_back({u, v, au, gap, arrow});
        hs.push_back({v, u, av, gap, arrow});
    };
    for (int p = 0; p < n; ++p) {
        int q = (p + 1) % n;
        add(p, q, th[p] + std::numbers::pi / 2, th[q] - std::numbers::pi / 2, p, 0);
    }
    for (int o = 1; o <= d.r; ++o) {
        auto& lst = along[o];
        std::sort(lst.begin(), lst.end());
        std::vector<int> chain{d.position(o, Sign::Minus)};
        for (auto& [t, v] : lst) chain.push_back(v);
        chain.push_back(d.position(o, Sign::Plus));
        for (size_t k = 0; k + 1 < chain.size(); ++k) {
            Pt a = pts[chain[k]], b = pts[chain[k + 1]];
            add(chain[k], chain[k + 1], std::atan2(b.y - a.y, b.x - a.x), std::atan2(a.y - b.y, a.x - b.x), -1, o);
        }
    }

    // rotation system: half edges around each vertex by angle
    int nv = (int)pts.size();
    std::vector<std::vector<int>> around(nv);
    for (int h = 0; h < (int)hs.size(); ++h) around[hs[h].from].push_back(h);
    std::vector<int> rank(hs.size());
    for (auto& lst : around) {
        auto norm = [](double a) {
            a = std::fmod(a, 2 * std::numbers::pi);
            return a < 0 ? a + 2 * std::numbers::pi : a;
        };
        std::sort(lst.begin(), lst.end(), [&](int x, int y) { return norm(hs[x].angle) < norm(hs[y].angle); });
        for (int k = 0; k < (int)lst.size(); ++k) rank[lst[k]] = k;
    }
    auto twin = [](int h) { return h ^ 1; };
    std::vector<int> face_of(hs.size(), -1);
    std::vector<std::vector<int>> faces;
    for (int h0 = 0; h0 < (int)hs.size(); ++h0) {
        if (face_of[h0] >= 0) continue;
        int id = (int)faces.size();
        faces.push_back({});
        int h = h0;
        while (face_of[h] < 0) {
            face_of[h] = id;
            faces[id].push_back(h);
            int t = twin(h);
            auto& lst = around[hs[t].from];
            h = lst[(rank[t] + lst.size() - 1) % lst.size()];
        }
    }

    fc = FaceComplex{};
    fc.vertices = nv;
    fc.edges = (int)hs.size() / 2;
    fc.faces = (int)faces.size();
    int outer = -1;
    for (int f = 0; f < (int)faces.size(); ++f) {
        bool all_gap = std::all_of(faces[f].begin(), faces[f].end(), [&](int h) { return hs[h].gap >= 0; });
        if (all_gap && (int)faces[f].size() == n) outer = f;
    }
    if (outer < 0) return false;
    // order interior faces by their least gap, faces without gaps last
    std::vector<int> order;
    for (int f = 0; f < (int)faces.size(); ++f)
        if (f != outer) order.push_back(f);
    auto least_gap = [&](int f) {
        int g = 1 << 30;
        for (int h : faces[f])
            if (hs[h].gap >= 0) g = std::min(g, hs[h].gap);
        return g;
    };
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return least_gap(x) < least_gap(y); });
    std::vector<int> id(faces.size(), -1);
    for (int k = 0; k < (int)order.size(); ++k) id[order[k]] = k;
    fc.interior.resize(order.size());
    fc.gap_face.assign(n, -1);
    for (int f : order) {
        std::set<int> gaps, arrows;
        for (int h : faces[f]) {
            if (hs[h].gap >= 0) {
                gaps.insert(hs[h].gap);
                if (fc.gap_face[hs[h].gap] >= 0) return false;
                fc.gap_face[hs[h].gap] = id[f];
            } else {
                arrows.insert(hs[h].arrow);
            }
        }
        fc.interior[id[f]] = {{gaps.begin(), gaps.end()}, {arrows.begin(), arrows.end()}};
    }
    return std::find(fc.gap_face.begin(), fc.gap_face.end(), -1) == fc.gap_face.end();
}

} // namespace

FaceComplex planarize(const Diagram& d) {
    validate(d);
    FaceComplex fc;
    // irrational wobble keeps three chords off a common point; retry if unlucky
    for (double w : {0.6180339887, 0.4142135623, 0.7320508075, 0.2360679774})
        if (build_complex(d, w, fc) && fc.euler_ok()) return fc;
    throw Error("could not planarize " + format_diagram(d));
}

// ---- chords ----

namespace {

// orbits with an end strictly on the a-side of chord (a, b): positions a+1..b
std::vector<bool> side_of(const Diagram& d, int a, int b) {
    std::vector<bool> in(d.size(), false);
    for (int p = a + 1; p <= b; ++p) in[p] = true;
    return in;
}

struct Chord {
    int a, b;
    std::vector<bool> inside;  // by orbit: on the positions a+1..b side
};

std::vector<Chord> all_chords(const Diagram& d) {
    int n = d.size();
    std::vector<Chord> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto pos_in = side_of(d, a, b);
            std::vector<int> cnt(d.r + 1, 0);
            int in_ends = 0;
            for (int p = 0; p < n; ++p)
                if (pos_in[p]) cnt[d.cyc[p].orbit]++, in_ends++;
            bool ok = in_ends > 0 && in_ends < n;
            for (int o = 1; o <= d.r && ok; ++o)
                if (cnt[o] == 1) ok = false;
            if (!ok) continue;
            Chord c{a, b, std::vector<bool>(d.r + 1, false)};
            for (int o = 1; o <= d.r; ++o) c.inside[o] = cnt[o] == 2;
            out.push_back(c);
        }
    return out;
}

bool interleave(int a, int b, int c, int e) {
    if (a == c || a == e || b == c || b == e) return false;
    return (a < c && c < b) != (a < e && e < b);
}

bool splits(const Chord& c, const OrbitSet& z) {
    bool in = false, out = false;
    for (int o : z) (c.inside[o] ? in : out) = true;
    return in && out;
}

} // namespace

std::vector<Wall> reducing_chords(const Diagram& d) {
    FaceComplex fc = planarize(d);
    std::vector<Wall> out;
    for (const auto& c : all_chords(d)) {
        if (fc.gap_face[c.a] != fc.gap_face[c.b]) throw Error("reducing chord leaves its face");
        out.push_back({c.a, c.b, {fc.gap_face[c.a]}});
    }
    return out;
}

bool chords_disjoint(const Wall& w1, const Wall& w2, const FaceComplex& fc) {
    int n = (int)fc.gap_face.size();
    for (const Wall* w : {&w1, &w2})
        if (w->a < 0 || w->b >= n || w->a >= w->b) throw Error("wall outside the face complex");
    if (w1.route != w2.route) return true;
    return !interleave(w1.a, w1.b, w2.a, w2.b);
}

std::string kind_name(AreaKind k) {
    switch (k) {
    case AreaKind::Translation: return "Translation";
    case AreaKind::Irreducible: return "Irreducible";
    case AreaKind::Empty: return "Empty";
    default: return "Unresolved";
    }
}

// ---- areas ----

namespace {

bool one_run(const std::vector<int>& positions, int n) {
    std::set<int> s(positions.begin(), positions.end());
    if ((int)s.size() == n) return true;
    int runs = 0;
    for (int p : s)
        if (!s.count((p + n - 1) % n)) ++runs;
    return runs == 1;
}

std::vector<int> ends_of(const Diagram& d, const OrbitSet& z, Sign s) {
    std::vector<int> out;
    for (int o : z) out.push_back(d.position(o, s));
    return out;
}

struct Region {
    std::set<int> orbits;
    std::set<int> walls;
};

// regions of the disk cut by the chords in ws
std::vector<Region> regions(const Diagram& d, const std::vector<Chord>& ws) {
    int n = d.size();
    if (ws.empty()) {
        Region all;
        for (int o = 1; o <= d.r; ++o) all.orbits.insert(o);
        return {all};
    }
    // circle sequence: each endpoint, then the chord ends in the gap after it,
    // outermost chord first so nested chords do not cross
    struct Item {
        bool chord;
        int idx;
    };
    std::vector<std::vector<std::pair<int, int>>> in_gap(n);
    for (int c = 0; c < (int)ws.size(); ++c) {
        in_gap[ws[c].a].push_back({(ws[c].b - ws[c].a) % n, c});
        in_gap[ws[c].b].push_back({((ws[c].a - ws[c].b) % n + n) % n, c});
    }
    std::vector<Item> seq;
    for (int p = 0; p < n; ++p) {
        seq.push_back({false, p});
        auto g = in_gap[p];
        std::sort(g.rbegin(), g.rend());
        for (auto& [dist, c] : g) seq.push_back({true, c});
    }
    std::vector<std::pair<int, int>> span(ws.size(), {-1, -1});
    std::vector<int> cidx;
    for (int j = 0; j < (int)seq.size(); ++j)
        if (seq[j].chord) {
            cidx.push_back(j);
            auto& s = span[seq[j].idx];
            (s.first < 0 ? s.first : s.second) = j;
        }
    std::map<std::vector<bool>, Region> regs;
    std::vector<std::vector<bool>> keys_in_order;
    int m = (int)seq.size();
    for (size_t t = 0; t < cidx.size(); ++t) {
        int s = cidx[t], e = cidx[(t + 1) % cidx.size()];
        std::vector<bool> key;
        for (auto& sp : span) key.push_back(sp.first <= s && s < sp.second);
        if (!regs.count(key)) keys_in_order.push_back(key);
        Region& R = regs[key];
        R.walls.insert(seq[s].idx);
        R.walls.insert(seq[e].idx);
        for (int j = (s + 1) % m; j != e; j = (j + 1) % m) R.orbits.insert(d.cyc[seq[j].idx].orbit);
    }
    std::vector<Region> out;
    for (auto& k : keys_in_order) out.push_back(regs[k]);
    return out;
}

std::vector<std::vector<int>> families(int r) {
    std::vector<OrbitSet> subs;
    for (int k = 2; k <= r; ++k) {
        std::vector<bool> pick(r, false);
        std::fill(pick.begin(), pick.begin() + k, true);
        do {
            OrbitSet s;
            for (int o = 0; o < r; ++o)
                if (pick[o]) s.push_back(o + 1);
            subs.push_back(s);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    // families of pairwise disjoint subsets, as index lists into subs
    std::vector<std::vector<int>> fams{{}};
    std::function<void(int, std::vector<int>&, unsigned)> rec = [&](int start, std::vector<int>& cur, unsigned used) {
        for (int i = start; i < (int)subs.size(); ++i) {
            unsigned mask = 0;
            for (int o : subs[i]) mask |= 1u << o;
            if (mask & used) continue;
            cur.push_back(i);
            fams.push_back(cur);
            rec(i + 1, cur, used | mask);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    rec(0, cur, 0);
    // translate back to orbit sets encoded as flat lists with -1 separators
    std::vector<std::vector<int>> out;
    for (auto& f : fams) {
        std::vector<int> flat;
        for (int i : f) {
            flat.insert(flat.end(), subs[i].begin(), subs[i].end());
            flat.push_back(-1);
        }
        out.push_back(flat);
    }
    return out;
}

std::vector<OrbitSet> unflatten(const std::vector<int>& flat) {
    std::vector<OrbitSet> out{{}};
    for (int v : flat) {
        if (v < 0)
            out.push_back({});
        else
            out.back().push_back(v);
    }
    out.pop_back();
    return out;
}

} // namespace

bool is_translation_set(const Diagram& d, const OrbitSet& z) {
    return !z.empty() && one_run(ends_of(d, z, Sign::Minus), d.size()) && one_run(ends_of(d, z, Sign::Plus), d.size());
}

DiagramWithWalls walls_for(const Diagram& d, const std::vector<OrbitSet>& s) {
    validate(d);
    FaceComplex fc = planarize(d);
    DiagramWithWalls dw;
    dw.diagram = d;
    dw.irreducible = s;
    for (auto& z : dw.irreducible) std::sort(z.begin(), z.end());
    std::sort(dw.irreducible.begin(), dw.irreducible.end());

    std::vector<Chord> reducing;
    for (auto& c : all_chords(d)) {
        bool ok = true;
        for (auto& z : dw.irreducible)
            if (splits(c, z)) ok = false;
        if (ok) reducing.push_back(c);
    }
    std::vector<Chord> ws;
    for (auto& c : reducing) {
        bool alone = true;
        for (auto& o : reducing)
            if (interleave(c.a, c.b, o.a, o.b)) alone = false;
        if (alone) ws.push_back(c);
    }
    for (auto& c : ws) dw.walls.push_back({c.a, c.b, {fc.gap_face[c.a]}});

    for (auto& R : regions(d, ws)) {
        StableArea a;
        a.orbits.assign(R.orbits.begin(), R.orbits.end());
        a.boundary.assign(R.walls.begin(), R.walls.end());
        if (a.orbits.empty()) {
            a.kind = AreaKind::Empty;
        } else if (is_translation_set(d, a.orbits)) {
            a.kind = AreaKind::Translation;
        } else {
            bool inner = false;
            for (auto& c : reducing) {
                if (!splits(c, a.orbits)) continue;
                bool free = true;
                for (auto& w : ws)
                    if (interleave(c.a, c.b, w.a, w.b)) free = false;
                if (free) inner = true;
            }
            a.kind = (a.orbits.size() >= 2 && !inner) ? AreaKind::Irreducible : AreaKind::Unresolved;
        }
        dw.areas.push_back(a);
    }

    // consistency: declared sets are exactly the irreducible areas, each passing
    // the necessary conditions, and every other orbit area is a translation
    std::vector<OrbitSet> found;
    for (auto& a : dw.areas) {
        if (a.kind == AreaKind::Empty) continue;
        bool declared = std::find(dw.irreducible.begin(), dw.irreducible.end(), a.orbits) != dw.irreducible.end();
        if (declared) {
            if (a.kind != AreaKind::Irreducible || !irreducible_constraints(dw, a).empty()) dw.consistent = false;
            found.push_back(a.orbits);
        } else if (a.kind != AreaKind::Translation) {
            dw.consistent = false;
        }
    }
    std::sort(found.begin(), found.end());
    if (found != dw.irreducible) dw.consistent = false;
    return dw;
}

std::vector<DiagramWithWalls> wall_structures(const Diagram& d) {
    std::vector<DiagramWithWalls> out;
    for (auto& flat : families(d.r)) {
        DiagramWithWalls dw = walls_for(d, unflatten(flat));
        if (dw.consistent) out.push_back(dw);
    }
    return out;
}

DiagramWithWalls compute_walls(const Diagram& d) {
    auto all = wall_structures(d);
    for (auto& dw : all)
        if (!dw.irreducible.empty()) return dw;
    if (!all.empty()) return all.front();
    return walls_for(d, {});
}

bool is_obstructed(const Diagram& d) {
    if (walls_for(d, {}).consistent) return false;
    return wall_structures(d).empty();
}

bool is_determinant(const DiagramWithWalls& dw) {
    for (auto& a : dw.areas)
        if (a.kind == AreaKind::Irreducible) return false;
    return true;
}

std::vector<int> irreducible_constraints(const DiagramWithWalls& dw, const StableArea& area) {
    const Diagram& d = dw.diagram;
    std::vector<int> bad;
    if (one_run(ends_of(d, area.orbits, Sign::Minus), d.size()) || one_run(ends_of(d, area.orbits, Sign::Plus), d.size()))
        bad.push_back(1);
    if (area.boundary.size() < 2) bad.push_back(2);
    Diagram sub{(int)area.orbits.size(), {}};
    for (auto& e : d.cyc)
        if (std::binary_search(area.orbits.begin(), area.orbits.end(), e.orbit)) sub.cyc.push_back(e);
    if (!sub.cyc.empty() && (int)adjacency_profile(sub).blocks.size() == sub.size()) bad.push_back(3);
    return bad;
}

std::string format_walls(const DiagramWithWalls& dw) {
    std::string out = "walls=";
    for (size_t i = 0; i < dw.walls.size(); ++i) {
        const auto& w = dw.walls[i];
        if (i) out += ",";
        out += "(g" + std::to_string(w.a) + ",g" + std::to_string(w.b) + ";";
        for (size_t k = 0; k < w.route.size(); ++k) out += (k ? ".f" : "f") + std::to_string(w.route[k]);
        out += ")";
    }
    return out;
}

std::vector<Wall> parse_walls(std::string_view text) {
    std::string s(text);
    if (s.rfind("walls=", 0) != 0) throw Error("walls must start with walls=");
    s = s.substr(6);
    std::vector<Wall> out;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ',') {
            ++i;
            continue;
        }
        if (s[i] != '(') throw Error("malformed walls near '" + s.substr(i) + "'");
        auto close = s.find(')', i);
        if (close == std::string::npos) throw Error("unterminated wall");
        std::string body = s.substr(i + 1, close - i - 1);
        Wall w;
        auto semi = body.find(';');
        std::string gaps = body.substr(0, semi);
        if (std::sscanf(gaps.c_str(), "g%d,g%d", &w.a, &w.b) != 2) throw Error("bad wall gaps '" + gaps + "'");
        if (semi != std::string::npos) {
            std::stringstream ss(body.substr(semi + 1));
            std::string f;
            while (std::getline(ss, f, '.')) {
                if (f.size() < 2 || f[0] != 'f') throw Error("bad face '" + f + "'");
                w.route.push_back(std::stoi(f.substr(1)));
            }
        }
        if (w.a > w.b) std::swap(w.a, w.b);
        out.push_back(w);
        i = close + 1;
    }
    return out;
}

DiagramWithWalls structure_with_walls(const Diagram& d, const std::vector<Wall>& walls) {
    auto want = walls;
    std::sort(want.begin(), want.end());
    for (auto& dw : wall_structures(d)) {
        auto have = dw.walls;
        std::sort(have.begin(), have.end());
        if (have == want) {
            for (auto& w : walls)
                for (auto& h : dw.walls)
                    if (h == w && !w.route.empty() && w.route != h.route) throw Error("wall route does not match the diagram");
            return dw;
        }
    }
    throw Error("no wall structure on " + format_diagram(d) + " has these walls");
}

std::string area_json(const StableArea& a) {
    std::string out = "{\"orbits\":[";
    for (size_t i = 0; i < a.orbits.size(); ++i) out += (i ? "," : "") + std::to_string(a.orbits[i]);
    out += "],\"kind\":\"" + kind_name(a.kind) + "\",\"boundary\":[";
    for (size_t i = 0; i < a.boundary.size(); ++i) out += (i ? "," : "") + std::to_string(a.boundary[i]);
    return out + "]}";
}

DiagramWithWalls canonical_dw(const DiagramWithWalls& dw) {
    std::vector<OrbitSet> best;
    bool have = false;
    Diagram cd = canonical_form(dw.diagram);
    for (auto& m : canonical_maps(dw.diagram)) {
        std::vector<OrbitSet> s;
        for (auto z : dw.irreducible) {
            for (int& o : z) o = m.relabel[o];
            std::sort(z.begin(), z.end());
            s.push_back(z);
        }
        std::sort(s.begin(), s.end());
        if (!have || s < best) best = s, have = true;
    }
    return walls_for(cd, best);
}

bool same_dw(const DiagramWithWalls& a, const DiagramWithWalls& b) {
    auto x = canonical_dw(a), y = canonical_dw(b);
    return x.diagram == y.diagram && x.irreducible == y.irreducible;
}

} // namespace brouwer
