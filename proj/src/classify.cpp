#include "brouwer/classify.hpp"

#include <algorithm>

#include "json.hpp"

namespace brouwer {

using nlohmann::json;
using nlohmann::ordered_json;

CircleFamily horizontal_family() { return {gamma_std()}; }

BraidWord lift_word(const std::vector<Lift>& lifts) {
    BraidWord w{3, {}};
    for (auto& l : lifts) w = concat(w, l.factor.word());
    return w;
}

namespace {

long long weight(const Curve& c) {
    long long s = 0;
    for (long long v : c.coords) s += v;
    return s;
}

// word w with act(w, c) = gamma_std, by greedy descent on single letters
BraidWord descend(const Curve& c0) {
    const std::vector<std::vector<int>> moves{{1}, {-1}, {2}, {-2}};
    BraidWord w{3, {}};
    Curve c = c0;
    const Curve goal = gamma_std();
    for (int step = 0; c != goal; ++step) {
        if (step > 100000) throw Error("descent did not reach the horizontal curve");
        int pick = -1;
        Curve best = c;
        for (int m = 0; m < (int)moves.size(); ++m) {
            Curve nx = act(BraidWord{3, moves[m]}, c);
            auto key = [](const Curve& x) { return std::make_pair(weight(x), x.coords[TP]); };
            if (key(nx) < key(best)) best = nx, pick = m;
        }
        if (pick < 0) throw Error("descent stuck at " + format_curve(c));
        c = best;
        BraidWord m{3, moves[pick]};
        w = concat(m, w);
    }
    return w;
}

void check_family(const CircleFamily& f) {
    check_curve(f.separator);
    if (partition(f.separator) == Partition::TB_PQ) throw Error("family curve must have exactly one marked point on each side");
}

OrbitSet irreducible_area(const DiagramWithWalls& dw) {
    for (auto& a : dw.areas)
        if (a.kind == AreaKind::Irreducible) return a.orbits;
    throw Error("diagram has no irreducible area");
}

} // namespace

std::vector<Lift> deflector(const CircleFamily& alpha, const CircleFamily& beta) {
    check_family(alpha);
    check_family(beta);
    if (partition(alpha.separator) != partition(beta.separator))
        throw Error("families put different marked points above: " + partition_name(partition(alpha.separator)) + " vs " +
                    partition_name(partition(beta.separator)));
    BraidWord psi = descend(alpha.separator), chi = descend(beta.separator);
    // sigma_2 fixes the horizontal curve. Both halves send the marked point
    // paired with t to p, so at most one sigma_2 in the middle makes the
    // word pure, and T = sigma_2^2 there then shifts the linking by one.
    BraidWord mid{3, {}};
    if (!is_pure(concat(inverse(chi), psi))) mid.letters = {2};
    BraidWord raw = concat(concat(inverse(chi), mid), psi);
    if (!is_pure(raw)) throw Error("deflector word is not pure");
    int c = -epsilon_total(raw);
    BraidWord phi = free_reduce(concat(concat(concat(inverse(chi), mid), power(BraidWord{3, {2, 2}}, c)), psi));
    auto ff = factor_free_half_twists(phi);
    if (ff.twist != 0) throw Error("deflector kept a nonzero linking");
    std::vector<Lift> out;
    int k = (int)ff.factors.size();
    for (int j = 0; j < k; ++j) out.push_back({ff.factors[j], k - j});
    if (act(lift_word(out), alpha.separator) != beta.separator) throw Error("deflector does not transport the family");
    return out;
}

Diagram swap_plus_ends(const Diagram& d, const OrbitSet& z) {
    if (z.size() != 2) throw Error("exchange needs exactly two orbits");
    Diagram e = d;
    std::swap(e.cyc[d.position(z[0], Sign::Plus)], e.cyc[d.position(z[1], Sign::Plus)]);
    return e;
}

InvariantCouple make_couple(const DiagramWithWalls& dw0, const Tangle& t) {
    if (dw0.diagram.r != 4) throw Error("the classification only covers 4 orbits");
    if (!dw0.consistent) throw Error("inconsistent wall structure");
    DiagramWithWalls dw = canonical_dw(dw0);
    bool det = is_determinant(dw);
    if (det != t.trivial) throw Error(det ? "determinant diagram needs the trivial tangle" : "non determinant diagram needs a nontrivial tangle");
    if (!t.trivial) {
        bool crossing = !crossings(dw.diagram).empty();
        Adaptedness a = adaptedness(t);
        if ((a == Adaptedness::CrossingDiagram) != crossing)
            throw Error("tangle " + format_tangle(t) + " is not adapted to " + format_diagram(dw.diagram));
    }
    return {dw, t};
}

InvariantCouple invariant_of(const Recipe& rec) {
    validate(rec.flow);
    if (rec.flow.r != 4) throw Error("the classification only covers 4 orbits");
    if (!crossings(rec.flow).empty()) throw Error("flow diagram must be without crossing");
    BraidWord mu = lift_word(rec.lifts);
    Tangle t = tangle_of(mu);
    if (t.trivial) {
        DiagramWithWalls dw = walls_for(rec.flow, {});
        if (!dw.consistent) throw Error("flow diagram admits no flow wall structure");
        return make_couple(dw, t);
    }
    OrbitSet z;
    if (rec.area) {
        z = *rec.area;
        std::sort(z.begin(), z.end());
    } else {
        std::vector<OrbitSet> found;
        for (auto& dw : wall_structures(rec.flow))
            if (dw.irreducible.size() == 1) found.push_back(dw.irreducible[0]);
        if (found.size() != 1) throw Error("recipe must name its irreducible area");
        z = found[0];
    }
    Diagram d = rec.flow;
    if (adaptedness(t) == Adaptedness::CrossingDiagram) d = swap_plus_ends(d, z);
    DiagramWithWalls dw = walls_for(d, {z});
    if (!dw.consistent) throw Error("tangle " + format_tangle(t) + " contradicts the diagram of the recipe");
    return make_couple(dw, t);
}

bool conjugate_equal(const InvariantCouple& a, const InvariantCouple& b) {
    return same_dw(a.dw, b.dw) && tangle_equal(a.tangle, b.tangle);
}

Recipe realize(const InvariantCouple& c0) {
    InvariantCouple c = make_couple(c0.dw, c0.tangle);
    Recipe rec;
    if (c.tangle.trivial) {
        if (!crossings(c.dw.diagram).empty()) throw Error("a flow class cannot have a crossing diagram");
        rec.flow = c.dw.diagram;
        return rec;
    }
    OrbitSet z = irreducible_area(c.dw);
    if (z.size() != 2) throw Error("realization expects a 2-orbit irreducible area");
    bool crossing = !crossings(c.dw.diagram).empty();
    rec.flow = crossing ? swap_plus_ends(c.dw.diagram, z) : c.dw.diagram;
    if (!crossings(rec.flow).empty()) throw Error("exchanging the crossing ends left a crossing");
    rec.area = z;
    CircleFamily start = horizontal_family();
    if (crossing) start.separator = act(BraidWord{3, {1}}, start.separator);
    rec.lifts = deflector(start, {c.tangle.rep});
    if (crossing) {
        // the exchange of the two marked points comes first
        rec.lifts.push_back({make_factor(BraidWord{3, {}}, 1, 1, 3), 0});
        int k = (int)rec.lifts.size();
        for (int j = 0; j < k; ++j) rec.lifts[j].domain = k - j;
    }
    return rec;
}

std::vector<InvariantCouple> generate_distinct(const DiagramWithWalls& dw, int k) {
    if (k < 1) throw Error("need k >= 1");
    if (is_determinant(dw)) throw Error("determinant diagrams carry only the trivial tangle");
    bool crossing = !crossings(dw.diagram).empty();
    std::vector<InvariantCouple> out;
    for (int m = 0; m < k; ++m) {
        // even powers of S keep p above, odd ones put q above
        int e = crossing ? 2 * m + 1 : 2 * (m + 1);
        out.push_back(make_couple(dw, tangle_of(MCGWord{{"S", e}})));
    }
    return out;
}

// ---- JSON ----

std::string factor_json(const HalfTwistFactor& f) {
    ordered_json j;
    j["conjugator"] = f.conjugator.letters;
    j["core"] = f.core;
    j["sign"] = f.sign;
    j["support"] = {f.support.first, f.support.second};
    return j.dump();
}

std::string couple_json(const InvariantCouple& c) {
    ordered_json j;
    j["diagram"] = format_diagram(c.dw.diagram);
    j["walls"] = format_walls(c.dw);
    j["tangle"] = format_tangle(c.tangle).substr(7);
    return j.dump();
}

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("bad JSON: ") + e.what());
    }
}

} // namespace

InvariantCouple parse_couple(const std::string& text) {
    json j = parse_json(text);
    try {
        Diagram d = parse_diagram(j.at("diagram").get<std::string>());
        std::string w = j.value("walls", std::string("walls="));
        if (w.rfind("walls=", 0) != 0) w = "walls=" + w;
        DiagramWithWalls dw = structure_with_walls(d, parse_walls(w));
        return make_couple(dw, parse_tangle(j.at("tangle").get<std::string>()));
    } catch (const json::exception& e) {
        throw Error(std::string("bad couple: ") + e.what());
    }
}

std::string recipe_json(const Recipe& r) {
    ordered_json j;
    j["flow"] = format_diagram(r.flow);
    if (r.area) j["area"] = *r.area;
    auto lifts = ordered_json::array();
    for (auto& l : r.lifts) {
        ordered_json e;
        e["factor"] = ordered_json::parse(factor_json(l.factor));
        e["domain"] = l.domain;
        lifts.push_back(e);
    }
    j["lifts"] = lifts;
    return j.dump();
}

Recipe parse_recipe(const std::string& text) {
    json j = parse_json(text);
    try {
        Recipe r;
        r.flow = parse_diagram(j.at("flow").get<std::string>());
        if (j.contains("area")) r.area = j.at("area").get<OrbitSet>();
        int last = 1 << 30;
        for (auto& e : j.value("lifts", json::array())) {
            auto& f = e.at("factor");
            BraidWord conj{3, f.at("conjugator").get<std::vector<int>>()};
            check_word(conj);
            HalfTwistFactor hf = make_factor(conj, f.at("core").get<int>(), f.at("sign").get<int>(), 3);
            if (f.contains("support")) {
                auto s = f.at("support").get<std::vector<int>>();
                if (s.size() != 2 || std::make_pair(std::min(s[0], s[1]), std::max(s[0], s[1])) != hf.support)
                    throw Error("factor support does not match its word");
            }
            int dom = e.value("domain", 0);
            if (dom >= last) throw Error("lift domains must decrease left to right");
            last = dom;
            r.lifts.push_back({hf, dom});
        }
        return r;
    } catch (const json::exception& e) {
        throw Error(std::string("bad recipe: ") + e.what());
    }
}

} // namespace brouwer
