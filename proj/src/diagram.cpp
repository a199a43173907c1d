#include "brouwer/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace brouwer {

int Diagram::position(int orbit, Sign s) const {
    for (int i = 0; i < size(); ++i)
        if (cyc[i].orbit == orbit && cyc[i].sign == s) return i;
    throw Error("orbit " + std::to_string(orbit) + " missing from diagram");
}

void validate(const Diagram& d) {
    if (d.r < 1) throw Error("diagram needs r >= 1");
    if (d.size() != 2 * d.r)
        throw Error("cyc has " + std::to_string(d.size()) + " ends, expected " + std::to_string(2 * d.r));
    std::vector<int> seen(2 * (d.r + 1), 0);
    for (const auto& e : d.cyc) {
        if (e.orbit < 1 || e.orbit > d.r) throw Error("orbit " + std::to_string(e.orbit) + " out of range 1.." + std::to_string(d.r));
        int& c = seen[2 * e.orbit + (int)e.sign];
        if (c++) throw Error("orbit " + std::to_string(e.orbit) + " has two " + (e.sign == Sign::Minus ? "minus" : "plus") + " ends");
    }
}

Diagram parse_diagram(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace((unsigned char)s.back())) s.pop_back();
    auto semi = s.find(';');
    if (s.rfind("r=", 0) != 0 || semi == std::string::npos) throw Error("diagram must look like 'r=<int>; cyc=...'");
    Diagram d;
    try {
        size_t used = 0;
        d.r = std::stoi(s.substr(2, semi - 2), &used);
        if (used != semi - 2) throw Error("bad r");
    } catch (const std::logic_error&) {
        throw Error("bad r in diagram");
    }
    std::string rest = s.substr(semi + 1);
    size_t k = 0;
    while (k < rest.size() && rest[k] == ' ') ++k;
    rest = rest.substr(k);
    if (rest.rfind("cyc=", 0) != 0) throw Error("missing cyc= in diagram");
    std::stringstream ss(rest.substr(4));
    std::string tok;
    while (ss >> tok) {
        if (tok.size() < 2 || (tok.back() != '-' && tok.back() != '+')) throw Error("malformed token '" + tok + "'");
        std::string num = tok.substr(0, tok.size() - 1);
        if (!std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit((unsigned char)c); }))
            throw Error("malformed token '" + tok + "'");
        d.cyc.push_back({tok.back() == '-' ? Sign::Minus : Sign::Plus, std::stoi(num)});
    }
    validate(d);
    return d;
}

std::string format_cyc(const Diagram& d) {
    std::string out;
    for (size_t i = 0; i < d.cyc.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(d.cyc[i].orbit) + (d.cyc[i].sign == Sign::Minus ? "-" : "+");
    }
    return out;
}

std::string format_diagram(const Diagram& d) { return "r=" + std::to_string(d.r) + "; cyc=" + format_cyc(d); }

Diagram apply_map(const Diagram& d, const DiagramMap& m) {
    Diagram out{d.r, {}};
    int n = d.size();
    for (int i = 0; i < n; ++i) {
        Endpoint e = d.cyc[(i + m.shift) % n];
        out.cyc.push_back({e.sign, m.relabel[e.orbit]});
    }
    return out;
}

namespace {

// greedy first-appearance relabeling is optimal for a fixed rotation
DiagramMap greedy_map(const Diagram& d, int shift) {
    DiagramMap m{shift, std::vector<int>(d.r + 1, 0)};
    int next = 1;
    int n = d.size();
    for (int i = 0; i < n; ++i) {
        int o = d.cyc[(i + shift) % n].orbit;
        if (!m.relabel[o]) m.relabel[o] = next++;
    }
    return m;
}

} // namespace

Diagram canonical_form(const Diagram& d) {
    Diagram best;
    bool have = false;
    for (int s = 0; s < d.size(); ++s) {
        Diagram c = apply_map(d, greedy_map(d, s));
        if (!have || c < best) best = c, have = true;
    }
    return best;
}

std::vector<DiagramMap> canonical_maps(const Diagram& d) {
    Diagram best = canonical_form(d);
    std::vector<DiagramMap> out;
    for (int s = 0; s < d.size(); ++s) {
        DiagramMap m = greedy_map(d, s);
        if (apply_map(d, m) == best) out.push_back(m);
    }
    return out;
}

AdjacencyProfile adjacency_profile(const Diagram& d) {
    AdjacencyProfile p;
    int n = d.size();
    int st = -1;
    for (int i = 0; i < n; ++i)
        if (d.cyc[i].sign != d.cyc[(i + n - 1) % n].sign) {
            st = i;
            break;
        }
    // every diagram has both signs, so st is always found
    Block cur{d.cyc[st].sign, {}, st};
    for (int k = 0; k < n; ++k) {
        const auto& e = d.cyc[(st + k) % n];
        if (e.sign != cur.sign) {
            p.blocks.push_back(cur);
            cur = Block{e.sign, {}, (st + k) % n};
        }
        cur.orbits.push_back(e.orbit);
    }
    p.blocks.push_back(cur);
    p.r_prime = (int)p.blocks.size() / 2;
    return p;
}

std::vector<std::pair<int, int>> crossings(const Diagram& d) {
    std::vector<std::pair<int, int>> out;
    std::vector<int> lo(d.r + 1), hi(d.r + 1);
    for (int o = 1; o <= d.r; ++o) {
        int a = d.position(o, Sign::Minus), b = d.position(o, Sign::Plus);
        lo[o] = std::min(a, b);
        hi[o] = std::max(a, b);
    }
    for (int i = 1; i <= d.r; ++i)
        for (int j = i + 1; j <= d.r; ++j) {
            bool c_in = lo[i] < lo[j] && lo[j] < hi[i];
            bool d_in = lo[i] < hi[j] && hi[j] < hi[i];
            if (c_in != d_in) out.push_back({i, j});
        }
    return out;
}

Diagram normalize(const Diagram& d) {
    validate(d);
    // adjacent same-sign swaps generate every in-block reordering
    std::set<Diagram> seen{canonical_form(d)};
    std::vector<Diagram> todo{*seen.begin()};
    Diagram best = todo[0];
    size_t best_x = crossings(best).size();
    while (!todo.empty()) {
        Diagram cur = todo.back();
        todo.pop_back();
        size_t x = crossings(cur).size();
        if (x < best_x || (x == best_x && cur < best)) best = cur, best_x = x;
        int n = cur.size();
        for (int i = 0; i < n; ++i) {
            int j = (i + 1) % n;
            if (cur.cyc[i].sign != cur.cyc[j].sign) continue;
            Diagram nx = cur;
            std::swap(nx.cyc[i], nx.cyc[j]);
            nx = canonical_form(nx);
            if (seen.insert(nx).second) todo.push_back(nx);
        }
    }
    return best;
}

} // namespace brouwer
