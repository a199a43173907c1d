#include "brouwer/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <unordered_map>

#include "json.hpp"

namespace brouwer {

namespace {

using Code = std::uint64_t;

// 4 bits per end, first end most significant, so code order is word order
Code encode(const std::vector<int>& toks) {
    Code c = 0;
    for (int t : toks) c = (c << 4) | (Code)t;
    return c;
}

std::vector<int> canon_toks(const std::vector<int>& w) {
    int n = (int)w.size();
    std::vector<int> best, cur(n), lab(16);
    for (int s = 0; s < n; ++s) {
        std::fill(lab.begin(), lab.end(), 0);
        int next = 1;
        for (int i = 0; i < n; ++i) {
            int t = w[(i + s) % n], o = t & 7;
            if (!lab[o]) lab[o] = next++;
            cur[i] = (t & 8) | lab[o];
        }
        if (best.empty() || cur < best) best = cur;
    }
    return best;
}

Diagram from_toks(const std::vector<int>& w) {
    Diagram d{(int)w.size() / 2, {}};
    for (int t : w) d.cyc.push_back({(t & 8) ? Sign::Plus : Sign::Minus, t & 7});
    return d;
}

void grow(int r, std::vector<int>& w, std::vector<int>& open, int next, std::vector<std::vector<int>>& out) {
    if ((int)w.size() == 2 * r) {
        out.push_back(w);
        return;
    }
    for (int o = 1; o < next; ++o) {
        if (!open[o]) continue;
        int t = open[o];
        open[o] = 0;
        w.push_back(t);
        grow(r, w, open, next, out);
        w.pop_back();
        open[o] = t;
    }
    if (next <= r) {
        for (int s : {0, 8}) {
            open[next] = (8 - s) | next;
            w.push_back(s | next);
            grow(r, w, open, next + 1, out);
            w.pop_back();
            open[next] = 0;
        }
    }
}

int find(std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}

} // namespace

std::vector<Diagram> enumerate_diagrams(int r, const EnumerateOptions& opt) {
    if (r < 1) throw Error("enumerate needs r >= 1");
    if (r > 6) throw Error("enumerate supports r <= 6");
    std::vector<std::vector<int>> words;
    std::vector<int> w, open(r + 2, 0);
    grow(r, w, open, 1, words);

    std::unordered_map<Code, int> index;
    std::vector<std::vector<int>> canon;
    for (auto& word : words) {
        auto c = canon_toks(word);
        if (index.emplace(encode(c), (int)canon.size()).second) canon.push_back(c);
    }
    words.clear();
    // classes under reordering inside adjacency blocks
    std::vector<int> parent(canon.size());
    std::iota(parent.begin(), parent.end(), 0);
    int n = 2 * r;
    for (int i = 0; i < (int)canon.size(); ++i) {
        for (int p = 0; p < n; ++p) {
            int q = (p + 1) % n;
            if ((canon[i][p] & 8) != (canon[i][q] & 8)) continue;
            auto x = canon[i];
            std::swap(x[p], x[q]);
            int j = index.at(encode(canon_toks(x)));
            parent[find(parent, i)] = find(parent, j);
        }
    }
    std::unordered_map<int, std::pair<size_t, int>> best;  // root -> (crossings, member)
    for (int i = 0; i < (int)canon.size(); ++i) {
        int root = find(parent, i);
        size_t x = crossings(from_toks(canon[i])).size();
        auto it = best.find(root);
        if (it == best.end() || x < it->second.first || (x == it->second.first && canon[i] < canon[it->second.second]))
            best[root] = {x, i};
    }
    std::vector<Diagram> out;
    for (auto& [root, v] : best) {
        Diagram d = from_toks(canon[v.second]);
        if (!opt.include_obstructed && is_obstructed(d)) continue;
        out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::DeterminantFlow: return "Determinant-Flow";
    case Verdict::NonDeterminant: return "NonDeterminant";
    case Verdict::Unconstrained: return "Unconstrained";
    default: return "Obstructed";
    }
}

Classified classify(const Diagram& d) {
    Classified c;
    auto all = wall_structures(d);
    for (auto& dw : all)
        if (!dw.irreducible.empty()) c.structures++;
    c.dw = compute_walls(d);
    if (all.empty())
        c.verdict = Verdict::Obstructed;
    else if (c.structures > 0)
        c.verdict = d.r <= 4 ? Verdict::NonDeterminant : Verdict::Unconstrained;
    else
        c.verdict = Verdict::DeterminantFlow;
    return c;
}

std::vector<Classified> classify_all(int r, const EnumerateOptions& opt) {
    std::vector<Classified> out;
    for (auto& d : enumerate_diagrams(r, opt)) out.push_back(classify(d));
    return out;
}

std::vector<std::string> read_annotations(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read annotations " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("bad annotations: ") + e.what());
    }
    std::vector<std::string> out;
    auto add = [&](const std::string& s) { out.push_back(format_diagram(normalize(parse_diagram(s)))); };
    // plain list of strings, list of {"diagram","mark"} objects, or {diagram: "forbidden"}
    if (j.is_array()) {
        for (auto& e : j) {
            if (e.is_string())
                add(e.get<std::string>());
            else if (e.is_object() && e.value("mark", "forbidden") == "forbidden")
                add(e.at("diagram").get<std::string>());
        }
    } else if (j.is_object()) {
        for (auto& [k, v] : j.items())
            if (v == "forbidden") add(k);
    } else {
        throw Error("annotations must be a JSON list");
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

nlohmann::ordered_json base_json(const Diagram& d) {
    nlohmann::ordered_json j;
    j["diagram"] = format_diagram(d);
    j["rprime"] = adjacency_profile(d).r_prime;
    auto xs = nlohmann::ordered_json::array();
    for (auto [a, b] : crossings(d)) xs.push_back({a, b});
    j["crossings"] = xs;
    return j;
}

} // namespace

std::string report_line(const Diagram& d) { return base_json(d).dump(); }

std::string report_line(const Classified& c) {
    auto j = base_json(c.dw.diagram);
    j["walls"] = format_walls(c.dw);
    j["verdict"] = verdict_name(c.verdict);
    if (c.structures > 1) j["structures"] = c.structures;
    auto areas = nlohmann::ordered_json::array();
    for (auto& a : c.dw.areas) areas.push_back(nlohmann::ordered_json::parse(area_json(a)));
    j["areas"] = areas;
    if (c.forbidden) j["forbidden"] = true;
    return j.dump();
}

} // namespace brouwer
