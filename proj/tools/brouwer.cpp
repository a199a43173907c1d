// brouwer: command line front end over the library
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "brouwer/classify.hpp"
#include "brouwer/enumerate.hpp"

using namespace brouwer;

namespace {

// exit codes
constexpr int kYes = 0, kNo = 1, kUsage = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// a couple file, or a recipe file (has "flow") reduced to its couple
InvariantCouple load_couple(const std::string& path) {
    std::string text = slurp(path);
    if (text.find("\"flow\"") != std::string::npos) return invariant_of(parse_recipe(text));
    return parse_couple(text);
}

// "p/q" or "(a,b,c,d,e,f)"
Curve parse_curve(const std::string& s) {
    if (!s.empty() && s[0] == '(') {
        Curve c;
        std::string body = s.substr(1, s.size() - 2);
        std::stringstream ss(body);
        std::string tok;
        int i = 0;
        while (std::getline(ss, tok, ',')) {
            if (i >= 6) throw Error("curve needs 6 coordinates");
            c.coords[i++] = std::stoll(tok);
        }
        if (i != 6 || s.back() != ')') throw Error("curve needs 6 coordinates");
        check_curve(c);
        return c;
    }
    auto slash = s.find('/');
    if (slash == std::string::npos) throw Error("curve must be p/q or six coordinates");
    return curve_from_slope(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

int cmd_enumerate(int orbits, bool cls, bool include_obstructed, const std::string& out, const std::string& ann) {
    if (orbits < 1 || orbits > 6) throw Error("--orbits must be between 1 and 6");
    EnumerateOptions opt;
    opt.include_obstructed = include_obstructed;
    std::vector<std::string> lines;
    if (cls || !ann.empty()) {
        std::set<std::string> forbidden;
        if (!ann.empty())
            for (auto& s : read_annotations(ann)) forbidden.insert(s);
        for (auto& c : classify_all(orbits, opt)) {
            c.forbidden = forbidden.count(format_diagram(c.dw.diagram)) > 0;
            lines.push_back(report_line(c));
        }
    } else {
        for (auto& d : enumerate_diagrams(orbits, opt)) lines.push_back(report_line(d));
    }
    std::ofstream file;
    if (!out.empty()) {
        file.open(out);
        if (!file) throw Error("cannot write " + out);
    }
    std::ostream& os = out.empty() ? std::cout : file;
    for (auto& l : lines) os << l << "\n";
    return kYes;
}

BraidWord need_pure(const std::string& text) {
    BraidWord b = parse_braid(text);
    if (!is_pure(b)) throw Error("braid is not pure");
    return b;
}

int cmd_braid(const std::string& sub, const std::string& text) {
    if (sub == "nf") {
        std::cout << format_normal_form(normal_form(parse_braid(text))) << "\n";
    } else if (sub == "eps") {
        BraidWord b = need_pure(text);
        auto v = epsilon_vector(b);
        for (size_t i = 0; i < v.size(); ++i) std::cout << "eps_" << i + 1 << "=" << v[i] << " ";
        std::cout << "eps=" << epsilon_total(b) << "\n";
    } else if (sub == "comb") {
        std::cout << format_combed(comb(need_pure(text)));
    } else if (sub == "factor") {
        BraidWord b = need_pure(text);
        if (int e = epsilon_total(b); e != 0)
            throw Error("linking number of rho is not trivial (epsilon = " + std::to_string(e) + ")");
        for (auto& f : factor_free_half_twists(b).factors) std::cout << factor_json(f) << "\n";
    } else {
        throw Error("unknown braid subcommand " + sub);
    }
    return kYes;
}

int cmd_tangle(const std::string& text) {
    Tangle t = text.find("n=") != std::string::npos ? tangle_of(parse_braid(text)) : tangle_of(parse_mcg(text));
    std::cout << format_tangle(t) << "\n" << "adapted=" << adaptedness_name(adaptedness(t)) << "\n";
    return kYes;
}

int cmd_deflector(const std::string& a, const std::string& b) {
    for (auto& l : deflector({parse_curve(a)}, {parse_curve(b)}))
        std::cout << "{\"factor\":" << factor_json(l.factor) << ",\"domain\":" << l.domain << "}\n";
    return kYes;
}

// ---- rendering ----

struct Layout {
    int n;
    double cx = 200, cy = 200, rad = 160;
    // position k on the circle, clockwise from the top; gaps sit at k + 0.5
    std::pair<double, double> at(double k, double scale = 1.0) const {
        double t = M_PI / 2 - 2 * M_PI * k / n;
        return {cx + scale * rad * std::cos(t), cy - scale * rad * std::sin(t)};
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// circle stops of an area: its orbit ends and the gaps of its walls, in circle order
std::vector<double> area_stops(const DiagramWithWalls& dw, const StableArea& a) {
    std::vector<double> ks;
    for (int o : a.orbits) {
        ks.push_back(dw.diagram.position(o, Sign::Minus));
        ks.push_back(dw.diagram.position(o, Sign::Plus));
    }
    for (int w : a.boundary) {
        ks.push_back(dw.walls[w].a + 0.5);
        ks.push_back(dw.walls[w].b + 0.5);
    }
    std::sort(ks.begin(), ks.end());
    return ks;
}

std::string render_ascii(const DiagramWithWalls& dw) {
    const Diagram& d = dw.diagram;
    std::ostringstream os;
    os << format_diagram(d) << "\n";
    os << "circle ";
    for (int k = 0; k < d.size(); ++k) {
        const auto& e = d.cyc[k];
        os << " " << e.orbit << (e.sign == Sign::Plus ? "+" : "-") << " g" << k;
    }
    os << "\n";
    for (int o = 1; o <= d.r; ++o)
        os << "arrow   " << o << ": " << d.position(o, Sign::Minus) << " ---> " << d.position(o, Sign::Plus) << "\n";
    for (auto& w : dw.walls) os << "wall    g" << w.a << " - - - g" << w.b << "\n";
    for (auto& a : dw.areas) {
        os << "area    [";
        for (size_t i = 0; i < a.orbits.size(); ++i) os << (i ? "," : "") << a.orbits[i];
        os << "] " << kind_name(a.kind) << (a.kind == AreaKind::Irreducible ? " ####" : "") << "\n";
    }
    return os.str();
}

std::string render_dot(const DiagramWithWalls& dw) {
    const Diagram& d = dw.diagram;
    Layout L{d.size()};
    std::set<int> grey;
    for (auto& a : dw.areas)
        if (a.kind == AreaKind::Irreducible) grey.insert(a.orbits.begin(), a.orbits.end());
    std::ostringstream os;
    os << "digraph diagram {\n  layout=neato;\n  node [shape=circle, fontsize=10];\n";
    for (int k = 0; k < d.size(); ++k) {
        auto [x, y] = L.at(k);
        const auto& e = d.cyc[k];
        os << "  e" << k << " [label=\"" << e.orbit << (e.sign == Sign::Plus ? "+" : "-") << "\", pos=\"" << num(x / 72) << ","
           << num(-y / 72) << "!\"";
        if (grey.count(e.orbit)) os << ", style=filled, fillcolor=gray80";
        os << "];\n";
        auto [gx, gy] = L.at(k + 0.5);
        os << "  g" << k << " [shape=point, pos=\"" << num(gx / 72) << "," << num(-gy / 72) << "!\"];\n";
    }
    for (int o = 1; o <= d.r; ++o) os << "  e" << d.position(o, Sign::Minus) << " -> e" << d.position(o, Sign::Plus) << ";\n";
    for (auto& w : dw.walls) os << "  g" << w.a << " -> g" << w.b << " [style=dashed, dir=none];\n";
    os << "}\n";
    return os.str();
}

std::string render_svg(const DiagramWithWalls& dw) {
    const Diagram& d = dw.diagram;
    Layout L{d.size()};
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
    os << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" orient=\"auto\">"
          "<path d=\"M0,0 L8,4 L0,8 z\"/></marker></defs>\n";
    for (auto& a : dw.areas) {
        if (a.kind != AreaKind::Irreducible) continue;
        os << "<polygon fill=\"#c8c8c8\" stroke=\"none\" points=\"";
        bool first = true;
        for (double k : area_stops(dw, a)) {
            auto [x, y] = L.at(k);
            os << (first ? "" : " ") << num(x) << "," << num(y);
            first = false;
        }
        os << "\"/>\n";
    }
    os << "<circle cx=\"200\" cy=\"200\" r=\"160\" fill=\"none\" stroke=\"black\"/>\n";
    for (int o = 1; o <= d.r; ++o) {
        auto [x1, y1] = L.at(d.position(o, Sign::Minus));
        auto [x2, y2] = L.at(d.position(o, Sign::Plus));
        os << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2)
           << "\" stroke=\"black\" marker-end=\"url(#head)\"/>\n";
    }
    for (auto& w : dw.walls) {
        auto [x1, y1] = L.at(w.a + 0.5);
        auto [x2, y2] = L.at(w.b + 0.5);
        os << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2)
           << "\" stroke=\"black\" stroke-dasharray=\"6,4\"/>\n";
    }
    for (int k = 0; k < d.size(); ++k) {
        auto [x, y] = L.at(k, 1.1);
        const auto& e = d.cyc[k];
        os << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"12\" text-anchor=\"middle\">" << e.orbit
           << (e.sign == Sign::Plus ? "+" : "-") << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

int cmd_render(const std::string& diagram, const std::string& walls, const std::string& format) {
    if (format != "ascii" && format != "dot" && format != "svg") throw Error("unknown format " + format);
    Diagram d = parse_diagram(diagram);
    DiagramWithWalls dw = walls.empty() ? compute_walls(d) : structure_with_walls(d, parse_walls(walls));
    if (format == "ascii") std::cout << render_ascii(dw);
    if (format == "dot") std::cout << render_dot(dw);
    if (format == "svg") std::cout << render_svg(dw);
    return kYes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brouwer mapping class invariants"};
    app.require_subcommand(1);

    int orbits = 0;
    bool cls = false, incl = false;
    std::string out, ann;
    auto* en = app.add_subcommand("enumerate", "list canonical diagrams as JSON lines");
    en->add_option("--orbits", orbits, "number of orbits, 1..6")->required();
    en->add_flag("--classify", cls, "add walls and verdicts");
    en->add_flag("--include-obstructed", incl, "keep diagrams with no consistent wall structure");
    en->add_option("--out", out, "output file");
    en->add_option("--annotations", ann, "JSON list of forbidden diagrams");

    std::string fa, fb;
    auto* eq = app.add_subcommand("equal", "decide conjugacy of two couples (or recipes)");
    eq->add_option("a", fa)->required();
    eq->add_option("b", fb)->required();

    std::string sub, word;
    auto* br = app.add_subcommand("braid", "braid utilities: nf, eps, comb, factor");
    br->add_option("op", sub)->required()->check(CLI::IsMember({"nf", "eps", "comb", "factor"}));
    br->add_option("word", word, "e.g. \"n=3: [1,2,-1]\"")->required();

    std::string mcg;
    auto* tg = app.add_subcommand("tangle", "tangle of a mapping class word or 3-strand braid");
    tg->add_option("word", mcg, "e.g. \"S^2 T\" or \"n=3: [1,1]\"")->required();

    std::string ca, cb;
    auto* de = app.add_subcommand("deflector", "half twists sending one family to another");
    de->add_option("alpha", ca, "p/q or (TP,BQ,TB,PQ,TQ,PB)")->required();
    de->add_option("beta", cb)->required();

    std::string cf;
    auto* re = app.add_subcommand("realize", "recipe JSON for a couple file");
    re->add_option("couple", cf)->required();

    std::string dia, walls, fmt = "ascii";
    auto* rd = app.add_subcommand("render", "draw a diagram with walls");
    rd->add_option("diagram", dia, "e.g. \"r=2; cyc=1- 2- 2+ 1+\"")->required();
    rd->add_option("--walls", walls, "walls=...; computed when omitted");
    rd->add_option("--format", fmt, "ascii, dot or svg");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (*en) return cmd_enumerate(orbits, cls, incl, out, ann);
        if (*eq) {
            bool same = conjugate_equal(load_couple(fa), load_couple(fb));
            std::cout << (same ? "conjugate" : "not-conjugate") << "\n";
            return same ? kYes : kNo;
        }
        if (*br) return cmd_braid(sub, word);
        if (*tg) return cmd_tangle(mcg);
        if (*de) return cmd_deflector(ca, cb);
        if (*re) {
            std::cout << recipe_json(realize(load_couple(cf))) << "\n";
            return kYes;
        }
        if (*rd) return cmd_render(dia, walls, fmt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
