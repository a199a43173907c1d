#include "brouwer/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

namespace brouwer {

namespace {

int sgn(int x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

void need(bool ok, const std::string& msg) {
    if (!ok) throw Error(msg);
}

} // namespace

void check_word(const BraidWord& b) {
    need(b.strands >= 2, "braid needs at least 2 strands");
    for (int l : b.letters)
        need(l != 0 && std::abs(l) < b.strands,
             "generator " + std::to_string(l) + " out of range for " + std::to_string(b.strands) + " strands");
}

BraidWord parse_braid(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    need(s.rfind("n=", 0) == 0, "braid must start with n=<strands>");
    auto colon = s.find(':');
    need(colon != std::string::npos, "missing ':' in braid");
    BraidWord b;
    try {
        size_t used = 0;
        b.strands = std::stoi(s.substr(2, colon - 2), &used);
        need(used == colon - 2, "bad strand count");
    } catch (const std::logic_error&) {
        throw Error("bad strand count in braid");
    }
    std::string body = s.substr(colon + 1);
    need(body.size() >= 2 && body.front() == '[' && body.back() == ']', "braid letters must be in [..]");
    body = body.substr(1, body.size() - 2);
    if (!body.empty()) {
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                size_t used = 0;
                int v = std::stoi(tok, &used);
                need(used == tok.size(), "bad letter '" + tok + "'");
                b.letters.push_back(v);
            } catch (const std::logic_error&) {
                throw Error("bad letter '" + tok + "'");
            }
        }
    }
    check_word(b);
    return b;
}

std::string format_braid(const BraidWord& b) {
    std::string out = "n=" + std::to_string(b.strands) + ": [";
    for (size_t i = 0; i < b.letters.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(b.letters[i]);
    }
    return out + "]";
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    need(a.strands == b.strands, "strand count mismatch");
    BraidWord c = a;
    c.letters.insert(c.letters.end(), b.letters.begin(), b.letters.end());
    return c;
}

BraidWord inverse(const BraidWord& b) {
    BraidWord c{b.strands, {}};
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) c.letters.push_back(-*it);
    return c;
}

BraidWord power(const BraidWord& b, int k) {
    BraidWord base = k < 0 ? inverse(b) : b;
    BraidWord c{b.strands, {}};
    for (int t = 0; t < std::abs(k); ++t) c.letters.insert(c.letters.end(), base.letters.begin(), base.letters.end());
    return c;
}

BraidWord free_reduce(const BraidWord& b) {
    BraidWord c{b.strands, {}};
    for (int l : b.letters) {
        if (!c.letters.empty() && c.letters.back() == -l)
            c.letters.pop_back();
        else
            c.letters.push_back(l);
    }
    return c;
}

Perm permutation(const BraidWord& b) {
    check_word(b);
    // at[p] = strand sitting at position p
    std::vector<int> at(b.strands);
    for (int p = 0; p < b.strands; ++p) at[p] = p;
    for (int l : b.letters) {
        int k = std::abs(l);
        std::swap(at[k - 1], at[k]);
    }
    Perm perm(b.strands);
    for (int p = 0; p < b.strands; ++p) perm[at[p]] = p;
    return perm;
}

bool is_pure(const BraidWord& b) {
    Perm p = permutation(b);
    for (int i = 0; i < (int)p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

// ---- Garside machinery ----

namespace {

Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

Perm delta_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
    return p;
}

Perm inv(const Perm& p) {
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i]] = (int)i;
    return q;
}

// conjugation by Delta
Perm tau(const Perm& p) {
    int n = (int)p.size();
    Perm q(n);
    for (int i = 0; i < n; ++i) q[i] = n - 1 - p[n - 1 - i];
    return q;
}

// generator k acts on positions k-1, k; both sets use 1-based generator indices
bool in_start(const Perm& p, int k) { return p[k - 1] > p[k]; }
bool in_finish(const Perm& p, int k) {
    Perm q = inv(p);
    return q[k - 1] > q[k];
}

// apply s_k after p (right multiplication by sigma_k)
void post_swap(Perm& p, int k) {
    for (int& v : p) {
        if (v == k - 1)
            v = k;
        else if (v == k)
            v = k - 1;
    }
}
// remove a leading sigma_k
void pre_swap(Perm& p, int k) { std::swap(p[k - 1], p[k]); }

// makes (a, b) left weighted, returns whether anything moved
bool left_weight(Perm& a, Perm& b) {
    int n = (int)a.size();
    bool moved = false;
    bool again = true;
    while (again) {
        again = false;
        for (int k = 1; k < n; ++k) {
            if (in_start(b, k) && !in_finish(a, k)) {
                post_swap(a, k);
                pre_swap(b, k);
                moved = again = true;
            }
        }
    }
    return moved;
}

std::vector<int> positive_word(Perm p) {
    std::vector<int> w;
    int n = (int)p.size();
    bool again = true;
    while (again) {
        again = false;
        for (int k = 1; k < n; ++k) {
            if (p[k - 1] > p[k]) {
                w.push_back(k);
                pre_swap(p, k);
                again = true;
                break;
            }
        }
    }
    return w;
}

} // namespace

NormalForm normal_form(const BraidWord& b) {
    check_word(b);
    int n = b.strands;
    NormalForm nf{n, 0, {}};
    const Perm w0 = delta_perm(n);
    // Delta^-1 moves left through every stored factor; tau is applied lazily
    // through a parity tag so long words stay linear-ish
    std::vector<std::pair<Perm, int>> fs;
    int parity = 0;
    auto actual = [&](size_t i) { return fs[i].second == parity ? fs[i].first : tau(fs[i].first); };
    for (int l : b.letters) {
        int k = std::abs(l);
        Perm s;
        if (l > 0) {
            s = identity_perm(n);
            post_swap(s, k);
        } else {
            // sigma_k^-1 = Delta^-1 tau(sigma_k^-1 Delta)
            Perm d = w0;
            std::swap(d[k - 1], d[k]);
            nf.infimum -= 1;
            parity ^= 1;
            s = tau(d);
        }
        fs.push_back({s, parity});
        // one right to left pass restores left weightedness
        for (size_t i = fs.size() - 1; i >= 1; --i) {
            Perm a = actual(i - 1), c = actual(i);
            if (!left_weight(a, c)) break;
            fs[i - 1] = {a, parity};
            fs[i] = {c, parity};
        }
    }
    for (size_t i = 0; i < fs.size(); ++i) nf.factors.push_back(actual(i));
    const Perm id = identity_perm(n);
    size_t lead = 0;
    while (lead < nf.factors.size() && nf.factors[lead] == w0) ++lead;
    nf.infimum += (int)lead;
    nf.factors.erase(nf.factors.begin(), nf.factors.begin() + lead);
    nf.factors.erase(std::remove(nf.factors.begin(), nf.factors.end(), id), nf.factors.end());
    return nf;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
    need(a.strands == b.strands, "strand count mismatch");
    return normal_form(a) == normal_form(b);
}

BraidWord to_word(const NormalForm& nf) {
    BraidWord delta{nf.strands, positive_word(delta_perm(nf.strands))};
    BraidWord w = power(delta, nf.infimum);
    for (const auto& f : nf.factors) {
        auto pw = positive_word(f);
        w.letters.insert(w.letters.end(), pw.begin(), pw.end());
    }
    return w;
}

std::string format_normal_form(const NormalForm& nf) {
    if (nf.infimum == 0 && nf.factors.empty()) return "identity";
    std::string out = "n=" + std::to_string(nf.strands) + ": inf=" + std::to_string(nf.infimum) + " factors=[";
    for (size_t i = 0; i < nf.factors.size(); ++i) {
        if (i) out += ",";
        out += "[";
        auto pw = positive_word(nf.factors[i]);
        for (size_t j = 0; j < pw.size(); ++j) out += (j ? "," : "") + std::to_string(pw[j]);
        out += "]";
    }
    return out + "]";
}

// ---- generators ----

BraidWord a_gen(int i, int j, int strands) {
    need(1 <= j && j < i && i <= strands, "a_gen needs 1 <= j < i <= strands");
    BraidWord c{strands, {}};
    for (int t = i - 1; t > j; --t) c.letters.push_back(t);
    BraidWord w = c;
    w.letters.push_back(j);
    w.letters.push_back(j);
    return concat(w, inverse(c));
}

namespace {

// sigma_{i,j} = c sigma_i c^-1 with c = sigma_{j-1} ... sigma_{i+1}, so that
// sigma_{i,N}^2 is exactly A_{N,i}; the conjugation identity pins this choice
BraidWord band_conjugator(int i, int j, int strands) {
    BraidWord c{strands, {}};
    for (int t = j - 1; t > i; --t) c.letters.push_back(t);
    return c;
}

} // namespace

BraidWord sigma_band(int i, int j, int strands) {
    need(1 <= i && i < j && j <= strands, "sigma_band needs 1 <= i < j <= strands");
    BraidWord c = band_conjugator(i, j, strands);
    BraidWord w = c;
    w.letters.push_back(i);
    return concat(w, inverse(c));
}

// ---- linking ----

namespace {

// signed crossing counts between strand pairs, indexed [a][b] with a < b (0-based)
std::vector<std::vector<int>> crossing_counts(const BraidWord& b) {
    check_word(b);
    int n = b.strands;
    std::vector<std::vector<int>> cnt(n, std::vector<int>(n, 0));
    std::vector<int> at(n);
    for (int p = 0; p < n; ++p) at[p] = p;
    for (int l : b.letters) {
        int k = std::abs(l);
        int x = at[k - 1], y = at[k];
        cnt[std::min(x, y)][std::max(x, y)] += sgn(l);
        std::swap(at[k - 1], at[k]);
    }
    return cnt;
}

} // namespace

int linking(const BraidWord& b, int i, int j) {
    need(is_pure(b), "linking needs a pure braid");
    need(i != j && i >= 1 && j >= 1 && i <= b.strands && j <= b.strands, "bad strand pair");
    auto cnt = crossing_counts(b);
    return cnt[std::min(i, j) - 1][std::max(i, j) - 1] / 2;
}

int epsilon_i(const BraidWord& b, int i) { return linking(b, i, b.strands); }

std::vector<int> epsilon_vector(const BraidWord& b) {
    need(is_pure(b), "epsilon needs a pure braid");
    auto cnt = crossing_counts(b);
    std::vector<int> e;
    for (int i = 0; i + 1 < b.strands; ++i) e.push_back(cnt[i][b.strands - 1] / 2);
    return e;
}

int epsilon_total(const BraidWord& b) {
    int s = 0;
    for (int v : epsilon_vector(b)) s += v;
    return s;
}

// ---- combing ----

AWord reduce_aword(const AWord& w) {
    AWord out;
    for (const auto& l : w) {
        if (l.exp == 0) continue;
        if (!out.empty() && out.back().i == l.i) {
            out.back().exp += l.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

BraidWord expand_layer(const AWord& w, int k, int strands) {
    BraidWord out{strands, {}};
    for (const auto& l : w) out = concat(out, power(a_gen(k, l.i, strands), l.exp));
    return out;
}

namespace {

// y^-1 x_k y for y = sigma_j^e, acting on the free group of the last strand
AWord conj_letter(int k, int e, int j, int exp) {
    AWord out;
    auto x = [&](int idx, int s) { out.push_back({idx, s}); };
    int s = exp > 0 ? 1 : -1;
    for (int t = 0; t < std::abs(exp); ++t) {
        if (k != j && k != j + 1) {
            x(k, s);
        } else if (e > 0) {
            if (k == j + 1) {
                x(j, s);
            } else {
                // x_j -> x_j x_{j+1} x_j^-1
                x(j, 1);
                x(j + 1, s);
                x(j, -1);
            }
        } else {
            if (k == j) {
                x(j + 1, s);
            } else {
                // x_{j+1} -> x_{j+1}^-1 x_j x_{j+1}
                x(j + 1, -1);
                x(j, s);
                x(j + 1, 1);
            }
        }
    }
    return out;
}

void comb_into(const BraidWord& b, std::vector<AWord>& betas) {
    int n = b.strands;
    if (n < 2) return;
    // track the last strand, collect its kernel letters and the quotient word
    int m = n;
    struct Item {
        bool is_x;
        int idx;
        int e;
    };
    std::vector<Item> items;
    BraidWord y{std::max(n - 1, 2), {}};
    for (int l : b.letters) {
        int k = std::abs(l), e = sgn(l);
        if (k + 1 < m) {
            items.push_back({false, k, e});
        } else if (k > m) {
            items.push_back({false, k - 1, e});
        } else if (k == m) {
            if (e > 0) items.push_back({true, k, 1});
            m = k + 1;
        } else {
            if (e < 0) items.push_back({true, k, -1});
            m = k;
        }
    }
    AWord w;
    // a y letter is pushed left past everything already collected
    for (auto it = items.begin(); it != items.end(); ++it) {
        if (it->is_x) {
            w.push_back(ALetter{it->idx, it->e});
        } else {
            AWord nw;
            for (const auto& l : w) {
                AWord piece = conj_letter(l.i, it->e, it->idx, l.exp);
                nw.insert(nw.end(), piece.begin(), piece.end());
            }
            w = reduce_aword(nw);
        }
    }
    betas[n - 2] = reduce_aword(w);
    if (n == 2) return;
    for (const auto& itm : items)
        if (!itm.is_x) y.letters.push_back(itm.idx * itm.e);
    y.strands = n - 1;
    comb_into(y, betas);
}

} // namespace

CombedForm comb(const BraidWord& b) {
    need(is_pure(b), "comb needs a pure braid");
    CombedForm c{b.strands, std::vector<AWord>(b.strands - 1)};
    comb_into(b, c.betas);
    return c;
}

BraidWord expand(const CombedForm& c) {
    BraidWord out{c.strands, {}};
    for (int k = 2; k <= c.strands; ++k) out = concat(out, expand_layer(c.beta(k), k, c.strands));
    return out;
}

std::string format_combed(const CombedForm& c) {
    std::string out;
    for (int k = 2; k <= c.strands; ++k) {
        out += "beta_" + std::to_string(k) + " =";
        if (c.beta(k).empty()) out += " e";
        for (const auto& l : c.beta(k)) out += " A" + std::to_string(l.i) + "," + std::to_string(k) + "^" + std::to_string(l.exp);
        out += "\n";
    }
    return out;
}

// ---- half twists ----

// The conjugating twist has to be sigma_{i,N}: the right side is y^k z^-k with
// y = s^2 and z a conjugate of y, and in the free group on the A_{N,*} this only
// equals A_i^k A_j^-k when y = A_{N,i}. sigma_{i,j} enters with sign +1 when i < j.
std::pair<BraidWord, BraidWord> conjugation_identity(int i, int j, int k, int strands) {
    int n1 = strands;
    need(i != j && i >= 1 && j >= 1 && i < n1 && j < n1, "conjugation_identity needs i != j <= n");
    BraidWord lhs = concat(power(a_gen(n1, i, n1), k), power(a_gen(n1, j, n1), -k));
    BraidWord s = sigma_band(i, n1, n1);
    BraidWord band = power(sigma_band(std::min(i, j), std::max(i, j), n1), i < j ? 1 : -1);
    BraidWord rhs = concat(concat(power(s, 2 * k), band), concat(power(s, -2 * k), inverse(band)));
    return {lhs, rhs};
}

BraidWord HalfTwistFactor::word() const {
    BraidWord w = conjugator;
    w.letters.push_back(core * sign);
    return concat(w, inverse(conjugator));
}

HalfTwistFactor make_factor(const BraidWord& conjugator, int core, int sign, int avoid) {
    HalfTwistFactor f{free_reduce(conjugator), core, sign, {0, 0}, avoid};
    Perm p = permutation(f.word());
    std::vector<int> moved;
    for (int s = 0; s < (int)p.size(); ++s)
        if (p[s] != s) moved.push_back(s + 1);
    need(moved.size() == 2, "half twist must swap exactly two strands");
    f.support = {moved[0], moved[1]};
    return f;
}

std::string factor_violation(const HalfTwistFactor& f) {
    BraidWord w = f.word();
    Perm p = permutation(w);
    int a = f.support.first - 1, b = f.support.second - 1;
    for (int s = 0; s < (int)p.size(); ++s) {
        int want = s == a ? b : (s == b ? a : s);
        if (p[s] != want) return "permutation is not the support transposition";
    }
    if (f.support.first == f.avoid || f.support.second == f.avoid) return "support meets the avoided strand";
    BraidWord sq = concat(w, w);
    for (int s = 1; s <= w.strands; ++s)
        if (s != f.avoid && linking(sq, s, f.avoid) != 0) return "nonzero linking with the avoided strand";
    return "";
}

BraidWord product(const std::vector<HalfTwistFactor>& fs, int strands) {
    BraidWord out{strands, {}};
    for (const auto& f : fs) out = concat(out, f.word());
    return out;
}

std::vector<HalfTwistFactor> claimB_factor(const AWord& w0, int strands) {
    int n1 = strands;
    for (const auto& l : w0) need(l.i >= 1 && l.i < n1, "A letter index out of range");
    AWord w = reduce_aword(w0);
    int total = 0;
    for (const auto& l : w) total += l.exp;
    need(total == 0, "linking number of rho is not trivial (epsilon = " + std::to_string(total) + ")");
    std::vector<HalfTwistFactor> out;
    int acc = 0;
    for (size_t t = 0; t + 1 < w.size(); ++t) {
        acc += w[t].exp;
        if (acc == 0) continue;
        int i = w[t].i, j = w[t + 1].i;
        // A_i^acc A_j^-acc = s^{2 acc} sigma_{i,j} s^{-2 acc} sigma_{i,j}^-1, s = sigma_{i,N}
        int lo = std::min(i, j), hi = std::max(i, j);
        int sign = i < j ? 1 : -1;
        BraidWord c = band_conjugator(lo, hi, n1);
        BraidWord s = sigma_band(i, n1, n1);
        out.push_back(make_factor(concat(power(s, 2 * acc), c), lo, sign, n1));
        out.push_back(make_factor(c, lo, -sign, n1));
    }
    return out;
}

BraidWord horizontal_twist(int strands) { return a_gen(strands, strands - 1, strands); }

FreeFactorization factor_free_half_twists(const BraidWord& b) {
    need(is_pure(b), "factor needs a pure braid");
    int n1 = b.strands;
    FreeFactorization res;
    res.twist = epsilon_total(b);
    BraidWord corrected = concat(power(horizontal_twist(n1), -res.twist), b);
    CombedForm c = comb(corrected);
    for (int k = 2; k < n1; ++k) {
        for (const auto& l : c.beta(k)) {
            // A_{k,i} = c sigma_i^2 c^-1, two half twists per unit exponent
            BraidWord conj{n1, {}};
            for (int t = k - 1; t > l.i; --t) conj.letters.push_back(t);
            for (int t = 0; t < 2 * std::abs(l.exp); ++t) res.factors.push_back(make_factor(conj, l.i, sgn(l.exp), n1));
        }
    }
    auto last = claimB_factor(c.beta(n1), n1);
    res.factors.insert(res.factors.end(), last.begin(), last.end());
    return res;
}

} // namespace brouwer
