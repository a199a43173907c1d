#pragma once
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brouwer/error.hpp"

namespace brouwer {

// letters are signed generator indices: +k is sigma_k, -k its inverse
struct BraidWord {
    int strands = 2;
    std::vector<int> letters;

    bool operator==(const BraidWord&) const = default;
};

BraidWord parse_braid(std::string_view text);  // "n=3: [1,2,-1]"
std::string format_braid(const BraidWord& b);
void check_word(const BraidWord& b);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& b);
BraidWord power(const BraidWord& b, int k);
BraidWord free_reduce(const BraidWord& b);

// perm[s] = final position of the strand starting at position s (0-based)
using Perm = std::vector<int>;
Perm permutation(const BraidWord& b);
bool is_pure(const BraidWord& b);

// Garside left normal form, factors stored as position permutations
struct NormalForm {
    int strands = 2;
    int infimum = 0;
    std::vector<Perm> factors;

    bool operator==(const NormalForm&) const = default;
};

NormalForm normal_form(const BraidWord& b);
bool braid_equal(const BraidWord& a, const BraidWord& b);
BraidWord to_word(const NormalForm& nf);
std::string format_normal_form(const NormalForm& nf);

// A_{i,j}, 1 <= j < i <= strands
BraidWord a_gen(int i, int j, int strands);
// band generator sigma_{i,j}, i < j; see braid.cpp for the over/under choice
BraidWord sigma_band(int i, int j, int strands);

// linking of strands i and j (1-based labels by starting position)
int linking(const BraidWord& b, int i, int j);
int epsilon_i(const BraidWord& b, int i);
int epsilon_total(const BraidWord& b);
std::vector<int> epsilon_vector(const BraidWord& b);

// power of A_{i,k} (i < k) inside layer k
struct ALetter {
    int i = 1;
    int exp = 1;
    bool operator==(const ALetter&) const = default;
};
using AWord = std::vector<ALetter>;

AWord reduce_aword(const AWord& w);
BraidWord expand_layer(const AWord& w, int k, int strands);

struct CombedForm {
    int strands = 2;
    std::vector<AWord> betas;  // betas[0] is beta_2 ... betas.back() is beta_{strands}

    const AWord& beta(int k) const { return betas.at(k - 2); }
};

CombedForm comb(const BraidWord& b);
BraidWord expand(const CombedForm& c);
std::string format_combed(const CombedForm& c);

// both sides of A_{i,N}^k A_{j,N}^-k = s^{2k} sigma_{i,j}^{+-1} s^{-2k} sigma_{i,j}^{-+1}, s = sigma_{i,N}
std::pair<BraidWord, BraidWord> conjugation_identity(int i, int j, int k, int strands);

struct HalfTwistFactor {
    BraidWord conjugator;
    int core = 1;
    int sign = 1;
    std::pair<int, int> support{1, 2};
    int avoid = 0;

    BraidWord word() const;
};

HalfTwistFactor make_factor(const BraidWord& conjugator, int core, int sign, int avoid);
// the invariants a factor must satisfy; empty string when all hold
std::string factor_violation(const HalfTwistFactor& f);
BraidWord product(const std::vector<HalfTwistFactor>& fs, int strands);

// w is a word in A_{i,N} letters, N = strands
std::vector<HalfTwistFactor> claimB_factor(const AWord& w, int strands);

struct FreeFactorization {
    std::vector<HalfTwistFactor> factors;
    int twist = 0;  // product == A_{N,N-1}^{-twist} * b
};

BraidWord horizontal_twist(int strands);
FreeFactorization factor_free_half_twists(const BraidWord& b);

} // namespace brouwer
