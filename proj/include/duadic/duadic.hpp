#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "duadic/bounds.hpp"
#include "duadic/cyclotomic.hpp"

namespace duadic {

enum class DuadicKind { odd_like, even_like };

// Splitting of Z_n \ {0} into T_{[r,m,S]} and T_{[r,m,S']}, swapped by
// multiplication by mu = -1 (= n - 1). The even-like variant adds 0 to both.
struct DuadicPair {
    WeightClassSpec spec;
    DefiningSet first;   // from S
    DefiningSet second;  // from S'
    DuadicKind kind = DuadicKind::odd_like;
    std::uint64_t multiplier = 0;
};

// T_S and T_S' split Z_n \ {0} and are swapped by -1. Decided in Z_r by
// Z_r \ S == (t - S) mod r (t = m mod r); when m < r that test is only
// sufficient and a failing spec is re-checked in Z_n.
bool is_duadic(const WeightClassSpec& spec);

// The Z_r criterion alone; the form the parameter theorems assume.
bool is_duadic_zr(const WeightClassSpec& spec);

// Same question asked in Z_n: T_S and T_S' partition Z_n \ {0} and
// -T_S == T_S'. Linear in n.
bool is_duadic_zn(const WeightClassSpec& spec);

// Description of the first failed duadic condition, empty if duadic.
std::string duadic_failure(const WeightClassSpec& spec);

// Throws std::invalid_argument with the failed condition for non-duadic specs.
DuadicPair build_pair(const WeightClassSpec& spec, DuadicKind kind = DuadicKind::odd_like);

enum class Theorem { none, T4, T7, T8, T9 };
std::string theorem_name(Theorem th);

// One matched parameter theorem. Bounds are 2^{(m-1)/2} + offset.
struct TheoremMatch {
    Theorem theorem = Theorem::none;
    Side hypothesis_side = Side::S;  // S: S meets the lemma hypothesis; S': the complement does
    ResidueCase residue_case = ResidueCase::any;
    unsigned d_offset = 0;
    unsigned dual_offset = 0;
    unsigned ext_offset = 0;
    LemmaWindow window;  // certifying difference v and run length B
};

struct TheoremVerdict {
    Theorem theorem = Theorem::none;
    Side hypothesis_side = Side::S;
    ResidueCase residue_case = ResidueCase::any;
    std::uint64_t d_lower = 0;
    std::uint64_t d_dual_lower = 0;
    std::uint64_t d_ext_lower = 0;
    std::uint64_t v = 0;
    std::uint64_t run_length = 0;
    // largest d_lower among all matching theorems and the theorem giving it
    std::uint64_t best_d_lower = 0;
    Theorem best_theorem = Theorem::none;
    std::vector<TheoremMatch> matches;  // in precedence order T4, T7, T8, T9
    std::vector<std::string> notes;
};

// All theorem hypotheses met by (r, m, S), in precedence order.
std::vector<TheoremMatch> theorem_matches(const WeightClassSpec& spec);

// First matching theorem in the order T4, T7, T8, T9 with its bounds;
// Theorem::none when nothing matches. Requires a checked duadic spec
// (std::invalid_argument otherwise).
TheoremVerdict classify(const WeightClassSpec& spec);

// Half-size subsets S of Z_r with Z_r \ S == (t - S) mod r, ascending in
// lexicographic order. Requires even r in [2, 16] and odd t < r.
std::vector<std::vector<unsigned>> enumerate_catalog(unsigned r, unsigned t);

// The eight r = 8 sets published per odd residue t (all contain 0).
std::vector<std::vector<unsigned>> published_r8_families(unsigned t);

}  // namespace duadic
