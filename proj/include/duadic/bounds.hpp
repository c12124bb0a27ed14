#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "duadic/cyclotomic.hpp"

namespace duadic {

// BCH evidence: {start + i*v mod n : 0 <= i < run_length} lies inside T and
// the run cannot be extended at either end. Any code with defining set T then
// has minimum distance at least run_length + 1.
struct BchCertificate {
    std::uint64_t v = 1;
    std::uint64_t start = 0;
    std::uint64_t run_length = 0;
    std::uint64_t d_lower = 1;
    // v^{-1} mod n: relative to gamma = alpha^{v^{-1}} the run is consecutive.
    std::uint64_t gamma_exponent = 1;
};

// Longest progression with common difference v inside T. Among runs of
// maximal length the smallest start is reported. When T = Z_n the run is the
// whole cycle (run_length = n, d_lower = n + 1: the code is {0}).
// Throws std::invalid_argument if gcd(v, n) != 1.
BchCertificate max_ap_run(const DefiningSet& T, std::uint64_t v);

// 2^{(m-1)/2} - 1 and 2^{(m+1)/2} - 1 for odd m; for even m the nearest
// analogues 2^{m/2} - 1, 2^{m/2 + 1} - 1. Non-units and duplicates dropped.
std::vector<std::uint64_t> default_v_candidates(unsigned m);

// Best certificate over the candidates; ties keep the earliest candidate.
BchCertificate best_certificate(const DefiningSet& T, std::span<const std::uint64_t> candidates);

// Sweep over every unit v (one per class under v -> 2v, v -> -v, which give
// equal run lengths because T is closed under doubling). n must be < 2^14.
BchCertificate exhaustive_certificate(const DefiningSet& T);

// Re-verifies a certificate by direct membership of every run element.
bool certificate_holds(const DefiningSet& T, const BchCertificate& cert);

enum class Lemma { L3, L4, L5, L6 };
enum class Side { S, S_prime };
// Residue of m modulo 2r relative to t = m mod r.
enum class ResidueCase { any, m_equiv_t, m_equiv_t_plus_r };

std::string lemma_name(Lemma lemma);
std::string side_name(Side side);
std::string residue_case_name(ResidueCase rc);

// Raised when a spec does not meet a lemma's hypotheses.
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Empty when (r, m, S) satisfies the lemma's hypotheses on t, S and S';
// otherwise a description of the first failed condition.
std::string lemma_hypothesis_failure(const WeightClassSpec& spec, Lemma lemma);

struct LemmaWindow {
    std::uint64_t v = 0;       // common difference of the progression
    std::uint64_t window = 0;  // B: the claim is {a*v : 1 <= a <= B} inside T
    ResidueCase branch = ResidueCase::any;
};

// v and B the lemma asserts for the given side. Requires odd m >= 3.
LemmaWindow lemma_window(unsigned r, unsigned m, Lemma lemma, Side side);

struct LemmaCheck {
    Lemma lemma;
    Side side;
    LemmaWindow window;
    bool holds = false;
    std::optional<std::uint64_t> first_missing;  // smallest a with a*v not in T
};

// Checks {a*v mod n : 1 <= a <= B} against T_{[r,m,S]} (side S) or
// T_{[r,m,S']} (side S'). Throws HypothesisError when the lemma does not apply.
LemmaCheck verify_lemma_membership(const WeightClassSpec& spec, Lemma lemma, Side side);

struct SqrtBoundReport {
    std::uint64_t n = 0;
    std::uint64_t d0_floor_sqrt = 0;                // smallest d with d^2 >= n
    std::optional<std::uint64_t> d0_mu_minus1;      // smallest d with d^2 - d + 1 >= n
    std::uint64_t d0_odd_floor_sqrt = 0;            // same, restricted to odd d
    std::optional<std::uint64_t> d0_odd_mu_minus1;
};

// Lower bounds on the minimum odd weight of an odd-like duadic pair of length
// n. Throws std::invalid_argument unless n is odd and >= 3.
SqrtBoundReport sqrt_bounds(std::uint64_t n, bool mu_is_minus1);

}  // namespace duadic
