#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "duadic/bitvec.hpp"
#include "duadic/bounds.hpp"
#include "duadic/code.hpp"

namespace duadic {

// Full enumeration is limited to 2^24 codewords.
inline constexpr std::size_t kEnumerationBudget = 24;

class BudgetExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

// Minimum-distance interval with evidence. `witness` is a verified codeword
// of weight `upper`.
struct CertifiedBound {
    std::uint64_t lower = 1;
    std::uint64_t upper = 0;
    bool exact = false;
    BitVec witness;
    std::string method;
    std::optional<std::uint64_t> min_odd_weight;  // exhaustive methods only
    std::optional<BchCertificate> certificate;
    std::uint64_t seed = 0;
    std::uint64_t effort = 0;
};

struct WeightDistribution {
    std::vector<std::uint64_t> counts;  // counts[w] = A_w, w = 0..length

    std::uint64_t total() const;
    bool all_even() const;
    bool doubly_even() const;
    // smallest nonzero weight with A_w > 0, or nullopt for the zero code
    std::optional<std::size_t> min_nonzero_weight() const;
};

// Enumerates all 2^k messages in Gray-code order (one row XOR per codeword),
// partitioned over workers. Throws BudgetExceeded when k > 24.
WeightDistribution weight_distribution(const GeneratorMatrix& g);
WeightDistribution weight_distribution(const CyclicCode& c);
WeightDistribution weight_distribution(const ExtendedCode& e);

// Exact minimum distance and minimum odd weight by full enumeration.
// Throws BudgetExceeded when k > 24 and std::domain_error for k = 0.
CertifiedBound exact_min_distance(const GeneratorMatrix& g);
CertifiedBound exact_min_distance(const CyclicCode& c);
CertifiedBound exact_min_distance(const ExtendedCode& e);

struct SearchOptions {
    std::uint64_t effort = 10;  // random information sets tried
    std::uint64_t seed = 1;
    std::vector<std::uint64_t> v_candidates;  // empty: default candidates plus v = 1
};

// Lower end from the best BCH certificate (rounded up to even when every
// codeword has even weight); upper end from an information-set search over
// messages of weight <= 3 in random systematic forms. With effort 0 the upper
// end is the weight of the generator polynomial.
CertifiedBound bounded_min_distance(const CyclicCode& c, const SearchOptions& options = {});
CertifiedBound bounded_min_distance(const ExtendedCode& e, const SearchOptions& options = {});

// Information-set search alone; returns (weight, codeword).
std::pair<std::uint64_t, BitVec> information_set_search(const GeneratorMatrix& g, std::uint64_t effort,
                                                         std::uint64_t seed);

}  // namespace duadic
