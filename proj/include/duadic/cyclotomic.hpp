#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "duadic/bitvec.hpp"

namespace duadic {

// Number of ones in the binary expansion of j.
inline unsigned weight2(std::uint64_t j) noexcept { return static_cast<unsigned>(std::popcount(j)); }

// Inverse of a modulo n, or nullopt when gcd(a, n) != 1.
std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t n);

// 2-cyclotomic coset {s * 2^t mod n}; the leader is the smallest member.
struct CyclotomicCoset {
    std::uint32_t leader = 0;
    std::vector<std::uint32_t> elements;  // ascending

    std::size_t size() const noexcept { return elements.size(); }
};

// Coset of s modulo odd n. Throws std::invalid_argument if s >= n or n is even.
CyclotomicCoset coset(std::uint32_t s, std::uint32_t n);

// All cosets modulo n, ordered by leader.
std::vector<CyclotomicCoset> all_cosets(std::uint32_t n);

// Subset of Z_n stored as an n-bit bitmap.
class DefiningSet {
public:
    DefiningSet() = default;
    explicit DefiningSet(std::uint32_t n) : n_(n), bits_(n) {}
    DefiningSet(std::uint32_t n, BitVec bits);

    static DefiningSet from_members(std::uint32_t n, std::span<const std::uint32_t> members);
    // Union of the cosets named by `leaders` (each expanded by doubling).
    static DefiningSet from_leaders(std::uint32_t n, std::span<const std::uint32_t> leaders);
    static DefiningSet full(std::uint32_t n);  // Z_n
    static DefiningSet nonzero(std::uint32_t n);  // Z_n \ {0}

    std::uint32_t modulus() const noexcept { return n_; }
    const BitVec& bits() const noexcept { return bits_; }
    bool contains(std::uint64_t j) const noexcept { return bits_.test(static_cast<std::size_t>(j % n_)); }
    std::size_t size() const noexcept { return bits_.count(); }
    bool empty() const noexcept { return bits_.none(); }

    bool closed_under_doubling() const;
    std::vector<std::uint32_t> members() const;
    // Smallest element of each coset contained in the set, ascending. Only
    // meaningful for sets closed under doubling.
    std::vector<std::uint32_t> leaders() const;

    DefiningSet negated() const;                    // {-j mod n}
    DefiningSet scaled(std::uint64_t unit) const;   // {u*j mod n}
    DefiningSet complement() const;                 // Z_n \ T
    DefiningSet with_zero() const;
    DefiningSet without_zero() const;

    bool disjoint_from(const DefiningSet& other) const;
    DefiningSet united(const DefiningSet& other) const;

    friend bool operator==(const DefiningSet&, const DefiningSet&) = default;

private:
    std::uint32_t n_ = 0;
    BitVec bits_;
};

// Parameters (r, m, S) of a weight-class defining set
// T = {1 <= j <= n-1 : w2(j) mod r in S}, n = 2^m - 1.
class WeightClassSpec {
public:
    // Validated form: r even >= 2, m odd in [3, 20], S a set of r/2 distinct
    // residues below r. Throws std::invalid_argument naming the violation.
    static WeightClassSpec make(unsigned r, unsigned m, std::vector<unsigned> residues);
    // Relaxed form for exploration: r >= 1, m in [2, 20], distinct residues
    // below r. Theorem classification is disabled for these.
    static WeightClassSpec unchecked(unsigned r, unsigned m, std::vector<unsigned> residues);

    unsigned r() const noexcept { return r_; }
    unsigned m() const noexcept { return m_; }
    unsigned t() const noexcept { return m_ % r_; }
    std::uint32_t n() const noexcept { return (std::uint32_t{1} << m_) - 1; }
    const std::vector<unsigned>& residues() const noexcept { return residues_; }
    bool contains_residue(unsigned x) const noexcept;
    bool checked() const noexcept { return checked_; }

    std::string residues_string() const;  // "0,2,3,4"

    friend bool operator==(const WeightClassSpec&, const WeightClassSpec&) = default;

private:
    WeightClassSpec(unsigned r, unsigned m, std::vector<unsigned> residues, bool checked);

    unsigned r_ = 2;
    unsigned m_ = 3;
    std::vector<unsigned> residues_;  // ascending
    bool checked_ = true;
};

// T_{[r,m,S]}; never contains 0 and is closed under doubling.
DefiningSet defining_set(const WeightClassSpec& spec);

// Same spec with S replaced by Z_r \ S.
WeightClassSpec complement_spec(const WeightClassSpec& spec);

}  // namespace duadic
