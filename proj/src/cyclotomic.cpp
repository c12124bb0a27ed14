#include "duadic/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "duadic/parallel.hpp"

namespace duadic {

std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t n) {
    if (n == 0) return std::nullopt;
    if (n == 1) return 0;
    std::int64_t old_r = static_cast<std::int64_t>(a % n), r = static_cast<std::int64_t>(n);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    }
    if (old_r != 1) return std::nullopt;
    const auto nn = static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(((old_s % nn) + nn) % nn);
}

CyclotomicCoset coset(std::uint32_t s, std::uint32_t n) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("coset modulus must be odd");
    if (s >= n) throw std::invalid_argument("coset representative must lie in [0, n)");
    CyclotomicCoset c;
    std::uint64_t x = s;
    do {
        c.elements.push_back(static_cast<std::uint32_t>(x));
        x = (2 * x) % n;
    } while (x != s);
    std::sort(c.elements.begin(), c.elements.end());
    c.leader = c.elements.front();
    return c;
}

std::vector<CyclotomicCoset> all_cosets(std::uint32_t n) {
    std::vector<CyclotomicCoset> out;
    BitVec seen(n);
    for (std::uint32_t s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        out.push_back(coset(s, n));
        for (std::uint32_t e : out.back().elements) seen.set(e);
    }
    return out;
}

DefiningSet::DefiningSet(std::uint32_t n, BitVec bits) : n_(n), bits_(std::move(bits)) {
    if (bits_.size() != n) throw std::invalid_argument("defining-set bitmap length must equal n");
}

DefiningSet DefiningSet::from_members(std::uint32_t n, std::span<const std::uint32_t> members) {
    DefiningSet t(n);
    for (std::uint32_t j : members) {
        if (j >= n) throw std::invalid_argument("defining-set member out of range");
        t.bits_.set(j);
    }
    return t;
}

DefiningSet DefiningSet::from_leaders(std::uint32_t n, std::span<const std::uint32_t> leaders) {
    DefiningSet t(n);
    for (std::uint32_t s : leaders)
        for (std::uint32_t e : coset(s, n).elements) t.bits_.set(e);
    return t;
}

DefiningSet DefiningSet::full(std::uint32_t n) {
    DefiningSet t(n);
    t.bits_.fill();
    return t;
}

DefiningSet DefiningSet::nonzero(std::uint32_t n) {
    DefiningSet t = full(n);
    if (n) t.bits_.reset(0);
    return t;
}

bool DefiningSet::closed_under_doubling() const {
    bool closed = true;
    bits_.for_each_set([&](std::size_t j) {
        if (!bits_.test((2 * j) % n_)) closed = false;
    });
    return closed;
}

std::vector<std::uint32_t> DefiningSet::members() const {
    std::vector<std::uint32_t> out;
    bits_.for_each_set([&](std::size_t j) { out.push_back(static_cast<std::uint32_t>(j)); });
    return out;
}

std::vector<std::uint32_t> DefiningSet::leaders() const {
    std::vector<std::uint32_t> out;
    BitVec seen(n_);
    bits_.for_each_set([&](std::size_t j) {
        if (seen.test(j)) return;
        out.push_back(static_cast<std::uint32_t>(j));
        std::uint64_t x = j;
        do {
            seen.set(static_cast<std::size_t>(x));
            x = (2 * x) % n_;
        } while (x != j);
    });
    return out;
}

DefiningSet DefiningSet::negated() const {
    DefiningSet out(n_);
    bits_.for_each_set([&](std::size_t j) { out.bits_.set(j == 0 ? 0 : n_ - j); });
    return out;
}

DefiningSet DefiningSet::scaled(std::uint64_t unit) const {
    DefiningSet out(n_);
    const std::uint64_t u = unit % n_;
    bits_.for_each_set([&](std::size_t j) { out.bits_.set(static_cast<std::size_t>((u * j) % n_)); });
    return out;
}

DefiningSet DefiningSet::complement() const {
    DefiningSet out = full(n_);
    out.bits_ ^= bits_;
    return out;
}

DefiningSet DefiningSet::with_zero() const {
    DefiningSet out = *this;
    if (n_) out.bits_.set(0);
    return out;
}

DefiningSet DefiningSet::without_zero() const {
    DefiningSet out = *this;
    if (n_) out.bits_.reset(0);
    return out;
}

bool DefiningSet::disjoint_from(const DefiningSet& other) const { return and_count(bits_, other.bits_) == 0; }

DefiningSet DefiningSet::united(const DefiningSet& other) const {
    DefiningSet out = *this;
    out.bits_ |= other.bits_;
    return out;
}

WeightClassSpec::WeightClassSpec(unsigned r, unsigned m, std::vector<unsigned> residues, bool checked)
    : r_(r), m_(m), residues_(std::move(residues)), checked_(checked) {}

namespace {

std::vector<unsigned> canonical_residues(unsigned r, std::vector<unsigned> residues) {
    std::sort(residues.begin(), residues.end());
    if (std::adjacent_find(residues.begin(), residues.end()) != residues.end())
        throw std::invalid_argument("S contains duplicate residues");
    if (!residues.empty() && residues.back() >= r)
        throw std::invalid_argument("S residues must be < r = " + std::to_string(r));
    return residues;
}

}  // namespace

WeightClassSpec WeightClassSpec::make(unsigned r, unsigned m, std::vector<unsigned> residues) {
    if (r < 2 || r % 2 != 0) throw std::invalid_argument("r must be an even integer >= 2, got " + std::to_string(r));
    if (m % 2 == 0) throw std::invalid_argument("m must be odd, got " + std::to_string(m));
    if (m < 3 || m > 20) throw std::invalid_argument("m must be in [3, 20], got " + std::to_string(m));
    residues = canonical_residues(r, std::move(residues));
    if (residues.size() != r / 2)
        throw std::invalid_argument("|S| must equal r/2 = " + std::to_string(r / 2) + ", got " +
                                    std::to_string(residues.size()));
    return WeightClassSpec(r, m, std::move(residues), true);
}

WeightClassSpec WeightClassSpec::unchecked(unsigned r, unsigned m, std::vector<unsigned> residues) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    if (m < 2 || m > 20) throw std::invalid_argument("m must be in [2, 20], got " + std::to_string(m));
    residues = canonical_residues(r, std::move(residues));
    return WeightClassSpec(r, m, std::move(residues), false);
}

bool WeightClassSpec::contains_residue(unsigned x) const noexcept {
    return std::binary_search(residues_.begin(), residues_.end(), x % r_);
}

std::string WeightClassSpec::residues_string() const {
    std::string out;
    for (std::size_t i = 0; i < residues_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(residues_[i]);
    }
    return out;
}

DefiningSet defining_set(const WeightClassSpec& spec) {
    const std::uint32_t n = spec.n();
    // weight -> membership lookup; weights of j < n are at most m - 1
    std::vector<std::uint8_t> in_s(spec.m() + 1, 0);
    for (unsigned w = 0; w <= spec.m(); ++w) in_s[w] = spec.contains_residue(w);

    BitVec bits(n);
    auto words = bits.words();
    parallel_chunks(words.size(), [&](std::size_t wb, std::size_t we) {
        for (std::size_t w = wb; w < we; ++w) {
            std::uint64_t word = 0;
            const std::size_t base = w * 64;
            const std::size_t limit = std::min<std::size_t>(64, n - base);
            for (std::size_t b = 0; b < limit; ++b)
                if (in_s[weight2(base + b)]) word |= std::uint64_t{1} << b;
            words[w] = word;
        }
    });
    bits.reset(0);
    return DefiningSet(n, std::move(bits));
}

WeightClassSpec complement_spec(const WeightClassSpec& spec) {
    std::vector<unsigned> rest;
    for (unsigned x = 0; x < spec.r(); ++x)
        if (!spec.contains_residue(x)) rest.push_back(x);
    return spec.checked() ? WeightClassSpec::make(spec.r(), spec.m(), std::move(rest))
                          : WeightClassSpec::unchecked(spec.r(), spec.m(), std::move(rest));
}

}  // namespace duadic
