#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace duadic {

// Fixed-length bit vector, bit i lives in word i / 64 at position i % 64.
// Bits above size() in the last word are always zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : words_(word_count_for(nbits), 0), nbits_(nbits) {}

    static constexpr std::size_t word_count_for(std::size_t nbits) { return (nbits + 63) / 64; }
    static BitVec from_indices(std::size_t nbits, std::span<const std::size_t> indices);
    // Parses an LSB-first hex mask ("0x1B"); throws std::invalid_argument on
    // malformed input or bits at or above nbits.
    static BitVec from_hex(std::string_view hex, std::size_t nbits);

    std::size_t size() const noexcept { return nbits_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void assign(std::size_t i, bool value) noexcept { value ? set(i) : reset(i); }
    void clear() noexcept;
    void fill() noexcept;
    void resize(std::size_t nbits);

    std::size_t count() const noexcept;
    bool any() const noexcept;
    bool none() const noexcept { return !any(); }
    bool is_subset_of(const BitVec& other) const noexcept;

    std::optional<std::size_t> find_first() const noexcept { return find_next(0); }
    std::optional<std::size_t> find_next(std::size_t from) const noexcept;
    std::optional<std::size_t> find_last() const noexcept;

    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const;
    std::string to_hex() const;
    std::string to_bitstring() const;  // c_0 c_1 ... c_{n-1}

    BitVec& operator^=(const BitVec& other) noexcept;
    BitVec& operator&=(const BitVec& other) noexcept;
    BitVec& operator|=(const BitVec& other) noexcept;

    friend BitVec operator^(BitVec a, const BitVec& b) noexcept { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) noexcept { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) noexcept { return a |= b; }
    friend bool operator==(const BitVec&, const BitVec&) = default;

    void clear_tail() noexcept;

private:
    std::vector<std::uint64_t> words_;
    std::size_t nbits_ = 0;
};

// popcount(a & b); sizes must match.
std::size_t and_count(const BitVec& a, const BitVec& b) noexcept;

// Formats an LSB-first word mask as "0x..." (most significant digit first).
std::string words_to_hex(std::span<const std::uint64_t> words);

}  // namespace duadic
