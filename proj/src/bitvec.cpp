#include "duadic/bitvec.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "duadic/simd.hpp"

namespace duadic {

BitVec BitVec::from_indices(std::size_t nbits, std::span<const std::size_t> indices) {
    BitVec v(nbits);
    for (std::size_t i : indices) {
        if (i >= nbits) throw std::out_of_range("bit index out of range");
        v.set(i);
    }
    return v;
}

BitVec BitVec::from_hex(std::string_view hex, std::size_t nbits) {
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) hex.remove_prefix(2);
    if (hex.empty()) throw std::invalid_argument("empty hex mask");
    BitVec v(nbits);
    std::size_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
        const int c = std::tolower(static_cast<unsigned char>(*it));
        int nibble;
        if (c >= '0' && c <= '9')
            nibble = c - '0';
        else if (c >= 'a' && c <= 'f')
            nibble = c - 'a' + 10;
        else
            throw std::invalid_argument("invalid hex digit in mask");
        for (int b = 0; b < 4; ++b) {
            if (!((nibble >> b) & 1)) continue;
            if (bit + b >= nbits) throw std::invalid_argument("hex mask exceeds vector length");
            v.set(bit + b);
        }
    }
    return v;
}

void BitVec::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

void BitVec::fill() noexcept {
    std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
    clear_tail();
}

void BitVec::resize(std::size_t nbits) {
    const std::size_t old = nbits_;
    words_.resize(word_count_for(nbits), 0);
    nbits_ = nbits;
    if (nbits < old) clear_tail();
}

void BitVec::clear_tail() noexcept {
    if (nbits_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
}

std::size_t BitVec::count() const noexcept { return simd::popcount(words_); }

bool BitVec::any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

bool BitVec::is_subset_of(const BitVec& other) const noexcept { return simd::is_subset(words_, other.words_); }

std::optional<std::size_t> BitVec::find_next(std::size_t from) const noexcept {
    if (from >= nbits_) return std::nullopt;
    std::size_t w = from >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (bits) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (++w == words_.size()) return std::nullopt;
        bits = words_[w];
    }
}

std::optional<std::size_t> BitVec::find_last() const noexcept {
    for (std::size_t w = words_.size(); w-- > 0;)
        if (words_[w]) return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
    return std::nullopt;
}

std::vector<std::size_t> BitVec::indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each_set([&](std::size_t i) { out.push_back(i); });
    return out;
}

std::string BitVec::to_hex() const { return words_to_hex(words_); }

std::string BitVec::to_bitstring() const {
    std::string s(nbits_, '0');
    for_each_set([&](std::size_t i) { s[i] = '1'; });
    return s;
}

BitVec& BitVec::operator^=(const BitVec& other) noexcept {
    simd::xor_into(words_, other.words_);
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

std::size_t and_count(const BitVec& a, const BitVec& b) noexcept { return simd::and_popcount(a.words(), b.words()); }

std::string words_to_hex(std::span<const std::uint64_t> words) {
    static constexpr char kDigits[] = "0123456789ABCDEF";
    std::string out;
    bool leading = true;
    for (std::size_t w = words.size(); w-- > 0;) {
        for (int nib = 15; nib >= 0; --nib) {
            const unsigned d = static_cast<unsigned>((words[w] >> (nib * 4)) & 0xF);
            if (leading && d == 0) continue;
            leading = false;
            out.push_back(kDigits[d]);
        }
    }
    if (out.empty()) out = "0";
    return "0x" + out;
}

}  // namespace duadic
