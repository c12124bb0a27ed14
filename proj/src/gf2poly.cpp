#include "duadic/gf2poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "duadic/parallel.hpp"
#include "duadic/simd.hpp"

namespace duadic {
namespace {

// dst ^= src << shift. dst must be large enough to hold the shifted source.
void xor_shifted(std::vector<std::uint64_t>& dst, std::span<const std::uint64_t> src, std::size_t shift) {
    const std::size_t ws = shift >> 6;
    const unsigned bs = shift & 63;
    if (bs == 0) {
        simd::xor_into(std::span(dst).subspan(ws, src.size()), src);
        return;
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[ws + i] ^= (src[i] << bs) | carry;
        carry = src[i] >> (64 - bs);
    }
    if (carry) dst[ws + src.size()] ^= carry;
}

}  // namespace

void BinaryPoly::normalize() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinaryPoly BinaryPoly::monomial(std::size_t exponent) {
    std::vector<std::uint64_t> w(exponent / 64 + 1, 0);
    w[exponent / 64] = std::uint64_t{1} << (exponent % 64);
    return BinaryPoly(std::move(w));
}

BinaryPoly BinaryPoly::from_exponents(std::initializer_list<std::size_t> exponents) {
    return from_exponents(std::span<const std::size_t>(exponents.begin(), exponents.size()));
}

BinaryPoly BinaryPoly::from_exponents(std::span<const std::size_t> exponents) {
    std::size_t top = 0;
    for (std::size_t e : exponents) top = std::max(top, e);
    std::vector<std::uint64_t> w(top / 64 + 1, 0);
    for (std::size_t e : exponents) w[e / 64] ^= std::uint64_t{1} << (e % 64);
    return BinaryPoly(std::move(w));
}

BinaryPoly BinaryPoly::from_words(std::vector<std::uint64_t> words) { return BinaryPoly(std::move(words)); }

BinaryPoly BinaryPoly::from_bits(const BitVec& bits) {
    return BinaryPoly(std::vector<std::uint64_t>(bits.words().begin(), bits.words().end()));
}

BinaryPoly BinaryPoly::from_hex(std::string_view hex) {
    std::string_view digits = hex;
    if (digits.size() >= 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) digits.remove_prefix(2);
    return from_bits(BitVec::from_hex(hex, std::max<std::size_t>(digits.size(), 1) * 4));
}

BinaryPoly BinaryPoly::x_pow_plus_one(std::size_t n) {
    BinaryPoly p = monomial(n);
    p.words_[0] ^= 1;
    p.normalize();
    return p;
}

std::optional<std::size_t> BinaryPoly::degree() const noexcept {
    if (words_.empty()) return std::nullopt;
    return (words_.size() - 1) * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_.back()));
}

std::size_t BinaryPoly::weight() const noexcept { return simd::popcount(words_); }

std::vector<std::size_t> BinaryPoly::exponents() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

BitVec BinaryPoly::to_bits(std::size_t nbits) const {
    if (auto d = degree(); d && *d >= nbits) throw std::invalid_argument("polynomial degree exceeds vector length");
    BitVec v(nbits);
    std::copy(words_.begin(), words_.end(), v.words().begin());
    return v;
}

std::string BinaryPoly::to_hex() const { return words_to_hex(words_); }

std::string BinaryPoly::to_string() const {
    if (is_zero()) return "0";
    auto exps = exponents();
    std::string out;
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
        if (!out.empty()) out += " + ";
        if (*it == 0)
            out += "1";
        else if (*it == 1)
            out += "x";
        else
            out += "x^" + std::to_string(*it);
    }
    return out;
}

BinaryPoly& BinaryPoly::operator+=(const BinaryPoly& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    simd::xor_into(std::span(words_).first(other.words_.size()), other.words_);
    normalize();
    return *this;
}

BinaryPoly operator*(const BinaryPoly& a, const BinaryPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // iterate over the sparser operand, shift-XOR the denser one
    const bool a_sparse = a.weight() <= b.weight();
    const BinaryPoly& sparse = a_sparse ? a : b;
    const BinaryPoly& dense = a_sparse ? b : a;
    std::vector<std::uint64_t> out(a.words_.size() + b.words_.size() + 1, 0);
    for (std::size_t e : sparse.exponents()) xor_shifted(out, dense.words_, e);
    return BinaryPoly(std::move(out));
}

BinaryPoly poly_mul(const BinaryPoly& a, const BinaryPoly& b) { return a * b; }

std::pair<BinaryPoly, BinaryPoly> poly_divmod(const BinaryPoly& a, const BinaryPoly& b) {
    const auto db = b.degree();
    if (!db) throw std::domain_error("polynomial division by zero");
    const auto da = a.degree();
    if (!da || *da < *db) return {BinaryPoly{}, a};

    std::vector<std::uint64_t> rem(a.words().begin(), a.words().end());
    rem.push_back(0);
    std::vector<std::uint64_t> quot((*da - *db) / 64 + 1, 0);
    const auto divisor = b.words();
    for (std::size_t d = *da + 1; d-- > *db;) {
        if (!((rem[d >> 6] >> (d & 63)) & 1u)) continue;
        const std::size_t shift = d - *db;
        quot[shift >> 6] |= std::uint64_t{1} << (shift & 63);
        xor_shifted(rem, divisor, shift);
    }
    return {BinaryPoly::from_words(std::move(quot)), BinaryPoly::from_words(std::move(rem))};
}

BinaryPoly poly_mod(const BinaryPoly& a, const BinaryPoly& b) { return poly_divmod(a, b).second; }

BinaryPoly reciprocal(const BinaryPoly& p) {
    const auto d = p.degree();
    if (!d) throw std::domain_error("reciprocal of the zero polynomial");
    std::vector<std::uint64_t> out(*d / 64 + 1, 0);
    for (std::size_t e : p.exponents()) {
        const std::size_t r = *d - e;
        out[r >> 6] |= std::uint64_t{1} << (r & 63);
    }
    return BinaryPoly::from_words(std::move(out));
}

BinaryPoly check_poly(const BinaryPoly& g, std::size_t n) {
    auto [h, rem] = poly_divmod(BinaryPoly::x_pow_plus_one(n), g);
    if (!rem.is_zero()) throw std::invalid_argument("generator does not divide x^n + 1");
    return h;
}

FieldElem evaluate(const FieldGF2m& field, const BinaryPoly& p, FieldElem x) {
    const auto d = p.degree();
    if (!d) return field.zero();
    FieldElem acc = field.zero();
    for (std::size_t i = *d + 1; i-- > 0;) {
        acc = field.mul(acc, x);
        if (p.coeff(i)) acc = FieldGF2m::add(acc, field.one());
    }
    return acc;
}

BinaryPoly minimal_poly(const FieldGF2m& field, const CyclotomicCoset& coset) {
    std::vector<FieldElem> coeffs{field.one()};
    for (std::uint32_t i : coset.elements) {
        const FieldElem root = field.pow_alpha(i);
        std::vector<FieldElem> next(coeffs.size() + 1, field.zero());
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            next[j + 1] = FieldGF2m::add(next[j + 1], coeffs[j]);
            next[j] = FieldGF2m::add(next[j], field.mul(root, coeffs[j]));
        }
        coeffs = std::move(next);
    }
    std::vector<std::uint64_t> words(coeffs.size() / 64 + 1, 0);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].bits > 1)
            throw std::logic_error("minimal polynomial coefficient outside GF(2); exponent set of leader " +
                                   std::to_string(coset.leader) + " is not a cyclotomic coset");
        if (coeffs[j].bits) words[j / 64] |= std::uint64_t{1} << (j % 64);
    }
    return BinaryPoly::from_words(std::move(words));
}

BinaryPoly generator_poly(const FieldGF2m& field, const DefiningSet& T) {
    if (T.modulus() != field.order()) throw std::invalid_argument("defining set modulus differs from field order");
    if (!T.closed_under_doubling()) throw std::invalid_argument("defining set is not closed under doubling");

    const auto leaders = T.leaders();
    std::vector<BinaryPoly> factors(leaders.size());
    parallel_chunks(leaders.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) factors[i] = minimal_poly(field, coset(leaders[i], T.modulus()));
    });
    BinaryPoly g = BinaryPoly::one();
    for (const auto& f : factors) g = g * f;
    if (g.degree().value_or(0) != T.size()) throw std::logic_error("generator degree differs from |T|");
    return g;
}

}  // namespace duadic
