#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "duadic/bitvec.hpp"
#include "duadic/cyclotomic.hpp"
#include "duadic/gf2m.hpp"

namespace duadic {

// Polynomial over GF(2). Coefficient of x^i is bit i (LSB first), so a
// codeword c(x) and the vector (c_0, ..., c_{n-1}) share one representation.
// Storage never carries zero words above the degree; the zero polynomial has
// no words and no degree.
class BinaryPoly {
public:
    BinaryPoly() = default;

    static BinaryPoly one() { return monomial(0); }
    static BinaryPoly monomial(std::size_t exponent);
    static BinaryPoly from_exponents(std::initializer_list<std::size_t> exponents);
    static BinaryPoly from_exponents(std::span<const std::size_t> exponents);
    static BinaryPoly from_words(std::vector<std::uint64_t> words);
    static BinaryPoly from_bits(const BitVec& bits);
    static BinaryPoly from_hex(std::string_view hex);
    // x^n + 1
    static BinaryPoly x_pow_plus_one(std::size_t n);

    bool is_zero() const noexcept { return words_.empty(); }
    // nullopt for the zero polynomial
    std::optional<std::size_t> degree() const noexcept;
    bool coeff(std::size_t i) const noexcept {
        return (i >> 6) < words_.size() && ((words_[i >> 6] >> (i & 63)) & 1u);
    }
    std::size_t weight() const noexcept;
    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::vector<std::size_t> exponents() const;

    // Coefficients as a length-nbits vector; throws if degree >= nbits.
    BitVec to_bits(std::size_t nbits) const;
    std::string to_hex() const;
    std::string to_string() const;  // "x^3 + x + 1"

    BinaryPoly& operator+=(const BinaryPoly& other);
    friend BinaryPoly operator+(BinaryPoly a, const BinaryPoly& b) { return a += b; }
    friend BinaryPoly operator*(const BinaryPoly& a, const BinaryPoly& b);
    friend bool operator==(const BinaryPoly&, const BinaryPoly&) = default;

private:
    explicit BinaryPoly(std::vector<std::uint64_t> words) : words_(std::move(words)) { normalize(); }
    void normalize() noexcept;

    std::vector<std::uint64_t> words_;
};

BinaryPoly poly_mul(const BinaryPoly& a, const BinaryPoly& b);
// a = q*b + r with deg r < deg b. Throws std::domain_error when b is zero.
std::pair<BinaryPoly, BinaryPoly> poly_divmod(const BinaryPoly& a, const BinaryPoly& b);
BinaryPoly poly_mod(const BinaryPoly& a, const BinaryPoly& b);

// x^{deg p} p(1/x). Throws std::domain_error for the zero polynomial.
BinaryPoly reciprocal(const BinaryPoly& p);

// (x^n + 1) / g. Throws std::invalid_argument if g does not divide x^n + 1.
BinaryPoly check_poly(const BinaryPoly& g, std::size_t n);

// p(x) evaluated in GF(2^m) by Horner's rule.
FieldElem evaluate(const FieldGF2m& field, const BinaryPoly& p, FieldElem x);

// prod_{i in coset} (x - alpha^i), expanded in GF(2^m)[x]. Throws
// std::logic_error if any coefficient falls outside GF(2), which means the
// supplied exponents are not closed under doubling.
BinaryPoly minimal_poly(const FieldGF2m& field, const CyclotomicCoset& coset);

// Product of the minimal polynomials of the cosets making up T, multiplied in
// ascending leader order. Throws std::invalid_argument if T is not closed
// under doubling or its modulus differs from the field order.
BinaryPoly generator_poly(const FieldGF2m& field, const DefiningSet& T);

}  // namespace duadic
