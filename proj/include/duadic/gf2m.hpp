#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace duadic {

// Element of GF(2^m) in polynomial basis: bit i is the coefficient of alpha^i.
struct FieldElem {
    std::uint32_t bits = 0;

    bool is_zero() const noexcept { return bits == 0; }
    friend bool operator==(FieldElem, FieldElem) = default;
};

// GF(2^m), 2 <= m <= 20, built on the numerically smallest primitive
// polynomial of degree m. Immutable after construction.
class FieldGF2m {
public:
    static constexpr unsigned kMinDegree = 2;
    static constexpr unsigned kMaxDegree = 20;

    explicit FieldGF2m(unsigned m);

    unsigned degree() const noexcept { return m_; }
    // Multiplicative group order n = 2^m - 1.
    std::uint32_t order() const noexcept { return n_; }
    // Modulus as a coefficient mask, bit i = coefficient of x^i.
    std::uint32_t modulus() const noexcept { return modulus_; }
    std::string modulus_hex() const;

    FieldElem zero() const noexcept { return {}; }
    FieldElem one() const noexcept { return {1}; }
    FieldElem alpha() const noexcept { return pow_alpha(1); }

    FieldElem element(std::uint32_t bits) const;  // throws if bits >= 2^m

    static FieldElem add(FieldElem a, FieldElem b) noexcept { return {a.bits ^ b.bits}; }
    FieldElem mul(FieldElem a, FieldElem b) const noexcept {
        if (a.is_zero() || b.is_zero()) return {};
        std::uint32_t e = log_[a.bits] + log_[b.bits];
        if (e >= n_) e -= n_;
        return {antilog_[e]};
    }
    FieldElem pow_alpha(std::uint64_t e) const noexcept { return {antilog_[e % n_]}; }
    FieldElem pow(FieldElem a, std::uint64_t e) const;
    FieldElem inverse(FieldElem a) const;  // domain_error on zero
    // Discrete log base alpha; std::domain_error for the zero element.
    std::uint32_t log(FieldElem a) const;

private:
    unsigned m_;
    std::uint32_t n_;
    std::uint32_t modulus_;
    std::vector<std::uint32_t> log_;      // indexed by element bits; entry 0 unused
    std::vector<std::uint32_t> antilog_;  // indexed by exponent in [0, n)
};

// Distinct prime factors of x, ascending (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t x);

// True iff `poly` (degree m, as a coefficient mask) is primitive over GF(2):
// x has multiplicative order exactly 2^m - 1 modulo poly.
bool is_primitive_poly(std::uint32_t poly, unsigned m);

// Numerically smallest primitive polynomial of degree m.
std::uint32_t smallest_primitive_poly(unsigned m);

// 2^gcd(m, l) - 1, which equals gcd(2^m - 1, 2^l - 1).
std::uint64_t mersenne_gcd(unsigned m, unsigned l);

}  // namespace duadic
