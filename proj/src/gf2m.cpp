#include "duadic/gf2m.hpp"

#include <numeric>
#include <stdexcept>

#include "duadic/bitvec.hpp"

namespace duadic {
namespace {

// a * b mod poly for polynomials of degree < m over GF(2).
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t poly, unsigned m) {
    std::uint64_t result = 0;
    const std::uint64_t top = std::uint64_t{1} << m;
    while (b) {
        if (b & 1) result ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= poly;
    }
    return result;
}

std::uint64_t powmod_x(std::uint64_t e, std::uint64_t poly, unsigned m) {
    std::uint64_t result = 1;
    std::uint64_t base = (m == 1) ? (2 ^ poly) : 2;
    while (e) {
        if (e & 1) result = mulmod(result, base, poly, m);
        base = mulmod(base, base, poly, m);
        e >>= 1;
    }
    return result;
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= x; ++p) {
        if (x % p) continue;
        out.push_back(p);
        while (x % p == 0) x /= p;
    }
    if (x > 1) out.push_back(x);
    return out;
}

bool is_primitive_poly(std::uint32_t poly, unsigned m) {
    if (m == 0 || m > 31 || (poly >> m) != 1 || (poly & 1) == 0) return false;
    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    if (powmod_x(n, poly, m) != 1) return false;
    for (std::uint64_t q : prime_factors(n))
        if (powmod_x(n / q, poly, m) == 1) return false;
    return true;
}

std::uint32_t smallest_primitive_poly(unsigned m) {
    const std::uint32_t lead = std::uint32_t{1} << m;
    for (std::uint32_t low = 1; low < lead; low += 2)
        if (is_primitive_poly(lead | low, m)) return lead | low;
    throw std::logic_error("no primitive polynomial found");
}

std::uint64_t mersenne_gcd(unsigned m, unsigned l) { return (std::uint64_t{1} << std::gcd(m, l)) - 1; }

FieldGF2m::FieldGF2m(unsigned m) {
    if (m < kMinDegree || m > kMaxDegree)
        throw std::invalid_argument("field degree m must be in [2, 20], got " + std::to_string(m));
    m_ = m;
    n_ = (std::uint32_t{1} << m) - 1;
    modulus_ = smallest_primitive_poly(m);
    log_.assign(std::size_t{n_} + 1, 0);
    antilog_.assign(n_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t e = 0; e < n_; ++e) {
        antilog_[e] = x;
        log_[x] = e;
        x <<= 1;
        if (x >> m) x ^= modulus_;
    }
}

std::string FieldGF2m::modulus_hex() const {
    const std::uint64_t w = modulus_;
    return words_to_hex({&w, 1});
}

FieldElem FieldGF2m::element(std::uint32_t bits) const {
    if (bits > n_) throw std::invalid_argument("field element does not fit in m bits");
    return {bits};
}

FieldElem FieldGF2m::pow(FieldElem a, std::uint64_t e) const {
    if (a.is_zero()) return e == 0 ? one() : zero();
    return pow_alpha((std::uint64_t{log_[a.bits]} * (e % n_)) % n_);
}

FieldElem FieldGF2m::inverse(FieldElem a) const {
    if (a.is_zero()) throw std::domain_error("zero has no multiplicative inverse");
    return pow_alpha((n_ - log_[a.bits]) % n_);
}

std::uint32_t FieldGF2m::log(FieldElem a) const {
    if (a.is_zero()) throw std::domain_error("discrete log of zero is undefined");
    if (a.bits > n_) throw std::invalid_argument("field element does not fit in m bits");
    return log_[a.bits];
}

}  // namespace duadic
