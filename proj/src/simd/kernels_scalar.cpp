#include <bit>

#include "kernels_internal.hpp"

namespace duadic::simd::detail {
namespace {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

std::uint64_t popcount(const std::uint64_t* src, std::size_t words) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += std::popcount(src[i]);
    return total;
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

std::uint64_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] ^ b[i]);
    return total;
}

std::uint64_t xor_into_popcount(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < words; ++i) {
        dst[i] ^= src[i];
        total += std::popcount(dst[i]);
    }
    return total;
}

bool andnot_any(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        if (a[i] & ~b[i]) return true;
    return false;
}

}  // namespace

const Kernels kScalar{Isa::scalar, "scalar", xor_into, popcount, and_popcount, xor_popcount, xor_into_popcount, andnot_any};

}  // namespace duadic::simd::detail
