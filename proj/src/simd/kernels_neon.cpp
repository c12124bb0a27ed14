// AArch64 only; NEON is part of the base ISA there.

#include <arm_neon.h>

#include <bit>

#include "kernels_internal.hpp"

namespace duadic::simd::detail {
namespace {

inline uint64x2_t popcount128(uint64x2_t v) {
    // byte counts -> pairwise widen to 64-bit lanes
    return vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(v)))));
}

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < words; ++i) dst[i] ^= src[i];
}

std::uint64_t popcount(const std::uint64_t* src, std::size_t words) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) acc = vaddq_u64(acc, popcount128(vld1q_u64(src + i)));
    std::uint64_t total = vaddvq_u64(acc);
    for (; i < words; ++i) total += std::popcount(src[i]);
    return total;
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) acc = vaddq_u64(acc, popcount128(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i))));
    std::uint64_t total = vaddvq_u64(acc);
    for (; i < words; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

std::uint64_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) acc = vaddq_u64(acc, popcount128(veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i))));
    std::uint64_t total = vaddvq_u64(acc);
    for (; i < words; ++i) total += std::popcount(a[i] ^ b[i]);
    return total;
}

std::uint64_t xor_into_popcount(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        const uint64x2_t v = veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i));
        vst1q_u64(dst + i, v);
        acc = vaddq_u64(acc, popcount128(v));
    }
    std::uint64_t total = vaddvq_u64(acc);
    for (; i < words; ++i) {
        dst[i] ^= src[i];
        total += std::popcount(dst[i]);
    }
    return total;
}

bool andnot_any(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        // vbicq(x, y) = x & ~y
        const uint64x2_t diff = vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        if (vmaxvq_u32(vreinterpretq_u32_u64(diff)) != 0) return true;
    }
    for (; i < words; ++i)
        if (a[i] & ~b[i]) return true;
    return false;
}

}  // namespace

const Kernels kNeon{Isa::neon, "neon", xor_into, popcount, and_popcount, xor_popcount, xor_into_popcount, andnot_any};

}  // namespace duadic::simd::detail
