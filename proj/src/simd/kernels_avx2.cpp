// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace duadic::simd::detail {
namespace {

// Nibble-lookup popcount; returns four 64-bit lane sums.
inline __m256i popcount256(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::uint64_t horizontal_sum(__m256i acc) {
    const __m128i sum128 = _mm_add_epi64(_mm256_castsi256_si128(acc), _mm256_extracti128_si256(acc, 1));
    return static_cast<std::uint64_t>(_mm_cvtsi128_si64(sum128)) +
           static_cast<std::uint64_t>(_mm_extract_epi64(sum128, 1));
}

inline __m256i load(const std::uint64_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(std::uint64_t* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) store(dst + i, _mm256_xor_si256(load(dst + i), load(src + i)));
    for (; i < words; ++i) dst[i] ^= src[i];
}

std::uint64_t popcount(const std::uint64_t* src, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) acc = _mm256_add_epi64(acc, popcount256(load(src + i)));
    std::uint64_t total = horizontal_sum(acc);
    for (; i < words; ++i) total += static_cast<std::uint64_t>(_mm_popcnt_u64(src[i]));
    return total;
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) acc = _mm256_add_epi64(acc, popcount256(_mm256_and_si256(load(a + i), load(b + i))));
    std::uint64_t total = horizontal_sum(acc);
    for (; i < words; ++i) total += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i] & b[i]));
    return total;
}

std::uint64_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) acc = _mm256_add_epi64(acc, popcount256(_mm256_xor_si256(load(a + i), load(b + i))));
    std::uint64_t total = horizontal_sum(acc);
    for (; i < words; ++i) total += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i] ^ b[i]));
    return total;
}

std::uint64_t xor_into_popcount(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i v = _mm256_xor_si256(load(dst + i), load(src + i));
        store(dst + i, v);
        acc = _mm256_add_epi64(acc, popcount256(v));
    }
    std::uint64_t total = horizontal_sum(acc);
    for (; i < words; ++i) {
        dst[i] ^= src[i];
        total += static_cast<std::uint64_t>(_mm_popcnt_u64(dst[i]));
    }
    return total;
}

bool andnot_any(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        // andnot computes ~first & second
        const __m256i diff = _mm256_andnot_si256(load(b + i), load(a + i));
        if (!_mm256_testz_si256(diff, diff)) return true;
    }
    for (; i < words; ++i)
        if (a[i] & ~b[i]) return true;
    return false;
}

}  // namespace

const Kernels kAvx2{Isa::avx2, "avx2", xor_into, popcount, and_popcount, xor_popcount, xor_into_popcount, andnot_any};

}  // namespace duadic::simd::detail
