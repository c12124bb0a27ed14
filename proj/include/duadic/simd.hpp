#pragma once

// Word-parallel bit kernels. Every kernel has a portable scalar reference
// implementation; AVX2 (x86-64) and NEON (AArch64) variants are compiled when
// the toolchain supports them and selected at runtime from CPU capabilities.
// The environment variable DUADIC_SIMD=scalar|avx2|neon overrides the choice.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace duadic::simd {

enum class Isa { scalar, avx2, neon };

struct Kernels {
    Isa isa;
    const char* name;
    // dst ^= src
    void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
    std::uint64_t (*popcount)(const std::uint64_t* src, std::size_t words);
    // popcount(a & b)
    std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
    // popcount(a ^ b)
    std::uint64_t (*xor_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
    // dst ^= src; returns popcount(dst)
    std::uint64_t (*xor_into_popcount)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
    // true iff (a & ~b) != 0, i.e. a is not a subset of b
    bool (*andnot_any)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
};

const Kernels& scalar_kernels();

// Kernel sets that are both compiled in and supported by the running CPU.
// The scalar set is always first.
std::vector<const Kernels*> available_kernels();

// Active kernel set; resolved once on first call.
const Kernels& active();

// Force a kernel set (tests, benchmarking). Returns false if unavailable.
bool select(Isa isa);

std::string_view isa_name(Isa isa);

inline void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    active().xor_into(dst.data(), src.data(), src.size());
}

inline std::uint64_t popcount(std::span<const std::uint64_t> src) {
    return active().popcount(src.data(), src.size());
}

inline std::uint64_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    return active().and_popcount(a.data(), b.data(), a.size());
}

inline std::uint64_t xor_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    return active().xor_popcount(a.data(), b.data(), a.size());
}

inline std::uint64_t xor_into_popcount(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    return active().xor_into_popcount(dst.data(), src.data(), src.size());
}

inline bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    return !active().andnot_any(a.data(), b.data(), a.size());
}

}  // namespace duadic::simd
