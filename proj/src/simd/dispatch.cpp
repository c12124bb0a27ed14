#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_internal.hpp"

namespace duadic::simd {
namespace {

bool cpu_supports(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(DUADIC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
            return false;
#endif
        case Isa::neon:
#if defined(DUADIC_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const Kernels* kernels_for(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return &detail::kScalar;
        case Isa::avx2:
#if defined(DUADIC_HAVE_AVX2)
            return &detail::kAvx2;
#else
            return nullptr;
#endif
        case Isa::neon:
#if defined(DUADIC_HAVE_NEON)
            return &detail::kNeon;
#else
            return nullptr;
#endif
    }
    return nullptr;
}

const Kernels* resolve() {
    if (const char* forced = std::getenv("DUADIC_SIMD")) {
        const std::string want(forced);
        for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
            if (want == isa_name(isa) && cpu_supports(isa) && kernels_for(isa)) return kernels_for(isa);
    }
    for (Isa isa : {Isa::avx2, Isa::neon})
        if (cpu_supports(isa) && kernels_for(isa)) return kernels_for(isa);
    return &detail::kScalar;
}

std::atomic<const Kernels*>& slot() {
    static std::atomic<const Kernels*> current{resolve()};
    return current;
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

const Kernels& scalar_kernels() { return detail::kScalar; }

std::vector<const Kernels*> available_kernels() {
    std::vector<const Kernels*> out;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
        if (cpu_supports(isa) && kernels_for(isa)) out.push_back(kernels_for(isa));
    return out;
}

const Kernels& active() { return *slot().load(std::memory_order_relaxed); }

bool select(Isa isa) {
    if (!cpu_supports(isa) || !kernels_for(isa)) return false;
    slot().store(kernels_for(isa), std::memory_order_relaxed);
    return true;
}

}  // namespace duadic::simd
