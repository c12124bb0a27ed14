#pragma once

#include "duadic/simd.hpp"

namespace duadic::simd::detail {

extern const Kernels kScalar;
#if defined(DUADIC_HAVE_AVX2)
extern const Kernels kAvx2;
#endif
#if defined(DUADIC_HAVE_NEON)
extern const Kernels kNeon;
#endif

}  // namespace duadic::simd::detail
