#include "color4/decay/kernels.hpp"

namespace color4::decay::kernels {

bool avx2_available() {
#if defined(COLOR4_HAVE_AVX2_BUILD) && (defined(__x86_64__) || defined(_M_X64))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

#if !defined(COLOR4_HAVE_AVX2_BUILD)
const Kernels& avx2_kernels() { return scalar_kernels(); }
#endif

const Kernels& active_kernels() { return avx2_available() ? avx2_kernels() : scalar_kernels(); }

}  // namespace color4::decay::kernels
