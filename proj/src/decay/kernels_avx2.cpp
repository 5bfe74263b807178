// AVX2 lane of the grid kernels; built only on x86-64 with -mavx2.

#include "color4/decay/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include "color4/decay/potential.hpp"
#include "kernels_math.hpp"

namespace color4::decay::kern {

struct v4 {
    __m256d v;
};
inline v4 operator+(v4 a, v4 b) { return {_mm256_add_pd(a.v, b.v)}; }
inline v4 operator-(v4 a, v4 b) { return {_mm256_sub_pd(a.v, b.v)}; }
inline v4 operator*(v4 a, v4 b) { return {_mm256_mul_pd(a.v, b.v)}; }
inline v4 operator/(v4 a, v4 b) { return {_mm256_div_pd(a.v, b.v)}; }

template <>
inline v4 splat<v4>(double x) {
    return {_mm256_set1_pd(x)};
}

}  // namespace color4::decay::kern

namespace color4::decay::kernels {

namespace {

using kern::v4;
const double kM = m_constant();

inline v4 ld(const double* p) { return {_mm256_loadu_pd(p)}; }
inline void st(double* p, v4 x) { _mm256_storeu_pd(p, x.v); }

void a_resolve3p(const double* f1, const double* y1, const double* y2, double* out,
                 std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) st(out + i, kern::resolve3p(ld(f1 + i), ld(y1 + i), ld(y2 + i), kM));
    for (; i < n; ++i) out[i] = kern::resolve3p(f1[i], y1[i], y2[i], kM);
}

void a_resolve2p1m(const double* f2, const double* y1, const double* y2, const double* y3,
                   double a, double b, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        st(out + i, kern::resolve2p1m(ld(f2 + i), ld(y1 + i), ld(y2 + i), ld(y3 + i), a, b, kM));
    for (; i < n; ++i) out[i] = kern::resolve2p1m(f2[i], y1[i], y2[i], y3[i], a, b, kM);
}

void a_resolve2p1m_d1(const double* f2, const double* y2, const double* y3, double* out,
                      std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        st(out + i, kern::resolve2p1m_d1(ld(f2 + i), ld(y2 + i), ld(y3 + i), kM));
    for (; i < n; ++i) out[i] = kern::resolve2p1m_d1(f2[i], y2[i], y3[i], kM);
}

void a_jensen2(const double* f1, const double* f2, const double* r1, const double* r2,
               double four_m_xi, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        st(out + i, kern::jensen2(ld(f1 + i), ld(f2 + i), ld(r1 + i), ld(r2 + i), four_m_xi));
    for (; i < n; ++i) out[i] = kern::jensen2(f1[i], f2[i], r1[i], r2[i], four_m_xi);
}

void a_jensen12(const double* f1, const double* f2, const double* r1, const double* r2,
                double four_m_xi, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        st(out + i, kern::jensen12(ld(f1 + i), ld(f2 + i), ld(r1 + i), ld(r2 + i), four_m_xi));
    for (; i < n; ++i) out[i] = kern::jensen12(f1[i], f2[i], r1[i], r2[i], four_m_xi);
}

void a_d1pos(const double* f2, const double* f3, const double* y2, const double* y3,
             const double* y4, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        st(out + i,
           kern::d1pos(ld(f2 + i), ld(f3 + i), ld(y2 + i), ld(y3 + i), ld(y4 + i), kM));
    for (; i < n; ++i) out[i] = kern::d1pos(f2[i], f3[i], y2[i], y3[i], y4[i], kM);
}

}  // namespace

const Kernels& avx2_kernels() {
    static const Kernels k = {"avx2",      a_resolve3p, a_resolve2p1m, a_resolve2p1m_d1,
                              a_jensen2,   a_jensen12,  a_d1pos};
    return k;
}

}  // namespace color4::decay::kernels

#endif  // __AVX2__
