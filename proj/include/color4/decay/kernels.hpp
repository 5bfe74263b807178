#pragma once

#include <cstddef>

namespace color4::decay::kernels {

// Batch evaluators over struct-of-arrays grid points. Two lanes: a scalar
// reference and an AVX2 variant selected at runtime; they are equivalence-
// tested for bitwise-identical output.
struct Kernels {
    const char* name;
    void (*resolve3p)(const double* f1, const double* y1, const double* y2, double* out,
                      std::size_t n);
    // f1 = a - b*f2 per boundary branch of the one-negative-D_j case.
    void (*resolve2p1m)(const double* f2, const double* y1, const double* y2, const double* y3,
                        double a, double b, double* out, std::size_t n);
    void (*resolve2p1m_d1)(const double* f2, const double* y2, const double* y3, double* out,
                           std::size_t n);
    void (*jensen2)(const double* f1, const double* f2, const double* r1, const double* r2,
                    double four_m_xi, double* out, std::size_t n);
    void (*jensen12)(const double* f1, const double* f2, const double* r1, const double* r2,
                     double four_m_xi, double* out, std::size_t n);
    void (*d1pos)(const double* f2, const double* f3, const double* y2, const double* y3,
                  const double* y4, double* out, std::size_t n);
};

const Kernels& scalar_kernels();
const Kernels& avx2_kernels();  // valid only when avx2_available()
bool avx2_available();
// AVX2 when the CPU and build support it, scalar otherwise.
const Kernels& active_kernels();

}  // namespace color4::decay::kernels
