#include "color4/decay/kernels.hpp"
#include "color4/decay/potential.hpp"
#include "kernels_math.hpp"

namespace color4::decay::kernels {

namespace {

const double kM = m_constant();

void s_resolve3p(const double* f1, const double* y1, const double* y2, double* out,
                 std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = kern::resolve3p(f1[i], y1[i], y2[i], kM);
}

void s_resolve2p1m(const double* f2, const double* y1, const double* y2, const double* y3,
                   double a, double b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = kern::resolve2p1m(f2[i], y1[i], y2[i], y3[i], a, b, kM);
}

void s_resolve2p1m_d1(const double* f2, const double* y2, const double* y3, double* out,
                      std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = kern::resolve2p1m_d1(f2[i], y2[i], y3[i], kM);
}

void s_jensen2(const double* f1, const double* f2, const double* r1, const double* r2,
               double four_m_xi, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = kern::jensen2(f1[i], f2[i], r1[i], r2[i], four_m_xi);
}

void s_jensen12(const double* f1, const double* f2, const double* r1, const double* r2,
                double four_m_xi, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = kern::jensen12(f1[i], f2[i], r1[i], r2[i], four_m_xi);
}

void s_d1pos(const double* f2, const double* f3, const double* y2, const double* y3,
             const double* y4, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = kern::d1pos(f2[i], f3[i], y2[i], y3[i], y4[i], kM);
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k = {"scalar",    s_resolve3p, s_resolve2p1m, s_resolve2p1m_d1,
                              s_jensen2,   s_jensen12,  s_d1pos};
    return k;
}

}  // namespace color4::decay::kernels
