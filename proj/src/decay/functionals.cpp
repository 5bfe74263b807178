#include "color4/decay/functionals.hpp"

#include <cmath>

#include "color4/decay/potential.hpp"
#include "color4/errors.hpp"
#include "kernels_math.hpp"

namespace color4::decay {

namespace {
const double kM = m_constant();
const double kLambda = 9996.0 / 10000.0;
constexpr double kEps = 1e-9;

void need(bool cond, const char* what) {
    if (!cond) throw domain_error(what);
}
}  // namespace

double alpha_deg1_l4(double x) {
    need(x >= -kEps && x <= 0.5 + kEps, "x must lie in [0,1/2]");
    return 3.0 * x * (1.0 - 2.0 * x) / ((1.0 - x) * (1.0 + 2.0 * x));
}

double alpha_deg1_l3_fixed(double y) {
    need(y >= 1.0 / 13.0 - kEps && y <= 0.5 + kEps, "y must lie in [1/13,1/2]");
    return 1.0 - 2.0 * y;
}

double alpha_deg1_l3(double x, double y) {
    need(x >= 1.0 / 13.0 - kEps && x <= 0.5 + kEps, "x must lie in [1/13,1/2]");
    need(y >= -kEps && y <= 0.5 + kEps, "y must lie in [0,1/2]");
    double num = x * (0.5 - x) * (2.0 + y) + y * (0.5 - y) * (1.0 - x);
    return num / ((1.0 - x) * (x + y / 2.0));
}

double g_xi(double w, double f, double xi) {
    need(f >= -kEps && f <= 0.5 + kEps, "f must lie in [0,1/2]");
    need(xi >= -kEps && xi <= 1.0 + kEps, "xi must lie in [0,1]");
    double r = w / (1.0 - f);
    need(r >= 0.5 - kEps && r <= 1.0 + kEps, "w/(1-f) must lie in [1/2,1]");
    return kern::g_of(r, f, 4.0 * kM * xi);
}

double alpha_hat_case1(double f1, double f2, double y1, double y2) {
    need(std::abs(f1 + 3.0 * f2 - 1.0) <= 1e-9, "requires f1 + 3 f2 = 1");
    need(f1 >= 1.0 / 13.0 - kEps && f1 <= 0.5 + kEps, "f1 must lie in [1/13,1/2]");
    need(y1 >= -kEps && y1 <= 0.5 + kEps && y2 >= -kEps && y2 <= 0.5 + kEps,
         "y must lie in [0,1/2]");
    return kern::resolve3p_core(f1, f2, y1, y2, kM);
}

double alpha_hat_case2(double f1, double f2, double f3, double y1, double y2, double y3,
                       bool p1_substituted) {
    need(std::abs(f1 + f2 + 2.0 * f3 - 1.0) <= 1e-9, "requires f1 + f2 + 2 f3 = 1");
    double denom = p1_substituted ? 1.0 - 1.0 / 13.0 : 1.0 - f1;
    return kern::resolve2p1m_core(f1, f2, y1, y2, y3, denom, kM);
}

double case2_branch_f1(Case2Branch branch, double f2) {
    switch (branch) {
        case Case2Branch::F1Sixth: return (1.0 - f2) / 6.0;
        case Case2Branch::F1Quarter: return (0.75 - f2) / 4.0;
        case Case2Branch::F1Thirteenth: return 1.0 / 13.0;
    }
    throw domain_error("unknown branch");
}

double alpha_hat_case2(double f1, double f2, double f3, double y1, double y2, double y3,
                       Case2Branch branch) {
    need(std::abs(f1 - case2_branch_f1(branch, f2)) <= 1e-9,
         "f1 does not match the branch substitution");
    return alpha_hat_case2(f1, f2, f3, y1, y2, y3, true);
}

double alpha_hat_d1(double f2, double f3, double y2, double y3) {
    need(std::abs(f2 + 2.0 * f3 - 1.0) <= 1e-9, "requires f2 + 2 f3 = 1");
    need(f2 >= -kEps && f2 <= 0.5 + kEps, "f2 must lie in [0,1/2]");
    return kern::resolve2p1m_d1(f2, y2, y3, kM);
}

double alpha_d1_positive(double f2, double f3, double f4, double y2, double y3, double y4) {
    need(std::abs(f2 + f3 + f4 - 1.0) <= 1e-9, "requires f2 + f3 + f4 = 1");
    return kern::d1pos(f2, f3, y2, y3, y4, kM);
}

double d1_positive_g2(double y2) {
    return 9.0 / 338.0 + 3.0 * kM / 13.0 - 2.0 * kLambda / 13.0 +
           (0.25 - kM / 2.0 + kLambda / 4.0) * y2 - y2 * y2 / 2.0;
}

namespace {

// F_k and the shared plumbing of the un-symmetrized forms.
struct DegTwoParts {
    std::array<double, 4> bigf;
    double a;
};

DegTwoParts parts(const std::array<double, 4>& f, const std::array<double, 4>& y) {
    DegTwoParts p{};
    p.a = 0.0;
    for (int k = 0; k < 4; ++k) p.a += (1.0 - f[k]) * (1.0 - y[k]);
    for (int k = 0; k < 4; ++k) p.bigf[k] = (1.0 - f[k]) * (1.0 - y[k]) / p.a;
    return p;
}

}  // namespace

double alpha_deg2_case1_full(const std::array<double, 4>& f, const std::array<double, 4>& y) {
    auto p = parts(f, y);
    double sum_phi = (1.0 - p.bigf[0]) * inv_wphi_ext(y[0]);
    double sum_ratio = 0.0;
    for (int j = 1; j < 4; ++j) {
        sum_phi += p.bigf[j] * inv_wphi_ext(y[j]);
        sum_ratio += p.bigf[j] / (1.0 - f[j]);
    }
    return (sum_phi + 4.0 * kM * f[0] * sum_ratio) / (0.5 - p.bigf[0]);
}

double alpha_deg2_case2_full(const std::array<double, 4>& f, const std::array<double, 4>& y) {
    auto p = parts(f, y);
    double sum_phi = (1.0 - p.bigf[0]) * inv_wphi_ext(y[0]);
    double sum_ratio = 0.0;
    for (int j = 1; j < 4; ++j) {
        sum_phi += p.bigf[j] * inv_wphi_ext(y[j]);
        sum_ratio += p.bigf[j] / (1.0 - f[j]);
    }
    double d2 = 1.0 / (1.0 - f[0]);
    for (int k = 0; k < 4; ++k)
        if (k != 1) d2 -= p.bigf[k] / (1.0 - f[k]);
    return (sum_phi + 4.0 * kM * f[0] * sum_ratio - 4.0 * kM * f[1] * d2) / (0.5 - p.bigf[0]);
}

double alpha_d1_case1_full(const std::array<double, 3>& f, const std::array<double, 3>& y) {
    double a = 1.0;
    for (int j = 0; j < 3; ++j) a += (1.0 - f[j]) * (1.0 - y[j]);
    std::array<double, 3> bigf{};
    for (int j = 0; j < 3; ++j) bigf[j] = (1.0 - f[j]) * (1.0 - y[j]) / a;
    double bigf1 = 1.0 / a;
    // sum over k != 2 of F_k/(1-f_k), colors {1,3,4} with f1 = 0
    double s = bigf1 + bigf[1] / (1.0 - f[1]) + bigf[2] / (1.0 - f[2]);
    double sum_phi = 0.0;
    for (int j = 0; j < 3; ++j) sum_phi += bigf[j] * inv_wphi_ext(y[j]);
    return (2.0 * kM * f[0] * (s - 1.0) + sum_phi) / (0.5 - bigf1);
}

}  // namespace color4::decay
