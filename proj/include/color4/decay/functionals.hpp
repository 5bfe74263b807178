#pragma once

#include <array>

namespace color4::decay {

// Contraction-rate expressions of the decay analysis, scalar forms. Domains
// are the ones stated with each inequality; arguments outside them raise
// domain_error where the expression itself would be meaningless.

// deg(v)=1, |L(v)|=4:  3x(1-2x)/((1-x)(1+2x)) on [0,1/2]; bounded by 3/4.
double alpha_deg1_l4(double x);

// deg(v)=1, |L(v)|=3, i absent from L(v1):  1-2y on [1/13,1/2]; bound 11/13.
double alpha_deg1_l3_fixed(double y);

// deg(v)=1, |L(v)|=3, i in L(v1):
// (x(1/2-x)(2+y) + y(1/2-y)(1-x)) / ((1-x)(x+y/2)); bound 9996/10000.
double alpha_deg1_l3(double x, double y);

// G_xi(w,f) = (1-f)/Phi(1 - w/(1-f)) + 4 M xi w/(1-f).
// Domain: f in [0,1/2], (1-f)/2 <= w <= 1-f, xi in [0,1].
double g_xi(double w, double f, double xi);

// Symmetric alpha-hat forms whose grid maxima certify the contraction rate.
double alpha_hat_case1(double f1, double f2, double y1, double y2);
// p1_substituted selects the 1-1/13 denominator used by the grid check; the
// plain 1-f1 form is what the symmetrization step actually bounds.
double alpha_hat_case2(double f1, double f2, double f3, double y1, double y2, double y3,
                       bool p1_substituted = true);
// Boundary branches of the one-negative-D_j case; each pins f1 to a function
// of f2 (linearity in f1 pushes the maximum to these edges).
enum class Case2Branch { F1Sixth, F1Quarter, F1Thirteenth };
double case2_branch_f1(Case2Branch branch, double f2);
// Branch form: validates that f1 matches the branch substitution.
double alpha_hat_case2(double f1, double f2, double f3, double y1, double y2, double y3,
                       Case2Branch branch);
double alpha_hat_d1(double f2, double f3, double y2, double y3);

// Positive-D_2 case at d1=1: alpha over f2+f3+f4=1, y's in [0,6/13].
double alpha_d1_positive(double f2, double f3, double f4, double y2, double y3, double y4);
// The quadratic G'' whose negativity closes that case.
double d1_positive_g2(double y2);

// Un-symmetrized alpha forms at a degree-2 vertex with d1 = 2 (inputs indexed
// by color-1). Used to test the symmetrization inequalities pointwise.
double alpha_deg2_case1_full(const std::array<double, 4>& f, const std::array<double, 4>& y);
double alpha_deg2_case2_full(const std::array<double, 4>& f, const std::array<double, 4>& y);
// d1 = 1, f1 = y1 = 0, D_2 negative (inputs for colors 2..4).
double alpha_d1_case1_full(const std::array<double, 3>& f, const std::array<double, 3>& y);

}  // namespace color4::decay
