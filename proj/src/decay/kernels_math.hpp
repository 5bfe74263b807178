#pragma once

// Single source for the contraction-rate formulas evaluated by the grid
// search. Instantiated with V = double (scalar lane, and the public scalar
// functionals) and with the 4-wide AVX2 wrapper. Both lanes execute the same
// operation sequence, so with contraction disabled the results are bitwise
// identical; the kernel equivalence suite asserts exactly that.

namespace color4::decay::kern {

template <class V>
inline V splat(double);

template <>
inline double splat<double>(double x) {
    return x;
}

// 1/Phi extended by zero at the boundary: x(1/2 - x).
template <class V>
inline V inv_phi(V x) {
    return x * (splat<V>(0.5) - x);
}

// 1/((1-x)Phi(x)) extended: x(1/2 - x)/(1 - x).
template <class V>
inline V inv_wphi(V x) {
    return x * (splat<V>(0.5) - x) / (splat<V>(1.0) - x);
}

// alpha-hat of the all-D_j-nonnegative case, f2 = f3 = f4, y2 = y3 = y4.
template <class V>
inline V resolve3p_core(V f1, V f2, V y1, V y2, double m) {
    V one = splat<V>(1.0);
    V w1 = (one - f1) * (one - y1);
    V w2 = (one - f2) * (one - y2);
    V a = w1 + splat<V>(3.0) * w2;
    V bigf1 = w1 / a;
    V bigf2 = w2 / a;
    V inner = (one - bigf1) * inv_wphi(y1) + splat<V>(3.0) * bigf2 * inv_wphi(y2) +
              splat<V>(12.0 * m) * f1 * bigf2 / (one - f2);
    return inner / (splat<V>(0.5) - bigf1);
}

template <class V>
inline V resolve3p(V f1, V y1, V y2, double m) {
    V f2 = (splat<V>(1.0) - f1) / splat<V>(3.0);
    return resolve3p_core(f1, f2, y1, y2, m);
}

// alpha-hat of the one-negative-D_j case, f3 = f4, y3 = y4; p1_denom carries
// either 1 - 1/13 (the resolve substitution) or 1 - f1 (the plain form).
template <class V>
inline V resolve2p1m_core(V f1, V f2, V y1, V y2, V y3, V p1_denom, double m) {
    V one = splat<V>(1.0);
    V t3 = one + f1 + f2;  // = 2(1 - f3)
    V a = (one - f1) * (one - y1) + (one - f2) * (one - y2) + t3 * (one - y3);
    V bigf1 = (one - f1) * (one - y1) / a;
    V p1 = a * (one - bigf1) * (inv_wphi(y1) - splat<V>(4.0 * m) * f2 / p1_denom);
    V p2 = (one - f2) * inv_phi(y2) + splat<V>(4.0 * m) * f1 * (one - y2);
    V p3 = t3 * inv_phi(y3) + splat<V>(8.0 * m) * (f1 + f2) * (one - y3);
    return (p1 + p2 + p3) / (a * (splat<V>(0.5) - bigf1));
}

// Branch form with f1 = a - b*f2 and the 1 - 1/13 substitution in P1.
template <class V>
inline V resolve2p1m(V f2, V y1, V y2, V y3, double a, double b, double m) {
    V f1 = splat<V>(a) - splat<V>(b) * f2;
    return resolve2p1m_core(f1, f2, y1, y2, y3, splat<V>(1.0 - 1.0 / 13.0), m);
}

// alpha-hat of the d1 = 1 negative case with f1 = y1 = 0 and the xi = 1/4
// (2M) coefficients folded in.
template <class V>
inline V resolve2p1m_d1(V f2, V y2, V y3, double m) {
    V one = splat<V>(1.0);
    V a = one + (one - f2) * (one - y2) + (one + f2) * (one - y3);
    V bigf1 = one / a;
    V p1 = a * (one - bigf1) * (splat<V>(0.0) - splat<V>(2.0 * m) * f2);
    V p2 = (one - f2) * inv_phi(y2);
    V p3 = (one + f2) * inv_phi(y3) + splat<V>(4.0 * m) * f2 * (one - y3);
    return (p1 + p2 + p3) / (a * (splat<V>(0.5) - bigf1));
}

// G_xi(w, f) with c4 = 4*M*xi, parametrized by the ratio r = w/(1-f).
template <class V>
inline V g_of(V r, V f, double c4) {
    V one = splat<V>(1.0);
    return (one - f) * inv_phi(one - r) + splat<V>(c4)*r;
}

// Two-point Jensen ratio: (G1 + G2) / (2 G(mid)).
template <class V>
inline V jensen2(V f1, V f2, V r1, V r2, double c4) {
    V one = splat<V>(1.0);
    V w1 = r1 * (one - f1);
    V w2 = r2 * (one - f2);
    V fm = (f1 + f2) / splat<V>(2.0);
    V wm = (w1 + w2) / splat<V>(2.0);
    V rm = wm / (one - fm);
    V lhs = g_of(r1, f1, c4) + g_of(r2, f2, c4);
    return lhs / (splat<V>(2.0) * g_of(rm, fm, c4));
}

// Weighted 1:2 Jensen ratio: (G1 + 2 G2) / (3 G(mean)).
template <class V>
inline V jensen12(V f1, V f2, V r1, V r2, double c4) {
    V one = splat<V>(1.0);
    V w1 = r1 * (one - f1);
    V w2 = r2 * (one - f2);
    V fm = (f1 + splat<V>(2.0) * f2) / splat<V>(3.0);
    V wm = (w1 + splat<V>(2.0) * w2) / splat<V>(3.0);
    V rm = wm / (one - fm);
    V lhs = g_of(r1, f1, c4) + splat<V>(2.0) * g_of(r2, f2, c4);
    return lhs / (splat<V>(3.0) * g_of(rm, fm, c4));
}

// alpha of the positive-D_2 case at d1 = 1 (f1 = y1 = 0), f4 = 1 - f2 - f3.
template <class V>
inline V d1pos(V f2, V f3, V y2, V y3, V y4, double m) {
    V one = splat<V>(1.0);
    V f4 = one - f2 - f3;
    V a = one + (one - f2) * (one - y2) + (one - f3) * (one - y3) + (one - f4) * (one - y4);
    V num = (one - f2) * inv_phi(y2) + (one - f3) * inv_phi(y3) + (one - f4) * inv_phi(y4) +
            splat<V>(2.0 * m) * f2 * (a - splat<V>(3.0) + y3 + y4);
    return num / (a / splat<V>(2.0) - one);
}

}  // namespace color4::decay::kern
