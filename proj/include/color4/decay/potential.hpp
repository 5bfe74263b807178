#pragma once

#include <cmath>

#include "color4/errors.hpp"

namespace color4::decay {

// phi(x) = 2 ln x - 2 ln(1/2 - x) on (0, 1/2); its derivative Phi is the
// potential that amortizes the per-level contraction rate.
inline double phi(double x) {
    if (!(x > 0.0 && x < 0.5)) throw domain_error("phi domain is (0, 1/2)");
    return 2.0 * std::log(x) - 2.0 * std::log(0.5 - x);
}

inline double big_phi(double x) {
    if (!(x > 0.0 && x < 0.5)) throw domain_error("Phi domain is (0, 1/2)");
    return 1.0 / (x * (0.5 - x));
}

inline double m_constant() { return 1.5 - std::sqrt(2.0); }

// Continuous extensions used throughout the contraction functionals:
// 1/Phi and 1/((1-x)Phi(x)) extend by 0 at x in {0, 1/2}.
inline double inv_phi_ext(double x) { return x * (0.5 - x); }
inline double inv_wphi_ext(double x) { return x * (0.5 - x) / (1.0 - x); }

}  // namespace color4::decay
