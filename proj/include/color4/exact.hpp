#pragma once

#include "color4/instance.hpp"
#include "color4/rational.hpp"

namespace color4 {

struct ExactCount {
    BigInt value;
};

struct ExactMarginal {
    BigInt numerator;
    BigInt denominator;
    Rational value;
};

inline constexpr int kDefaultOracleCap = 26;

// Exact number of proper list-colorings by backtracking with constraint
// propagation. Ground truth for every acceptance test; clarity over speed.
ExactCount count_colorings(const Instance& inst, int size_cap = kDefaultOracleCap);

// Exact Pr[c(v)=i] = Z(c(v)=i) / Z. Requires Z > 0.
ExactMarginal exact_marginal(const Instance& inst, int v, int color,
                             int size_cap = kDefaultOracleCap);

}  // namespace color4
