#pragma once

#include <map>
#include <optional>
#include <vector>

#include "color4/estimator.hpp"
#include "color4/instance.hpp"
#include "color4/rational.hpp"

namespace color4 {

// Contraction rate of the decay analysis; drives the theoretical depth
// schedule. The practical gap between this worst-case rate and observed decay
// is documented at depth_for_epsilon.
inline constexpr double kLambda = 9996.0 / 10000.0;

struct CountFactor {
    int vertex = -1;
    int color = 0;
    double estimate = 0.0;
    std::optional<Rational> exact;
};

struct CountResult {
    bool satisfiable = true;
    double estimate = 1.0;
    std::optional<Rational> exact;  // rational backend
    std::vector<CountFactor> factors;
    int depth_used = 0;
    std::optional<double> epsilon_claimed;
};

struct DepthPolicy {
    enum class Mode { FixedDepth, TargetEpsilon };
    Mode mode = Mode::FixedDepth;
    int depth = 8;
    double epsilon = 0.1;
    double constant = 1.0;  // the analysis constant C, not pinned by the theory

    static DepthPolicy fixed(int d) {
        DepthPolicy p;
        p.mode = Mode::FixedDepth;
        p.depth = d;
        return p;
    }
    static DepthPolicy target(double eps, double c = 1.0) {
        DepthPolicy p;
        p.mode = Mode::TargetEpsilon;
        p.epsilon = eps;
        p.constant = c;
        return p;
    }
};

// Self-reduction step: pin color c at v, i.e. remove v and delete c from every
// neighbor's list. Preserves |L(u)| >= deg(u)+1.
Instance fix_vertex(const Instance& inst, int v, int color);

// Argmax estimate over L(v); ties broken by smallest color id.
int choose_pivot_color(const std::map<int, Probability>& estimates, std::uint8_t list_mask);

// Smallest t with C * lambda^(t-3) <= (epsilon/(2n))/25. With lambda = 0.9996
// this is astronomically large for realistic epsilon; FixedDepth is the
// practical operating mode and empirical accuracy is checked against the
// oracle instead.
int depth_for_epsilon(const DepthPolicy& policy, int n);

// Z estimate as the telescoping product of reciprocal pivot marginals,
// eliminating vertices in ascending id order. Unsatisfiable instances are
// reported as count 0, not as an error.
CountResult approx_count(const Instance& inst, const DepthPolicy& policy,
                         const EstimatorConfig& cfg);

}  // namespace color4
