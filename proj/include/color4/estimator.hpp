#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>

#include "color4/instance.hpp"
#include "color4/rational.hpp"

namespace color4 {

enum class Backend { Float64, Rational };

struct EstimatorConfig {
    int depth = 0;
    Backend backend = Backend::Float64;
    bool memoize = true;
    // >1 lets the counter estimate the <=4 per-step marginals concurrently.
    // The recursion itself is sequential; results are identical either way.
    int threads = 1;
};

struct Probability {
    double value = 0.0;
    std::optional<Rational> exact;  // set when computed on the rational backend

    static Probability from_double(double v) { return {v, std::nullopt}; }
    static Probability from_rational(Rational r) {
        double v = r.to_double();
        return {v, std::move(r)};
    }
};

enum class BoundaryKind { Zero, HalfCase1, HalfCase2, HalfCase3, Interior };

struct BoundaryClass {
    BoundaryKind kind = BoundaryKind::Interior;
    std::string witness;
};

// Memoization cache shared across estimates over sub-instances of one base
// graph (vertex ids are stable, so keys stay valid after fix_vertex steps).
// Insert-if-absent semantics; values are immutable once published.
class MemoStore;
std::shared_ptr<MemoStore> make_memo_store();

// Depth-bounded estimate of Pr[c(v)=i]. Requires |L(u)| >= deg(u)+1 for all u
// (the counting entry condition); throws invalid_instance_error otherwise.
Probability estimate_marginal(const Instance& inst, int v, int color, const EstimatorConfig& cfg,
                              MemoStore* store = nullptr);

// The degree-1/2/3 procedures, exposed with their own contracts. These run the
// raw one-step recursion at the top level (no boundary short-circuit there).
Probability p1(const Instance& inst, int v, int color, const EstimatorConfig& cfg);
Probability p2(const Instance& inst, int v, int color, const EstimatorConfig& cfg);
Probability p3(const Instance& inst, int v, int color, const EstimatorConfig& cfg);

// Local structure around a reachable (v,i): exact-0 / exact-1/2 / interior.
BoundaryClass classify_boundary(const Instance& inst, int v, int color);

namespace detail {
// Inner two-layer weights f_1..f_4 at a degree-2 vertex (index = color-1).
std::array<Probability, 4> p2_inner_weights(const Instance& inst, int v,
                                            const EstimatorConfig& cfg);
}  // namespace detail

}  // namespace color4
