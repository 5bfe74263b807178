#include "color4/counter.hpp"

#include <algorithm>
#include <future>
#include <string>

#include "color4/errors.hpp"

namespace color4 {

Instance fix_vertex(const Instance& inst, int v, int color) {
    inst.check_vertex(v);
    if (color < 1 || color > kPalette) throw contract_error("color outside palette");
    if (!mask_has(inst.list_mask(v), color))
        throw contract_error("fix_vertex: color " + std::to_string(color) + " not in L(" +
                             std::to_string(v) + ")");
    Instance out = inst;
    for (int u : inst.neighbors(v)) out = out.with_color_removed(u, color);
    return out.with_vertex_removed(v);
}

int choose_pivot_color(const std::map<int, Probability>& estimates, std::uint8_t list_mask) {
    int best = 0;
    const Probability* best_p = nullptr;
    for (int c = 1; c <= kPalette; ++c) {
        if (!mask_has(list_mask, c)) continue;
        auto it = estimates.find(c);
        if (it == estimates.end())
            throw contract_error("estimates must cover every color of L(v)");
        const Probability& p = it->second;
        bool better;
        if (!best_p) {
            better = true;
        } else if (p.exact && best_p->exact) {
            better = *p.exact > *best_p->exact;
        } else {
            better = p.value > best_p->value;
        }
        if (better) {
            best = c;
            best_p = &p;
        }
    }
    if (!best_p) throw contract_error("empty list");
    bool all_zero = best_p->exact ? best_p->exact->is_zero() : best_p->value == 0.0;
    if (all_zero) throw unsatisfiable_error("all marginal estimates are zero");
    return best;
}

int depth_for_epsilon(const DepthPolicy& policy, int n) {
    if (policy.mode != DepthPolicy::Mode::TargetEpsilon)
        throw contract_error("depth_for_epsilon needs TargetEpsilon mode");
    if (!(policy.epsilon > 0.0 && policy.epsilon < 1.0))
        throw contract_error("epsilon must be in (0,1)");
    if (!(policy.constant > 0.0)) throw contract_error("constant C must be positive");
    double per_step = policy.epsilon / (2.0 * std::max(1, n));
    double target = per_step / 25.0;
    double c = policy.constant;
    // t < 3 branches: condition C * lambda^(t-3) <= target.
    if (c <= target * kLambda * kLambda * kLambda) return 0;
    if (c <= target * kLambda * kLambda) return 1;
    if (c <= target * kLambda) return 2;
    int t = 3;
    double v = c;
    while (v > target) {
        v *= kLambda;
        ++t;
        if (t > 100000000) throw capacity_error("depth schedule exceeds 1e8");
    }
    return t;
}

namespace {

// Z is preserved when a forced (singleton-list) vertex is eliminated; an
// emptied list certifies Z = 0. Runs before the validity gate so that inputs
// whose lists collapse by propagation are reported unsatisfiable rather than
// rejected.
struct Propagated {
    Instance inst;
    bool unsat = false;
};

Propagated propagate_forced(Instance inst) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : inst.vertices()) {
            int s = inst.list_size(v);
            if (s == 0) return {std::move(inst), true};
            if (s != 1) continue;
            int c = inst.list_colors(v)[0];
            Instance next = inst;
            for (int u : inst.neighbors(v)) next = next.with_color_removed(u, c);
            inst = next.with_vertex_removed(v);
            changed = true;
            break;
        }
    }
    for (int v : inst.vertices())
        if (inst.list_size(v) == 0) return {std::move(inst), true};
    return {std::move(inst), false};
}

}  // namespace

CountResult approx_count(const Instance& inst, const DepthPolicy& policy,
                         const EstimatorConfig& cfg) {
    CountResult result;
    bool rational = cfg.backend == Backend::Rational;

    auto prop = propagate_forced(inst);
    if (prop.unsat) {
        result.satisfiable = false;
        result.estimate = 0.0;
        if (rational) result.exact = Rational(0);
        return result;
    }
    Instance cur = std::move(prop.inst);
    if (!cur.valid_for_counting())
        throw invalid_instance_error("counting requires |L(u)| >= deg(u)+1 for every vertex");

    if (policy.mode == DepthPolicy::Mode::FixedDepth && policy.depth < 0)
        throw contract_error("depth must be nonnegative");
    int n0 = cur.vertex_count();
    int depth = policy.mode == DepthPolicy::Mode::FixedDepth ? policy.depth
                                                             : depth_for_epsilon(policy, n0);
    // Beyond n+2 the recursion exhausts the graph before the depth budget, so
    // every deeper schedule computes the identical (exact) values; clamping
    // keeps the theoretical epsilon schedule usable.
    depth = std::min(depth, n0 + 2);
    result.depth_used = depth;
    if (policy.mode == DepthPolicy::Mode::TargetEpsilon)
        result.epsilon_claimed = policy.epsilon;

    EstimatorConfig step_cfg = cfg;
    step_cfg.depth = depth;

    Rational acc_r(1);
    double acc = 1.0;
    auto store = make_memo_store();

    for (int v = 0; v < inst.slot_count(); ++v) {
        if (!cur.alive(v)) continue;
        auto colors = cur.list_colors(v);
        std::map<int, Probability> est;
        if (step_cfg.threads > 1 && colors.size() > 1) {
            std::vector<std::future<Probability>> futs;
            for (int c : colors)
                futs.push_back(std::async(std::launch::async, [&, c] {
                    return estimate_marginal(cur, v, c, step_cfg, store.get());
                }));
            for (std::size_t k = 0; k < colors.size(); ++k) est[colors[k]] = futs[k].get();
        } else {
            for (int c : colors) est[c] = estimate_marginal(cur, v, c, step_cfg, store.get());
        }

        int pivot;
        try {
            pivot = choose_pivot_color(est, cur.list_mask(v));
        } catch (const unsatisfiable_error&) {
            result.satisfiable = false;
            result.estimate = 0.0;
            if (rational) result.exact = Rational(0);
            return result;
        }
        const Probability& p = est[pivot];
        result.factors.push_back({v, pivot, p.value, p.exact});
        if (rational)
            acc_r /= *p.exact;
        else
            acc /= p.value;
        cur = fix_vertex(cur, v, pivot);
    }

    if (rational) {
        result.exact = acc_r;
        result.estimate = acc_r.to_double();
    } else {
        result.estimate = acc;
    }
    return result;
}

}  // namespace color4
