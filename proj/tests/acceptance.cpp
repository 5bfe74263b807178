// Acceptance suite: one criterion per entry, each printing a PASS/FAIL line.
// Run all with no arguments or a single criterion by number.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "color4/counter.hpp"
#include "color4/decay/potential.hpp"
#include "color4/decay/verifier.hpp"
#include "color4/estimator.hpp"
#include "color4/exact.hpp"
#include "color4/generators.hpp"
#include "color4/io.hpp"
#include "helpers.hpp"

using namespace color4;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

EstimatorConfig rat(int depth) { return {depth, Backend::Rational, true, 1}; }
EstimatorConfig flt(int depth) { return {depth, Backend::Float64, true, 1}; }

struct Outcome {
    bool pass = true;
    long checks = 0;
    long violations = 0;
    std::string detail;

    void require(bool ok, const std::string& what = "") {
        ++checks;
        if (!ok) {
            ++violations;
            pass = false;
            if (detail.empty()) detail = what;
        }
    }
};

// 1. Full-depth exactness: D = n+2 in rational mode reproduces the oracle
// bit-exactly on every (instance, vertex, color) of the small-graph corpus.
Outcome criterion1() {
    Outcome out;
    for (const auto& inst : enumerate_small(7)) {
        int n = inst.vertex_count();
        auto store = make_memo_store();
        for (int v : inst.vertices())
            for (int c = 1; c <= 4; ++c) {
                Rational est =
                    estimate_marginal(inst, v, c, rat(n + 2), store.get()).exact.value();
                Rational truth = exact_marginal(inst, v, c).value;
                out.require(est == truth, "estimate != oracle at full depth");
            }
    }
    return out;
}

// 2. Sum-to-one across depths, exact in rational mode, 1e-12 in float.
Outcome criterion2() {
    Outcome out;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        auto t = testutil::fuzz_reachable_triple(seed);
        auto store_r = make_memo_store();
        auto store_f = make_memo_store();
        for (int d : {0, 1, 2, 5, 8}) {
            Rational sum(0);
            double fsum = 0.0;
            for (int c = 1; c <= 4; ++c) {
                sum += estimate_marginal(t.inst, t.v, c, rat(d), store_r.get()).exact.value();
                fsum += estimate_marginal(t.inst, t.v, c, flt(d), store_f.get()).value;
            }
            out.require(sum == Rational(1), "rational sum != 1");
            out.require(std::abs(fsum - 1.0) <= 1e-12, "float sum drift > 1e-12");
        }
    }
    return out;
}

// 3. Bounds suite: range, lower and upper bounds, and the depth>=2 dichotomy
// with the structural classifier agreeing on which side occurs.
Outcome criterion3() {
    Outcome out;
    const Rational half(1, 2), lo2(1, 13), lo1(1, 6), up2(12, 25), up1(6, 13), hi(13, 27);
    for (std::uint64_t seed = 5000; seed < 6000; ++seed) {
        auto t = testutil::fuzz_reachable_triple(seed);
        int deg = t.inst.degree(t.v);
        bool in_own = mask_has(t.inst.list_mask(t.v), t.color);
        bool in_neighbor = false;
        for (int u : t.inst.neighbors(t.v))
            in_neighbor = in_neighbor || mask_has(t.inst.list_mask(u), t.color);
        auto cls = classify_boundary(t.inst, t.v, t.color);
        bool structural_half = cls.kind == BoundaryKind::HalfCase1 ||
                               cls.kind == BoundaryKind::HalfCase2 ||
                               cls.kind == BoundaryKind::HalfCase3;
        auto store = make_memo_store();
        for (int d : {0, 1, 2, 5, 8}) {
            Rational p = estimate_marginal(t.inst, t.v, t.color, rat(d), store.get())
                             .exact.value();
            out.require(p >= Rational(0) && p <= half, "outside [0,1/2]");
            if (in_own) {
                if (deg == 2) out.require(p >= lo2, "deg-2 lower bound 1/13");
                if (deg <= 1) out.require(p >= lo1, "deg<=1 lower bound 1/6");
            }
            if (in_neighbor) {
                if (deg == 2) out.require(p <= up2, "deg-2 upper bound 12/25");
                if (deg == 1) out.require(p <= up1, "deg-1 upper bound 6/13");
            }
            if (d >= 2) {
                bool is_half = p == half;
                out.require(is_half || p <= hi, "neither exactly 1/2 nor <= 13/27");
                out.require(is_half == structural_half, "classifier disagrees with value");
                out.require(p.is_zero() == (cls.kind == BoundaryKind::Zero),
                            "zero side disagrees with classifier");
            }
        }
    }
    return out;
}

// 4. Consistency dichotomy against the oracle at depth >= 2.
Outcome criterion4() {
    Outcome out;
    const Rational half(1, 2), lo(1, 13), hi(13, 27);
    for (std::uint64_t seed = 9000; seed < 10000; ++seed) {
        auto t = testutil::fuzz_reachable_triple(seed);
        Rational truth = exact_marginal(t.inst, t.v, t.color).value;
        auto store = make_memo_store();
        for (int d : {2, 5}) {
            Rational p =
                estimate_marginal(t.inst, t.v, t.color, rat(d), store.get()).exact.value();
            out.require(p.is_zero() == truth.is_zero(), "zero iff mismatch");
            out.require((p == half) == (truth == half), "half iff mismatch");
            out.require((p >= lo && p <= hi) == (truth >= lo && truth <= hi),
                        "interval iff mismatch");
        }
    }
    return out;
}

// 5. One-level phi-contraction with oracle-supplied child truths.
Outcome criterion5() {
    Outcome out;
    const double lambda = 9996.0 / 10000.0;
    const Rational half(1, 2);
    const int depth = 3;
    long tested = 0;
    for (std::uint64_t seed = 20000; tested < 500 && seed < 26000; ++seed) {
        auto t = testutil::fuzz_reachable_triple(seed);
        if (t.inst.degree(t.v) == 0) continue;
        Rational p = estimate_marginal(t.inst, t.v, t.color, rat(depth)).exact.value();
        Rational truth = exact_marginal(t.inst, t.v, t.color).value;
        if (p.is_zero() || p == half || truth.is_zero() || truth == half) continue;

        double max_child = 0.0;
        auto child = [&](const Instance& sub, int u, int c) {
            Rational est = estimate_marginal(sub, u, c, rat(depth - 1)).exact.value();
            Rational tr = exact_marginal(sub, u, c).value;
            if (tr.is_zero() || tr == half || est.is_zero() || est == half) return;
            double gap = std::abs(decay::phi(est.to_double()) - decay::phi(tr.to_double()));
            max_child = std::max(max_child, gap);
        };

        auto nbrs = t.inst.neighbors(t.v);
        Instance gv = remove_vertex(t.inst, t.v);
        if (nbrs.size() == 1) {
            for (int c = 1; c <= 4; ++c)
                if (mask_has(gv.list_mask(nbrs[0]), c)) child(gv, nbrs[0], c);
        } else {
            int a = nbrs[0], b = nbrs[1];
            if (gv.degree(a) < gv.degree(b)) std::swap(a, b);
            else if (gv.degree(a) == 0 && gv.degree(b) == 0 &&
                     !mask_has(gv.list_mask(a), t.color) && mask_has(gv.list_mask(b), t.color))
                std::swap(a, b);
            auto us = gv.neighbors(a);
            Instance gvv1 = remove_vertex(gv, a);
            for (std::size_t k = 1; k <= us.size(); ++k)
                for (int w : gv.list_colors(a)) {
                    Instance sub = restrict_lists(gvv1, us, static_cast<int>(k), w);
                    child(sub, us[k - 1], w);
                }
            for (int j : t.inst.list_colors(t.v))
                child(gv.with_color_removed(a, j), b, j);
        }
        double gap = std::abs(decay::phi(p.to_double()) - decay::phi(truth.to_double()));
        out.require(gap <= lambda * max_child + 1e-9, "phi gap exceeds lambda * children");
        ++tested;
    }
    out.require(tested >= 500, "not enough interior triples sampled");
    return out;
}

// 6. Counting accuracy at desk scale: float depth 8 within 1e-2 relative
// error, rational full depth bit-exact (the theoretical lambda-schedule depth
// is not reproducible at desk scale; this empirical criterion replaces it).
Outcome criterion6() {
    Outcome out;
    std::vector<Instance> corpus = enumerate_small(8);
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        corpus.push_back(testutil::random_valid_instance(40000 + seed, 6, 12));

    for (const auto& inst : corpus) {
        BigInt z = count_colorings(inst).value;
        double zd = z.to_double();
        auto f = approx_count(inst, DepthPolicy::fixed(8), flt(8));
        out.require(f.satisfiable, "float count reported unsat");
        out.require(std::abs(f.estimate - zd) <= 1e-2 * zd, "float depth-8 error > 1e-2");

        int n = inst.vertex_count();
        auto r = approx_count(inst, DepthPolicy::fixed(n + 2), rat(n + 2));
        out.require(r.exact.value() == Rational(z, BigInt(1)), "rational full depth not exact");
    }
    return out;
}

// 7. Contraction-rate verification at resolution 0.005 through the CLI.
Outcome criterion7() {
    Outcome out;
    unsigned hw = std::thread::hardware_concurrency();
    std::string cmd = std::string(COLOR4_CLI_PATH) + " verify-decay --case all --resolution " +
                      "0.005 --threads " + std::to_string(hw ? hw : 1) +
                      " --json > /tmp/color4_verify_all.json 2>/dev/null";
    int rc = std::system(cmd.c_str());
    out.require(WEXITSTATUS(rc) == 0, "verify-decay exited nonzero");
    std::ifstream in("/tmp/color4_verify_all.json");
    nlohmann::json arr;
    in >> arr;
    int seen = 0;
    for (const auto& r : arr) {
        out.require(r["pass"].get<bool>(), "check failed: " + r["name"].get<std::string>());
        ++seen;
    }
    out.require(seen == 16, "expected 16 reports (15 checks + overall)");
    return out;
}

// 8. Performance: memoized counting at n=100, D=6 under 60 s; without
// memoization the D -> D+2 runtime trend stays within the 12^2 branching
// factor (generous slack for measurement noise).
Outcome criterion8() {
    Outcome out;
    CorpusSpec spec;
    spec.family = Family::RandomCubic;
    spec.n = 100;
    spec.seed = 4242;
    Instance big = generate(spec);
    auto t0 = clock_type::now();
    auto r = approx_count(big, DepthPolicy::fixed(6), flt(6));
    double elapsed = seconds_since(t0);
    out.require(r.satisfiable, "n=100 count unsat?");
    out.require(elapsed < 60.0,
                "memoized n=100 D=6 took " + std::to_string(elapsed) + "s (>60s)");
    std::fprintf(stderr, "  [criterion 8] n=100 D=6 memoized: %.1fs, count ~ %g\n", elapsed,
                 r.estimate);

    spec.n = 20;
    spec.seed = 99;
    Instance mid = generate(spec);
    EstimatorConfig nomemo = flt(0);
    nomemo.memoize = false;
    double times[3];
    int depths[3] = {2, 4, 6};
    for (int k = 0; k < 3; ++k) {
        auto s0 = clock_type::now();
        approx_count(mid, DepthPolicy::fixed(depths[k]), nomemo);
        times[k] = seconds_since(s0);
    }
    std::fprintf(stderr, "  [criterion 8] no-memo n=20 times: D=2 %.3fs, D=4 %.3fs, D=6 %.3fs\n",
                 times[0], times[1], times[2]);
    double floor = 1e-3;
    out.require(times[1] <= 200.0 * std::max(times[0], floor), "D=2 -> D=4 growth above ~12^2");
    out.require(times[2] <= 200.0 * std::max(times[1], floor), "D=4 -> D=6 growth above ~12^2");
    return out;
}

// 9. Negative controls: a corrupted verifier threshold must fail with a
// reproducible argmax, and an unsatisfiable instance exits with code 3.
Outcome criterion9() {
    Outcome out;
    decay::VerifyOptions opts;
    opts.resolution = 0.02;
    opts.threshold_override = {{"resolve3+", 0.90}};
    auto r = decay::check_resolve3p(opts);
    out.require(!r.pass, "corrupted threshold still passed");
    out.require(r.argmax.size() == 3, "no argmax reported");
    out.require(r.max_found > 0.90, "max below corrupted threshold");

    std::string gp = "/tmp/color4_unsat.col";
    std::string lp = "/tmp/color4_unsat.json";
    {
        std::ofstream g(gp);
        g << "2 1\n0 1\n";
        std::ofstream l(lp);
        l << R"({"0": [1], "1": [1]})";
    }
    std::string cmd = std::string(COLOR4_CLI_PATH) + " count " + gp + " --lists " + lp +
                      " --depth 4 > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    out.require(WEXITSTATUS(rc) == kExitUnsat, "unsat instance did not exit 3");
    return out;
}

struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "full-depth exactness vs oracle", criterion1},
    {2, "sum-to-one across depths", criterion2},
    {3, "bounds suite", criterion3},
    {4, "consistency dichotomy vs oracle", criterion4},
    {5, "one-level phi-contraction", criterion5},
    {6, "counting accuracy at desk scale", criterion6},
    {7, "contraction-rate verification (resolution 0.005)", criterion7},
    {8, "performance envelope", criterion8},
    {9, "negative controls", criterion9},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    bool all_pass = true;
    for (const auto& c : kCriteria) {
        if (only && c.id != only) continue;
        auto t0 = clock_type::now();
        Outcome out = c.run();
        double secs = seconds_since(t0);
        std::printf("%s criterion %d: %s (%ld checks, %ld violations) [%.1fs]%s%s\n",
                    out.pass ? "PASS" : "FAIL", c.id, c.name, out.checks, out.violations, secs,
                    out.detail.empty() ? "" : " -- ", out.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && out.pass;
    }
    return all_pass ? 0 : 1;
}
