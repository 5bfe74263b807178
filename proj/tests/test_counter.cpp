#include <doctest.h>

#include <cmath>
#include <map>

#include "color4/counter.hpp"
#include "color4/errors.hpp"
#include "color4/exact.hpp"
#include "color4/generators.hpp"
#include "helpers.hpp"

using namespace color4;

TEST_SUITE_BEGIN("counter");

namespace {
Instance k4() {
    return Instance(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
                    ColorLists::full(4));
}
EstimatorConfig rat_cfg() { return {0, Backend::Rational, true, 1}; }
EstimatorConfig flt_cfg() { return {0, Backend::Float64, true, 1}; }
}  // namespace

TEST_CASE("fix_vertex pins a color") {
    Instance edge(Graph(2, {{0, 1}}), ColorLists::full(2));
    Instance rest = fix_vertex(edge, 1, 1);
    CHECK(rest.vertex_count() == 1);
    CHECK(rest.degree(0) == 0);
    CHECK(rest.list_colors(0) == std::vector<int>{2, 3, 4});

    Instance tri = fix_vertex(k4(), 0, 1);
    CHECK(tri.vertex_count() == 3);
    for (int v : tri.vertices()) {
        CHECK(tri.degree(v) == 2);
        CHECK(tri.list_colors(v) == std::vector<int>{2, 3, 4});
    }

    CHECK_THROWS_AS(fix_vertex(Instance(Graph(1, {}), ColorLists::from_sets({{2}})), 0, 1),
                    contract_error);
}

TEST_CASE("fix_vertex preserves validity") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Instance inst = testutil::random_valid_instance(seed);
        SplitMix64 rng(seed * 77 + 1);
        auto verts = inst.vertices();
        int v = verts[rng.bounded(verts.size())];
        auto colors = inst.list_colors(v);
        int c = colors[rng.bounded(colors.size())];
        CHECK(fix_vertex(inst, v, c).valid_for_counting());
    }
}

TEST_CASE("choose_pivot_color takes the argmax with smallest-id ties") {
    auto p = [](double v) { return Probability::from_double(v); };
    std::map<int, Probability> a{{1, p(0.5)}, {2, p(0.3)}, {3, p(0.2)}};
    CHECK(choose_pivot_color(a, 0b0111) == 1);
    std::map<int, Probability> b{{1, p(0.25)}, {2, p(0.25)}, {3, p(0.25)}, {4, p(0.25)}};
    CHECK(choose_pivot_color(b, 0b1111) == 1);
    std::map<int, Probability> c{{1, p(0.2)}, {2, p(0.4)}, {3, p(0.4)}};
    CHECK(choose_pivot_color(c, 0b0111) == 2);
    std::map<int, Probability> z{{1, p(0.0)}, {2, p(0.0)}};
    CHECK_THROWS_AS(choose_pivot_color(z, 0b0011), unsatisfiable_error);
    CHECK_THROWS_AS(choose_pivot_color(a, 0b1111), contract_error);  // color 4 uncovered
}

TEST_CASE("depth_for_epsilon solves the schedule inequality") {
    // target/C a hair above lambda^3 must give t = 6: lambda^3 passes at
    // t = 6 and lambda^2 = lambda^3/\lambda fails by a factor ~1.0004.
    double lam3 = kLambda * kLambda * kLambda;
    double eps = 0.5;
    double target = eps / (2.0 * 1) / 25.0;  // n = 1
    DepthPolicy p = DepthPolicy::target(eps, target / (lam3 * (1.0 + 1e-6)));
    CHECK(depth_for_epsilon(p, 1) == 6);

    // monotone: larger epsilon never needs more depth
    DepthPolicy q1 = DepthPolicy::target(0.2, 1.0);
    DepthPolicy q2 = DepthPolicy::target(0.4, 1.0);
    CHECK(depth_for_epsilon(q2, 10) <= depth_for_epsilon(q1, 10));

    // closed form agreement and the defining property
    DepthPolicy r = DepthPolicy::target(0.5, 1.0);
    int n = 10;
    int t = depth_for_epsilon(r, n);
    double tgt = r.epsilon / (2.0 * n) / 25.0;
    double closed = std::ceil(3.0 + std::log(25.0 * 2.0 * n / r.epsilon) / (-std::log(kLambda)));
    CHECK(std::abs(t - closed) <= 1.0);
    CHECK(std::pow(kLambda, t - 3) <= tgt * (1.0 + 1e-9));
    CHECK(std::pow(kLambda, t - 4) > tgt * (1.0 - 1e-9));

    CHECK_THROWS_AS(depth_for_epsilon(DepthPolicy::fixed(5), 10), contract_error);
}

TEST_CASE("approx_count on the named instances") {
    auto r = approx_count(k4(), DepthPolicy::fixed(10), rat_cfg());
    CHECK(r.exact.value() == Rational(24));
    CHECK(r.factors.size() == 4);
    Rational prod(1);
    for (const auto& f : r.factors) prod *= f.exact.value();
    CHECK(prod * r.exact.value() == Rational(1));

    CorpusSpec c5;
    c5.family = Family::Cycle;
    c5.n = 5;
    auto rc5 = approx_count(generate(c5), DepthPolicy::fixed(10), flt_cfg());
    CHECK(std::abs(rc5.estimate - 240.0) <= 1e-9 * 240.0);

    Instance pet = generate({Family::Petersen});
    auto oracle = count_colorings(pet).value;
    auto rp = approx_count(pet, DepthPolicy::fixed(12), rat_cfg());
    CHECK(rp.exact.value() == Rational(oracle, BigInt(1)));
    auto rf = approx_count(pet, DepthPolicy::fixed(6), flt_cfg());
    CHECK(std::abs(rf.estimate - oracle.to_double()) / oracle.to_double() < 0.01);
}

TEST_CASE("telescoping with exact marginals reproduces Z") {
    for (std::uint64_t seed = 400; seed < 420; ++seed) {
        Instance inst = testutil::random_valid_instance(seed, 4, 10);
        BigInt z = count_colorings(inst).value;
        if (z.is_zero()) continue;
        Rational prod(1);
        Instance cur = inst;
        for (int v = 0; v < inst.slot_count(); ++v) {
            if (!cur.alive(v)) continue;
            int c = cur.list_colors(v)[0];
            Rational m = exact_marginal(cur, v, c).value;
            if (m.is_zero()) {
                // pick a usable color instead
                for (int cc : cur.list_colors(v)) {
                    m = exact_marginal(cur, v, cc).value;
                    if (!m.is_zero()) { c = cc; break; }
                }
            }
            prod /= m;
            cur = fix_vertex(cur, v, c);
        }
        CHECK(prod == Rational(z, BigInt(1)));
    }
}

TEST_CASE("error composition from per-factor perturbations") {
    SplitMix64 rng(99);
    for (std::uint64_t seed = 500; seed < 510; ++seed) {
        Instance inst = testutil::random_valid_instance(seed, 4, 9);
        int n = inst.vertex_count();
        double eps = 0.2;
        double per_step = eps / (2.0 * n);
        double z = count_colorings(inst).value.to_double();
        double est = 1.0;
        Instance cur = inst;
        for (int v = 0; v < inst.slot_count(); ++v) {
            if (!cur.alive(v)) continue;
            int c = cur.list_colors(v)[0];
            double m = exact_marginal(cur, v, c).value.to_double();
            if (m == 0.0) {
                for (int cc : cur.list_colors(v))
                    if ((m = exact_marginal(cur, v, cc).value.to_double()) > 0.0) {
                        c = cc;
                        break;
                    }
            }
            double wobble = 1.0 + per_step * (2.0 * rng.unit() - 1.0);
            est /= m * wobble;
            cur = fix_vertex(cur, v, c);
        }
        CHECK(est >= (1.0 - eps) * z / (1.0 + 1e-9));
        CHECK(est <= (1.0 + eps) * z * (1.0 + 1e-9));
    }
}

TEST_CASE("unsatisfiable inputs count zero through forced-color propagation") {
    // edge with both endpoints forced to color 1
    Instance clash(Graph(2, {{0, 1}}), ColorLists::from_sets({{1}, {1}}));
    auto r = approx_count(clash, DepthPolicy::fixed(4), flt_cfg());
    CHECK(!r.satisfiable);
    CHECK(r.estimate == 0.0);

    // cascade: forcing ripples down a path
    Instance ripple(Graph(3, {{0, 1}, {1, 2}}), ColorLists::from_sets({{1}, {1, 2}, {2}}));
    auto r2 = approx_count(ripple, DepthPolicy::fixed(4), rat_cfg());
    CHECK(!r2.satisfiable);
    CHECK(r2.exact.value().is_zero());

    // a satisfiable forced chain still counts correctly
    Instance chain(Graph(2, {{0, 1}}), ColorLists::from_sets({{1}, {1, 2}}));
    auto r3 = approx_count(chain, DepthPolicy::fixed(4), rat_cfg());
    CHECK(r3.satisfiable);
    CHECK(r3.exact.value() == Rational(1));

    Instance invalid(Graph(2, {{0, 1}}), ColorLists::from_sets({{1, 2}, {1}}));
    // after propagation vertex 0 keeps {2}: forced again -> counts fine
    auto r4 = approx_count(invalid, DepthPolicy::fixed(4), rat_cfg());
    CHECK(r4.satisfiable);
    CHECK(r4.exact.value() == Rational(1));
}

TEST_CASE("corpus accuracy improves with depth") {
    double worst4 = 0.0, worst6 = 0.0;
    for (const auto& inst : enumerate_small(6)) {
        double z = count_colorings(inst).value.to_double();
        auto cfg = flt_cfg();
        double e4 =
            std::abs(approx_count(inst, DepthPolicy::fixed(4), cfg).estimate - z) / z;
        double e6 =
            std::abs(approx_count(inst, DepthPolicy::fixed(6), cfg).estimate - z) / z;
        worst4 = std::max(worst4, e4);
        worst6 = std::max(worst6, e6);
    }
    CHECK(worst6 <= worst4 + 1e-15);
}

TEST_CASE("thread count does not change results") {
    Instance pet = generate({Family::Petersen});
    EstimatorConfig seq = flt_cfg();
    EstimatorConfig par = flt_cfg();
    par.threads = 4;
    auto a = approx_count(pet, DepthPolicy::fixed(5), seq);
    auto b = approx_count(pet, DepthPolicy::fixed(5), par);
    CHECK(a.estimate == b.estimate);
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        CHECK(a.factors[i].color == b.factors[i].color);
        CHECK(a.factors[i].estimate == b.factors[i].estimate);
    }
}

TEST_CASE("degenerate instances") {
    Instance empty(Graph(0, {}), ColorLists::full(0));
    auto r = approx_count(empty, DepthPolicy::fixed(4), rat_cfg());
    CHECK(r.satisfiable);
    CHECK(r.exact.value() == Rational(1));  // empty product

    // three isolated vertices with full lists: 4^3
    Instance iso(Graph(3, {}), ColorLists::full(3));
    auto r2 = approx_count(iso, DepthPolicy::fixed(2), rat_cfg());
    CHECK(r2.exact.value() == Rational(64));

    // invalid instance (list shorter than degree+1 and not forced) rejects
    Instance bad(Graph(3, {{0, 1}, {0, 2}, {1, 2}}),
                 ColorLists::from_sets({{1, 2}, {1, 2}, {1, 2}}));
    CHECK_THROWS_AS(approx_count(bad, DepthPolicy::fixed(4), rat_cfg()),
                    invalid_instance_error);
}

TEST_CASE("target-epsilon mode reports its schedule") {
    DepthPolicy p = DepthPolicy::target(0.9, 1e-9);
    Instance solo(Graph(1, {}), ColorLists::full(1));
    auto r = approx_count(solo, p, flt_cfg());
    CHECK(r.epsilon_claimed.has_value());
    CHECK(r.depth_used == depth_for_epsilon(p, 1));
    CHECK(r.estimate == doctest::Approx(4.0));
}

TEST_SUITE_END();
