// color4: deterministic approximate counting of proper 4-colorings on graphs
// of maximum degree 3, with an exact oracle and a contraction-rate verifier.

#include <chrono>
#include <thread>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "color4/counter.hpp"
#include "color4/decay/verifier.hpp"
#include "color4/errors.hpp"
#include "color4/estimator.hpp"
#include "color4/exact.hpp"
#include "color4/generators.hpp"
#include "color4/io.hpp"

namespace {

using color4::Backend;
using nlohmann::json;

constexpr const char* kVersion = "1.0";

struct InputArgs {
    std::string graph_path;
    std::string lists_path;
};

struct LoadedInstance {
    color4::Instance instance;
    bool one_indexed = false;
};

LoadedInstance load_instance(const InputArgs& in) {
    auto parsed = color4::read_graph_file(in.graph_path);
    color4::ColorLists lists =
        in.lists_path.empty()
            ? color4::ColorLists::full(parsed.graph.slot_count())
            : color4::read_lists_file(in.lists_path, parsed.graph.slot_count(),
                                       parsed.one_indexed);
    return {color4::Instance(parsed.graph, std::move(lists)), parsed.one_indexed};
}

json input_json(const InputArgs& in) {
    json j;
    j["graph"] = in.graph_path;
    j["digest"] = color4::file_digest(in.graph_path);
    if (!in.lists_path.empty()) {
        j["lists"] = in.lists_path;
        j["lists_digest"] = color4::file_digest(in.lists_path);
    } else {
        j["lists"] = nullptr;
    }
    return j;
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_count(const InputArgs& in, std::optional<int> depth, std::optional<double> epsilon,
              double constant, Backend backend, bool memo, int threads, bool as_json) {
    auto t0 = std::chrono::steady_clock::now();
    auto loaded = load_instance(in);

    color4::DepthPolicy policy;
    if (depth) {
        policy = color4::DepthPolicy::fixed(*depth);
    } else if (epsilon) {
        policy = color4::DepthPolicy::target(*epsilon, constant);
    } else {
        policy = color4::DepthPolicy::fixed(8);
        std::cerr << "warning: no --depth/--epsilon given; using depth 8 "
                     "(accuracy at this depth is empirical, not covered by the "
                     "worst-case schedule)\n";
    }

    color4::EstimatorConfig cfg;
    cfg.backend = backend;
    cfg.memoize = memo;
    cfg.threads = threads;
    auto result = color4::approx_count(loaded.instance, policy, cfg);

    json rep;
    rep["version"] = kVersion;
    rep["command"] = "count";
    rep["input"] = input_json(in);
    rep["config"] = {{"depth", result.depth_used},
                     {"epsilon", epsilon ? json(*epsilon) : json(nullptr)},
                     {"constant", constant},
                     {"backend", backend == Backend::Rational ? "rational" : "float"},
                     {"memo", memo},
                     {"threads", threads},
                     {"seed", nullptr}};
    json res;
    res["count"] = result.estimate;
    res["unsatisfiable"] = !result.satisfiable;
    if (result.exact) res["count_rational"] = result.exact->to_string();
    rep["result"] = res;
    json factors = json::array();
    for (const auto& f : result.factors) {
        json jf = {{"vertex", loaded.one_indexed ? f.vertex + 1 : f.vertex},
                   {"color", f.color},
                   {"estimate", f.estimate}};
        if (f.exact) jf["estimate_rational"] = f.exact->to_string();
        factors.push_back(jf);
    }
    rep["factors"] = factors;
    rep["elapsed_seconds"] = elapsed_since(t0);

    if (as_json)
        std::cout << rep.dump(2) << "\n";
    else if (result.exact)
        std::cout << "count = " << result.exact->to_string() << "\n";
    else
        std::cout << "count = " << result.estimate << "\n";
    return result.satisfiable ? color4::kExitOk : color4::kExitUnsat;
}

int run_marginal(const InputArgs& in, int vertex, int color, int depth, Backend backend,
                 bool memo, bool as_json) {
    auto t0 = std::chrono::steady_clock::now();
    auto loaded = load_instance(in);
    int v = loaded.one_indexed ? vertex - 1 : vertex;

    color4::EstimatorConfig cfg;
    cfg.depth = depth;
    cfg.backend = backend;
    cfg.memoize = memo;
    auto p = color4::estimate_marginal(loaded.instance, v, color, cfg);

    std::optional<color4::BoundaryClass> cls;
    if (color4::check_reachable(loaded.instance, v).satisfied)
        cls = color4::classify_boundary(loaded.instance, v, color);

    auto kind_name = [](color4::BoundaryKind k) {
        switch (k) {
            case color4::BoundaryKind::Zero: return "Zero";
            case color4::BoundaryKind::HalfCase1: return "HalfCase1";
            case color4::BoundaryKind::HalfCase2: return "HalfCase2";
            case color4::BoundaryKind::HalfCase3: return "HalfCase3";
            default: return "Interior";
        }
    };

    if (as_json) {
        json rep;
        rep["version"] = kVersion;
        rep["command"] = "marginal";
        rep["input"] = input_json(in);
        rep["config"] = {{"depth", depth},
                         {"vertex", vertex},
                         {"color", color},
                         {"backend", backend == Backend::Rational ? "rational" : "float"}};
        json res;
        res["estimate"] = p.value;
        if (p.exact) res["estimate_rational"] = p.exact->to_string();
        res["boundary_class"] = cls ? json(kind_name(cls->kind)) : json(nullptr);
        if (cls && !cls->witness.empty()) res["boundary_witness"] = cls->witness;
        rep["result"] = res;
        rep["elapsed_seconds"] = elapsed_since(t0);
        std::cout << rep.dump(2) << "\n";
    } else {
        if (p.exact)
            std::cout << "Pr[c(v)=" << color << "] ~= " << p.exact->to_string() << " ("
                      << p.value << ")\n";
        else
            std::cout << "Pr[c(v)=" << color << "] ~= " << p.value << "\n";
        if (cls) std::cout << "boundary class: " << kind_name(cls->kind) << "\n";
    }
    return color4::kExitOk;
}

int run_exact(const InputArgs& in, std::optional<std::pair<int, int>> marginal, int cap,
              bool as_json) {
    auto loaded = load_instance(in);
    if (marginal) {
        int v = loaded.one_indexed ? marginal->first - 1 : marginal->first;
        auto m = color4::exact_marginal(loaded.instance, v, marginal->second, cap);
        if (as_json) {
            json rep = {{"version", kVersion},
                        {"command", "exact"},
                        {"input", input_json(in)},
                        {"result",
                         {{"marginal", m.value.to_string()},
                          {"numerator", m.numerator.to_string()},
                          {"denominator", m.denominator.to_string()}}}};
            std::cout << rep.dump(2) << "\n";
        } else {
            std::cout << m.value.to_string() << "\n";
        }
    } else {
        auto z = color4::count_colorings(loaded.instance, cap);
        if (as_json) {
            json rep = {{"version", kVersion},
                        {"command", "exact"},
                        {"input", input_json(in)},
                        {"result", {{"count", z.value.to_string()}}}};
            std::cout << rep.dump(2) << "\n";
        } else {
            std::cout << z.value.to_string() << "\n";
        }
    }
    return color4::kExitOk;
}

int run_verify(double resolution, const std::string& case_name, int threads, bool as_json) {
    color4::decay::VerifyOptions opts;
    opts.resolution = resolution;
    opts.threads = threads;
    auto reports = color4::decay::run_case(case_name, opts);
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;
    if (as_json) {
        std::cout << color4::decay::reports_to_json(reports) << "\n";
    } else {
        for (const auto& r : reports) {
            std::printf("%-24s max %.9f  vs %-12s  %s\n", r.name.c_str(), r.max_found,
                        r.threshold_text.c_str(), r.pass ? "pass" : "FAIL");
        }
    }
    return all_pass ? color4::kExitOk : 1;
}

int run_gen(const std::string& family, int n, double p, std::uint64_t seed,
            const std::string& lists_policy, std::uint64_t lists_seed, const std::string& out,
            const std::string& lists_out, bool plain) {
    color4::CorpusSpec spec;
    if (family == "k4") spec.family = color4::Family::CompleteK4;
    else if (family == "cycle") spec.family = color4::Family::Cycle;
    else if (family == "path") spec.family = color4::Family::Path;
    else if (family == "star3") spec.family = color4::Family::Star3;
    else if (family == "petersen") spec.family = color4::Family::Petersen;
    else if (family == "k33") spec.family = color4::Family::K33;
    else if (family == "cubic") spec.family = color4::Family::RandomCubic;
    else if (family == "subcubic") spec.family = color4::Family::RandomSubcubic;
    else throw color4::parse_error("unknown family '" + family + "'");
    spec.n = n;
    spec.p = p;
    spec.seed = seed;
    spec.lists = lists_policy == "random" ? color4::ListPolicy::RandomValid
                                          : color4::ListPolicy::Full;
    spec.lists_seed = lists_seed;

    color4::Graph g = color4::make_family_graph(spec.family, spec.n, spec.p, spec.seed);
    color4::ColorLists lists = color4::make_lists(g, spec.lists, spec.lists_seed);
    color4::write_graph_file(g, out, /*dimacs=*/!plain);
    if (!lists_out.empty()) color4::write_lists_file(lists, lists_out, /*one_indexed=*/!plain);
    return color4::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"approximate counting of proper 4-colorings on subcubic graphs"};
    app.require_subcommand(1);

    InputArgs in;
    bool as_json = false;
    unsigned hw = std::thread::hardware_concurrency();
    int threads = hw ? static_cast<int>(hw) : 1;

    auto* count = app.add_subcommand("count", "approximate the number of proper 4-colorings");
    std::optional<int> depth;
    std::optional<double> epsilon;
    double constant = 1.0;
    std::string backend_name = "float";
    bool no_memo = false;
    count->add_option("graph", in.graph_path, "graph file")->required();
    count->add_option("--lists", in.lists_path, "JSON color lists file");
    auto* dopt = count->add_option("--depth", depth, "fixed recursion depth");
    auto* eopt = count->add_option("--epsilon", epsilon, "target relative error");
    dopt->excludes(eopt);
    count->add_option("--constant", constant, "analysis constant C for --epsilon");
    count->add_option("--backend", backend_name, "float|rational")
        ->check(CLI::IsMember({"float", "rational"}));
    count->add_flag("--no-memo", no_memo, "disable memoization");
    count->add_option("--threads", threads, "worker threads");
    count->add_flag("--json", as_json, "machine-readable report");

    auto* marg = app.add_subcommand("marginal", "estimate Pr[c(v)=i] at a fixed depth");
    int m_vertex = 0, m_color = 1, m_depth = 8;
    marg->add_option("graph", in.graph_path, "graph file")->required();
    marg->add_option("--lists", in.lists_path, "JSON color lists file");
    marg->add_option("--vertex", m_vertex, "vertex id (file index base)")->required();
    marg->add_option("--color", m_color, "color in 1..4")->required();
    marg->add_option("--depth", m_depth, "recursion depth");
    marg->add_option("--backend", backend_name, "float|rational")
        ->check(CLI::IsMember({"float", "rational"}));
    marg->add_flag("--no-memo", no_memo, "disable memoization");
    marg->add_flag("--json", as_json, "machine-readable report");

    auto* exact = app.add_subcommand("exact", "exact count or marginal by brute force");
    std::vector<int> m_pair;
    int cap = color4::kDefaultOracleCap;
    exact->add_option("graph", in.graph_path, "graph file")->required();
    exact->add_option("--lists", in.lists_path, "JSON color lists file");
    exact->add_option("--marginal", m_pair, "vertex and color: exact Pr[c(v)=i] as p/q")
        ->expected(2);
    exact->add_option("--cap", cap, "vertex-count cap");
    exact->add_flag("--json", as_json, "machine-readable report");

    auto* verify = app.add_subcommand("verify-decay",
                                      "grid-search the contraction-rate inequalities");
    double resolution = 0.005;
    std::string case_name = "all";
    verify->add_option("--resolution", resolution, "grid step per dimension");
    verify->add_option("--case", case_name,
                       "deg1|jensen|jensen_mod|resolve3+|resolve2+1-|resolve2+1-d1|"
                       "d1-positive|all");
    verify->add_option("--threads", threads, "worker threads");
    verify->add_flag("--json", as_json, "machine-readable report");

    auto* gen = app.add_subcommand("gen", "write a corpus instance");
    std::string family = "k4", lists_policy = "full", out_path, lists_out;
    int g_n = 0;
    double g_p = 0.5;
    std::uint64_t seed = 0, lists_seed = 0;
    bool plain = false;
    gen->add_option("--family", family, "k4|cycle|path|star3|petersen|k33|cubic|subcubic")
        ->required();
    gen->add_option("--n", g_n, "vertex count for cycle/path/cubic/subcubic");
    gen->add_option("--p", g_p, "edge probability for subcubic");
    gen->add_option("--seed", seed, "PRNG seed");
    gen->add_option("--lists", lists_policy, "full|random")
        ->check(CLI::IsMember({"full", "random"}));
    gen->add_option("--lists-seed", lists_seed, "PRNG seed for random lists");
    gen->add_option("--out", out_path, "output graph file")->required();
    gen->add_option("--lists-out", lists_out, "output lists file");
    gen->add_flag("--plain", plain, "plain 0-indexed format instead of DIMACS");

    CLI11_PARSE(app, argc, argv);

    try {
        Backend backend = backend_name == "rational" ? Backend::Rational : Backend::Float64;
        if (count->parsed())
            return run_count(in, depth, epsilon, constant, backend, !no_memo, threads, as_json);
        if (marg->parsed())
            return run_marginal(in, m_vertex, m_color, m_depth, backend, !no_memo, as_json);
        if (exact->parsed()) {
            std::optional<std::pair<int, int>> mq;
            if (m_pair.size() == 2) mq = {{m_pair[0], m_pair[1]}};
            return run_exact(in, mq, cap, as_json);
        }
        if (verify->parsed()) return run_verify(resolution, case_name, threads, as_json);
        if (gen->parsed())
            return run_gen(family, g_n, g_p, seed, lists_policy, lists_seed, out_path, lists_out,
                           plain);
    } catch (const color4::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return color4::kExitParse;
    } catch (const color4::unsatisfiable_error& e) {
        std::cerr << "unsatisfiable: " << e.what() << "\n";
        return color4::kExitUnsat;
    } catch (const color4::capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return color4::kExitCapacity;
    } catch (const color4::invalid_instance_error& e) {
        std::cerr << "invalid instance: " << e.what() << "\n";
        return color4::kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return color4::kExitInvalid;
    }
    return color4::kExitOk;
}
