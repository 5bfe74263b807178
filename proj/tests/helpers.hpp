#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "color4/counter.hpp"
#include "color4/estimator.hpp"
#include "color4/generators.hpp"
#include "color4/instance.hpp"

namespace testutil {

using namespace color4;

// Random valid instance: subcubic graph with |L(v)| >= deg(v)+1 lists.
inline Instance random_valid_instance(std::uint64_t seed, int n_lo = 4, int n_hi = 12) {
    SplitMix64 rng(seed);
    CorpusSpec spec;
    spec.family = Family::RandomSubcubic;
    spec.n = n_lo + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n_hi - n_lo + 1)));
    spec.p = 0.2 + 0.5 * rng.unit();
    spec.seed = rng.next();
    spec.lists = ListPolicy::RandomValid;
    spec.lists_seed = rng.next();
    return generate(spec);
}

// First vertex that makes (inst, v) reachable, preferring positive degree so
// the recursion actually branches.
inline std::optional<int> find_reachable_vertex(const Instance& inst) {
    std::optional<int> fallback;
    for (int v : inst.vertices()) {
        if (check_reachable(inst, v).satisfied) {
            if (inst.degree(v) > 0) return v;
            if (!fallback) fallback = v;
        }
    }
    return fallback;
}

// Planted exact-1/2 components (the three boundary structures), appended as a
// separate connected component so marginals factorize.
enum class Planted { IsolatedPair, PendantPair, Triangle };

struct PlantedTriple {
    Instance inst;
    int v;
    int color;
};

inline PlantedTriple plant_boundary(Planted kind, std::uint64_t seed) {
    SplitMix64 rng(seed);
    CorpusSpec spec;
    spec.family = Family::RandomSubcubic;
    spec.n = 3 + static_cast<int>(rng.bounded(5));
    spec.p = 0.3;
    spec.seed = rng.next();
    spec.lists = ListPolicy::RandomValid;
    spec.lists_seed = rng.next();
    Instance base = generate(spec);

    int n0 = base.slot_count();
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n0; ++v)
        for (int u : base.neighbors(v))
            if (u > v) edges.emplace_back(v, u);

    std::vector<std::vector<int>> sets(n0);
    for (int v = 0; v < n0; ++v) sets[v] = base.list_colors(v);

    int color = 1 + static_cast<int>(rng.bounded(4));
    int other = 1 + static_cast<int>(rng.bounded(4));
    while (other == color) other = 1 + static_cast<int>(rng.bounded(4));
    std::vector<int> rest;
    for (int c = 1; c <= 4; ++c)
        if (c != color && c != other) rest.push_back(c);

    int v = n0;
    switch (kind) {
        case Planted::IsolatedPair:
            sets.push_back({color, other});
            break;
        case Planted::PendantPair: {
            // L(v) misses `other`; L(u) = palette minus {color, other}
            sets.push_back({color, rest[0], rest[1]});
            sets.push_back(rest);
            edges.emplace_back(v, v + 1);
            break;
        }
        case Planted::Triangle: {
            sets.push_back({1, 2, 3, 4});
            std::vector<int> missing;
            for (int c = 1; c <= 4; ++c)
                if (c != color) missing.push_back(c);
            sets.push_back(missing);
            sets.push_back(missing);
            edges.emplace_back(v, v + 1);
            edges.emplace_back(v, v + 2);
            edges.emplace_back(v + 1, v + 2);
            break;
        }
    }
    Graph g(static_cast<int>(sets.size()), edges);
    return {Instance(g, ColorLists::from_sets(sets)), v, color};
}

// Reachable fuzz triple: mostly random instances, some planted boundary
// structures so both sides of the 0 / 1/2 / interior trichotomy occur.
inline PlantedTriple fuzz_reachable_triple(std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::uint64_t pick = rng.bounded(10);
    if (pick == 0) return plant_boundary(Planted::IsolatedPair, rng.next());
    if (pick == 1) return plant_boundary(Planted::PendantPair, rng.next());
    if (pick == 2) return plant_boundary(Planted::Triangle, rng.next());
    for (int tries = 0;; ++tries) {
        Instance inst = random_valid_instance(rng.next());
        auto v = find_reachable_vertex(inst);
        if (v) return {std::move(inst), *v, 1 + static_cast<int>(rng.bounded(4))};
        if (tries > 200) throw std::runtime_error("no reachable vertex found");
    }
}

}  // namespace testutil
