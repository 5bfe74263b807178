#include "color4/generators.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>
#include <utility>

#include "color4/errors.hpp"

namespace color4 {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList cycle_edges(int n) {
    if (n < 3) throw parse_error("cycle requires n >= 3");
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return e;
}

EdgeList path_edges(int n) {
    if (n < 1) throw parse_error("path requires n >= 1");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return e;
}

EdgeList petersen_edges() {
    EdgeList e;
    for (int i = 0; i < 5; ++i) e.emplace_back(i, (i + 1) % 5);        // outer cycle
    for (int i = 0; i < 5; ++i) e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    for (int i = 0; i < 5; ++i) e.emplace_back(i, i + 5);              // spokes
    return e;
}

EdgeList k33_edges() {
    EdgeList e;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) e.emplace_back(a, b);
    return e;
}

EdgeList random_cubic_edges(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) throw parse_error("random cubic requires even n >= 4");
    SplitMix64 rng(seed);
    std::vector<int> points(3 * n);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        for (int i = 0; i < 3 * n; ++i) points[i] = i;
        for (int i = 3 * n - 1; i > 0; --i) {
            int j = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i) + 1));
            std::swap(points[i], points[j]);
        }
        EdgeList edges;
        std::unordered_set<int> seen;
        bool ok = true;
        for (int i = 0; i < 3 * n && ok; i += 2) {
            int u = points[i] / 3, v = points[i + 1] / 3;
            if (u == v) { ok = false; break; }
            int key = std::min(u, v) * n + std::max(u, v);
            if (!seen.insert(key).second) { ok = false; break; }
            edges.emplace_back(u, v);
        }
        if (ok) return edges;
    }
    throw parse_error("pairing model failed to produce a simple cubic graph");
}

EdgeList random_subcubic_edges(int n, double p, std::uint64_t seed) {
    if (n < 1) throw parse_error("subcubic requires n >= 1");
    SplitMix64 rng(seed);
    std::vector<int> deg(n, 0);
    EdgeList edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double r = rng.unit();
            if (r < p && deg[i] < 3 && deg[j] < 3) {
                edges.emplace_back(i, j);
                ++deg[i];
                ++deg[j];
            }
        }
    return edges;
}

}  // namespace

Graph make_family_graph(Family family, int n, double p, std::uint64_t seed) {
    switch (family) {
        case Family::CompleteK4:
            return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        case Family::Cycle: return Graph(n, cycle_edges(n));
        case Family::Path: return Graph(n, path_edges(n));
        case Family::Star3: return Graph(4, {{0, 1}, {0, 2}, {0, 3}});
        case Family::Petersen: return Graph(10, petersen_edges());
        case Family::K33: return Graph(6, k33_edges());
        case Family::RandomCubic: return Graph(n, random_cubic_edges(n, seed));
        case Family::RandomSubcubic: return Graph(n, random_subcubic_edges(n, p, seed));
    }
    throw parse_error("unknown family");
}

ColorLists make_lists(const Graph& g, ListPolicy policy, std::uint64_t seed) {
    int n = g.slot_count();
    if (policy == ListPolicy::Full) return ColorLists::full(n);
    SplitMix64 rng(seed);
    std::vector<std::uint8_t> masks(n, kFullMask);
    for (int v = 0; v < n; ++v) {
        int removable = 3 - g.degree(v);  // keeps |L(v)| >= deg(v)+1
        if (removable <= 0) continue;
        int r = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(removable) + 1));
        for (int t = 0; t < r; ++t) {
            auto colors = mask_colors(masks[v]);
            int pick = static_cast<int>(rng.bounded(colors.size()));
            masks[v] = mask_without(masks[v], colors[pick]);
        }
    }
    return ColorLists(std::move(masks));
}

Instance generate(const CorpusSpec& spec) {
    Graph g = make_family_graph(spec.family, spec.n, spec.p, spec.seed);
    return Instance(g, make_lists(g, spec.lists, spec.lists_seed));
}

namespace {

// Canonical code of a graph on n <= 8 vertices: the minimum, over vertex
// orderings, of the bit string whose k-th block gives adjacency between the
// k-th placed vertex and the previously placed ones. Backtracking with
// prefix pruning against the incumbent minimum.
struct Canonicalizer {
    int n;
    const std::array<std::uint8_t, 8>& adj;
    std::uint32_t best;
    int total_bits;
    std::array<int, 8> perm{};
    std::uint8_t used = 0;

    Canonicalizer(int n_, const std::array<std::uint8_t, 8>& a) : n(n_), adj(a) {
        total_bits = n * (n - 1) / 2;
        best = ~0u >> (32 - (total_bits == 0 ? 1 : total_bits));
        rec(0, 0, 0);
    }

    void rec(int level, std::uint32_t code, int bits) {
        if (level == n) {
            if (code < best) best = code;
            return;
        }
        // Candidates sorted by the bits they would contribute.
        std::array<std::pair<std::uint32_t, int>, 8> cand;
        int m = 0;
        for (int u = 0; u < n; ++u) {
            if (used & (1u << u)) continue;
            std::uint32_t b = 0;
            for (int j = 0; j < level; ++j)
                b = (b << 1) | ((adj[u] >> perm[j]) & 1u);
            cand[m++] = {b, u};
        }
        std::sort(cand.begin(), cand.begin() + m);
        for (int t = 0; t < m; ++t) {
            auto [b, u] = cand[t];
            std::uint32_t next_code = (code << level) | b;
            int next_bits = bits + level;
            if (total_bits > next_bits) {
                if (next_code > (best >> (total_bits - next_bits))) continue;
            } else if (next_code > best) {
                continue;
            }
            perm[level] = u;
            used |= static_cast<std::uint8_t>(1u << u);
            rec(level + 1, next_code, next_bits);
            used &= static_cast<std::uint8_t>(~(1u << u));
        }
    }
};

bool connected(const std::array<std::uint8_t, 8>& adj, int n) {
    std::uint8_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint8_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier & (1u << v)) next |= adj[v];
        frontier = next & static_cast<std::uint8_t>(~seen);
        seen |= frontier;
    }
    return seen == static_cast<std::uint8_t>((1u << n) - 1);
}

// Breadth-first over isomorphism classes by single-edge augmentation: every
// max-degree-3 graph arises from the empty graph by adding edges, and dedup
// by canonical code keeps one representative per class and level.
void enumerate_classes(int n, std::vector<Instance>* out) {
    std::unordered_set<std::uint32_t> seen;
    std::vector<std::array<std::uint8_t, 8>> frontier = {{}};
    seen.insert(Canonicalizer(n, frontier[0]).best);

    auto emit = [&](const std::array<std::uint8_t, 8>& adj) {
        if (!connected(adj, n)) return;
        EdgeList edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (adj[i] & (1u << j)) edges.emplace_back(i, j);
        out->push_back(Instance(Graph(n, edges), ColorLists::full(n)));
    };

    emit(frontier[0]);
    while (!frontier.empty()) {
        std::vector<std::array<std::uint8_t, 8>> next;
        for (const auto& g : frontier) {
            for (int i = 0; i < n; ++i) {
                if (__builtin_popcount(g[i]) >= 3) continue;
                for (int j = i + 1; j < n; ++j) {
                    if ((g[i] >> j) & 1) continue;
                    if (__builtin_popcount(g[j]) >= 3) continue;
                    auto h = g;
                    h[i] |= static_cast<std::uint8_t>(1u << j);
                    h[j] |= static_cast<std::uint8_t>(1u << i);
                    if (!seen.insert(Canonicalizer(n, h).best).second) continue;
                    next.push_back(h);
                    emit(h);
                }
            }
        }
        frontier = std::move(next);
    }
}

}  // namespace

std::vector<Instance> enumerate_small(int n_max) {
    if (n_max < 1 || n_max > 8) throw parse_error("enumerate_small supports 1 <= n_max <= 8");
    std::vector<Instance> out;
    for (int n = 1; n <= n_max; ++n) enumerate_classes(n, &out);
    return out;
}

}  // namespace color4
