#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace color4 {

// Colors are 1..4; stored as bitmasks with bit (c-1) set for color c.
inline constexpr int kPalette = 4;
inline constexpr std::uint8_t kFullMask = 0xF;

inline bool mask_has(std::uint8_t m, int color) { return (m >> (color - 1)) & 1; }
inline std::uint8_t mask_without(std::uint8_t m, int color) {
    return static_cast<std::uint8_t>(m & ~(1u << (color - 1)));
}
inline int mask_size(std::uint8_t m) { return __builtin_popcount(m); }
std::vector<int> mask_colors(std::uint8_t m);

// Simple undirected graph, max degree 3, adjacency kept in ascending id order
// (the canonical neighbor order used throughout the recursion).
class Graph {
  public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int slot_count() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;
    int edge_count() const;

  private:
    std::vector<std::vector<int>> adj_;
};

class ColorLists {
  public:
    ColorLists() = default;
    explicit ColorLists(std::vector<std::uint8_t> masks) : masks_(std::move(masks)) {}
    static ColorLists full(int n) { return ColorLists(std::vector<std::uint8_t>(n, kFullMask)); }
    static ColorLists from_sets(const std::vector<std::vector<int>>& sets);

    std::uint8_t mask(int v) const { return masks_[v]; }
    int size(int v) const { return mask_size(masks_[v]); }
    int slot_count() const { return static_cast<int>(masks_.size()); }

    std::vector<std::uint8_t>& raw() { return masks_; }
    const std::vector<std::uint8_t>& raw() const { return masks_; }

  private:
    std::vector<std::uint8_t> masks_;
};

// Immutable list-coloring instance. Vertex ids are stable: removal marks a
// vertex absent instead of renumbering, so caches and oracles can key on the
// original ids. Degrees and adjacency always refer to alive vertices only.
class Instance {
  public:
    Instance() = default;
    Instance(Graph g, ColorLists lists);

    int slot_count() const { return graph_.slot_count(); }
    int vertex_count() const { return alive_count_; }
    bool alive(int v) const { return alive_[v]; }
    std::vector<int> vertices() const;

    int degree(int v) const { return deg_[v]; }
    // Alive neighbors in ascending id order.
    std::vector<int> neighbors(int v) const;
    bool adjacent(int u, int v) const { return alive_[u] && alive_[v] && graph_.adjacent(u, v); }

    std::uint8_t list_mask(int v) const { return lists_.mask(v); }
    int list_size(int v) const { return mask_size(lists_.mask(v)); }
    std::vector<int> list_colors(int v) const { return mask_colors(lists_.mask(v)); }

    // |L(v)| >= deg(v) + 1 for every alive vertex: the counting entry condition.
    bool valid_for_counting() const;

    const Graph& graph() const { return graph_; }

    // Surgery (returns new instances; *this is never modified).
    Instance with_vertex_removed(int v) const;
    Instance with_color_removed(int v, int color) const;
    Instance with_list(int v, std::uint8_t mask) const;

    void check_vertex(int v) const;

  private:
    Graph graph_;
    ColorLists lists_;
    std::vector<std::uint8_t> alive_;
    std::vector<std::uint8_t> deg_;
    int alive_count_ = 0;
};

struct ReachabilityWitness {
    int target = -1;
    bool satisfied = false;
    std::optional<std::string> violated_condition;
};

// (G,L,v) surgery operations.
Instance remove_vertex(const Instance& inst, int v);
// Removes color i from the lists of ordered_neighbors[l] for l < k (1-based k).
Instance restrict_lists(const Instance& inst, std::span<const int> ordered_neighbors, int k,
                        int color);
ReachabilityWitness check_reachable(const Instance& inst, int v);

}  // namespace color4
