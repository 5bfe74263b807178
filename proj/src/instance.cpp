#include "color4/instance.hpp"

#include <algorithm>

#include "color4/errors.hpp"

namespace color4 {

std::vector<int> mask_colors(std::uint8_t m) {
    std::vector<int> out;
    for (int c = 1; c <= kPalette; ++c)
        if (mask_has(m, c)) out.push_back(c);
    return out;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw invalid_instance_error("negative vertex count");
    adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw invalid_instance_error("edge endpoint out of range");
        if (u == v) throw invalid_instance_error("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& a = adj_[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw invalid_instance_error("parallel edge at vertex " + std::to_string(v));
        if (a.size() > 3)
            throw invalid_instance_error("vertex " + std::to_string(v) + " has degree > 3");
    }
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& a : adj_) twice += static_cast<int>(a.size());
    return twice / 2;
}

ColorLists ColorLists::from_sets(const std::vector<std::vector<int>>& sets) {
    std::vector<std::uint8_t> masks(sets.size(), 0);
    for (std::size_t v = 0; v < sets.size(); ++v) {
        for (int c : sets[v]) {
            if (c < 1 || c > kPalette)
                throw invalid_instance_error("color " + std::to_string(c) +
                                             " outside palette {1,2,3,4}");
            masks[v] |= static_cast<std::uint8_t>(1u << (c - 1));
        }
    }
    return ColorLists(std::move(masks));
}

Instance::Instance(Graph g, ColorLists lists) : graph_(std::move(g)), lists_(std::move(lists)) {
    if (lists_.slot_count() != graph_.slot_count())
        throw invalid_instance_error("lists/graph vertex count mismatch");
    for (int v = 0; v < lists_.slot_count(); ++v)
        if (lists_.mask(v) & ~kFullMask)
            throw invalid_instance_error("list contains color outside palette");
    int n = graph_.slot_count();
    alive_.assign(n, 1);
    deg_.resize(n);
    for (int v = 0; v < n; ++v) deg_[v] = static_cast<std::uint8_t>(graph_.degree(v));
    alive_count_ = n;
}

void Instance::check_vertex(int v) const {
    if (v < 0 || v >= slot_count() || !alive_[v])
        throw contract_error("vertex " + std::to_string(v) + " not in instance");
}

std::vector<int> Instance::vertices() const {
    std::vector<int> out;
    out.reserve(alive_count_);
    for (int v = 0; v < slot_count(); ++v)
        if (alive_[v]) out.push_back(v);
    return out;
}

std::vector<int> Instance::neighbors(int v) const {
    std::vector<int> out;
    for (int u : graph_.neighbors(v))
        if (alive_[u]) out.push_back(u);
    return out;
}

bool Instance::valid_for_counting() const {
    for (int v = 0; v < slot_count(); ++v)
        if (alive_[v] && list_size(v) < deg_[v] + 1) return false;
    return true;
}

Instance Instance::with_vertex_removed(int v) const {
    check_vertex(v);
    Instance out = *this;
    out.alive_[v] = 0;
    out.deg_[v] = 0;
    --out.alive_count_;
    for (int u : graph_.neighbors(v))
        if (out.alive_[u]) --out.deg_[u];
    return out;
}

Instance Instance::with_color_removed(int v, int color) const {
    check_vertex(v);
    if (color < 1 || color > kPalette) throw contract_error("color outside palette");
    Instance out = *this;
    out.lists_.raw()[v] = mask_without(out.lists_.raw()[v], color);
    return out;
}

Instance Instance::with_list(int v, std::uint8_t mask) const {
    check_vertex(v);
    if (mask & ~kFullMask) throw contract_error("mask outside palette");
    Instance out = *this;
    out.lists_.raw()[v] = mask;
    return out;
}

Instance remove_vertex(const Instance& inst, int v) { return inst.with_vertex_removed(v); }

Instance restrict_lists(const Instance& inst, std::span<const int> ordered_neighbors, int k,
                        int color) {
    if (k < 1 || static_cast<std::size_t>(k) > ordered_neighbors.size())
        throw contract_error("index k outside 1..len(neighbors)");
    if (color < 1 || color > kPalette) throw contract_error("color outside palette");
    Instance out = inst;
    for (int l = 0; l < k - 1; ++l) {
        int u = ordered_neighbors[l];
        out.check_vertex(u);
        out = out.with_color_removed(u, color);
    }
    return out;
}

ReachabilityWitness check_reachable(const Instance& inst, int v) {
    inst.check_vertex(v);
    ReachabilityWitness w;
    w.target = v;
    for (int u : inst.vertices()) {
        if (inst.degree(u) > 3) {
            w.violated_condition = "deg(" + std::to_string(u) + ") > 3";
            return w;
        }
        if (inst.list_size(u) < inst.degree(u) + 1) {
            w.violated_condition = "|L(" + std::to_string(u) + ")| < deg+1";
            return w;
        }
    }
    if (inst.degree(v) > 2) {
        w.violated_condition = "deg(target) > 2";
        return w;
    }
    if (inst.list_size(v) < inst.degree(v) + 2) {
        w.violated_condition = "|L(target)| < deg(target)+2";
        return w;
    }
    w.satisfied = true;
    return w;
}

}  // namespace color4
