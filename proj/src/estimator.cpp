#include "color4/estimator.hpp"

#include <algorithm>
#include <mutex>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "color4/errors.hpp"

namespace color4 {

namespace {

struct MemoKey {
    std::vector<std::uint8_t> bytes;
    std::size_t hash = 0;
    bool operator==(const MemoKey& o) const { return bytes == o.bytes; }
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const { return k.hash; }
};

std::size_t fnv1a(const std::uint8_t* p, std::size_t n) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < n; ++i) h = (h ^ p[i]) * 1099511628211ull;
    return static_cast<std::size_t>(h);
}

}  // namespace

class MemoStore {
  public:
    static constexpr int kShards = 16;

    template <class Num>
    bool get(const MemoKey& k, Num* out) {
        auto& sh = shards_[k.hash % kShards];
        std::lock_guard<std::mutex> lk(sh.mu);
        auto& m = map_of<Num>(sh);
        auto it = m.find(k);
        if (it == m.end()) return false;
        *out = it->second;
        return true;
    }

    template <class Num>
    void put(MemoKey k, const Num& v) {
        auto& sh = shards_[k.hash % kShards];
        std::lock_guard<std::mutex> lk(sh.mu);
        map_of<Num>(sh).emplace(std::move(k), v);
    }

  private:
    struct Shard {
        std::mutex mu;
        std::unordered_map<MemoKey, double, MemoKeyHash> floats;
        std::unordered_map<MemoKey, Rational, MemoKeyHash> rationals;
    };

    template <class Num>
    static auto& map_of(Shard& sh) {
        if constexpr (std::is_same_v<Num, double>)
            return sh.floats;
        else
            return sh.rationals;
    }

    Shard shards_[kShards];
};

std::shared_ptr<MemoStore> make_memo_store() { return std::make_shared<MemoStore>(); }

namespace {

template <class Num>
struct Ops;

template <>
struct Ops<double> {
    static double frac(long long n, long long d) { return static_cast<double>(n) / static_cast<double>(d); }
    static double from_int(long long n) { return static_cast<double>(n); }
    static bool is_zero(double x) { return x == 0.0; }
};

template <>
struct Ops<Rational> {
    static Rational frac(long long n, long long d) { return Rational(n, d); }
    static Rational from_int(long long n) { return Rational(n); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
};

// Mutable evaluation state over one base instance: alive flags, degrees and
// list masks with strictly nested do/undo, so the recursion never copies the
// instance.
struct Workspace {
    int n = 0;
    std::vector<std::vector<int>> adj;  // alive-at-construction neighbors, ascending
    std::vector<std::uint8_t> alive;
    std::vector<std::int8_t> deg;
    std::vector<std::uint8_t> mask;

    // BFS scratch for memo keys
    std::vector<int> dist;
    std::vector<int> queue;
    int stamp = 0;
    std::vector<int> seen_stamp;

    explicit Workspace(const Instance& inst) {
        n = inst.slot_count();
        adj.resize(n);
        alive.assign(n, 0);
        deg.assign(n, 0);
        mask.assign(n, 0);
        for (int v = 0; v < n; ++v) {
            if (!inst.alive(v)) continue;
            alive[v] = 1;
            adj[v] = inst.neighbors(v);
            deg[v] = static_cast<std::int8_t>(adj[v].size());
            mask[v] = inst.list_mask(v);
        }
        dist.assign(n, 0);
        seen_stamp.assign(n, 0);
    }

    void kill(int v) {
        alive[v] = 0;
        for (int u : adj[v])
            if (alive[u]) --deg[u];
    }

    void revive(int v) {
        alive[v] = 1;
        int d = 0;
        for (int u : adj[v])
            if (alive[u]) {
                ++deg[u];
                ++d;
            }
        deg[v] = static_cast<std::int8_t>(d);
    }

    bool drop_color(int v, int c) {
        if (!mask_has(mask[v], c)) return false;
        mask[v] = mask_without(mask[v], c);
        return true;
    }

    void restore_color(int v, int c) { mask[v] |= static_cast<std::uint8_t>(1u << (c - 1)); }

    bool edge(int u, int v) const {
        for (int w : adj[u])
            if (w == v) return true;
        return false;
    }

    int alive_count() const {
        int c = 0;
        for (int v = 0; v < n; ++v) c += alive[v];
        return c;
    }
};

// Local structures whose marginal is exactly 1/2; assumes i in L(v), deg(v) <= 2
// and |L(v)| >= deg(v)+2 on a globally well-formed instance.
bool half_structure(const Workspace& ws, int v, int color) {
    int d = ws.deg[v];
    if (d == 0) return mask_size(ws.mask[v]) == 2;
    if (d == 1) {
        if (mask_size(ws.mask[v]) != 3) return false;
        int u = -1;
        for (int w : ws.adj[v])
            if (ws.alive[w]) { u = w; break; }
        int absent = 0;
        for (int c = 1; c <= kPalette; ++c)
            if (!mask_has(ws.mask[v], c)) absent = c;
        return !mask_has(ws.mask[u], color) && !mask_has(ws.mask[u], absent);
    }
    // d == 2
    int u1 = -1, u2 = -1;
    for (int w : ws.adj[v])
        if (ws.alive[w]) (u1 < 0 ? u1 : u2) = w;
    if (!ws.edge(u1, u2)) return false;
    return !mask_has(ws.mask[u1], color) && !mask_has(ws.mask[u2], color);
}

template <class Num>
struct Evaluator {
    Workspace ws;
    MemoStore* memo = nullptr;
    bool shortcircuit = true;

    explicit Evaluator(const Instance& inst) : ws(inst) {}

    Num eval(int v, int color, int depth) {
        if (!mask_has(ws.mask[v], color)) return Ops<Num>::from_int(0);
        int d = ws.deg[v];
        int lsize = mask_size(ws.mask[v]);
        if (shortcircuit && depth >= 2 && d <= 2 && lsize >= d + 2 &&
            half_structure(ws, v, color))
            return Ops<Num>::frac(1, 2);
        if (depth <= 0 || d == 0) return Ops<Num>::frac(1, lsize);

        MemoKey key;
        if (memo) {
            key = make_key(v, color, depth);
            Num hit;
            if (memo->get<Num>(key, &hit)) return hit;
        }
        Num out = d == 1 ? eval_p1(v, color, depth)
                         : (d == 2 ? eval_p2(v, color, depth) : eval_p3(v, color, depth));
        if (memo) memo->put<Num>(std::move(key), out);
        return out;
    }

    Num eval_p1(int v, int color, int depth) {
        int lsize = mask_size(ws.mask[v]);
        if (lsize < 2) throw contract_error("deg-1 vertex with |L| < 2 in recursion");
        int v1 = -1;
        for (int w : ws.adj[v])
            if (ws.alive[w]) { v1 = w; break; }
        Num one = Ops<Num>::from_int(1);
        ws.kill(v);
        Num res;
        if (lsize == 2) {
            int other = 0;
            for (int c = 1; c <= kPalette; ++c)
                if (c != color && mask_has(ws.mask[v], c)) other = c;
            Num x = eval(v1, color, depth - 1);
            Num y = eval(v1, other, depth - 1);
            res = (one - x) / (Ops<Num>::from_int(2) - x - y);
        } else if (lsize == 4) {
            Num x = eval(v1, color, depth - 1);
            res = (one - x) / Ops<Num>::from_int(3);
        } else {  // |L(v)| == 3; x vanishes by itself when i is missing from L(v1)
            int absent = 0;
            for (int c = 1; c <= kPalette; ++c)
                if (!mask_has(ws.mask[v], c)) absent = c;
            Num x = eval(v1, color, depth - 1);
            Num y = eval(v1, absent, depth - 1);
            res = (one - x) / (Ops<Num>::from_int(2) + y);
        }
        ws.revive(v);
        return res;
    }

    // Two-layer inner weights for v1 inside G_v (v already killed): f_j for
    // every color j, zero when j not in L(v1).
    void inner_weights(int v1, int depth, Num f[kPalette + 1]) {
        Num one = Ops<Num>::from_int(1);
        std::uint8_t lv1 = ws.mask[v1];
        std::vector<int> us;
        for (int w : ws.adj[v1])
            if (ws.alive[w]) us.push_back(w);
        int d1 = static_cast<int>(us.size());

        Num prod[kPalette + 1];
        for (int w = 1; w <= kPalette; ++w) prod[w] = one;
        ws.kill(v1);
        for (int k = 1; k <= d1; ++k) {
            for (int w = 1; w <= kPalette; ++w) {
                if (!mask_has(lv1, w)) continue;
                bool touched[3] = {false, false, false};
                for (int l = 0; l < k - 1; ++l) touched[l] = ws.drop_color(us[l], w);
                Num x = eval(us[k - 1], w, depth - 1);
                for (int l = k - 2; l >= 0; --l)
                    if (touched[l]) ws.restore_color(us[l], w);
                prod[w] = prod[w] * (one - x);
            }
        }
        ws.revive(v1);

        Num denom = Ops<Num>::from_int(0);
        for (int w = 1; w <= kPalette; ++w)
            if (mask_has(lv1, w)) denom += prod[w];
        if (Ops<Num>::is_zero(denom))
            throw unsatisfiable_error("two-layer inner denominator is zero");
        for (int w = 1; w <= kPalette; ++w)
            f[w] = mask_has(lv1, w) ? prod[w] / denom : Ops<Num>::from_int(0);
    }

    // Neighbor convention: deg(v1) >= deg(v2), ascending id on ties, except
    // the degree-1 tie where v1 is chosen so "i not in L(v1)" implies
    // "i not in L(v2)". In that case both neighbors are isolated once v is
    // removed and the recursion value is swap-invariant, which is what keeps
    // the four-color sum at exactly one.
    std::pair<int, int> ordered_pair(int v, int color) const {
        int a = -1, b = -1;
        for (int w : ws.adj[v])
            if (ws.alive[w]) (a < 0 ? a : b) = w;
        if (ws.deg[a] < ws.deg[b]) std::swap(a, b);
        else if (ws.deg[a] == ws.deg[b] && ws.deg[a] == 1 && !mask_has(ws.mask[a], color) &&
                 mask_has(ws.mask[b], color))
            std::swap(a, b);
        return {a, b};
    }

    Num eval_p2(int v, int color, int depth) {
        auto [v1, v2] = ordered_pair(v, color);
        std::uint8_t lv = ws.mask[v];
        Num one = Ops<Num>::from_int(1);

        ws.kill(v);
        Num f[kPalette + 1];
        inner_weights(v1, depth, f);

        Num num = Ops<Num>::from_int(0);
        Num den = Ops<Num>::from_int(0);
        for (int j = 1; j <= kPalette; ++j) {
            if (!mask_has(lv, j)) continue;
            bool touched = ws.drop_color(v1, j);  // L_{2,j}
            Num yj = eval(v2, j, depth - 1);
            if (touched) ws.restore_color(v1, j);
            Num term = (one - f[j]) * (one - yj);
            den += term;
            if (j == color) num = term;
        }
        ws.revive(v);
        if (Ops<Num>::is_zero(den))
            throw unsatisfiable_error("degree-2 recursion denominator is zero (Z = 0)");
        return num / den;
    }

    Num eval_p3(int v, int color, int depth) {
        int vs[3], m = 0;
        for (int w : ws.adj[v])
            if (ws.alive[w]) vs[m++] = w;
        std::uint8_t lv = ws.mask[v];
        Num one = Ops<Num>::from_int(1);

        ws.kill(v);
        Num num = Ops<Num>::from_int(0);
        Num den = Ops<Num>::from_int(0);
        for (int j = 1; j <= kPalette; ++j) {
            if (!mask_has(lv, j)) continue;
            // Depth is passed unchanged here; the degree-3 case occurs at most
            // once since every removal lowers the remaining degrees.
            Num x = eval(vs[0], j, depth);
            bool t1 = ws.drop_color(vs[0], j);
            Num y = eval(vs[1], j, depth);
            bool t2 = ws.drop_color(vs[1], j);
            Num z = eval(vs[2], j, depth);
            if (t2) ws.restore_color(vs[1], j);
            if (t1) ws.restore_color(vs[0], j);
            Num term = (one - x) * (one - y) * (one - z);
            den += term;
            if (j == color) num = term;
        }
        ws.revive(v);
        if (Ops<Num>::is_zero(den))
            throw unsatisfiable_error("degree-3 recursion denominator is zero (Z = 0)");
        return num / den;
    }

    // Everything the evaluation of (v, i, D) can read lies within graph
    // distance 2D+2 of v: each depth unit moves at most two edges out (the
    // two-layer step) and neighbor-degree reads add two more.
    MemoKey make_key(int v, int color, int depth) {
        int radius = 2 * depth + 2;
        MemoKey key;
        auto& bytes = key.bytes;
        bytes.reserve(8 + 3 * static_cast<std::size_t>(ws.n));
        for (int s = 0; s < 32; s += 8)
            bytes.push_back(static_cast<std::uint8_t>((static_cast<unsigned>(depth) >> s) & 0xFF));
        bytes.push_back(static_cast<std::uint8_t>(color));
        bytes.push_back(static_cast<std::uint8_t>(v & 0xFF));
        bytes.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));

        ++ws.stamp;
        ws.queue.clear();
        ws.queue.push_back(v);
        ws.seen_stamp[v] = ws.stamp;
        ws.dist[v] = 0;
        std::size_t head = 0;
        while (head < ws.queue.size()) {
            int u = ws.queue[head++];
            if (ws.dist[u] >= radius) continue;
            for (int w : ws.adj[u]) {
                if (!ws.alive[w] || ws.seen_stamp[w] == ws.stamp) continue;
                ws.seen_stamp[w] = ws.stamp;
                ws.dist[w] = ws.dist[u] + 1;
                ws.queue.push_back(w);
            }
        }
        std::sort(ws.queue.begin(), ws.queue.end());
        for (int u : ws.queue) {
            bytes.push_back(static_cast<std::uint8_t>(u & 0xFF));
            bytes.push_back(static_cast<std::uint8_t>((u >> 8) & 0xFF));
            bytes.push_back(ws.mask[u]);
        }
        key.hash = fnv1a(bytes.data(), bytes.size());
        return key;
    }
};

void check_query(const Instance& inst, int v, int color) {
    inst.check_vertex(v);
    if (color < 1 || color > kPalette)
        throw contract_error("color " + std::to_string(color) + " outside palette {1,2,3,4}");
    if (inst.slot_count() > 0xFFFF)
        throw capacity_error("estimator supports at most 65535 vertex slots");
}

void require_valid(const Instance& inst) {
    if (!inst.valid_for_counting())
        throw invalid_instance_error("estimator requires |L(u)| >= deg(u)+1 for every vertex");
}

template <class Num>
Num run_eval(const Instance& inst, int v, int color, int depth, bool memoize, MemoStore* store) {
    Evaluator<Num> ev(inst);
    std::shared_ptr<MemoStore> own;
    if (memoize && !store) {
        own = make_memo_store();
        store = own.get();
    }
    ev.memo = memoize ? store : nullptr;
    return ev.eval(v, color, depth);
}

template <class Num, class Fn>
Num run_direct(const Instance& inst, Fn&& fn) {
    Evaluator<Num> ev(inst);
    auto own = make_memo_store();
    ev.memo = own.get();
    return fn(ev);
}

Probability wrap(double v) { return Probability::from_double(v); }
Probability wrap(Rational r) { return Probability::from_rational(std::move(r)); }

}  // namespace

Probability estimate_marginal(const Instance& inst, int v, int color, const EstimatorConfig& cfg,
                              MemoStore* store) {
    check_query(inst, v, color);
    require_valid(inst);
    if (cfg.backend == Backend::Float64)
        return wrap(run_eval<double>(inst, v, color, cfg.depth, cfg.memoize, store));
    return wrap(run_eval<Rational>(inst, v, color, cfg.depth, cfg.memoize, store));
}

namespace {

template <class Fn>
Probability dispatch_direct(const Instance& inst, const EstimatorConfig& cfg, Fn&& fn) {
    if (cfg.backend == Backend::Float64)
        return wrap(run_direct<double>(inst, [&](auto& ev) { return fn(ev); }));
    return wrap(run_direct<Rational>(inst, [&](auto& ev) { return fn(ev); }));
}

}  // namespace

Probability p1(const Instance& inst, int v, int color, const EstimatorConfig& cfg) {
    check_query(inst, v, color);
    require_valid(inst);
    if (inst.degree(v) != 1) throw contract_error("p1 requires deg(v) = 1");
    if (!mask_has(inst.list_mask(v), color)) throw contract_error("p1 requires i in L(v)");
    int s = inst.list_size(v);
    if (s < 2 || s > 4) throw contract_error("p1 requires 2 <= |L(v)| <= 4");
    return dispatch_direct(inst, cfg,
                           [&](auto& ev) { return ev.eval_p1(v, color, cfg.depth); });
}

Probability p2(const Instance& inst, int v, int color, const EstimatorConfig& cfg) {
    check_query(inst, v, color);
    require_valid(inst);
    if (inst.degree(v) != 2) throw contract_error("p2 requires deg(v) = 2");
    if (!mask_has(inst.list_mask(v), color))
        throw contract_error("p2 requires i in L(v); the dispatcher returns 0 otherwise");
    return dispatch_direct(inst, cfg,
                           [&](auto& ev) { return ev.eval_p2(v, color, cfg.depth); });
}

Probability p3(const Instance& inst, int v, int color, const EstimatorConfig& cfg) {
    check_query(inst, v, color);
    require_valid(inst);
    if (inst.degree(v) != 3) throw contract_error("p3 requires deg(v) = 3");
    if (inst.list_size(v) != 4) throw contract_error("p3 requires |L(v)| = 4");
    return dispatch_direct(inst, cfg,
                           [&](auto& ev) { return ev.eval_p3(v, color, cfg.depth); });
}

BoundaryClass classify_boundary(const Instance& inst, int v, int color) {
    check_query(inst, v, color);
    auto witness = check_reachable(inst, v);
    if (!witness.satisfied)
        throw contract_error("classify_boundary requires a reachable triple: " +
                             witness.violated_condition.value_or(""));

    if (!mask_has(inst.list_mask(v), color))
        return {BoundaryKind::Zero, "color " + std::to_string(color) + " not in L(v)"};

    int d = inst.degree(v);
    if (d == 0 && inst.list_size(v) == 2)
        return {BoundaryKind::HalfCase1,
                "isolated vertex with |L(v)| = 2 containing color " + std::to_string(color)};
    if (d == 1 && inst.list_size(v) == 3) {
        int u = inst.neighbors(v)[0];
        int absent = 0;
        for (int c = 1; c <= kPalette; ++c)
            if (!mask_has(inst.list_mask(v), c)) absent = c;
        if (!mask_has(inst.list_mask(u), color) && !mask_has(inst.list_mask(u), absent))
            return {BoundaryKind::HalfCase2,
                    "neighbor " + std::to_string(u) + " misses both color " +
                        std::to_string(color) + " and the absent color " + std::to_string(absent)};
    }
    if (d == 2) {
        auto nb = inst.neighbors(v);
        if (inst.adjacent(nb[0], nb[1]) && !mask_has(inst.list_mask(nb[0]), color) &&
            !mask_has(inst.list_mask(nb[1]), color))
            return {BoundaryKind::HalfCase3,
                    "triangle " + std::to_string(v) + "," + std::to_string(nb[0]) + "," +
                        std::to_string(nb[1]) + " with color " + std::to_string(color) +
                        " absent from both neighbor lists"};
    }
    return {BoundaryKind::Interior, ""};
}

namespace detail {

std::array<Probability, 4> p2_inner_weights(const Instance& inst, int v,
                                            const EstimatorConfig& cfg) {
    inst.check_vertex(v);
    require_valid(inst);
    if (inst.degree(v) != 2) throw contract_error("inner weights need deg(v) = 2");
    std::array<Probability, 4> out;
    auto fill = [&](auto& ev) {
        using Num = std::decay_t<decltype(ev.eval(0, 1, 0))>;
        auto [v1, v2] = ev.ordered_pair(v, 1);
        (void)v2;
        ev.ws.kill(v);
        Num f[kPalette + 1];
        ev.inner_weights(v1, cfg.depth, f);
        ev.ws.revive(v);
        for (int c = 1; c <= kPalette; ++c) out[c - 1] = wrap(f[c]);
        return Num();
    };
    if (cfg.backend == Backend::Float64)
        run_direct<double>(inst, fill);
    else
        run_direct<Rational>(inst, fill);
    return out;
}

}  // namespace detail

}  // namespace color4
