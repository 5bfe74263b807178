#include "color4/exact.hpp"

#include <string>
#include <vector>

#include "color4/errors.hpp"

namespace color4 {

namespace {

using u128 = unsigned __int128;

struct Solver {
    const Instance& inst;
    std::vector<std::uint8_t> cand;     // remaining colors per vertex
    std::vector<std::uint8_t> colored;  // assigned (color value not needed)
    std::vector<std::vector<int>> nbr;  // alive neighbors, fixed for the run

    explicit Solver(const Instance& in) : inst(in) {
        int n = in.slot_count();
        cand.assign(n, 0);
        colored.assign(n, 1);
        nbr.resize(n);
        for (int v : in.vertices()) {
            cand[v] = in.list_mask(v);
            colored[v] = 0;
            nbr[v] = in.neighbors(v);
        }
    }

    // Fail-first: smallest candidate list, ties by lowest id.
    int pick() const {
        int best = -1, best_size = 5;
        for (int v = 0; v < inst.slot_count(); ++v) {
            if (!inst.alive(v) || colored[v]) continue;
            int s = mask_size(cand[v]);
            if (s < best_size) {
                best = v;
                best_size = s;
                if (s == 0) break;
            }
        }
        return best;
    }

    u128 count() {
        int v = pick();
        if (v < 0) return 1;
        int s = mask_size(cand[v]);
        if (s == 0) return 0;

        bool open_neighbor = false;
        for (int u : nbr[v])
            if (!colored[u]) { open_neighbor = true; break; }
        if (!open_neighbor) {
            colored[v] = 1;
            u128 sub = count();
            colored[v] = 0;
            return static_cast<u128>(s) * sub;
        }

        u128 total = 0;
        std::uint8_t cs = cand[v];
        colored[v] = 1;
        for (int c = 1; c <= kPalette; ++c) {
            if (!mask_has(cs, c)) continue;
            // Propagate: drop c from uncolored neighbors, remember which had it.
            std::uint8_t touched = 0;
            bool dead = false;
            for (std::size_t idx = 0; idx < nbr[v].size(); ++idx) {
                int u = nbr[v][idx];
                if (colored[u] || !mask_has(cand[u], c)) continue;
                touched |= static_cast<std::uint8_t>(1u << idx);
                cand[u] = mask_without(cand[u], c);
                if (cand[u] == 0) dead = true;
            }
            if (!dead) total += count();
            for (std::size_t idx = 0; idx < nbr[v].size(); ++idx)
                if (touched & (1u << idx))
                    cand[nbr[v][idx]] |= static_cast<std::uint8_t>(1u << (c - 1));
        }
        colored[v] = 0;
        return total;
    }
};

BigInt u128_to_bigint(u128 x) {
    BigInt hi(static_cast<long long>(x >> 64));
    BigInt lo_hi(static_cast<long long>((x >> 32) & 0xFFFFFFFFull));
    BigInt lo_lo(static_cast<long long>(x & 0xFFFFFFFFull));
    BigInt two32(1ll << 32);
    return (hi * two32 + lo_hi) * two32 + lo_lo;
}

void check_cap(const Instance& inst, int size_cap) {
    if (size_cap > 63) throw capacity_error("oracle size cap above 63 is not supported");
    if (inst.vertex_count() > size_cap)
        throw capacity_error("instance has " + std::to_string(inst.vertex_count()) +
                             " vertices, oracle cap is " + std::to_string(size_cap));
}

}  // namespace

ExactCount count_colorings(const Instance& inst, int size_cap) {
    check_cap(inst, size_cap);
    Solver s(inst);
    return ExactCount{u128_to_bigint(s.count())};
}

ExactMarginal exact_marginal(const Instance& inst, int v, int color, int size_cap) {
    inst.check_vertex(v);
    if (color < 1 || color > kPalette) throw contract_error("color outside palette");
    check_cap(inst, size_cap);

    Solver all(inst);
    u128 z = all.count();
    if (z == 0) throw unsatisfiable_error("marginal undefined: instance has no proper coloring");

    u128 zi = 0;
    if (mask_has(inst.list_mask(v), color)) {
        Instance pinned = inst.with_list(v, static_cast<std::uint8_t>(1u << (color - 1)));
        Solver s(pinned);
        zi = s.count();
    }
    BigInt num = u128_to_bigint(zi);
    BigInt den = u128_to_bigint(z);
    return ExactMarginal{num, den, Rational(num, den)};
}

}  // namespace color4
