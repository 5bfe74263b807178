#pragma once

#include <cstdint>
#include <vector>

#include "color4/instance.hpp"

namespace color4 {

// SplitMix64: the fixed, platform-independent PRNG used for every random
// corpus in this project. state' = state + 0x9E3779B97F4A7C15; output is the
// finalizer below. Bounded draws are next() % bound; unit draws are
// (next() >> 11) * 2^-53. Documented so other implementations can reproduce
// corpora bit-for-bit.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    std::uint64_t bounded(std::uint64_t bound) { return next() % bound; }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

enum class Family {
    CompleteK4,
    Cycle,
    Path,
    Star3,
    Petersen,
    K33,
    RandomCubic,
    RandomSubcubic,
};

enum class ListPolicy { Full, RandomValid };

struct CorpusSpec {
    Family family = Family::CompleteK4;
    int n = 0;            // cycle/path/cubic/subcubic size
    double p = 0.5;       // subcubic edge probability
    std::uint64_t seed = 0;
    ListPolicy lists = ListPolicy::Full;
    std::uint64_t lists_seed = 0;
};

Graph make_family_graph(Family family, int n, double p, std::uint64_t seed);
// Full lists, or random lists with |L(v)| >= deg(v)+1 by construction.
ColorLists make_lists(const Graph& g, ListPolicy policy, std::uint64_t seed);
Instance generate(const CorpusSpec& spec);

// All connected graphs with <= n_max vertices and max degree 3, full lists.
// Deduplicated up to isomorphism by exact canonical forms (n_max <= 8).
std::vector<Instance> enumerate_small(int n_max);

}  // namespace color4
