#pragma once

// Named instances and seeded generators. Output depends only on the
// arguments: the random source is SplitMix64 and every draw is integer
// arithmetic, so the same seed gives the same instance on every platform.
//
//   next():        state += 0x9E3779B97F4A7C15
//                  z = state
//                  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//                  z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//                  return z ^ (z >> 31)
//   uniform(b):    threshold = (2^64 - b) mod b
//                  draw r = next() until r >= threshold; return r mod b

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypercolor/core.hpp"

namespace hypercolor {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound > 0.
  std::uint64_t uniform(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + uniform(hi - lo + 1); }

 private:
  std::uint64_t state_;
};

// Seven points, seven lines; every two lines meet in exactly one point.
inline Hypergraph fano() {
  return Hypergraph(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

struct GenParams {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t size_lo = 2;
  std::size_t size_hi = 2;
  std::optional<std::size_t> max_degree_cap;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kMaxRejections = 10'000;

// Each hyperedge: size uniform in [size_lo, size_hi], members by a partial
// Fisher-Yates shuffle of 0..n-1, redrawn while it would push a vertex past
// the degree cap.
inline Hypergraph random_hypergraph(const GenParams& p) {
  if (p.m > 0 && (p.size_lo < 2 || p.size_lo > p.size_hi || p.size_hi > p.n)) {
    throw InvalidParameters("hyperedge sizes must satisfy 2 <= lo <= hi <= n");
  }
  if (p.max_degree_cap && p.m * p.size_lo > *p.max_degree_cap * p.n) {
    throw GenerationFailed("degree cap " + std::to_string(*p.max_degree_cap) +
                           " cannot hold " + std::to_string(p.m) + " hyperedges of size >= " +
                           std::to_string(p.size_lo));
  }
  SplitMix64 rng(p.seed);
  Hypergraph h(p.n);
  std::vector<std::size_t> deg(p.n, 0);
  std::vector<Vertex> pool(p.n);
  for (std::size_t j = 0; j < p.m; ++j) {
    std::size_t attempts = 0;
    while (true) {
      if (++attempts > kMaxRejections) {
        throw GenerationFailed("degree cap rejected hyperedge " + std::to_string(j) + " " +
                               std::to_string(kMaxRejections) + " times");
      }
      const std::size_t size = rng.between(p.size_lo, p.size_hi);
      for (Vertex v = 0; v < p.n; ++v) pool[v] = v;
      for (std::size_t i = 0; i < size; ++i) {
        std::swap(pool[i], pool[i + rng.uniform(p.n - i)]);
      }
      std::vector<Vertex> members(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
      if (p.max_degree_cap &&
          std::any_of(members.begin(), members.end(),
                      [&](Vertex v) { return deg[v] + 1 > *p.max_degree_cap; })) {
        continue;
      }
      for (Vertex v : members) ++deg[v];
      h.add_hyperedge(std::move(members));
      break;
    }
  }
  return h;
}

// Simple graph; pair (i, j), i < j, in lexicographic order is kept when
// uniform(den) < num.
inline Multigraph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den,
                               std::uint64_t seed) {
  if (den == 0 || num > den) throw InvalidParameters("edge probability must be in [0, 1]");
  SplitMix64 rng(seed);
  Multigraph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.uniform(den) < num) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace hypercolor
