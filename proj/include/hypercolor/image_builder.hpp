#pragma once

// Bounded-degree images of a hypergraph.
//
// An alternating chain a0 b0 a1 b1 ... an walks through distinct image edges
// a_i b_i whose hyperedges also contain a_{i+1} (with a_i, b_i, a_{i+1}
// distinct). Rotating a chain swaps every a_i b_i for b_i a_{i+1} inside the
// same hyperedge, which moves one unit of degree from a0 to an and leaves
// every other degree unchanged. build_image repeats BFS + rotation from the
// set of over-degree vertices until the maximum degree is at most
// k = ceil(2 * max_degree / min_edge_size).

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "hypercolor/core.hpp"

namespace hypercolor {

// Picks, for each hyperedge in order, its two members of currently lowest
// image degree (ties by vertex id).
inline Image initial_image(const Hypergraph& h) {
  Multigraph g(h.num_vertices());
  std::vector<std::size_t> phi;
  phi.reserve(h.num_hyperedges());
  for (std::size_t j = 0; j < h.num_hyperedges(); ++j) {
    std::vector<Vertex> members = h.hyperedge(j);
    std::stable_sort(members.begin(), members.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    g.add_edge(std::min(members[0], members[1]), std::max(members[0], members[1]));
    phi.push_back(j);
  }
  return Image(h, std::move(g), std::move(phi));
}
Image initial_image(const Hypergraph&&) = delete;

// Reachable alternating-chain ends from a source set, with BFS parents.
struct ChainForest {
  static constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

  struct Step {
    Vertex prev;  // a_i
    Vertex b;     // b_i
    EdgeId edge;  // e_i, joining prev and b
  };

  std::vector<Vertex> sources;  // ascending, no repeats
  std::vector<Vertex> reached;  // in BFS order
  std::vector<std::size_t> dist;    // per vertex; kUnreached if not reached
  std::vector<Step> parent;         // meaningful for reached non-sources

  bool is_reached(Vertex v) const { return dist.at(v) != kUnreached; }
};

struct AlternatingChain {
  std::vector<Vertex> a;     // a_0 .. a_n
  std::vector<Vertex> b;     // b_0 .. b_{n-1}
  std::vector<EdgeId> edges; // e_0 .. e_{n-1}

  std::size_t length() const noexcept { return edges.size(); }
  Vertex start() const { return a.front(); }
  Vertex end() const { return a.back(); }
};

// Layered BFS: vertices of a layer are expanded in ascending id, incident
// edges in ascending id, new ends in ascending id. The first discovery of a
// vertex fixes its parent.
inline ChainForest alternating_bfs(const Image& img, std::vector<Vertex> sources) {
  const Multigraph& g = img.graph();
  const Hypergraph& h = img.hypergraph();
  ChainForest f;
  f.dist.assign(g.num_vertices(), ChainForest::kUnreached);
  f.parent.assign(g.num_vertices(), {0, 0, 0});

  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  for (Vertex s : sources) {
    if (s >= g.num_vertices()) throw InvalidParameters("source vertex out of range");
    f.dist[s] = 0;
  }
  f.sources = sources;

  std::vector<Vertex> layer = sources;
  std::size_t depth = 0;
  while (!layer.empty()) {
    f.reached.insert(f.reached.end(), layer.begin(), layer.end());
    std::vector<Vertex> next;
    for (Vertex a : layer) {
      for (EdgeId id : g.incident(a)) {
        const Vertex b = g.edge(id).other(a);
        for (Vertex c : h.hyperedge(img.phi(id))) {
          if (c == a || c == b || f.dist[c] != ChainForest::kUnreached) continue;
          f.dist[c] = depth + 1;
          f.parent[c] = {a, b, id};
          next.push_back(c);
        }
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
    ++depth;
  }
  return f;
}

// Follows parent pointers from `end` back to its source.
inline AlternatingChain reconstruct_chain(const ChainForest& f, Vertex end) {
  if (end >= f.dist.size() || !f.is_reached(end)) {
    throw NotReached("vertex " + std::to_string(end) + " is not an alternating-chain end");
  }
  AlternatingChain chain;
  Vertex x = end;
  chain.a.push_back(x);
  while (f.dist[x] != 0) {
    const auto& step = f.parent[x];
    chain.b.push_back(step.b);
    chain.edges.push_back(step.edge);
    chain.a.push_back(step.prev);
    x = step.prev;
  }
  std::reverse(chain.a.begin(), chain.a.end());
  std::reverse(chain.b.begin(), chain.b.end());
  std::reverse(chain.edges.begin(), chain.edges.end());

  std::vector<EdgeId> sorted = chain.edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidRotation("reconstructed chain repeats an edge");
  }
  return chain;
}

// Image under construction, plus the over-degree bookkeeping: heavy vertices
// have degree >= k+1 and potential is the sum of their degrees.
class BuildState {
 public:
  BuildState(Image image, std::size_t k) : image_(std::move(image)), k_(k) { recompute(); }

  const Image& image() const noexcept { return image_; }
  Image release() && { return std::move(image_); }
  std::size_t k() const noexcept { return k_; }
  const std::vector<Vertex>& heavy_set() const noexcept { return heavy_; }
  std::size_t potential() const noexcept { return potential_; }
  std::size_t rotation_count() const noexcept { return rotations_; }

  // Rewires e_i from (a_i, b_i) to (b_i, a_{i+1}) along the whole chain.
  void rotate(const AlternatingChain& chain) {
    const Multigraph& g = image_.graph();
    const Hypergraph& h = image_.hypergraph();
    if (chain.length() == 0 || chain.a.size() != chain.length() + 1 ||
        chain.b.size() != chain.length()) {
      throw InvalidRotation("rotation needs a chain of positive length");
    }
    if (g.degree(chain.start()) < k_ + 1) {
      throw InvalidRotation("chain does not start at an over-degree vertex");
    }
    if (g.degree(chain.end()) + 1 > k_) {
      throw InvalidRotation("chain does not end at a vertex of degree <= k-1");
    }
    std::vector<EdgeId> seen = chain.edges;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      throw InvalidRotation("chain repeats an edge");
    }
    for (std::size_t i = 0; i < chain.length(); ++i) {
      const Edge& e = g.edge(chain.edges[i]);
      const Vertex a = chain.a[i], b = chain.b[i], next = chain.a[i + 1];
      const bool joins = (e.u == a && e.v == b) || (e.u == b && e.v == a);
      if (!joins || next == a || next == b || !h.contains(image_.phi(e.id), next)) {
        throw InvalidRotation("chain step " + std::to_string(i) + " is not alternating");
      }
    }

    const std::size_t before = potential_;
    const std::vector<Vertex> heavy_before = heavy_;
    for (std::size_t i = 0; i < chain.length(); ++i) {
      const Vertex b = chain.b[i], next = chain.a[i + 1];
      image_.move_edge(chain.edges[i], std::min(b, next), std::max(b, next));
    }
    update_endpoint(chain.start());
    update_endpoint(chain.end());
    ++rotations_;

    if (potential_ >= before ||
        !std::includes(heavy_before.begin(), heavy_before.end(), heavy_.begin(), heavy_.end())) {
      throw InvalidRotation("rotation did not decrease the over-degree potential");
    }
  }

  // Full recount; used on construction and by checks.
  void recompute() {
    const Multigraph& g = image_.graph();
    heavy_.clear();
    potential_ = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) >= k_ + 1) {
        heavy_.push_back(v);
        potential_ += g.degree(v);
      }
    }
  }

 private:
  // Degrees only move at the chain's two ends: one lost unit at the start,
  // one gained unit at the end.
  void update_endpoint(Vertex v) {
    const std::size_t d = image_.graph().degree(v);
    const auto it = std::lower_bound(heavy_.begin(), heavy_.end(), v);
    const bool was_heavy = it != heavy_.end() && *it == v;
    if (was_heavy) {
      // it lost one unit (start) since an end vertex is never heavy
      potential_ -= d + 1;
      if (d >= k_ + 1) {
        potential_ += d;
      } else {
        heavy_.erase(it);
      }
    } else if (d >= k_ + 1) {
      heavy_.insert(it, v);
      potential_ += d;
    }
  }

  Image image_;
  std::size_t k_;
  std::vector<Vertex> heavy_;
  std::size_t potential_ = 0;
  std::size_t rotations_ = 0;
};

struct BuildResult {
  Image image;
  std::size_t rotations = 0;
  std::size_t initial_potential = 0;
};

// Image with maximum degree <= params.k. `params` must describe h.
inline BuildResult build_image_traced(const Hypergraph& h, const Parameters& params) {
  BuildState state(initial_image(h), params.k);
  const std::size_t initial_potential = state.potential();

  if (params.delta <= 2) {
    // Every image already has degree <= max_degree = k here.
    if (!state.heavy_set().empty()) {
      throw LemmaViolation("size-2 hyperedges present but an image vertex exceeds k");
    }
    return {std::move(state).release(), 0, initial_potential};
  }

  while (!state.heavy_set().empty()) {
    const ChainForest forest = alternating_bfs(state.image(), state.heavy_set());
    const Multigraph& g = state.image().graph();
    // forest.reached is ordered by (dist, id)
    const auto target = std::find_if(forest.reached.begin(), forest.reached.end(),
                                     [&](Vertex v) { return g.degree(v) + 1 <= params.k; });
    if (target == forest.reached.end()) {
      throw LemmaViolation("no alternating chain from the over-degree set reaches a vertex "
                           "of degree <= k-1; the parameters do not describe this input");
    }
    state.rotate(reconstruct_chain(forest, *target));
  }
  const std::size_t rotations = state.rotation_count();
  return {std::move(state).release(), rotations, initial_potential};
}
BuildResult build_image_traced(const Hypergraph&&, const Parameters&) = delete;

inline Image build_image(const Hypergraph& h, const Parameters& params) {
  return build_image_traced(h, params).image;
}
Image build_image(const Hypergraph&&, const Parameters&) = delete;

}  // namespace hypercolor
