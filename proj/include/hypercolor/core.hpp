#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypercolor/errors.hpp"

namespace hypercolor {

using Vertex = std::size_t;
using EdgeId = std::size_t;
using Color = std::size_t;

// Vertices 0..n-1 and an ordered list of hyperedges. Hyperedges are
// identified by position, so two hyperedges with the same members stay
// distinct. Every hyperedge is stored sorted, without repeats, and has at
// least two members.
class Hypergraph {
 public:
  Hypergraph() = default;

  explicit Hypergraph(std::size_t n, std::vector<std::vector<Vertex>> hyperedges = {})
      : n_(n) {
    hyperedges_.reserve(hyperedges.size());
    for (auto& e : hyperedges) add_hyperedge(std::move(e));
  }

  // Normalizes (sort, dedup) and appends; returns the new hyperedge index.
  std::size_t add_hyperedge(std::vector<Vertex> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.size() < 2) {
      throw InvalidHypergraph("hyperedge " + std::to_string(hyperedges_.size()) +
                              " has fewer than two distinct vertices");
    }
    if (members.back() >= n_) {
      throw InvalidHypergraph("hyperedge " + std::to_string(hyperedges_.size()) +
                              " names vertex " + std::to_string(members.back()) +
                              " outside [0, " + std::to_string(n_) + ")");
    }
    hyperedges_.push_back(std::move(members));
    return hyperedges_.size() - 1;
  }

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_hyperedges() const noexcept { return hyperedges_.size(); }
  const std::vector<std::vector<Vertex>>& hyperedges() const noexcept { return hyperedges_; }
  const std::vector<Vertex>& hyperedge(std::size_t j) const { return hyperedges_.at(j); }

  bool contains(std::size_t j, Vertex v) const {
    const auto& e = hyperedges_.at(j);
    return std::binary_search(e.begin(), e.end(), v);
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Vertex>> hyperedges_;
};

struct Edge {
  EdgeId id;
  Vertex u;
  Vertex v;

  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Loop-free multigraph with dense edge ids. Parallel edges are distinct and
// count separately toward degrees.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t n) : incidence_(n) {}

  EdgeId add_edge(Vertex u, Vertex v) {
    check_endpoints(u, v);
    const EdgeId id = edges_.size();
    edges_.push_back({id, u, v});
    incidence_[u].push_back(id);
    incidence_[v].push_back(id);
    return id;
  }

  // Moves an existing edge onto new endpoints, keeping its id.
  void set_endpoints(EdgeId id, Vertex u, Vertex v) {
    check_endpoints(u, v);
    Edge& e = edges_.at(id);
    detach(e.u, id);
    detach(e.v, id);
    e.u = u;
    e.v = v;
    attach(u, id);
    attach(v, id);
  }

  std::size_t num_vertices() const noexcept { return incidence_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  // Incident edge ids of v, ascending.
  const std::vector<EdgeId>& incident(Vertex v) const { return incidence_.at(v); }
  std::size_t degree(Vertex v) const { return incidence_.at(v).size(); }

  std::size_t max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& inc : incidence_) best = std::max(best, inc.size());
    return best;
  }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.edges_ == b.edges_ && a.incidence_.size() == b.incidence_.size();
  }

 private:
  void check_endpoints(Vertex u, Vertex v) const {
    if (u >= num_vertices() || v >= num_vertices()) {
      throw InvalidGraph("edge endpoint outside [0, " + std::to_string(num_vertices()) + ")");
    }
    if (u == v) throw InvalidGraph("self-loop at vertex " + std::to_string(u));
  }

  void detach(Vertex x, EdgeId id) {
    auto& inc = incidence_[x];
    inc.erase(std::lower_bound(inc.begin(), inc.end(), id));
  }

  void attach(Vertex x, EdgeId id) {
    auto& inc = incidence_[x];
    inc.insert(std::lower_bound(inc.begin(), inc.end(), id), id);
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

// A multigraph on the hypergraph's vertices with one edge per hyperedge,
// each edge lying inside the hyperedge it is mapped to. The referenced
// hypergraph must outlive the image.
class Image {
 public:
  Image(const Hypergraph& h, Multigraph graph, std::vector<std::size_t> phi)
      : h_(&h), graph_(std::move(graph)), phi_(std::move(phi)) {
    if (graph_.num_vertices() != h.num_vertices()) {
      throw InvalidImage("image vertex count differs from the hypergraph's");
    }
    if (phi_.size() != graph_.num_edges() || phi_.size() != h.num_hyperedges()) {
      throw InvalidImage("edge count differs from hyperedge count");
    }
    std::vector<bool> hit(phi_.size(), false);
    for (EdgeId id = 0; id < phi_.size(); ++id) {
      const std::size_t j = phi_[id];
      if (j >= hit.size() || hit[j]) throw InvalidImage("edge map is not a bijection");
      hit[j] = true;
      const Edge& e = graph_.edge(id);
      if (!h.contains(j, e.u) || !h.contains(j, e.v)) {
        throw InvalidImage("edge " + std::to_string(id) + " is not inside hyperedge " +
                           std::to_string(j));
      }
    }
  }
  Image(const Hypergraph&&, Multigraph, std::vector<std::size_t>) = delete;

  const Hypergraph& hypergraph() const noexcept { return *h_; }
  const Multigraph& graph() const noexcept { return graph_; }
  std::size_t phi(EdgeId id) const { return phi_.at(id); }
  const std::vector<std::size_t>& phi() const noexcept { return phi_; }

  // Rewires edge `id` inside its own hyperedge. Throws InvalidImage when the
  // new endpoints leave the hyperedge.
  void move_edge(EdgeId id, Vertex u, Vertex v) {
    const std::size_t j = phi_.at(id);
    if (!h_->contains(j, u) || !h_->contains(j, v)) {
      throw InvalidImage("rewired edge " + std::to_string(id) + " leaves hyperedge " +
                         std::to_string(j));
    }
    graph_.set_endpoints(id, u, v);
  }

 private:
  const Hypergraph* h_;
  Multigraph graph_;
  std::vector<std::size_t> phi_;
};

// Total assignment of colors to vertices 0..n-1, every color below `palette`.
struct Coloring {
  std::vector<Color> colors;
  std::size_t palette = 0;

  std::size_t size() const noexcept { return colors.size(); }
  Color operator[](Vertex v) const { return colors.at(v); }

  // Number of distinct colors actually used.
  std::size_t colors_used() const {
    std::vector<Color> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// delta: minimum hyperedge size (0 when there are no hyperedges).
// max_degree: maximum number of hyperedges through one vertex.
// k: ceil(2 * max_degree / delta).
struct Parameters {
  std::size_t delta = 0;
  std::size_t max_degree = 0;
  std::size_t k = 0;

  friend bool operator==(const Parameters&, const Parameters&) = default;
};

inline Parameters compute_k(std::size_t max_degree, std::size_t delta) {
  if (delta < 2) {
    throw InvalidParameters("minimum hyperedge size must be at least 2, got " +
                            std::to_string(delta));
  }
  return {delta, max_degree, (2 * max_degree + delta - 1) / delta};
}

struct HypergraphStats {
  std::optional<std::size_t> min_edge_size;  // empty when there are no hyperedges
  std::size_t max_degree = 0;
  std::vector<std::size_t> degrees;
};

inline HypergraphStats hypergraph_stats(const Hypergraph& h) {
  HypergraphStats s;
  s.degrees.assign(h.num_vertices(), 0);
  for (const auto& e : h.hyperedges()) {
    if (!s.min_edge_size || e.size() < *s.min_edge_size) s.min_edge_size = e.size();
    for (Vertex v : e) ++s.degrees[v];
  }
  for (std::size_t d : s.degrees) s.max_degree = std::max(s.max_degree, d);
  return s;
}

// Parameters of h; an edgeless hypergraph gets delta = 0 and k = 0.
inline Parameters parameters_of(const Hypergraph& h) {
  const HypergraphStats s = hypergraph_stats(h);
  if (!s.min_edge_size) return {0, 0, 0};
  return compute_k(s.max_degree, *s.min_edge_size);
}

}  // namespace hypercolor
