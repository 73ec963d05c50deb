#pragma once

// Constructive Brooks coloring: a connected graph with maximum degree <= k,
// k >= 3, that is not K_{k+1} gets a proper coloring with k colors.
//
//   (a) some vertex r has degree < k: greedy in reverse BFS order from r.
//   (b) k-regular with a cut vertex c: every piece (a component of G - c,
//       plus c) has c as a deficient root, so (a) colors it; pieces are
//       recolored so c agrees and glued.
//   (c) 2-connected, k-regular, not complete: pick x with non-adjacent
//       neighbors y, z such that G - {y, z} is connected; y and z share
//       color 0; the rest is greedy in reverse BFS order from x, so x comes
//       last and sees at most k-1 distinct colors.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "hypercolor/core.hpp"

namespace hypercolor {

// Underlying simple graph of a multigraph: sorted adjacency lists with the
// multiplicity of every adjacency.
class SimpleProjection {
 public:
  SimpleProjection() = default;
  explicit SimpleProjection(std::size_t n) : adj_(n), mult_(n) {}

  explicit SimpleProjection(const Multigraph& g) : SimpleProjection(g.num_vertices()) {
    for (const Edge& e : g.edges()) add_edge(e.u, e.v);
  }

  SimpleProjection(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges)
      : SimpleProjection(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  // Adds one unit of multiplicity to {u, v}.
  void add_edge(Vertex u, Vertex v) {
    if (u >= num_vertices() || v >= num_vertices()) {
      throw InvalidGraph("edge endpoint out of range");
    }
    if (u == v) throw InvalidGraph("self-loop at vertex " + std::to_string(u));
    bump(u, v);
    bump(v, u);
  }

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
  }

  std::size_t multiplicity(Vertex u, Vertex v) const {
    const auto& a = adj_.at(u);
    const auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v) return 0;
    return mult_[u][static_cast<std::size_t>(it - a.begin())];
  }

  std::size_t max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& a : adj_) best = std::max(best, a.size());
    return best;
  }

  std::size_t num_edges() const noexcept {
    std::size_t twice = 0;
    for (const auto& a : adj_) twice += a.size();
    return twice / 2;
  }

 private:
  void bump(Vertex u, Vertex v) {
    auto& a = adj_[u];
    const auto it = std::lower_bound(a.begin(), a.end(), v);
    const auto pos = static_cast<std::size_t>(it - a.begin());
    if (it != a.end() && *it == v) {
      ++mult_[u][pos];
    } else {
      a.insert(it, v);
      mult_[u].insert(mult_[u].begin() + static_cast<std::ptrdiff_t>(pos), 1);
    }
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<std::size_t>> mult_;
};

inline constexpr Color kUncolored = std::numeric_limits<Color>::max();

// Components, each sorted ascending, ordered by their smallest vertex.
// Vertices flagged in `removed` (if given) are skipped.
inline std::vector<std::vector<Vertex>> connected_components(
    const SimpleProjection& g, const std::vector<bool>* removed = nullptr) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  if (removed) seen = *removed;
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Induced subgraph on `vertices` (local ids follow the given order).
struct InducedSubgraph {
  SimpleProjection graph;
  std::vector<Vertex> to_global;
};

inline InducedSubgraph induced_subgraph(const SimpleProjection& g,
                                        const std::vector<Vertex>& vertices) {
  std::vector<std::size_t> local(g.num_vertices(), kUncolored);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;
  InducedSubgraph sub{SimpleProjection(vertices.size()), vertices};
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    for (Vertex w : g.neighbors(v)) {
      if (local[w] == kUncolored || local[w] <= i) continue;
      for (std::size_t m = g.multiplicity(v, w); m > 0; --m) sub.graph.add_edge(i, local[w]);
    }
  }
  return sub;
}

// Colors the vertices of `order` in turn, each with the smallest color not
// already on a colored neighbor. `colors` may hold a partial coloring
// (kUncolored elsewhere).
inline void greedy_extend(const SimpleProjection& g, std::vector<Color>& colors,
                          const std::vector<Vertex>& order, std::size_t palette) {
  std::vector<bool> taken(palette + 1, false);
  for (Vertex v : order) {
    for (Vertex w : g.neighbors(v)) {
      if (colors[w] != kUncolored && colors[w] < palette) taken[colors[w]] = true;
    }
    Color pick = 0;
    while (pick < palette && taken[pick]) ++pick;
    for (Vertex w : g.neighbors(v)) {
      if (colors[w] != kUncolored && colors[w] < palette) taken[colors[w]] = false;
    }
    if (pick == palette) {
      throw PaletteExhausted("vertex " + std::to_string(v) + " sees all " +
                             std::to_string(palette) + " colors");
    }
    colors[v] = pick;
  }
}

inline Coloring greedy_coloring(const SimpleProjection& g, const std::vector<Vertex>& order,
                                std::size_t palette) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> hit(n, false);
  for (Vertex v : order) {
    if (v >= n || hit[v]) throw InvalidParameters("order is not a permutation of the vertices");
    hit[v] = true;
  }
  if (order.size() != n) throw InvalidParameters("order is not a permutation of the vertices");
  Coloring c{std::vector<Color>(n, kUncolored), palette};
  greedy_extend(g, c.colors, order, palette);
  return c;
}

inline bool is_clique_component(const SimpleProjection& g, const std::vector<Vertex>& comp,
                                std::size_t k) {
  if (comp.size() != k + 1) return false;
  return std::all_of(comp.begin(), comp.end(), [&](Vertex v) { return g.degree(v) == k; });
}

// Components that are complete graphs on k+1 vertices. (A connected set of
// k+1 vertices of degree k each is complete.)
inline std::vector<std::vector<Vertex>> find_clique_components(const SimpleProjection& g,
                                                               std::size_t k) {
  std::vector<std::vector<Vertex>> out;
  for (auto& comp : connected_components(g)) {
    if (is_clique_component(g, comp, k)) out.push_back(std::move(comp));
  }
  return out;
}

namespace detail {

// BFS order from root over vertices not flagged in `removed`.
inline std::vector<Vertex> bfs_order(const SimpleProjection& g, Vertex root,
                                     const std::vector<bool>& removed) {
  std::vector<bool> seen = removed;
  std::vector<Vertex> order{root};
  seen[root] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : g.neighbors(order[head])) {
      if (!seen[w]) {
        seen[w] = true;
        order.push_back(w);
      }
    }
  }
  return order;
}

// Every vertex but the root has its BFS parent still uncolored at its turn.
inline Coloring color_from_root(const SimpleProjection& g, Vertex root, std::size_t k) {
  std::vector<Vertex> order = bfs_order(g, root, std::vector<bool>(g.num_vertices(), false));
  std::reverse(order.begin(), order.end());
  return greedy_coloring(g, order, k);
}

// Articulation points by iterative lowpoint DFS; ascending.
inline std::vector<Vertex> cut_vertices(const SimpleProjection& g) {
  const std::size_t n = g.num_vertices();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> disc(n, kNone), low(n, 0), parent(n, kNone), next_child(n, 0);
  std::vector<bool> is_cut(n, false);
  std::size_t timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kNone) continue;
    std::size_t root_children = 0;
    std::vector<Vertex> stack{root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      const auto& nb = g.neighbors(v);
      if (next_child[v] < nb.size()) {
        const Vertex w = nb[next_child[v]++];
        if (disc[w] == kNone) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          if (v == root) ++root_children;
          stack.push_back(w);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      const Vertex p = parent[v];
      if (p != kNone) {
        low[p] = std::min(low[p], low[v]);
        if (p != root && low[v] >= disc[p]) is_cut[p] = true;
      }
    }
    if (root_children >= 2) is_cut[root] = true;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

inline bool connected_without(const SimpleProjection& g, const std::vector<bool>& removed) {
  const std::size_t n = g.num_vertices();
  Vertex start = n;
  std::size_t alive = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start == n) start = v;
    }
  }
  if (alive == 0) return true;
  return bfs_order(g, start, removed).size() == alive;
}

inline Coloring split_at_cut_vertex(const SimpleProjection& g, Vertex cut, std::size_t k) {
  std::vector<bool> removed(g.num_vertices(), false);
  removed[cut] = true;
  Coloring out{std::vector<Color>(g.num_vertices(), kUncolored), k};
  out.colors[cut] = 0;
  for (auto& comp : connected_components(g, &removed)) {
    std::vector<Vertex> piece = std::move(comp);
    piece.push_back(cut);
    const InducedSubgraph sub = induced_subgraph(g, piece);
    const Vertex local_cut = piece.size() - 1;
    const Coloring pc = color_from_root(sub.graph, local_cut, k);
    const Color at_cut = pc.colors[local_cut];
    for (std::size_t i = 0; i + 1 < piece.size(); ++i) {
      Color c = pc.colors[i];
      if (c == at_cut) {
        c = 0;
      } else if (c == 0) {
        c = at_cut;
      }
      out.colors[piece[i]] = c;
    }
  }
  return out;
}

struct BrooksTriple {
  Vertex x, y, z;
};

inline BrooksTriple find_brooks_triple(const SimpleProjection& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> removed(n, false);
  for (Vertex x = 0; x < n; ++x) {
    const auto& nb = g.neighbors(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex y = nb[i], z = nb[j];
        if (g.adjacent(y, z)) continue;
        removed[y] = removed[z] = true;
        const bool ok = connected_without(g, removed);
        removed[y] = removed[z] = false;
        if (ok) return {x, y, z};
      }
    }
  }
  throw BrooksPrecondition("no vertex with two non-adjacent neighbors whose removal keeps "
                           "the graph connected");
}

}  // namespace detail

inline Coloring brooks_component_coloring(const SimpleProjection& g, std::size_t k) {
  const std::size_t n = g.num_vertices();
  if (k < 3) throw BrooksPrecondition("k must be at least 3");
  if (n == 0) return {{}, k};
  if (g.max_degree() > k) {
    throw BrooksPrecondition("maximum degree " + std::to_string(g.max_degree()) + " exceeds k");
  }
  if (!detail::connected_without(g, std::vector<bool>(n, false))) {
    throw BrooksPrecondition("component is not connected");
  }
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  if (is_clique_component(g, all, k)) {
    throw BrooksPrecondition("component is a clique on k+1 vertices");
  }

  for (Vertex r = 0; r < n; ++r) {
    if (g.degree(r) < k) return detail::color_from_root(g, r, k);
  }

  const auto cuts = detail::cut_vertices(g);
  if (!cuts.empty()) return detail::split_at_cut_vertex(g, cuts.front(), k);

  const auto [x, y, z] = detail::find_brooks_triple(g);
  std::vector<bool> removed(n, false);
  removed[y] = removed[z] = true;
  std::vector<Vertex> order = detail::bfs_order(g, x, removed);
  std::reverse(order.begin(), order.end());
  std::vector<Color> colors(n, kUncolored);
  colors[y] = colors[z] = 0;
  greedy_extend(g, colors, order, k);
  return {std::move(colors), k};
}

inline Coloring brooks_coloring(const SimpleProjection& g, std::size_t k) {
  if (k < 3) throw BrooksPrecondition("k must be at least 3");
  if (g.max_degree() > k) {
    throw BrooksPrecondition("maximum degree " + std::to_string(g.max_degree()) + " exceeds k");
  }
  if (auto cliques = find_clique_components(g, k); !cliques.empty()) {
    throw CliqueComponent(std::move(cliques));
  }
  Coloring out{std::vector<Color>(g.num_vertices(), 0), k};
  for (const auto& comp : connected_components(g)) {
    const InducedSubgraph sub = induced_subgraph(g, comp);
    const Coloring part = brooks_component_coloring(sub.graph, k);
    for (std::size_t i = 0; i < comp.size(); ++i) out.colors[comp[i]] = part.colors[i];
  }
  return out;
}

}  // namespace hypercolor
