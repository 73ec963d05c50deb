#pragma once

// Proper hypergraph colorings through a bounded-degree image.
//
// color_k_plus_1: build an image of maximum degree <= k and color it
// greedily with k+1 colors; the two ends of every image edge lie in its
// hyperedge and differ in color.
//
// color_k (min hyperedge size >= 3, k >= 3): Brooks colors the image with k
// colors unless some component is K_{k+1}. Each such clique C_i gives up one
// edge u_i w_i for u_i v_i, with v_i another member of the same hyperedge.
// In the digraph that points every clique at the component holding its v_i,
// cliques without incoming arcs are peeled off and colored last, u_i first
// and w_i last. The cliques left over form directed cycles; each cycle's
// union G* is colored either by Brooks, by the explicit loop coloring
// (single clique, v_1 inside it), or by deleting low-degree vertices until
// Brooks applies and adding them back greedily.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hypercolor/brooks.hpp"
#include "hypercolor/core.hpp"
#include "hypercolor/image_builder.hpp"

namespace hypercolor {

struct KPlusOneResult {
  Coloring coloring;
  std::size_t rotations = 0;
};

inline KPlusOneResult color_k_plus_1_traced(const Hypergraph& h) {
  const Parameters params = parameters_of(h);
  const BuildResult built = build_image_traced(h, params);
  const SimpleProjection proj(built.image.graph());
  std::vector<Vertex> order(h.num_vertices());
  for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
  try {
    return {greedy_coloring(proj, order, params.k + 1), built.rotations};
  } catch (const PaletteExhausted& e) {
    throw PipelineInvariantViolation(std::string("image degree exceeds k: ") + e.what());
  }
}

inline Coloring color_k_plus_1(const Hypergraph& h) { return color_k_plus_1_traced(h).coloring; }

// One K_{k+1} component and the edge it gives up: edge `edge` moves from
// (u, w) to (u, v).
struct CliqueRecord {
  std::size_t index = 0;
  std::vector<Vertex> vertices;
  Vertex u = 0;
  Vertex w = 0;
  Vertex v = 0;
  EdgeId edge = 0;

  bool contains(Vertex x) const {
    return std::binary_search(vertices.begin(), vertices.end(), x);
  }
};

struct TransformResult {
  Image image;
  std::vector<CliqueRecord> records;
};

// For each clique, the lowest edge id inside it whose hyperedge has a third
// member; u is its smaller endpoint and v the smallest other member. All
// choices are made on the input image, then applied together.
inline TransformResult transform_image(const Image& img,
                                       const std::vector<std::vector<Vertex>>& cliques) {
  const Multigraph& g = img.graph();
  const Hypergraph& h = img.hypergraph();
  const SimpleProjection proj(g);
  std::vector<CliqueRecord> records;
  records.reserve(cliques.size());
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    std::vector<Vertex> members = cliques[i];
    std::sort(members.begin(), members.end());
    if (members.size() < 2 || !is_clique_component(proj, members, members.size() - 1)) {
      throw InvalidParameters("candidate " + std::to_string(i) + " is not a clique component");
    }
    std::optional<CliqueRecord> best;
    for (Vertex x : members) {
      for (EdgeId id : g.incident(x)) {
        if (best && best->edge <= id) break;
        const Edge& e = g.edge(id);
        for (Vertex c : h.hyperedge(img.phi(id))) {
          if (c == e.u || c == e.v) continue;
          best = CliqueRecord{i, members, std::min(e.u, e.v), std::max(e.u, e.v), c, id};
          break;
        }
      }
    }
    if (!best) {
      throw DeltaTooSmall("clique " + std::to_string(i) +
                          " has no edge whose hyperedge offers a third vertex");
    }
    records.push_back(std::move(*best));
  }
  Image out = img;
  for (const auto& r : records) out.move_edge(r.edge, std::min(r.u, r.v), std::max(r.u, r.v));
  return {std::move(out), std::move(records)};
}

// Nodes are the components of the image before the transformation; clique i
// has one arc to the component holding v_i (a loop when v_i is inside it).
struct CliqueDigraph {
  std::vector<std::vector<Vertex>> components;
  std::vector<std::size_t> component_of;             // vertex -> node
  std::vector<std::optional<std::size_t>> clique_at;  // node -> clique index
  std::vector<std::size_t> clique_node;              // clique index -> node
  std::vector<std::size_t> target;                   // clique index -> node

  std::size_t num_cliques() const noexcept { return clique_node.size(); }

  // Clique index at the head of clique i's arc, if the head is a clique.
  std::optional<std::size_t> successor(std::size_t i) const { return clique_at[target[i]]; }

  std::vector<std::size_t> in_degrees() const {
    std::vector<std::size_t> deg(num_cliques(), 0);
    for (std::size_t i = 0; i < num_cliques(); ++i) {
      if (auto s = successor(i)) ++deg[*s];
    }
    return deg;
  }
};

inline CliqueDigraph build_clique_digraph(std::vector<std::vector<Vertex>> components,
                                          std::size_t num_vertices,
                                          const std::vector<CliqueRecord>& records) {
  CliqueDigraph f;
  f.component_of.assign(num_vertices, 0);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (Vertex v : components[c]) f.component_of.at(v) = c;
  }
  f.clique_at.assign(components.size(), std::nullopt);
  f.components = std::move(components);
  for (const auto& r : records) {
    const std::size_t node = f.component_of.at(r.u);
    if (f.components[node] != r.vertices || f.clique_at[node]) {
      throw InvalidParameters("clique record " + std::to_string(r.index) +
                              " does not match a distinct component");
    }
    f.clique_at[node] = f.clique_node.size();
    f.clique_node.push_back(node);
    f.target.push_back(f.component_of.at(r.v));
  }
  return f;
}

struct DeferredClique {
  std::size_t clique = 0;
  std::vector<Vertex> order;  // coloring order: u, the rest ascending, w
};

struct Elimination {
  std::vector<DeferredClique> deferred;      // in removal order
  std::vector<std::vector<std::size_t>> cycles;  // clique indices along arcs
};

// Peels cliques of in-degree 0 (smallest index first) until every remaining
// clique has exactly one incoming arc; the remainder splits into directed
// cycles, each listed from its smallest clique index along the arcs.
inline Elimination eliminate_unpointed_cliques(const CliqueDigraph& f,
                                               const std::vector<CliqueRecord>& records) {
  const std::size_t q = f.num_cliques();
  std::vector<std::size_t> indeg = f.in_degrees();
  std::vector<bool> alive(q, true);
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < q; ++i) {
    if (indeg[i] == 0) ready.insert(i);
  }
  Elimination out;
  while (!ready.empty()) {
    const std::size_t i = *ready.begin();
    ready.erase(ready.begin());
    alive[i] = false;
    const CliqueRecord& r = records.at(i);
    DeferredClique d{i, {r.u}};
    for (Vertex x : r.vertices) {
      if (x != r.u && x != r.w) d.order.push_back(x);
    }
    d.order.push_back(r.w);
    out.deferred.push_back(std::move(d));
    if (auto s = f.successor(i); s && alive[*s] && --indeg[*s] == 0) ready.insert(*s);
  }

  for (std::size_t i = 0; i < q; ++i) {
    if (alive[i] && indeg[i] != 1) {
      throw PipelineInvariantViolation("clique " + std::to_string(i) +
                                       " has in-degree " + std::to_string(indeg[i]) +
                                       " after peeling");
    }
  }
  std::vector<bool> placed(q, false);
  for (std::size_t start = 0; start < q; ++start) {
    if (!alive[start] || placed[start]) continue;
    std::vector<std::size_t> cycle;
    std::size_t cur = start;
    while (!placed[cur]) {
      placed[cur] = true;
      cycle.push_back(cur);
      const auto s = f.successor(cur);
      if (!s || !alive[*s]) throw PipelineInvariantViolation("residual clique arc leaves cycle");
      cur = *s;
    }
    if (cur != start) throw PipelineInvariantViolation("residual cliques are not disjoint cycles");
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

// The cliques of one residual cycle and the subgraph G* they induce in the
// transformed image, on local vertex ids.
struct CycleUnion {
  std::vector<CliqueRecord> cliques;  // cycle order, local ids
  std::vector<Vertex> to_global;
  Multigraph g_star;
};

inline CycleUnion make_cycle_union(const Multigraph& transformed,
                                   const std::vector<CliqueRecord>& records,
                                   const std::vector<std::size_t>& cycle) {
  CycleUnion cu;
  for (std::size_t i : cycle) {
    const auto& vs = records.at(i).vertices;
    cu.to_global.insert(cu.to_global.end(), vs.begin(), vs.end());
  }
  std::sort(cu.to_global.begin(), cu.to_global.end());
  std::vector<std::size_t> local(transformed.num_vertices(), kUncolored);
  for (std::size_t i = 0; i < cu.to_global.size(); ++i) local[cu.to_global[i]] = i;

  cu.g_star = Multigraph(cu.to_global.size());
  for (const Edge& e : transformed.edges()) {
    if (local[e.u] != kUncolored && local[e.v] != kUncolored) {
      cu.g_star.add_edge(local[e.u], local[e.v]);
    }
  }
  for (std::size_t i : cycle) {
    CliqueRecord r = records.at(i);
    for (Vertex& x : r.vertices) x = local[x];
    std::sort(r.vertices.begin(), r.vertices.end());
    r.u = local[r.u];
    r.w = local[r.w];
    r.v = local[r.v];
    if (r.v == kUncolored) throw PipelineInvariantViolation("cycle arc leaves the cycle union");
    cu.cliques.push_back(std::move(r));
  }
  return cu;
}

enum class CycleRoute { Brooks, Loop, DeleteAndBrooks };

struct CycleColoring {
  Coloring coloring;            // local ids
  CycleRoute route = CycleRoute::Brooks;
  std::vector<Vertex> deletions;  // local ids, deletion order
  std::size_t w_deletions = 0;    // cliques where only w_i was deleted
  std::size_t wy_deletions = 0;   // cliques where w_i and y were deleted
};

namespace detail {

inline bool properly_colored(const SimpleProjection& g, const std::vector<Color>& colors) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (colors[v] == kUncolored) return false;
    for (Vertex w : g.neighbors(v)) {
      if (colors[v] == colors[w]) return false;
    }
  }
  return true;
}

inline Coloring brooks_or_bug(const SimpleProjection& g, std::size_t k, const char* what) {
  try {
    return brooks_component_coloring(g, k);
  } catch (const BrooksPrecondition& e) {
    throw PipelineInvariantViolation(std::string(what) + ": " + e.what());
  }
}

inline CycleColoring color_by_deletion(const CycleUnion& cu, std::size_t k) {
  const Multigraph& g = cu.g_star;
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  for (Vertex x = 0; x < n; ++x) deg[x] = g.degree(x);
  std::vector<bool> removed(n, false);
  CycleColoring out;
  out.route = CycleRoute::DeleteAndBrooks;

  const auto remove = [&](Vertex x) {
    if (deg[x] + 1 > k) {
      throw PipelineInvariantViolation("deleted vertex has degree above k-1");
    }
    removed[x] = true;
    out.deletions.push_back(x);
    for (EdgeId id : g.incident(x)) {
      const Vertex o = g.edge(id).other(x);
      if (!removed[o]) --deg[o];
    }
  };

  for (const CliqueRecord& c : cu.cliques) {
    std::vector<Vertex> heavy;
    for (Vertex x : c.vertices) {
      if (deg[x] > k) heavy.push_back(x);
    }
    if (heavy.empty()) continue;
    if (heavy.size() != 1 || heavy.front() == c.w) {
      throw PipelineInvariantViolation("unexpected over-degree pattern in a cycle clique");
    }
    const Vertex x = heavy.front();
    remove(c.w);
    if (x != c.u) {
      ++out.w_deletions;
      continue;
    }
    std::optional<Vertex> y;
    for (Vertex cand : c.vertices) {
      if (cand != c.u && cand != c.w && !removed[cand] && deg[cand] + 1 == k) {
        y = cand;
        break;
      }
    }
    if (!y) throw PipelineInvariantViolation("no vertex of degree k-1 to delete beside u_i");
    remove(*y);
    ++out.wy_deletions;
  }

  std::vector<Vertex> rest;
  for (Vertex x = 0; x < n; ++x) {
    if (!removed[x]) {
      if (deg[x] > k) throw PipelineInvariantViolation("degree above k survives deletions");
      rest.push_back(x);
    }
  }
  const SimpleProjection full(g);
  const InducedSubgraph h_star = induced_subgraph(full, rest);
  const Coloring core = brooks_or_bug(h_star.graph, k, "reduced cycle union");

  std::vector<Color> colors(n, kUncolored);
  for (std::size_t i = 0; i < rest.size(); ++i) colors[rest[i]] = core.colors[i];
  for (auto it = out.deletions.rbegin(); it != out.deletions.rend(); ++it) {
    std::size_t colored = 0;
    for (Vertex w : full.neighbors(*it)) colored += colors[w] != kUncolored;
    if (colored + 1 > k) {
      throw PipelineInvariantViolation("re-added vertex sees k colored neighbors");
    }
    greedy_extend(full, colors, {*it}, k);
  }
  out.coloring = {std::move(colors), k};
  return out;
}

}  // namespace detail

inline CycleColoring color_cycle_union(const CycleUnion& cu, std::size_t k) {
  if (k < 3 || cu.cliques.empty()) {
    throw PipelineInvariantViolation("cycle union needs k >= 3 and at least one clique");
  }
  const SimpleProjection simple(cu.g_star);
  CycleColoring out;
  if (cu.g_star.max_degree() <= k) {
    out.route = CycleRoute::Brooks;
    out.coloring = detail::brooks_or_bug(simple, k, "cycle union");
  } else if (cu.cliques.size() == 1) {
    // K_{k+1} without u w, plus a second u v: u and w share a color, every
    // other vertex gets its own.
    const CliqueRecord& c = cu.cliques.front();
    out.route = CycleRoute::Loop;
    out.coloring = {std::vector<Color>(cu.g_star.num_vertices(), kUncolored), k};
    Color next = 1;
    for (Vertex x : c.vertices) {
      out.coloring.colors[x] = (x == c.u || x == c.w) ? 0 : next++;
    }
    if (next > k || out.coloring.colors[c.u] == out.coloring.colors[c.v]) {
      throw PipelineInvariantViolation("loop clique coloring is not proper");
    }
  } else {
    out = detail::color_by_deletion(cu, k);
  }
  if (!detail::properly_colored(simple, out.coloring.colors)) {
    throw PipelineInvariantViolation("cycle union coloring is not proper");
  }
  return out;
}

// Branch counters of one color_k run.
struct PipelineTrace {
  std::size_t rotations = 0;
  std::size_t clique_components = 0;
  std::size_t deferred_cliques = 0;
  std::size_t cycles = 0;
  std::size_t brooks_cycles = 0;
  std::size_t loop_cycles = 0;
  std::size_t deletion_cycles = 0;
  std::size_t w_deletions = 0;
  std::size_t wy_deletions = 0;
};

struct ColorKResult {
  Coloring coloring;
  Image image;  // the transformed image the coloring is proper on
  PipelineTrace trace;
};

// Runs the k-color stage on a prepared image of maximum degree <= k. Every
// hyperedge needs at least three members and k >= 3.
inline ColorKResult color_k_on_image(const Image& img, std::size_t k) {
  const Multigraph& g = img.graph();
  const std::size_t n = g.num_vertices();
  if (k < 3) throw UseKPlusOne("k-color route needs k >= 3");
  if (g.max_degree() > k) throw InvalidParameters("image degree exceeds k");

  PipelineTrace trace;
  const SimpleProjection before(g);
  std::vector<std::vector<Vertex>> components = connected_components(before);
  std::vector<std::vector<Vertex>> cliques;
  std::vector<bool> in_clique(components.size(), false);
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (is_clique_component(before, components[c], k)) {
      cliques.push_back(components[c]);
      in_clique[c] = true;
    }
  }
  trace.clique_components = cliques.size();

  TransformResult tr = transform_image(img, cliques);
  const SimpleProjection after(tr.image.graph());
  const CliqueDigraph f = build_clique_digraph(components, n, tr.records);
  const Elimination elim = eliminate_unpointed_cliques(f, tr.records);
  trace.deferred_cliques = elim.deferred.size();
  trace.cycles = elim.cycles.size();

  std::vector<Color> colors(n, kUncolored);
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (in_clique[c]) continue;
    const InducedSubgraph sub = induced_subgraph(after, components[c]);
    const Coloring part = detail::brooks_or_bug(sub.graph, k, "non-clique component");
    for (std::size_t i = 0; i < sub.to_global.size(); ++i) {
      colors[sub.to_global[i]] = part.colors[i];
    }
  }

  for (const auto& cycle : elim.cycles) {
    const CycleUnion cu = make_cycle_union(tr.image.graph(), tr.records, cycle);
    const CycleColoring cc = color_cycle_union(cu, k);
    switch (cc.route) {
      case CycleRoute::Brooks: ++trace.brooks_cycles; break;
      case CycleRoute::Loop: ++trace.loop_cycles; break;
      case CycleRoute::DeleteAndBrooks: ++trace.deletion_cycles; break;
    }
    trace.w_deletions += cc.w_deletions;
    trace.wy_deletions += cc.wy_deletions;
    for (std::size_t i = 0; i < cu.to_global.size(); ++i) {
      colors[cu.to_global[i]] = cc.coloring.colors[i];
    }
  }

  for (auto it = elim.deferred.rbegin(); it != elim.deferred.rend(); ++it) {
    for (Vertex x : it->order) {
      std::size_t colored = 0;
      for (Vertex w : after.neighbors(x)) colored += colors[w] != kUncolored;
      if (colored >= k) {
        throw PipelineInvariantViolation("peeled clique vertex sees k colored neighbors");
      }
      greedy_extend(after, colors, {x}, k);
    }
  }

  if (!detail::properly_colored(after, colors)) {
    throw PipelineInvariantViolation("final coloring of the transformed image is not proper");
  }
  return {Coloring{std::move(colors), k}, std::move(tr.image), trace};
}

inline ColorKResult color_k_traced(const Hypergraph& h) {
  const Parameters params = parameters_of(h);
  if (params.delta < 3 || params.k < 3) {
    throw UseKPlusOne("k-color route needs min hyperedge size >= 3 and k >= 3 (delta=" +
                      std::to_string(params.delta) + ", k=" + std::to_string(params.k) + ")");
  }
  BuildResult built = build_image_traced(h, params);
  ColorKResult out = color_k_on_image(built.image, params.k);
  out.trace.rotations = built.rotations;
  return out;
}
ColorKResult color_k_traced(const Hypergraph&&) = delete;

inline Coloring color_k(const Hypergraph& h) { return color_k_traced(h).coloring; }

enum class ColorMode { Auto, K, KPlusOne };

struct HypergraphColoring {
  Coloring coloring;
  Parameters params;
  std::size_t bound = 0;  // k or k + 1, whichever route ran
  std::size_t rotations = 0;
  bool k_route = false;
};

// Auto takes the k-color route when it applies and falls back to k + 1
// otherwise; K lets UseKPlusOne escape.
inline HypergraphColoring color_hypergraph(const Hypergraph& h, ColorMode mode = ColorMode::Auto) {
  const Parameters params = parameters_of(h);
  const bool k_applies = params.delta >= 3 && params.k >= 3;
  if (mode == ColorMode::K || (mode == ColorMode::Auto && k_applies)) {
    ColorKResult r = color_k_traced(h);
    return {std::move(r.coloring), params, params.k, r.trace.rotations, true};
  }
  KPlusOneResult r = color_k_plus_1_traced(h);
  return {std::move(r.coloring), params, params.k + 1, r.rotations, false};
}

}  // namespace hypercolor
