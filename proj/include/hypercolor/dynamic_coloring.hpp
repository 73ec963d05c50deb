#pragma once

// Dynamic colorings: every vertex of degree >= 2 sees two colors among its
// neighbors. That is exactly a proper coloring of the hypergraph whose
// hyperedges are the neighborhoods of those vertices, which has hyperedges
// of size >= min degree and vertex degrees <= max degree.

#include <cstddef>
#include <vector>

#include "hypercolor/brooks.hpp"
#include "hypercolor/core.hpp"
#include "hypercolor/theorem_one.hpp"

namespace hypercolor {

struct NeighborhoodHypergraph {
  Hypergraph hypergraph;
  std::vector<Vertex> origin;  // hyperedge index -> vertex whose neighborhood it is
};

// Neighborhoods are taken on the simple projection; vertices of degree <= 1
// contribute no hyperedge.
inline NeighborhoodHypergraph neighborhood_hypergraph(const Multigraph& g) {
  const SimpleProjection simple(g);
  NeighborhoodHypergraph nh{Hypergraph(g.num_vertices()), {}};
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (simple.degree(v) < 2) continue;
    nh.hypergraph.add_hyperedge(simple.neighbors(v));
    nh.origin.push_back(v);
  }
  return nh;
}

struct DynamicColoringResult {
  Coloring coloring;
  std::size_t k = 0;          // ceil(2 * max degree / min degree among degree >= 2)
  std::size_t bound = 0;      // k when the k-color route ran, else k + 1
  bool k_route = false;
};

inline DynamicColoringResult dynamic_color_traced(const Multigraph& g) {
  const NeighborhoodHypergraph nh = neighborhood_hypergraph(g);
  const Parameters graph_params = parameters_of(nh.hypergraph);
  DynamicColoringResult out;
  if (nh.hypergraph.num_hyperedges() == 0) {
    out.coloring = {std::vector<Color>(g.num_vertices(), 0), 1};
    out.bound = 1;
    return out;
  }
  // Min hyperedge size is the min degree over degree >= 2 vertices; the max
  // degree of the graph bounds the hypergraph's, so recompute it here.
  const SimpleProjection simple(g);
  out.k = compute_k(simple.max_degree(), graph_params.delta).k;
  if (graph_params.delta >= 3 && out.k >= 3 && graph_params.k >= 3) {
    out.coloring = color_k(nh.hypergraph);
    out.k_route = true;
    out.bound = out.k;
  } else {
    out.coloring = color_k_plus_1(nh.hypergraph);
    out.bound = (graph_params.delta >= 3 && out.k >= 3) ? out.k : out.k + 1;
  }
  out.coloring.palette = out.bound;
  return out;
}

inline Coloring dynamic_color(const Multigraph& g) { return dynamic_color_traced(g).coloring; }

}  // namespace hypercolor
