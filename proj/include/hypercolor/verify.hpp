#pragma once

// Definition-level checkers and exhaustive reference solvers. Nothing here
// calls into the coloring pipeline; these are the ground truth the pipeline
// is tested against.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hypercolor/core.hpp"

namespace hypercolor {

enum class ViolationKind {
  MonochromaticHyperedge,    // witness: {hyperedge index}
  MonochromaticEdge,         // witness: {u, v}
  MonochromaticNeighborhood, // witness: {vertex}
  EdgeOutsideHyperedge,      // witness: {edge id, hyperedge index}
  NotABijection,             // witness: {edge id or hyperedge index}
};

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> witness;
};

struct VerifyReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(ViolationKind kind, std::vector<std::size_t> witness) {
    ok = false;
    violations.push_back({kind, std::move(witness)});
  }
};

inline std::string describe(const Violation& v) {
  std::string s;
  switch (v.kind) {
    case ViolationKind::MonochromaticHyperedge: s = "monochromatic hyperedge"; break;
    case ViolationKind::MonochromaticEdge: s = "monochromatic edge"; break;
    case ViolationKind::MonochromaticNeighborhood: s = "monochromatic neighborhood of vertex"; break;
    case ViolationKind::EdgeOutsideHyperedge: s = "edge outside its hyperedge"; break;
    case ViolationKind::NotABijection: s = "edge map not a bijection at"; break;
  }
  for (std::size_t w : v.witness) s += " " + std::to_string(w);
  return s;
}

namespace detail {

inline void require_total(std::size_t n, const Coloring& c) {
  if (c.colors.size() != n) {
    throw InvalidColoring("coloring covers " + std::to_string(c.colors.size()) +
                          " vertices, instance has " + std::to_string(n));
  }
  for (Color col : c.colors) {
    if (col >= c.palette) throw InvalidColoring("color " + std::to_string(col) + " >= palette");
  }
}

// Sorted, deduplicated neighbor lists; independent of SimpleProjection.
inline std::vector<std::vector<Vertex>> neighbor_sets(const Multigraph& g) {
  std::vector<std::vector<Vertex>> nb(g.num_vertices());
  for (const Edge& e : g.edges()) {
    nb[e.u].push_back(e.v);
    nb[e.v].push_back(e.u);
  }
  for (auto& s : nb) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return nb;
}

template <typename Range>
bool monochromatic(const Range& vertices, const std::vector<Color>& colors) {
  return std::all_of(vertices.begin(), vertices.end(),
                     [&](Vertex v) { return colors[v] == colors[*vertices.begin()]; });
}

}  // namespace detail

inline VerifyReport verify_proper_hypergraph(const Hypergraph& h, const Coloring& c) {
  detail::require_total(h.num_vertices(), c);
  VerifyReport r;
  for (std::size_t j = 0; j < h.num_hyperedges(); ++j) {
    if (detail::monochromatic(h.hyperedge(j), c.colors)) {
      r.add(ViolationKind::MonochromaticHyperedge, {j});
    }
  }
  return r;
}

inline VerifyReport verify_proper_graph(const Multigraph& g, const Coloring& c) {
  detail::require_total(g.num_vertices(), c);
  VerifyReport r;
  const auto nb = detail::neighbor_sets(g);
  for (Vertex u = 0; u < nb.size(); ++u) {
    for (Vertex v : nb[u]) {
      if (u < v && c.colors[u] == c.colors[v]) r.add(ViolationKind::MonochromaticEdge, {u, v});
    }
  }
  return r;
}

inline VerifyReport verify_dynamic(const Multigraph& g, const Coloring& c) {
  detail::require_total(g.num_vertices(), c);
  VerifyReport r;
  const auto nb = detail::neighbor_sets(g);
  for (Vertex v = 0; v < nb.size(); ++v) {
    if (nb[v].size() >= 2 && detail::monochromatic(nb[v], c.colors)) {
      r.add(ViolationKind::MonochromaticNeighborhood, {v});
    }
  }
  return r;
}

inline VerifyReport verify_image(const Hypergraph& h, const Multigraph& g,
                                 const std::vector<std::size_t>& phi) {
  VerifyReport r;
  if (phi.size() != g.num_edges()) r.add(ViolationKind::NotABijection, {phi.size()});
  std::vector<std::size_t> hits(h.num_hyperedges(), 0);
  for (EdgeId id = 0; id < std::min(phi.size(), g.num_edges()); ++id) {
    const std::size_t j = phi[id];
    if (j >= h.num_hyperedges()) {
      r.add(ViolationKind::NotABijection, {id});
      continue;
    }
    ++hits[j];
    const auto& e = h.hyperedge(j);
    const Edge& ed = g.edge(id);
    const bool inside = std::find(e.begin(), e.end(), ed.u) != e.end() &&
                        std::find(e.begin(), e.end(), ed.v) != e.end() && ed.u != ed.v;
    if (!inside) r.add(ViolationKind::EdgeOutsideHyperedge, {id, j});
  }
  for (std::size_t j = 0; j < hits.size(); ++j) {
    if (hits[j] != 1) r.add(ViolationKind::NotABijection, {j});
  }
  return r;
}

inline VerifyReport verify_image(const Hypergraph& h, const Image& img) {
  return verify_image(h, img.graph(), img.phi());
}

// ---------------------------------------------------------------------------
// Exhaustive solvers. Vertex i may only take colors <= i, which is enough to
// reach every partition into color classes.

inline constexpr std::size_t kOracleMaxVertices = 16;
inline constexpr std::size_t kOracleMaxImageChoices = 10'000'000;

namespace detail {

// Backtracking search for a coloring with `palette` colors. `checks[i]`
// lists constraint sets whose largest vertex is i; each must not be
// monochromatic once i is colored.
inline bool backtrack(std::size_t i, std::size_t palette,
                      const std::vector<std::vector<std::vector<Vertex>>>& checks,
                      std::vector<Color>& colors) {
  if (i == colors.size()) return true;
  const std::size_t limit = std::min(i + 1, palette);
  for (Color c = 0; c < limit; ++c) {
    colors[i] = c;
    bool ok = true;
    for (const auto& set : checks[i]) {
      if (monochromatic(set, colors)) {
        ok = false;
        break;
      }
    }
    if (ok && backtrack(i + 1, palette, checks, colors)) return true;
  }
  return false;
}

inline std::optional<std::size_t> min_palette(std::size_t n,
                                              const std::vector<std::vector<Vertex>>& sets,
                                              std::size_t max_palette) {
  if (n > kOracleMaxVertices) {
    throw TooLarge("exhaustive search is limited to " + std::to_string(kOracleMaxVertices) +
                   " vertices");
  }
  std::vector<std::vector<std::vector<Vertex>>> checks(n);
  for (const auto& s : sets) {
    checks[*std::max_element(s.begin(), s.end())].push_back(s);
  }
  for (std::size_t p = 1; p <= max_palette; ++p) {
    std::vector<Color> colors(n, 0);
    if (backtrack(0, p, checks, colors)) return p;
  }
  return std::nullopt;
}

}  // namespace detail

// Smallest palette admitting a proper coloring, or nullopt if none within
// max_palette.
inline std::optional<std::size_t> brute_force_min_colors(const Hypergraph& h,
                                                         std::size_t max_palette) {
  return detail::min_palette(h.num_vertices(), h.hyperedges(), max_palette);
}

inline std::optional<std::size_t> brute_force_min_dynamic_colors(const Multigraph& g,
                                                                 std::size_t max_palette) {
  if (g.num_vertices() > kOracleMaxVertices) {
    throw TooLarge("exhaustive search is limited to " + std::to_string(kOracleMaxVertices) +
                   " vertices");
  }
  std::vector<std::vector<Vertex>> sets;
  for (auto& s : detail::neighbor_sets(g)) {
    if (s.size() >= 2) sets.push_back(std::move(s));
  }
  return detail::min_palette(g.num_vertices(), sets, max_palette);
}

// Plain enumeration of every palette^n coloring through verify_proper_hypergraph;
// cross-checks the backtracking solver on tiny inputs.
inline std::optional<std::size_t> enumerate_min_colors(const Hypergraph& h,
                                                       std::size_t max_palette) {
  const std::size_t n = h.num_vertices();
  if (n > 8) throw TooLarge("plain enumeration is limited to 8 vertices");
  for (std::size_t p = 1; p <= max_palette; ++p) {
    Coloring c{std::vector<Color>(n, 0), p};
    while (true) {
      if (verify_proper_hypergraph(h, c).ok) return p;
      std::size_t i = 0;
      while (i < n && ++c.colors[i] == p) c.colors[i++] = 0;
      if (i == n) break;
    }
  }
  return std::nullopt;
}

// Minimum over all images of the maximum image degree, by branch and bound
// over the endpoint pair chosen inside each hyperedge.
inline std::size_t brute_force_image_min_max_degree(const Hypergraph& h) {
  double choices = 1;
  for (const auto& e : h.hyperedges()) {
    choices *= static_cast<double>(e.size() * (e.size() - 1) / 2);
    if (choices > static_cast<double>(kOracleMaxImageChoices)) {
      throw TooLarge("more than " + std::to_string(kOracleMaxImageChoices) +
                     " endpoint combinations");
    }
  }
  const std::size_t m = h.num_hyperedges();
  std::vector<std::size_t> deg(h.num_vertices(), 0);
  std::size_t best = std::numeric_limits<std::size_t>::max();

  auto search = [&](auto&& self, std::size_t j, std::size_t current) -> void {
    if (current >= best) return;
    if (j == m) {
      best = current;
      return;
    }
    const auto& e = h.hyperedge(j);
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        ++deg[e[a]];
        ++deg[e[b]];
        self(self, j + 1, std::max({current, deg[e[a]], deg[e[b]]}));
        --deg[e[a]];
        --deg[e[b]];
      }
    }
  };
  search(search, 0, 0);
  return best;
}

}  // namespace hypercolor
