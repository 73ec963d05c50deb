#include <gtest/gtest.h>

#include "hypercolor/hypercolor.hpp"
#include "test_support.hpp"

namespace hypercolor {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::disjoint_union;
using testing::path_graph;
using testing::petersen_graph;

bool proper(const SimpleProjection& g, const Coloring& c) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (c.colors.at(u) == c.colors.at(v)) return false;
    }
  }
  return true;
}

std::size_t max_color(const Coloring& c) { return testing::max_color_plus_one(c); }

// K_5 minus {a, b} twice, both a's and b's joined to a new vertex c:
// 4-regular on 11 vertices with cut vertex c = 10.
SimpleProjection four_regular_with_cut() {
  SimpleProjection g(11);
  for (Vertex base : {0u, 5u}) {
    for (Vertex u = 0; u < 5; ++u) {
      for (Vertex v = u + 1; v < 5; ++v) {
        if (!(u == 0 && v == 1)) g.add_edge(base + u, base + v);
      }
    }
    g.add_edge(base, 10);
    g.add_edge(base + 1, 10);
  }
  return g;
}

// Two copies of K_4 minus an edge with both ends tied to a hub, hubs joined
// by a bridge: cubic on 10 vertices, cut vertices 4 and 9.
SimpleProjection cubic_with_bridge() {
  SimpleProjection g(10);
  for (Vertex base : {0u, 5u}) {
    for (Vertex u = 0; u < 4; ++u) {
      for (Vertex v = u + 1; v < 4; ++v) {
        if (!(u == 0 && v == 1)) g.add_edge(base + u, base + v);
      }
    }
    g.add_edge(base, base + 4);
    g.add_edge(base + 1, base + 4);
  }
  g.add_edge(4, 9);
  return g;
}

// Random simple k-regular graph by the pairing model with restarts.
SimpleProjection random_regular(std::size_t n, std::size_t k, SplitMix64& rng) {
  while (true) {
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v) points.insert(points.end(), k, v);
    for (std::size_t i = points.size(); i > 1; --i) {
      std::swap(points[i - 1], points[rng.uniform(i)]);
    }
    SimpleProjection g(n);
    bool ok = true;
    for (std::size_t i = 0; ok && i < points.size(); i += 2) {
      const Vertex u = points[i], v = points[i + 1];
      if (u == v || g.adjacent(u, v)) {
        ok = false;
      } else {
        g.add_edge(u, v);
      }
    }
    if (ok) return g;
  }
}

TEST(Greedy, Examples) {
  const SimpleProjection p(path_graph(3));
  EXPECT_EQ(greedy_coloring(p, {0, 1, 2}, 2).colors, (std::vector<Color>{0, 1, 0}));
  const SimpleProjection k3(complete_graph(3));
  const Coloring c = greedy_coloring(k3, {2, 0, 1}, 3);
  EXPECT_TRUE(proper(k3, c));
  EXPECT_EQ(max_color(c), 3u);
  EXPECT_THROW(greedy_coloring(k3, {0, 1, 2}, 2), PaletteExhausted);
  EXPECT_THROW(greedy_coloring(k3, {0, 1, 1}, 3), InvalidParameters);
}

TEST(SimpleProjection, CollapsesParallelEdges) {
  Multigraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(1, 2);
  const SimpleProjection s(g);
  EXPECT_EQ(s.degree(1), 2u);
  EXPECT_EQ(s.multiplicity(0, 1), 2u);
  EXPECT_EQ(s.multiplicity(0, 2), 0u);
  EXPECT_EQ(s.num_edges(), 2u);
  EXPECT_EQ(s.neighbors(1), (std::vector<Vertex>{0, 2}));
}

TEST(CliqueComponents, Examples) {
  const SimpleProjection a(disjoint_union(complete_graph(4), path_graph(3)));
  EXPECT_EQ(find_clique_components(a, 3), (std::vector<std::vector<Vertex>>{{0, 1, 2, 3}}));
  EXPECT_TRUE(find_clique_components(SimpleProjection(cycle_graph(5)), 3).empty());
  const SimpleProjection b(disjoint_union(complete_graph(4), complete_graph(4)));
  EXPECT_EQ(find_clique_components(b, 3).size(), 2u);
  // K_4 is not a K_{k+1} when k = 4
  EXPECT_TRUE(find_clique_components(SimpleProjection(complete_graph(4)), 4).empty());
}

TEST(BrooksComponent, Examples) {
  const SimpleProjection pet(petersen_graph());
  const Coloring c = brooks_component_coloring(pet, 3);
  EXPECT_TRUE(proper(pet, c));
  EXPECT_LE(max_color(c), 3u);
  EXPECT_EQ(brute_force_min_colors(testing::as_hypergraph(petersen_graph()), 4), 3u);

  EXPECT_THROW(brooks_component_coloring(SimpleProjection(complete_graph(4)), 3),
               BrooksPrecondition);
  const SimpleProjection c6(cycle_graph(6));
  const Coloring c6c = brooks_component_coloring(c6, 3);
  EXPECT_TRUE(proper(c6, c6c));
  EXPECT_LE(max_color(c6c), 3u);

  EXPECT_THROW(brooks_component_coloring(SimpleProjection(complete_graph(5)), 3),
               BrooksPrecondition);  // degree 4 > k
  EXPECT_THROW(brooks_component_coloring(SimpleProjection(path_graph(3)), 2),
               BrooksPrecondition);  // k < 3
  EXPECT_THROW(brooks_component_coloring(
                   SimpleProjection(disjoint_union(path_graph(2), path_graph(2))), 3),
               BrooksPrecondition);  // disconnected
}

TEST(BrooksComponent, CutVertexCase) {
  for (const auto& [g, k] : {std::pair{four_regular_with_cut(), std::size_t{4}},
                             std::pair{cubic_with_bridge(), std::size_t{3}}}) {
    ASSERT_EQ(g.max_degree(), k);
    for (Vertex v = 0; v < g.num_vertices(); ++v) ASSERT_EQ(g.degree(v), k);
    EXPECT_FALSE(detail::cut_vertices(g).empty());
    const Coloring c = brooks_component_coloring(g, k);
    EXPECT_TRUE(proper(g, c));
    EXPECT_LE(max_color(c), k);
  }
  EXPECT_EQ(detail::cut_vertices(four_regular_with_cut()), (std::vector<Vertex>{10}));
  EXPECT_EQ(detail::cut_vertices(cubic_with_bridge()), (std::vector<Vertex>{4, 9}));
  EXPECT_TRUE(detail::cut_vertices(SimpleProjection(petersen_graph())).empty());
  EXPECT_EQ(detail::cut_vertices(SimpleProjection(path_graph(4))), (std::vector<Vertex>{1, 2}));
}

TEST(BrooksComponent, TripleCase) {
  const SimpleProjection pet(petersen_graph());
  const auto t = detail::find_brooks_triple(pet);
  EXPECT_TRUE(pet.adjacent(t.x, t.y));
  EXPECT_TRUE(pet.adjacent(t.x, t.z));
  EXPECT_FALSE(pet.adjacent(t.y, t.z));
  std::vector<bool> removed(10, false);
  removed[t.y] = removed[t.z] = true;
  EXPECT_TRUE(detail::connected_without(pet, removed));
}

TEST(Brooks, Examples) {
  const SimpleProjection a(disjoint_union(cycle_graph(5), path_graph(2)));
  const Coloring ca = brooks_coloring(a, 3);
  EXPECT_TRUE(proper(a, ca));
  EXPECT_LE(max_color(ca), 3u);

  const SimpleProjection b(disjoint_union(complete_graph(4), cycle_graph(5)));
  try {
    brooks_coloring(b, 3);
    ADD_FAILURE() << "expected CliqueComponent";
  } catch (const CliqueComponent& e) {
    EXPECT_EQ(e.components(), (std::vector<std::vector<Vertex>>{{0, 1, 2, 3}}));
  }

  EXPECT_EQ(brooks_coloring(SimpleProjection(5), 3).colors, std::vector<Color>(5, 0));
}

// Random connected non-complete graphs with max degree <= k (sparse ones
// hit case (a), random regular ones mostly case (c)): proper, < k colors,
// deterministic.
TEST(Brooks, RandomProperty) {
  SplitMix64 rng(2024);
  std::size_t regular_seen = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t k = 3 + rng.uniform(3);
    SimpleProjection g;
    if (trial % 2 == 0) {
      std::size_t n = 6 + rng.uniform(10);
      if ((n * k) % 2 == 1) ++n;
      g = random_regular(n, k, rng);
      ++regular_seen;
    } else {
      const std::size_t n = 3 + rng.uniform(15);
      g = SimpleProjection(n);
      for (int tries = 0; tries < 4 * static_cast<int>(n); ++tries) {
        const Vertex u = rng.uniform(n), v = rng.uniform(n);
        if (u != v && !g.adjacent(u, v) && g.degree(u) < k && g.degree(v) < k) g.add_edge(u, v);
      }
    }
    const bool has_clique = !find_clique_components(g, k).empty();
    if (has_clique) {
      EXPECT_THROW(brooks_coloring(g, k), CliqueComponent);
      continue;
    }
    const Coloring c = brooks_coloring(g, k);
    EXPECT_TRUE(proper(g, c)) << "trial " << trial;
    EXPECT_LE(max_color(c), k);
    EXPECT_EQ(brooks_coloring(g, k), c);
  }
  EXPECT_GT(regular_seen, 0u);
}

}  // namespace
}  // namespace hypercolor
