// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "hypercolor/hypercolor.hpp"
#include "test_support.hpp"

namespace {

using namespace hypercolor;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failures of one criterion; the first few are reported.
struct Check {
  std::size_t failures = 0;
  std::ostringstream first;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ < 3) first << " [" << what << "]";
  }
};

constexpr std::uint64_t kSeed = 20240601;

std::vector<Hypergraph> lemma_ensemble() {
  std::vector<Hypergraph> out;
  for (std::size_t i = 0; i < 500; ++i) out.push_back(cli::ensemble_instance({}, kSeed, i));
  return out;
}

std::vector<Hypergraph> size_two_ensemble() {
  cli::EnsembleSpec spec;
  spec.size = {2, 4};
  std::vector<Hypergraph> out;
  for (std::size_t i = 0; i < 200; ++i) {
    Hypergraph h = cli::ensemble_instance(spec, kSeed + 1, i);
    h.add_hyperedge({0, 1});  // forces delta = 2
    out.push_back(std::move(h));
  }
  return out;
}

std::string criterion1(Check& c) {
  const auto t0 = Clock::now();
  const auto hs = lemma_ensemble();
  std::size_t max_rot = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const Parameters p = parameters_of(hs[i]);
    const BuildResult r = build_image_traced(hs[i], p);
    const std::string id = "instance " + std::to_string(i);
    c.expect(r.image.graph().max_degree() <= p.k, id + " degree above k");
    c.expect(r.rotations <= r.initial_potential, id + " rotations exceed potential");
    c.expect(verify_image(hs[i], r.image).ok, id + " not an image");
    max_rot = std::max(max_rot, r.rotations);
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 5.0, "took " + std::to_string(secs) + " s");
  return "500 instances, max rotations " + std::to_string(max_rot) + ", " +
         std::to_string(secs) + " s";
}

std::string criterion2(Check& c) {
  cli::EnsembleSpec spec{{5, 8}, {3, 8}, {3, 4}, 4};
  std::size_t done = 0, tight = 0;
  for (std::size_t i = 0; done < 50 && i < 1000; ++i) {
    const Hypergraph h = cli::ensemble_instance(spec, kSeed + 2, i);
    std::size_t oracle = 0;
    try {
      oracle = brute_force_image_min_max_degree(h);
    } catch (const TooLarge&) {
      continue;
    }
    const Parameters p = parameters_of(h);
    const std::size_t built = build_image(h, p).graph().max_degree();
    c.expect(oracle <= built && built <= p.k, "instance " + std::to_string(i));
    tight += oracle == built;
    ++done;
  }
  c.expect(done == 50, "only " + std::to_string(done) + " instances within oracle bounds");
  const Hypergraph f = fano();
  const std::size_t fano_built = build_image(f, parameters_of(f)).graph().max_degree();
  const std::size_t fano_oracle = brute_force_image_min_max_degree(f);
  c.expect(fano_built <= 2 && fano_oracle <= 2, "fano");
  return std::to_string(done) + " instances (" + std::to_string(tight) +
         " with built degree equal to the optimum), fano built " + std::to_string(fano_built) +
         " oracle " + std::to_string(fano_oracle);
}

std::string criterion3(Check& c) {
  auto hs = lemma_ensemble();
  const auto twos = size_two_ensemble();
  std::size_t delta_two = 0;
  hs.insert(hs.end(), twos.begin(), twos.end());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const Parameters p = parameters_of(hs[i]);
    delta_two += p.delta == 2;
    const Coloring col = color_k_plus_1(hs[i]);
    c.expect(verify_proper_hypergraph(hs[i], col).ok &&
                 testing::max_color_plus_one(col) <= p.k + 1,
             "instance " + std::to_string(i));
  }
  return std::to_string(hs.size()) + " instances (" + std::to_string(delta_two) +
         " with delta = 2), zero failures required";
}

std::string criterion4(Check& c) {
  const auto hs = lemma_ensemble();
  std::size_t qualifying = 0;
  double worst = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const Parameters p = parameters_of(hs[i]);
    if (p.delta < 3 || p.k < 3) continue;
    ++qualifying;
    const auto t0 = Clock::now();
    const Coloring col = color_k(hs[i]);
    const double secs = seconds_since(t0);
    worst = std::max(worst, secs);
    c.expect(verify_proper_hypergraph(hs[i], col).ok &&
                 testing::max_color_plus_one(col) <= p.k,
             "instance " + std::to_string(i));
    c.expect(secs < 1.0, "instance " + std::to_string(i) + " slow");
  }
  c.expect(qualifying >= 200, "only " + std::to_string(qualifying) + " qualifying instances");
  return std::to_string(qualifying) + " qualifying instances, slowest " +
         std::to_string(worst * 1000) + " ms";
}

std::string criterion5(Check& c) {
  PipelineTrace total;
  const auto run = [&](const char* name, const testing::ImageFixture& f) {
    const Image img = f.image();
    const ColorKResult r = color_k_on_image(img, 3);
    c.expect(verify_proper_hypergraph(f.h, r.coloring).ok &&
                 testing::max_color_plus_one(r.coloring) <= 3,
             name);
    total.deferred_cliques += r.trace.deferred_cliques;
    total.brooks_cycles += r.trace.brooks_cycles;
    total.loop_cycles += r.trace.loop_cycles;
    total.deletion_cycles += r.trace.deletion_cycles;
    total.w_deletions += r.trace.w_deletions;
    total.wy_deletions += r.trace.wy_deletions;
  };
  run("peel", testing::peel_fixture());
  run("loop", testing::loop_fixture());
  run("two-cycle w", testing::two_cycle_w_fixture());
  run("two-cycle w+y", testing::two_cycle_wy_fixture());
  run("two-cycle mixed", testing::two_cycle_mixed_fixture());
  run("two-cycle brooks", testing::two_cycle_brooks_fixture());
  c.expect(total.deferred_cliques > 0, "elimination not exercised");
  c.expect(total.loop_cycles > 0, "loop not exercised");
  c.expect(total.w_deletions > 0, "x != u deletion not exercised");
  c.expect(total.wy_deletions > 0, "x = u deletion not exercised");
  c.expect(total.brooks_cycles > 0, "brooks cycle route not exercised");
  std::ostringstream s;
  s << "deferred=" << total.deferred_cliques << " loop=" << total.loop_cycles
    << " deletion_cycles=" << total.deletion_cycles << " w_only=" << total.w_deletions
    << " w_and_y=" << total.wy_deletions << " brooks_cycles=" << total.brooks_cycles;
  return s.str();
}

// Connected graph with max degree <= k: random tree under the degree cap,
// then random extra edges; `fill` attempts push it towards k-regular.
SimpleProjection random_connected(std::size_t n, std::size_t k, std::size_t fill, SplitMix64& rng) {
  SimpleProjection g(n);
  for (Vertex v = 1; v < n; ++v) {
    while (true) {
      const Vertex u = rng.uniform(v);
      if (g.degree(u) < k) {
        g.add_edge(u, v);
        break;
      }
    }
  }
  for (std::size_t t = 0; t < fill; ++t) {
    const Vertex u = rng.uniform(n), v = rng.uniform(n);
    if (u != v && !g.adjacent(u, v) && g.degree(u) < k && g.degree(v) < k) g.add_edge(u, v);
  }
  return g;
}

std::string criterion6(Check& c) {
  const SimpleProjection pet(testing::petersen_graph());
  const Coloring pc = brooks_coloring(pet, 3);
  c.expect(testing::proper_on(testing::petersen_graph(), pc) &&
               testing::max_color_plus_one(pc) <= 3,
           "petersen");
  bool clique_error = false;
  try {
    brooks_coloring(SimpleProjection(testing::complete_graph(4)), 3);
  } catch (const CliqueComponent& e) {
    clique_error = e.components().size() == 1;
  }
  c.expect(clique_error, "K_4 did not raise CliqueComponent");

  SplitMix64 rng(kSeed + 6);
  std::size_t tested = 0, regular = 0;
  while (tested < 200) {
    const std::size_t k = 3 + rng.uniform(3);
    const std::size_t n = k + 2 + rng.uniform(12);
    const SimpleProjection g = random_connected(n, k, rng.uniform(2) ? 20 * n : n, rng);
    if (!find_clique_components(g, k).empty()) continue;
    ++tested;
    bool is_regular = true;
    for (Vertex v = 0; v < n; ++v) is_regular &= g.degree(v) == k;
    regular += is_regular;
    const Coloring col = brooks_coloring(g, k);
    bool proper = testing::max_color_plus_one(col) <= k;
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : g.neighbors(v)) proper &= col.colors[v] != col.colors[w];
    }
    c.expect(proper, "graph " + std::to_string(tested));
  }
  return "petersen " + std::to_string(testing::max_color_plus_one(pc)) + " colors, " +
         std::to_string(tested) + " random graphs (" + std::to_string(regular) + " k-regular)";
}

std::string criterion7(Check& c) {
  const Multigraph c5 = testing::cycle_graph(5), c4 = testing::cycle_graph(4);
  const Coloring d5 = dynamic_color(c5), d4 = dynamic_color(c4);
  c.expect(verify_dynamic(c5, d5).ok && testing::max_color_plus_one(d5) <= 3, "C_5 coloring");
  c.expect(brute_force_min_dynamic_colors(c5, 5) == 3u, "C_5 oracle");
  c.expect(verify_dynamic(c4, d4).ok && testing::max_color_plus_one(d4) <= 3, "C_4 coloring");
  c.expect(brute_force_min_dynamic_colors(c4, 5) == 2u, "C_4 oracle");

  SplitMix64 rng(kSeed + 7);
  std::size_t tested = 0;
  for (std::size_t draw = 0; tested < 100 && draw < 100000; ++draw) {
    const Multigraph g = random_graph(8 + rng.uniform(8), 1 + rng.uniform(3), 4, rng.next());
    const Parameters p = parameters_of(neighborhood_hypergraph(g).hypergraph);
    const std::size_t k = compute_k(SimpleProjection(g).max_degree(), std::max<std::size_t>(p.delta, 2)).k;
    if (p.delta < 3 || k < 3) continue;
    ++tested;
    const DynamicColoringResult r = dynamic_color_traced(g);
    c.expect(r.k == k && verify_dynamic(g, r.coloring).ok &&
                 testing::max_color_plus_one(r.coloring) <= k,
             "graph " + std::to_string(tested));
  }
  c.expect(tested == 100, "only " + std::to_string(tested) + " qualifying graphs");

  std::size_t disagreements = 0, accepted = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + rng.uniform(10);
    const Multigraph g = random_graph(n, 1 + rng.uniform(3), 4, rng.next());
    Coloring col{std::vector<Color>(n), 2 + rng.uniform(2)};
    for (Color& x : col.colors) x = rng.uniform(col.palette);
    const bool a = verify_dynamic(g, col).ok;
    const bool b = verify_proper_hypergraph(neighborhood_hypergraph(g).hypergraph, col).ok;
    disagreements += a != b;
    accepted += a;
  }
  c.expect(disagreements == 0, std::to_string(disagreements) + " checker disagreements");
  return "C_5 " + std::to_string(testing::max_color_plus_one(d5)) + " colors, C_4 " +
         std::to_string(testing::max_color_plus_one(d4)) + " colors, " + std::to_string(tested) +
         " random graphs, 1000 pairs (" + std::to_string(accepted) + " accepted), " +
         std::to_string(disagreements) + " disagreements";
}

std::string criterion8(Check& c) {
  SplitMix64 rng(kSeed + 8);
  std::size_t histogram[7] = {};
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng.uniform(5);
    GenParams p{n, rng.uniform(10), 2, std::min<std::size_t>(n, 2 + rng.uniform(3)), std::nullopt,
                rng.next()};
    const Hypergraph h = random_hypergraph(p);
    const auto pruned = brute_force_min_colors(h, n);
    const auto plain = enumerate_min_colors(h, n);
    c.expect(pruned == plain, "instance " + std::to_string(t));
    if (pruned) ++histogram[*pruned];
  }
  const auto fano_min = brute_force_min_colors(fano(), 7);
  c.expect(fano_min == 3u, "fano");
  std::ostringstream s;
  s << "100 instances, minimum palettes 1..4: " << histogram[1] << "/" << histogram[2] << "/"
    << histogram[3] << "/" << histogram[4] << ", fano " << fano_min.value_or(0);
  return s.str();
}

std::string criterion9(Check& c) {
  for (std::size_t i = 0; i < 100; ++i) {
    const Hypergraph h = cli::ensemble_instance({}, kSeed + 9, i);
    const std::string text = write_instance(h);
    const Hypergraph back = std::get<Hypergraph>(parse_instance(text));
    c.expect(back == h && write_instance(back) == text, "hypergraph round trip " + std::to_string(i));
    const std::string first = write_instance(color_hypergraph(h).coloring);
    c.expect(first == write_instance(color_hypergraph(back).coloring) &&
                 parse_coloring(first) == color_hypergraph(h).coloring,
             "coloring rerun " + std::to_string(i));
    const Multigraph g = random_graph(10, 1, 2, i);
    const std::string gt = write_instance(g);
    c.expect(write_instance(std::get<Multigraph>(parse_instance(gt))) == gt, "graph round trip");
    c.expect(write_instance(dynamic_color(g)) == write_instance(dynamic_color(g)), "dynamic rerun");
  }

  std::ostringstream b1, b2, e;
  cli::run({"bench", "--count", "30", "--seed", "9"}, b1, e);
  cli::run({"bench", "--count", "30", "--seed", "9"}, b2, e);
  c.expect(b1.str() == b2.str(), "bench output differs between runs");

  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "hypercolor_acceptance";
  fs::create_directories(dir);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    const std::string h = (dir / ("i" + std::to_string(i) + ".h")).string();
    const std::string col = (dir / ("i" + std::to_string(i) + ".col")).string();
    std::ofstream(h) << write_instance(cli::ensemble_instance({}, kSeed + 90, i));
    std::ostringstream out, err;
    const int colored = cli::run({"color", h, "-o", col}, out, err);
    const int verified = cli::run({"verify", h, col}, out, err);
    c.expect(colored == 0 && verified == 0, "CLI instance " + std::to_string(i) + ": " + err.str());
    ok += colored == 0 && verified == 0;
  }
  fs::remove_all(dir);
  return "100 reruns and round trips, bench byte-identical, CLI color->verify " +
         std::to_string(ok) + "/50";
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<std::string(Check&)>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};
  int failed = 0;
  for (const auto& [id, fn] : criteria) {
    Check c;
    std::string detail;
    try {
      detail = fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool pass = c.failures == 0;
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << detail;
    if (!pass) std::cout << " failures=" << c.failures << c.first.str();
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
