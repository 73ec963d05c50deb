#pragma once

// Command-line front end. run() is kept free of process state (streams are
// passed in) so tests can drive it directly.
//
// Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
// 3 internal invariant violation.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hypercolor/hypercolor.hpp"

namespace hypercolor::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInternal = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

// Defaults of the bench ensemble.
struct EnsembleSpec {
  Range n{6, 14};
  Range m{4, 20};
  Range size{3, 5};
  std::optional<std::size_t> cap = 6;
};

namespace detail {

inline std::size_t to_size(const std::string& key, const std::string& s) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("parameter " + key + ": expected a non-negative integer, got '" + s + "'");
  }
  return value;
}

// "5" or "3..7"
inline Range to_range(const std::string& key, const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const std::size_t v = to_size(key, s);
    return {v, v};
  }
  Range r{to_size(key, s.substr(0, dots)), to_size(key, s.substr(dots + 2))};
  if (r.lo > r.hi) throw UsageError("parameter " + key + ": empty range " + s);
  return r;
}

inline std::map<std::string, std::string> key_values(const std::vector<std::string>& params) {
  std::map<std::string, std::string> kv;
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("expected key=value, got '" + p + "'");
    }
    kv[p.substr(0, eq)] = p.substr(eq + 1);
  }
  return kv;
}

inline void reject_unknown(const std::map<std::string, std::string>& kv,
                           const std::vector<std::string>& known) {
  for (const auto& [key, value] : kv) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw UsageError("unknown parameter '" + key + "'");
    }
  }
}

inline std::string read_input(const std::string& path, std::istream& stdin_stream) {
  std::ostringstream buf;
  if (path == "-") {
    buf << stdin_stream.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

}  // namespace detail

// Instance `index` of a seeded ensemble: its private stream is seeded with
// output number `index` of SplitMix64(seed), draws n then m from their
// ranges, clamps m to what the cap holds at the mean hyperedge size, then
// draws generator seeds.
inline Hypergraph ensemble_instance(const EnsembleSpec& spec, std::uint64_t seed,
                                    std::size_t index) {
  SplitMix64 base(seed + 0x9E3779B97F4A7C15ULL * index);
  SplitMix64 rng(base.next());
  GenParams p;
  p.n = rng.between(spec.n.lo, spec.n.hi);
  p.m = rng.between(spec.m.lo, spec.m.hi);
  p.size_lo = spec.size.lo;
  p.size_hi = std::min(spec.size.hi, p.n);
  p.max_degree_cap = spec.cap;
  if (spec.cap && p.size_lo > 0) p.m = std::min(p.m, 2 * *spec.cap * p.n / (p.size_lo + p.size_hi));
  // A draw near the cap's capacity can stall; every 8 failed seeds the
  // target m drops by one.
  for (int attempt = 1;; ++attempt) {
    p.seed = rng.next();
    try {
      return random_hypergraph(p);
    } catch (const GenerationFailed&) {
      if (p.m == 0) throw;
      if (attempt % 8 == 0) --p.m;
    }
  }
}

inline constexpr const char* kBenchHeader =
    "instance_id,n,m,delta,Delta,k,colors_used,rotations,verified";

inline std::string bench_row(std::size_t id, const Hypergraph& h) {
  const HypergraphColoring run = color_hypergraph(h, ColorMode::Auto);
  const bool ok = verify_proper_hypergraph(h, run.coloring).ok &&
                  run.coloring.colors_used() <= run.bound;
  std::ostringstream row;
  row << id << ',' << h.num_vertices() << ',' << h.num_hyperedges() << ',' << run.params.delta
      << ',' << run.params.max_degree << ',' << run.params.k << ','
      << run.coloring.colors_used() << ',' << run.rotations << ',' << (ok ? "yes" : "no");
  return row.str();
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
  CLI::App app{"Proper hypergraph and dynamic graph colorings", "hypercolor"};
  app.require_subcommand(1);

  std::string input_path, coloring_path, output_path = "-", mode = "auto", kind;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::string gen_kind;
  std::vector<std::string> params;

  auto* color = app.add_subcommand("color", "Color a hypergraph file");
  color->add_option("file", input_path, "Hypergraph file or '-'")->required();
  color->add_option("--mode", mode, "k, k1 or auto")
      ->check(CLI::IsMember({"k", "k1", "auto"}));
  color->add_option("-o,--output", output_path, "Coloring output path");

  auto* dynamic = app.add_subcommand("dynamic", "Dynamic coloring of a graph file");
  dynamic->add_option("file", input_path, "Graph file or '-'")->required();
  dynamic->add_option("-o,--output", output_path, "Coloring output path");

  auto* verify = app.add_subcommand("verify", "Check a coloring against an instance");
  verify->add_option("instance", input_path)->required();
  verify->add_option("coloring", coloring_path)->required();
  verify->add_option("--kind", kind, "hyper, graph or dynamic")
      ->check(CLI::IsMember({"hyper", "graph", "dynamic"}));

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("kind", gen_kind, "hyper or graph")
      ->required()
      ->check(CLI::IsMember({"hyper", "graph"}));
  gen->add_option("params", params, "key=value parameters");
  gen->add_option("--seed", seed)->required();
  gen->add_option("-o,--output", output_path, "Instance output path");

  auto* bench = app.add_subcommand("bench", "Run a seeded ensemble, CSV on stdout");
  bench->add_option("--count", count)->required();
  bench->add_option("--seed", seed)->required();
  bench->add_option("params", params, "n=LO..HI m=LO..HI size=LO..HI cap=C|none");

  std::vector<const char*> argv{"hypercolor"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (color->parsed()) {
      const Instance inst = parse_instance(detail::read_input(input_path, in));
      const auto* h = std::get_if<Hypergraph>(&inst);
      if (!h) throw UsageError("'color' expects a hypergraph file (header 'h <n>')");
      const ColorMode m = mode == "k" ? ColorMode::K
                          : mode == "k1" ? ColorMode::KPlusOne
                                         : ColorMode::Auto;
      const HypergraphColoring r = color_hypergraph(*h, m);
      detail::write_output(output_path, write_instance(r.coloring), out);
      err << "colors=" << r.coloring.colors_used() << " bound=" << r.bound << '\n';
      return kOk;
    }
    if (dynamic->parsed()) {
      const Instance inst = parse_instance(detail::read_input(input_path, in));
      const auto* g = std::get_if<Multigraph>(&inst);
      if (!g) throw UsageError("'dynamic' expects a graph file (header 'g <n>')");
      const DynamicColoringResult r = dynamic_color_traced(*g);
      detail::write_output(output_path, write_instance(r.coloring), out);
      err << "colors=" << r.coloring.colors_used() << " bound=" << r.bound << '\n';
      return kOk;
    }
    if (verify->parsed()) {
      const Instance inst = parse_instance(detail::read_input(input_path, in));
      const Coloring c = parse_coloring(detail::read_input(coloring_path, in));
      const bool is_hyper = std::holds_alternative<Hypergraph>(inst);
      if (kind.empty()) kind = is_hyper ? "hyper" : "graph";
      if ((kind == "hyper") != is_hyper) {
        throw UsageError("--kind " + kind + " does not match the instance file");
      }
      const VerifyReport report =
          kind == "hyper"   ? verify_proper_hypergraph(std::get<Hypergraph>(inst), c)
          : kind == "graph" ? verify_proper_graph(std::get<Multigraph>(inst), c)
                            : verify_dynamic(std::get<Multigraph>(inst), c);
      if (report.ok) {
        out << "ok\n";
        return kOk;
      }
      for (const auto& v : report.violations) err << describe(v) << '\n';
      return kVerifyFailed;
    }
    if (gen->parsed()) {
      const auto kv = detail::key_values(params);
      const auto get = [&](const std::string& key) -> std::optional<std::string> {
        const auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        return it->second;
      };
      if (!get("n")) throw UsageError("gen needs n=<vertices>");
      const std::size_t n = detail::to_size("n", *get("n"));
      if (gen_kind == "hyper") {
        detail::reject_unknown(kv, {"n", "m", "size", "cap"});
        GenParams p;
        p.n = n;
        p.m = get("m") ? detail::to_size("m", *get("m")) : 0;
        const Range size = get("size") ? detail::to_range("size", *get("size")) : Range{2, 2};
        p.size_lo = size.lo;
        p.size_hi = size.hi;
        if (get("cap")) p.max_degree_cap = detail::to_size("cap", *get("cap"));
        p.seed = seed;
        detail::write_output(output_path, write_instance(random_hypergraph(p)), out);
      } else {
        detail::reject_unknown(kv, {"n", "p"});
        const std::string prob = get("p").value_or("1/2");
        const auto slash = prob.find('/');
        std::uint64_t num = 0, den = 1;
        if (slash == std::string::npos) {
          num = detail::to_size("p", prob);
        } else {
          num = detail::to_size("p", prob.substr(0, slash));
          den = detail::to_size("p", prob.substr(slash + 1));
        }
        detail::write_output(output_path, write_instance(random_graph(n, num, den, seed)), out);
      }
      return kOk;
    }
    if (bench->parsed()) {
      const auto kv = detail::key_values(params);
      detail::reject_unknown(kv, {"n", "m", "size", "cap"});
      EnsembleSpec spec;
      if (kv.count("n")) spec.n = detail::to_range("n", kv.at("n"));
      if (kv.count("m")) spec.m = detail::to_range("m", kv.at("m"));
      if (kv.count("size")) spec.size = detail::to_range("size", kv.at("size"));
      if (kv.count("cap")) {
        spec.cap = kv.at("cap") == "none"
                       ? std::nullopt
                       : std::optional<std::size_t>(detail::to_size("cap", kv.at("cap")));
      }
      if (spec.size.lo < 2 || spec.size.hi > spec.n.lo) {
        throw UsageError("bench needs 2 <= size lo and size hi <= n lo");
      }
      out << kBenchHeader << '\n';
      for (std::size_t i = 0; i < count; ++i) {
        out << bench_row(i, ensemble_instance(spec, seed, i)) << '\n';
      }
      return kOk;
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hypercolor::cli
