#pragma once

// Plain-text instance and coloring files.
//
//   hypergraph:  "h <n>" then one "e <v1> ... <vt>" line per hyperedge, t >= 2
//   graph:       "g <n>" then one "a <u> <v>" line per edge
//   coloring:    one "c <vertex> <color>" line per vertex, ascending, then
//                "palette <count>"
//
// Lines starting with '#' and blank lines are skipped on input. Output is
// canonical: no comments, single spaces, '\n' after every line.

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hypercolor/core.hpp"

namespace hypercolor {

using Instance = std::variant<Hypergraph, Multigraph>;

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::size_t parse_number(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

// Calls fn(line_number, tokens) for every non-blank, non-comment line and
// returns the number of lines read.
template <typename Fn>
std::size_t for_each_record(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    fn(number, tokens);
  }
  return number;
}

}  // namespace detail

inline Instance parse_instance(std::istream& in) {
  std::optional<Instance> result;
  std::size_t n = 0;
  const std::size_t lines = detail::for_each_record(in, [&](std::size_t line, const std::vector<std::string_view>& t) {
    if (!result) {
      if (t.size() != 2 || (t[0] != "h" && t[0] != "g")) {
        throw ParseError(line, "expected header 'h <n>' or 'g <n>'");
      }
      n = detail::parse_number(t[1], line);
      if (t[0] == "h") {
        result.emplace(Hypergraph(n));
      } else {
        result.emplace(Multigraph(n));
      }
      return;
    }
    if (auto* h = std::get_if<Hypergraph>(&*result)) {
      if (t[0] != "e") throw ParseError(line, "expected hyperedge line 'e <v1> <v2> ...'");
      std::vector<Vertex> members;
      members.reserve(t.size() - 1);
      for (std::size_t i = 1; i < t.size(); ++i) {
        const Vertex v = detail::parse_number(t[i], line);
        if (v >= n) throw ParseError(line, "vertex " + std::to_string(v) + " out of range");
        members.push_back(v);
      }
      try {
        h->add_hyperedge(std::move(members));
      } catch (const InvalidHypergraph&) {
        throw ParseError(line, "hyperedge needs at least two distinct vertices");
      }
      return;
    }
    auto& g = std::get<Multigraph>(*result);
    if (t[0] != "a" || t.size() != 3) throw ParseError(line, "expected edge line 'a <u> <v>'");
    const Vertex u = detail::parse_number(t[1], line);
    const Vertex v = detail::parse_number(t[2], line);
    if (u >= n || v >= n) throw ParseError(line, "edge endpoint out of range");
    if (u == v) throw ParseError(line, "self-loop");
    g.add_edge(u, v);
  });
  if (!result) throw ParseError(lines + 1, "missing header");
  return std::move(*result);
}

inline Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

inline Coloring parse_coloring(std::istream& in) {
  Coloring c;
  bool have_palette = false;
  const std::size_t lines = detail::for_each_record(in, [&](std::size_t line, const std::vector<std::string_view>& t) {
    if (have_palette) throw ParseError(line, "content after palette trailer");
    if (t[0] == "palette" && t.size() == 2) {
      c.palette = detail::parse_number(t[1], line);
      have_palette = true;
      return;
    }
    if (t[0] != "c" || t.size() != 3) throw ParseError(line, "expected 'c <vertex> <color>'");
    const Vertex v = detail::parse_number(t[1], line);
    if (v != c.colors.size()) {
      throw ParseError(line, "expected vertex " + std::to_string(c.colors.size()));
    }
    c.colors.push_back(detail::parse_number(t[2], line));
  });
  if (!have_palette) throw ParseError(lines + 1, "missing 'palette <count>' trailer");
  for (Vertex v = 0; v < c.colors.size(); ++v) {
    if (c.colors[v] >= c.palette) {
      throw ParseError(v + 1, "color " + std::to_string(c.colors[v]) + " >= palette");
    }
  }
  return c;
}

inline Coloring parse_coloring(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_coloring(in);
}

inline std::string write_instance(const Hypergraph& h) {
  std::string out = "h " + std::to_string(h.num_vertices()) + "\n";
  for (const auto& e : h.hyperedges()) {
    out += 'e';
    for (Vertex v : e) {
      out += ' ';
      out += std::to_string(v);
    }
    out += '\n';
  }
  return out;
}

inline std::string write_instance(const Multigraph& g) {
  std::string out = "g " + std::to_string(g.num_vertices()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "a " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

inline std::string write_instance(const Coloring& c) {
  std::string out;
  for (Vertex v = 0; v < c.colors.size(); ++v) {
    out += "c " + std::to_string(v) + " " + std::to_string(c.colors[v]) + "\n";
  }
  out += "palette " + std::to_string(c.palette) + "\n";
  return out;
}

inline std::string write_instance(const Instance& inst) {
  return std::visit([](const auto& x) { return write_instance(x); }, inst);
}

}  // namespace hypercolor
