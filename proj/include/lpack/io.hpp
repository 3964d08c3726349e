#pragma once

// Text formats.
//
// Graph file: optional '#' comment lines, header "n m", then exactly m edge
// lines "u v", "u v c" or "u v d" (0-based, untyped edges are d-edges). A file
// with at least one typed edge line parses as a TypedMultigraph.
//
// Packing file: whitespace-separated vertex indices; '#' starts a comment.
// Lines of the form "key: value" are report lines; only "witness:" contributes
// indices, so the output of `lpack construct` can be fed back to `verify`.

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lpack/errors.hpp"
#include "lpack/graph.hpp"

namespace lpack {

using AnyGraph = std::variant<Graph, TypedMultigraph>;

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

inline std::size_t parse_index(std::string_view tok, std::size_t line_no, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw input_error("line " + std::to_string(line_no) + ": invalid " + what + " '" +
                      std::string(tok) + "'");
  }
  return value;
}

inline std::string line_prefix(std::size_t line_no) {
  return "line " + std::to_string(line_no) + ": ";
}

}  // namespace detail

inline AnyGraph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t seen = 0;
  bool typed = false;
  std::vector<TypedEdge> edges;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;

    if (!have_header) {
      if (tokens.size() != 2) {
        throw input_error(detail::line_prefix(line_no) + "malformed header, expected 'n m'");
      }
      n = detail::parse_index(tokens[0], line_no, "vertex count");
      m = detail::parse_index(tokens[1], line_no, "edge count");
      have_header = true;
      continue;
    }
    if (seen == m) {
      throw input_error(detail::line_prefix(line_no) + "more edge lines than the declared " +
                        std::to_string(m));
    }
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw input_error(detail::line_prefix(line_no) + "expected 'u v' or 'u v c|d'");
    }
    const Vertex u = detail::parse_index(tokens[0], line_no, "endpoint");
    const Vertex v = detail::parse_index(tokens[1], line_no, "endpoint");
    if (u >= n || v >= n) {
      throw input_error(detail::line_prefix(line_no) + "endpoint out of range (n = " +
                        std::to_string(n) + ")");
    }
    if (u == v) throw input_error(detail::line_prefix(line_no) + "self-loop at " + std::to_string(u));
    EdgeType type = EdgeType::d;
    if (tokens.size() == 3) {
      typed = true;
      if (tokens[2] == "c") {
        type = EdgeType::c;
      } else if (tokens[2] != "d") {
        throw input_error(detail::line_prefix(line_no) + "edge type must be 'c' or 'd', got '" +
                          std::string(tokens[2]) + "'");
      }
    }
    edges.push_back({u, v, type});
    ++seen;
  }
  if (!have_header) throw input_error("line " + std::to_string(line_no) + ": missing header 'n m'");
  if (seen != m) {
    throw input_error("line " + std::to_string(line_no) + ": expected " + std::to_string(m) +
                      " edge lines, found " + std::to_string(seen));
  }
  if (typed) return TypedMultigraph(n, edges);
  std::vector<Edge> plain;
  plain.reserve(edges.size());
  for (const auto& e : edges) plain.push_back({e.u, e.v});
  return Graph(n, plain);
}

// Plain graphs are promoted to all-d multigraphs.
inline TypedMultigraph as_typed(const AnyGraph& g) {
  if (const auto* plain = std::get_if<Graph>(&g)) return TypedMultigraph::all_d(*plain);
  return std::get<TypedMultigraph>(g);
}

// Typed input is accepted when it carries only d-edges.
inline Graph as_plain(const AnyGraph& g) {
  if (const auto* plain = std::get_if<Graph>(&g)) return *plain;
  auto converted = std::get<TypedMultigraph>(g).as_plain_graph();
  if (!converted) throw input_error("graph has c-edges; this operation needs a plain graph");
  return *converted;
}

inline std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline std::string serialize_graph(const TypedMultigraph& g) {
  auto edges = g.edges();
  std::ostringstream out;
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (const auto& e : edges) out << e.u << ' ' << e.v << ' ' << (e.type == EdgeType::c ? 'c' : 'd') << '\n';
  return out.str();
}

inline std::string serialize_graph(const AnyGraph& g) {
  return std::visit([](const auto& x) { return serialize_graph(x); }, g);
}

// Returns the indices in file order (not deduplicated, not range checked).
inline std::vector<Vertex> parse_packing(std::string_view text) {
  std::vector<Vertex> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    line = detail::strip_comment(line);
    if (auto colon = line.find(':'); colon != std::string_view::npos) {
      auto key = detail::split_ws(line.substr(0, colon));
      if (key.size() != 1 || key.front() != "witness") continue;
      line = line.substr(colon + 1);
    }
    for (auto tok : detail::split_ws(line)) out.push_back(detail::parse_index(tok, line_no, "vertex index"));
  }
  return out;
}

inline std::string serialize_packing(const VertexSet& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(x[i]);
  }
  out += '\n';
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << content;
}

}  // namespace lpack
