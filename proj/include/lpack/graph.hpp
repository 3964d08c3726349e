#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lpack/errors.hpp"

namespace lpack {

using Vertex = std::size_t;
// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

inline void normalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  // Duplicate edges (in either orientation) are collapsed. Self-loops and
  // out-of-range endpoints are rejected.
  Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n) {
        throw input_error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") has an endpoint >= n = " + std::to_string(n));
      }
      if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& list : adj_) normalize(list);
    for (const auto& list : adj_) edge_count_ += list.size();
    edge_count_ /= 2;
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  [[nodiscard]] std::size_t vertex_count() const { return adj_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edge_count_; }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  [[nodiscard]] std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    check_vertex(v);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // All edges with u < v, in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  void check_vertex(Vertex v) const {
    if (v >= adj_.size()) {
      throw input_error("vertex " + std::to_string(v) + " out of range (n = " +
                        std::to_string(adj_.size()) + ")");
    }
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

enum class EdgeType : std::uint8_t { c, d };

struct TypedEdge {
  Vertex u;
  Vertex v;
  EdgeType type;
  friend bool operator==(const TypedEdge&, const TypedEdge&) = default;
};

// Multigraph whose edges are colour edges (c) or domination edges (d). A pair
// of vertices carries at most one edge of each type; both types may coexist.
class TypedMultigraph {
 public:
  static constexpr std::uint8_t kC = 1;
  static constexpr std::uint8_t kD = 2;

  TypedMultigraph() = default;
  explicit TypedMultigraph(std::size_t n) : adj_(n) {}

  TypedMultigraph(std::size_t n, std::span<const TypedEdge> edges) : adj_(n) {
    for (const auto& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw input_error("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                          ") has an endpoint >= n = " + std::to_string(n));
      }
      if (e.u == e.v) throw input_error("self-loop at vertex " + std::to_string(e.u));
      const std::uint8_t bit = e.type == EdgeType::c ? kC : kD;
      set_bits(e.u, e.v, bit);
      set_bits(e.v, e.u, bit);
    }
  }

  TypedMultigraph(std::size_t n, std::initializer_list<TypedEdge> edges)
      : TypedMultigraph(n, std::span<const TypedEdge>(edges.begin(), edges.size())) {}

  // Every edge of g becomes a d-edge.
  static TypedMultigraph all_d(const Graph& g) {
    std::vector<TypedEdge> typed;
    for (const auto& [u, v] : g.edges()) typed.push_back({u, v, EdgeType::d});
    return TypedMultigraph(g.vertex_count(), typed);
  }

  [[nodiscard]] std::size_t vertex_count() const { return adj_.size(); }

  // Edges ordered by (u, v, type) with u < v and c before d.
  [[nodiscard]] std::vector<TypedEdge> edges() const {
    std::vector<TypedEdge> out;
    for (Vertex u = 0; u < adj_.size(); ++u) {
      for (const auto& [v, bits] : adj_[u]) {
        if (u >= v) continue;
        if (bits & kC) out.push_back({u, v, EdgeType::c});
        if (bits & kD) out.push_back({u, v, EdgeType::d});
      }
    }
    return out;
  }

  [[nodiscard]] std::size_t edge_count() const {
    std::size_t twice = 0;
    for (Vertex v = 0; v < adj_.size(); ++v) twice += degree(v);
    return twice / 2;
  }

  [[nodiscard]] std::uint8_t bits(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adj_[u];
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const auto& entry, Vertex x) { return entry.first < x; });
    return it != list.end() && it->first == v ? it->second : 0;
  }
  [[nodiscard]] bool has_c_edge(Vertex u, Vertex v) const { return bits(u, v) & kC; }
  [[nodiscard]] bool has_d_edge(Vertex u, Vertex v) const { return bits(u, v) & kD; }

  // Degree with parallel c- and d-edges counted separately.
  [[nodiscard]] std::size_t degree(Vertex v) const {
    check_vertex(v);
    std::size_t deg = 0;
    for (const auto& [w, b] : adj_[v]) deg += ((b & kC) ? 1 : 0) + ((b & kD) ? 1 : 0);
    return deg;
  }

  // Distinct neighbours by either edge type.
  [[nodiscard]] VertexSet neighbors(Vertex v) const {
    check_vertex(v);
    VertexSet out;
    for (const auto& [w, b] : adj_[v]) out.push_back(w);
    return out;
  }

  // N_d[v]: v together with its d-neighbours.
  [[nodiscard]] VertexSet closed_d_neighborhood(Vertex v) const {
    check_vertex(v);
    VertexSet out{v};
    for (const auto& [w, b] : adj_[v]) {
      if (b & kD) out.push_back(w);
    }
    normalize(out);
    return out;
  }

  [[nodiscard]] const std::vector<std::pair<Vertex, std::uint8_t>>& adjacency(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  [[nodiscard]] std::size_t max_degree() const {
    std::size_t best = 0;
    for (Vertex v = 0; v < adj_.size(); ++v) best = std::max(best, degree(v));
    return best;
  }

  // The underlying simple graph if the multigraph has only d-edges.
  [[nodiscard]] std::optional<Graph> as_plain_graph() const {
    std::vector<Edge> plain;
    for (const auto& e : edges()) {
      if (e.type == EdgeType::c) return std::nullopt;
      plain.push_back({e.u, e.v});
    }
    return Graph(vertex_count(), plain);
  }

  void check_vertex(Vertex v) const {
    if (v >= adj_.size()) {
      throw input_error("vertex " + std::to_string(v) + " out of range (n = " +
                        std::to_string(adj_.size()) + ")");
    }
  }

  friend bool operator==(const TypedMultigraph& a, const TypedMultigraph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  void set_bits(Vertex u, Vertex v, std::uint8_t bit) {
    auto& list = adj_[u];
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const auto& entry, Vertex x) { return entry.first < x; });
    if (it != list.end() && it->first == v) {
      it->second |= bit;
    } else {
      list.insert(it, {v, bit});
    }
  }

  std::vector<std::vector<std::pair<Vertex, std::uint8_t>>> adj_;
};

// N[v] = {v} ∪ N(v), sorted.
inline VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  VertexSet out(nb.begin(), nb.end());
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

struct DegreeStats {
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  friend bool operator==(const DegreeStats&, const DegreeStats&) = default;
};

inline DegreeStats degree_stats(const Graph& g) {
  DegreeStats s{0, 0, g.vertex_count(), g.edge_count()};
  if (g.vertex_count() == 0) return s;
  s.min_degree = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    s.max_degree = std::max(s.max_degree, g.degree(v));
    s.min_degree = std::min(s.min_degree, g.degree(v));
  }
  return s;
}

// Common degree if g is regular (the empty graph counts as 0-regular).
inline std::optional<std::size_t> regular_degree(const Graph& g) {
  auto s = degree_stats(g);
  if (s.max_degree != s.min_degree) return std::nullopt;
  return s.max_degree;
}

inline double average_degree(const Graph& g) {
  if (g.vertex_count() == 0) return 0.0;
  return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.vertex_count());
}

// Vertices of b are shifted by a.vertex_count().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const std::size_t shift = a.vertex_count();
  for (const auto& [u, v] : b.edges()) edges.push_back({u + shift, v + shift});
  return Graph(a.vertex_count() + b.vertex_count(), edges);
}

inline Graph disjoint_copies(const Graph& g, std::size_t copies) {
  Graph out;
  for (std::size_t i = 0; i < copies; ++i) out = disjoint_union(out, g);
  return out;
}

// BFS edge distance; nullopt when v is unreachable from u.
inline std::optional<std::size_t> pairwise_distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) return 0;
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.vertex_count(), kUnseen);
  std::queue<Vertex> frontier;
  dist[u] = 0;
  frontier.push(u);
  while (!frontier.empty()) {
    Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] != kUnseen) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      frontier.push(y);
    }
  }
  return std::nullopt;
}

// Connected components, each sorted, ordered by smallest vertex.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Induced subgraph with explicit index maps in both directions.
struct InducedSubgraph {
  static constexpr Vertex npos = std::numeric_limits<Vertex>::max();
  Graph graph;
  std::vector<Vertex> to_original;  // local -> original
  std::vector<Vertex> to_local;     // original -> local, npos if dropped
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph sub;
  sub.to_local.assign(g.vertex_count(), InducedSubgraph::npos);
  for (Vertex v : keep) {
    g.check_vertex(v);
    if (sub.to_local[v] != InducedSubgraph::npos) continue;
    sub.to_local[v] = sub.to_original.size();
    sub.to_original.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex local = 0; local < sub.to_original.size(); ++local) {
    for (Vertex w : g.neighbors(sub.to_original[local])) {
      const Vertex lw = sub.to_local[w];
      if (lw != InducedSubgraph::npos && local < lw) edges.push_back({local, lw});
    }
  }
  sub.graph = Graph(sub.to_original.size(), edges);
  return sub;
}

}  // namespace lpack
