#pragma once

// Proper 3-colouring of graphs with maximum degree 3 and no K4 component.
//
// Per component: bipartite components get the BFS 2-colouring; components
// with a vertex of degree < 3 are coloured greedily in reverse BFS order from
// that vertex; cubic components use Lovász's construction (a vertex v with
// non-adjacent neighbours x, y such that G - {x, y} stays connected), or are
// split at a bridge when no such triple exists.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpack/errors.hpp"
#include "lpack/graph.hpp"

namespace lpack {

using Coloring = std::vector<std::uint8_t>;

inline bool is_proper_coloring(const Graph& g, const Coloring& colors) {
  if (colors.size() != g.vertex_count()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (colors[u] == colors[v]) return false;
  }
  return true;
}

namespace detail {

constexpr std::uint8_t kUncolored = 0xff;

// BFS order from root over vertices not marked blocked.
inline std::vector<Vertex> bfs_order(const Graph& g, Vertex root, const std::vector<bool>& blocked) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> order{root};
  seen[root] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : g.neighbors(order[head])) {
      if (!seen[w] && !blocked[w]) {
        seen[w] = true;
        order.push_back(w);
      }
    }
  }
  return order;
}

inline bool greedy_color(const Graph& g, Coloring& colors, Vertex v) {
  bool used[3] = {false, false, false};
  for (Vertex w : g.neighbors(v)) {
    if (colors[w] < 3) used[colors[w]] = true;
  }
  for (std::uint8_t c = 0; c < 3; ++c) {
    if (!used[c]) {
      colors[v] = c;
      return true;
    }
  }
  return false;
}

inline std::optional<Coloring> two_color(const Graph& g) {
  Coloring colors(g.vertex_count(), kUncolored);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (colors[s] != kUncolored) continue;
    colors[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x)) {
        if (colors[y] == kUncolored) {
          colors[y] = static_cast<std::uint8_t>(1 - colors[x]);
          q.push(y);
        } else if (colors[y] == colors[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return colors;
}

// Greedy in reverse BFS order; succeeds whenever the root has degree <= 2.
inline bool rooted_greedy(const Graph& g, Vertex root, Coloring& colors) {
  std::vector<bool> blocked(g.vertex_count(), false);
  for (Vertex v = 0; v < g.vertex_count(); ++v) blocked[v] = colors[v] != kUncolored;
  auto order = bfs_order(g, root, blocked);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (!greedy_color(g, colors, *it)) return false;
  }
  return true;
}

inline bool connected_without(const Graph& g, Vertex x, Vertex y) {
  std::vector<bool> blocked(g.vertex_count(), false);
  blocked[x] = blocked[y] = true;
  Vertex start = 0;
  while (start == x || start == y) ++start;
  return bfs_order(g, start, blocked).size() + 2 == g.vertex_count();
}

inline std::optional<Coloring> lovasz_color(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex x = nb[i];
        const Vertex y = nb[j];
        if (g.has_edge(x, y) || !connected_without(g, x, y)) continue;
        Coloring colors(n, kUncolored);
        colors[x] = colors[y] = 0;
        if (rooted_greedy(g, v, colors)) return colors;
      }
    }
  }
  return std::nullopt;
}

inline std::optional<Coloring> bridge_split_color(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (const auto& bridge : g.edges()) {
    std::vector<Edge> rest;
    for (const auto& e : g.edges()) {
      if (!(e == bridge)) rest.push_back(e);
    }
    Graph split(n, rest);
    auto comps = connected_components(split);
    if (comps.size() != 2) continue;
    Coloring colors(n, kUncolored);
    if (!rooted_greedy(split, bridge.u, colors) || !rooted_greedy(split, bridge.v, colors)) return std::nullopt;
    if (colors[bridge.u] == colors[bridge.v]) {
      const auto& side = std::binary_search(comps[0].begin(), comps[0].end(), bridge.v) ? comps[0] : comps[1];
      const std::uint8_t a = colors[bridge.v];
      const std::uint8_t b = static_cast<std::uint8_t>((a + 1) % 3);
      for (Vertex w : side) {
        if (colors[w] == a) {
          colors[w] = b;
        } else if (colors[w] == b) {
          colors[w] = a;
        }
      }
    }
    return colors;
  }
  return std::nullopt;
}

inline bool backtrack_color(const Graph& g, Coloring& colors, Vertex v) {
  if (v == g.vertex_count()) return true;
  for (std::uint8_t c = 0; c < 3; ++c) {
    bool clash = false;
    for (Vertex w : g.neighbors(v)) {
      if (w < v && colors[w] == c) clash = true;
    }
    if (clash) continue;
    colors[v] = c;
    if (backtrack_color(g, colors, v + 1)) return true;
  }
  colors[v] = kUncolored;
  return false;
}

inline Coloring color_component(const Graph& comp) {
  const std::size_t n = comp.vertex_count();
  if (auto two = two_color(comp)) return *two;

  std::optional<Coloring> colors;
  const auto stats = degree_stats(comp);
  if (stats.min_degree < 3) {
    Vertex root = 0;
    while (comp.degree(root) != stats.min_degree) ++root;
    Coloring attempt(n, kUncolored);
    if (rooted_greedy(comp, root, attempt)) colors = attempt;
  } else {
    colors = lovasz_color(comp);
    if (!colors) colors = bridge_split_color(comp);
  }
  if (colors && is_proper_coloring(comp, *colors)) return *colors;

  if (n <= 24) {
    Coloring attempt(n, kUncolored);
    if (backtrack_color(comp, attempt, 0)) return attempt;
  }
  throw std::logic_error("3-colouring construction failed on a component of " + std::to_string(n) + " vertices");
}

}  // namespace detail

// Colours are 0, 1, 2; deterministic for a fixed input.
inline Coloring brooks_three_coloring(const Graph& g) {
  const auto stats = degree_stats(g);
  if (stats.max_degree > 3) {
    throw precondition_error("3-colouring needs maximum degree <= 3, got " + std::to_string(stats.max_degree));
  }
  Coloring colors(g.vertex_count(), 0);
  for (const auto& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    if (comp.size() == 4 && sub.graph.edge_count() == 6) {
      throw precondition_error("component containing vertex " + std::to_string(comp.front()) +
                               " is K4, which needs 4 colours");
    }
    auto local = detail::color_component(sub.graph);
    for (Vertex i = 0; i < comp.size(); ++i) colors[sub.to_original[i]] = local[i];
  }
  return colors;
}

}  // namespace lpack
