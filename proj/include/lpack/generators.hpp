#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpack/errors.hpp"
#include "lpack/field.hpp"
#include "lpack/graph.hpp"
#include "lpack/rng.hpp"

namespace lpack {

inline Graph gen_cycle(std::size_t n) {
  if (n < 3) throw input_error("a cycle needs at least 3 vertices, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

inline Graph gen_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, edges);
}

// 6-cycle plus the three long chords; isomorphic to K_{3,3}.
inline Graph gen_h6() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 6; ++i) edges.push_back({i, (i + 1) % 6});
  for (Vertex i = 0; i < 3; ++i) edges.push_back({i, i + 3});
  return Graph(6, edges);
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
inline Graph gen_petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, edges);
}

inline Graph gen_named(std::string_view family) {
  if (family == "h6") return gen_h6();
  if (family == "petersen") return gen_petersen();
  if (family == "k4") return gen_complete(4);
  throw input_error("unknown graph family '" + std::string(family) + "' (expected h6, petersen or k4)");
}

// Random simple r-regular graph from the pairing model, pairing points one
// at a time and discarding pairs that would create a loop or a repeated edge
// (Steger-Wormald). Restarts when no admissible pair remains.
inline Graph gen_random_regular(std::size_t n, std::size_t r, std::uint64_t seed, std::size_t max_attempts = 1000) {
  if ((n * r) % 2 != 0) throw input_error("n * r must be even (n = " + std::to_string(n) + ", r = " + std::to_string(r) + ")");
  if (r >= n && !(n == 0 && r == 0)) {
    throw input_error("degree r = " + std::to_string(r) + " must be smaller than n = " + std::to_string(n));
  }
  SplitMix64 rng(seed);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Vertex> points;
    points.reserve(n * r);
    for (Vertex v = 0; v < n; ++v) points.insert(points.end(), r, v);
    std::vector<std::vector<Vertex>> adj(n);
    auto adjacent = [&](Vertex a, Vertex b) { return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end(); };
    auto take = [&](std::size_t i, std::size_t j) {
      const Vertex a = points[i];
      const Vertex b = points[j];
      adj[a].push_back(b);
      adj[b].push_back(a);
      if (i < j) std::swap(i, j);
      points[i] = points.back();
      points.pop_back();
      points[j] = points.back();
      points.pop_back();
    };
    bool stuck = false;
    while (!points.empty() && !stuck) {
      bool paired = false;
      for (int tries = 0; tries < 64 && !paired; ++tries) {
        const auto i = static_cast<std::size_t>(rng.below(points.size()));
        const auto j = static_cast<std::size_t>(rng.below(points.size()));
        if (i == j || points[i] == points[j] || adjacent(points[i], points[j])) continue;
        take(i, j);
        paired = true;
      }
      if (paired) continue;
      std::vector<std::pair<std::size_t, std::size_t>> admissible;
      for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
          if (points[i] != points[j] && !adjacent(points[i], points[j])) admissible.emplace_back(i, j);
        }
      }
      if (admissible.empty()) {
        stuck = true;
      } else {
        auto [i, j] = admissible[rng.below(admissible.size())];
        take(i, j);
      }
    }
    if (stuck) continue;
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b : adj[a]) {
        if (a < b) edges.push_back({a, b});
      }
    }
    return Graph(n, edges);
  }
  throw resource_error("could not build a simple " + std::to_string(r) + "-regular graph on " + std::to_string(n) +
                       " vertices in " + std::to_string(max_attempts) + " attempts");
}

struct ProjectiveGraph {
  Graph graph;
  std::vector<ProjectivePoint> points;  // points[v] is vertex v
};

// Orthogonality graph on the points of the projective space over GF(q)
// with vectors of length k + 2; self-orthogonal points get no loop.
inline ProjectiveGraph projective_geometry(std::uint32_t q, std::size_t k) {
  if (k < 1) throw input_error("k must be at least 1");
  GaloisField field(q);
  auto points = projective_points(field, k + 2);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < points.size(); ++i) {
    for (Vertex j = i + 1; j < points.size(); ++j) {
      if (inner_product(field, points[i], points[j]) == 0) edges.push_back({i, j});
    }
  }
  return {Graph(points.size(), edges), std::move(points)};
}

inline Graph gen_projective(std::uint32_t q, std::size_t k) { return projective_geometry(q, k).graph; }

}  // namespace lpack
