#pragma once

#include <vector>

#include "lpack/errors.hpp"
#include "lpack/graph.hpp"

namespace lpack {

// Scan vertices in index order, keeping each one whose addition leaves the
// set k-limited. For k = 1 every kept vertex blocks at most Δ² + 1 vertices,
// which gives L_1 >= n / (Δ² + 1).
inline VertexSet greedy_k_limited(const Graph& g, std::size_t k) {
  if (k == 0) throw input_error("k must be positive");
  std::vector<std::size_t> load(g.vertex_count(), 0);
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    bool fits = load[v] < k;
    for (Vertex w : g.neighbors(v)) fits = fits && load[w] < k;
    if (!fits) continue;
    ++load[v];
    for (Vertex w : g.neighbors(v)) ++load[w];
    out.push_back(v);
  }
  return out;
}

}  // namespace lpack
