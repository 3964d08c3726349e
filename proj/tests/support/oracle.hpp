#pragma once

// Brute-force references used as independent oracles in tests. They share
// no code with the library solvers: every subset is scanned as a bitmask.

#include <bit>
#include <cstdint>
#include <vector>

#include "lpack/errors.hpp"
#include "lpack/graph.hpp"

namespace lpack::testing {

inline std::vector<std::uint32_t> closed_masks(const Graph& g) {
  std::vector<std::uint32_t> masks(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    masks[v] = 1u << v;
    for (Vertex w : g.neighbors(v)) masks[v] |= 1u << w;
  }
  return masks;
}

inline void check_oracle_size(std::size_t n) {
  if (n > 20) throw resource_error("enumeration oracle is limited to 20 vertices");
}

// max |X| with |N[v] ∩ X| <= k for all v.
inline std::size_t enumerate_oracle(const Graph& g, std::size_t k) {
  check_oracle_size(g.vertex_count());
  const auto masks = closed_masks(g);
  const std::uint32_t limit = 1u << g.vertex_count();
  std::size_t best = 0;
  for (std::uint32_t x = 0; x < limit; ++x) {
    const auto size = static_cast<std::size_t>(std::popcount(x));
    if (size <= best) continue;
    bool ok = true;
    for (auto m : masks) {
      if (static_cast<std::size_t>(std::popcount(m & x)) > k) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

// min |D| with |N[v] ∩ D| >= l for all v; n + 1 if none exists.
inline std::size_t enumerate_domination_oracle(const Graph& g, std::size_t l) {
  check_oracle_size(g.vertex_count());
  const auto masks = closed_masks(g);
  const std::uint32_t limit = 1u << g.vertex_count();
  std::size_t best = g.vertex_count() + 1;
  for (std::uint32_t d = 0; d < limit; ++d) {
    const auto size = static_cast<std::size_t>(std::popcount(d));
    if (size >= best) continue;
    bool ok = true;
    for (auto m : masks) {
      if (static_cast<std::size_t>(std::popcount(m & d)) < l) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

// max |X| with no c-edge inside X and |N_d[v] ∩ X| <= 2 for all v.
inline std::size_t enumerate_typed_oracle(const TypedMultigraph& g) {
  check_oracle_size(g.vertex_count());
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> d_masks(n);
  std::vector<std::uint32_t> c_masks(n, 0);
  for (Vertex v = 0; v < n; ++v) d_masks[v] = 1u << v;
  for (const auto& e : g.edges()) {
    auto& masks = e.type == EdgeType::c ? c_masks : d_masks;
    masks[e.u] |= 1u << e.v;
    masks[e.v] |= 1u << e.u;
  }
  const std::uint32_t limit = 1u << n;
  std::size_t best = 0;
  for (std::uint32_t x = 0; x < limit; ++x) {
    const auto size = static_cast<std::size_t>(std::popcount(x));
    if (size <= best) continue;
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      if (std::popcount(d_masks[v] & x) > 2) ok = false;
      if ((x >> v & 1u) && (c_masks[v] & x)) ok = false;
    }
    if (ok) best = size;
  }
  return best;
}

}  // namespace lpack::testing
