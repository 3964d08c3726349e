#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lpack/errors.hpp"
#include "lpack/graph.hpp"

namespace lpack {

struct Packing {
  std::size_t k = 1;
  VertexSet vertices;
};

struct Violation {
  enum class Kind { vertex, cedge };
  Kind kind = Kind::vertex;
  // vertex: the centre of the offending neighbourhood. cedge: endpoints u < v.
  Vertex u = 0;
  Vertex v = 0;
  std::size_t count = 0;
  std::size_t limit = 0;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

namespace detail {

inline std::vector<bool> membership(std::size_t n, std::span<const Vertex> set) {
  std::vector<bool> in(n, false);
  for (Vertex v : set) {
    if (v >= n) {
      throw input_error("vertex " + std::to_string(v) + " out of range (n = " + std::to_string(n) + ")");
    }
    in[v] = true;
  }
  return in;
}

inline std::size_t closed_count(const Graph& g, const std::vector<bool>& in, Vertex v) {
  std::size_t c = in[v] ? 1 : 0;
  for (Vertex w : g.neighbors(v)) c += in[w] ? 1 : 0;
  return c;
}

}  // namespace detail

// Valid iff |N[v] ∩ X| <= k for every vertex v. Violations sorted by vertex.
inline VerificationReport verify_k_limited(const Graph& g, std::span<const Vertex> x, std::size_t k) {
  auto in = detail::membership(g.vertex_count(), x);
  VerificationReport report;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto c = detail::closed_count(g, in, v);
    if (c > k) report.violations.push_back({Violation::Kind::vertex, v, v, c, k});
  }
  report.valid = report.violations.empty();
  return report;
}

inline VerificationReport verify(const Graph& g, const Packing& p) {
  return verify_k_limited(g, p.vertices, p.k);
}

// Valid iff no c-edge has both ends in X and |N_d[v] ∩ X| <= 2 for every v.
// c-edge violations come first, then vertex violations.
inline VerificationReport verify_typed_two_limited(const TypedMultigraph& g, std::span<const Vertex> x) {
  auto in = detail::membership(g.vertex_count(), x);
  VerificationReport report;
  for (const auto& e : g.edges()) {
    if (e.type == EdgeType::c && in[e.u] && in[e.v]) {
      report.violations.push_back({Violation::Kind::cedge, e.u, e.v, 2, 1});
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::size_t c = 0;
    for (Vertex w : g.closed_d_neighborhood(v)) c += in[w] ? 1 : 0;
    if (c > 2) report.violations.push_back({Violation::Kind::vertex, v, v, c, 2});
  }
  report.valid = report.violations.empty();
  return report;
}

// Valid iff |N[v] ∩ D| >= l for every vertex v; a violation's count is below its limit.
inline VerificationReport verify_tuple_dominating(const Graph& g, std::span<const Vertex> d, std::size_t l) {
  auto in = detail::membership(g.vertex_count(), d);
  VerificationReport report;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto c = detail::closed_count(g, in, v);
    if (c < l) report.violations.push_back({Violation::Kind::vertex, v, v, c, l});
  }
  report.valid = report.violations.empty();
  return report;
}

// V \ X. On an r-regular graph X is a k-limited packing iff the complement
// is an (r + 1 - k)-tuple dominating set.
inline VertexSet dual_complement(const Graph& g, std::span<const Vertex> x, std::size_t k) {
  auto r = regular_degree(g);
  if (!r) throw precondition_error("dual_complement needs a regular graph");
  if (k < 1 || k > *r + 1) {
    throw precondition_error("k must lie in [1, " + std::to_string(*r + 1) + "] for a " +
                             std::to_string(*r) + "-regular graph");
  }
  auto in = detail::membership(g.vertex_count(), x);
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

inline std::string format_report(const VerificationReport& report) {
  std::string out = report.valid ? "valid: true\n" : "valid: false\n";
  for (const auto& viol : report.violations) {
    if (viol.kind == Violation::Kind::cedge) {
      out += "violation: cedge " + std::to_string(viol.u) + ' ' + std::to_string(viol.v) + '\n';
    } else {
      out += "violation: vertex " + std::to_string(viol.u) + " count " + std::to_string(viol.count) +
             " limit " + std::to_string(viol.limit) + '\n';
    }
  }
  return out;
}

}  // namespace lpack
