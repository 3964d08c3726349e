#pragma once

// Constructive 2-limited sets of size >= n/3 in typed multigraphs of maximum
// degree 3 (c-edges and d-edges, no all-c K4 component).
//
// The construction is an induction on the number of vertices, unrolled into
// a loop: every step takes the component of the smallest surviving vertex,
// picks a reduction (a removed set R and a contributed set S ⊆ R with
// 3|S| >= |R|), deletes R, adds the c-edges that carry S's constraints over
// to the survivors, and puts S into the answer. Reductions are tried in this
// order:
//
//   base-case            component with <= 4 vertices
//   brooks               component without d-edges: largest colour class
//   configuration-A      K4 minus bd in c-edges, b and d joined through u, uv
//   degree-1             u with a single neighbour v
//   degree-2             u with exactly two neighbours v, w
//   d-edge-two-triangles / d-edge-one-triangle / d-edge-no-triangle
//                        on a simple cubic component
//
// Each proposal is checked by `encode`, which derives the added c-edges from
// first principles: for every vertex z whose closed d-neighbourhood meets S,
// the survivors in N_d[z] may hold at most 2 - |N_d[z] ∩ S| members of the
// final set. A residual capacity of 1 over two survivors becomes a c-edge; any
// other shortfall rejects the proposal. Added edges that close an all-c K4
// trigger the special subcases.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpack/coloring.hpp"
#include "lpack/errors.hpp"
#include "lpack/graph.hpp"

namespace lpack {

struct ConfigurationA {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;
  Vertex d = 0;
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const ConfigurationA&, const ConfigurationA&) = default;
};

struct ReductionStep {
  std::string rule;
  VertexSet removed;
  VertexSet contributed;
  std::vector<Edge> added_c_edges;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

struct TwoLimitedResult {
  VertexSet vertices;
  ReductionTrace trace;
};

namespace detail {

inline bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

inline VertexSet set_of(std::initializer_list<Vertex> items) {
  VertexSet s(items);
  normalize(s);
  return s;
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Mutable typed multigraph over the original vertex indices.
class WorkGraph {
 public:
  using Bits = std::uint8_t;
  static constexpr Bits kC = TypedMultigraph::kC;
  static constexpr Bits kD = TypedMultigraph::kD;

  explicit WorkGraph(const TypedMultigraph& g) : adj_(g.vertex_count()), alive_(g.vertex_count(), true) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) adj_[v] = g.adjacency(v);
  }

  [[nodiscard]] std::size_t size() const { return adj_.size(); }
  [[nodiscard]] bool alive(Vertex v) const { return alive_[v]; }

  [[nodiscard]] Bits bits(Vertex u, Vertex v) const {
    for (const auto& [w, b] : adj_[u]) {
      if (w == v) return b;
    }
    return 0;
  }
  [[nodiscard]] bool c_edge(Vertex u, Vertex v) const { return bits(u, v) & kC; }
  [[nodiscard]] bool d_edge(Vertex u, Vertex v) const { return bits(u, v) & kD; }

  [[nodiscard]] std::size_t degree(Vertex v) const {
    std::size_t deg = 0;
    for (const auto& [w, b] : adj_[v]) deg += std::popcount(b);
    return deg;
  }

  [[nodiscard]] VertexSet neighbors(Vertex v) const { return select(v, kC | kD); }
  [[nodiscard]] VertexSet c_neighbors(Vertex v) const { return select(v, kC); }
  [[nodiscard]] VertexSet d_neighbors(Vertex v) const { return select(v, kD); }

  // Multiplicity of edges from v into the sorted set r.
  [[nodiscard]] std::size_t edges_into(Vertex v, const VertexSet& r) const {
    std::size_t count = 0;
    for (const auto& [w, b] : adj_[v]) {
      if (contains(r, w)) count += std::popcount(b);
    }
    return count;
  }

  void remove(Vertex v) {
    for (const auto& [w, b] : adj_[v]) {
      auto& list = adj_[w];
      list.erase(std::find_if(list.begin(), list.end(), [&](const auto& e) { return e.first == v; }));
    }
    adj_[v].clear();
    alive_[v] = false;
  }

  void add_c_edge(Vertex u, Vertex v) {
    set(u, v, kC);
    set(v, u, kC);
  }

  [[nodiscard]] VertexSet component(Vertex s) const {
    VertexSet out{s};
    std::vector<bool> seen(adj_.size(), false);
    seen[s] = true;
    for (std::size_t head = 0; head < out.size(); ++head) {
      for (const auto& [w, b] : adj_[out[head]]) {
        if (!seen[w]) {
          seen[w] = true;
          out.push_back(w);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  [[nodiscard]] bool all_c_k4(const VertexSet& s) const {
    if (s.size() != 4) return false;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        if (!c_edge(s[i], s[j])) return false;
      }
    }
    return true;
  }

 private:
  [[nodiscard]] VertexSet select(Vertex v, Bits mask) const {
    VertexSet out;
    for (const auto& [w, b] : adj_[v]) {
      if (b & mask) out.push_back(w);
    }
    return out;
  }

  void set(Vertex u, Vertex v, Bits bit) {
    auto& list = adj_[u];
    auto it = std::lower_bound(list.begin(), list.end(), v, [](const auto& e, Vertex x) { return e.first < x; });
    if (it != list.end() && it->first == v) {
      it->second |= bit;
    } else {
      list.insert(it, {v, bit});
    }
  }

  std::vector<std::vector<std::pair<Vertex, Bits>>> adj_;
  std::vector<bool> alive_;
};

struct AddedEdge {
  Vertex u;
  Vertex v;
  Vertex owner;  // vertex whose neighbourhood constraint demanded the edge
};

struct Plan {
  std::string rule;
  VertexSet removed;
  VertexSet contributed;
  std::vector<AddedEdge> added;
  std::vector<VertexSet> new_k4s;

  [[nodiscard]] std::optional<AddedEdge> edge_owned_by(Vertex owner) const {
    for (const auto& e : added) {
      if (e.owner == owner) return e;
    }
    return std::nullopt;
  }
};

// Checks a proposed reduction and derives its added c-edges. Returns nullopt
// when some constraint of S cannot be expressed on the survivors, when the
// size ratio fails, or when an added edge would push a degree above 3.
inline std::optional<Plan> encode(const WorkGraph& g, std::string rule, VertexSet removed, VertexSet contributed) {
  normalize(removed);
  normalize(contributed);
  if (3 * contributed.size() < removed.size()) return std::nullopt;
  for (Vertex s : contributed) {
    if (!contains(removed, s)) return std::nullopt;
    for (Vertex w : g.c_neighbors(s)) {
      // c-edge inside S, or a c-neighbour that survives and cannot be excluded.
      if (contains(contributed, w) || !contains(removed, w)) return std::nullopt;
    }
  }

  Plan plan{std::move(rule), std::move(removed), std::move(contributed), {}, {}};
  const auto& r = plan.removed;
  const auto& s = plan.contributed;

  auto overlap_with_s = [&](Vertex z) {
    std::size_t count = contains(s, z) ? 1 : 0;
    for (Vertex w : g.d_neighbors(z)) count += contains(s, w) ? 1 : 0;
    return count;
  };
  auto require = [&](Vertex owner, const VertexSet& survivors, std::size_t used) {
    if (used > 2) return false;
    const std::size_t cap = 2 - used;
    if (survivors.size() <= cap) return true;
    if (cap != 1 || survivors.size() != 2) return false;
    if (!g.c_edge(survivors[0], survivors[1])) plan.added.push_back({survivors[0], survivors[1], owner});
    return true;
  };

  for (Vertex z : r) {
    if (!require(z, set_minus(g.d_neighbors(z), r), overlap_with_s(z))) return std::nullopt;
  }
  VertexSet outside;
  for (Vertex x : s) {
    for (Vertex w : g.d_neighbors(x)) {
      if (!contains(r, w)) outside.push_back(w);
    }
  }
  normalize(outside);
  for (Vertex z : outside) {
    auto closed = g.d_neighbors(z);
    closed.push_back(z);
    normalize(closed);
    if (!require(z, set_minus(closed, r), overlap_with_s(z))) return std::nullopt;
  }

  // One edge per pair, first owner wins.
  std::vector<AddedEdge> unique;
  for (const auto& e : plan.added) {
    auto same = [&](const AddedEdge& f) { return f.u == e.u && f.v == e.v; };
    if (std::none_of(unique.begin(), unique.end(), same)) unique.push_back(e);
  }
  plan.added = std::move(unique);

  VertexSet endpoints;
  for (const auto& e : plan.added) {
    endpoints.push_back(e.u);
    endpoints.push_back(e.v);
  }
  normalize(endpoints);
  auto added_partners = [&](Vertex p) {
    VertexSet out;
    for (const auto& e : plan.added) {
      if (e.u == p) out.push_back(e.v);
      if (e.v == p) out.push_back(e.u);
    }
    return out;
  };
  for (Vertex p : endpoints) {
    if (g.degree(p) - g.edges_into(p, r) + added_partners(p).size() > 3) return std::nullopt;
  }

  // All-c K4s in the reduced graph must contain an added edge.
  auto c_after = [&](Vertex p) { return set_union(set_minus(g.c_neighbors(p), r), [&] {
                                   auto extra = added_partners(p);
                                   normalize(extra);
                                   return extra;
                                 }()); };
  for (Vertex p : endpoints) {
    auto group = c_after(p);
    group.push_back(p);
    normalize(group);
    if (group.size() != 4) continue;
    bool complete = true;
    for (Vertex q : group) {
      auto cq = c_after(q);
      for (Vertex t : group) {
        if (t != q && !contains(cq, t)) complete = false;
      }
    }
    if (complete && std::find(plan.new_k4s.begin(), plan.new_k4s.end(), group) == plan.new_k4s.end()) {
      plan.new_k4s.push_back(group);
    }
  }
  return plan;
}

inline bool usable(const std::optional<Plan>& p) { return p && p->new_k4s.empty(); }

inline std::optional<ConfigurationA> find_configuration_a(const WorkGraph& g, const VertexSet& scope) {
  for (Vertex c : scope) {
    auto cn = g.c_neighbors(c);
    if (cn.size() != 3) continue;
    for (Vertex a : cn) {
      for (Vertex d : cn) {
        if (d == a || !g.c_edge(a, d)) continue;
        for (Vertex b : cn) {
          if (b == a || b == d || !g.c_edge(a, b) || g.c_edge(b, d)) continue;
          const auto quad = set_of({a, b, c, d});
          auto common = set_minus(g.neighbors(d), quad);
          auto via_b = set_minus(g.neighbors(b), quad);
          for (Vertex u : common) {
            if (!contains(via_b, u)) continue;
            for (Vertex v : g.neighbors(u)) {
              if (contains(quad, v)) continue;
              return ConfigurationA{a, b, c, d, u, v};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

// Depth-first search for a 2-limited set of the given size inside one component.
inline std::optional<VertexSet> search_two_limited(const WorkGraph& g, const VertexSet& comp, std::size_t target) {
  std::vector<int> room(g.size(), 2);
  std::vector<bool> chosen(g.size(), false);
  VertexSet current;
  auto can_add = [&](Vertex v) {
    if (room[v] == 0) return false;
    for (Vertex w : g.d_neighbors(v)) {
      if (room[w] == 0) return false;
    }
    for (Vertex w : g.c_neighbors(v)) {
      if (chosen[w]) return false;
    }
    return true;
  };
  auto shift = [&](Vertex v, int delta) {
    room[v] += delta;
    for (Vertex w : g.d_neighbors(v)) room[w] += delta;
  };
  auto dfs = [&](auto&& self, std::size_t i) -> bool {
    if (current.size() >= target) return true;
    if (current.size() + (comp.size() - i) < target) return false;
    const Vertex v = comp[i];
    if (can_add(v)) {
      shift(v, -1);
      chosen[v] = true;
      current.push_back(v);
      if (self(self, i + 1)) return true;
      current.pop_back();
      chosen[v] = false;
      shift(v, +1);
    }
    return self(self, i + 1);
  };
  if (dfs(dfs, 0)) return current;
  return std::nullopt;
}

class TwoLimitedBuilder {
 public:
  static constexpr std::size_t kExhaustiveLimit = 30;

  explicit TwoLimitedBuilder(const TypedMultigraph& g) : g_(g) {}

  TwoLimitedResult run() {
    for (Vertex s = 0; s < g_.size(); ++s) {
      while (g_.alive(s)) apply(reduce(g_.component(s)));
    }
    normalize(result_.vertices);
    return std::move(result_);
  }

 private:
  void apply(const Plan& plan) {
    for (Vertex v : plan.removed) g_.remove(v);
    ReductionStep step{plan.rule, plan.removed, plan.contributed, {}};
    for (const auto& e : plan.added) {
      g_.add_c_edge(e.u, e.v);
      step.added_c_edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    result_.vertices.insert(result_.vertices.end(), plan.contributed.begin(), plan.contributed.end());
    result_.trace.steps.push_back(std::move(step));
  }

  Plan whole(std::string rule, const VertexSet& comp, VertexSet chosen) const {
    normalize(chosen);
    return Plan{std::move(rule), comp, std::move(chosen), {}, {}};
  }

  Plan reduce(const VertexSet& comp) {
    if (comp.size() <= 3) return whole("base-case", comp, {comp.front()});
    if (comp.size() == 4) {
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
          if (!g_.c_edge(comp[i], comp[j])) return whole("base-case", comp, {comp[i], comp[j]});
        }
      }
      throw std::logic_error("all-c K4 component reached the base case");
    }
    const bool has_d = std::any_of(comp.begin(), comp.end(), [&](Vertex v) { return !g_.d_neighbors(v).empty(); });
    if (!has_d) return brooks(comp);

    if (auto conf = find_configuration_a(g_, comp)) {
      auto plan = encode(g_, "configuration-A", set_of({conf->a, conf->b, conf->c, conf->d, conf->u, conf->v}),
                         set_of({conf->b, conf->d}));
      if (usable(plan)) return *plan;
    }
    for (Vertex u : comp) {
      auto nb = g_.neighbors(u);
      if (nb.size() != 1) continue;
      auto plan = encode(g_, "degree-1", set_of({u, nb[0]}), {u});
      if (usable(plan)) return *plan;
    }
    for (Vertex u : comp) {
      auto nb = g_.neighbors(u);
      if (nb.size() != 2) continue;
      if (auto plan = degree_two(comp, u, nb[0], nb[1])) return *plan;
    }

    std::vector<Edge> by_triangles[3];
    for (Vertex u : comp) {
      for (Vertex v : g_.d_neighbors(u)) {
        if (u > v) continue;
        auto common = common_neighbors(u, v);
        if (common.size() <= 2) by_triangles[common.size()].push_back({u, v});
      }
    }
    for (const auto& [u, v] : by_triangles[2]) {
      VertexSet removed{u, v};
      for (Vertex w : common_neighbors(u, v)) removed = set_union(removed, set_union({w}, g_.neighbors(w)));
      auto plan = encode(g_, "d-edge-two-triangles", removed, set_of({u, v}));
      if (usable(plan)) return *plan;
    }
    for (const auto& [u, v] : by_triangles[1]) {
      if (auto plan = one_triangle(u, v)) return *plan;
    }
    for (const auto& [u, v] : by_triangles[0]) {
      if (auto plan = no_triangle(comp, u, v)) return *plan;
    }

    if (comp.size() <= kExhaustiveLimit) {
      if (auto found = search_two_limited(g_, comp, (comp.size() + 2) / 3)) {
        return whole("exhaustive-fallback", comp, *found);
      }
    }
    throw std::logic_error("no reduction applies to the component of vertex " + std::to_string(comp.front()));
  }

  VertexSet common_neighbors(Vertex u, Vertex v) const {
    VertexSet out;
    auto nu = g_.neighbors(u);
    auto nv = g_.neighbors(v);
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(out));
    return out;
  }

  Vertex third_neighbor(Vertex x, Vertex p, Vertex q) const {
    for (Vertex w : g_.neighbors(x)) {
      if (w != p && w != q) return w;
    }
    throw std::logic_error("vertex " + std::to_string(x) + " has no third neighbour");
  }

  Plan brooks(const VertexSet& comp) const {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g_.neighbors(comp[i])) {
        auto j = static_cast<std::size_t>(std::lower_bound(comp.begin(), comp.end(), w) - comp.begin());
        if (i < j) edges.push_back({i, j});
      }
    }
    auto colors = brooks_three_coloring(Graph(comp.size(), edges));
    std::size_t counts[3] = {0, 0, 0};
    for (auto c : colors) ++counts[c];
    const auto best = static_cast<std::uint8_t>(std::max_element(counts, counts + 3) - counts);
    VertexSet chosen;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (colors[i] == best) chosen.push_back(comp[i]);
    }
    return whole("brooks", comp, chosen);
  }

  std::optional<Plan> try_plans(std::initializer_list<std::optional<Plan>> candidates) const {
    for (const auto& p : candidates) {
      if (usable(p)) return p;
    }
    return std::nullopt;
  }

  std::optional<Plan> degree_two(const VertexSet& comp, Vertex u, Vertex v, Vertex w) const {
    auto plan = encode(g_, "degree-2", set_of({u, v, w}), {u});
    if (!plan) return std::nullopt;
    if (plan->new_k4s.empty()) return plan;
    // Edges demanded by v and w together close a c-K4: the component is
    // {u, v, w} plus the K4, and {ends of v's edge, w} works (or symmetrically).
    auto ev = plan->edge_owned_by(v);
    auto ew = plan->edge_owned_by(w);
    if (!ev || !ew) return std::nullopt;
    const std::string rule = "degree-2/seven-vertex";
    return try_plans({encode(g_, rule, comp, set_of({ev->u, ev->v, w})),
                      encode(g_, rule, comp, set_of({ew->u, ew->v, v}))});
  }

  std::optional<Plan> one_triangle(Vertex u, Vertex v) const {
    const Vertex w = common_neighbors(u, v).front();
    const Vertex a = third_neighbor(u, v, w);
    const Vertex b = third_neighbor(v, u, w);
    const Vertex c = third_neighbor(w, u, v);
    auto plan = encode(g_, "d-edge-one-triangle", set_of({a, b, c, u, v, w}), set_of({u, v}));
    if (!plan) return std::nullopt;
    if (plan->new_k4s.empty()) return plan;
    // a'a'' and b'b'' together close a c-K4: drop the K4 and {a, b, u, v, w},
    // keep {a', a'', b} (or symmetrically).
    auto ea = plan->edge_owned_by(a);
    auto eb = plan->edge_owned_by(b);
    if (!ea || !eb) return std::nullopt;
    const auto removed = set_union(plan->new_k4s.front(), set_of({a, b, u, v, w}));
    const std::string rule = "d-edge-one-triangle/c-k4";
    return try_plans({encode(g_, rule, removed, set_of({ea->u, ea->v, b})),
                      encode(g_, rule, removed, set_of({eb->u, eb->v, a}))});
  }

  std::optional<Plan> no_triangle(const VertexSet& comp, Vertex u, Vertex v) const {
    auto su = set_minus(g_.neighbors(u), {v});
    auto sv = set_minus(g_.neighbors(v), {u});
    const Vertex a = su[0], b = su[1], c = sv[0], d = sv[1];
    auto plan = encode(g_, "d-edge-no-triangle", set_of({a, b, c, d, u, v}), set_of({u, v}));
    if (!plan) return std::nullopt;
    if (plan->new_k4s.empty()) return plan;

    const auto& k4 = plan->new_k4s.front();
    std::vector<AddedEdge> inside;
    for (const auto& e : plan->added) {
      if (contains(k4, e.u) && contains(k4, e.v)) inside.push_back(e);
    }
    auto ends = [](const AddedEdge& e) { return set_of({e.u, e.v}); };

    if (inside.size() == 2) {
      // Owners x, y: keep {x', x'', y}, drop the K4 and {x, y, u, v}.
      const auto& ex = inside[0];
      const auto& ey = inside[1];
      const auto removed = set_union(k4, set_of({ex.owner, ey.owner, u, v}));
      const std::string rule = "d-edge-no-triangle/two-edge-k4";
      return try_plans({encode(g_, rule, removed, set_union(ends(ex), {ey.owner})),
                        encode(g_, rule, removed, set_union(ends(ey), {ex.owner}))});
    }
    if (inside.size() == 3) {
      // Two owners x, y share a centre; z is the centre on the other side.
      // Keep {x', x'', y, z}, drop the K4 and all six vertices.
      auto on_u_side = [&](const AddedEdge& e) { return e.owner == a || e.owner == b; };
      const auto u_count = std::count_if(inside.begin(), inside.end(), on_u_side);
      std::vector<AddedEdge> pair;
      for (const auto& e : inside) {
        if (on_u_side(e) == (u_count == 2)) pair.push_back(e);
      }
      const Vertex other_centre = u_count == 2 ? v : u;
      const auto removed = set_union(k4, set_of({a, b, c, d, u, v}));
      const std::string rule = "d-edge-no-triangle/three-edge-k4";
      return try_plans({encode(g_, rule, removed, set_union(ends(pair[0]), set_of({pair[1].owner, other_centre}))),
                        encode(g_, rule, removed, set_union(ends(pair[1]), set_of({pair[0].owner, other_centre})))});
    }
    if (inside.size() == 4) {
      return try_plans({encode(g_, "d-edge-no-triangle/four-edge-k4", comp, set_of({a, b, c, d}))});
    }
    return std::nullopt;
  }

  WorkGraph g_;
  TwoLimitedResult result_;
};

inline void check_subcubic_input(const TypedMultigraph& tm) {
  for (Vertex v = 0; v < tm.vertex_count(); ++v) {
    if (tm.degree(v) > 3) {
      throw precondition_error("vertex " + std::to_string(v) + " has degree " + std::to_string(tm.degree(v)) +
                               " (maximum allowed is 3)");
    }
  }
  WorkGraph g(tm);
  std::vector<bool> seen(tm.vertex_count(), false);
  for (Vertex s = 0; s < tm.vertex_count(); ++s) {
    if (seen[s]) continue;
    auto comp = g.component(s);
    for (Vertex v : comp) seen[v] = true;
    if (g.all_c_k4(comp)) {
      throw precondition_error("component {" + std::to_string(comp[0]) + ", " + std::to_string(comp[1]) + ", " +
                               std::to_string(comp[2]) + ", " + std::to_string(comp[3]) +
                               "} is a K4 made entirely of c-edges");
    }
  }
}

}  // namespace detail

// First occurrence in lexicographic order of (c, a, d, b, u, v).
inline std::optional<ConfigurationA> find_configuration_A(const TypedMultigraph& tm) {
  detail::WorkGraph g(tm);
  VertexSet all(tm.vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  return detail::find_configuration_a(g, all);
}

// A 2-limited set X with 3|X| >= n, together with the reduction steps used.
inline TwoLimitedResult construct_two_limited(const TypedMultigraph& tm) {
  detail::check_subcubic_input(tm);
  return detail::TwoLimitedBuilder(tm).run();
}

inline TwoLimitedResult construct_two_limited(const Graph& g) {
  return construct_two_limited(TypedMultigraph::all_d(g));
}

inline std::string format_trace(const ReductionTrace& trace) {
  std::ostringstream out;
  auto list = [&](const VertexSet& s) {
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '}';
  };
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    out << "step " << i << " rule " << step.rule << " removed ";
    list(step.removed);
    out << " contributed ";
    list(step.contributed);
    out << " added";
    if (step.added_c_edges.empty()) out << " -";
    for (const auto& e : step.added_c_edges) out << ' ' << e.u << '-' << e.v;
    out << '\n';
  }
  return out.str();
}

}  // namespace lpack
