#pragma once

// Exact L_k(G) and γ_{×l}(G) by depth-first branch and bound.
//
// Vertices are decided in descending-degree order (ties by index). The
// packing search tries "include" before "exclude" and keeps residual
// capacities k - |N[w] ∩ X|; the domination search tries "exclude" first and
// keeps residual demands l - |N[w] ∩ D|. Only strict improvements replace the
// incumbent, so the witness is the first optimal set met in that order.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lpack/errors.hpp"
#include "lpack/graph.hpp"

namespace lpack {

struct SolveResult {
  std::size_t optimum = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
};

struct SolverOptions {
  std::size_t vertex_limit = 64;
};

namespace detail {

inline std::vector<Vertex> branching_order(const Graph& g) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

inline void check_limit(const Graph& g, const SolverOptions& opts) {
  if (g.vertex_count() > opts.vertex_limit) {
    throw resource_error("graph has " + std::to_string(g.vertex_count()) +
                         " vertices, above the exact-solver limit of " + std::to_string(opts.vertex_limit) +
                         "; use the greedy, sample-repair or lll constructors instead");
  }
}

class PackingSearch {
 public:
  PackingSearch(const Graph& g, std::size_t k)
      : g_(g), order_(branching_order(g)), cap_(g.vertex_count(), k) {}

  SolveResult run() {
    dfs(0);
    std::sort(best_set_.begin(), best_set_.end());
    return {best_set_.size(), best_set_, nodes_};
  }

 private:
  bool selectable(Vertex v) const {
    if (cap_[v] == 0) return false;
    for (Vertex w : g_.neighbors(v)) {
      if (cap_[w] == 0) return false;
    }
    return true;
  }

  // Upper bound on how many of order_[from..] can still join X: each chosen x
  // consumes deg(x)+1 units of the total residual capacity.
  std::size_t future_bound(std::size_t from) {
    weights_.clear();
    for (std::size_t i = from; i < order_.size(); ++i) {
      if (selectable(order_[i])) weights_.push_back(g_.degree(order_[i]) + 1);
    }
    std::size_t capacity = 0;
    for (std::size_t c : cap_) capacity += c;
    std::sort(weights_.begin(), weights_.end());
    std::size_t count = 0;
    for (std::size_t w : weights_) {
      if (w > capacity) break;
      capacity -= w;
      ++count;
    }
    return count;
  }

  void dfs(std::size_t i) {
    ++nodes_;
    if (i == order_.size()) {
      if (current_.size() > best_set_.size()) best_set_ = current_;
      return;
    }
    if (current_.size() + future_bound(i) <= best_set_.size()) return;

    const Vertex v = order_[i];
    if (selectable(v)) {
      apply(v, -1);
      current_.push_back(v);
      dfs(i + 1);
      current_.pop_back();
      apply(v, +1);
    }
    dfs(i + 1);
  }

  void apply(Vertex v, int delta) {
    cap_[v] = static_cast<std::size_t>(static_cast<long long>(cap_[v]) + delta);
    for (Vertex w : g_.neighbors(v)) cap_[w] = static_cast<std::size_t>(static_cast<long long>(cap_[w]) + delta);
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> cap_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_set_;
  std::vector<std::size_t> weights_;
  std::uint64_t nodes_ = 0;
};

class DominationSearch {
 public:
  DominationSearch(const Graph& g, std::size_t l)
      : g_(g), order_(branching_order(g)), need_(g.vertex_count(), l), avail_(g.vertex_count()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) avail_[v] = g.degree(v) + 1;
    best_set_.resize(g.vertex_count());
    std::iota(best_set_.begin(), best_set_.end(), Vertex{0});
  }

  SolveResult run() {
    dfs(0);
    std::sort(best_set_.begin(), best_set_.end());
    return {best_set_.size(), best_set_, nodes_};
  }

 private:
  // Lower bound on additional members: total residual demand must be covered,
  // each undecided x covering at most the demanding vertices of N[x].
  std::size_t future_bound(std::size_t from) {
    std::size_t demand = 0;
    std::size_t max_need = 0;
    for (std::size_t d : need_) {
      demand += d;
      max_need = std::max(max_need, d);
    }
    if (demand == 0) return 0;
    weights_.clear();
    for (std::size_t i = from; i < order_.size(); ++i) {
      const Vertex x = order_[i];
      std::size_t cover = need_[x] > 0 ? 1 : 0;
      for (Vertex w : g_.neighbors(x)) cover += need_[w] > 0 ? 1 : 0;
      if (cover) weights_.push_back(cover);
    }
    std::sort(weights_.begin(), weights_.end(), std::greater<>());
    std::size_t count = 0;
    std::size_t covered = 0;
    for (std::size_t w : weights_) {
      if (covered >= demand) break;
      covered += w;
      ++count;
    }
    return std::max(count, max_need);
  }

  bool exclusion_allowed(Vertex v) const {
    if (avail_[v] <= need_[v]) return false;
    for (Vertex w : g_.neighbors(v)) {
      if (avail_[w] <= need_[w]) return false;
    }
    return true;
  }

  void dfs(std::size_t i) {
    ++nodes_;
    if (i == order_.size()) {
      if (current_.size() < best_set_.size()) best_set_ = current_;
      return;
    }
    if (current_.size() + future_bound(i) >= best_set_.size()) return;

    const Vertex v = order_[i];
    if (exclusion_allowed(v)) {
      shift_avail(v, -1);
      dfs(i + 1);
      shift_avail(v, +1);
    }
    std::vector<std::size_t> saved;
    saved.reserve(g_.degree(v) + 1);
    saved.push_back(need_[v]);
    for (Vertex w : g_.neighbors(v)) saved.push_back(need_[w]);
    shift_avail(v, -1);
    if (need_[v]) --need_[v];
    for (Vertex w : g_.neighbors(v)) {
      if (need_[w]) --need_[w];
    }
    current_.push_back(v);
    dfs(i + 1);
    current_.pop_back();
    need_[v] = saved[0];
    std::size_t j = 1;
    for (Vertex w : g_.neighbors(v)) need_[w] = saved[j++];
    shift_avail(v, +1);
  }

  void shift_avail(Vertex v, int delta) {
    avail_[v] = static_cast<std::size_t>(static_cast<long long>(avail_[v]) + delta);
    for (Vertex w : g_.neighbors(v)) {
      avail_[w] = static_cast<std::size_t>(static_cast<long long>(avail_[w]) + delta);
    }
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> need_;
  std::vector<std::size_t> avail_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_set_;
  std::vector<std::size_t> weights_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

inline SolveResult max_k_limited(const Graph& g, std::size_t k, const SolverOptions& opts = {}) {
  if (k == 0) throw input_error("k must be positive");
  detail::check_limit(g, opts);
  return detail::PackingSearch(g, k).run();
}

inline SolveResult min_tuple_dominating(const Graph& g, std::size_t l, const SolverOptions& opts = {}) {
  if (l == 0) throw input_error("l must be positive");
  const auto stats = degree_stats(g);
  if (g.vertex_count() > 0 && l > stats.min_degree + 1) {
    throw infeasible_error("no " + std::to_string(l) + "-tuple dominating set exists: minimum degree is " +
                           std::to_string(stats.min_degree));
  }
  detail::check_limit(g, opts);
  return detail::DominationSearch(g, l).run();
}

}  // namespace lpack
