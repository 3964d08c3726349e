#pragma once

// Randomized k-limited packings.
//
// sample_and_repair: independent sampling at rate p, then for each vertex v
// in index order drop the largest-index members of N[v] ∩ X until at most k
// remain. Dropping only lowers counts, so one pass leaves a valid set.
//
// lll_resample: resampling in the style of Moser and Tardos. The bad event
// B_v is |N[v] ∩ X| >= k + 1 and its variables are the indicators of N[v].
// Each round resamples N[v] for the lowest-index v whose event holds.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lpack/bounds.hpp"
#include "lpack/errors.hpp"
#include "lpack/graph.hpp"
#include "lpack/rng.hpp"
#include "lpack/verify.hpp"

namespace lpack {

struct LLLParameters {
  double epsilon1 = 0.5;
  double epsilon2 = 0.0;
  double p = 0.0;
  bool clamped = false;
};

struct RandomRunReport {
  Packing packing;
  std::uint64_t rounds = 0;
  std::size_t repairs = 0;
  std::uint64_t seed = 0;
  double p = 0.0;
  bool clamped = false;
  bool success = true;
  // lll only: |X| >= (1 - epsilon2) n p.
  bool size_event = false;
};

// epsilon1 = sqrt(5 / ln ln Δ), replaced by `clamp` when that is not below 1
// or ln ln Δ <= 0; epsilon2 = 3 / sqrt(k Δ); p = (1 - epsilon1)(k+1)/(Δ+1)
// capped at 1. Either substitution sets `clamped`.
inline LLLParameters lll_parameters(std::size_t max_degree, std::size_t k, double clamp = 0.5) {
  if (max_degree < 2) throw input_error("maximum degree must be at least 2, got " + std::to_string(max_degree));
  if (k < 1) throw input_error("k must be positive");
  if (!(clamp > 0.0 && clamp < 1.0)) throw input_error("clamp must lie in (0, 1)");
  const double delta = static_cast<double>(max_degree);
  const double kd = static_cast<double>(k);
  LLLParameters out;
  const double lnln = std::log(std::log(delta));
  const double raw = lnln > 0.0 ? std::sqrt(5.0 / lnln) : INFINITY;
  if (raw >= 1.0) {
    out.epsilon1 = clamp;
    out.clamped = true;
  } else {
    out.epsilon1 = raw;
  }
  out.epsilon2 = 3.0 / std::sqrt(kd * delta);
  out.p = (1.0 - out.epsilon1) * (kd + 1.0) / (delta + 1.0);
  if (out.p > 1.0) {
    out.p = 1.0;
    out.clamped = true;
  }
  return out;
}

namespace detail {

// Removes the largest-index members of each overfull N[v], v in index order.
// Returns the number of vertices removed.
inline std::size_t repair_excess(const Graph& g, std::size_t k, std::vector<bool>& in) {
  std::size_t removed = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto members = closed_neighborhood(g, v);
    std::erase_if(members, [&](Vertex w) { return !in[w]; });
    for (std::size_t i = members.size(); i > k; --i) {
      in[members[i - 1]] = false;
      ++removed;
    }
  }
  return removed;
}

}  // namespace detail

// Rate used by sample_and_repair in auto mode: (C(Δ,k)(Δ+1))^{-1/k}, or 1
// when k > Δ.
inline double auto_sample_rate(std::size_t max_degree, std::size_t k) {
  if (k > max_degree) return 1.0;
  return detail::random_rate(max_degree, k);
}

inline RandomRunReport sample_and_repair(const Graph& g, std::size_t k, std::optional<double> p, std::uint64_t seed) {
  if (k == 0) throw input_error("k must be positive");
  const double rate = p ? *p : auto_sample_rate(degree_stats(g).max_degree, k);
  if (!(rate >= 0.0 && rate <= 1.0)) throw input_error("p must lie in [0, 1], got " + std::to_string(rate));

  const std::size_t n = g.vertex_count();
  SplitMix64 rng(seed);
  std::vector<bool> in(n);
  for (Vertex v = 0; v < n; ++v) in[v] = rng.bernoulli(rate);

  RandomRunReport report;
  report.seed = seed;
  report.p = rate;
  report.repairs = detail::repair_excess(g, k, in);
  report.packing.k = k;
  for (Vertex v = 0; v < n; ++v) {
    if (in[v]) report.packing.vertices.push_back(v);
  }
  return report;
}

// Called after each round with the resampled centre and the membership
// vectors before and after the round.
using ResampleObserver = std::function<void(Vertex, const std::vector<bool>&, const std::vector<bool>&)>;

inline RandomRunReport lll_resample(const Graph& g, std::size_t k, std::optional<LLLParameters> params,
                                    std::uint64_t seed, std::uint64_t max_rounds = 100000,
                                    const ResampleObserver& observer = {}) {
  if (k == 0) throw input_error("k must be positive");
  if (max_rounds < 1) throw input_error("max_rounds must be at least 1");
  const std::size_t max_degree = degree_stats(g).max_degree;
  const LLLParameters prm = params ? *params : lll_parameters(std::max<std::size_t>(max_degree, 2), k);
  if (!(prm.p >= 0.0 && prm.p <= 1.0)) throw input_error("p must lie in [0, 1], got " + std::to_string(prm.p));

  const std::size_t n = g.vertex_count();
  SplitMix64 rng(seed);
  std::vector<bool> in(n);
  for (Vertex v = 0; v < n; ++v) in[v] = rng.bernoulli(prm.p);

  std::vector<std::size_t> count(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!in[v]) continue;
    ++count[v];
    for (Vertex w : g.neighbors(v)) ++count[w];
  }
  std::set<Vertex> bad;
  for (Vertex v = 0; v < n; ++v) {
    if (count[v] > k) bad.insert(v);
  }
  auto shift = [&](Vertex x, bool add) {
    auto touch = [&](Vertex w) {
      count[w] = add ? count[w] + 1 : count[w] - 1;
      if (count[w] > k) {
        bad.insert(w);
      } else {
        bad.erase(w);
      }
    };
    touch(x);
    for (Vertex w : g.neighbors(x)) touch(w);
  };

  RandomRunReport report;
  report.seed = seed;
  report.p = prm.p;
  report.clamped = prm.clamped;
  std::vector<bool> before;
  while (!bad.empty() && report.rounds < max_rounds) {
    const Vertex v = *bad.begin();
    if (observer) before = in;
    auto resample = [&](Vertex x) {
      const bool next = rng.bernoulli(prm.p);
      if (next != in[x]) {
        in[x] = next;
        shift(x, next);
      }
    };
    resample(v);
    for (Vertex w : g.neighbors(v)) resample(w);
    ++report.rounds;
    if (observer) observer(v, before, in);
  }

  report.success = bad.empty();
  if (!report.success) {
    // Out of rounds: fall back to largest-index excess removal so the
    // returned set still verifies.
    report.repairs = detail::repair_excess(g, k, in);
  }
  report.packing.k = k;
  for (Vertex v = 0; v < n; ++v) {
    if (in[v]) report.packing.vertices.push_back(v);
  }
  const double target = (1.0 - prm.epsilon2) * static_cast<double>(n) * prm.p;
  report.size_event = static_cast<double>(report.packing.vertices.size()) >= target;
  return report;
}

}  // namespace lpack
