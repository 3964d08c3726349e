#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lpack/bounds.hpp"
#include "lpack/cubic.hpp"
#include "lpack/exact.hpp"
#include "lpack/generators.hpp"
#include "lpack/greedy.hpp"
#include "lpack/random_packing.hpp"
#include "lpack/verify.hpp"

namespace lpack {

struct BenchRow {
  std::string family;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string method;
  std::size_t size = 0;
  bool valid = false;
  std::size_t exact = 0;
  double lower = 0.0;  // best closed-form lower bound
  Rational upper;      // k n / (δ + 1)
  double seconds = 0.0;
};

struct BenchInstance {
  std::string family;
  Graph graph;
  std::vector<std::size_t> ks;
};

inline std::vector<BenchInstance> paper_suite_instances() {
  std::vector<BenchInstance> out;
  for (std::size_t n : {5, 6, 9, 12}) out.push_back({"cycle", gen_cycle(n), {1, 2}});
  for (std::size_t m : {1, 2, 3}) out.push_back({"h6x" + std::to_string(m), disjoint_copies(gen_h6(), m), {2}});
  out.push_back({"petersen", gen_petersen(), {1, 2, 3}});
  out.push_back({"projective-q2-k1", gen_projective(2, 1), {1}});
  out.push_back({"projective-q3-k1", gen_projective(3, 1), {1}});
  out.push_back({"projective-q2-k2", gen_projective(2, 2), {2}});
  for (std::size_t n : {20, 30}) {
    out.push_back({"random-cubic-" + std::to_string(n), gen_random_regular(n, 3, 0), {1, 2, 3}});
  }
  return out;
}

// Every applicable constructor on every instance; randomized methods use seed 0.
inline std::vector<BenchRow> run_paper_suite() {
  std::vector<BenchRow> rows;
  for (const auto& inst : paper_suite_instances()) {
    const auto& g = inst.graph;
    const auto stats = degree_stats(g);
    for (std::size_t k : inst.ks) {
      const auto sheet = bound_sheet(g, k);
      const auto exact = max_k_limited(g, k);
      auto add = [&](const std::string& method, auto&& build) {
        const auto start = std::chrono::steady_clock::now();
        VertexSet x = build();
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        rows.push_back({inst.family, g.vertex_count(), k, method, x.size(), verify_k_limited(g, x, k).valid,
                        exact.optimum, sheet.best_lower(), sheet.upper, took.count()});
      };
      add("exact", [&] { return max_k_limited(g, k).witness; });
      add("greedy", [&] { return greedy_k_limited(g, k); });
      add("sample-repair", [&] { return sample_and_repair(g, k, std::nullopt, 0).packing.vertices; });
      if (stats.max_degree >= 2) add("lll", [&] { return lll_resample(g, k, std::nullopt, 0).packing.vertices; });
      if (k == 2 && stats.max_degree <= 3) add("cubic2", [&] { return construct_two_limited(g).vertices; });
    }
  }
  return rows;
}

inline std::string format_bench(const std::vector<BenchRow>& rows, bool timing) {
  std::ostringstream out;
  out.precision(6);
  out << "family\tn\tk\tmethod\tsize\tvalid\texact\tlower\tupper" << (timing ? "\tseconds" : "") << '\n';
  for (const auto& r : rows) {
    out << r.family << '\t' << r.n << '\t' << r.k << '\t' << r.method << '\t' << r.size << '\t'
        << (r.valid ? "true" : "false") << '\t' << r.exact << '\t' << r.lower << '\t' << r.upper.num << '/'
        << r.upper.den;
    if (timing) out << '\t' << r.seconds;
    out << '\n';
  }
  return out.str();
}

}  // namespace lpack
