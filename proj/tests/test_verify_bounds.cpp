#include <catch_amalgamated.hpp>

#include <cmath>

#include "lpack/bounds.hpp"
#include "lpack/exact.hpp"
#include "lpack/generators.hpp"
#include "lpack/rng.hpp"
#include "lpack/verify.hpp"
#include "support/catalog.hpp"
#include "support/oracle.hpp"

using namespace lpack;
using Catch::Approx;

namespace {

Graph k4() { return gen_complete(4); }

VertexSet random_subset(std::size_t n, SplitMix64& rng) {
  VertexSet x;
  for (Vertex v = 0; v < n; ++v) {
    if (rng.bernoulli(0.4)) x.push_back(v);
  }
  return x;
}

}  // namespace

TEST_CASE("verify_k_limited examples", "[verify-bounds]") {
  CHECK(verify_k_limited(gen_cycle(6), VertexSet{0, 1, 3, 4}, 2).valid);
  CHECK(verify_k_limited(gen_petersen(), VertexSet{}, 1).valid);

  auto r = verify_k_limited(k4(), VertexSet{0, 1, 2}, 2);
  CHECK_FALSE(r.valid);
  REQUIRE(r.violations.size() == 4);
  for (Vertex v = 0; v < 4; ++v) {
    CHECK(r.violations[v].u == v);
    CHECK(r.violations[v].count == 3);
    CHECK(r.violations[v].limit == 2);
  }
  CHECK(format_report(r).starts_with("valid: false\nviolation: vertex 0 count 3 limit 2\n"));
  CHECK_THROWS_AS(verify_k_limited(k4(), VertexSet{4}, 2), input_error);
}

TEST_CASE("verify_typed_two_limited examples", "[verify-bounds]") {
  TypedMultigraph c_path(2, {{0, 1, EdgeType::c}});
  auto r = verify_typed_two_limited(c_path, VertexSet{0, 1});
  CHECK_FALSE(r.valid);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].kind == Violation::Kind::cedge);
  CHECK(format_report(r) == "valid: false\nviolation: cedge 0 1\n");

  TypedMultigraph d_path(2, {{0, 1, EdgeType::d}});
  CHECK(verify_typed_two_limited(d_path, VertexSet{0, 1}).valid);

  const auto all_d = TypedMultigraph::all_d(k4());
  CHECK(verify_typed_two_limited(all_d, VertexSet{0, 1}).valid);
  CHECK_FALSE(verify_typed_two_limited(all_d, VertexSet{0, 1, 2}).valid);

  // c-edges do not count toward N_d: a c-star centre with three leaves.
  TypedMultigraph c_star(4, {{0, 1, EdgeType::c}, {0, 2, EdgeType::c}, {0, 3, EdgeType::c}});
  CHECK(verify_typed_two_limited(c_star, VertexSet{1, 2, 3}).valid);
  CHECK_THROWS_AS(verify_typed_two_limited(c_star, VertexSet{9}), input_error);
}

TEST_CASE("verify_tuple_dominating examples", "[verify-bounds]") {
  CHECK(verify_tuple_dominating(gen_cycle(4), VertexSet{0, 2}, 1).valid);
  const auto p = gen_petersen();
  VertexSet all(10);
  for (Vertex v = 0; v < 10; ++v) all[v] = v;
  for (std::size_t l = 1; l <= 4; ++l) CHECK(verify_tuple_dominating(p, all, l).valid);
  auto r = verify_tuple_dominating(Graph(1), VertexSet{}, 1);
  CHECK_FALSE(r.valid);
  CHECK(r.violations[0].count < r.violations[0].limit);
}

TEST_CASE("dual complement", "[verify-bounds]") {
  auto d = dual_complement(gen_cycle(4), VertexSet{0, 1}, 2);
  CHECK(d == VertexSet{2, 3});
  CHECK(verify_tuple_dominating(gen_cycle(4), d, 1).valid);

  for (std::size_t k = 1; k <= 4; ++k) {
    auto all = dual_complement(k4(), VertexSet{}, k);
    CHECK(all == VertexSet{0, 1, 2, 3});
    CHECK(verify_tuple_dominating(k4(), all, 4 - k).valid);
  }

  const auto p = gen_petersen();
  auto best = max_k_limited(p, 2);
  CHECK(verify_tuple_dominating(p, dual_complement(p, best.witness, 2), 2).valid);

  CHECK_THROWS_AS(dual_complement(Graph(4, {{0, 1}, {0, 2}, {0, 3}}), VertexSet{}, 1), precondition_error);
  CHECK_THROWS_AS(dual_complement(p, VertexSet{}, 5), precondition_error);
}

TEST_CASE("duality between packings and tuple domination on random subsets", "[verify-bounds]") {
  SplitMix64 rng(2024);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t r = 2 + seed % 3;
    auto g = gen_random_regular(12, r, seed);
    for (int t = 0; t < 20; ++t) {
      auto x = random_subset(12, rng);
      for (std::size_t k = 1; k <= r + 1; ++k) {
        const bool packing = verify_k_limited(g, x, k).valid;
        const bool dominating = verify_tuple_dominating(g, dual_complement(g, x, k), r + 1 - k).valid;
        CHECK(packing == dominating);
        if (packing) CHECK(verify_k_limited(g, x, k + 1).valid);
      }
    }
  }
}

TEST_CASE("bound sheet values", "[verify-bounds]") {
  const std::size_t n = 60;
  auto s2 = bound_sheet(n, 3, 3, 2);
  REQUIRE(s2.random_lower);
  CHECK(*s2.random_lower == Approx(n / (3.0 * std::sqrt(3.0))).epsilon(1e-12));
  CHECK(*s2.random_lower / n == Approx(0.19245).margin(1e-5));
  CHECK(*s2.binomial_lower == Approx(*s2.random_lower).epsilon(1e-12));
  CHECK(*s2.power_lower == Approx(2.0 * n / (std::exp(1.0) * std::pow(3.0, 1.5))).epsilon(1e-12));
  CHECK(*s2.power_lower / n == Approx(0.1416).margin(1e-4));
  CHECK(s2.upper == Rational{30, 1});
  CHECK(s2.subcubic_two_lower == Rational{20, 1});
  CHECK(s2.prior_cubic_two_lower == Rational{15, 1});
  CHECK(s2.cubic_double_domination_upper == Rational{40, 1});
  CHECK_FALSE(s2.harant_henning_informative);
  CHECK_FALSE(s2.cockayne_thomason_informative);
  CHECK_FALSE(s2.exact.has_value());

  auto s1 = bound_sheet(n, 3, 3, 1);
  CHECK(s1.greedy_lower == Rational{6, 1});
  auto s3 = bound_sheet(14, 3, 3, 3);
  CHECK(s3.cubic_three_lower == Rational{9, 1});

  auto big = bound_sheet(n, 3, 1, 4);
  CHECK(big.exact == n);
  CHECK(big.best_lower() == Approx(60.0));

  CHECK_THROWS_AS(bound_sheet(5, 3, 3, 0), input_error);
  CHECK_THROWS_AS(bound_sheet(5, 2, 3, 1), input_error);
  CHECK(Rational::make(6, 4) == Rational{3, 2});
}

TEST_CASE("binomials are exact", "[verify-bounds]") {
  CHECK(*detail::binomial(10, 3) == 120);
  CHECK(*detail::binomial(60, 30) == static_cast<unsigned __int128>(118264581564861424ULL));
  CHECK(*detail::binomial(3, 5) == 0);
  CHECK_FALSE(detail::binomial(400, 200).has_value());
  CHECK(detail::log_binomial(400, 200) == Approx(std::lgamma(401.0) - 2 * std::lgamma(201.0)).epsilon(1e-9));
}

TEST_CASE("bound ordering on regular parameters", "[verify-bounds]") {
  for (std::size_t r = 1; r <= 40; ++r) {
    for (std::size_t k = 1; k <= r; ++k) {
      auto s = bound_sheet(1000, r, r, k);
      // The simplified power form overtakes the binomial form when k = 1 and
      // r <= 2; it is still below n / (r^2 + 1) there, so remains a valid bound.
      if (k >= 2 || r >= 3) CHECK(*s.random_lower + 1e-9 >= *s.power_lower);
      if (k == 1) CHECK(*s.power_lower <= 1000.0 / (r * r + 1) + 1e-9);
      CHECK(s.upper.value() + 1e-9 >= *s.random_lower);
      CHECK(*s.binomial_lower == Approx(*s.random_lower).epsilon(1e-9));
      CHECK(s.upper.value() + 1e-9 >= s.best_lower());
    }
  }
}

TEST_CASE("bounds sandwich the exact optimum", "[verify-bounds]") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto g = gen_random_regular(12, 2 + seed % 4, seed);
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto opt = static_cast<double>(testing::enumerate_oracle(g, k));
      auto s = bound_sheet(g, k);
      CHECK(s.best_lower() <= opt + 1e-9);
      CHECK(opt <= s.upper.value() + 1e-9);
    }
  }
}

TEST_CASE("9n/14 holds on connected cubic graphs except order 8", "[verify-bounds]") {
  auto catalog = testing::connected_subcubic_catalog(10);
  std::size_t order8_failures = 0;
  for (std::size_t n = 4; n <= 10; ++n) {
    for (const auto& g : catalog[n]) {
      const auto st = degree_stats(g);
      if (st.min_degree != 3 || st.max_degree != 3) continue;
      const auto l3 = testing::enumerate_oracle(g, 3);
      if (n != 8) CHECK(14 * l3 >= 9 * n);
      if (14 * l3 < 9 * n) ++order8_failures;
      auto s = bound_sheet(g, 3);
      CHECK(s.cubic_three_lower.has_value() == (n != 8));
      CHECK(s.best_lower() <= static_cast<double>(l3) + 1e-9);
    }
  }
  CHECK(order8_failures > 0);
  CHECK(bound_sheet(disjoint_copies(gen_complete(4), 2), 3).cubic_three_lower.has_value());
}
