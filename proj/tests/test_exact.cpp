#include <catch_amalgamated.hpp>

#include "lpack/exact.hpp"
#include "lpack/generators.hpp"
#include "lpack/verify.hpp"
#include "support/catalog.hpp"
#include "support/oracle.hpp"

using namespace lpack;

TEST_CASE("max_k_limited examples", "[exact]") {
  CHECK(max_k_limited(gen_cycle(6), 1).optimum == 2);
  CHECK(max_k_limited(gen_cycle(6), 2).optimum == 4);
  CHECK(max_k_limited(gen_h6(), 2).optimum == 2);
  CHECK(max_k_limited(gen_petersen(), 1).optimum == 1);
  CHECK(max_k_limited(gen_petersen(), 4).optimum == 10);
  CHECK(max_k_limited(Graph(4, {{0, 1}, {0, 2}, {0, 3}}), 4).optimum == 4);
  CHECK(max_k_limited(Graph(), 1).optimum == 0);
  CHECK_THROWS_AS(max_k_limited(gen_cycle(5), 0), input_error);
}

TEST_CASE("min_tuple_dominating examples", "[exact]") {
  CHECK(min_tuple_dominating(gen_cycle(4), 1).optimum == 2);
  CHECK(min_tuple_dominating(gen_complete(4), 4).optimum == 4);
  const auto p = gen_petersen();
  CHECK(min_tuple_dominating(p, 2).optimum == 10 - max_k_limited(p, 2).optimum);
  CHECK(min_tuple_dominating(p, 2).optimum == testing::enumerate_domination_oracle(p, 2));
  CHECK_THROWS_AS(min_tuple_dominating(p, 5), infeasible_error);
  CHECK_THROWS_AS(min_tuple_dominating(p, 0), input_error);
}

TEST_CASE("size limit", "[exact]") {
  auto big = gen_cycle(65);
  try {
    max_k_limited(big, 1);
    FAIL("expected resource_error");
  } catch (const resource_error& e) {
    CHECK(std::string(e.what()).find("sample-repair") != std::string::npos);
  }
  CHECK_THROWS_AS(min_tuple_dominating(big, 1), resource_error);
  CHECK(max_k_limited(big, 1, SolverOptions{100}).optimum == 21);
}

TEST_CASE("enumeration oracle examples", "[exact]") {
  CHECK(testing::enumerate_oracle(gen_cycle(5), 1) == 1);
  CHECK(testing::enumerate_oracle(Graph(1), 1) == 1);
  CHECK(testing::enumerate_oracle(gen_cycle(4), 2) == 2);
  CHECK(testing::enumerate_domination_oracle(gen_cycle(4), 1) == 2);
  CHECK_THROWS_AS(testing::enumerate_oracle(gen_cycle(21), 1), resource_error);
}

TEST_CASE("solver agrees with the oracle on the catalog", "[exact]") {
  auto catalog = testing::connected_subcubic_catalog(8);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& g : catalog[n]) {
      const auto delta = degree_stats(g).min_degree;
      for (std::size_t k = 1; k <= 4; ++k) {
        auto r = max_k_limited(g, k);
        REQUIRE(r.optimum == testing::enumerate_oracle(g, k));
        REQUIRE(r.witness.size() == r.optimum);
        REQUIRE(verify_k_limited(g, r.witness, k).valid);
        if (k <= delta + 1) {
          auto d = min_tuple_dominating(g, k);
          REQUIRE(d.optimum == testing::enumerate_domination_oracle(g, k));
          REQUIRE(verify_tuple_dominating(g, d.witness, k).valid);
        }
      }
    }
  }
}

TEST_CASE("solver agrees with the oracle on random graphs up to 14 vertices", "[exact]") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 10 + 2 * (seed % 3);
    const std::size_t r = 2 + seed % 4;
    auto g = gen_random_regular(n, r, seed);
    for (std::size_t k = 1; k <= 4; ++k) {
      REQUIRE(max_k_limited(g, k).optimum == testing::enumerate_oracle(g, k));
      if (k <= r + 1) REQUIRE(min_tuple_dominating(g, k).optimum == testing::enumerate_domination_oracle(g, k));
    }
  }
}

TEST_CASE("duality identity, additivity and monotonicity", "[exact]") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t r = 2 + seed % 3;
    auto g = gen_random_regular(14, r, seed);
    std::size_t previous = 0;
    for (std::size_t k = 1; k <= r + 1; ++k) {
      const auto pk = max_k_limited(g, k).optimum;
      // k = r + 1 pairs with 0-tuple domination, whose optimum is the empty set.
      const std::size_t dom = k <= r ? min_tuple_dominating(g, r + 1 - k).optimum : 0;
      CHECK(pk + dom == 14);
      CHECK(pk >= previous);
      previous = pk;
    }
    CHECK(previous == 14);
  }
  const auto a = gen_petersen(), b = gen_cycle(7);
  for (std::size_t k = 1; k <= 3; ++k) {
    CHECK(max_k_limited(disjoint_union(a, b), k).optimum == max_k_limited(a, k).optimum + max_k_limited(b, k).optimum);
  }
}

TEST_CASE("witnesses are deterministic", "[exact]") {
  auto g = gen_random_regular(20, 3, 4);
  auto first = max_k_limited(g, 2);
  auto second = max_k_limited(g, 2);
  CHECK(first.witness == second.witness);
  CHECK(first.nodes_explored == second.nodes_explored);
}
