#include <catch_amalgamated.hpp>

#include "lpack/generators.hpp"
#include "lpack/graph.hpp"
#include "lpack/io.hpp"
#include "lpack/rng.hpp"

using namespace lpack;

namespace {

Graph star3() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

}  // namespace

TEST_CASE("closed neighbourhoods", "[graph]") {
  CHECK(closed_neighborhood(gen_cycle(4), 0) == VertexSet{0, 1, 3});
  CHECK(closed_neighborhood(Graph(1), 0) == VertexSet{0});
  const auto p = gen_petersen();
  for (Vertex v = 0; v < 10; ++v) CHECK(closed_neighborhood(p, v).size() == 4);
  CHECK_THROWS_AS(closed_neighborhood(p, 10), input_error);
}

TEST_CASE("degree statistics", "[graph]") {
  auto check = [](const Graph& g, std::size_t mx, std::size_t mn, std::size_t n, std::size_t m) {
    auto s = degree_stats(g);
    CHECK(s.max_degree == mx);
    CHECK(s.min_degree == mn);
    CHECK(s.vertex_count == n);
    CHECK(s.edge_count == m);
  };
  check(gen_cycle(6), 2, 2, 6, 6);
  check(gen_petersen(), 3, 3, 10, 15);
  check(star3(), 3, 1, 4, 3);
  check(Graph(), 0, 0, 0, 0);
  CHECK(regular_degree(gen_petersen()) == 3);
  CHECK_FALSE(regular_degree(star3()).has_value());
}

TEST_CASE("disjoint union", "[graph]") {
  auto two = disjoint_union(gen_cycle(3), gen_cycle(3));
  CHECK(two.vertex_count() == 6);
  CHECK(two.edge_count() == 6);
  CHECK(connected_components(two).size() == 2);
  CHECK(two.has_edge(3, 5));
  CHECK_FALSE(two.has_edge(0, 3));

  auto hh = disjoint_union(gen_h6(), gen_h6());
  CHECK(hh.vertex_count() == 12);
  CHECK(hh.edge_count() == 18);

  CHECK(disjoint_union(Graph(1), Graph()) == Graph(1));

  const auto a = gen_cycle(4), b = gen_petersen(), c = star3();
  auto left = disjoint_union(disjoint_union(a, b), c);
  auto right = disjoint_union(a, disjoint_union(b, c));
  CHECK(left == right);
  CHECK(left.edge_count() == a.edge_count() + b.edge_count() + c.edge_count());
  CHECK(disjoint_copies(gen_h6(), 3).vertex_count() == 18);
}

TEST_CASE("pairwise distance", "[graph]") {
  CHECK(pairwise_distance(gen_cycle(6), 0, 3) == 3);
  const auto p = gen_petersen();
  for (Vertex u = 0; u < 10; ++u) {
    for (Vertex v = 0; v < 10; ++v) CHECK(*pairwise_distance(p, u, v) <= 2);
  }
  auto two = disjoint_union(gen_cycle(3), gen_cycle(3));
  CHECK_FALSE(pairwise_distance(two, 0, 4).has_value());
  CHECK_THROWS_AS(pairwise_distance(two, 0, 6), input_error);

  auto g = gen_random_regular(30, 3, 11);
  SplitMix64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const Vertex x = rng.below(30), y = rng.below(30), z = rng.below(30);
    const auto xy = pairwise_distance(g, x, y), yx = pairwise_distance(g, y, x);
    REQUIRE(xy == yx);
    const auto xz = pairwise_distance(g, x, z), zy = pairwise_distance(g, z, y);
    if (xy && xz && zy) CHECK(*xy <= *xz + *zy);
  }
}

TEST_CASE("graph construction rejects bad edges and merges duplicates", "[graph]") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), input_error);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), input_error);
  Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(0) == 1);
}

TEST_CASE("typed multigraph keeps one edge of each type per pair", "[graph]") {
  TypedMultigraph g(3, {{0, 1, EdgeType::c}, {1, 0, EdgeType::c}, {0, 1, EdgeType::d}, {1, 2, EdgeType::d},
                        {2, 1, EdgeType::d}});
  CHECK(g.edge_count() == 3);
  CHECK(g.has_c_edge(0, 1));
  CHECK(g.has_d_edge(0, 1));
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(1) == 3);
  CHECK(g.closed_d_neighborhood(0) == VertexSet{0, 1});
  CHECK(g.closed_d_neighborhood(1) == VertexSet{0, 1, 2});
  CHECK_FALSE(g.as_plain_graph().has_value());
  CHECK(TypedMultigraph::all_d(gen_cycle(4)).as_plain_graph() == gen_cycle(4));
  CHECK_THROWS_AS(TypedMultigraph(2, {{1, 1, EdgeType::c}}), input_error);
}

TEST_CASE("parse and serialize", "[graph]") {
  auto c3 = parse_graph("3 3\n0 1\n1 2\n2 0\n");
  REQUIRE(std::holds_alternative<Graph>(c3));
  CHECK(std::get<Graph>(c3) == gen_cycle(3));

  auto typed = parse_graph("2 2\n0 1 c\n0 1 d\n");
  REQUIRE(std::holds_alternative<TypedMultigraph>(typed));
  const auto& tm = std::get<TypedMultigraph>(typed);
  CHECK(tm.has_c_edge(0, 1));
  CHECK(tm.has_d_edge(0, 1));
  CHECK(tm.degree(0) == 2);

  auto mixed = parse_graph("# comment\n\n3 2\n0 1\n1 2 c\n");
  REQUIRE(std::holds_alternative<TypedMultigraph>(mixed));
  CHECK(std::get<TypedMultigraph>(mixed).has_d_edge(0, 1));

  auto message = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const input_error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("2 1\n0 0\n").find("line 2") != std::string::npos);
  CHECK(message("2 1\n0 0\n").find("self-loop") != std::string::npos);
  CHECK(message("2 1\n0 5\n").find("line 2") != std::string::npos);
  CHECK(message("2\n").find("line 1") != std::string::npos);
  CHECK(message("3 2\n0 1\n").find("expected 2 edge lines") != std::string::npos);
  CHECK(message("3 1\n0 1\n1 2\n").find("line 3") != std::string::npos);
  CHECK(message("3 1\n0 1 x\n").find("line 2") != std::string::npos);
  CHECK(message("").find("missing header") != std::string::npos);

  for (const auto& g : {gen_petersen(), gen_h6(), gen_random_regular(20, 3, 3), Graph()}) {
    CHECK(std::get<Graph>(parse_graph(serialize_graph(g))) == g);
  }
  CHECK(std::get<TypedMultigraph>(parse_graph(serialize_graph(tm))).edges() == tm.edges());
}

TEST_CASE("packing files", "[graph]") {
  CHECK(parse_packing("0 3\n# note\n5\n") == std::vector<Vertex>{0, 3, 5});
  CHECK(parse_packing("method: greedy\nsize: 2\nwitness: 1 4\n") == std::vector<Vertex>{1, 4});
  CHECK(parse_packing("").empty());
  CHECK_THROWS_AS(parse_packing("1 x\n"), input_error);
  CHECK(serialize_packing({2, 7}) == "2 7\n");
}

TEST_CASE("closed neighbourhood size equals degree plus one", "[graph]") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = gen_random_regular(16, 1 + seed % 5, seed);
    for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(closed_neighborhood(g, v).size() == g.degree(v) + 1);
  }
}

TEST_CASE("induced subgraph keeps index maps", "[graph]") {
  auto sub = induced_subgraph(gen_cycle(6), {1, 2, 3, 5});
  CHECK(sub.graph.vertex_count() == 4);
  CHECK(sub.graph.edge_count() == 2);
  CHECK(sub.to_original == std::vector<Vertex>{1, 2, 3, 5});
  CHECK(sub.to_local[0] == InducedSubgraph::npos);
  CHECK(sub.to_local[5] == 3);
}
