#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "pathlab/gnp_oracle.hpp"
#include "pathlab/graph.hpp"

using namespace pathlab;

TEST_CASE("pair index roundtrips") {
  for (std::uint32_t v = 1; v < 200; ++v)
    for (std::uint32_t u = 0; u < v; ++u) {
      auto idx = pair_index(u, v);
      auto [uu, vv] = pair_from_index(idx);
      REQUIRE(uu == u);
      REQUIRE(vv == v);
    }
  // Large indices hit the float-guess correction loops.
  for (std::uint64_t idx : {0ULL, 1ULL, 4999950000ULL, 576460752303423487ULL}) {
    auto [u, v] = pair_from_index(idx);
    REQUIRE(pair_index(u, v) == idx);
  }
}

TEST_CASE("graph basics") {
  Graph g(5, {{0, 1}, {1, 2}, {0, 4}});
  REQUIRE(g.n_vertices() == 5);
  REQUIRE(g.edge_count() == 3);
  REQUIRE(g.degree(1) == 2);
  REQUIRE(g.degree(3) == 0);
  REQUIRE(g.has_edge(0, 1));
  REQUIRE(g.has_edge(1, 0));
  REQUIRE(!g.has_edge(2, 4));
  REQUIRE(!g.has_edge(3, 3));
  auto nb = g.neighbors(0);
  REQUIRE(std::vector<std::uint32_t>(nb.begin(), nb.end()) ==
          std::vector<std::uint32_t>{1, 4});
  REQUIRE_THROWS_AS(Graph(3, {{1, 1}}), std::out_of_range);
  REQUIRE_THROWS_AS(Graph(3, {{2, 1}}), std::out_of_range);
  REQUIRE_THROWS_AS(Graph(3, {{0, 3}}), std::out_of_range);
}

TEST_CASE("gnp endpoints") {
  auto empty = gnp_generate({50, 0.0, 1});
  REQUIRE(empty.edge_count() == 0);
  auto complete = gnp_generate({50, 1.0, 1});
  REQUIRE(complete.edge_count() == 50 * 49 / 2);
}

TEST_CASE("gnp determinism and density") {
  for (double p : {0.4, 0.02}) {
    auto a = gnp_generate({400, p, 123});
    auto b = gnp_generate({400, p, 123});
    REQUIRE(a.edges() == b.edges());
    auto c = gnp_generate({400, p, 124});
    REQUIRE(a.edges() != c.edges());
    const double total = 400.0 * 399.0 / 2.0;
    const double mean = total * p;
    const double sd = std::sqrt(total * p * (1 - p));
    REQUIRE(std::fabs(static_cast<double>(a.edge_count()) - mean) < 6 * sd);
  }
}

TEST_CASE("oracle matches the dense generator pair for pair") {
  GnpParams params{300, 0.3, 77};
  auto g = gnp_generate(params);
  GnpOracle oracle(params);
  for (std::uint32_t v = 1; v < 300; ++v)
    for (std::uint32_t u = 0; u < v; ++u) REQUIRE(oracle.has_edge(u, v) == g.has_edge(u, v));
}

TEST_CASE("oracle rejects the sparse regime") {
  REQUIRE_THROWS_AS(GnpOracle({1000, 0.05, 1}), std::invalid_argument);
}

TEST_CASE("induced subgraph relabels") {
  Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {4, 5}});
  auto sub = induced_subgraph(g, {5, 1, 2, 4});
  REQUIRE(sub.graph.n_vertices() == 4);
  REQUIRE(sub.original == std::vector<std::uint32_t>{1, 2, 4, 5});
  REQUIRE(sub.graph.edge_count() == 2);  // 1-2 and 4-5
  REQUIRE(sub.graph.has_edge(0, 1));
  REQUIRE(sub.graph.has_edge(2, 3));
  auto none = induced_subgraph(g, {});
  REQUIRE(none.graph.n_vertices() == 0);
  REQUIRE_THROWS_AS(induced_subgraph(g, {6}), std::out_of_range);
}

TEST_CASE("components and isolated edges") {
  Graph g(8, {{0, 1}, {1, 2}, {3, 4}, {6, 7}});
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 4);
  REQUIRE(comps[0] == std::vector<std::uint32_t>{0, 1, 2});
  REQUIRE(isolated_edge_count(g) == 2);  // 3-4 and 6-7
}

TEST_CASE("edge list io roundtrip") {
  Graph g(5, {{0, 1}, {2, 4}});
  std::stringstream ss;
  write_edge_list(ss, g);
  auto back = read_edge_list(ss);
  REQUIRE(back.n_vertices() == 5);
  REQUIRE(back.edges() == g.edges());

  std::stringstream loop("2 1\n0 0\n");
  REQUIRE_THROWS(read_edge_list(loop));
  std::stringstream dup("3 2\n0 1\n0 1\n");
  REQUIRE_THROWS(read_edge_list(dup));
  std::stringstream reversed("3 1\n2 1\n");
  REQUIRE_THROWS(read_edge_list(reversed));
}
