#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "pathlab/construct.hpp"
#include "pathlab/gnp_oracle.hpp"
#include "pathlab/graph.hpp"
#include "pathlab/pathfind.hpp"

using namespace pathlab;

namespace {

std::vector<std::uint32_t> all_vertices(std::uint32_t N) {
  std::vector<std::uint32_t> v(N);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

template <class Host>
void check_extraction_invariants(const Host& host, const DenseExtractionResult& res,
                                 const DenseExtractionParams& params, double p) {
  const int parts = params.parts();
  const auto part_size = static_cast<std::size_t>(params.n) / static_cast<std::size_t>(parts);
  REQUIRE(res.A.size() == static_cast<std::size_t>(params.n));
  REQUIRE(res.parts.size() == static_cast<std::size_t>(parts));
  std::set<std::uint32_t> distinct(res.A.begin(), res.A.end());
  REQUIRE(distinct.size() == res.A.size());
  const auto thr = static_cast<std::uint32_t>(
      std::ceil(params.beta * (1.0 / parts) * params.n * p - 1e-9));
  for (int i = 1; i < parts; ++i) {
    REQUIRE(res.parts[static_cast<std::size_t>(i)].size() == part_size);
    // Every vertex of A_{i+1} meets the degree threshold into A_i.
    for (auto v : res.parts[static_cast<std::size_t>(i)]) {
      std::uint32_t deg = 0;
      for (auto a : res.parts[static_cast<std::size_t>(i - 1)]) deg += host.has_edge(v, a);
      REQUIRE(deg >= thr);
    }
  }
}

}  // namespace

TEST_CASE("parameter validation") {
  DenseExtractionParams params;
  params.alpha = 0.5;
  params.n = 7;  // 2 does not divide 7
  REQUIRE_THROWS_AS(params.validate(), std::invalid_argument);
  params.n = 8;
  params.alpha = 0.07;  // 1/alpha outside 2..8
  REQUIRE_THROWS_AS(params.parts(), std::invalid_argument);
  params.alpha = 0.25;
  params.beta = 0.0;
  REQUIRE_THROWS_AS(params.validate(), std::invalid_argument);
}

TEST_CASE("dense extraction on an explicit graph") {
  GnpParams gp{2000, 0.15, 31};
  auto g = gnp_generate(gp);
  DenseExtractionParams params;
  params.alpha = 0.5;
  params.beta = 1.2;
  params.n = 40;
  auto out = dense_extract(g, all_vertices(2000), params, 7);
  REQUIRE(out.ok());
  check_extraction_invariants(g, *out.result, params, 0.15);
  REQUIRE(out.result->survivor_counts.front() == 2000);
  REQUIRE(out.result->internal_edges > 0);
  // internal_edges counts exactly the edges inside A.
  std::uint64_t direct = 0;
  for (std::size_t i = 0; i < out.result->A.size(); ++i)
    for (std::size_t j = i + 1; j < out.result->A.size(); ++j)
      direct += g.has_edge(out.result->A[i], out.result->A[j]);
  REQUIRE(out.result->internal_edges == direct);
}

TEST_CASE("greedy selection also satisfies the threshold chain") {
  auto g = gnp_generate({1500, 0.2, 5});
  DenseExtractionParams params;
  params.alpha = 0.25;
  params.beta = 1.1;
  params.n = 32;
  params.selection = Selection::greedy_degree;
  auto out = dense_extract(g, all_vertices(1500), params, 11);
  REQUIRE(out.ok());
  check_extraction_invariants(g, *out.result, params, 0.2);
}

TEST_CASE("early-stop probing on an implicit host") {
  GnpParams gp{200000, 0.35, 99};
  GnpOracle oracle(gp);
  DenseExtractionParams params;
  params.alpha = 0.5;
  params.beta = 1.0 / 0.35;  // threshold = half of A_1
  params.n = 8;
  params.early_stop = true;
  auto out = dense_extract(oracle, all_vertices(200000), params, 3);
  REQUIRE(out.ok());
  REQUIRE(out.result->early_stopped);
  check_extraction_invariants(oracle, *out.result, params, 0.35);
}

TEST_CASE("infeasible threshold reports the failing step") {
  auto g = gnp_generate({500, 0.05, 2});
  DenseExtractionParams params;
  params.alpha = 0.5;
  params.beta = 100.0;  // threshold far above any realistic degree
  params.n = 20;
  auto out = dense_extract(g, all_vertices(500), params, 1);
  REQUIRE(!out.ok());
  REQUIRE(out.failure->step == 2);
  REQUIRE(out.failure->survivors < 10);
}

TEST_CASE("blocks construction is path free by components") {
  auto g = gnp_generate({600, 0.1, 8});
  auto res = blocks_construct(g, 20, 4);
  REQUIRE(res.component_bound == 20);
  Graph h(600, res.subgraph);
  for (const auto& comp : connected_components(h)) REQUIRE(comp.size() <= 20);
  for (auto [u, v] : res.subgraph) REQUIRE(g.has_edge(u, v));
  REQUIRE(has_path(h, 21).answer == PathAnswer::no);
}

TEST_CASE("isolated edge construction") {
  Graph g(7, {{0, 1}, {2, 3}, {3, 4}, {5, 6}});
  auto res = isolated_edge_construct(g);
  REQUIRE(res.edge_count == 2);
  REQUIRE(res.component_bound == 2);
  REQUIRE(res.subgraph == EdgeList{{0, 1}, {5, 6}});
}

TEST_CASE("repeated extraction uses disjoint vertex sets") {
  auto g = gnp_generate({3000, 0.15, 21});
  DenseExtractionParams params;
  params.alpha = 0.5;
  params.beta = 1.2;
  auto res = repeated_dense_construct(g, 30, params, 10, 9);
  REQUIRE(res.rounds_completed == 10);
  REQUIRE(res.edge_count == res.subgraph.size());
  Graph h(3000, res.subgraph);
  for (const auto& comp : connected_components(h)) REQUIRE(comp.size() <= 30);
  REQUIRE(has_path(h, 31).answer == PathAnswer::no);
}

TEST_CASE("repeated extraction stops on exhaustion and keeps partial output") {
  auto g = gnp_generate({200, 0.3, 13});
  DenseExtractionParams params;
  params.alpha = 0.5;
  params.beta = 1.0;
  auto res = repeated_dense_construct(g, 50, params, 100, 2);
  REQUIRE(res.rounds_completed <= 4);  // only 200 vertices to spend
  Graph h(200, res.subgraph);
  for (const auto& comp : connected_components(h)) REQUIRE(comp.size() <= 50);
}
