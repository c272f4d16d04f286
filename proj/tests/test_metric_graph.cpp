#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "cusplab/metric_graph.hpp"
#include "support/oracles.hpp"

using namespace cusplab;
namespace oracle = cusplab::testing;

TEST_CASE("edge insertion validates and deduplicates") {
  MetricGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 0);  // duplicate, dropped
  CHECK(g.num_edges() == 1);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(-1, 2), std::invalid_argument);
}

TEST_CASE("edge list is lexicographic and neighbors are sorted") {
  MetricGraph g = MetricGraph::from_edges(4, {{2, 3}, {0, 2}, {1, 0}});
  const std::vector<std::pair<int, int>> want = {{0, 1}, {0, 2}, {2, 3}};
  CHECK(g.edges() == want);
  CHECK(g.neighbors(0) == std::vector<int>{1, 2});
  CHECK(g.degree(2) == 2);
}

TEST_CASE("bfs distances match Floyd-Warshall on random graphs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 3 + static_cast<int>(seed % 12);
    const MetricGraph g = oracle::random_connected(n, static_cast<int>(seed % 5), seed);
    const DistanceMatrix lib = distance_matrix(g);
    const DistanceMatrix ref = oracle::floyd_warshall(g);
    REQUIRE(lib.n() == ref.n());
    for (int i = 0; i < lib.n(); ++i)
      for (int j = 0; j < lib.n(); ++j) CHECK(lib.at(i, j) == ref.at(i, j));
  }
}

TEST_CASE("unreachable pairs use the sentinel") {
  MetricGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  const DistanceMatrix d = distance_matrix(g);
  CHECK(d.at(0, 1) == 1);
  CHECK(d.at(0, 2) == kUnreachable);
  CHECK_FALSE(d.reachable(1, 3));
  CHECK_FALSE(is_connected(g));
  CHECK(connected_components(g) == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
}

TEST_CASE("blocked bfs avoids forbidden vertices") {
  // path 0-1-2-3-4, block the middle
  MetricGraph g = MetricGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  std::vector<char> blocked(5, 0);
  blocked[2] = 1;
  const std::vector<int> d = bfs_distances_avoiding(g, 0, blocked);
  CHECK(d[1] == 1);
  CHECK(d[2] == kUnreachable);
  CHECK(d[3] == kUnreachable);
  blocked[0] = 1;
  CHECK_THROWS_AS(bfs_distances_avoiding(g, 0, blocked), std::invalid_argument);
}

TEST_CASE("doubled Gromov product on a path") {
  MetricGraph g = MetricGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const DistanceMatrix d = distance_matrix(g);
  // (x|y)_b = distance from b to the x..y segment, doubled
  CHECK(gromov_product_doubled(d, 0, 4, 2) == 0);
  CHECK(gromov_product_doubled(d, 3, 4, 0) == 6);
  CHECK(gromov_product_doubled(d, 2, 2, 0) == 4);

  MetricGraph h(3);
  h.add_edge(0, 1);
  const DistanceMatrix dh = distance_matrix(h);
  CHECK_THROWS_AS(gromov_product_doubled(dh, 0, 2, 1), std::domain_error);
}

TEST_CASE("components after removal are deterministic") {
  // star with center 0 over 1..4 plus an edge 3-4
  MetricGraph g = MetricGraph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {3, 4}});
  const auto comps = components_after_removal(g, {0});
  CHECK(comps == std::vector<std::vector<int>>{{1}, {2}, {3, 4}});
  CHECK(components_after_removal(g, {0, 3}) == std::vector<std::vector<int>>{{1}, {2}, {4}});
  CHECK(components_after_removal(g, {1, 2, 3, 4}) == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("induced subgraph keeps the requested order") {
  MetricGraph g = MetricGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const MetricGraph sub = induced_subgraph(g, {3, 1, 2});
  CHECK(sub.num_vertices() == 3);
  // local 0=3, 1=1, 2=2: edges 3-2 and 1-2
  CHECK(sub.has_edge(0, 2));
  CHECK(sub.has_edge(1, 2));
  CHECK_FALSE(sub.has_edge(0, 1));
}
