#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <stdexcept>

#include "cusplab/hyperbolicity.hpp"
#include "cusplab/metric_graph.hpp"
#include "support/oracles.hpp"

using namespace cusplab;
namespace oracle = cusplab::testing;

namespace {

MetricGraph cycle_graph(int n) {
  MetricGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

int witness_excess(const DistanceMatrix& d, const std::array<int, 4>& w) {
  const int s1 = d.at(w[0], w[1]) + d.at(w[2], w[3]);
  const int s2 = d.at(w[0], w[2]) + d.at(w[1], w[3]);
  const int s3 = d.at(w[0], w[3]) + d.at(w[1], w[2]);
  const int hi = std::max({s1, s2, s3});
  const int lo = std::min({s1, s2, s3});
  return hi - (s1 + s2 + s3 - hi - lo);
}

}  // namespace

TEST_CASE("trees are zero hyperbolic") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const MetricGraph t = oracle::random_tree(4 + static_cast<int>(seed % 9), seed);
    CHECK(four_point_delta(t).delta_doubled == 0);
  }
}

TEST_CASE("cycle values, frozen by hand") {
  CHECK(four_point_delta(cycle_graph(4)).delta_doubled == 2);
  CHECK(four_point_delta(cycle_graph(5)).delta_doubled == 1);
  CHECK(four_point_delta(cycle_graph(6)).delta_doubled == 2);
}

TEST_CASE("exhaustive scan agrees with the flat-loop oracle") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    const MetricGraph g = oracle::random_connected(n, static_cast<int>(seed % 6), seed * 31);
    const DistanceMatrix d = distance_matrix(g);
    const DeltaReport r = four_point_delta(d);
    CHECK(r.delta_doubled == oracle::brute_delta_doubled(d));
    CHECK(r.exhaustive);
    CHECK(witness_excess(d, r.witness) == r.delta_doubled);
  }
}

TEST_CASE("small graphs and disconnected graphs") {
  CHECK(four_point_delta(MetricGraph(1)).delta_doubled == 0);
  MetricGraph two(2);
  two.add_edge(0, 1);
  CHECK(four_point_delta(two).delta_doubled == 0);
  MetricGraph gap(5);
  gap.add_edge(0, 1);
  CHECK_THROWS_AS(four_point_delta(gap), std::domain_error);
}

TEST_CASE("thread count does not change the report") {
  const MetricGraph g = oracle::random_connected(13, 9, 424242);
  const DeltaReport solo = four_point_delta(g);
  setenv("CUSPLAB_THREADS", "4", 1);
  CHECK(thread_count_from_env() == 4);
  const DeltaReport multi = four_point_delta(g);
  unsetenv("CUSPLAB_THREADS");
  CHECK(multi.delta_doubled == solo.delta_doubled);
  CHECK(multi.witness == solo.witness);
}

TEST_CASE("sampling is a reproducible lower bound") {
  const MetricGraph g = oracle::random_connected(14, 10, 777);
  const DistanceMatrix d = distance_matrix(g);
  const DeltaReport full = four_point_delta(d);
  const DeltaReport s1 = four_point_delta_sampled(d, 99, 2000);
  const DeltaReport s2 = four_point_delta_sampled(d, 99, 2000);
  CHECK(s1.delta_doubled <= full.delta_doubled);
  CHECK(s1.delta_doubled == s2.delta_doubled);
  CHECK(s1.witness == s2.witness);
  CHECK_FALSE(s1.exhaustive);
  CHECK(s1.seed == 99);
  CHECK_THROWS_AS(four_point_delta_sampled(d, 1, 0), std::invalid_argument);
}

TEST_CASE("growth scan rows match single runs") {
  const std::vector<long long> params = {4, 5, 6};
  const auto rows = delta_growth_scan([](long long p) { return cycle_graph(static_cast<int>(p)); },
                                      params, true, 0, 0);
  REQUIRE(rows.size() == 3);
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].param == params[i]);
    CHECK(rows[i].report.delta_doubled ==
          four_point_delta(cycle_graph(static_cast<int>(params[i]))).delta_doubled);
  }
}

TEST_CASE("recipe families") {
  CHECK(recipe_graph("cycle", 8).num_vertices() == 8);
  CHECK(recipe_graph("path", 5).num_edges() == 4);
  CHECK(recipe_graph("horoball_path", 5).num_vertices() > 5);
  CHECK(recipe_graph("ball_free2", 2).num_vertices() == 17);
  CHECK(recipe_graph("ball_free_abelian2", 2).num_vertices() == 13);
  CHECK_THROWS_AS(recipe_graph("moebius", 5), std::invalid_argument);
  CHECK_THROWS_AS(recipe_graph("cycle", 2), std::invalid_argument);
}
