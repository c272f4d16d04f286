#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "cusplab/cusped_space.hpp"
#include "cusplab/group_model.hpp"
#include "cusplab/horoball.hpp"
#include "cusplab/qi.hpp"
#include "cusplab/rational.hpp"

using namespace cusplab;

namespace {

MetricGraph path_graph(int n) {
  MetricGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace

TEST_CASE("rational arithmetic normalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK(Rational(7, 2) > Rational(3));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK(ceil_2log2(static_cast<std::int64_t>(16)) == 8);
  CHECK(ceil_2log2(Rational(3, 2)) == 2);  // 2^2 >= 9/4
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(9) == 4);
}

TEST_CASE("minimal additive constant of simple maps") {
  const DistanceMatrix d5 = distance_matrix(path_graph(5));
  CHECK(minimal_additive(VertexMap::identity(5), d5, d5, Rational(1)) == Rational(0));

  // constant map: worst pair stretches 0 against distance 4
  VertexMap constant(std::vector<int>{0, 0, 0, 0, 0});
  CHECK(minimal_additive(constant, d5, d5, Rational(1)) == Rational(4));

  // doubling map from P5 into P9 is exact at k = 2
  const DistanceMatrix d9 = distance_matrix(path_graph(9));
  VertexMap doubling(std::vector<int>{0, 2, 4, 6, 8});
  CHECK(minimal_additive(doubling, d5, d9, Rational(2)) == Rational(0));
  CHECK(minimal_additive(doubling, d5, d9, Rational(1)) == Rational(4));

  CHECK_THROWS_AS(minimal_additive(doubling, d5, d9, Rational(1, 2)), std::invalid_argument);

  MetricGraph split(2);
  CHECK_THROWS_AS(
      minimal_additive(VertexMap::identity(2), distance_matrix(split), distance_matrix(split),
                       Rational(1)),
      std::domain_error);
}

TEST_CASE("filtered variant skips excluded pairs") {
  const DistanceMatrix d5 = distance_matrix(path_graph(5));
  VertexMap constant(std::vector<int>{0, 0, 0, 0, 0});
  const Rational c = minimal_additive_filtered(constant, d5, d5, Rational(1),
                                               [](int u, int v) { return v - u <= 2; });
  CHECK(c == Rational(2));
}

TEST_CASE("coarse density") {
  const DistanceMatrix d9 = distance_matrix(path_graph(9));
  VertexMap ends(std::vector<int>{0, 8});
  CHECK(coarse_density(ends, d9) == 4);
  CHECK(coarse_density(VertexMap::identity(9), d9) == 0);
  CHECK_THROWS_AS(coarse_density(VertexMap(std::vector<int>{-1}), d9), std::domain_error);
}

TEST_CASE("horoball extension keeps levels and obeys the additive bound") {
  // base QI: doubling P5 -> P9, k = 2, c = 0
  const MetricGraph b1 = path_graph(5);
  const MetricGraph b2 = path_graph(9);
  const int depth = default_max_depth(8);
  const Horoball h1 = build_horoball(b1, depth);
  const Horoball h2 = build_horoball(b2, depth);

  VertexMap q(std::vector<int>{0, 2, 4, 6, 8});
  const Rational k(2);
  const Rational c = minimal_additive(q, distance_matrix(b1), distance_matrix(b2), k);

  const VertexMap ext = extend_to_horoball(q, h1, h2);
  for (int v = 0; v < h1.graph.num_vertices(); ++v) {
    CHECK(h2.level_of(ext[v]) == h1.level_of(v));
    CHECK(h2.base_of(ext[v]) == q[h1.base_of(v)]);
  }

  const auto levels = [](const Horoball& h) {
    std::vector<int> out(h.graph.num_vertices());
    for (int v = 0; v < h.graph.num_vertices(); ++v) out[v] = h.level_of(v);
    return out;
  };
  const TruncationSafety s1 = truncation_safety(h1.graph, levels(h1), depth);
  const TruncationSafety s2 = truncation_safety(h2.graph, levels(h2), depth);
  const Rational measured = minimal_additive_filtered(
      ext, s1.full, s2.full, Rational(1),
      [&](int u, int v) { return s1.safe(u, v) && s2.safe(ext[u], ext[v]); });
  CHECK(measured <= Rational(ceil_2log2(k + c) + 3));

  CHECK_THROWS_AS(extend_to_horoball(q, h1, build_horoball(b2, depth + 1)),
                  std::invalid_argument);
}

TEST_CASE("cusped extension of the identity passes the distance bound") {
  const GroupModel m = GroupModel::free_group(2);
  const CayleyBall ball = cayley_ball(m, 2);
  const std::vector<PeripheralSpec> peri = {{"A", {"a"}}};
  const CuspedSpace x = build_cusped_space(ball, m, peri, 2);

  const VertexMap q = VertexMap::identity(x.cayley_size);
  const InducedCorrespondence ic = induce_correspondence(q, x, x);
  for (size_t i = 0; i < ic.corr.target_of.size(); ++i)
    CHECK(ic.corr.target_of[i] == static_cast<int>(i));

  const Rational lambda = measure_cusped_lambda(q, ic.corr, ic.base_maps, x, x);
  CHECK(lambda == Rational(1));

  const VertexMap Q = extend_to_cusped(q, ic.corr, ic.base_maps, x, x);
  CHECK(Q.total());
  for (int v = 0; v < x.graph.num_vertices(); ++v) CHECK(Q[v] == v);

  const BoundReport report = check_cusped_bound(Q, x, x, lambda);
  CHECK(report.pass);
  CHECK(report.worst_ratio <= Rational(1));
  CHECK(report.pairs_checked > 0);
}

TEST_CASE("stretching a path violates the bound and is witnessed") {
  // plain balls (no peripherals) so the cusped spaces are the balls themselves
  const GroupModel m = GroupModel::free_group(1);
  const CuspedSpace x = build_cusped_space(cayley_ball(m, 1), m, {}, 2);
  const CuspedSpace y = build_cusped_space(cayley_ball(m, 6), m, {}, 2);
  REQUIRE(x.graph.num_vertices() == 3);

  const CayleyBall big = cayley_ball(m, 6);
  const int far_pos = big.find(m, m.parse_word("aaaaaa"));
  const int far_neg = big.find(m, m.parse_word("a-a-a-a-a-a-"));
  VertexMap q(std::vector<int>{0, far_pos, far_neg});

  const BoundReport report =
      check_cusped_bound(q, x, y, Rational(1));  // d_Y = 6 > 3 * 1 * 1 + 1
  CHECK_FALSE(report.pass);
  CHECK(report.worst_ratio > Rational(1));
  CHECK(report.worst_ratio == Rational(12, 7));  // endpoints 12 apart, d_X = 2
  CHECK_FALSE(report.saw_unreachable);
}

TEST_CASE("correspondence inference rejects straddling images") {
  const GroupModel m = GroupModel::free_group(2);
  const CayleyBall ball = cayley_ball(m, 2);
  const CuspedSpace x = build_cusped_space(ball, m, {{"A", {"a"}}}, 1);

  // send the identity coset line across two different cosets
  std::vector<int> img(x.cayley_size);
  for (int v = 0; v < x.cayley_size; ++v) img[v] = v;
  const int b = ball.find(m, m.parse_word("b"));
  img[ball.find(m, m.parse_word("a"))] = b;
  CHECK_THROWS_AS(induce_correspondence(VertexMap(img), x, x), std::runtime_error);
}

TEST_CASE("cone map assembly and check") {
  const GroupModel m = GroupModel::free_group(2);
  const CayleyBall ball = cayley_ball(m, 2);
  const ConedSpace x = build_coned_space(ball, m, {{"A", {"a"}}});

  CosetCorrespondence corr;
  for (size_t i = 0; i < x.cones.size(); ++i) corr.target_of.push_back(static_cast<int>(i));
  const VertexMap Q = assemble_cone_map(VertexMap::identity(x.cayley_size), corr, x, x);
  CHECK(Q.total());
  CHECK(Q[x.cone_vertex(3)] == x.cone_vertex(3));

  const BoundReport report =
      cone_extension_check(VertexMap::identity(x.cayley_size), corr, x, x, Rational(1));
  CHECK(report.pass);
  CHECK_THROWS_AS(cone_extension_check(VertexMap::identity(x.cayley_size), corr, x, x,
                                       Rational(1, 2)),
                  std::invalid_argument);
}
