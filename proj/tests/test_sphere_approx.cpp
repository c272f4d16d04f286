#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cusplab/cusped_space.hpp"
#include "cusplab/group_model.hpp"
#include "cusplab/sphere_approx.hpp"

using namespace cusplab;

namespace {

// plain Cayley ball of the free group, wrapped as a cusped space with no
// peripherals (the graph is the ball itself)
CuspedSpace free2_ball_space(int radius) {
  const GroupModel m = GroupModel::free_group(2);
  return build_cusped_space(cayley_ball(m, radius), m, {}, 2);
}

}  // namespace

TEST_CASE("sphere vertices and sibling triangles in the free group") {
  const CuspedSpace x = free2_ball_space(3);
  const SphereGraph s = sphere_graph(x, 0, 2, 1);
  CHECK(s.source.size() == 12);  // 4 * 3 reduced words of length 2
  CHECK(s.radius == 2);
  for (int tag : s.horoball_tag) CHECK(tag == -1);

  // two length-2 words sit within distance 2 iff they share their first
  // letter, so the sphere splits into four sibling triangles
  const auto comps = connected_components(s.graph);
  REQUIRE(comps.size() == 4);
  for (const auto& c : comps) {
    REQUIRE(c.size() == 3);
    CHECK(s.graph.has_edge(c[0], c[1]));
    CHECK(s.graph.has_edge(c[0], c[2]));
    CHECK(s.graph.has_edge(c[1], c[2]));
  }
}

TEST_CASE("threshold sweeps from singletons to one clump") {
  const CuspedSpace x = free2_ball_space(3);

  const SphereGraph tight = sphere_graph(x, 0, 2, 0);
  CHECK(tight.graph.num_edges() == 0);

  // distance between length-2 words is at most 4, so threshold 2 joins all
  const SphereGraph loose = sphere_graph(x, 0, 2, 2);
  CHECK(is_connected(loose.graph));
  CHECK(loose.graph.num_edges() == 12 * 11 / 2);
}

TEST_CASE("edge rule matches the Gromov product reading") {
  const CuspedSpace x = free2_ball_space(3);
  const DistanceMatrix d = distance_matrix(x.graph);
  for (int threshold = 0; threshold <= 2; ++threshold) {
    const SphereGraph s = sphere_graph(x, 0, 2, threshold);
    for (int i = 0; i < s.graph.num_vertices(); ++i)
      for (int j = i + 1; j < s.graph.num_vertices(); ++j) {
        const int doubled = gromov_product_doubled(d, s.source[i], s.source[j], 0);
        CHECK(s.graph.has_edge(i, j) == (doubled >= 2 * (s.radius - threshold)));
      }
  }
}

TEST_CASE("spheres see into the horoballs") {
  const GroupModel m = GroupModel::free_group(2);
  const CuspedSpace x =
      build_cusped_space(cayley_ball(m, 2), m, {{"A", {"a"}}}, 2);
  const SphereGraph s = sphere_graph(x, 0, 1, 0);

  // four neighbours in the ball plus the depth-1 copy of the identity
  REQUIRE(s.source.size() == 5);
  std::set<std::string> labels;
  int deep = 0;
  for (int i = 0; i < s.graph.num_vertices(); ++i) {
    if (s.horoball_tag[i] >= 0) ++deep;
    if (const std::string* l = s.graph.label(i)) labels.insert(*l);
  }
  CHECK(deep == 1);
  CHECK(labels == std::set<std::string>{"a", "a-", "b", "b-", "(1,1)"});
}

TEST_CASE("pipeline trees cover their components") {
  const CuspedSpace x = free2_ball_space(3);
  const BoundaryPipeline p = boundary_pipeline(x, 0, 2, 1);
  CHECK_FALSE(p.connected);
  REQUIRE(p.components.size() == 4);
  REQUIRE(p.trees.size() == 4);
  for (size_t c = 0; c < p.components.size(); ++c) {
    std::set<int> covered;
    for (const auto& v : p.trees[c].vertices)
      covered.insert(v.set.begin(), v.set.end());
    CHECK(covered == std::set<int>(p.components[c].begin(), p.components[c].end()));
  }
  // each triangle is a single rigid piece
  for (const auto& t : p.trees) {
    REQUIRE(t.vertices.size() == 1);
    CHECK(t.vertices[0].type == TreeVertexType::Rigid);
  }
}

TEST_CASE("singleton components become rigid leaves") {
  const CuspedSpace x = free2_ball_space(3);
  const BoundaryPipeline p = boundary_pipeline(x, 0, 2, 0);
  CHECK(p.components.size() == 12);
  for (const auto& t : p.trees) {
    REQUIRE(t.vertices.size() == 1);
    CHECK(t.vertices[0].type == TreeVertexType::Rigid);
    CHECK(t.vertices[0].set.size() == 1);
  }
}

TEST_CASE("sphere input validation") {
  const CuspedSpace x = free2_ball_space(3);
  CHECK_THROWS_AS(sphere_graph(x, 0, 0, 1), std::domain_error);
  CHECK_THROWS_AS(sphere_graph(x, 0, 9, 1), std::domain_error);  // empty
  CHECK_THROWS_AS(sphere_graph(x, -1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(sphere_graph(x, 0, 2, -1), std::invalid_argument);
}
