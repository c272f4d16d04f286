#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "cusplab/group_model.hpp"

using namespace cusplab;

namespace {

// S3 as permutations of {0,1,2}; table[i][j] is "apply j, then i"
GroupModel symmetric_group_3() {
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                         {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  const auto compose = [&](int i, int j) {
    std::vector<int> p(3);
    for (int x = 0; x < 3; ++x) p[x] = perms[i][perms[j][x]];
    for (int k = 0; k < 6; ++k)
      if (perms[k] == p) return k;
    return -1;
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) table[i][j] = compose(i, j);
  return GroupModel::finite(table, {"e", "r", "rr", "s", "t", "u"});
}

}  // namespace

TEST_CASE("free group words reduce and render") {
  const GroupModel m = GroupModel::free_group(2);
  CHECK(m.render_word(m.normal_form(m.parse_word("aa-"))) == "");
  CHECK(m.render_word(m.normal_form(m.parse_word("ba-ab"))) == "bb");
  CHECK(m.render_word(m.inverse(m.parse_word("ab-"))) == "ba-");
  CHECK(m.is_identity(m.multiply(m.parse_word("ab"), m.parse_word("b-a-"))));
  CHECK_THROWS_AS(m.parse_word("z"), std::invalid_argument);
  CHECK_THROWS_AS(m.parse_word("-a"), std::invalid_argument);
  CHECK_THROWS_AS(GroupModel::free_group(0), std::invalid_argument);
  CHECK_THROWS_AS(GroupModel::free_group(27), std::invalid_argument);
}

TEST_CASE("shortlex orders by length then by letter") {
  const GroupModel m = GroupModel::free_group(2);
  const auto lt = [&](const char* x, const char* y) {
    return GroupModel::shortlex_less(m.parse_word(x), m.parse_word(y));
  };
  CHECK(lt("", "a"));
  CHECK(lt("a", "a-"));
  CHECK(lt("a-", "b"));
  CHECK(lt("b-", "aa"));
  CHECK(lt("ab-", "a-b"));
  CHECK(lt("a-b-", "bb"));
  CHECK_FALSE(lt("a", "a"));
}

TEST_CASE("free abelian normal form sorts and sums exponents") {
  const GroupModel m = GroupModel::free_abelian(2);
  CHECK(m.render_word(m.normal_form(m.parse_word("ba"))) == "ab");
  CHECK(m.render_word(m.normal_form(m.parse_word("aba-"))) == "b");
  CHECK(m.exponents(m.parse_word("abab-b-b-")) == std::vector<long long>{2, -2});
  CHECK(m.is_identity(m.multiply(m.parse_word("ab"), m.parse_word("a-b-"))));
  CHECK_THROWS_AS(GroupModel::free_group(2).exponents({}), std::logic_error);
}

TEST_CASE("finite model finds identity and inverses from the table") {
  const GroupModel z4 = GroupModel::finite({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
  CHECK(z4.order() == 4);
  CHECK(z4.is_identity(z4.multiply(z4.parse_word("g1"), z4.parse_word("g3"))));
  CHECK(z4.render_word(z4.multiply(z4.parse_word("g1"), z4.parse_word("g1"))) == "g2");
  CHECK(z4.render_word(z4.inverse(z4.parse_word("g1"))) == "g3");

  const GroupModel s3 = symmetric_group_3();
  const Word r = s3.parse_word("r");
  const Word s = s3.parse_word("s");
  CHECK(s3.render_word(s3.inverse(r)) == "rr");
  CHECK(s3.render_word(s3.multiply(r, s)) != s3.render_word(s3.multiply(s, r)));
  CHECK(s3.is_identity(s3.multiply(s, s)));

  // a table without two-sided identity is rejected
  CHECK_THROWS_AS(GroupModel::finite({{1, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("free group ball is the expected tree") {
  const GroupModel m = GroupModel::free_group(2);
  const CayleyBall ball = cayley_ball(m, 3);
  CHECK(ball.graph.num_vertices() == 53);  // 2*3^r - 1
  CHECK(ball.graph.num_edges() == 52);
  CHECK(ball.words[0].empty());
  for (int v = 0; v < ball.graph.num_vertices(); ++v)
    CHECK(ball.dist[v] == static_cast<int>(ball.words[v].size()));
  CHECK(ball.find(m, m.parse_word("ab-a")) >= 0);
  CHECK(ball.find(m, m.parse_word("abab")) == -1);
}

TEST_CASE("free abelian ball is the diamond grid") {
  const CayleyBall ball = cayley_ball(GroupModel::free_abelian(2), 2);
  CHECK(ball.graph.num_vertices() == 13);  // 2r^2 + 2r + 1
  CHECK(ball.graph.num_edges() == 16);
}

TEST_CASE("custom ball generators change the metric") {
  const GroupModel m = GroupModel::free_group(2);
  const CayleyBall ball = cayley_ball(m, 2, {m.parse_word("a"), m.parse_word("b"), m.parse_word("ab")});
  const int ab = ball.find(m, m.parse_word("ab"));
  REQUIRE(ab >= 0);
  CHECK(ball.dist[ab] == 1);
  CHECK(ball.graph.has_edge(0, ab));
}

TEST_CASE("finite ball with a generator subset") {
  const GroupModel z4 = GroupModel::finite({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}},
                                           {}, {1});
  const CayleyBall ball = cayley_ball(z4, 2);
  CHECK(ball.graph.num_vertices() == 4);
  const int g2 = ball.find(z4, z4.parse_word("g2"));
  REQUIRE(g2 >= 0);
  CHECK(ball.dist[g2] == 2);
}

TEST_CASE("free peripheral is the cyclic power test") {
  const GroupModel m = GroupModel::free_group(2);
  const PeripheralSubgroup p = PeripheralSubgroup::from_spec(m, {"P", {"aba-"}});
  CHECK(p.contains(m, {}));
  CHECK(p.contains(m, m.parse_word("aba-")));
  CHECK(p.contains(m, m.parse_word("abbba-")));   // a b^3 a^-1
  CHECK(p.contains(m, m.parse_word("ab-b-a-")));  // a b^-2 a^-1
  CHECK_FALSE(p.contains(m, m.parse_word("ba")));
  CHECK_FALSE(p.contains(m, m.parse_word("ab")));

  CHECK_THROWS_AS(PeripheralSubgroup::from_spec(m, {"P", {"aa-"}}), std::invalid_argument);
  CHECK_THROWS_AS(PeripheralSubgroup::from_spec(m, {"P", {"a", "b"}}), std::runtime_error);
}

TEST_CASE("free abelian peripheral is a lattice") {
  const GroupModel m = GroupModel::free_abelian(2);
  const PeripheralSubgroup p = PeripheralSubgroup::from_spec(m, {"L", {"aa", "ab"}});
  CHECK(p.contains(m, m.parse_word("aaab")));    // (3,1) = (2,0) + (1,1)
  CHECK(p.contains(m, m.parse_word("bb")));      // (0,2) = -(2,0) + 2(1,1)
  CHECK(p.contains(m, {}));
  CHECK(p.contains(m, m.parse_word("ab")));  // (1,1) is a generator
  CHECK_FALSE(p.contains(m, m.parse_word("a")));
}

TEST_CASE("finite peripheral is the generated subgroup") {
  const GroupModel s3 = symmetric_group_3();
  const PeripheralSubgroup p = PeripheralSubgroup::from_spec(s3, {"P", {"s"}});
  CHECK(p.contains(s3, s3.parse_word("s")));
  CHECK(p.contains(s3, {}));
  CHECK_FALSE(p.contains(s3, s3.parse_word("r")));
}

TEST_CASE("coset pieces partition the ball in representative order") {
  const GroupModel m = GroupModel::free_group(2);
  const CayleyBall ball = cayley_ball(m, 2);
  const CosetPieces pieces = coset_pieces(ball, m, {"A", {"a"}});

  const std::vector<std::string> reps = {"1",   "b",   "b-",  "ab", "ab-",
                                         "a-b", "a-b-", "bb", "b-b-"};
  CHECK(pieces.rep_word == reps);

  // the identity piece holds every power of a in the ball
  CHECK(pieces.members[0].size() == 5);
  int covered = 0;
  for (const auto& piece : pieces.members) covered += static_cast<int>(piece.size());
  CHECK(covered == ball.graph.num_vertices());
  for (int v = 0; v < ball.graph.num_vertices(); ++v) {
    const int p = pieces.piece_of[v];
    REQUIRE(p >= 0);
    bool found = false;
    for (int u : pieces.members[p]) found = found || u == v;
    CHECK(found);
  }
}

TEST_CASE("left translation is partial on the ball") {
  const GroupModel m = GroupModel::free_group(2);
  const CayleyBall ball = cayley_ball(m, 1);
  const std::vector<int> t = left_translate(ball, m, m.parse_word("a"));
  CHECK(t[0] == ball.find(m, m.parse_word("a")));
  CHECK(t[ball.find(m, m.parse_word("a-"))] == 0);
  CHECK(t[ball.find(m, m.parse_word("a"))] == -1);   // aa leaves the ball
  CHECK(t[ball.find(m, m.parse_word("b"))] == -1);   // ab leaves the ball
}
