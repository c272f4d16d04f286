#pragma once

#include <string>
#include <vector>

#include "cusplab/group_model.hpp"
#include "cusplab/horoball.hpp"
#include "cusplab/metric_graph.hpp"

namespace cusplab {

// Cayley ball with a combinatorial horoball glued onto every peripheral
// coset piece along its depth-0 copy. Vertices 0..cayley_size-1 are the ball
// (depth 0); each piece contributes its members' copies at depths
// 1..max_depth, laid out level-major starting at first_vertex:
//   id(piece, t, level) = first_vertex + (level-1) * |members| + t.
struct CuspedSpace {
  struct Piece {
    std::string peripheral;
    std::string rep;           // shortlex-least member word ("1" = identity)
    std::vector<int> members;  // ball vertex ids, ascending; index = base index
    std::vector<std::pair<int, int>> base_edges;  // base-local indices
    int first_vertex = -1;     // -1 when max_depth == 0
    bool intrinsic = true;     // false: fell back to the induced subgraph metric
  };

  MetricGraph graph;
  int cayley_size = 0;
  int max_depth = 0;
  std::vector<int> depth;        // per vertex
  std::vector<int> horoball_of;  // piece index, -1 at depth 0
  std::vector<Piece> pieces;

  // Global id of base index t at a given level (level 0 = the member itself).
  int piece_vertex(int piece, int t, int level) const;
  // Base index of a positive-depth vertex within its piece.
  int base_index_of(int v) const;

  MetricGraph piece_base_graph(int piece) const;
};

// max_depth = -1 picks ceil(log2(max base diameter)) + 2 over all pieces.
CuspedSpace build_cusped_space(const CayleyBall& ball, const GroupModel& m,
                               const std::vector<PeripheralSpec>& peripherals,
                               int max_depth = -1);

// Alternating decomposition of a vertex path: maximal runs at depth 0 and
// the complementary horoball excursions. Consecutive segments share exactly
// their junction vertex; degenerate (single-vertex) runs are allowed.
struct PathSegment {
  bool deep = false;  // false: run at depth 0; true: excursion through a horoball
  int first = 0;      // index into the path, inclusive
  int last = 0;
};

std::vector<PathSegment> decompose_path(const CuspedSpace& x, const std::vector<int>& path);

// Ball plus one cone vertex per peripheral coset piece, joined to each of
// its members. Cone ids start at first_cone, in piece order.
struct ConedSpace {
  struct Cone {
    std::string peripheral;
    std::string rep;
    std::vector<int> members;
  };

  MetricGraph graph;
  int cayley_size = 0;
  int first_cone = 0;
  std::vector<Cone> cones;

  int cone_vertex(int i) const { return first_cone + i; }
};

ConedSpace build_coned_space(const CayleyBall& ball, const GroupModel& m,
                             const std::vector<PeripheralSpec>& peripherals);

// Number of simple cycles of length <= n through the edge {u, v}. The count
// explodes combinatorially, so n is capped at 12.
int fineness_profile(const MetricGraph& g, int u, int v, int n);

}  // namespace cusplab
