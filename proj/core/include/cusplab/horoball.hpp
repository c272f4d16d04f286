#pragma once

#include "cusplab/metric_graph.hpp"

namespace cusplab {

// Combinatorial horoball over a finite base graph T: one copy of the base
// vertex set per level 0..max_depth, vertical edges between consecutive
// copies of the same vertex, and a horizontal edge at level n whenever the
// base distance is at most 2^n. Level 0 reproduces the base graph.
//
// Vertex layout is level-major: id = level * base_size + base_index.
struct Horoball {
  MetricGraph graph;
  int base_size = 0;
  int max_depth = 0;

  int vertex_at(int base_index, int level) const { return level * base_size + base_index; }
  int level_of(int v) const { return v / base_size; }
  int base_of(int v) const { return v % base_size; }
};

Horoball build_horoball(const MetricGraph& base, int max_depth);

struct HoroballDistance {
  int distance = kUnreachable;
  // true iff some shortest path avoids the deepest level entirely, i.e. the
  // value would survive a deeper truncation
  bool truncation_safe = false;
};

HoroballDistance horoball_distance(const Horoball& h, int u, int v);

// Closed-form upper bound on the distance between (t1, n1) and (t2, n2) in
// terms of the base distance d_base: descend, cross near level log2(d_base),
// ascend. With equal base points the distance is exactly |n1 - n2|; with
// distinct base points at least one horizontal edge is needed, so the bound
// is clamped below by |n1 - n2| + 1.
int horoball_upper_estimate(int d_base, int n1, int n2);

// Depth at which a horoball stops changing distances between depth-0
// vertices: one level past where the whole base fits under one horizontal
// edge, i.e. ceil(log2(diameter)) + 2 (minimum 2).
int default_max_depth(int max_base_diameter);

// Pairwise distances plus per-pair truncation safety for any graph carrying
// a level/depth function. A pair is safe when neither endpoint sits at the
// deepest level and some shortest path avoids that level.
struct TruncationSafety {
  DistanceMatrix full;
  DistanceMatrix restricted;  // kUnreachable where every path is deep
  std::vector<char> deep;

  bool safe(int u, int v) const {
    return !deep[u] && !deep[v] && restricted.at(u, v) == full.at(u, v);
  }
};

TruncationSafety truncation_safety(const MetricGraph& g, const std::vector<int>& level,
                                   int max_level);

}  // namespace cusplab
