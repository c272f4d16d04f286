#pragma once

#include <vector>

#include "cusplab/boundary_tree.hpp"
#include "cusplab/cusped_space.hpp"
#include "cusplab/metric_graph.hpp"

namespace cusplab {

// Thresholded sphere: vertices at distance exactly R from the base, joined
// when their Gromov product at the base is at least R - s, equivalently when
// their distance is at most 2s. A diagnostic picture of the boundary, not an
// invariant.
struct SphereGraph {
  MetricGraph graph;              // local ids 0..k-1
  std::vector<int> source;        // local id -> cusped-space vertex
  std::vector<int> horoball_tag;  // piece index of the source vertex, -1 on the ball
  int base = 0;
  int radius = 0;
  int threshold = 0;
};

// R must be >= 1 and the sphere non-empty (domain errors otherwise).
SphereGraph sphere_graph(const CuspedSpace& x, int base, int radius, int threshold);

// Sphere plus a combined tree per connected component (a lone vertex yields
// a single rigid leaf). Tree sets use sphere-local ids.
struct BoundaryPipeline {
  SphereGraph sphere;
  bool connected = true;
  std::vector<std::vector<int>> components;  // sphere-local ids
  std::vector<CombinedTree> trees;
};

BoundaryPipeline boundary_pipeline(const CuspedSpace& x, int base, int radius, int threshold);

}  // namespace cusplab
