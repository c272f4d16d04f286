#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cusplab/metric_graph.hpp"

namespace cusplab {

// Four-point hyperbolicity constant. For a quadruple with pairing sums
// L >= M >= S the contribution is (L - M) / 2; delta is the maximum over all
// quadruples. Values are half-integers, stored doubled to stay exact.
struct DeltaReport {
  int delta_doubled = 0;
  std::array<int, 4> witness{0, 0, 0, 0};
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::int64_t samples = 0;
};

// Exhaustive scan over unordered quadruples. The graph must be connected
// (domain error otherwise). Honors CUSPLAB_THREADS; results are identical at
// any thread count (max reduction with lexicographic witness tie-break).
DeltaReport four_point_delta(const DistanceMatrix& d);
DeltaReport four_point_delta(const MetricGraph& g);

// Seeded random quadruples; a lower bound on the exhaustive value.
DeltaReport four_point_delta_sampled(const DistanceMatrix& d, std::uint64_t seed,
                                     std::int64_t samples);

int thread_count_from_env();  // CUSPLAB_THREADS, default 1, clamped to [1, 64]

// One row of a growth scan: delta of recipe(param) per parameter.
struct ScanPoint {
  long long param = 0;
  DeltaReport report;
};

using GraphRecipe = std::function<MetricGraph(long long)>;

std::vector<ScanPoint> delta_growth_scan(const GraphRecipe& recipe,
                                         const std::vector<long long>& params, bool exhaustive,
                                         std::uint64_t seed, std::int64_t samples);

// Named recipe families for the CLI and the scans:
//   cycle, path                    plain graphs on `param` vertices
//   horoball_cycle, horoball_path  horoball over the plain graph, default depth
//   ball_free2, ball_free_abelian2 Cayley ball of radius `param`
MetricGraph recipe_graph(const std::string& family, long long param);

}  // namespace cusplab
