#include <benchmark/benchmark.h>

#include "cusplab/horoball.hpp"
#include "cusplab/metric_graph.hpp"

namespace {

using namespace cusplab;

MetricGraph cycle_graph(int n) {
  MetricGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

void BM_horoball_build(benchmark::State& state) {
  const MetricGraph base = cycle_graph(static_cast<int>(state.range(0)));
  const int depth = default_max_depth(static_cast<int>(state.range(0)) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(build_horoball(base, depth));
}
BENCHMARK(BM_horoball_build)->Arg(16)->Arg(64)->Arg(256);

void BM_all_pairs_distances(benchmark::State& state) {
  const MetricGraph base = cycle_graph(static_cast<int>(state.range(0)));
  const Horoball h = build_horoball(base, default_max_depth(static_cast<int>(state.range(0)) / 2));
  for (auto _ : state) benchmark::DoNotOptimize(distance_matrix(h.graph));
}
BENCHMARK(BM_all_pairs_distances)->Arg(16)->Arg(64)->Arg(128);

// The safety sweep runs two BFS passes per vertex (full and deepest-level
// avoiding), so it should track BM_all_pairs_distances at about 2x.
void BM_truncation_safety(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MetricGraph base = cycle_graph(n);
  const int depth = default_max_depth(n / 2);
  const Horoball h = build_horoball(base, depth);
  std::vector<int> level(h.graph.num_vertices());
  for (int v = 0; v < h.graph.num_vertices(); ++v) level[v] = h.level_of(v);
  for (auto _ : state) benchmark::DoNotOptimize(truncation_safety(h.graph, level, depth));
}
BENCHMARK(BM_truncation_safety)->Arg(16)->Arg(64)->Arg(128);

}  // namespace
