#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "cusplab/boundary_tree.hpp"
#include "cusplab/metric_graph.hpp"

namespace {

using namespace cusplab;

// Cycle plus chords, always 2-connected, mirroring the graphs the tree
// assembly sees from sphere components.
MetricGraph chorded_cycle(int n, int chords, std::uint64_t seed) {
  MetricGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  std::mt19937_64 rng(seed);
  for (int added = 0; added < chords;) {
    const int u = static_cast<int>(rng() % n);
    const int v = static_cast<int>(rng() % n);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    ++added;
  }
  return g;
}

void BM_enumerate_cut_pairs(benchmark::State& state) {
  const MetricGraph g = chorded_cycle(static_cast<int>(state.range(0)), 3, 11);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cut_pairs(g));
}
BENCHMARK(BM_enumerate_cut_pairs)->Arg(8)->Arg(12)->Arg(16);

void BM_combined_tree(benchmark::State& state) {
  const MetricGraph g = chorded_cycle(static_cast<int>(state.range(0)), 3, 11);
  for (auto _ : state) benchmark::DoNotOptimize(combined_tree(g));
}
BENCHMARK(BM_combined_tree)->Arg(8)->Arg(12)->Arg(16);

void BM_maximal_inseparable_sets(benchmark::State& state) {
  const MetricGraph g = chorded_cycle(static_cast<int>(state.range(0)), 4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_inseparable_sets(g));
}
BENCHMARK(BM_maximal_inseparable_sets)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
