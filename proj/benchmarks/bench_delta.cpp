#include <benchmark/benchmark.h>

#include "cusplab/hyperbolicity.hpp"
#include "cusplab/metric_graph.hpp"

namespace {

using namespace cusplab;

// The quadruple scan is the quartic hot loop of the project; CUSPLAB_THREADS
// splits it, so run these with the variable set to compare.
void BM_four_point_delta(benchmark::State& state) {
  const MetricGraph g = recipe_graph("horoball_cycle", state.range(0));
  const DistanceMatrix d = distance_matrix(g);
  for (auto _ : state) benchmark::DoNotOptimize(four_point_delta(d));
}
BENCHMARK(BM_four_point_delta)->Arg(8)->Arg(16)->Arg(24);

void BM_four_point_delta_sampled(benchmark::State& state) {
  const MetricGraph g = recipe_graph("horoball_cycle", 32);
  const DistanceMatrix d = distance_matrix(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(four_point_delta_sampled(d, 17, state.range(0)));
}
BENCHMARK(BM_four_point_delta_sampled)->Arg(10000)->Arg(100000);

void BM_free2_ball_delta(benchmark::State& state) {
  const MetricGraph g = recipe_graph("ball_free2", state.range(0));
  const DistanceMatrix d = distance_matrix(g);
  for (auto _ : state) benchmark::DoNotOptimize(four_point_delta(d));
}
BENCHMARK(BM_free2_ball_delta)->Arg(2)->Arg(3);

}  // namespace
