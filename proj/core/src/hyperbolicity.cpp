#include "cusplab/hyperbolicity.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

#include "cusplab/group_model.hpp"
#include "cusplab/horoball.hpp"

namespace cusplab {

namespace {

void require_connected(const DistanceMatrix& d) {
  for (int i = 0; i < d.n(); ++i)
    for (int j = i + 1; j < d.n(); ++j)
      if (!d.reachable(i, j))
        throw std::domain_error("four-point delta: graph is disconnected");
}

// doubled contribution of one quadruple: largest pairing sum minus middle
int quadruple_excess(const DistanceMatrix& d, int i, int j, int k, int l) {
  const int s1 = d.at(i, j) + d.at(k, l);
  const int s2 = d.at(i, k) + d.at(j, l);
  const int s3 = d.at(i, l) + d.at(j, k);
  const int hi = std::max({s1, s2, s3});
  const int lo = std::min({s1, s2, s3});
  return hi - (s1 + s2 + s3 - hi - lo);
}

struct Best {
  int delta = 0;
  std::array<int, 4> witness{0, 0, 0, 0};

  void offer(int value, int i, int j, int k, int l) {
    const std::array<int, 4> w{i, j, k, l};
    if (value > delta || (value == delta && w < witness)) {
      delta = value;
      witness = w;
    }
  }
};

Best scan_range(const DistanceMatrix& d, int i_begin, int i_end) {
  Best best;
  best.witness = {0, 0, 0, 0};
  const int n = d.n();
  for (int i = i_begin; i < i_end; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
          best.offer(quadruple_excess(d, i, j, k, l), i, j, k, l);
  return best;
}

}  // namespace

int thread_count_from_env() {
  const char* env = std::getenv("CUSPLAB_THREADS");
  if (!env) return 1;
  const int t = std::atoi(env);
  return std::clamp(t, 1, 64);
}

DeltaReport four_point_delta(const DistanceMatrix& d) {
  require_connected(d);
  DeltaReport report;
  const int n = d.n();
  if (n < 4) return report;  // no quadruple beats zero

  const int threads = std::min(thread_count_from_env(), n);
  if (threads <= 1) {
    const Best best = scan_range(d, 0, n);
    report.delta_doubled = best.delta;
    report.witness = best.witness;
    return report;
  }

  std::vector<Best> partial(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    const int lo = static_cast<int>(static_cast<long long>(n) * t / threads);
    const int hi = static_cast<int>(static_cast<long long>(n) * (t + 1) / threads);
    pool.emplace_back([&d, &partial, t, lo, hi] { partial[t] = scan_range(d, lo, hi); });
  }
  for (auto& th : pool) th.join();
  Best best = partial[0];
  for (int t = 1; t < threads; ++t)
    best.offer(partial[t].delta, partial[t].witness[0], partial[t].witness[1],
               partial[t].witness[2], partial[t].witness[3]);
  report.delta_doubled = best.delta;
  report.witness = best.witness;
  return report;
}

DeltaReport four_point_delta(const MetricGraph& g) { return four_point_delta(distance_matrix(g)); }

DeltaReport four_point_delta_sampled(const DistanceMatrix& d, std::uint64_t seed,
                                     std::int64_t samples) {
  require_connected(d);
  if (samples < 1) throw std::invalid_argument("sampled delta: need at least one sample");
  DeltaReport report;
  report.exhaustive = false;
  report.seed = seed;
  report.samples = samples;
  const int n = d.n();
  if (n < 4) return report;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  Best best;
  for (std::int64_t s = 0; s < samples; ++s) {
    int q[4];
    for (int a = 0; a < 4; ++a) {
      for (;;) {
        q[a] = pick(rng);
        bool fresh = true;
        for (int b = 0; b < a; ++b) fresh = fresh && q[b] != q[a];
        if (fresh) break;
      }
    }
    std::sort(q, q + 4);
    best.offer(quadruple_excess(d, q[0], q[1], q[2], q[3]), q[0], q[1], q[2], q[3]);
  }
  report.delta_doubled = best.delta;
  report.witness = best.witness;
  return report;
}

std::vector<ScanPoint> delta_growth_scan(const GraphRecipe& recipe,
                                         const std::vector<long long>& params, bool exhaustive,
                                         std::uint64_t seed, std::int64_t samples) {
  std::vector<ScanPoint> out;
  for (long long p : params) {
    const MetricGraph g = recipe(p);
    ScanPoint point;
    point.param = p;
    point.report =
        exhaustive ? four_point_delta(g) : four_point_delta_sampled(distance_matrix(g), seed, samples);
    out.push_back(point);
  }
  return out;
}

namespace {

MetricGraph cycle_graph(long long n) {
  if (n < 3) throw std::invalid_argument("cycle recipe: need at least 3 vertices");
  MetricGraph g(static_cast<int>(n));
  for (int i = 0; i < n; ++i) g.add_edge(i, static_cast<int>((i + 1) % n));
  return g;
}

MetricGraph path_graph(long long n) {
  if (n < 1) throw std::invalid_argument("path recipe: need at least 1 vertex");
  MetricGraph g(static_cast<int>(n));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

int graph_diameter(const MetricGraph& g) {
  const DistanceMatrix d = distance_matrix(g);
  int diam = 0;
  for (int i = 0; i < d.n(); ++i)
    for (int j = i + 1; j < d.n(); ++j)
      if (d.reachable(i, j)) diam = std::max(diam, d.at(i, j));
  return diam;
}

}  // namespace

MetricGraph recipe_graph(const std::string& family, long long param) {
  if (family == "cycle") return cycle_graph(param);
  if (family == "path") return path_graph(param);
  if (family == "horoball_cycle") {
    const MetricGraph base = cycle_graph(param);
    return build_horoball(base, default_max_depth(graph_diameter(base))).graph;
  }
  if (family == "horoball_path") {
    const MetricGraph base = path_graph(param);
    return build_horoball(base, default_max_depth(graph_diameter(base))).graph;
  }
  if (family == "ball_free2") {
    if (param < 0) throw std::invalid_argument("ball recipe: negative radius");
    return cayley_ball(GroupModel::free_group(2), static_cast<int>(param)).graph;
  }
  if (family == "ball_free_abelian2") {
    if (param < 0) throw std::invalid_argument("ball recipe: negative radius");
    return cayley_ball(GroupModel::free_abelian(2), static_cast<int>(param)).graph;
  }
  throw std::invalid_argument("unknown recipe family '" + family + "'");
}

}  // namespace cusplab
