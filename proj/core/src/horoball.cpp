#include "cusplab/horoball.hpp"

#include <algorithm>
#include <stdexcept>

#include "cusplab/rational.hpp"

namespace cusplab {

Horoball build_horoball(const MetricGraph& base, int max_depth) {
  if (base.num_vertices() == 0) throw std::invalid_argument("horoball: empty base graph");
  if (max_depth < 0) throw std::invalid_argument("horoball: negative depth");

  Horoball h;
  h.base_size = base.num_vertices();
  h.max_depth = max_depth;
  h.graph = MetricGraph(h.base_size * (max_depth + 1));

  const DistanceMatrix d = distance_matrix(base);
  for (int level = 0; level <= max_depth; ++level) {
    // horizontal edges: base distance within 2^level
    const long long threshold = level < 62 ? (1LL << level) : 0x7fffffffffffffffLL;
    for (int t1 = 0; t1 < h.base_size; ++t1)
      for (int t2 = t1 + 1; t2 < h.base_size; ++t2)
        if (d.reachable(t1, t2) && d.at(t1, t2) <= threshold)
          h.graph.add_edge(h.vertex_at(t1, level), h.vertex_at(t2, level));
    if (level < max_depth)
      for (int t = 0; t < h.base_size; ++t)
        h.graph.add_edge(h.vertex_at(t, level), h.vertex_at(t, level + 1));
  }
  for (int t = 0; t < h.base_size; ++t) {
    const std::string* l = base.label(t);
    const std::string tag = l ? *l : std::to_string(t);
    for (int level = 0; level <= max_depth; ++level)
      h.graph.set_label(h.vertex_at(t, level), "(" + tag + "," + std::to_string(level) + ")");
  }
  return h;
}

HoroballDistance horoball_distance(const Horoball& h, int u, int v) {
  if (u < 0 || u >= h.graph.num_vertices() || v < 0 || v >= h.graph.num_vertices())
    throw std::invalid_argument("horoball distance: vertex out of range");
  const std::vector<int> full = bfs_distances(h.graph, u);
  HoroballDistance out;
  out.distance = full[v];
  if (out.distance == kUnreachable) return out;
  if (h.level_of(u) == h.max_depth || h.level_of(v) == h.max_depth) return out;
  std::vector<char> blocked(h.graph.num_vertices(), 0);
  for (int x = 0; x < h.graph.num_vertices(); ++x)
    if (h.level_of(x) == h.max_depth) blocked[x] = 1;
  const std::vector<int> shallow = bfs_distances_avoiding(h.graph, u, blocked);
  out.truncation_safe = shallow[v] == out.distance;
  return out;
}

int horoball_upper_estimate(int d_base, int n1, int n2) {
  if (d_base < 0) throw std::domain_error("horoball estimate: unreachable base pair");
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("horoball estimate: negative level");
  const int vertical = n1 < n2 ? n2 - n1 : n1 - n2;
  if (d_base == 0) return vertical;
  return std::max(vertical + 1, ceil_2log2(static_cast<std::int64_t>(d_base)) + 3 - n1 - n2);
}

int default_max_depth(int max_base_diameter) {
  if (max_base_diameter < 0) throw std::invalid_argument("default depth: negative diameter");
  return ceil_log2(std::max(1, max_base_diameter)) + 2;
}

TruncationSafety truncation_safety(const MetricGraph& g, const std::vector<int>& level,
                                   int max_level) {
  if (static_cast<int>(level.size()) != g.num_vertices())
    throw std::invalid_argument("truncation safety: level vector size mismatch");
  TruncationSafety out;
  out.full = distance_matrix(g);
  out.deep.assign(g.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (level[v] >= max_level) out.deep[v] = 1;

  const int n = g.num_vertices();
  std::vector<int> data(static_cast<size_t>(n) * n, kUnreachable);
  for (int s = 0; s < n; ++s) {
    if (out.deep[s]) continue;
    const std::vector<int> d = bfs_distances_avoiding(g, s, out.deep);
    std::copy(d.begin(), d.end(), data.begin() + static_cast<size_t>(s) * n);
  }
  out.restricted = DistanceMatrix(n, std::move(data));
  return out;
}

}  // namespace cusplab
