#include "cusplab/metric_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace cusplab {

MetricGraph::MetricGraph(int n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  adj_.resize(n);
}

MetricGraph MetricGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  MetricGraph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void MetricGraph::check_vertex(int v) const {
  if (v < 0 || v >= num_vertices())
    throw std::invalid_argument("graph: vertex id " + std::to_string(v) + " out of range");
}

void MetricGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
  auto& au = adj_[u];
  auto pos = std::lower_bound(au.begin(), au.end(), v);
  if (pos != au.end() && *pos == v) return;  // already present
  au.insert(pos, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++num_edges_;
}

bool MetricGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& au = adj_[u];
  return std::binary_search(au.begin(), au.end(), v);
}

const std::vector<int>& MetricGraph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int MetricGraph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

std::vector<std::pair<int, int>> MetricGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(num_edges_);
  for (int u = 0; u < num_vertices(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;  // already lexicographic: u ascending, adj_ sorted
}

void MetricGraph::set_label(int v, std::string text) {
  check_vertex(v);
  labels_[v] = std::move(text);
}

const std::string* MetricGraph::label(int v) const {
  auto it = labels_.find(v);
  return it == labels_.end() ? nullptr : &it->second;
}

std::vector<int> bfs_distances(const MetricGraph& g, int source) {
  if (source < 0 || source >= g.num_vertices())
    throw std::invalid_argument("bfs: source out of range");
  std::vector<int> dist(g.num_vertices(), kUnreachable);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances_avoiding(const MetricGraph& g, int source,
                                        const std::vector<char>& blocked) {
  if (source < 0 || source >= g.num_vertices())
    throw std::invalid_argument("bfs: source out of range");
  if (static_cast<int>(blocked.size()) != g.num_vertices())
    throw std::invalid_argument("bfs: blocked vector size mismatch");
  if (blocked[source]) throw std::invalid_argument("bfs: source is blocked");
  std::vector<int> dist(g.num_vertices(), kUnreachable);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (!blocked[w] && dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(int n, std::vector<int> data) : n_(n), data_(std::move(data)) {
  if (data_.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("distance matrix: size mismatch");
}

DistanceMatrix distance_matrix(const MetricGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> data(static_cast<size_t>(n) * n, kUnreachable);
  for (int s = 0; s < n; ++s) {
    const std::vector<int> d = bfs_distances(g, s);
    std::copy(d.begin(), d.end(), data.begin() + static_cast<size_t>(s) * n);
  }
  return DistanceMatrix(n, std::move(data));
}

int gromov_product_doubled(const DistanceMatrix& d, int x, int y, int base) {
  if (x < 0 || x >= d.n() || y < 0 || y >= d.n() || base < 0 || base >= d.n())
    throw std::invalid_argument("gromov product: vertex out of range");
  if (!d.reachable(base, x) || !d.reachable(base, y) || !d.reachable(x, y))
    throw std::domain_error("gromov product: pair not connected");
  return d.at(base, x) + d.at(base, y) - d.at(x, y);
}

std::vector<std::vector<int>> components_after_removal(const MetricGraph& g,
                                                       const std::vector<int>& removed) {
  const int n = g.num_vertices();
  std::vector<char> gone(n, 0);
  for (int v : removed) {
    if (v < 0 || v >= n) throw std::invalid_argument("removal: vertex out of range");
    gone[v] = 1;
  }
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (gone[s] || comp[s] >= 0) continue;
    std::vector<int> block;
    std::queue<int> q;
    comp[s] = static_cast<int>(out.size());
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      block.push_back(u);
      for (int w : g.neighbors(u)) {
        if (!gone[w] && comp[w] < 0) {
          comp[w] = comp[s];
          q.push(w);
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;  // ordered by smallest member since seeds scan ascending
}

std::vector<std::vector<int>> connected_components(const MetricGraph& g) {
  return components_after_removal(g, {});
}

bool is_connected(const MetricGraph& g) {
  if (g.num_vertices() == 0) return true;
  return connected_components(g).size() == 1;
}

MetricGraph induced_subgraph(const MetricGraph& g, const std::vector<int>& vertices) {
  std::vector<int> keep;
  std::vector<int> local(g.num_vertices(), -1);
  for (int v : vertices) {
    if (v < 0 || v >= g.num_vertices())
      throw std::invalid_argument("induced subgraph: vertex out of range");
    if (local[v] >= 0) continue;
    local[v] = static_cast<int>(keep.size());
    keep.push_back(v);
  }
  MetricGraph sub(static_cast<int>(keep.size()));
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
    if (const std::string* l = g.label(keep[i])) sub.set_label(i, *l);
    for (int w : g.neighbors(keep[i]))
      if (local[w] > i) sub.add_edge(i, local[w]);
  }
  return sub;
}

}  // namespace cusplab
