#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cusplab {

// Sentinel for "no path". Kept negative so arithmetic on it blows up fast in
// debug rather than silently looking like a huge-but-plausible distance.
inline constexpr int kUnreachable = -1;

// Finite simple graph with the hop metric. Vertex ids are dense 0..n-1.
// Self-loops and parallel edges are rejected / deduplicated at insertion.
class MetricGraph {
 public:
  MetricGraph() = default;
  explicit MetricGraph(int n);

  static MetricGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return num_edges_; }

  // Inserting an existing edge is a no-op; a self-loop or out-of-range
  // endpoint is an input error.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  // Neighbors in increasing id order.
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;

  // Lexicographically sorted (u < v) edge list; this is the canonical form
  // used by the serializers.
  std::vector<std::pair<int, int>> edges() const;

  void set_label(int v, std::string text);
  const std::string* label(int v) const;
  const std::map<int, std::string>& labels() const { return labels_; }

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  std::map<int, std::string> labels_;
  int num_edges_ = 0;
};

// Hop distances from source; kUnreachable where no path exists.
std::vector<int> bfs_distances(const MetricGraph& g, int source);

// Same, but paths may not enter vertices with blocked[v] != 0. A blocked
// source is an input error.
std::vector<int> bfs_distances_avoiding(const MetricGraph& g, int source,
                                        const std::vector<char>& blocked);

// Symmetric all-pairs hop distances with explicit unreachable sentinel.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int> data);

  int n() const { return n_; }
  int at(int i, int j) const { return data_[static_cast<size_t>(i) * n_ + j]; }
  bool reachable(int i, int j) const { return at(i, j) != kUnreachable; }

 private:
  int n_ = 0;
  std::vector<int> data_;
};

DistanceMatrix distance_matrix(const MetricGraph& g);

// Doubled Gromov product 2*(x|y)_base = d(b,x) + d(b,y) - d(x,y). Doubling
// keeps half-integers exact. Any unreachable pair is a domain error.
int gromov_product_doubled(const DistanceMatrix& d, int x, int y, int base);

// Connected components of g with `removed` deleted. Blocks are ordered by
// smallest member and sorted internally, so output is deterministic.
std::vector<std::vector<int>> components_after_removal(const MetricGraph& g,
                                                       const std::vector<int>& removed);

std::vector<std::vector<int>> connected_components(const MetricGraph& g);
bool is_connected(const MetricGraph& g);

// Subgraph induced on `vertices` (deduplicated, kept in the given order);
// local id i corresponds to vertices[i].
MetricGraph induced_subgraph(const MetricGraph& g, const std::vector<int>& vertices);

}  // namespace cusplab
