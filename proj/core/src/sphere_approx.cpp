#include "cusplab/sphere_approx.hpp"

#include <stdexcept>

namespace cusplab {

SphereGraph sphere_graph(const CuspedSpace& x, int base, int radius, int threshold) {
  if (base < 0 || base >= x.graph.num_vertices())
    throw std::invalid_argument("sphere: base vertex out of range");
  if (radius < 1) throw std::domain_error("sphere: radius must be at least 1");
  if (threshold < 0) throw std::invalid_argument("sphere: negative threshold");

  const std::vector<int> dist = bfs_distances(x.graph, base);
  SphereGraph s;
  s.base = base;
  s.radius = radius;
  s.threshold = threshold;
  for (int v = 0; v < x.graph.num_vertices(); ++v)
    if (dist[v] == radius) s.source.push_back(v);
  if (s.source.empty()) throw std::domain_error("sphere: empty at this radius");

  const int k = static_cast<int>(s.source.size());
  s.graph = MetricGraph(k);
  for (int i = 0; i < k; ++i) {
    s.horoball_tag.push_back(x.horoball_of[s.source[i]]);
    if (const std::string* l = x.graph.label(s.source[i])) s.graph.set_label(i, *l);
  }
  // pairwise cusped distances; edge iff d(u,v) <= 2s, i.e. (u|v)_base >= R - s
  for (int i = 0; i < k; ++i) {
    const std::vector<int> d = bfs_distances(x.graph, s.source[i]);
    for (int j = i + 1; j < k; ++j)
      if (d[s.source[j]] != kUnreachable && d[s.source[j]] <= 2 * threshold)
        s.graph.add_edge(i, j);
  }
  return s;
}

BoundaryPipeline boundary_pipeline(const CuspedSpace& x, int base, int radius, int threshold) {
  BoundaryPipeline out;
  out.sphere = sphere_graph(x, base, radius, threshold);
  out.components = connected_components(out.sphere.graph);
  out.connected = out.components.size() == 1;
  for (const std::vector<int>& comp : out.components) {
    if (comp.size() == 1) {
      CombinedTree leaf;
      leaf.vertices.push_back({TreeVertexType::Rigid, comp});
      out.trees.push_back(std::move(leaf));
      continue;
    }
    CombinedTree local = combined_tree(induced_subgraph(out.sphere.graph, comp));
    for (auto& vertex : local.vertices)
      for (int& v : vertex.set) v = comp[v];  // back to sphere-local ids
    out.trees.push_back(std::move(local));
  }
  return out;
}

}  // namespace cusplab
