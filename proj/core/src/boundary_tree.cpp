#include "cusplab/boundary_tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace cusplab {

namespace {

struct BlockFinder {
  const MetricGraph& g;
  std::vector<int> disc, low;
  std::vector<char> is_cut;
  std::vector<std::pair<int, int>> stack;
  std::vector<std::vector<int>> block_vertex_sets;
  int timer = 0;

  explicit BlockFinder(const MetricGraph& graph)
      : g(graph),
        disc(graph.num_vertices(), -1),
        low(graph.num_vertices(), 0),
        is_cut(graph.num_vertices(), 0) {}

  void pop_block(std::pair<int, int> until) {
    std::set<int> verts;
    for (;;) {
      const std::pair<int, int> e = stack.back();
      stack.pop_back();
      verts.insert(e.first);
      verts.insert(e.second);
      if (e == until) break;
    }
    block_vertex_sets.emplace_back(verts.begin(), verts.end());
  }

  void dfs(int u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (int w : g.neighbors(u)) {
      if (w == parent) {
        parent = -2;  // skip the tree edge once; parallel edges cannot occur
        continue;
      }
      if (disc[w] < 0) {
        ++children;
        stack.push_back({u, w});
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          if (disc[u] > 0 || children > 1) is_cut[u] = 1;
          pop_block({u, w});
        }
      } else if (disc[w] < disc[u]) {
        stack.push_back({u, w});
        low[u] = std::min(low[u], disc[w]);
      }
    }
  }
};

}  // namespace

std::vector<int> cut_vertices(const MetricGraph& g) {
  if (!is_connected(g)) throw std::domain_error("cut vertices: graph is disconnected");
  BlockFinder finder(g);
  if (g.num_vertices() > 0) finder.dfs(0, -1);
  std::vector<int> cuts;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (finder.is_cut[v]) cuts.push_back(v);
  return cuts;
}

BlockCutTree block_cut_tree(const MetricGraph& g) {
  if (!is_connected(g)) throw std::domain_error("block-cut tree: graph is disconnected");
  BlockFinder finder(g);
  if (g.num_vertices() > 0) finder.dfs(0, -1);

  BlockCutTree tree;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (finder.is_cut[v]) tree.cuts.push_back(v);

  std::sort(finder.block_vertex_sets.begin(), finder.block_vertex_sets.end());
  for (auto& verts : finder.block_vertex_sets) {
    BlockCutTree::Block block;
    block.is_bridge = verts.size() == 2;
    block.vertices = std::move(verts);
    tree.blocks.push_back(std::move(block));
  }
  for (int b = 0; b < static_cast<int>(tree.blocks.size()); ++b)
    for (int v : tree.blocks[b].vertices)
      if (std::binary_search(tree.cuts.begin(), tree.cuts.end(), v))
        tree.edges.emplace_back(b, v);
  return tree;
}

std::vector<std::pair<int, int>> enumerate_cut_pairs(const MetricGraph& g) {
  std::vector<std::pair<int, int>> pairs;
  const int n = g.num_vertices();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (components_after_removal(g, {a, b}).size() > 1) pairs.emplace_back(a, b);
  return pairs;
}

bool pair_separates_pair(const MetricGraph& g, std::pair<int, int> sep,
                         std::pair<int, int> other) {
  if (sep.first == sep.second || other.first == other.second)
    throw std::invalid_argument("pair separation: degenerate pair");
  if (sep.first == other.first || sep.first == other.second || sep.second == other.first ||
      sep.second == other.second)
    throw std::invalid_argument("pair separation: pairs overlap");
  const auto comps = components_after_removal(g, {sep.first, sep.second});
  int ca = -1, cb = -1;
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    if (std::binary_search(comps[c].begin(), comps[c].end(), other.first)) ca = c;
    if (std::binary_search(comps[c].begin(), comps[c].end(), other.second)) cb = c;
  }
  return ca != cb;
}

namespace {

// Pair universe for the classification steps. The exclusion mask carries the
// whole-graph articulation points down to per-block analysis: a pair touching
// one is not a legitimate two-point separator there, because the cut point
// already splits the graph on its own.
std::vector<std::pair<int, int>> separator_pairs(const MetricGraph& g,
                                                 const std::vector<char>& excluded) {
  std::vector<std::pair<int, int>> kept;
  for (const auto& [a, b] : enumerate_cut_pairs(g))
    if (excluded.empty() || (!excluded[a] && !excluded[b])) kept.emplace_back(a, b);
  return kept;
}

PairClassification classify_pairs_excluding(const MetricGraph& g,
                                            const std::vector<char>& excluded) {
  PairClassification out;
  out.pairs = separator_pairs(g, excluded);
  const int p = static_cast<int>(out.pairs.size());

  std::vector<int> parent(p);
  for (int i = 0; i < p; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };

  std::vector<char> crossing(p, 0);
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      const auto& a = out.pairs[i];
      const auto& b = out.pairs[j];
      if (a.first == b.first || a.first == b.second || a.second == b.first ||
          a.second == b.second)
        continue;  // overlapping pairs never cross
      const bool ij = pair_separates_pair(g, a, b);
      const bool ji = pair_separates_pair(g, b, a);
      if (ij != ji)
        throw std::logic_error("classify pairs: separation between cut pairs came out asymmetric");
      if (ij) {
        crossing[i] = crossing[j] = 1;
        parent[find(i)] = find(j);
      }
    }
  }

  out.crossing_class.assign(p, -1);
  std::map<int, int> class_id;
  for (int i = 0; i < p; ++i) {
    if (!crossing[i]) continue;
    const int root = find(i);
    auto [it, fresh] = class_id.try_emplace(root, static_cast<int>(out.necklaces.size()));
    if (fresh) out.necklaces.emplace_back();
    out.crossing_class[i] = it->second;
  }
  std::vector<std::set<int>> unions(out.necklaces.size());
  for (int i = 0; i < p; ++i) {
    if (out.crossing_class[i] < 0) continue;
    unions[out.crossing_class[i]].insert(out.pairs[i].first);
    unions[out.crossing_class[i]].insert(out.pairs[i].second);
  }
  for (size_t c = 0; c < unions.size(); ++c) {
    out.necklaces[c].assign(unions[c].begin(), unions[c].end());
    if (out.necklaces[c].size() < 3)
      throw std::logic_error("classify pairs: necklace with fewer than three vertices");
  }
  return out;
}

std::vector<std::vector<int>> maximal_inseparable_sets_excluding(
    const MetricGraph& g, const std::vector<char>& excluded) {
  const int n = g.num_vertices();
  const auto pairs = separator_pairs(g, excluded);
  std::vector<std::vector<char>> separated(n, std::vector<char>(n, 0));
  for (const auto& [a, b] : pairs) {
    const auto comps = components_after_removal(g, {a, b});
    std::vector<int> comp_of(n, -1);
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
      for (int v : comps[c]) comp_of[v] = c;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (comp_of[u] >= 0 && comp_of[v] >= 0 && comp_of[u] != comp_of[v])
          separated[u][v] = separated[v][u] = 1;
  }

  // Bron-Kerbosch with pivoting on the complement relation
  std::vector<std::vector<int>> cliques;
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  const auto compatible = [&](int u, int v) { return u != v && !separated[u][v]; };

  std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> expand =
      [&](std::vector<int>& r, std::vector<int> cand, std::vector<int> done) {
        if (cand.empty() && done.empty()) {
          cliques.push_back(r);
          return;
        }
        int pivot = -1, best = -1;
        for (int u : cand) {
          int cnt = 0;
          for (int v : cand)
            if (compatible(u, v)) ++cnt;
          if (cnt > best) {
            best = cnt;
            pivot = u;
          }
        }
        const std::vector<int> branch = [&] {
          std::vector<int> b;
          for (int v : cand)
            if (pivot < 0 || !compatible(pivot, v)) b.push_back(v);
          return b;
        }();
        for (int v : branch) {
          std::vector<int> cand2, done2;
          for (int u : cand)
            if (compatible(v, u)) cand2.push_back(u);
          for (int u : done)
            if (compatible(v, u)) done2.push_back(u);
          r.push_back(v);
          expand(r, std::move(cand2), std::move(done2));
          r.pop_back();
          cand.erase(std::find(cand.begin(), cand.end(), v));
          done.push_back(v);
        }
      };
  std::vector<int> r;
  expand(r, all, {});
  for (auto& c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

}  // namespace

PairClassification classify_pairs(const MetricGraph& g) {
  return classify_pairs_excluding(g, {});
}

std::vector<std::vector<int>> maximal_inseparable_sets(const MetricGraph& g) {
  return maximal_inseparable_sets_excluding(g, {});
}

const char* tree_type_name(TreeVertexType t) {
  switch (t) {
    case TreeVertexType::CutPoint: return "cutpoint";
    case TreeVertexType::Pair: return "pair";
    case TreeVertexType::Necklace: return "necklace";
    case TreeVertexType::Rigid: return "rigid";
  }
  return "?";
}

const char* jsj_label(TreeVertexType t) {
  switch (t) {
    case TreeVertexType::CutPoint: return "peripheral";
    case TreeVertexType::Pair: return "hyperbolic two-ended";
    case TreeVertexType::Necklace: return "quadratically hanging with finite fiber";
    case TreeVertexType::Rigid: return "rigid";
  }
  return "?";
}

namespace {

int type_rank(TreeVertexType t) {
  switch (t) {
    case TreeVertexType::CutPoint: return 0;
    case TreeVertexType::Pair: return 1;
    case TreeVertexType::Necklace: return 2;
    case TreeVertexType::Rigid: return 3;
  }
  return 4;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

CombinedTree combined_tree(const MetricGraph& g) {
  if (g.num_vertices() < 2) throw std::domain_error("combined tree: need at least two vertices");
  if (!is_connected(g)) throw std::domain_error("combined tree: graph is disconnected");

  const BlockCutTree bct = block_cut_tree(g);
  const std::vector<int>& cuts = bct.cuts;
  const auto is_cut = [&](int v) { return std::binary_search(cuts.begin(), cuts.end(), v); };

  CombinedTree tree;
  std::set<std::pair<int, std::vector<int>>> seen;  // (type rank, set) dedup
  const auto add_vertex = [&](TreeVertexType type, std::vector<int> set) {
    if (seen.insert({type_rank(type), set}).second)
      tree.vertices.push_back({type, std::move(set)});
  };

  for (int x : cuts) add_vertex(TreeVertexType::CutPoint, {x});

  for (const BlockCutTree::Block& block : bct.blocks) {
    if (block.is_bridge) {
      add_vertex(TreeVertexType::Rigid, block.vertices);
      continue;
    }
    const std::vector<int>& verts = block.vertices;  // ascending; local id = position
    const MetricGraph local = induced_subgraph(g, verts);
    std::vector<char> excluded(verts.size(), 0);
    for (size_t i = 0; i < verts.size(); ++i)
      if (is_cut(verts[i])) excluded[i] = 1;
    const PairClassification cls = classify_pairs_excluding(local, excluded);

    std::vector<std::vector<int>> necklaces_global;
    for (const auto& nk : cls.necklaces) {
      std::vector<int> set;
      for (int v : nk) set.push_back(verts[v]);
      necklaces_global.push_back(set);
      add_vertex(TreeVertexType::Necklace, std::move(set));
    }

    std::vector<std::vector<int>> pair_sets;
    for (size_t i = 0; i < cls.pairs.size(); ++i) {
      if (cls.crossing_class[i] >= 0) continue;  // necklace material, not a tree vertex
      const int a = verts[cls.pairs[i].first];
      const int b = verts[cls.pairs[i].second];
      pair_sets.push_back({a, b});
      add_vertex(TreeVertexType::Pair, {a, b});
    }

    for (const auto& clique : maximal_inseparable_sets_excluding(local, excluded)) {
      std::vector<int> set;
      for (int v : clique) set.push_back(verts[v]);
      const bool swallowed =
          std::any_of(necklaces_global.begin(), necklaces_global.end(),
                      [&](const std::vector<int>& nk) { return subset_of(set, nk); }) ||
          std::any_of(pair_sets.begin(), pair_sets.end(),
                      [&](const std::vector<int>& ps) { return ps == set; });
      if (!swallowed) add_vertex(TreeVertexType::Rigid, std::move(set));
    }
  }

  std::sort(tree.vertices.begin(), tree.vertices.end(),
            [](const CombinedTree::Vertex& a, const CombinedTree::Vertex& b) {
              if (type_rank(a.type) != type_rank(b.type))
                return type_rank(a.type) < type_rank(b.type);
              return a.set < b.set;
            });

  // An edge joins a separator to a class piece glued along it, so the whole
  // separator must sit inside the class set. Mere intersection is too loose:
  // two pairs sharing one vertex would chain class pieces into cycles.
  for (int i = 0; i < static_cast<int>(tree.vertices.size()); ++i) {
    const auto& vi = tree.vertices[i];
    const bool i_sep = vi.type == TreeVertexType::CutPoint || vi.type == TreeVertexType::Pair;
    for (int j = i + 1; j < static_cast<int>(tree.vertices.size()); ++j) {
      const auto& vj = tree.vertices[j];
      const bool j_sep = vj.type == TreeVertexType::CutPoint || vj.type == TreeVertexType::Pair;
      if (i_sep == j_sep) continue;  // edges join separator to class only
      const auto& sep = i_sep ? vi.set : vj.set;
      const auto& cls = i_sep ? vj.set : vi.set;
      if (subset_of(sep, cls)) tree.edges.emplace_back(i, j);
    }
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

std::vector<std::vector<int>> graph_automorphisms(const MetricGraph& g) {
  const int n = g.num_vertices();
  if (n > 8) throw std::invalid_argument("automorphisms: brute force is limited to n <= 8");
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i;
  std::vector<std::vector<int>> out;
  do {
    if (is_automorphism(g, sigma)) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

bool is_automorphism(const MetricGraph& g, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != g.num_vertices()) return false;
  std::vector<char> hit(g.num_vertices(), 0);
  for (int v : sigma) {
    if (v < 0 || v >= g.num_vertices() || hit[v]) return false;
    hit[v] = 1;
  }
  for (const auto& [u, v] : g.edges())
    if (!g.has_edge(sigma[u], sigma[v])) return false;
  return true;
}

TreeMap induced_tree_map(const CombinedTree& t, const std::vector<int>& sigma) {
  TreeMap out;
  std::map<std::pair<int, std::vector<int>>, int> lookup;
  for (int i = 0; i < static_cast<int>(t.vertices.size()); ++i)
    lookup[{type_rank(t.vertices[i].type), t.vertices[i].set}] = i;

  out.vertex_image.assign(t.vertices.size(), -1);
  std::vector<char> used(t.vertices.size(), 0);
  for (int i = 0; i < static_cast<int>(t.vertices.size()); ++i) {
    std::vector<int> image;
    for (int v : t.vertices[i].set) {
      if (v < 0 || v >= static_cast<int>(sigma.size())) return out;
      image.push_back(sigma[v]);
    }
    std::sort(image.begin(), image.end());
    auto it = lookup.find({type_rank(t.vertices[i].type), image});
    if (it == lookup.end() || used[it->second]) return out;
    used[it->second] = 1;
    out.vertex_image[i] = it->second;
  }
  const std::set<std::pair<int, int>> edge_set(t.edges.begin(), t.edges.end());
  for (const auto& [a, b] : t.edges) {
    int x = out.vertex_image[a], y = out.vertex_image[b];
    if (x > y) std::swap(x, y);
    if (edge_set.find({x, y}) == edge_set.end()) return out;
  }
  out.valid = true;
  return out;
}

}  // namespace cusplab
