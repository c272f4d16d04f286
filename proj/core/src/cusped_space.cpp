#include "cusplab/cusped_space.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cusplab/rational.hpp"

namespace cusplab {

namespace {

// Base graph of one coset piece: members connected by right multiplication
// with a peripheral generator (the coset's own word metric). Falls back to
// the subgraph induced on the ball when that graph is disconnected, which
// happens when the ball clips the coset badly.
MetricGraph make_piece_base(const CayleyBall& ball, const GroupModel& m,
                            const PeripheralSpec& spec, const std::vector<int>& members,
                            bool* intrinsic) {
  std::map<int, int> local;
  for (int i = 0; i < static_cast<int>(members.size()); ++i) local[members[i]] = i;

  MetricGraph base(static_cast<int>(members.size()));
  for (const std::string& text : spec.generator_words) {
    const Word gen = m.normal_form(m.parse_word(text));
    if (gen.empty()) continue;
    for (int i = 0; i < static_cast<int>(members.size()); ++i) {
      for (const Word& step : {gen, m.inverse(gen)}) {
        const int img = ball.find(m, m.multiply(ball.words[members[i]], step));
        if (img < 0) continue;
        auto it = local.find(img);
        if (it != local.end() && it->second != i) base.add_edge(i, it->second);
      }
    }
  }
  if (is_connected(base)) {
    *intrinsic = true;
    return base;
  }
  *intrinsic = false;
  return induced_subgraph(ball.graph, members);
}

int base_diameter(const MetricGraph& base) {
  const DistanceMatrix d = distance_matrix(base);
  int diam = 0;
  for (int i = 0; i < d.n(); ++i)
    for (int j = i + 1; j < d.n(); ++j)
      if (d.reachable(i, j)) diam = std::max(diam, d.at(i, j));
  return diam;
}

}  // namespace

int CuspedSpace::piece_vertex(int piece, int t, int level) const {
  const Piece& p = pieces.at(piece);
  if (t < 0 || t >= static_cast<int>(p.members.size()))
    throw std::invalid_argument("cusped space: base index out of range");
  if (level < 0 || level > max_depth)
    throw std::invalid_argument("cusped space: level out of range");
  if (level == 0) return p.members[t];
  return p.first_vertex + (level - 1) * static_cast<int>(p.members.size()) + t;
}

int CuspedSpace::base_index_of(int v) const {
  if (v < 0 || v >= graph.num_vertices() || depth[v] == 0)
    throw std::invalid_argument("cusped space: not a horoball-interior vertex");
  const Piece& p = pieces[horoball_of[v]];
  return (v - p.first_vertex) % static_cast<int>(p.members.size());
}

MetricGraph CuspedSpace::piece_base_graph(int piece) const {
  const Piece& p = pieces.at(piece);
  MetricGraph base(static_cast<int>(p.members.size()));
  for (const auto& [i, j] : p.base_edges) base.add_edge(i, j);
  return base;
}

CuspedSpace build_cusped_space(const CayleyBall& ball, const GroupModel& m,
                               const std::vector<PeripheralSpec>& peripherals, int max_depth) {
  const int ball_n = ball.graph.num_vertices();
  if (ball_n == 0) throw std::invalid_argument("cusped space: empty ball");
  if (max_depth < -1) throw std::invalid_argument("cusped space: bad depth");

  CuspedSpace x;
  x.cayley_size = ball_n;

  // coset pieces, peripheral by peripheral, each list already in canonical
  // representative order
  std::vector<MetricGraph> bases;
  for (const PeripheralSpec& spec : peripherals) {
    const CosetPieces pieces = coset_pieces(ball, m, spec);
    for (int i = 0; i < static_cast<int>(pieces.members.size()); ++i) {
      CuspedSpace::Piece piece;
      piece.peripheral = spec.name;
      piece.rep = pieces.rep_word[i];
      piece.members = pieces.members[i];
      bool intrinsic = true;
      MetricGraph base = make_piece_base(ball, m, spec, piece.members, &intrinsic);
      piece.intrinsic = intrinsic;
      piece.base_edges = base.edges();
      x.pieces.push_back(std::move(piece));
      bases.push_back(std::move(base));
    }
  }

  if (max_depth < 0) {
    int diam = 0;
    for (const MetricGraph& b : bases) diam = std::max(diam, base_diameter(b));
    max_depth = x.pieces.empty() ? 0 : default_max_depth(diam);
  }
  x.max_depth = max_depth;

  int total = ball_n;
  for (auto& piece : x.pieces) {
    piece.first_vertex = max_depth > 0 ? total : -1;
    total += static_cast<int>(piece.members.size()) * max_depth;
  }

  x.graph = MetricGraph(total);
  x.depth.assign(total, 0);
  x.horoball_of.assign(total, -1);
  for (const auto& [u, v] : ball.graph.edges()) x.graph.add_edge(u, v);
  for (int v = 0; v < ball_n; ++v)
    if (const std::string* l = ball.graph.label(v)) x.graph.set_label(v, *l);

  for (int pi = 0; pi < static_cast<int>(x.pieces.size()); ++pi) {
    const CuspedSpace::Piece& piece = x.pieces[pi];
    const int size = static_cast<int>(piece.members.size());
    const DistanceMatrix d = distance_matrix(bases[pi]);

    for (int level = 1; level <= max_depth; ++level) {
      const long long threshold = level < 62 ? (1LL << level) : 0x7fffffffffffffffLL;
      for (int t = 0; t < size; ++t) {
        const int v = x.piece_vertex(pi, t, level);
        x.depth[v] = level;
        x.horoball_of[v] = pi;
        const std::string* l = ball.graph.label(piece.members[t]);
        x.graph.set_label(v, "(" + (l ? *l : std::to_string(piece.members[t])) + "," +
                                 std::to_string(level) + ")");
        x.graph.add_edge(x.piece_vertex(pi, t, level - 1), v);  // vertical
        for (int t2 = t + 1; t2 < size; ++t2)
          if (d.reachable(t, t2) && d.at(t, t2) <= threshold)
            x.graph.add_edge(v, x.piece_vertex(pi, t2, level));
      }
    }
    // depth-0 copy of the base metric (coset edges may not be ball edges,
    // e.g. a cyclic peripheral generated by a long word)
    for (const auto& [i, j] : piece.base_edges)
      x.graph.add_edge(piece.members[i], piece.members[j]);
  }
  return x;
}

std::vector<PathSegment> decompose_path(const CuspedSpace& x, const std::vector<int>& path) {
  if (path.empty()) throw std::invalid_argument("path decomposition: empty path");
  for (int v : path)
    if (v < 0 || v >= x.graph.num_vertices())
      throw std::invalid_argument("path decomposition: vertex out of range");
  for (size_t i = 0; i + 1 < path.size(); ++i)
    if (!x.graph.has_edge(path[i], path[i + 1]))
      throw std::invalid_argument("path decomposition: consecutive vertices not adjacent");

  const int n = static_cast<int>(path.size());
  std::vector<PathSegment> out;
  int i = 0;
  while (i < n) {
    if (x.depth[path[i]] == 0) {
      int j = i;
      while (j + 1 < n && x.depth[path[j + 1]] == 0) ++j;
      out.push_back({false, i, j});
      i = j + 1;
    } else {
      // excursion: runs from the previous depth-0 junction (if any) to the
      // next one, sharing those endpoints
      const int first = out.empty() ? i : out.back().last;
      int j = i;
      while (j + 1 < n && x.depth[path[j + 1]] != 0) ++j;
      const int last = j + 1 < n ? j + 1 : j;
      out.push_back({true, first, last});
      i = j + 1;
    }
  }
  return out;
}

ConedSpace build_coned_space(const CayleyBall& ball, const GroupModel& m,
                             const std::vector<PeripheralSpec>& peripherals) {
  const int ball_n = ball.graph.num_vertices();
  if (ball_n == 0) throw std::invalid_argument("coned space: empty ball");

  ConedSpace x;
  x.cayley_size = ball_n;
  x.first_cone = ball_n;
  for (const PeripheralSpec& spec : peripherals) {
    const CosetPieces pieces = coset_pieces(ball, m, spec);
    for (int i = 0; i < static_cast<int>(pieces.members.size()); ++i)
      x.cones.push_back({spec.name, pieces.rep_word[i], pieces.members[i]});
  }

  x.graph = MetricGraph(ball_n + static_cast<int>(x.cones.size()));
  for (const auto& [u, v] : ball.graph.edges()) x.graph.add_edge(u, v);
  for (int v = 0; v < ball_n; ++v)
    if (const std::string* l = ball.graph.label(v)) x.graph.set_label(v, *l);
  for (int c = 0; c < static_cast<int>(x.cones.size()); ++c) {
    const int cv = x.cone_vertex(c);
    x.graph.set_label(cv, "cone(" + x.cones[c].rep + "|" + x.cones[c].peripheral + ")");
    for (int member : x.cones[c].members) x.graph.add_edge(cv, member);
  }
  return x;
}

namespace {

void count_paths_to(const MetricGraph& g, int target, int cur, int edges_used, int max_edges,
                    std::vector<char>& visited, int* count) {
  for (int w : g.neighbors(cur)) {
    if (w == target) {
      if (edges_used + 1 >= 2) ++(*count);
      continue;
    }
    if (!visited[w] && edges_used + 1 <= max_edges - 1) {
      visited[w] = 1;
      count_paths_to(g, target, w, edges_used + 1, max_edges, visited, count);
      visited[w] = 0;
    }
  }
}

}  // namespace

int fineness_profile(const MetricGraph& g, int u, int v, int n) {
  if (n > 12) throw std::invalid_argument("fineness profile: cycle length budget is 12");
  if (!g.has_edge(u, v)) throw std::invalid_argument("fineness profile: edge not in graph");
  if (n < 3) return 0;
  // cycles through {u,v} correspond to simple paths v -> u of 2..n-1 edges
  // that skip the edge itself (the length-1 step at the start)
  std::vector<char> visited(g.num_vertices(), 0);
  visited[v] = 1;
  int count = 0;
  for (int w : g.neighbors(v)) {
    if (w == u) continue;  // the edge {u,v} itself
    visited[w] = 1;
    count_paths_to(g, u, w, 1, n - 1, visited, &count);
    visited[w] = 0;
  }
  return count;
}

}  // namespace cusplab
