#include "cusplab/qi.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cusplab {

VertexMap VertexMap::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  return VertexMap(std::move(img));
}

bool VertexMap::total() const {
  return std::all_of(image.begin(), image.end(), [](int v) { return v >= 0; });
}

Rational minimal_additive(const VertexMap& f, const DistanceMatrix& dx, const DistanceMatrix& dy,
                          const Rational& k) {
  return minimal_additive_filtered(f, dx, dy, k, [](int, int) { return true; });
}

Rational minimal_additive_filtered(const VertexMap& f, const DistanceMatrix& dx,
                                   const DistanceMatrix& dy, const Rational& k,
                                   const std::function<bool(int, int)>& include_pair) {
  if (k < Rational(1)) throw std::invalid_argument("minimal additive: k must be >= 1");
  if (f.size() != dx.n()) throw std::invalid_argument("minimal additive: map size mismatch");
  Rational c(0);
  for (int u = 0; u < f.size(); ++u) {
    if (!f.defined(u)) continue;
    if (f[u] >= dy.n()) throw std::invalid_argument("minimal additive: image out of range");
    for (int v = u + 1; v < f.size(); ++v) {
      if (!f.defined(v) || !include_pair(u, v)) continue;
      if (!dx.reachable(u, v) || !dy.reachable(f[u], f[v]))
        throw std::domain_error("minimal additive: unreachable pair");
      const Rational dxr(dx.at(u, v));
      const Rational dyr(dy.at(f[u], f[v]));
      c = rational_max(c, dyr - k * dxr);   // upper bound side
      c = rational_max(c, dxr / k - dyr);   // lower bound side
    }
  }
  return c;
}

int coarse_density(const VertexMap& f, const DistanceMatrix& dy) {
  std::vector<int> image;
  for (int v = 0; v < f.size(); ++v)
    if (f.defined(v)) image.push_back(f[v]);
  if (image.empty()) throw std::domain_error("coarse density: empty image");
  int worst = 0;
  for (int y = 0; y < dy.n(); ++y) {
    int best = -1;
    for (int p : image) {
      if (!dy.reachable(y, p)) continue;
      if (best < 0 || dy.at(y, p) < best) best = dy.at(y, p);
    }
    if (best < 0) throw std::domain_error("coarse density: vertex unreachable from image");
    worst = std::max(worst, best);
  }
  return worst;
}

VertexMap extend_to_horoball(const VertexMap& q, const Horoball& src, const Horoball& dst) {
  if (src.max_depth != dst.max_depth)
    throw std::invalid_argument("horoball extension: depth mismatch");
  if (q.size() != src.base_size)
    throw std::invalid_argument("horoball extension: base map size mismatch");
  if (!q.total()) throw std::invalid_argument("horoball extension: base map must be total");
  for (int t = 0; t < q.size(); ++t)
    if (q[t] >= dst.base_size)
      throw std::invalid_argument("horoball extension: image out of range");

  std::vector<int> img(src.graph.num_vertices(), -1);
  for (int v = 0; v < src.graph.num_vertices(); ++v)
    img[v] = dst.vertex_at(q[src.base_of(v)], src.level_of(v));
  return VertexMap(std::move(img));
}

VertexMap extend_to_cusped(const VertexMap& q, const CosetCorrespondence& corr,
                           const std::vector<VertexMap>& base_maps, const CuspedSpace& X,
                           const CuspedSpace& Y) {
  if (X.max_depth != Y.max_depth)
    throw std::invalid_argument("cusped extension: depth mismatch");
  if (q.size() != X.cayley_size)
    throw std::invalid_argument("cusped extension: ball map size mismatch");
  if (corr.target_of.size() != X.pieces.size() || base_maps.size() != X.pieces.size())
    throw std::invalid_argument("cusped extension: one correspondence entry per piece required");
  for (size_t i = 0; i < X.pieces.size(); ++i) {
    const int tgt = corr.target_of[i];
    if (tgt < 0 || tgt >= static_cast<int>(Y.pieces.size()))
      throw std::invalid_argument("cusped extension: target piece out of range");
    const auto& bm = base_maps[i];
    if (bm.size() != static_cast<int>(X.pieces[i].members.size()) || !bm.total())
      throw std::invalid_argument("cusped extension: base map must be total on the piece");
    for (int t = 0; t < bm.size(); ++t)
      if (bm[t] >= static_cast<int>(Y.pieces[tgt].members.size()))
        throw std::invalid_argument("cusped extension: base map image out of range");
  }

  std::vector<int> img(X.graph.num_vertices(), -1);
  for (int v = 0; v < X.cayley_size; ++v) img[v] = q.defined(v) ? q[v] : -1;
  for (int v = X.cayley_size; v < X.graph.num_vertices(); ++v) {
    const int piece = X.horoball_of[v];
    const int t = X.base_index_of(v);
    img[v] = Y.piece_vertex(corr.target_of[piece], base_maps[piece][t], X.depth[v]);
  }
  return VertexMap(std::move(img));
}

namespace {

BoundReport check_bound_with_safety(const VertexMap& Q, const MetricGraph& gx,
                                    const MetricGraph& gy, const Rational& lambda,
                                    const TruncationSafety* sx, const TruncationSafety* sy,
                                    const DistanceMatrix* dx_plain,
                                    const DistanceMatrix* dy_plain) {
  BoundReport report;
  report.lambda = lambda;
  report.worst_ratio = Rational(0);
  const DistanceMatrix& dx = sx ? sx->full : *dx_plain;
  const DistanceMatrix& dy = sy ? sy->full : *dy_plain;
  for (int u = 0; u < gx.num_vertices(); ++u) {
    if (!Q.defined(u)) {
      report.pairs_skipped += gx.num_vertices() - u - 1;
      continue;
    }
    for (int v = u + 1; v < gx.num_vertices(); ++v) {
      if (!Q.defined(v) || (sx && !sx->safe(u, v)) || (sy && !sy->safe(Q[u], Q[v]))) {
        ++report.pairs_skipped;
        continue;
      }
      ++report.pairs_checked;
      if (!dx.reachable(u, v) || !dy.reachable(Q[u], Q[v])) {
        report.pass = false;
        report.saw_unreachable = true;
        report.witness = {u, v};
        continue;
      }
      const Rational allowed = Rational(3) * lambda * Rational(dx.at(u, v)) + lambda;
      const Rational ratio = Rational(dy.at(Q[u], Q[v])) / allowed;
      if (ratio > report.worst_ratio) {
        report.worst_ratio = ratio;
        report.witness = {u, v};
      }
      if (ratio > Rational(1)) report.pass = false;
    }
  }
  return report;
}

}  // namespace

BoundReport check_cusped_bound(const VertexMap& Q, const CuspedSpace& X, const CuspedSpace& Y,
                               const Rational& lambda) {
  if (Q.size() != X.graph.num_vertices())
    throw std::invalid_argument("cusped bound: map size mismatch");
  if (lambda < Rational(1)) throw std::invalid_argument("cusped bound: lambda must be >= 1");
  const TruncationSafety sx = truncation_safety(X.graph, X.depth, X.max_depth);
  const TruncationSafety sy = truncation_safety(Y.graph, Y.depth, Y.max_depth);
  return check_bound_with_safety(Q, X.graph, Y.graph, lambda, &sx, &sy, nullptr, nullptr);
}

VertexMap assemble_cone_map(const VertexMap& q, const CosetCorrespondence& corr,
                            const ConedSpace& X, const ConedSpace& Y) {
  if (q.size() != X.cayley_size)
    throw std::invalid_argument("cone check: ball map size mismatch");
  if (corr.target_of.size() != X.cones.size())
    throw std::invalid_argument("cone check: one correspondence entry per cone required");
  std::vector<int> img(X.graph.num_vertices(), -1);
  for (int v = 0; v < X.cayley_size; ++v) img[v] = q.defined(v) ? q[v] : -1;
  for (size_t c = 0; c < X.cones.size(); ++c) {
    const int tgt = corr.target_of[c];
    if (tgt < 0 || tgt >= static_cast<int>(Y.cones.size()))
      throw std::invalid_argument("cone check: target cone out of range");
    img[X.cone_vertex(static_cast<int>(c))] = Y.cone_vertex(tgt);
  }
  return VertexMap(std::move(img));
}

BoundReport cone_extension_check(const VertexMap& q, const CosetCorrespondence& corr,
                                 const ConedSpace& X, const ConedSpace& Y,
                                 const Rational& lambda) {
  if (lambda < Rational(1)) throw std::invalid_argument("cone check: lambda must be >= 1");
  const VertexMap Q = assemble_cone_map(q, corr, X, Y);
  const DistanceMatrix dx = distance_matrix(X.graph);
  const DistanceMatrix dy = distance_matrix(Y.graph);
  return check_bound_with_safety(Q, X.graph, Y.graph, lambda, nullptr, nullptr, &dx, &dy);
}

InducedCorrespondence induce_correspondence(const VertexMap& q, const CuspedSpace& X,
                                            const CuspedSpace& Y) {
  if (q.size() != X.cayley_size)
    throw std::invalid_argument("correspondence: ball map size mismatch");

  // target lookup: ball vertex -> (piece, base index) per peripheral name
  std::map<std::pair<std::string, int>, std::pair<int, int>> where;
  for (int p = 0; p < static_cast<int>(Y.pieces.size()); ++p)
    for (int t = 0; t < static_cast<int>(Y.pieces[p].members.size()); ++t)
      where[{Y.pieces[p].peripheral, Y.pieces[p].members[t]}] = {p, t};

  InducedCorrespondence out;
  for (const CuspedSpace::Piece& piece : X.pieces) {
    int target = -1;
    std::vector<int> bm(piece.members.size(), -1);
    for (int t = 0; t < static_cast<int>(piece.members.size()); ++t) {
      const int member = piece.members[t];
      if (!q.defined(member))
        throw std::runtime_error("correspondence: map undefined on a coset member");
      auto it = where.find({piece.peripheral, q[member]});
      if (it == where.end())
        throw std::runtime_error(
            "correspondence: image leaves every target coset; supply it explicitly");
      if (target < 0) target = it->second.first;
      if (target != it->second.first)
        throw std::runtime_error(
            "correspondence: image splits across cosets; supply it explicitly");
      bm[t] = it->second.second;
    }
    out.corr.target_of.push_back(target);
    out.base_maps.emplace_back(std::move(bm));
  }
  return out;
}

Rational measure_cusped_lambda(const VertexMap& q, const CosetCorrespondence& corr,
                               const std::vector<VertexMap>& base_maps, const CuspedSpace& X,
                               const CuspedSpace& Y) {
  if (corr.target_of.size() != X.pieces.size() || base_maps.size() != X.pieces.size())
    throw std::invalid_argument("lambda measurement: one entry per piece required");

  // depth-0 metrics (ball edges plus coset base edges)
  std::vector<int> ball_x(X.cayley_size), ball_y(Y.cayley_size);
  for (int i = 0; i < X.cayley_size; ++i) ball_x[i] = i;
  for (int i = 0; i < Y.cayley_size; ++i) ball_y[i] = i;
  const DistanceMatrix dx = distance_matrix(induced_subgraph(X.graph, ball_x));
  const DistanceMatrix dy = distance_matrix(induced_subgraph(Y.graph, ball_y));

  Rational worst(1);
  worst = rational_max(worst, minimal_additive(q, dx, dy, Rational(1)));

  Rational offset(0);
  for (size_t i = 0; i < X.pieces.size(); ++i) {
    const int tgt = corr.target_of[i];
    if (tgt < 0 || tgt >= static_cast<int>(Y.pieces.size()))
      throw std::invalid_argument("lambda measurement: target piece out of range");
    const DistanceMatrix bx = distance_matrix(X.piece_base_graph(static_cast<int>(i)));
    const DistanceMatrix by = distance_matrix(Y.piece_base_graph(tgt));
    worst = rational_max(worst, minimal_additive(base_maps[i], bx, by, Rational(1)));

    // offset between where q sends the members and the matched coset
    for (int member : X.pieces[i].members) {
      if (!q.defined(member)) continue;
      int best = -1;
      for (int s : Y.pieces[tgt].members) {
        if (!dy.reachable(q[member], s)) continue;
        if (best < 0 || dy.at(q[member], s) < best) best = dy.at(q[member], s);
      }
      if (best < 0) throw std::domain_error("lambda measurement: image cut off from coset");
      offset = rational_max(offset, Rational(best));
    }
  }
  return worst + Rational(2) * offset;
}

}  // namespace cusplab
