#pragma once

#include <array>
#include <functional>
#include <vector>

#include "cusplab/cusped_space.hpp"
#include "cusplab/horoball.hpp"
#include "cusplab/metric_graph.hpp"
#include "cusplab/rational.hpp"

namespace cusplab {

// Partial vertex map between two graphs; -1 marks "undefined".
struct VertexMap {
  std::vector<int> image;

  VertexMap() = default;
  explicit VertexMap(std::vector<int> img) : image(std::move(img)) {}
  static VertexMap identity(int n);

  int size() const { return static_cast<int>(image.size()); }
  bool defined(int v) const { return image[v] >= 0; }
  int operator[](int v) const { return image[v]; }
  bool total() const;
};

// Smallest additive constant c >= 0 making f a (k, c)-quasi-isometric
// embedding on the pairs where it is defined:
//   (1/k) dX(u,v) - c <= dY(fu,fv) <= k dX(u,v) + c.
// Requires k >= 1; any unreachable pair involved is a domain error.
Rational minimal_additive(const VertexMap& f, const DistanceMatrix& dx, const DistanceMatrix& dy,
                          const Rational& k);

// Same, restricted to pairs accepted by the filter (used to quantify only
// over truncation-safe pairs).
Rational minimal_additive_filtered(const VertexMap& f, const DistanceMatrix& dx,
                                   const DistanceMatrix& dy, const Rational& k,
                                   const std::function<bool(int, int)>& include_pair);

// Coarse density of the image: max over codomain vertices of the distance to
// the nearest image point. Empty image or unreachable vertex: domain error.
int coarse_density(const VertexMap& f, const DistanceMatrix& dy);

// Extension of a base map q to horoballs: (t, n) -> (q t, n). Both horoballs
// must share the same max_depth and q must be total on the base.
VertexMap extend_to_horoball(const VertexMap& q, const Horoball& src, const Horoball& dst);

// Per-horoball coset matching: target_of[i] is the target-space piece index
// of source piece i.
struct CosetCorrespondence {
  std::vector<int> target_of;
};

// Assembles a map on the whole cusped space: q on the ball, and on each
// horoball interior the per-piece base map shifted level-by-level. At depth
// zero q wins over the base maps. Depths must match; base maps are
// base-index to base-index and must be total.
VertexMap extend_to_cusped(const VertexMap& q, const CosetCorrespondence& corr,
                           const std::vector<VertexMap>& base_maps, const CuspedSpace& X,
                           const CuspedSpace& Y);

// One-directional distance bound d2(Qx, Qy) <= 3 L d1(x,y) + L, quantified
// over pairs that are truncation-safe on both sides. Reports rather than
// throws: the worst ratio and its witness pair are always filled in.
struct BoundReport {
  bool pass = true;
  Rational lambda;
  Rational worst_ratio;  // max of d2 / (3 L d1 + L); > 1 means violated
  std::array<int, 2> witness{-1, -1};
  long long pairs_checked = 0;
  long long pairs_skipped = 0;
  bool saw_unreachable = false;
};

BoundReport check_cusped_bound(const VertexMap& Q, const CuspedSpace& X, const CuspedSpace& Y,
                               const Rational& lambda);

// Map on a whole coned space: q on the ball, cone-to-cone by the
// correspondence.
VertexMap assemble_cone_map(const VertexMap& q, const CosetCorrespondence& corr,
                            const ConedSpace& X, const ConedSpace& Y);

// Same bound for coned spaces: every pair is checked (no truncation in a
// coned space).
BoundReport cone_extension_check(const VertexMap& q, const CosetCorrespondence& corr,
                                 const ConedSpace& X, const ConedSpace& Y, const Rational& lambda);

// Infers the correspondence when q maps every source piece inside a single
// target piece of the same peripheral (the exact-containment case, e.g. a
// generating-set change). Anything looser must be supplied explicitly.
struct InducedCorrespondence {
  CosetCorrespondence corr;
  std::vector<VertexMap> base_maps;
};

InducedCorrespondence induce_correspondence(const VertexMap& q, const CuspedSpace& X,
                                            const CuspedSpace& Y);

// Empirical multiplier for the cusped bound: additive constants of q (on the
// depth-0 metric) and of every base map (on the piece base metrics) at k = 1,
// plus twice the worst offset between image and matched coset.
Rational measure_cusped_lambda(const VertexMap& q, const CosetCorrespondence& corr,
                               const std::vector<VertexMap>& base_maps, const CuspedSpace& X,
                               const CuspedSpace& Y);

}  // namespace cusplab
