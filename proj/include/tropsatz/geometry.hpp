#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tropsatz/poly.hpp"

namespace tropsatz {

/// Generator of an extended Newton polytope: a rational point in R^(n+1)
/// whose last coordinate is the height. The represented set is the convex
/// hull of the generators together with all points vertically above it.
struct LiftedPoint {
  std::vector<Rat> x;  // n horizontal coordinates, then the height
  std::pair<bool, bool> color{false, false};

  bool operator==(const LiftedPoint& o) const { return x == o.x; }
  bool operator<(const LiftedPoint& o) const { return x < o.x; }
};

struct LiftedPointSet {
  int n = 0;  // horizontal dimension
  std::vector<LiftedPoint> gens;
};

LiftedPointSet newton(const TropicalPolynomial& f);
LiftedPointSet newton(const MinPlusPolynomial& p);

/// P0 = (n+2) (P1 + ... + Pk): the full pairwise-sum generator set (deduped).
LiftedPointSet envelope(const std::vector<LiftedPointSet>& parts);
/// The same polytope with generators reduced to vertices after every
/// Minkowski step; used on large sums where the raw product explodes.
LiftedPointSet envelope_pruned(const std::vector<LiftedPointSet>& parts);

/// Drop generators that are not vertices of conv(gens) + upward rays.
LiftedPointSet prune_to_vertices(const LiftedPointSet& P);

/// Is q in conv(gens) + upward rays?
bool contains(const LiftedPointSet& P, const std::vector<Rat>& q);

/// Exact height of the lower envelope over the horizontal point xh, or
/// nullopt outside the projection.
std::optional<Rat> bottom(const LiftedPointSet& P, const std::vector<Rat>& xh);
std::optional<Rat> bottom(const LiftedPointSet& P, const Exponent& I);

struct Face {
  std::vector<int> gen_indices;  // indices into P.gens
  int dim = 0;                   // affine dimension
};

/// The inclusion-minimal face of P containing q (q must lie in P).
Face minimal_face(const LiftedPointSet& P, const std::vector<Rat>& q);
bool face_is_whole_set(const LiftedPointSet& P, const Face& f);

/// A non-vertical supporting hyperplane through the face Q: slope s and
/// offset c with <s,v> + c <= h for every generator (v,h), equality on Q.
/// Slopes are chosen coordinate by coordinate: minimize, fall back to
/// maximize when unbounded, else 0. Nullopt when Q admits only vertical
/// supports.
std::optional<std::pair<std::vector<Rat>, Rat>> support_hyperplane(
    const LiftedPointSet& P, const Face& Q);

/// Translation alpha such that P_j + alpha lies in P0 = (n+2)(sum of parts),
/// contains the bottom point x, and meets the boundary of P0 only in faces
/// through x. Nullopt when the pivot-vertex decomposition fails (the caller
/// treats it as a retry signal).
std::optional<std::vector<Rat>> touching_translation(
    const std::vector<LiftedPointSet>& parts, int j,
    const std::vector<Rat>& x);

/// Checker for the touching conditions of the finite set G(phi_j) + alpha
/// against P0 at x.
bool touches(const LiftedPointSet& Pj, const std::vector<Rat>& alpha,
             const LiftedPointSet& P0, const std::vector<Rat>& x);

/// Root extraction from a Macaulay solution: pick the singular point of
/// (phi_a, bottom of P0) whose minimal face has maximal dimension, take a
/// supporting hyperplane through that face, and read the root off the
/// negated slope. Nullopt when there is no singular point; throws when the
/// face admits only vertical supports.
std::optional<Point> extract_root(const std::map<Exponent, Rat>& phi_a,
                                  const LiftedPointSet& P0);

}  // namespace tropsatz
