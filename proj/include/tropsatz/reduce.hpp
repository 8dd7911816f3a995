#pragma once

#include "tropsatz/poly.hpp"

namespace tropsatz {

/// Per polynomial f = min(l_1..l_m), emit for each i the equation
/// min(l_1..l_m) = min of the list with l_i removed; for a single-monomial f
/// the removed side is the empty tropical sum, the infinite polynomial. Same
/// variables, same degree, identical root set.
PolySystem tropical_to_minplus(const PolySystem& T);

struct MinPlusToTropical {
  PolySystem tropical;
  /// H(a): the embedding whose image carries the roots.
  Point embed(const Point& a) const;
  /// Left inverse on the image; nullopt off the image.
  std::optional<Point> project(const Point& b) const;
  int source_vars = 0;
  bool uses_pin = false;  // an extra pinned variable pair repairs constants
};

/// Doubled-variable translation: variables (x, x') with pair polynomials
/// x_i (+) x_i', plus per-equation families. Systems with constant monomials
/// get one extra variable pair (z, z') pinned to zero by z (+) z' and
/// z (+) 0, and constants are multiplied by z; bare constants cannot tie
/// with their own copy, which would lose roots.
MinPlusToTropical minplus_to_tropical(const PolySystem& A);

}  // namespace tropsatz
