#pragma once

#include <map>
#include <optional>
#include <string>

#include "tropsatz/game.hpp"
#include "tropsatz/lp.hpp"
#include "tropsatz/poly.hpp"

namespace tropsatz {

/// Brute-force decision straight from the root definitions: enumerate the
/// tying monomial choices per polynomial (and, over R with infinity, the
/// subset of coordinates sent to infinity) and test exact linear
/// feasibility. Desk-scale sizes only.
std::optional<Point> oracle_solve(const PolySystem& F);

/// Positional-strategy enumeration; classification per start vertex from
/// the column player's perspective: +1 win, 0 draw, -1 loss.
struct GameClassification {
  std::vector<int> col_class, row_class;
};
GameClassification oracle_game(const GameGraph& G);

/// The paper's example families and their expected facts.
struct Fixture {
  std::string name;
  PolySystem system;
  bool has_root = false;
  long explicit_degree = -1;  // Macaulay degree of the explicit assignment
  // Explicit Macaulay assignment: finite coordinates by exponent, absent
  // means infinity.
  std::map<Exponent, Rat> explicit_solution;
};

/// Names: lmp, lmp_minplus (params n, d); inf_family, inf_family_minplus
/// (params n >= 2, d >= 2); stepped_pyramid, stripes (param N).
Fixture generate_fixture(const std::string& name,
                         const std::map<std::string, long>& params);

}  // namespace tropsatz
