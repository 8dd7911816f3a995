#pragma once

#include <optional>
#include <set>

#include "tropsatz/game.hpp"
#include "tropsatz/linsys.hpp"

namespace tropsatz {

enum class FinitenessFlavor { FinAll, FinSome };

/// Exactly one of the two alternatives holds for a given input; the returned
/// branch always carries a witness that passes the matching checker.
struct DualityOutcome {
  bool primal = false;
  Point witness;
};

/// Min-plus linear duality. FinAll: either x with A(x)x <= B(x)x and x_i
/// finite for all i in S, or y with B^T(x)y < A^T(x)y and (B^T(x)y)_i finite
/// for some i in S. FinSome swaps the "all"/"some" roles.
DualityOutcome minplus_alternative(const TropMatrix& A, const TropMatrix& B,
                                   const std::set<int>& S,
                                   FinitenessFlavor flavor);

bool verify_minplus_primal(const TropMatrix& A, const TropMatrix& B,
                           const Point& x, const std::set<int>& S,
                           FinitenessFlavor flavor);
bool verify_minplus_dual(const TropMatrix& A, const TropMatrix& B,
                         const Point& y, const std::set<int>& S,
                         FinitenessFlavor flavor);

/// Tropical linear duality. Primal: x solving A(x)x with the S-finiteness of
/// the chosen flavor. Dual: z such that every row of A^T(x)z has a unique
/// finite minimum or is infinite, finite minima of distinct rows sit in
/// distinct columns, and the flavor's finiteness condition holds on the
/// coordinates of A^T(x)z.
DualityOutcome tropical_alternative(const TropMatrix& A, const std::set<int>& S,
                                    FinitenessFlavor flavor);

bool verify_tropical_primal(const TropMatrix& A, const Point& x,
                            const std::set<int>& S, FinitenessFlavor flavor);
bool verify_tropical_dual(const TropMatrix& A, const Point& z,
                          const std::set<int>& S, FinitenessFlavor flavor);

}  // namespace tropsatz
