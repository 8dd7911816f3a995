#pragma once

#include <optional>
#include <set>
#include <vector>

#include "tropsatz/linsys.hpp"

namespace tropsatz {

/// Bipartite mean payoff game for A (x) x <= B (x) x. The column player
/// moves from row vertices along edges r_i -> c_j of weight -a_ij (present
/// iff a_ij is finite); the row player moves from column vertices along
/// edges c_j -> r_i of weight b_ij. A player stuck without moves loses
/// immediately.
struct GameGraph {
  int num_rows = 0, num_cols = 0;
  std::vector<std::vector<std::pair<int, Rat>>> row_adj;  // r_i: (j, a_ij)
  std::vector<std::vector<std::pair<int, Rat>>> col_adj;  // c_j: (i, b_ij)
};

GameGraph build_game(const MinPlusSystem& S);

/// Minimal budgets keeping the column player's account nonnegative forever:
/// the least fixed point of
///   e(r_i) = clamp0(min_k e(c_k) + a_ik)
///   e(c_j) = clamp0(max_i e(r_i) - b_ij)
/// with stuck column vertices at 0 and stuck row vertices at infinity.
/// Infinite exactly on the row player's winning positions.
struct CreditVector {
  std::vector<ExtValue> cols, rows;
};

CreditVector min_credits(const GameGraph& G);

/// Non-strict system A (x) x <= B (x) x: returns the credit vector as a
/// solution when e(c_i) is finite for all i in col_finite and e(r_j) finite
/// for all j in row_finite; nullopt otherwise. The returned point always
/// passes check_minplus_solution.
std::optional<Point> solve_nonstrict(const MinPlusSystem& S,
                                     const std::set<int>& col_finite,
                                     const std::set<int>& row_finite);

/// Strict system A (x) x < B (x) x, decided through the transformed energy
/// game with edge weights w -> V*w - 1 (V = vertex count); positional mean
/// payoff values of V-vertex games have denominator at most V, so the
/// transformed game is non-losing exactly on the winning positions of the
/// original.
std::optional<Point> solve_strict(const MinPlusSystem& S,
                                  const std::set<int>& col_finite,
                                  const std::set<int>& row_finite);

/// Finiteness pattern of the credit vector, plus the solution itself, for
/// callers that need "some coordinate finite" style conditions. rel selects
/// the non-strict or strict game.
struct GameAnalysis {
  Point solution;                // credit vector (cols), original units
  std::vector<bool> col_finite;  // per column
  std::vector<bool> row_finite;  // per row: j-th coord of A (x) x finite
};

GameAnalysis analyze_system(const MinPlusSystem& S);

/// Tropical system A (x) x: solves the stacked system
/// (A + eps C_l) (x) x <= A (x) x for all l at eps = 1 without materializing
/// the blocks (one game on rows+cols vertices with a top-two rule at row
/// vertices). Returns the credit solution together with the per-column
/// finiteness pattern; the solution always passes check_tropical_solution.
struct TropicalAnalysis {
  Point solution;
  std::vector<bool> col_finite;
};

TropicalAnalysis analyze_tropical(const TropMatrix& A);

/// Convenience wrapper: solution with x_i finite for all i in need_finite
/// (indices into columns), or nullopt.
std::optional<Point> solve_tropical(const TropMatrix& A,
                                    const std::set<int>& need_finite);

/// Debug dump of the game graph as an edge list.
std::string dump_game(const GameGraph& G);

}  // namespace tropsatz
