#pragma once

#include <vector>

#include "tropsatz/poly.hpp"

namespace tropsatz {

/// Sparse matrix over the semiring: only finite entries are stored, absent
/// means infinity. Row entries are sorted by column.
struct TropMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, Rat>>> entries;

  TropMatrix() = default;
  TropMatrix(int m, int n) : rows(m), cols(n), entries(m) {}

  struct RowEval {
    ExtValue value;
    std::set<int> argmin;  // empty iff value infinite
  };

  void set(int i, int j, const Rat& v);
  ExtValue at(int i, int j) const;
  TropMatrix transpose() const;
  /// Row value min_j (a_ij + x_j) and its argmin columns.
  RowEval row_eval(int i, const Point& x) const;

  static TropMatrix dense(const std::vector<std::vector<ExtValue>>& d);
};

enum class Relation { Eq, Leq, Lt };

struct MinPlusSystem {
  TropMatrix lhs, rhs;
  Relation rel = Relation::Eq;
};

/// Every row's minimum attained at >= 2 columns or infinite.
bool check_tropical_solution(const TropMatrix& A, const Point& x);

/// Row-wise comparison under the declared relation; for Lt a row with both
/// sides infinite passes (the "inf < inf" convention).
bool check_minplus_solution(const MinPlusSystem& S, const Point& x);

/// [A;B] (x) y <= [B;A] (x) y, same solution set as A (x) y = B (x) y.
MinPlusSystem eq_to_ineq(const MinPlusSystem& S);

/// Stacked blocks (A + eps C_l) (x) x <= A (x) x for l = 1..cols; the
/// solution set equals the tropical solution set of A for every eps > 0.
MinPlusSystem tropical_to_minplus_linear(const TropMatrix& A, const Rat& eps);

struct NormalizedMatrix {
  TropMatrix matrix;
  std::vector<int> deleted_rows, deleted_cols;  // original indices
};

/// Delete rows and columns consisting entirely of infinity, recording the
/// deleted original indices.
NormalizedMatrix normalize(const TropMatrix& A);

/// A is m x (n+1) with the last column holding the constant terms; the
/// non-homogeneous system is A (x) (x, 0). The matrix is shared with the
/// homogeneous reading A (x) x'; these helpers move solutions between the
/// two forms.
Point homogenize_solution(const Point& x);  // append a 0 coordinate
/// Subtract the last coordinate (must be finite) and drop it.
std::optional<Point> dehomogenize_solution(const Point& xp);

}  // namespace tropsatz
