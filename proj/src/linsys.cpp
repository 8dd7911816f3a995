#include "tropsatz/linsys.hpp"

#include <algorithm>

namespace tropsatz {

void TropMatrix::set(int i, int j, const Rat& v) {
  auto& row = entries[i];
  auto it = std::lower_bound(
      row.begin(), row.end(), j,
      [](const std::pair<int, Rat>& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == j)
    it->second = v;
  else
    row.insert(it, {j, v});
}

ExtValue TropMatrix::at(int i, int j) const {
  const auto& row = entries[i];
  auto it = std::lower_bound(
      row.begin(), row.end(), j,
      [](const std::pair<int, Rat>& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == j) return ExtValue(it->second);
  return ExtValue::infinity();
}

TropMatrix TropMatrix::transpose() const {
  TropMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (const auto& [j, v] : entries[i]) t.entries[j].push_back({i, v});
  return t;
}

TropMatrix::RowEval TropMatrix::row_eval(int i, const Point& x) const {
  RowEval r;
  r.value = ExtValue::infinity();
  for (const auto& [j, a] : entries[i]) {
    ExtValue v = trop_mul(ExtValue(a), x.coords[j]);
    if (v < r.value) {
      r.value = v;
      r.argmin.clear();
    }
    if (v == r.value && v.is_finite()) r.argmin.insert(j);
  }
  return r;
}

TropMatrix TropMatrix::dense(const std::vector<std::vector<ExtValue>>& d) {
  TropMatrix m(static_cast<int>(d.size()),
               d.empty() ? 0 : static_cast<int>(d[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (d[i][j].is_finite()) m.entries[i].push_back({j, d[i][j].value()});
  return m;
}

bool check_tropical_solution(const TropMatrix& A, const Point& x) {
  if (static_cast<int>(x.size()) != A.cols)
    throw std::invalid_argument("check_tropical_solution: shape mismatch");
  for (int i = 0; i < A.rows; ++i) {
    TropMatrix::RowEval r = A.row_eval(i, x);
    if (r.value.is_finite() && r.argmin.size() < 2) return false;
  }
  return true;
}

bool check_minplus_solution(const MinPlusSystem& S, const Point& x) {
  if (S.lhs.rows != S.rhs.rows || S.lhs.cols != S.rhs.cols)
    throw std::invalid_argument("check_minplus_solution: shape mismatch");
  if (static_cast<int>(x.size()) != S.lhs.cols)
    throw std::invalid_argument("check_minplus_solution: shape mismatch");
  for (int i = 0; i < S.lhs.rows; ++i) {
    ExtValue l = S.lhs.row_eval(i, x).value;
    ExtValue r = S.rhs.row_eval(i, x).value;
    switch (S.rel) {
      case Relation::Eq:
        if (l != r) return false;
        break;
      case Relation::Leq:
        if (!(l <= r)) return false;
        break;
      case Relation::Lt:
        // if one side is finite the strict inequality must hold; both
        // infinite passes
        if (l.is_inf() && r.is_inf()) break;
        if (!(l < r)) return false;
        break;
    }
  }
  return true;
}

MinPlusSystem eq_to_ineq(const MinPlusSystem& S) {
  if (S.rel != Relation::Eq)
    throw std::invalid_argument("eq_to_ineq: relation must be Eq");
  MinPlusSystem out;
  out.rel = Relation::Leq;
  out.lhs = TropMatrix(2 * S.lhs.rows, S.lhs.cols);
  out.rhs = TropMatrix(2 * S.lhs.rows, S.lhs.cols);
  for (int i = 0; i < S.lhs.rows; ++i) {
    out.lhs.entries[i] = S.lhs.entries[i];
    out.rhs.entries[i] = S.rhs.entries[i];
    out.lhs.entries[S.lhs.rows + i] = S.rhs.entries[i];
    out.rhs.entries[S.lhs.rows + i] = S.lhs.entries[i];
  }
  return out;
}

MinPlusSystem tropical_to_minplus_linear(const TropMatrix& A, const Rat& eps) {
  if (eps <= 0)
    throw std::invalid_argument("tropical_to_minplus_linear: eps must be > 0");
  MinPlusSystem out;
  out.rel = Relation::Leq;
  out.lhs = TropMatrix(A.rows * A.cols, A.cols);
  out.rhs = TropMatrix(A.rows * A.cols, A.cols);
  for (int l = 0; l < A.cols; ++l) {
    for (int i = 0; i < A.rows; ++i) {
      int r = l * A.rows + i;
      out.rhs.entries[r] = A.entries[i];
      auto row = A.entries[i];
      for (auto& [j, v] : row)
        if (j == l) v += eps;
      out.lhs.entries[r] = std::move(row);
    }
  }
  return out;
}

NormalizedMatrix normalize(const TropMatrix& A) {
  NormalizedMatrix out;
  std::vector<bool> col_used(A.cols, false);
  for (int i = 0; i < A.rows; ++i)
    for (const auto& [j, v] : A.entries[i]) col_used[j] = true;
  std::vector<int> col_map(A.cols, -1);
  int nc = 0;
  for (int j = 0; j < A.cols; ++j) {
    if (col_used[j])
      col_map[j] = nc++;
    else
      out.deleted_cols.push_back(j);
  }
  for (int i = 0; i < A.rows; ++i)
    if (A.entries[i].empty()) out.deleted_rows.push_back(i);
  out.matrix = TropMatrix(A.rows - static_cast<int>(out.deleted_rows.size()), nc);
  int ni = 0;
  for (int i = 0; i < A.rows; ++i) {
    if (A.entries[i].empty()) continue;
    for (const auto& [j, v] : A.entries[i])
      out.matrix.entries[ni].push_back({col_map[j], v});
    ++ni;
  }
  return out;
}

Point homogenize_solution(const Point& x) {
  Point out = x;
  out.coords.push_back(ExtValue(0));
  return out;
}

std::optional<Point> dehomogenize_solution(const Point& xp) {
  if (xp.coords.empty() || xp.coords.back().is_inf()) return std::nullopt;
  Rat c = xp.coords.back().value();
  Point out;
  for (size_t i = 0; i + 1 < xp.coords.size(); ++i) {
    const ExtValue& v = xp.coords[i];
    out.coords.push_back(v.is_inf() ? v : ExtValue(Rat(v.value() - c)));
  }
  return out;
}

}  // namespace tropsatz
