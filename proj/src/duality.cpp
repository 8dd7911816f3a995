#include "tropsatz/duality.hpp"

#include <sstream>

namespace tropsatz {

namespace {

bool finiteness_ok(const std::vector<bool>& fin, const std::set<int>& S,
                   bool need_all) {
  if (S.empty()) return true;
  if (need_all) {
    for (int i : S)
      if (!fin[i]) return false;
    return true;
  }
  for (int i : S)
    if (fin[i]) return true;
  return false;
}

std::vector<bool> point_finite(const Point& x) {
  std::vector<bool> f(x.size());
  for (size_t i = 0; i < x.size(); ++i) f[i] = x.coords[i].is_finite();
  return f;
}

MinPlusSystem leq_system(const TropMatrix& A, const TropMatrix& B) {
  MinPlusSystem s;
  s.lhs = A;
  s.rhs = B;
  s.rel = Relation::Leq;
  return s;
}

MinPlusSystem dual_system(const TropMatrix& A, const TropMatrix& B) {
  MinPlusSystem s;
  s.lhs = B.transpose();
  s.rhs = A.transpose();
  s.rel = Relation::Lt;
  return s;
}

}  // namespace

bool verify_minplus_primal(const TropMatrix& A, const TropMatrix& B,
                           const Point& x, const std::set<int>& S,
                           FinitenessFlavor flavor) {
  if (!check_minplus_solution(leq_system(A, B), x)) return false;
  return finiteness_ok(point_finite(x), S, flavor == FinitenessFlavor::FinAll);
}

bool verify_minplus_dual(const TropMatrix& A, const TropMatrix& B,
                         const Point& y, const std::set<int>& S,
                         FinitenessFlavor flavor) {
  MinPlusSystem d = dual_system(A, B);
  if (!check_minplus_solution(d, y)) return false;
  std::vector<bool> fin(d.lhs.rows);
  for (int i = 0; i < d.lhs.rows; ++i)
    fin[i] = d.lhs.row_eval(i, y).value.is_finite();
  // the dual condition mirrors the primal flavor
  return finiteness_ok(fin, S, flavor == FinitenessFlavor::FinSome);
}

DualityOutcome minplus_alternative(const TropMatrix& A, const TropMatrix& B,
                                   const std::set<int>& S,
                                   FinitenessFlavor flavor) {
  bool need_all = flavor == FinitenessFlavor::FinAll;
  GameAnalysis primal = analyze_system(leq_system(A, B));
  if (finiteness_ok(primal.col_finite, S, need_all)) {
    if (!verify_minplus_primal(A, B, primal.solution, S, flavor))
      throw std::logic_error("minplus_alternative: primal witness rejected");
    return {true, primal.solution};
  }
  GameAnalysis dual = analyze_system(dual_system(A, B));
  if (finiteness_ok(dual.row_finite, S, !need_all)) {
    if (!verify_minplus_dual(A, B, dual.solution, S, flavor))
      throw std::logic_error("minplus_alternative: dual witness rejected");
    return {false, dual.solution};
  }
  throw std::logic_error("minplus_alternative: neither alternative holds");
}

bool verify_tropical_primal(const TropMatrix& A, const Point& x,
                            const std::set<int>& S, FinitenessFlavor flavor) {
  if (!check_tropical_solution(A, x)) return false;
  return finiteness_ok(point_finite(x), S, flavor == FinitenessFlavor::FinAll);
}

bool verify_tropical_dual(const TropMatrix& A, const Point& z,
                          const std::set<int>& S, FinitenessFlavor flavor) {
  if (static_cast<int>(z.size()) != A.rows)
    throw std::invalid_argument("verify_tropical_dual: shape mismatch");
  TropMatrix At = A.transpose();
  std::vector<bool> fin(At.rows, false);
  std::set<int> used_cols;
  for (int i = 0; i < At.rows; ++i) {
    auto ev = At.row_eval(i, z);
    if (ev.value.is_inf()) continue;
    if (ev.argmin.size() != 1) return false;  // minimum attained once
    fin[i] = true;
    int col = *ev.argmin.begin();
    if (!used_cols.insert(col).second) return false;  // distinct columns
  }
  return finiteness_ok(fin, S, flavor == FinitenessFlavor::FinSome);
}

DualityOutcome tropical_alternative(const TropMatrix& A,
                                    const std::set<int>& S,
                                    FinitenessFlavor flavor) {
  bool need_all = flavor == FinitenessFlavor::FinAll;
  TropicalAnalysis primal = analyze_tropical(A);
  if (finiteness_ok(primal.col_finite, S, need_all)) {
    if (!verify_tropical_primal(A, primal.solution, S, flavor))
      throw std::logic_error("tropical_alternative: primal witness rejected");
    return {true, primal.solution};
  }
  // Dual through the stacked eps-system; the unpacking needs eps small
  // enough, so halve on verification failure.
  int m = A.rows, c = A.cols;
  Rat eps(1);
  for (int attempt = 0; attempt < 64; ++attempt, eps /= 2) {
    MinPlusSystem stacked = tropical_to_minplus_linear(A, eps);
    MinPlusSystem d = dual_system(stacked.lhs, stacked.rhs);
    GameAnalysis dual = analyze_system(d);
    if (!finiteness_ok(dual.row_finite, S, !need_all)) continue;
    // Unpack y (indexed by pairs (block l, row r)) into z over rows of A: in
    // every finite row i of the transposed system the minimum falls into
    // block i; take that row index.
    Point z(std::vector<ExtValue>(m, ExtValue::infinity()));
    bool ok = true;
    for (int i = 0; i < c && ok; ++i) {
      auto ev = d.lhs.row_eval(i, dual.solution);
      if (ev.value.is_inf()) continue;
      int pos = *ev.argmin.begin();
      if (pos / m != i) {
        ok = false;  // minimum escaped its block: eps too coarse
        break;
      }
      z.coords[pos % m] = dual.solution.coords[pos];
    }
    if (!ok) continue;
    if (verify_tropical_dual(A, z, S, flavor)) return {false, z};
  }
  throw std::logic_error("tropical_alternative: no verified dual certificate");
}

}  // namespace tropsatz
