#pragma once

#include <optional>
#include <vector>

#include "tropsatz/core.hpp"

namespace tropsatz {

enum class CmpOp { Le, Lt, Eq, Ge, Gt };

/// coef . x  (op)  rhs over free rational variables.
struct LinConstraint {
  std::vector<Rat> coef;
  CmpOp op = CmpOp::Le;
  Rat rhs = 0;
};

struct LpResult {
  enum class Status { Infeasible, Unbounded, Optimal } status;
  Rat objective;
  std::vector<Rat> point;
};

/// Exact dense two-phase simplex (Bland's rule). Strict comparisons are not
/// accepted here; use fm_feasible for those. Variables flagged in nonneg are
/// restricted to >= 0 natively (cheaper than an explicit constraint row).
LpResult lp_minimize(const std::vector<Rat>& obj,
                     const std::vector<LinConstraint>& cons,
                     const std::vector<bool>* nonneg = nullptr);
LpResult lp_maximize(const std::vector<Rat>& obj,
                     const std::vector<LinConstraint>& cons,
                     const std::vector<bool>* nonneg = nullptr);

/// Exact Fourier-Motzkin elimination; handles strict inequalities and
/// equalities, returns a witness point when the system is feasible.
std::optional<std::vector<Rat>> fm_feasible(
    const std::vector<LinConstraint>& cons, int num_vars);

}  // namespace tropsatz
