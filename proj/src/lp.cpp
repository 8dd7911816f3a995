#include "tropsatz/lp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropsatz {

namespace {

// Dense two-phase tableau simplex over exact rationals. Free variables are
// split into positive and negative parts.
class Simplex {
 public:
  Simplex(const std::vector<Rat>& obj, const std::vector<LinConstraint>& cons,
          int n, const std::vector<bool>* nonneg)
      : n_(n) {
    m_ = static_cast<int>(cons.size());
    int num_slack = 0;
    for (const auto& c : cons)
      if (c.op != CmpOp::Eq) ++num_slack;
    // nonnegative variables get one column, free variables a +/- pair
    pos_col_.resize(n_);
    neg_col_.assign(n_, -1);
    int col = 0;
    for (int j = 0; j < n_; ++j) {
      pos_col_[j] = col++;
      if (!nonneg || j >= static_cast<int>(nonneg->size()) || !(*nonneg)[j])
        neg_col_[j] = col++;
    }
    cols_ = col + num_slack;
    int total = cols_ + m_;  // + artificials
    rhs_col_ = total;
    ncols_ = total;
    tab_.assign(m_, std::vector<Rat>(total + 1, Rat(0)));
    int slack = 0;
    for (int i = 0; i < m_; ++i) {
      const auto& c = cons[i];
      if (c.op == CmpOp::Lt || c.op == CmpOp::Gt)
        throw std::logic_error("simplex: strict constraint");
      Rat sign = (c.op == CmpOp::Ge) ? Rat(-1) : Rat(1);
      for (int j = 0; j < n_ && j < static_cast<int>(c.coef.size()); ++j) {
        if (c.coef[j] == 0) continue;
        tab_[i][pos_col_[j]] = sign * c.coef[j];
        if (neg_col_[j] >= 0) tab_[i][neg_col_[j]] = -sign * c.coef[j];
      }
      tab_[i][rhs_col_] = sign * c.rhs;
      if (c.op != CmpOp::Eq) {
        tab_[i][col + slack] = 1;
        ++slack;
      }
    }
    for (int i = 0; i < m_; ++i)
      if (tab_[i][rhs_col_] < 0)
        for (auto& v : tab_[i]) v = -v;
    for (int i = 0; i < m_; ++i) tab_[i][cols_ + i] = 1;
    cost_.assign(cols_, Rat(0));
    for (int j = 0; j < n_ && j < static_cast<int>(obj.size()); ++j) {
      cost_[pos_col_[j]] = obj[j];
      if (neg_col_[j] >= 0) cost_[neg_col_[j]] = -obj[j];
    }
  }

  LpResult solve() {
    basis_.assign(m_, -1);
    for (int i = 0; i < m_; ++i) basis_[i] = cols_ + i;
    std::vector<Rat> phase1(ncols_, Rat(0));
    for (int j = cols_; j < ncols_; ++j) phase1[j] = 1;
    usable_ = ncols_;
    Rat opt;
    if (!optimize(phase1, &opt)) throw std::logic_error("phase1 unbounded");
    if (opt != 0) return {LpResult::Status::Infeasible, Rat(0), {}};
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < cols_) continue;
      int pc = -1;
      for (int j = 0; j < cols_; ++j)
        if (tab_[i][j] != 0) {
          pc = j;
          break;
        }
      if (pc >= 0)
        pivot(i, pc);
      else
        dead_rows_.insert(i);  // redundant constraint
    }
    usable_ = cols_;
    std::vector<Rat> phase2(ncols_, Rat(0));
    for (int j = 0; j < cols_; ++j) phase2[j] = cost_[j];
    if (!optimize(phase2, &opt))
      return {LpResult::Status::Unbounded, Rat(0), extract_point()};
    return {LpResult::Status::Optimal, opt, extract_point()};
  }

 private:
  std::vector<Rat> extract_point() const {
    std::vector<Rat> split(cols_, Rat(0));
    for (int i = 0; i < m_; ++i)
      if (basis_[i] >= 0 && basis_[i] < cols_)
        split[basis_[i]] = tab_[i][rhs_col_];
    std::vector<Rat> x(n_, Rat(0));
    for (int j = 0; j < n_; ++j) {
      x[j] = split[pos_col_[j]];
      if (neg_col_[j] >= 0) x[j] -= split[neg_col_[j]];
    }
    return x;
  }

  void pivot(int row, int col) {
    Rat p = tab_[row][col];
    for (int j = 0; j <= ncols_; ++j) tab_[row][j] /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == row || tab_[i][col] == 0) continue;
      Rat f = tab_[i][col];
      for (int j = 0; j <= ncols_; ++j) tab_[i][j] -= f * tab_[row][j];
    }
    basis_[row] = col;
  }

  // Bland's rule; returns false when unbounded.
  bool optimize(const std::vector<Rat>& cost, Rat* opt) {
    while (true) {
      std::vector<Rat> red(cost.begin(), cost.begin() + usable_);
      Rat base_cost(0);
      for (int i = 0; i < m_; ++i) {
        int b = basis_[i];
        if (b >= static_cast<int>(cost.size())) continue;
        const Rat& cb = cost[b];
        if (cb == 0) continue;
        base_cost += cb * tab_[i][rhs_col_];
        for (int j = 0; j < usable_; ++j)
          if (tab_[i][j] != 0) red[j] -= cb * tab_[i][j];
      }
      int enter = -1;
      for (int j = 0; j < usable_; ++j)
        if (red[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) {
        *opt = base_cost;
        return true;
      }
      int leave = -1;
      Rat best;
      for (int i = 0; i < m_; ++i) {
        if (dead_rows_.count(i)) continue;
        if (tab_[i][enter] <= 0) continue;
        Rat ratio = tab_[i][rhs_col_] / tab_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  int n_, m_, cols_, ncols_, rhs_col_, usable_ = 0;
  std::vector<int> pos_col_, neg_col_;
  std::vector<std::vector<Rat>> tab_;
  std::vector<Rat> cost_;
  std::vector<int> basis_;
  std::set<int> dead_rows_;
};

int num_vars_of(const std::vector<Rat>& obj,
                const std::vector<LinConstraint>& cons) {
  size_t n = obj.size();
  for (const auto& c : cons) n = std::max(n, c.coef.size());
  return static_cast<int>(n);
}

}  // namespace

LpResult lp_minimize(const std::vector<Rat>& obj,
                     const std::vector<LinConstraint>& cons,
                     const std::vector<bool>* nonneg) {
  Simplex s(obj, cons, num_vars_of(obj, cons), nonneg);
  return s.solve();
}

LpResult lp_maximize(const std::vector<Rat>& obj,
                     const std::vector<LinConstraint>& cons,
                     const std::vector<bool>* nonneg) {
  std::vector<Rat> neg(obj);
  for (auto& v : neg) v = -v;
  LpResult r = lp_minimize(neg, cons, nonneg);
  r.objective = -r.objective;
  return r;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin

namespace {

// lhs . x (<= | <) rhs after normalization; equalities are substituted away
// before elimination starts.
struct FmRow {
  std::vector<Rat> coef;
  Rat rhs;
  bool strict = false;
};

bool row_trivial_true(const FmRow& r) {
  for (const auto& c : r.coef)
    if (c != 0) return false;
  return r.strict ? (r.rhs > 0) : (r.rhs >= 0);
}

bool row_trivial_false(const FmRow& r) {
  for (const auto& c : r.coef)
    if (c != 0) return false;
  return r.strict ? (r.rhs <= 0) : (r.rhs < 0);
}

std::vector<Rat> row_key(const FmRow& r) {
  Rat scale(0);
  for (const auto& c : r.coef)
    if (c != 0) {
      scale = abs(c);
      break;
    }
  if (scale == 0) scale = 1;
  std::vector<Rat> key;
  key.reserve(r.coef.size() + 2);
  for (const auto& c : r.coef) key.push_back(c / scale);
  key.push_back(r.rhs / scale);
  key.push_back(Rat(r.strict ? 1 : 0));
  return key;
}

void dedupe_rows(std::vector<FmRow>& rows) {
  std::set<std::vector<Rat>> seen;
  std::vector<FmRow> out;
  for (auto& r : rows) {
    if (row_trivial_true(r)) continue;
    if (seen.insert(row_key(r)).second) out.push_back(std::move(r));
  }
  rows = std::move(out);
}

}  // namespace

std::optional<std::vector<Rat>> fm_feasible(
    const std::vector<LinConstraint>& cons, int num_vars) {
  // x_var = expr . x + cnst, recorded in substitution order.
  struct EqSub {
    int var;
    std::vector<Rat> expr;
    Rat cnst;
  };
  std::vector<EqSub> eq_subs;

  std::vector<FmRow> rows;
  std::vector<std::pair<std::vector<Rat>, Rat>> pending_eqs;  // coef, rhs
  for (const auto& c : cons) {
    std::vector<Rat> coef(num_vars, Rat(0));
    for (int j = 0; j < num_vars && j < static_cast<int>(c.coef.size()); ++j)
      coef[j] = c.coef[j];
    Rat rhs = c.rhs;
    if (c.op == CmpOp::Ge || c.op == CmpOp::Gt) {
      for (auto& v : coef) v = -v;
      rhs = -rhs;
    }
    if (c.op == CmpOp::Eq) {
      pending_eqs.emplace_back(std::move(coef), rhs);
    } else {
      FmRow r;
      r.coef = std::move(coef);
      r.rhs = rhs;
      r.strict = (c.op == CmpOp::Lt || c.op == CmpOp::Gt);
      rows.push_back(std::move(r));
    }
  }

  auto substitute = [num_vars](std::vector<Rat>& coef, Rat& rhs,
                               const EqSub& s) {
    if (coef[s.var] == 0) return;
    Rat f = coef[s.var];
    coef[s.var] = 0;
    for (int j = 0; j < num_vars; ++j) coef[j] += f * s.expr[j];
    rhs -= f * s.cnst;
  };

  // Gaussian elimination of equalities.
  while (!pending_eqs.empty()) {
    auto [coef, rhs] = std::move(pending_eqs.back());
    pending_eqs.pop_back();
    for (const auto& s : eq_subs) substitute(coef, rhs, s);
    int var = -1;
    for (int j = 0; j < num_vars; ++j)
      if (coef[j] != 0) {
        var = j;
        break;
      }
    if (var < 0) {
      if (rhs != 0) return std::nullopt;
      continue;
    }
    EqSub s;
    s.var = var;
    s.expr.assign(num_vars, Rat(0));
    for (int j = 0; j < num_vars; ++j)
      if (j != var) s.expr[j] = -coef[j] / coef[var];
    s.cnst = rhs / coef[var];
    eq_subs.push_back(std::move(s));
  }
  for (auto& r : rows)
    for (const auto& s : eq_subs) substitute(r.coef, r.rhs, s);

  std::vector<bool> done(num_vars, false);
  for (const auto& s : eq_subs) done[s.var] = true;

  // FM elimination; record the state before each variable so a witness can
  // be back-substituted afterwards.
  struct FmStep {
    int var;
    std::vector<FmRow> rows;  // rows at the time var was eliminated
  };
  std::vector<FmStep> steps;

  dedupe_rows(rows);
  while (true) {
    for (const auto& r : rows)
      if (row_trivial_false(r)) return std::nullopt;
    // Pick the remaining variable minimizing the product of bound counts.
    int best_var = -1;
    long best_score = 0;
    for (int v = 0; v < num_vars; ++v) {
      if (done[v]) continue;
      long pos = 0, neg = 0;
      for (const auto& r : rows) {
        if (r.coef[v] > 0) ++pos;
        if (r.coef[v] < 0) ++neg;
      }
      long score = pos * neg - (pos + neg);
      if (best_var < 0 || score < best_score) {
        best_var = v;
        best_score = score;
      }
    }
    if (best_var < 0) break;
    int v = best_var;
    done[v] = true;
    steps.push_back({v, rows});
    std::vector<FmRow> uppers, lowers, rest;
    for (auto& r : rows) {
      if (r.coef[v] > 0)
        uppers.push_back(std::move(r));  // x_v <= (rhs - ...) / c
      else if (r.coef[v] < 0)
        lowers.push_back(std::move(r));
      else
        rest.push_back(std::move(r));
    }
    for (const auto& lo : lowers) {
      for (const auto& up : uppers) {
        // lo: -a x_v + L <= l (a>0)  =>  (L - l)/a <= x_v
        // up:  b x_v + U <= u (b>0)  =>  x_v <= (u - U)/b
        FmRow r;
        r.coef.assign(num_vars, Rat(0));
        Rat a = -lo.coef[v], b = up.coef[v];
        for (int j = 0; j < num_vars; ++j)
          r.coef[j] = lo.coef[j] / a + up.coef[j] / b;
        r.rhs = lo.rhs / a + up.rhs / b;
        r.strict = lo.strict || up.strict;
        rest.push_back(std::move(r));
      }
    }
    rows = std::move(rest);
    dedupe_rows(rows);
  }
  for (const auto& r : rows)
    if (row_trivial_false(r)) return std::nullopt;

  // Feasible: back-substitute a witness.
  std::vector<Rat> x(num_vars, Rat(0));
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    int v = it->var;
    std::optional<Rat> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& r : it->rows) {
      if (r.coef[v] == 0) continue;
      Rat bound = r.rhs;
      for (int j = 0; j < num_vars; ++j)
        if (j != v) bound -= r.coef[j] * x[j];
      bound /= r.coef[v];
      if (r.coef[v] > 0) {  // x_v <= bound
        if (!hi || bound < *hi || (bound == *hi && r.strict)) {
          hi = bound;
          hi_strict = r.strict;
        }
      } else {  // x_v >= bound
        if (!lo || bound > *lo || (bound == *lo && r.strict)) {
          lo = bound;
          lo_strict = r.strict;
        }
      }
    }
    if (lo && hi) {
      if (*lo == *hi) {
        if (lo_strict || hi_strict)
          throw std::logic_error("fm: empty interval after elimination");
        x[v] = *lo;
      } else {
        x[v] = (*lo + *hi) / 2;
      }
    } else if (lo) {
      x[v] = lo_strict ? *lo + 1 : *lo;
    } else if (hi) {
      x[v] = hi_strict ? *hi - 1 : *hi;
    } else {
      x[v] = 0;
    }
  }
  // Equality substitutions in reverse order.
  for (auto it = eq_subs.rbegin(); it != eq_subs.rend(); ++it) {
    Rat val = it->cnst;
    for (int j = 0; j < num_vars; ++j) val += it->expr[j] * x[j];
    x[it->var] = val;
  }
  return x;
}

}  // namespace tropsatz
