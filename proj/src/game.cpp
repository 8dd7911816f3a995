#include "tropsatz/game.hpp"

#include <climits>
#include <deque>
#include <sstream>

namespace tropsatz {

namespace {

constexpr long long kInf = LLONG_MAX;

// Integer energy-game lifting. Vertices: rows 0..m-1 appended after columns
// 0..c-1 conceptually; we keep two arrays. Values only increase; anything
// exceeding the cutoff is infinite.
struct Lifting {
  int m = 0, c = 0;
  // row i: list of (col j, weight a_ij); col j: list of (row i, weight b_ij)
  std::vector<std::vector<std::pair<int, long long>>> rw, cw;
  std::vector<long long> er, ec;
  long long cutoff = 0;

  long long row_value(int i) const {
    if (rw[i].empty()) return kInf;
    long long best = kInf;
    for (const auto& [j, a] : rw[i]) {
      if (ec[j] == kInf) continue;
      best = std::min(best, ec[j] + a);
    }
    if (best == kInf) return kInf;
    return std::max(0LL, best);
  }

  long long col_value(int j) const {
    long long best = 0;  // stuck adversary loses: clamp0(max over {}) = 0
    for (const auto& [i, b] : cw[j]) {
      if (er[i] == kInf) return kInf;
      best = std::max(best, er[i] - b);
    }
    return std::max(0LL, best);
  }

  // Least fixed point; returns false when early_exit_cols got an infinite
  // value (callers that only need the decision can stop there).
  bool run(const std::vector<bool>* early_exit_cols = nullptr) {
    er.assign(m, 0);
    ec.assign(c, 0);
    std::deque<int> q;  // rows: 0..m-1, cols: m..m+c-1
    std::vector<bool> inq(m + c, false);
    for (int i = 0; i < m; ++i) {
      q.push_back(i);
      inq[i] = true;
    }
    for (int j = 0; j < c; ++j) {
      q.push_back(m + j);
      inq[m + j] = true;
    }
    // predecessor lists
    std::vector<std::vector<int>> col_pred(c), row_pred(m);
    for (int i = 0; i < m; ++i)
      for (const auto& [j, a] : rw[i]) col_pred[j].push_back(i);
    for (int j = 0; j < c; ++j)
      for (const auto& [i, b] : cw[j]) row_pred[i].push_back(j);
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      inq[v] = false;
      if (v < m) {
        long long nv = row_value(v);
        if (nv != kInf && nv > cutoff) nv = kInf;
        if (nv > er[v]) {
          er[v] = nv;
          for (int j : row_pred[v])
            if (!inq[m + j]) {
              q.push_back(m + j);
              inq[m + j] = true;
            }
        }
      } else {
        int j = v - m;
        long long nv = col_value(j);
        if (nv != kInf && nv > cutoff) nv = kInf;
        if (nv > ec[j]) {
          ec[j] = nv;
          if (ec[j] == kInf && early_exit_cols && (*early_exit_cols)[j])
            return false;
          for (int i : col_pred[j])
            if (!inq[i]) {
              q.push_back(i);
              inq[i] = true;
            }
        }
      }
    }
    return true;
  }
};

long long to_ll(const Int& z) {
  if (!z.fits_slong_p())
    throw std::overflow_error("game: scaled weight out of range");
  return z.get_si();
}

// Scale all finite entries of both matrices to integers; returns the common
// denominator L and fills the lifting weights multiplied by extra.
Int build_lifting(const MinPlusSystem& S, long long vmul, long long ashift,
                  long long bshift, Lifting* L) {
  std::vector<ExtValue> vals;
  for (int i = 0; i < S.lhs.rows; ++i)
    for (const auto& [j, v] : S.lhs.entries[i]) vals.push_back(ExtValue(v));
  for (int i = 0; i < S.rhs.rows; ++i)
    for (const auto& [j, v] : S.rhs.entries[i]) vals.push_back(ExtValue(v));
  Int den = lcm_denominators(vals);
  L->m = S.lhs.rows;
  L->c = S.lhs.cols;
  L->rw.assign(L->m, {});
  L->cw.assign(L->c, {});
  long long wmax = 1;
  for (int i = 0; i < L->m; ++i)
    for (const auto& [j, v] : S.lhs.entries[i]) {
      Int w = Int(v.get_num() * den / v.get_den());
      long long iw = to_ll(w) * vmul + ashift;
      L->rw[i].push_back({j, iw});
      wmax = std::max(wmax, std::abs(iw));
    }
  for (int i = 0; i < L->m; ++i)
    for (const auto& [j, v] : S.rhs.entries[i]) {
      Int w = Int(v.get_num() * den / v.get_den());
      long long iw = to_ll(w) * vmul + bshift;
      L->cw[j].push_back({i, iw});
      wmax = std::max(wmax, std::abs(iw));
    }
  long long V = L->m + L->c;
  L->cutoff = (V + 1) * (wmax + 1);
  return den;
}

Point credits_to_point(const std::vector<long long>& e, const Int& den,
                       long long vmul) {
  Point p;
  Int d = den * Int(static_cast<long>(vmul));
  for (long long v : e) {
    if (v == kInf)
      p.coords.push_back(ExtValue::infinity());
    else
      p.coords.push_back(ExtValue(Rat(Int(static_cast<long>(v)), d)));
  }
  return p;
}

GameAnalysis analyze_impl(const MinPlusSystem& S, bool strict) {
  Lifting L;
  long long V = S.lhs.rows + S.lhs.cols;
  long long vmul = strict ? V : 1;
  Int den = build_lifting(S, vmul, strict ? 1 : 0, strict ? -1 : 0, &L);
  L.run();
  GameAnalysis out;
  out.solution = credits_to_point(L.ec, den, vmul);
  out.col_finite.resize(L.c);
  for (int j = 0; j < L.c; ++j) out.col_finite[j] = L.ec[j] != kInf;
  out.row_finite.resize(L.m);
  for (int i = 0; i < L.m; ++i) out.row_finite[i] = L.er[i] != kInf;
  return out;
}

}  // namespace

GameGraph build_game(const MinPlusSystem& S) {
  GameGraph G;
  G.num_rows = S.lhs.rows;
  G.num_cols = S.lhs.cols;
  G.row_adj.assign(G.num_rows, {});
  G.col_adj.assign(G.num_cols, {});
  for (int i = 0; i < G.num_rows; ++i)
    for (const auto& [j, v] : S.lhs.entries[i]) G.row_adj[i].push_back({j, v});
  for (int i = 0; i < G.num_rows; ++i)
    for (const auto& [j, v] : S.rhs.entries[i]) G.col_adj[j].push_back({i, v});
  return G;
}

CreditVector min_credits(const GameGraph& G) {
  // Reassemble a system view to reuse the lifting.
  MinPlusSystem S;
  S.rel = Relation::Leq;
  S.lhs = TropMatrix(G.num_rows, G.num_cols);
  S.rhs = TropMatrix(G.num_rows, G.num_cols);
  for (int i = 0; i < G.num_rows; ++i)
    for (const auto& [j, a] : G.row_adj[i]) S.lhs.set(i, j, a);
  for (int j = 0; j < G.num_cols; ++j)
    for (const auto& [i, b] : G.col_adj[j]) S.rhs.set(i, j, b);
  Lifting L;
  Int den = build_lifting(S, 1, 0, 0, &L);
  L.run();
  CreditVector cv;
  cv.cols = credits_to_point(L.ec, den, 1).coords;
  cv.rows = credits_to_point(L.er, den, 1).coords;
  return cv;
}

std::optional<Point> solve_nonstrict(const MinPlusSystem& S,
                                     const std::set<int>& col_finite,
                                     const std::set<int>& row_finite) {
  if (S.rel != Relation::Leq)
    throw std::invalid_argument("solve_nonstrict: relation must be Leq");
  GameAnalysis a = analyze_impl(S, false);
  for (int j : col_finite)
    if (!a.col_finite[j]) return std::nullopt;
  for (int i : row_finite)
    if (!a.row_finite[i]) return std::nullopt;
  if (!check_minplus_solution(S, a.solution))
    throw std::logic_error("solve_nonstrict: credit vector fails the checker");
  return a.solution;
}

std::optional<Point> solve_strict(const MinPlusSystem& S,
                                  const std::set<int>& col_finite,
                                  const std::set<int>& row_finite) {
  if (S.rel != Relation::Lt)
    throw std::invalid_argument("solve_strict: relation must be Lt");
  GameAnalysis a = analyze_impl(S, true);
  for (int j : col_finite)
    if (!a.col_finite[j]) return std::nullopt;
  for (int i : row_finite)
    if (!a.row_finite[i]) return std::nullopt;
  if (!check_minplus_solution(S, a.solution))
    throw std::logic_error("solve_strict: credit vector fails the checker");
  return a.solution;
}

GameAnalysis analyze_system(const MinPlusSystem& S) {
  if (S.rel == Relation::Eq)
    throw std::invalid_argument("analyze_system: Eq not supported, stack it");
  GameAnalysis a = analyze_impl(S, S.rel == Relation::Lt);
  if (!check_minplus_solution(S, a.solution))
    throw std::logic_error("analyze_system: credit vector fails the checker");
  return a;
}

// ---------------------------------------------------------------------------
// Tropical systems: the stacked eps-system solved as one compressed game.

namespace {

// Weighted union-find for the all-rows-have-at-most-two-entries fast path
// over all-finite solutions (rows become exact difference constraints).
struct WeightedUf {
  std::vector<int> parent;
  std::vector<Rat> off;  // value(x) - value(parent(x))

  explicit WeightedUf(int n) : parent(n), off(n, Rat(0)) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  std::pair<int, Rat> find(int x) {
    if (parent[x] == x) return {x, Rat(0)};
    auto [r, d] = find(parent[x]);
    parent[x] = r;
    off[x] += d;
    return {r, off[x]};
  }
  // assert value(a) - value(b) == d; returns false on contradiction
  bool merge(int a, int b, const Rat& d) {
    auto [ra, da] = find(a);
    auto [rb, db] = find(b);
    if (ra == rb) return da - db == d;
    parent[ra] = rb;
    off[ra] = d + db - da;
    return true;
  }
};

std::optional<TropicalAnalysis> two_entry_fast_path(const TropMatrix& A) {
  for (const auto& row : A.entries)
    if (row.size() > 2) return std::nullopt;
  TropicalAnalysis out;
  out.col_finite.assign(A.cols, true);
  WeightedUf uf(A.cols);
  for (const auto& row : A.entries) {
    if (row.empty()) continue;  // row evaluates to infinity, always satisfied
    if (row.size() == 1) {
      // a finite minimum attained once for every finite x
      out.solution.coords.assign(A.cols, ExtValue(0));
      out.col_finite.assign(A.cols, false);
      return out;  // caller sees all-infinite pattern: unsolvable over R
    }
    // tie: a1 + x1 = a2 + x2
    if (!uf.merge(row[0].first, row[1].first,
                  Rat(row[1].second - row[0].second))) {
      out.solution.coords.assign(A.cols, ExtValue(0));
      out.col_finite.assign(A.cols, false);
      return out;
    }
  }
  out.solution.coords.resize(A.cols);
  for (int j = 0; j < A.cols; ++j) {
    auto [r, d] = uf.find(j);
    out.solution.coords[j] = ExtValue(d);
  }
  if (!check_tropical_solution(A, out.solution))
    throw std::logic_error("two_entry_fast_path: potentials fail the checker");
  return out;
}

}  // namespace

TropicalAnalysis analyze_tropical(const TropMatrix& A) {
  // Compressed game for the stacked system at eps = 1. Row vertices carry
  // the top-two rule: the adversary taboos the best response column, so the
  // column player gets max over blocks = min(best + eps, second best).
  std::vector<ExtValue> vals;
  for (const auto& row : A.entries)
    for (const auto& [j, v] : row) vals.push_back(ExtValue(v));
  Int den = lcm_denominators(vals);
  int m = A.rows, c = A.cols;
  std::vector<std::vector<std::pair<int, long long>>> rw(m);
  long long wmax = 1;
  for (int i = 0; i < m; ++i)
    for (const auto& [j, v] : A.entries[i]) {
      Int w = Int(v.get_num() * den / v.get_den());
      long long iw = to_ll(w);
      rw[i].push_back({j, iw});
      wmax = std::max(wmax, std::abs(iw));
    }
  long long pen = to_ll(den);  // eps = 1 in scaled units
  wmax = std::max(wmax, pen);
  long long V = m + c;
  long long cutoff = (V + 1) * (wmax + 1);

  std::vector<long long> er(m, 0), ec(c, 0);
  std::vector<std::vector<int>> col_rows(c);  // rows whose support contains j
  for (int i = 0; i < m; ++i)
    for (const auto& [j, a] : rw[i]) col_rows[j].push_back(i);

  auto row_value = [&](int i) -> long long {
    long long v1 = kInf, v2 = kInf;
    for (const auto& [j, a] : rw[i]) {
      if (ec[j] == kInf) continue;
      long long v = ec[j] + a;
      if (v < v1) {
        v2 = v1;
        v1 = v;
      } else if (v < v2) {
        v2 = v;
      }
    }
    if (v1 == kInf) return rw[i].empty() ? kInf : kInf;
    long long penalized = v1 + pen;
    long long res = std::min(penalized, v2);
    return std::max(0LL, res);
  };
  auto col_value = [&](int j) -> long long {
    long long best = 0;
    for (int i : col_rows[j]) {
      if (er[i] == kInf) return kInf;
      long long a = 0;
      for (const auto& [jj, aa] : rw[i])
        if (jj == j) {
          a = aa;
          break;
        }
      best = std::max(best, er[i] - a);
    }
    return std::max(0LL, best);
  };

  std::deque<int> q;
  std::vector<bool> inq(m + c, true);
  for (int i = 0; i < m + c; ++i) q.push_back(i);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    inq[v] = false;
    if (v < m) {
      long long nv = row_value(v);
      if (nv != kInf && nv > cutoff) nv = kInf;
      if (nv > er[v]) {
        er[v] = nv;
        for (const auto& [j, a] : rw[v])
          if (!inq[m + j]) {
            q.push_back(m + j);
            inq[m + j] = true;
          }
      }
    } else {
      int j = v - m;
      long long nv = col_value(j);
      if (nv != kInf && nv > cutoff) nv = kInf;
      if (nv > ec[j]) {
        ec[j] = nv;
        for (int i : col_rows[j])
          if (!inq[i]) {
            q.push_back(i);
            inq[i] = true;
          }
      }
    }
  }

  TropicalAnalysis out;
  out.solution = credits_to_point(ec, den, 1);
  out.col_finite.resize(c);
  for (int j = 0; j < c; ++j) out.col_finite[j] = ec[j] != kInf;
  if (!check_tropical_solution(A, out.solution))
    throw std::logic_error("analyze_tropical: credits fail the checker");
  return out;
}

std::optional<Point> solve_tropical(const TropMatrix& A,
                                    const std::set<int>& need_finite) {
  if (static_cast<int>(need_finite.size()) == A.cols) {
    if (auto fast = two_entry_fast_path(A)) {
      for (int j : need_finite)
        if (!fast->col_finite[j]) return std::nullopt;
      return fast->solution;
    }
  }
  TropicalAnalysis a = analyze_tropical(A);
  for (int j : need_finite)
    if (!a.col_finite[j]) return std::nullopt;
  return a.solution;
}

std::string dump_game(const GameGraph& G) {
  std::ostringstream os;
  for (int i = 0; i < G.num_rows; ++i)
    for (const auto& [j, a] : G.row_adj[i])
      os << "r " << i << " c " << j << " " << to_string(Rat(-a)) << "\n";
  for (int j = 0; j < G.num_cols; ++j)
    for (const auto& [i, b] : G.col_adj[j])
      os << "c " << j << " r " << i << " " << to_string(b) << "\n";
  return os.str();
}

}  // namespace tropsatz
