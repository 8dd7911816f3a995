#include "tropsatz/oracle.hpp"

#include <algorithm>
#include <functional>

namespace tropsatz {

namespace {

// One tropical polynomial restricted to the finite variables: a list of
// (coefficient, exponent-over-kept-vars) monomials.
struct Mono {
  Rat c;
  std::vector<int> e;
};

LinConstraint tie(const Mono& a, const Mono& b) {
  LinConstraint c;
  c.coef.resize(a.e.size());
  for (size_t i = 0; i < a.e.size(); ++i) c.coef[i] = Rat(a.e[i] - b.e[i]);
  c.op = CmpOp::Eq;
  c.rhs = b.c - a.c;
  return c;
}

LinConstraint dominates(const Mono& a, const Mono& b) {
  // a(x) <= b(x)
  LinConstraint c = tie(a, b);
  c.op = CmpOp::Le;
  return c;
}

std::vector<Mono> restrict_terms(const TropicalPolynomial& f,
                                 const std::vector<int>& kept,
                                 const std::vector<bool>& dropped) {
  std::vector<Mono> out;
  for (const auto& [e, c] : f.terms) {
    bool dead = false;
    for (size_t j = 0; j < e.size(); ++j)
      if (dropped[j] && e[j] > 0) dead = true;
    if (dead) continue;
    Mono m;
    m.c = c;
    for (int j : kept) m.e.push_back(e[j]);
    out.push_back(std::move(m));
  }
  return out;
}

// Per-polynomial alternatives: sets of constraints whose disjunction over
// the polynomial and conjunction over the system characterizes roots.
using Branch = std::vector<LinConstraint>;

std::optional<std::vector<Rat>> search(
    const std::vector<std::vector<Branch>>& alts, int num_vars) {
  std::vector<LinConstraint> acc;
  std::vector<size_t> sizes;
  std::function<std::optional<std::vector<Rat>>(size_t)> rec =
      [&](size_t idx) -> std::optional<std::vector<Rat>> {
    if (!fm_feasible(acc, num_vars).has_value()) return std::nullopt;
    if (idx == alts.size()) return fm_feasible(acc, num_vars);
    for (const auto& br : alts[idx]) {
      size_t mark = acc.size();
      acc.insert(acc.end(), br.begin(), br.end());
      if (auto r = rec(idx + 1)) return r;
      acc.resize(mark);
    }
    return std::nullopt;
  };
  return rec(0);
}

// Branches for one tropical polynomial: any unordered pair of monomials ties
// at the minimum.
std::optional<std::vector<Branch>> tropical_branches(
    const std::vector<Mono>& ms) {
  if (ms.empty()) return std::vector<Branch>{};  // evaluates to infinity
  if (ms.size() == 1) return std::nullopt;       // finite minimum, attained once
  std::vector<Branch> out;
  for (size_t i = 0; i < ms.size(); ++i)
    for (size_t j = i + 1; j < ms.size(); ++j) {
      Branch br;
      br.push_back(tie(ms[i], ms[j]));
      for (size_t q = 0; q < ms.size(); ++q)
        if (q != i && q != j) br.push_back(dominates(ms[i], ms[q]));
      out.push_back(std::move(br));
    }
  return out;
}

// Branches for one min-plus polynomial: a minimizing monomial on each side,
// equal across sides.
std::optional<std::vector<Branch>> minplus_branches(
    const std::vector<Mono>& lhs, const std::vector<Mono>& rhs) {
  if (lhs.empty() && rhs.empty()) return std::vector<Branch>{};  // inf = inf
  if (lhs.empty() || rhs.empty()) return std::nullopt;
  std::vector<Branch> out;
  for (size_t i = 0; i < lhs.size(); ++i)
    for (size_t j = 0; j < rhs.size(); ++j) {
      Branch br;
      br.push_back(tie(lhs[i], rhs[j]));
      for (size_t q = 0; q < lhs.size(); ++q)
        if (q != i) br.push_back(dominates(lhs[i], lhs[q]));
      for (size_t q = 0; q < rhs.size(); ++q)
        if (q != j) br.push_back(dominates(rhs[j], rhs[q]));
      out.push_back(std::move(br));
    }
  return out;
}

std::optional<Point> solve_with_pattern(const PolySystem& F,
                                        const std::vector<bool>& dropped) {
  std::vector<int> kept;
  for (int j = 0; j < F.num_vars; ++j)
    if (!dropped[j]) kept.push_back(j);
  std::vector<std::vector<Branch>> alts;
  if (F.kind == SystemKind::Tropical) {
    for (const auto& f : F.tropical) {
      auto b = tropical_branches(restrict_terms(f, kept, dropped));
      if (!b) return std::nullopt;
      if (!b->empty()) alts.push_back(std::move(*b));
    }
  } else {
    for (const auto& p : F.minplus) {
      auto b = minplus_branches(restrict_terms(p.lhs, kept, dropped),
                                restrict_terms(p.rhs, kept, dropped));
      if (!b) return std::nullopt;
      if (!b->empty()) alts.push_back(std::move(*b));
    }
  }
  auto w = search(alts, static_cast<int>(kept.size()));
  if (!w) return std::nullopt;
  Point out;
  out.coords.assign(F.num_vars, ExtValue::infinity());
  for (size_t q = 0; q < kept.size(); ++q)
    out.coords[kept[q]] = ExtValue((*w)[q]);
  return out;
}

}  // namespace

std::optional<Point> oracle_solve(const PolySystem& F) {
  int n = F.num_vars;
  if (F.semiring == Semiring::R)
    return solve_with_pattern(F, std::vector<bool>(n, false));
  // enumerate infinity patterns, fewest infinite coordinates first
  std::vector<std::vector<bool>> patterns;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> d(n, false);
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) d[j] = true;
    patterns.push_back(std::move(d));
  }
  std::stable_sort(patterns.begin(), patterns.end(),
                   [](const auto& a, const auto& b) {
                     return std::count(a.begin(), a.end(), true) <
                            std::count(b.begin(), b.end(), true);
                   });
  for (const auto& d : patterns)
    if (auto r = solve_with_pattern(F, d)) {
      if (!is_root_system(F, *r))
        throw std::logic_error("oracle_solve: witness fails the predicate");
      return r;
    }
  return std::nullopt;
}

GameClassification oracle_game(const GameGraph& g) {
  int m = g.num_rows, c = g.num_cols;
  std::vector<int> csizes(m), rsizes(c);
  for (int i = 0; i < m; ++i) csizes[i] = static_cast<int>(g.row_adj[i].size());
  for (int j = 0; j < c; ++j) rsizes[j] = static_cast<int>(g.col_adj[j].size());
  auto next = [](std::vector<int>& s, const std::vector<int>& sizes) {
    for (size_t i = 0; i < s.size(); ++i) {
      if (sizes[i] == 0) continue;
      if (s[i] + 1 < sizes[i]) {
        ++s[i];
        return true;
      }
      s[i] = 0;
    }
    return false;
  };
  // deterministic play under fixed positional strategies; outcome from the
  // column player's perspective
  auto play = [&](int start, bool start_is_col, const std::vector<int>& cs,
                  const std::vector<int>& rs) {
    std::vector<int> seen(c, -1);
    std::vector<Rat> prefix;
    Rat total(0);
    int j = -1, i = -1;
    bool at_col = start_is_col;
    if (start_is_col)
      j = start;
    else
      i = start;
    int step = 0;
    while (true) {
      if (at_col) {
        if (seen[j] >= 0) {
          Rat cyc = total - prefix[seen[j]];
          return cyc > 0 ? 1 : (cyc < 0 ? -1 : 0);
        }
        seen[j] = step++;
        prefix.push_back(total);
        if (g.col_adj[j].empty()) return 1;  // row player stuck
        auto [ii, b] = g.col_adj[j][rs[j]];
        total += b;
        i = ii;
        at_col = false;
      } else {
        if (g.row_adj[i].empty()) return -1;  // column player stuck
        auto [jj, a] = g.row_adj[i][cs[i]];
        total += -a;
        j = jj;
        at_col = true;
      }
    }
  };
  auto classify = [&](int start, bool start_is_col) {
    int best = -1;
    std::vector<int> cs(m, 0);
    bool more = true;
    while (more) {
      int worst = 1;
      std::vector<int> rs(c, 0);
      bool rmore = true;
      while (rmore) {
        worst = std::min(worst, play(start, start_is_col, cs, rs));
        rmore = next(rs, rsizes);
      }
      best = std::max(best, worst);
      more = next(cs, csizes);
    }
    return best;
  };
  GameClassification out;
  for (int j = 0; j < c; ++j) out.col_class.push_back(classify(j, true));
  for (int i = 0; i < m; ++i) out.row_class.push_back(classify(i, false));
  return out;
}

// ---------------------------------------------------------------------------
// Fixtures

namespace {

TropicalPolynomial make_poly(int n, std::vector<std::pair<Exponent, Rat>> ts) {
  TropicalPolynomial f;
  f.num_vars = n;
  for (auto& [e, c] : ts) f.terms[e] = c;
  return f;
}

Exponent unit(int n, int i, int pow = 1) {
  Exponent e(n, 0);
  e[i] = pow;
  return e;
}

long ipow(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Fixture lmp_fixture(long n, long d, bool minplus) {
  Fixture fx;
  fx.name = minplus ? "lmp_minplus" : "lmp";
  fx.has_root = false;
  fx.explicit_degree = (d - 1) * (n - 1);
  PolySystem F;
  F.semiring = Semiring::R;
  F.kind = minplus ? SystemKind::MinPlus : SystemKind::Tropical;
  F.num_vars = static_cast<int>(n);
  std::vector<std::pair<TropicalPolynomial, TropicalPolynomial>> pairs;
  int N = static_cast<int>(n);
  pairs.push_back({make_poly(N, {{Exponent(N, 0), 0}}),
                   make_poly(N, {{unit(N, 0), 0}})});
  for (int i = 0; i + 1 < n; ++i)
    pairs.push_back({make_poly(N, {{unit(N, i, static_cast<int>(d)), 0}}),
                     make_poly(N, {{unit(N, i + 1), 0}})});
  pairs.push_back({make_poly(N, {{Exponent(N, 0), 0}}),
                   make_poly(N, {{unit(N, N - 1), 1}})});
  if (minplus) {
    for (auto& [l, r] : pairs) {
      MinPlusPolynomial p;
      p.lhs = l;
      p.rhs = r;
      F.minplus.push_back(std::move(p));
    }
  } else {
    for (auto& [l, r] : pairs) {
      TropicalPolynomial f = l;
      for (const auto& [e, c] : r.terms) f.terms[e] = c;
      F.tropical.push_back(std::move(f));
    }
  }
  fx.system = F;
  // explicit solution: monomial of weight k d^(n-1) + s gets value -k
  long dn = ipow(d, n - 1);
  for (const auto& I : degree_simplex(static_cast<int>(n), fx.explicit_degree)) {
    long w = 0;
    for (long i = 0; i < n; ++i) w += I[i] * ipow(d, i);
    fx.explicit_solution[I] = Rat(-(w / dn));
  }
  return fx;
}

Fixture inf_family_fixture(long n, long d, bool minplus) {
  if (n < 2) throw std::invalid_argument("inf_family: n >= 2 required");
  Fixture fx;
  fx.name = minplus ? "inf_family_minplus" : "inf_family";
  fx.has_root = false;
  fx.explicit_degree = ipow(d, n - 1) - 1;
  // variables x_1..x_n, y (y last)
  int N = static_cast<int>(n) + 1;
  int yvar = N - 1;
  PolySystem F;
  F.semiring = Semiring::Rinf;
  F.kind = minplus ? SystemKind::MinPlus : SystemKind::Tropical;
  F.num_vars = N;
  std::vector<std::pair<TropicalPolynomial, TropicalPolynomial>> pairs;
  Exponent x1y(N, 0);
  x1y[0] = 1;
  x1y[yvar] = 1;
  pairs.push_back({make_poly(N, {{x1y, 0}}),
                   make_poly(N, {{Exponent(N, 0), 0}})});
  for (int i = 0; i + 1 < n; ++i)
    pairs.push_back({make_poly(N, {{unit(N, i, static_cast<int>(d)), 0}}),
                     make_poly(N, {{unit(N, i + 1), 0}})});
  pairs.push_back(
      {make_poly(N, {{unit(N, static_cast<int>(n) - 2, static_cast<int>(d)), 0}}),
       make_poly(N, {{unit(N, static_cast<int>(n) - 1), 1}})});
  if (minplus) {
    for (auto& [l, r] : pairs) {
      MinPlusPolynomial p;
      p.lhs = l;
      p.rhs = r;
      F.minplus.push_back(std::move(p));
    }
  } else {
    for (auto& [l, r] : pairs) {
      TropicalPolynomial f = l;
      for (const auto& [e, c] : r.terms) f.terms[e] = c;
      F.tropical.push_back(std::move(f));
    }
  }
  fx.system = F;
  // finite exactly on monomials whose y-degree equals their x-weight
  for (const auto& I : degree_simplex(N, fx.explicit_degree)) {
    long w = 0;
    for (long i = 0; i < n; ++i) w += I[i] * ipow(d, i);
    if (I[yvar] == w) fx.explicit_solution[I] = 0;
  }
  return fx;
}

// Ring construction: constant on odd max-norm rings, cone-shaped on even
// rings, glued continuously. The ring width is 10 at the published degree
// and grows with N: a 2x2 block straddling a plateau-to-cone ring corner
// (shift (w-1, w-1)) has a unique row minimum, so such shifts must stay out
// of the truncation.
Rat pyramid_candidate(long x, long y, long w) {
  long r = std::max(x, y);
  long k = r == 0 ? 1 : (r + w - 1) / w;
  if (k % 2 == 1) {
    // constant c_k = w * (k-1)/2
    return Rat(w * ((k - 1) / 2));
  }
  // even ring: r - w(k-1) + c_{k-1}
  return Rat(r - w * (k - 1) + w * ((k - 2) / 2));
}

Fixture pyramid_fixture(long N) {
  Fixture fx;
  fx.name = "stepped_pyramid";
  fx.has_root = true;
  fx.explicit_degree = N;
  long width = std::max(10L, N / 2 + 1);
  PolySystem F;
  F.semiring = Semiring::R;
  F.kind = SystemKind::Tropical;
  F.num_vars = 2;
  TropicalPolynomial f;
  f.num_vars = 2;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      bool inner = a >= 1 && a <= 2 && b >= 1 && b <= 2;
      f.terms[{a, b}] = Rat(inner ? -1 : 0);
    }
  F.tropical.push_back(f);
  fx.system = F;
  for (const auto& I : degree_simplex(2, N))
    fx.explicit_solution[I] = pyramid_candidate(I[0], I[1], width);
  return fx;
}

Fixture stripes_fixture(long N) {
  Fixture fx;
  fx.name = "stripes";
  fx.has_root = true;
  fx.explicit_degree = N;
  PolySystem F;
  F.semiring = Semiring::R;
  F.kind = SystemKind::Tropical;
  F.num_vars = 2;
  TropicalPolynomial f;
  f.num_vars = 2;
  f.terms[{0, 0}] = 0;
  f.terms[{0, 1}] = -1;
  f.terms[{0, 2}] = 0;
  f.terms[{1, 0}] = 0;
  f.terms[{1, 1}] = -1;
  f.terms[{1, 2}] = 0;
  F.tropical.push_back(f);
  fx.system = F;
  for (const auto& I : degree_simplex(2, N)) {
    long x = I[0], y = I[1];
    fx.explicit_solution[I] = Rat((x / 2) % 2 == 0 ? y : -y);
  }
  return fx;
}

long param(const std::map<std::string, long>& ps, const std::string& key,
           long fallback) {
  auto it = ps.find(key);
  return it == ps.end() ? fallback : it->second;
}

}  // namespace

Fixture generate_fixture(const std::string& name,
                         const std::map<std::string, long>& params) {
  long n = param(params, "n", 2);
  long d = param(params, "d", 2);
  long N = param(params, "N", 10);
  if (name == "lmp") return lmp_fixture(n, d, false);
  if (name == "lmp_minplus") return lmp_fixture(n, d, true);
  if (name == "inf_family") return inf_family_fixture(n, d, false);
  if (name == "inf_family_minplus") return inf_family_fixture(n, d, true);
  if (name == "stepped_pyramid") return pyramid_fixture(N);
  if (name == "stripes") return stripes_fixture(N);
  throw std::invalid_argument("generate_fixture: unknown fixture " + name);
}

}  // namespace tropsatz
