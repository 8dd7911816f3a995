#include "tropsatz/nullsatz.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "tropsatz/duality.hpp"
#include "tropsatz/game.hpp"
#include "tropsatz/geometry.hpp"

namespace tropsatz {

namespace {

std::map<Exponent, Rat> coefficient_fn(const PolySystem& F, int i) {
  if (F.kind == SystemKind::Tropical) return F.tropical[i].terms;
  return colored_coefficients(F.minplus[i]).values;
}

bool has_finite_constant(const PolySystem& F, int i) {
  auto phi = coefficient_fn(F, i);
  return phi.count(Exponent(F.num_vars, 0)) > 0;
}

std::set<int> all_columns(const MonomialIndex& ix) {
  std::set<int> s;
  for (long j = 0; j < ix.size(); ++j) s.insert(static_cast<int>(j));
  return s;
}

std::map<Exponent, Rat> solution_fn(const MonomialIndex& ix, const Point& y) {
  std::map<Exponent, Rat> phi;
  for (long j = 0; j < ix.size(); ++j)
    if (y.coords[j].is_finite()) phi[ix.exponent(j)] = y.coords[j].value();
  return phi;
}

std::vector<LiftedPointSet> newtons(const PolySystem& F) {
  std::vector<LiftedPointSet> out;
  if (F.kind == SystemKind::Tropical)
    for (const auto& f : F.tropical) out.push_back(newton(f));
  else
    for (const auto& p : F.minplus) out.push_back(newton(p));
  return out;
}

// Solve the Macaulay system of F at degree N; all columns finite over R,
// the constant column finite for the non-homogeneous system over R with
// infinity.
std::optional<Point> solve_macaulay(const PolySystem& F,
                                    const MacaulaySystem& M, bool all_finite) {
  std::set<int> need =
      all_finite
          ? all_columns(M.index)
          : std::set<int>{static_cast<int>(M.index.constant_column())};
  if (F.kind == SystemKind::Tropical) {
    TropMatrix A = materialize_tropical(F, M);
    return solve_tropical(A, need);
  }
  MinPlusSystem S = materialize_minplus(F, M);
  return solve_nonstrict(eq_to_ineq(S), need, {});
}

// Extraction attempt: Macaulay solution -> candidate root of F through the
// enveloping polytope; nullopt when the singular set is empty or the
// candidate fails verification.
std::optional<Point> try_extraction(const PolySystem& F,
                                    const MonomialIndex& ix, const Point& y) {
  auto phi_a = solution_fn(ix, y);
  if (phi_a.empty()) return std::nullopt;
  LiftedPointSet P0 = envelope_pruned(newtons(F));
  auto root = extract_root(phi_a, P0);
  if (!root) return std::nullopt;
  if (!is_root_system(F, *root)) return std::nullopt;
  return root;
}

long ladder_start(const PolySystem& F) { return std::max(1L, F.max_degree()); }

long next_rung(long N, const Int& bound) {
  if (N > LONG_MAX / 4)
    throw std::overflow_error("decide: Macaulay degree out of range");
  Int doubled = Int(2 * N);
  if (doubled >= bound && bound.fits_slong_p()) return bound.get_si();
  return 2 * N;
}

bool at_bound(long N, const Int& bound) { return Int(N) >= bound; }

}  // namespace

DecideResult decide_dual_R(const PolySystem& F) {
  if (F.size() == 0) throw std::invalid_argument("decide_dual_R: empty system");
  Int bound = degree_bound(Semiring::R, F.num_vars, F.degrees());
  long N = std::min(Int(ladder_start(F)), bound).get_si();
  while (true) {
    MacaulaySystem M = build_macaulay(F, N);
    auto y = solve_macaulay(F, M, /*all_finite=*/true);
    if (!y) {
      DecideResult r;
      r.has_root = false;
      r.certificate_degree = N;
      return r;
    }
    if (auto root = try_extraction(F, M.index, *y)) {
      DecideResult r;
      r.has_root = true;
      r.root = *root;
      return r;
    }
    if (at_bound(N, bound))
      throw std::logic_error(
          "decide_dual_R: extraction failed at the theorem bound");
    N = next_rung(N, bound);
  }
}

// ---------------------------------------------------------------------------
// F' construction

namespace {

// Shift every coefficient of polynomial i so that min phi_i = 0; preserves
// roots (min-plus pairs are shifted on both sides together).
PolySystem normalize_min_zero(const PolySystem& F) {
  PolySystem out = F;
  for (size_t i = 0; i < F.size(); ++i) {
    auto phi = coefficient_fn(F, static_cast<int>(i));
    if (phi.empty()) continue;
    Rat m = phi.begin()->second;
    for (const auto& [e, c] : phi) m = std::min(m, c);
    if (out.kind == SystemKind::Tropical) {
      for (auto& [e, c] : out.tropical[i].terms) c -= m;
    } else {
      for (auto& [e, c] : out.minplus[i].lhs.terms) c -= m;
      for (auto& [e, c] : out.minplus[i].rhs.terms) c -= m;
    }
  }
  return out;
}

void trop_sum_into(TropicalPolynomial& acc, const TropicalPolynomial& f,
                   const Rat& coef, const Exponent& shift) {
  for (const auto& [e, c] : f.terms) {
    Exponent ee = add_exponents(e, shift);
    Rat cc = c + coef;
    auto it = acc.terms.find(ee);
    if (it == acc.terms.end())
      acc.terms[ee] = cc;
    else
      it->second = std::min(it->second, cc);
  }
}

PolySystem reorder_first(const PolySystem& F, int first) {
  PolySystem out = F;
  if (F.kind == SystemKind::Tropical)
    std::swap(out.tropical[0], out.tropical[first]);
  else
    std::swap(out.minplus[0], out.minplus[first]);
  return out;
}

}  // namespace

FPrimeSystem build_f_prime(const PolySystem& F, int first) {
  if (!has_finite_constant(F, first))
    throw std::invalid_argument(
        "build_f_prime: chosen polynomial lacks a finite constant term");
  PolySystem G = normalize_min_zero(reorder_first(F, first));
  int n = F.num_vars;
  long k = static_cast<long>(F.size());
  long d = std::max(1L, F.max_degree());
  long mnk = std::min(static_cast<long>(n), k);

  FPrimeSystem out;
  // with every minimum at zero the joint variation is the largest
  // coefficient; floored at 1 to avoid C = 0
  Rat delta(0);
  for (size_t i = 0; i < G.size(); ++i)
    for (const auto& [e, c] : coefficient_fn(G, static_cast<int>(i)))
      delta = std::max(delta, c);
  if (delta == 0) delta = 1;
  Int fourd = Int(4 * d);
  Int apow, cpow;
  mpz_pow_ui(apow.get_mpz_t(), fourd.get_mpz_t(),
             static_cast<unsigned long>(mnk + 2));
  mpz_pow_ui(cpow.get_mpz_t(), fourd.get_mpz_t(),
             static_cast<unsigned long>(2 * mnk + 2));
  if (!apow.fits_slong_p() || apow > 1000000)
    throw std::overflow_error("build_f_prime: alpha out of desk range");
  out.delta = delta;
  out.alpha = apow.get_si();
  out.big_c = delta * 2 * Rat(cpow);

  out.polys.semiring = Semiring::Rinf;
  out.polys.kind = G.kind;
  out.polys.num_vars = n;

  auto emit = [&](const std::vector<std::pair<int, Rat>>& gparts) {
    // f1 plus, per variable j, (coef) x_j^alpha (x) f_i
    std::vector<CombinationPart> prov;
    prov.push_back({0, false, Rat(0), Exponent(n, 0)});
    if (G.kind == SystemKind::Tropical) {
      TropicalPolynomial acc = G.tropical[0];
      for (int j = 0; j < n; ++j) {
        const auto& [i, coef] = gparts[j];
        Exponent shift(n, 0);
        shift[j] = static_cast<int>(out.alpha);
        trop_sum_into(acc, G.tropical[i], coef, shift);
        prov.push_back({i, false, coef, shift});
      }
      out.polys.tropical.push_back(std::move(acc));
    } else {
      MinPlusPolynomial acc = G.minplus[0];
      for (int j = 0; j < n; ++j) {
        const auto& [i, coef] = gparts[j];
        Exponent shift(n, 0);
        shift[j] = static_cast<int>(out.alpha);
        trop_sum_into(acc.lhs, G.minplus[i].lhs, coef, shift);
        trop_sum_into(acc.rhs, G.minplus[i].rhs, coef, shift);
        prov.push_back({i, false, coef, shift});
      }
      out.polys.minplus.push_back(std::move(acc));
    }
    out.provenance.push_back(std::move(prov));
  };

  // f1 itself
  if (G.kind == SystemKind::Tropical)
    out.polys.tropical.push_back(G.tropical[0]);
  else
    out.polys.minplus.push_back(G.minplus[0]);
  out.provenance.push_back({{0, false, Rat(0), Exponent(n, 0)}});

  for (int i = 1; i < static_cast<int>(k); ++i) {
    std::vector<std::pair<int, Rat>> base(n, {i, -out.big_c});
    emit(base);  // f'_i
    for (int j = 0; j < n; ++j) {
      auto parts = base;
      parts[j].second = -out.big_c - 1;
      emit(parts);  // f'_ij
    }
  }
  out.num_polys = static_cast<long>(out.polys.size());
  out.max_degree = out.polys.max_degree();
  return out;
}

Point infinity_restrict(const PolySystem& F, int first, const Point& b,
                        RestrictTrace* trace) {
  if (!b.all_finite())
    throw std::invalid_argument("infinity_restrict: root must be finite");
  int n = F.num_vars;
  long k = static_cast<long>(F.size());
  std::vector<std::set<Exponent>> sings(k);
  for (long i = 0; i < k; ++i) {
    auto phi = coefficient_fn(F, static_cast<int>(i));
    std::vector<Exponent> dom;
    for (const auto& [e, c] : phi) dom.push_back(e);
    auto chi = hyperplane_fn(b, dom);
    sings[i] = sing_set(chi, phi).points;
  }
  auto support = [&](const std::set<Exponent>& pts, std::set<int>& into) {
    for (const auto& x : pts)
      for (int j = 0; j < n; ++j)
        if (x[j] != 0) into.insert(j);
  };
  auto restricted_count = [&](const std::set<Exponent>& pts,
                              const std::set<int>& S) {
    size_t cnt = 0;
    for (const auto& x : pts) {
      bool inside = true;
      for (int j = 0; j < n; ++j)
        if (x[j] != 0 && !S.count(j)) inside = false;
      if (inside) ++cnt;
    }
    return cnt;
  };
  auto dom_restricted_nonempty = [&](int i, const std::set<int>& S) {
    for (const auto& [e, c] : coefficient_fn(F, i)) {
      bool inside = true;
      for (int j = 0; j < n; ++j)
        if (e[j] != 0 && !S.count(j)) inside = false;
      if (inside) return true;
    }
    return false;
  };

  std::set<int> S;
  support(sings[first], S);
  std::vector<std::set<int>> stages{S};
  bool grew = true;
  while (grew) {
    grew = false;
    for (long i = 0; i < k; ++i) {
      if (sings[i].size() > restricted_count(sings[i], S) &&
          dom_restricted_nonempty(static_cast<int>(i), S)) {
        support(sings[i], S);
        stages.push_back(S);
        grew = true;
        break;
      }
    }
  }

  Point out = b;
  for (int j = 0; j < n; ++j)
    if (!S.count(j)) out.coords[j] = ExtValue::infinity();

  if (trace) {
    trace->stages = stages;
    trace->growth_claim_ok = true;
    // monitored bound on the negated root coordinates, stage by stage
    long d = std::max(1L, F.max_degree());
    PolySystem G = normalize_min_zero(F);
    Rat delta(0);
    for (size_t i = 0; i < G.size(); ++i)
      for (const auto& [e, c] : coefficient_fn(G, static_cast<int>(i)))
        delta = std::max(delta, c);
    if (delta == 0) delta = 1;
    Rat fd(1);
    for (size_t l = 0; l < stages.size(); ++l) {
      Rat threshold = -2 * delta * fd;
      Rat next_fd = fd * Rat(4 * d);
      for (int j : stages[l]) {
        Rat bj = -b.coords[j].value();
        if (bj <= threshold) {
          bool found = false;
          for (int jp : stages[l]) {
            Rat bp = -b.coords[jp].value();
            if (bp >= abs(bj) / next_fd) found = true;
          }
          if (!found) trace->growth_claim_ok = false;
        }
      }
      fd = next_fd;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The R-with-infinity driver

namespace {

// Finite-pattern search: every root over R with infinity restricts, away
// from its infinite coordinates, to a finite root of the reduced system
// over R, and conversely any such finite root assembles back.
std::optional<Point> pattern_search(const PolySystem& F) {
  int n = F.num_vars;
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  for (unsigned mask : masks) {
    std::vector<int> kept;
    for (int j = 0; j < n; ++j)
      if (!(mask & (1u << j))) kept.push_back(j);
    PolySystem R;
    R.semiring = Semiring::R;
    R.kind = F.kind;
    R.num_vars = static_cast<int>(kept.size());
    bool dead = false;
    auto restrict_poly = [&](const TropicalPolynomial& f) {
      TropicalPolynomial g;
      g.num_vars = R.num_vars;
      for (const auto& [e, c] : f.terms) {
        bool alive = true;
        for (int j = 0; j < n; ++j)
          if ((mask & (1u << j)) && e[j] > 0) alive = false;
        if (!alive) continue;
        Exponent ee;
        for (int j : kept) ee.push_back(e[j]);
        g.terms[ee] = c;
      }
      return g;
    };
    if (F.kind == SystemKind::Tropical) {
      for (const auto& f : F.tropical) {
        auto g = restrict_poly(f);
        if (g.terms.empty()) continue;  // evaluates to infinity: satisfied
        if (g.terms.size() == 1) {
          dead = true;  // finite minimum attained once, nothing can fix it
          break;
        }
        R.tropical.push_back(std::move(g));
      }
    } else {
      for (const auto& p : F.minplus) {
        auto l = restrict_poly(p.lhs), r = restrict_poly(p.rhs);
        if (l.terms.empty() && r.terms.empty()) continue;
        if (l.terms.empty() || r.terms.empty()) {
          dead = true;  // one side infinite, the other finite
          break;
        }
        MinPlusPolynomial q;
        q.lhs = std::move(l);
        q.rhs = std::move(r);
        R.minplus.push_back(std::move(q));
      }
    }
    if (dead) continue;
    Point full;
    full.coords.assign(n, ExtValue::infinity());
    if (R.size() == 0) {
      for (int j : kept) full.coords[j] = ExtValue(0);
    } else {
      auto sub = decide_dual_R(R);
      if (!sub.has_root) continue;
      for (size_t q = 0; q < kept.size(); ++q)
        full.coords[kept[q]] = sub.root.coords[q];
    }
    if (is_root_system(F, full)) return full;
  }
  return std::nullopt;
}

int first_finite_constant(const PolySystem& F) {
  for (size_t i = 0; i < F.size(); ++i)
    if (has_finite_constant(F, static_cast<int>(i)))
      return static_cast<int>(i);
  return -1;
}

// The paper pipeline at one rung: the Macaulay solution of F also solves
// the F' system (rows of the latter are tropical combinations of rows of
// the former at the same degree); extract a finite root of F' from the F'
// enveloping polytope and restrict it to a root of F.
std::optional<Point> f_prime_route(const PolySystem& F, int first,
                                   const MonomialIndex& ix, const Point& y) {
  FPrimeSystem FP = build_f_prime(F, first);
  auto phi_a = solution_fn(ix, y);
  if (phi_a.empty()) return std::nullopt;
  LiftedPointSet P0 = envelope_pruned(newtons(FP.polys));
  auto broot = extract_root(phi_a, P0);
  if (!broot) return std::nullopt;
  if (!broot->all_finite()) return std::nullopt;
  if (!is_root_system(FP.polys, *broot)) return std::nullopt;
  PolySystem ordered = reorder_first(F, first);
  Point restricted = infinity_restrict(ordered, 0, *broot);
  if (!is_root_system(F, restricted)) return std::nullopt;
  return restricted;
}

}  // namespace

DecideResult decide_dual_Rinf(const PolySystem& F) {
  if (F.size() == 0)
    throw std::invalid_argument("decide_dual_Rinf: empty system");
  int first = first_finite_constant(F);
  if (first < 0) {
    // the constant column of the Macaulay matrix is entirely infinite; the
    // all-infinite point roots both systems
    DecideResult r;
    r.has_root = true;
    r.root.coords.assign(F.num_vars, ExtValue::infinity());
    if (!is_root_system(F, r.root))
      throw std::logic_error("decide_dual_Rinf: infinite root rejected");
    return r;
  }
  Int bound = degree_bound(Semiring::Rinf, F.num_vars, F.degrees());
  long N = ladder_start(F);
  bool pattern_tried = false;
  while (true) {
    MacaulaySystem M = build_macaulay(F, N);
    auto y = solve_macaulay(F, M, /*all_finite=*/false);
    if (!y) {
      DecideResult r;
      r.has_root = false;
      r.certificate_degree = N;
      return r;
    }
    if (!pattern_tried) {
      if (auto root = f_prime_route(F, first, M.index, *y)) {
        DecideResult r;
        r.has_root = true;
        r.root = *root;
        return r;
      }
      pattern_tried = true;
      if (auto root = pattern_search(F)) {
        DecideResult r;
        r.has_root = true;
        r.root = *root;
        return r;
      }
      // the pattern search is exhaustive, so no root exists; keep raising
      // the degree until the Macaulay system turns unsolvable (guaranteed
      // at the theorem bound), skipping further extraction attempts
    }
    if (at_bound(N, bound))
      throw std::logic_error(
          "decide_dual_Rinf: unresolved at the theorem bound");
    N = next_rung(N, bound);
  }
}

DecideResult decide_dual(const PolySystem& F) {
  return F.semiring == Semiring::R ? decide_dual_R(F) : decide_dual_Rinf(F);
}

// ---------------------------------------------------------------------------
// Primary certificates

namespace {

std::map<Exponent, Rat> combination_side(
    const PolySystem& F, const std::vector<CombinationPart>& parts,
    bool big_side) {
  std::map<Exponent, Rat> acc;
  for (const auto& p : parts) {
    const TropicalPolynomial* side = nullptr;
    if (F.kind == SystemKind::Tropical) {
      side = &F.tropical[p.poly];
    } else {
      const auto& mp = F.minplus[p.poly];
      // parts used as-is put the f side into the big combination
      side = (big_side != p.swapped) ? &mp.lhs : &mp.rhs;
    }
    for (const auto& [e, c] : side->terms) {
      Exponent ee = add_exponents(e, p.shift);
      Rat cc = c + p.coef;
      auto it = acc.find(ee);
      if (it == acc.end())
        acc[ee] = cc;
      else
        it->second = std::min(it->second, cc);
    }
  }
  return acc;
}

}  // namespace

Certificate extract_primary(const PolySystem& F, long N) {
  MacaulaySystem M = build_macaulay(F, N);
  bool rinf = F.semiring == Semiring::Rinf;
  std::set<int> S =
      rinf ? std::set<int>{static_cast<int>(M.index.constant_column())}
           : all_columns(M.index);
  Certificate cert;
  if (F.kind == SystemKind::Tropical) {
    TropMatrix A = materialize_tropical(F, M);
    auto out = tropical_alternative(A, S, FinitenessFlavor::FinAll);
    if (out.primal)
      throw std::logic_error("extract_primary: system is still solvable");
    cert.kind = Certificate::Kind::Nonsingular;
    for (size_t r = 0; r < M.rows.size(); ++r)
      if (out.witness.coords[r].is_finite())
        cert.nonsingular.parts.push_back({M.rows[r].poly, false,
                                          out.witness.coords[r].value(),
                                          M.rows[r].shift});
  } else {
    MinPlusSystem S2 = materialize_minplus(F, M);
    MinPlusSystem stacked = eq_to_ineq(S2);
    auto out = minplus_alternative(stacked.lhs, stacked.rhs, S,
                                   FinitenessFlavor::FinAll);
    if (out.primal)
      throw std::logic_error("extract_primary: system is still solvable");
    cert.kind = Certificate::Kind::Dominated;
    size_t m = M.rows.size();
    for (size_t r = 0; r < 2 * m; ++r)
      if (out.witness.coords[r].is_finite())
        cert.dominated.parts.push_back({M.rows[r % m].poly, r >= m,
                                        out.witness.coords[r].value(),
                                        M.rows[r % m].shift});
  }
  Int bound = degree_bound(F.semiring, F.num_vars, F.degrees());
  if (!verify_primary(F, cert, std::max(bound, Int(N))))
    throw std::logic_error("extract_primary: certificate failed verification");
  return cert;
}

bool verify_primary(const PolySystem& F, const Certificate& cert,
                    const Int& max_degree) {
  bool rinf = F.semiring == Semiring::Rinf;
  if (cert.kind == Certificate::Kind::Root)
    return is_root_system(F, cert.root);
  if (cert.kind == Certificate::Kind::Nonsingular) {
    if (F.kind != SystemKind::Tropical) return false;
    const auto& parts = cert.nonsingular.parts;
    if (parts.empty()) return false;
    for (const auto& p : parts) {
      if (p.poly < 0 || p.poly >= static_cast<int>(F.size())) return false;
      if (Int(degree(p.shift) + F.tropical[p.poly].degree()) > max_degree)
        return false;
    }
    // coefficient of every monomial per part
    std::map<Exponent, std::vector<std::pair<size_t, Rat>>> table;
    for (size_t idx = 0; idx < parts.size(); ++idx) {
      const auto& p = parts[idx];
      for (const auto& [e, c] : F.tropical[p.poly].terms)
        table[add_exponents(e, p.shift)].push_back({idx, c + p.coef});
    }
    std::set<size_t> used;
    for (auto& [m, entries] : table) {
      std::sort(
          entries.begin(), entries.end(),
          [](const auto& a, const auto& b) { return a.second < b.second; });
      if (entries.size() > 1 && entries[0].second == entries[1].second)
        return false;  // no unique strictly-minimal part
      if (!used.insert(entries[0].first).second) return false;  // injectivity
    }
    if (rinf && table.count(Exponent(F.num_vars, 0)) == 0) return false;
    return true;
  }
  if (F.kind != SystemKind::MinPlus) return false;
  const auto& parts = cert.dominated.parts;
  if (parts.empty()) return false;
  for (const auto& p : parts) {
    if (p.poly < 0 || p.poly >= static_cast<int>(F.size())) return false;
    if (Int(degree(p.shift) + F.minplus[p.poly].degree()) > max_degree)
      return false;
  }
  auto big = combination_side(F, parts, true);
  auto small = combination_side(F, parts, false);
  for (const auto& [m, c] : big) {
    auto it = small.find(m);
    if (it == small.end()) return false;  // f finite, g infinite
    if (!(c > it->second)) return false;
  }
  if (rinf && small.count(Exponent(F.num_vars, 0)) == 0) return false;
  return true;
}

}  // namespace tropsatz
