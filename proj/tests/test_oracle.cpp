#include <doctest.h>

#include <random>

#include "tropsatz/macaulay.hpp"
#include "tropsatz/oracle.hpp"

using namespace tropsatz;

namespace {

const ExtValue kInf = ExtValue::infinity();

TropicalPolynomial poly1(std::vector<std::pair<int, Rat>> terms) {
  TropicalPolynomial f;
  f.num_vars = 1;
  for (auto& [e, c] : terms) f.terms[{e}] = c;
  return f;
}

Point solution_point(const Fixture& fx, const MonomialIndex& ix) {
  Point y;
  for (long col = 0; col < ix.size(); ++col) {
    auto it = fx.explicit_solution.find(ix.exponent(col));
    y.coords.push_back(it == fx.explicit_solution.end()
                           ? ExtValue::infinity()
                           : ExtValue(it->second));
  }
  return y;
}

}  // namespace

TEST_CASE("oracle_solve basics") {
  PolySystem F;
  F.kind = SystemKind::Tropical;
  F.semiring = Semiring::R;
  F.num_vars = 1;
  F.tropical = {poly1({{0, 0}, {1, 0}}), poly1({{0, 0}, {1, 1}})};
  CHECK(!oracle_solve(F).has_value());  // the intro example has no roots
  PolySystem G;
  G.kind = SystemKind::Tropical;
  G.semiring = Semiring::R;
  G.num_vars = 1;
  G.tropical = {poly1({{0, 0}, {1, 0}})};
  auto r = oracle_solve(G);
  REQUIRE(r.has_value());
  CHECK(r->coords[0] == ExtValue(0));
  // single monomial over Rinf: rooted at infinity
  PolySystem H;
  H.kind = SystemKind::Tropical;
  H.semiring = Semiring::Rinf;
  H.num_vars = 1;
  H.tropical = {poly1({{1, 0}})};
  auto ri = oracle_solve(H);
  REQUIRE(ri.has_value());
  CHECK(ri->coords[0].is_inf());
  // same system over R: no root
  H.semiring = Semiring::R;
  CHECK(!oracle_solve(H).has_value());
}

TEST_CASE("oracle_solve agrees with grid search on random systems") {
  std::mt19937 rng(103);
  std::uniform_int_distribution<int> val(-2, 2), ex(0, 2), nt(1, 3), kk(1, 2);
  for (int t = 0; t < 150; ++t) {
    int n = 1 + t % 2;
    PolySystem F;
    F.semiring = t % 2 ? Semiring::Rinf : Semiring::R;
    F.kind = t % 3 ? SystemKind::Tropical : SystemKind::MinPlus;
    F.num_vars = n;
    int k = kk(rng);
    for (int i = 0; i < k; ++i) {
      if (F.kind == SystemKind::Tropical) {
        TropicalPolynomial f;
        f.num_vars = n;
        int terms = 1 + nt(rng);
        for (int q = 0; q < terms; ++q) {
          Exponent e(n);
          for (int j = 0; j < n; ++j) e[j] = ex(rng);
          f.terms[e] = Rat(val(rng));
        }
        F.tropical.push_back(std::move(f));
      } else {
        MinPlusPolynomial p;
        p.lhs.num_vars = p.rhs.num_vars = n;
        for (int q = 0; q < nt(rng); ++q) {
          Exponent e(n);
          for (int j = 0; j < n; ++j) e[j] = ex(rng);
          p.lhs.terms[e] = Rat(val(rng));
        }
        for (int q = 0; q < nt(rng); ++q) {
          Exponent e(n);
          for (int j = 0; j < n; ++j) e[j] = ex(rng);
          p.rhs.terms[e] = Rat(val(rng));
        }
        F.minplus.push_back(std::move(p));
      }
    }
    auto r = oracle_solve(F);
    if (r) CHECK(is_root_system(F, *r));
    // grid scan can only confirm solvability, not refute it
    bool grid_hit = false;
    std::vector<ExtValue> vals;
    for (int v = -3; v <= 3; ++v) vals.push_back(ExtValue(v));
    if (F.semiring == Semiring::Rinf) vals.push_back(kInf);
    std::vector<size_t> idx(n, 0);
    while (!grid_hit) {
      Point p;
      for (int i = 0; i < n; ++i) p.coords.push_back(vals[idx[i]]);
      if (is_root_system(F, p)) grid_hit = true;
      int i = 0;
      for (; i < n; ++i) {
        if (++idx[i] < vals.size()) break;
        idx[i] = 0;
      }
      if (i == n) break;
    }
    if (grid_hit) CHECK(r.has_value());
  }
}

TEST_CASE("oracle_game matches min_credits classification") {
  // exercised at scale in test_game; here the three 1x1 examples
  auto mk = [](ExtValue a, ExtValue b) {
    MinPlusSystem s;
    s.lhs = TropMatrix::dense({{a}});
    s.rhs = TropMatrix::dense({{b}});
    s.rel = Relation::Leq;
    return build_game(s);
  };
  CHECK(oracle_game(mk(ExtValue(0), ExtValue(1))).col_class[0] == 1);
  CHECK(oracle_game(mk(ExtValue(1), ExtValue(0))).col_class[0] == -1);
  CHECK(oracle_game(mk(ExtValue(0), ExtValue(0))).col_class[0] == 0);
}

TEST_CASE("lmp fixture facts") {
  for (auto [n, d] : std::vector<std::pair<long, long>>{{2, 2}, {3, 2}, {2, 3}}) {
    auto fx = generate_fixture("lmp", {{"n", n}, {"d", d}});
    CHECK(fx.system.tropical.size() == static_cast<size_t>(n + 1));
    CHECK(!oracle_solve(fx.system).has_value());
    CHECK(fx.explicit_degree == (d - 1) * (n - 1));
    // the explicit weight vector solves the small Macaulay system row by row
    auto M = build_macaulay(fx.system, fx.explicit_degree);
    auto A = materialize_tropical(fx.system, M);
    CHECK(check_tropical_solution(A, solution_point(fx, M.index)));
  }
  // lmp(2,2) spot check: columns (1, x1, x2), solution (0, 0, -1)
  auto fx = generate_fixture("lmp", {{"n", 2}, {"d", 2}});
  auto M = build_macaulay(fx.system, 1);
  auto y = solution_point(fx, M.index);
  CHECK(y.coords == std::vector<ExtValue>{ExtValue(0), ExtValue(0),
                                          ExtValue(-1)});
}

TEST_CASE("lmp min-plus twin") {
  for (auto [n, d] : std::vector<std::pair<long, long>>{{2, 2}, {3, 2}, {2, 3}}) {
    auto fx = generate_fixture("lmp_minplus", {{"n", n}, {"d", d}});
    CHECK(!oracle_solve(fx.system).has_value());
    auto M = build_macaulay(fx.system, fx.explicit_degree);
    auto S = materialize_minplus(fx.system, M);
    CHECK(check_minplus_solution(S, solution_point(fx, M.index)));
  }
}

TEST_CASE("inf_family fixture facts") {
  for (auto [n, d] : std::vector<std::pair<long, long>>{{2, 2}, {3, 2}}) {
    auto fx = generate_fixture("inf_family", {{"n", n}, {"d", d}});
    CHECK(fx.system.num_vars == n + 1);
    CHECK(!oracle_solve(fx.system).has_value());
    CHECK(fx.explicit_degree == [&] {
      long p = 1;
      for (int i = 1; i < n; ++i) p *= d;
      return p - 1;
    }());
    auto M = build_macaulay(fx.system, fx.explicit_degree);
    auto A = materialize_tropical(fx.system, M);
    Point y = solution_point(fx, M.index);
    CHECK(y.coords[M.index.constant_column()].is_finite());
    CHECK(check_tropical_solution(A, y));

    auto fm = generate_fixture("inf_family_minplus", {{"n", n}, {"d", d}});
    CHECK(!oracle_solve(fm.system).has_value());
    auto Mm = build_macaulay(fm.system, fm.explicit_degree);
    auto Sm = materialize_minplus(fm.system, Mm);
    CHECK(check_minplus_solution(Sm, solution_point(fm, Mm.index)));
  }
}

TEST_CASE("lmp connectivity: weights straddling multiples of d^(n-1)") {
  // monomials in the same row of the Macaulay matrix (ignoring the last
  // polynomial) have weights in the same block of size d^(n-1)
  for (auto [n, d] : std::vector<std::pair<long, long>>{{2, 2}, {3, 2}}) {
    auto fx = generate_fixture("lmp", {{"n", n}, {"d", d}});
    auto M = build_macaulay(fx.system, fx.explicit_degree);
    long dn = 1;
    for (int i = 1; i < n; ++i) dn *= d;
    auto weight = [&](const Exponent& I) {
      long w = 0, p = 1;
      for (long i = 0; i < n; ++i, p *= d) w += I[i] * p;
      return w;
    };
    for (const auto& row : M.rows) {
      if (row.poly == static_cast<int>(n)) continue;  // the last polynomial
      std::vector<long> ws;
      for (const auto& [e, c] : fx.system.tropical[row.poly].terms)
        ws.push_back(weight(add_exponents(e, row.shift)) / dn);
      for (long w : ws) CHECK(w == ws[0]);
    }
  }
}

TEST_CASE("stepped pyramid candidate solves its Macaulay rows") {
  for (long N : {10L, 24L}) {
    auto fx = generate_fixture("stepped_pyramid", {{"N", N}});
    auto M = build_macaulay(fx.system, N);
    auto A = materialize_tropical(fx.system, M);
    CHECK(check_tropical_solution(A, solution_point(fx, M.index)));
  }
  // not affine far from the origin: ring 1 is flat, ring 2 grows
  auto fx = generate_fixture("stepped_pyramid", {{"N", 24}});
  auto& sol = fx.explicit_solution;
  CHECK(sol.at({0, 0}) == sol.at({8, 0}));
  CHECK(sol.at({14, 0}) != sol.at({13, 0}));
}

TEST_CASE("stripes candidate solves rows and shows the value gaps") {
  for (long N : {10L, 24L}) {
    auto fx = generate_fixture("stripes", {{"N", N}});
    auto M = build_macaulay(fx.system, N);
    auto A = materialize_tropical(fx.system, M);
    CHECK(check_tropical_solution(A, solution_point(fx, M.index)));
  }
  auto fx = generate_fixture("stripes", {{"N", 20}});
  auto& sol = fx.explicit_solution;
  // |psi(x+2, y) - psi(x, y)| = 2|y|: gaps grow with y
  for (int y = 0; y <= 8; ++y)
    CHECK(abs(sol.at({0, y}) - sol.at({2, y})) == 2 * y);
}
