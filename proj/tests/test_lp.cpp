#include <doctest.h>

#include <random>

#include "tropsatz/lp.hpp"

using namespace tropsatz;

namespace {
LinConstraint cons(std::vector<Rat> c, CmpOp op, Rat rhs) {
  return {std::move(c), op, std::move(rhs)};
}
}  // namespace

TEST_CASE("fm_feasible basics") {
  // x >= 0, x <= 0  ->  x = 0
  auto r = fm_feasible({cons({1}, CmpOp::Ge, 0), cons({1}, CmpOp::Le, 0)}, 1);
  REQUIRE(r.has_value());
  CHECK((*r)[0] == 0);
  // x > 0, x < 0 -> none
  CHECK(!fm_feasible({cons({1}, CmpOp::Gt, 0), cons({1}, CmpOp::Lt, 0)}, 1));
  // x + y = 1, x >= 0, y >= 2 -> none
  CHECK(!fm_feasible({cons({1, 1}, CmpOp::Eq, 1), cons({1, 0}, CmpOp::Ge, 0),
                      cons({0, 1}, CmpOp::Ge, 2)},
                     2));
  // strict sandwich with a witness
  auto s = fm_feasible({cons({1}, CmpOp::Gt, 3), cons({1}, CmpOp::Lt, 4)}, 1);
  REQUIRE(s.has_value());
  CHECK((*s)[0] > 3);
  CHECK((*s)[0] < 4);
}

TEST_CASE("fm_feasible witness satisfies random systems") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3), rhs(-4, 4), opd(0, 4),
      nc(1, 6);
  for (int t = 0; t < 300; ++t) {
    int n = 1 + t % 3;
    std::vector<LinConstraint> cs;
    int m = nc(rng);
    for (int i = 0; i < m; ++i) {
      LinConstraint c;
      for (int j = 0; j < n; ++j) c.coef.push_back(Rat(coef(rng)));
      c.op = static_cast<CmpOp>(opd(rng));
      c.rhs = rhs(rng);
      cs.push_back(c);
    }
    auto r = fm_feasible(cs, n);
    if (!r) continue;
    for (const auto& c : cs) {
      Rat lhs(0);
      for (int j = 0; j < n; ++j) lhs += c.coef[j] * (*r)[j];
      switch (c.op) {
        case CmpOp::Le: CHECK(lhs <= c.rhs); break;
        case CmpOp::Lt: CHECK(lhs < c.rhs); break;
        case CmpOp::Eq: CHECK(lhs == c.rhs); break;
        case CmpOp::Ge: CHECK(lhs >= c.rhs); break;
        case CmpOp::Gt: CHECK(lhs > c.rhs); break;
      }
    }
  }
}

TEST_CASE("fm agrees with a rational grid search on 2-variable systems") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> coef(-2, 2), rhs(-2, 2), opd(0, 4);
  for (int t = 0; t < 200; ++t) {
    std::vector<LinConstraint> cs;
    for (int i = 0; i < 3; ++i) {
      LinConstraint c;
      c.coef = {Rat(coef(rng)), Rat(coef(rng))};
      c.op = static_cast<CmpOp>(opd(rng));
      c.rhs = rhs(rng);
      cs.push_back(c);
    }
    bool grid_hit = false;
    for (int a = -12; a <= 12 && !grid_hit; ++a)
      for (int b = -12; b <= 12 && !grid_hit; ++b) {
        Rat x(a, 2), y(b, 2);
        bool ok = true;
        for (const auto& c : cs) {
          Rat lhs = c.coef[0] * x + c.coef[1] * y;
          bool sat = c.op == CmpOp::Le   ? lhs <= c.rhs
                     : c.op == CmpOp::Lt ? lhs < c.rhs
                     : c.op == CmpOp::Eq ? lhs == c.rhs
                     : c.op == CmpOp::Ge ? lhs >= c.rhs
                                         : lhs > c.rhs;
          if (!sat) {
            ok = false;
            break;
          }
        }
        grid_hit = ok;
      }
    auto r = fm_feasible(cs, 2);
    if (grid_hit) CHECK(r.has_value());
    // (feasible off-grid systems may exist, so no converse check)
  }
}

TEST_CASE("simplex optimizes and detects status") {
  // min x + y st x + y >= 2, x >= 0, y >= 0
  auto r = lp_minimize({Rat(1), Rat(1)},
                       {cons({1, 1}, CmpOp::Ge, 2), cons({1, 0}, CmpOp::Ge, 0),
                        cons({0, 1}, CmpOp::Ge, 0)});
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.objective == 2);
  // unbounded
  auto u = lp_minimize({Rat(1)}, {cons({1}, CmpOp::Le, 0)});
  CHECK(u.status == LpResult::Status::Unbounded);
  // infeasible
  auto inf = lp_minimize(
      {Rat(1)}, {cons({1}, CmpOp::Ge, 1), cons({1}, CmpOp::Le, 0)});
  CHECK(inf.status == LpResult::Status::Infeasible);
  // equality handling with fractions
  auto e = lp_maximize({Rat(1), Rat(0)},
                       {cons({2, 3}, CmpOp::Eq, 1), cons({0, 1}, CmpOp::Ge, 0),
                        cons({1, 0}, CmpOp::Le, 5)});
  REQUIRE(e.status == LpResult::Status::Optimal);
  CHECK(e.objective == Rat(1, 2));
}

TEST_CASE("simplex matches fm on random bounded feasibility") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coef(-3, 3), rhs(-3, 3);
  for (int t = 0; t < 150; ++t) {
    int n = 1 + t % 3;
    std::vector<LinConstraint> cs;
    // box to keep everything bounded
    for (int j = 0; j < n; ++j) {
      std::vector<Rat> e(n, Rat(0));
      e[j] = 1;
      cs.push_back(cons(e, CmpOp::Le, 10));
      cs.push_back(cons(e, CmpOp::Ge, -10));
    }
    for (int i = 0; i < 4; ++i) {
      LinConstraint c;
      for (int j = 0; j < n; ++j) c.coef.push_back(Rat(coef(rng)));
      c.op = (t + i) % 2 ? CmpOp::Le : CmpOp::Ge;
      c.rhs = rhs(rng);
      cs.push_back(c);
    }
    auto viafm = fm_feasible(cs, n);
    auto viasx = lp_minimize(std::vector<Rat>(n, Rat(0)), cs);
    CHECK(viafm.has_value() == (viasx.status == LpResult::Status::Optimal));
  }
}
