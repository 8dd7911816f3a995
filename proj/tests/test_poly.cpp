#include <doctest.h>

#include <random>

#include "tropsatz/poly.hpp"

using namespace tropsatz;

namespace {

TropicalPolynomial poly1(std::vector<std::pair<int, Rat>> terms) {
  TropicalPolynomial f;
  f.num_vars = 1;
  for (auto& [e, c] : terms) f.terms[{e}] = c;
  return f;
}

Point pt(std::vector<ExtValue> v) { return Point(std::move(v)); }

}  // namespace

TEST_CASE("eval_tropical") {
  // f = 0 (+) 0x at 0: both monomials tie at 0
  auto f = poly1({{0, 0}, {1, 0}});
  auto r = eval_tropical(f, pt({ExtValue(0)}));
  CHECK(r.value == ExtValue(0));
  CHECK(r.argmin == std::set<Exponent>{{0}, {1}});
  // single term at infinity: value infinite, empty argmin
  auto g = poly1({{1, 0}});
  auto ri = eval_tropical(g, pt({ExtValue::infinity()}));
  CHECK(ri.value.is_inf());
  CHECK(ri.argmin.empty());
  // f = 0 (+) 1x at 0: constant wins
  auto h = poly1({{0, 0}, {1, 1}});
  auto rh = eval_tropical(h, pt({ExtValue(0)}));
  CHECK(rh.value == ExtValue(0));
  CHECK(rh.argmin == std::set<Exponent>{{0}});
  CHECK_THROWS(eval_tropical(f, pt({ExtValue(0), ExtValue(0)})));
}

TEST_CASE("root predicates") {
  auto f1 = poly1({{0, 0}, {1, 0}});
  auto f2 = poly1({{0, 0}, {1, 1}});
  CHECK(is_root_tropical(f1, pt({ExtValue(0)})));
  CHECK(!is_root_tropical(f2, pt({ExtValue(0)})));
  PolySystem F;
  F.kind = SystemKind::Tropical;
  F.num_vars = 1;
  F.tropical = {f1, f2};
  CHECK(!is_root_system(F, pt({ExtValue(0)})));
  // single monomial is rooted at infinity
  CHECK(is_root_tropical(poly1({{1, 0}}), pt({ExtValue::infinity()})));

  MinPlusPolynomial p;
  p.lhs = poly1({{1, 0}});
  p.rhs = poly1({{0, 1}});
  CHECK(is_root_minplus(p, pt({ExtValue(1)})));
  MinPlusPolynomial q;
  q.lhs = poly1({{0, 0}});
  q.rhs = poly1({{1, 1}});
  CHECK(!is_root_minplus(q, pt({ExtValue(0)})));
  // both sides infinite count as equal
  MinPlusPolynomial w;
  w.lhs.num_vars = w.rhs.num_vars = 2;
  w.lhs.terms[{1, 0}] = 0;
  w.rhs.terms[{0, 1}] = 0;
  CHECK(is_root_minplus(w, pt({ExtValue::infinity(), ExtValue::infinity()})));
}

TEST_CASE("sing_set") {
  std::map<Exponent, Rat> phi{{{0}, 0}, {{1}, 0}, {{2}, 0}};
  std::map<Exponent, Rat> psi1{{{0}, 0}, {{1}, -1}, {{2}, 0}};
  auto s1 = sing_set(phi, psi1);
  REQUIRE(s1.shift.has_value());
  CHECK(*s1.shift == -1);
  CHECK(s1.points == std::set<Exponent>{{1}});
  CHECK(!is_singular(s1));

  std::map<Exponent, Rat> psi2{{{0}, 0}, {{1}, -1}, {{2}, -1}};
  auto s2 = sing_set(phi, psi2);
  CHECK(*s2.shift == -1);
  CHECK(s2.points == std::set<Exponent>{{1}, {2}});
  CHECK(is_singular(s2));

  std::map<Exponent, Rat> a{{{0}, 0}}, b{{{1}, 0}};
  auto s3 = sing_set(a, b);
  CHECK(!s3.shift.has_value());
  CHECK(s3.points.empty());
  CHECK(is_singular(s3));
}

TEST_CASE("colored coefficients and singularity") {
  MinPlusPolynomial p;  // (0 x, 0): black at x, white at constant
  p.lhs = poly1({{1, 0}});
  p.rhs = poly1({{0, 0}});
  ColoredFn f = colored_coefficients(p);
  CHECK(f.values.size() == 2);
  CHECK(f.colors[{1}] == std::make_pair(true, false));
  CHECK(f.colors[{0}] == std::make_pair(false, true));
  // shared point gets both colors
  MinPlusPolynomial q;
  q.lhs = poly1({{0, 3}});
  q.rhs = poly1({{0, 3}});
  ColoredFn g = colored_coefficients(q);
  CHECK(g.colors[{0}] == std::make_pair(true, true));

  std::map<Exponent, Rat> chi{{{0}, 0}, {{1}, 0}};
  auto s = sing_set_colored(chi, f);
  CHECK(is_singular_colored(s));  // both colors tie at shift 0
  std::map<Exponent, Rat> chi2{{{0}, 0}, {{1}, 5}};
  auto s2 = sing_set_colored(chi2, f);
  CHECK(!is_singular_colored(s2));  // only the white constant is singular
}

TEST_CASE("root/singularity correspondence on random rows") {
  // a satisfies the tropical row r iff -phi_a is singular to phi_r
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> val(-2, 2), coin(0, 3);
  for (int t = 0; t < 1000; ++t) {
    int n = 3 + t % 3;
    std::map<Exponent, Rat> phi_r, neg_phi_a;
    TropicalPolynomial row;
    row.num_vars = 1;
    Point a;
    for (int i = 0; i < n; ++i) {
      bool r_inf = coin(rng) == 0, a_inf = coin(rng) == 0;
      if (!r_inf) {
        Rat c(val(rng));
        phi_r[{i}] = c;
        row.terms[{i}] = c;
      }
      if (!a_inf) {
        Rat v(val(rng));
        neg_phi_a[{i}] = -v;
        a.coords.push_back(ExtValue(v));
      } else {
        a.coords.push_back(ExtValue::infinity());
      }
    }
    // row evaluation: min over stored terms of c_i + a_i
    ExtValue best = ExtValue::infinity();
    int cnt = 0;
    for (auto& [e, c] : row.terms) {
      ExtValue v = trop_mul(ExtValue(c), a.coords[e[0]]);
      if (v < best) {
        best = v;
        cnt = 1;
      } else if (v == best && v.is_finite()) {
        ++cnt;
      }
    }
    bool row_ok = best.is_inf() || cnt >= 2;
    CHECK(row_ok == is_singular(sing_set(neg_phi_a, phi_r)));
  }
}

TEST_CASE("hyperplane correspondence for roots") {
  // a in R^n is a root of f iff chi_a is singular to phi_f
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> val(-2, 2), nt(2, 5), ex(0, 2);
  for (int t = 0; t < 500; ++t) {
    int n = 1 + t % 2;
    TropicalPolynomial f;
    f.num_vars = n;
    int terms = nt(rng);
    for (int i = 0; i < terms; ++i) {
      Exponent e(n);
      for (int j = 0; j < n; ++j) e[j] = ex(rng);
      f.terms[e] = Rat(val(rng));
    }
    Point a;
    for (int j = 0; j < n; ++j) a.coords.push_back(ExtValue(Rat(val(rng), 2)));
    std::vector<Exponent> dom;
    for (auto& [e, c] : f.terms) dom.push_back(e);
    auto chi = hyperplane_fn(a, dom);
    std::map<Exponent, Rat> phi;
    for (auto& [e, c] : f.terms) phi[e] = c;
    CHECK(is_root_tropical(f, a) == is_singular(sing_set(chi, phi)));
  }
}

TEST_CASE("eval monotone in coefficients") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int t = 0; t < 300; ++t) {
    TropicalPolynomial f;
    f.num_vars = 2;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) f.terms[{i, j}] = Rat(val(rng));
    Point a({ExtValue(Rat(val(rng))),
             t % 5 ? ExtValue(Rat(val(rng), 2)) : ExtValue::infinity()});
    auto before = eval_tropical(f, a).value;
    auto g = f;
    auto it = std::next(g.terms.begin(), t % g.terms.size());
    it->second += 1;
    CHECK(eval_tropical(g, a).value >= before);
  }
}

TEST_CASE("degree_simplex") {
  auto s = degree_simplex(2, 2);
  CHECK(s.size() == 6);  // C(4,2)
  CHECK(s[0] == Exponent{0, 0});
  for (auto& e : s) CHECK(degree(e) <= 2);
}
