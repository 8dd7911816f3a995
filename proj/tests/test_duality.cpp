#include <doctest.h>

#include <random>

#include "tropsatz/duality.hpp"

using namespace tropsatz;

namespace {

const ExtValue kInf = ExtValue::infinity();

TropMatrix mat(const std::vector<std::vector<ExtValue>>& d) {
  return TropMatrix::dense(d);
}

TropMatrix random_matrix(std::mt19937& rng, int m, int n, bool allow_inf) {
  std::uniform_int_distribution<int> val(-2, 2), coin(0, 3);
  std::vector<std::vector<ExtValue>> d(m, std::vector<ExtValue>(n, kInf));
  for (auto& row : d)
    for (auto& v : row)
      if (!allow_inf || coin(rng)) v = ExtValue(val(rng));
  return mat(d);
}

bool fin_ok(const std::vector<bool>& fin, const std::set<int>& S,
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

MinPlusSystem mk(const TropMatrix& A, const TropMatrix& B, Relation r) {
  MinPlusSystem s;
  s.lhs = A;
  s.rhs = B;
  s.rel = r;
  return s;
}

}  // namespace

TEST_CASE("minplus_alternative examples") {
  std::set<int> S{0};
  auto p = minplus_alternative(mat({{ExtValue(0)}}), mat({{ExtValue(1)}}), S,
                               FinitenessFlavor::FinAll);
  CHECK(p.primal);
  CHECK(p.witness.coords[0].is_finite());
  auto d = minplus_alternative(mat({{ExtValue(1)}}), mat({{ExtValue(0)}}), S,
                               FinitenessFlavor::FinAll);
  CHECK(!d.primal);
  // B^T y < A^T y with the returned y: 0 + y < 1 + y, finite
  CHECK(verify_minplus_dual(mat({{ExtValue(1)}}), mat({{ExtValue(0)}}),
                            d.witness, S, FinitenessFlavor::FinAll));
  auto e = minplus_alternative(mat({{ExtValue(0)}}), mat({{ExtValue(0)}}), S,
                               FinitenessFlavor::FinAll);
  CHECK(e.primal);  // equality kills strictness on the dual side
}

TEST_CASE("tropical_alternative examples") {
  std::set<int> S{0, 1};
  auto p = tropical_alternative(mat({{ExtValue(0), ExtValue(0)}}), S,
                                FinitenessFlavor::FinAll);
  CHECK(p.primal);
  // A = [[0,1]] still has the finite solution (1,0), so the primal holds
  auto p2 = tropical_alternative(mat({{ExtValue(0), ExtValue(1)}}), S,
                                 FinitenessFlavor::FinAll);
  CHECK(p2.primal);
  CHECK(verify_tropical_primal(mat({{ExtValue(0), ExtValue(1)}}), p2.witness,
                               S, FinitenessFlavor::FinAll));
  // two rows over one variable cannot both tie finitely: dual branch
  auto A = mat({{ExtValue(0)}, {ExtValue(1)}});
  auto d = tropical_alternative(A, {0}, FinitenessFlavor::FinAll);
  CHECK(!d.primal);
  CHECK(verify_tropical_dual(A, d.witness, {0}, FinitenessFlavor::FinAll));
}

TEST_CASE("verify_tropical_dual literal checks") {
  // A = [[0],[1]] (2x1), z = (0, inf): A^T z row = (0, 1), unique min col 0
  auto A = mat({{ExtValue(0)}, {ExtValue(1)}});
  Point z({ExtValue(0), kInf});
  CHECK(verify_tropical_dual(A, z, {0}, FinitenessFlavor::FinSome));
  // all-infinite z fails any finiteness flavor with nonempty S
  Point zi({kInf, kInf});
  CHECK(!verify_tropical_dual(A, zi, {0}, FinitenessFlavor::FinSome));
  CHECK(!verify_tropical_dual(A, zi, {0}, FinitenessFlavor::FinAll));
  // A = [[0,0]]: both rows of A^T z share the only column: distinctness fails
  auto B = mat({{ExtValue(0), ExtValue(0)}});
  Point zb({ExtValue(0)});
  CHECK(!verify_tropical_dual(B, zb, {0}, FinitenessFlavor::FinSome));
}

TEST_CASE("exclusivity on random systems, min-plus and tropical flavors") {
  std::mt19937 rng(61);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int t = 0; t < 500; ++t) {
    int m = dim(rng), n = dim(rng);
    TropMatrix A = random_matrix(rng, m, n, true);
    TropMatrix B = random_matrix(rng, m, n, true);
    std::set<int> S;
    for (int j = 0; j < n; ++j)
      if (rng() % 2) S.insert(j);
    if (S.empty()) S.insert(0);
    for (auto flavor : {FinitenessFlavor::FinAll, FinitenessFlavor::FinSome}) {
      bool need_all = flavor == FinitenessFlavor::FinAll;
      // existence of each alternative, independently of the solver's choice
      auto primal_game = analyze_system(mk(A, B, Relation::Leq));
      auto dual_game =
          analyze_system(mk(B.transpose(), A.transpose(), Relation::Lt));
      bool primal_exists = fin_ok(primal_game.col_finite, S, need_all);
      bool dual_exists = fin_ok(dual_game.row_finite, S, !need_all);
      CHECK(primal_exists != dual_exists);
      auto out = minplus_alternative(A, B, S, flavor);
      CHECK(out.primal == primal_exists);
      CHECK((out.primal
                 ? verify_minplus_primal(A, B, out.witness, S, flavor)
                 : verify_minplus_dual(A, B, out.witness, S, flavor)));
    }
    for (auto flavor : {FinitenessFlavor::FinAll, FinitenessFlavor::FinSome}) {
      auto out = tropical_alternative(A, S, flavor);
      if (out.primal)
        CHECK(verify_tropical_primal(A, out.witness, S, flavor));
      else
        CHECK(verify_tropical_dual(A, out.witness, S, flavor));
      // the other side must fail on the returned evidence class: a verified
      // dual excludes every primal candidate and conversely; spot-check by
      // asking the solver for the opposite and expecting the same side back
      auto again = tropical_alternative(A, S, flavor);
      CHECK(again.primal == out.primal);
    }
  }
}

TEST_CASE("transpose symmetry: the games swap player roles") {
  std::mt19937 rng(67);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int t = 0; t < 200; ++t) {
    int m = dim(rng), n = dim(rng);
    TropMatrix A = random_matrix(rng, m, n, true);
    TropMatrix B = random_matrix(rng, m, n, true);
    auto G = build_game(mk(A, B, Relation::Leq));
    auto Gt = build_game(mk(B.transpose(), A.transpose(), Relation::Leq));
    CHECK(G.row_adj == Gt.col_adj);
    CHECK(G.col_adj == Gt.row_adj);
    // per-coordinate complementarity (lemma part 1 with S = {j}): a solution
    // with x_j finite exists iff no dual with (B^T y)_j finite exists
    auto primal_game = analyze_system(mk(A, B, Relation::Leq));
    auto dual_game =
        analyze_system(mk(B.transpose(), A.transpose(), Relation::Lt));
    for (int j = 0; j < n; ++j)
      CHECK(primal_game.col_finite[j] != dual_game.row_finite[j]);
  }
}
