#pragma once

#include <map>
#include <vector>

#include "tropsatz/linsys.hpp"
#include "tropsatz/poly.hpp"

namespace tropsatz {

/// Bijection between exponent vectors of degree <= N in n variables and
/// contiguous column ids (graded order, constant monomial first).
class MonomialIndex {
 public:
  MonomialIndex() = default;
  MonomialIndex(int n, long N);

  int num_vars() const { return n_; }
  long bound() const { return N_; }
  long size() const { return static_cast<long>(exps_.size()); }
  long constant_column() const { return 0; }
  long index(const Exponent& e) const;
  const Exponent& exponent(long id) const { return exps_[id]; }
  bool contains(const Exponent& e) const { return ids_.count(e) > 0; }

 private:
  int n_ = 0;
  long N_ = 0;
  std::vector<Exponent> exps_;
  std::map<Exponent, long> ids_;
};

/// Truncated Macaulay matrix: rows are the shifts x^J (x) f_j with
/// |J| <= N - deg(f_j); the entry in column I is the coefficient of x^I in
/// the shifted polynomial, phi_j(I - J).
struct MacRow {
  int poly = 0;  // index into the system
  Exponent shift;
};

struct MacaulaySystem {
  MonomialIndex index;
  std::vector<MacRow> rows;
  SystemKind kind = SystemKind::Tropical;
};

/// N for the dual Nullstellensatz: (n+2) * sum(d_i) over R, and
/// 2 (n+2)^2 k (4d)^(min(n,k)+2) over R with infinity.
Int degree_bound(Semiring s, int n, const std::vector<long>& degrees);

MacaulaySystem build_macaulay_tropical(const PolySystem& F, long N);
MacaulaySystem build_macaulay_minplus(const PolySystem& F, long N);
MacaulaySystem build_macaulay(const PolySystem& F, long N);

/// Materialize as sparse matrices for the linear solvers.
TropMatrix materialize_tropical(const PolySystem& F, const MacaulaySystem& M);
MinPlusSystem materialize_minplus(const PolySystem& F, const MacaulaySystem& M);

/// The coefficient function of one row, phi_j(I - J), as an explicit map.
std::map<Exponent, Rat> row_function(const PolySystem& F,
                                     const MacaulaySystem& M, size_t row);

}  // namespace tropsatz
