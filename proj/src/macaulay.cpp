#include "tropsatz/macaulay.hpp"

#include <algorithm>

namespace tropsatz {

MonomialIndex::MonomialIndex(int n, long N) : n_(n), N_(N) {
  if (N < 0) throw std::invalid_argument("MonomialIndex: negative bound");
  exps_ = degree_simplex(n, N);
  for (long i = 0; i < static_cast<long>(exps_.size()); ++i)
    ids_[exps_[i]] = i;
}

long MonomialIndex::index(const Exponent& e) const {
  auto it = ids_.find(e);
  if (it == ids_.end())
    throw std::out_of_range("MonomialIndex: exponent outside the simplex");
  return it->second;
}

Int degree_bound(Semiring s, int n, const std::vector<long>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("degree_bound: empty system");
  if (s == Semiring::R) {
    Int sum = 0;
    for (long d : degrees) sum += d;
    return Int(n + 2) * sum;
  }
  long k = static_cast<long>(degrees.size());
  long d = 0;
  for (long x : degrees) d = std::max(d, x);
  Int base = Int(4) * std::max(d, 0L);
  Int pow;
  long e = std::min(static_cast<long>(n), k) + 2;
  mpz_pow_ui(pow.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return Int(2) * Int(n + 2) * Int(n + 2) * Int(k) * pow;
}

namespace {

MacaulaySystem build_impl(const PolySystem& F, long N) {
  MacaulaySystem M;
  M.kind = F.kind;
  M.index = MonomialIndex(F.num_vars, N);
  auto degs = F.degrees();
  for (size_t j = 0; j < degs.size(); ++j) {
    long room = N - degs[j];
    if (room < 0) continue;  // no rows for this polynomial
    for (const auto& J : degree_simplex(F.num_vars, room))
      M.rows.push_back({static_cast<int>(j), J});
  }
  return M;
}

}  // namespace

MacaulaySystem build_macaulay_tropical(const PolySystem& F, long N) {
  if (F.kind != SystemKind::Tropical)
    throw std::invalid_argument("build_macaulay_tropical: tropical system expected");
  return build_impl(F, N);
}

MacaulaySystem build_macaulay_minplus(const PolySystem& F, long N) {
  if (F.kind != SystemKind::MinPlus)
    throw std::invalid_argument("build_macaulay_minplus: min-plus system expected");
  return build_impl(F, N);
}

MacaulaySystem build_macaulay(const PolySystem& F, long N) {
  return build_impl(F, N);
}

TropMatrix materialize_tropical(const PolySystem& F, const MacaulaySystem& M) {
  TropMatrix A(static_cast<int>(M.rows.size()), static_cast<int>(M.index.size()));
  for (size_t r = 0; r < M.rows.size(); ++r) {
    const auto& row = M.rows[r];
    for (const auto& [e, c] : F.tropical[row.poly].terms) {
      long col = M.index.index(add_exponents(e, row.shift));
      A.entries[r].push_back({static_cast<int>(col), c});
    }
    std::sort(A.entries[r].begin(), A.entries[r].end());
  }
  return A;
}

MinPlusSystem materialize_minplus(const PolySystem& F, const MacaulaySystem& M) {
  MinPlusSystem S;
  S.rel = Relation::Eq;
  S.lhs = TropMatrix(static_cast<int>(M.rows.size()),
                     static_cast<int>(M.index.size()));
  S.rhs = TropMatrix(static_cast<int>(M.rows.size()),
                     static_cast<int>(M.index.size()));
  for (size_t r = 0; r < M.rows.size(); ++r) {
    const auto& row = M.rows[r];
    const auto& p = F.minplus[row.poly];
    for (const auto& [e, c] : p.lhs.terms) {
      long col = M.index.index(add_exponents(e, row.shift));
      S.lhs.entries[r].push_back({static_cast<int>(col), c});
    }
    for (const auto& [e, c] : p.rhs.terms) {
      long col = M.index.index(add_exponents(e, row.shift));
      S.rhs.entries[r].push_back({static_cast<int>(col), c});
    }
    std::sort(S.lhs.entries[r].begin(), S.lhs.entries[r].end());
    std::sort(S.rhs.entries[r].begin(), S.rhs.entries[r].end());
  }
  return S;
}

std::map<Exponent, Rat> row_function(const PolySystem& F,
                                     const MacaulaySystem& M, size_t row) {
  std::map<Exponent, Rat> phi;
  const auto& r = M.rows[row];
  if (F.kind == SystemKind::Tropical) {
    for (const auto& [e, c] : F.tropical[r.poly].terms)
      phi[add_exponents(e, r.shift)] = c;
  } else {
    ColoredFn f = colored_coefficients(F.minplus[r.poly]);
    for (const auto& [e, c] : f.values) phi[add_exponents(e, r.shift)] = c;
  }
  return phi;
}

}  // namespace tropsatz
