#include "tropsatz/reduce.hpp"

namespace tropsatz {

PolySystem tropical_to_minplus(const PolySystem& T) {
  if (T.kind != SystemKind::Tropical)
    throw std::invalid_argument("tropical_to_minplus: tropical system expected");
  PolySystem out;
  out.semiring = T.semiring;
  out.kind = SystemKind::MinPlus;
  out.num_vars = T.num_vars;
  for (const auto& f : T.tropical) {
    for (const auto& [e, c] : f.terms) {
      MinPlusPolynomial p;
      p.lhs = f;
      p.rhs = f;
      p.rhs.terms.erase(e);  // empty right side is the infinite polynomial
      out.minplus.push_back(std::move(p));
    }
  }
  return out;
}

namespace {

// Exponent embedding for the doubled system. Block width nb = n (+1 when a
// pinned zero variable is used); bare constants are multiplied by the pin.
struct Embedding {
  int n = 0;
  bool pin = false;

  int width() const { return n + (pin ? 1 : 0); }

  Exponent block(const Exponent& e, bool primed, bool substitute_const) const {
    int nb = width();
    Exponent out(2 * nb, 0);
    int base = primed ? nb : 0;
    for (int i = 0; i < n; ++i) out[base + i] = e[i];
    if (pin && substitute_const && degree(e) == 0) out[base + n] = 1;
    return out;
  }
};

void add_term(TropicalPolynomial& f, const Exponent& e, const Rat& c) {
  auto it = f.terms.find(e);
  if (it == f.terms.end())
    f.terms[e] = c;
  else if (c < it->second)
    it->second = c;
}

}  // namespace

MinPlusToTropical minplus_to_tropical(const PolySystem& A) {
  if (A.kind != SystemKind::MinPlus)
    throw std::invalid_argument("minplus_to_tropical: min-plus system expected");
  Embedding em;
  em.n = A.num_vars;
  for (const auto& p : A.minplus) {
    for (const auto& [e, c] : p.lhs.terms)
      if (degree(e) == 0) em.pin = true;
    for (const auto& [e, c] : p.rhs.terms)
      if (degree(e) == 0) em.pin = true;
  }
  int nb = em.width();
  MinPlusToTropical out;
  out.source_vars = A.num_vars;
  out.uses_pin = em.pin;
  out.tropical.semiring = A.semiring;
  out.tropical.kind = SystemKind::Tropical;
  out.tropical.num_vars = 2 * nb;

  // pair polynomials x_i (+) x_i'
  for (int i = 0; i < nb; ++i) {
    TropicalPolynomial f;
    f.num_vars = 2 * nb;
    Exponent a(2 * nb, 0), b(2 * nb, 0);
    a[i] = 1;
    b[nb + i] = 1;
    f.terms[a] = 0;
    f.terms[b] = 0;
    out.tropical.tropical.push_back(std::move(f));
  }
  if (em.pin) {
    // z (+) 0 forces the pin to zero, over R and over R with infinity
    TropicalPolynomial f;
    f.num_vars = 2 * nb;
    Exponent z(2 * nb, 0);
    z[em.n] = 1;
    f.terms[z] = 0;
    f.terms[Exponent(2 * nb, 0)] = 0;
    out.tropical.tropical.push_back(std::move(f));
  }

  for (const auto& p : A.minplus) {
    // for each right monomial l_p: all left monomials doubled plus l_p
    for (const auto& [lp, lc] : p.rhs.terms) {
      TropicalPolynomial f;
      f.num_vars = 2 * nb;
      for (const auto& [e, c] : p.lhs.terms) {
        add_term(f, em.block(e, false, true), c);
        add_term(f, em.block(e, true, true), c);
      }
      add_term(f, em.block(lp, false, false), lc);
      out.tropical.tropical.push_back(std::move(f));
    }
    // for each left monomial m_j: all right monomials doubled plus m_j
    for (const auto& [mj, mc] : p.lhs.terms) {
      TropicalPolynomial f;
      f.num_vars = 2 * nb;
      for (const auto& [e, c] : p.rhs.terms) {
        add_term(f, em.block(e, false, true), c);
        add_term(f, em.block(e, true, true), c);
      }
      add_term(f, em.block(mj, false, false), mc);
      out.tropical.tropical.push_back(std::move(f));
    }
  }
  return out;
}

Point MinPlusToTropical::embed(const Point& a) const {
  int nb = source_vars + (uses_pin ? 1 : 0);
  Point b;
  b.coords.assign(2 * nb, ExtValue(0));
  for (int i = 0; i < source_vars; ++i) {
    b.coords[i] = a.coords[i];
    b.coords[nb + i] = a.coords[i];
  }
  return b;
}

std::optional<Point> MinPlusToTropical::project(const Point& b) const {
  int nb = source_vars + (uses_pin ? 1 : 0);
  if (static_cast<int>(b.size()) != 2 * nb) return std::nullopt;
  for (int i = 0; i < nb; ++i)
    if (!(b.coords[i] == b.coords[nb + i])) return std::nullopt;
  if (uses_pin && !(b.coords[source_vars] == ExtValue(0))) return std::nullopt;
  Point a;
  for (int i = 0; i < source_vars; ++i) a.coords.push_back(b.coords[i]);
  return a;
}

}  // namespace tropsatz
