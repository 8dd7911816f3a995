#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tropsatz/core.hpp"

namespace tropsatz {

/// Finite map from exponent vectors to finite coefficients. A polynomial with
/// no terms is the infinite polynomial (it evaluates to infinity everywhere);
/// parsers reject it, but it is needed as the right-hand side of min-plus
/// equations produced by the tropical-to-min-plus translation.
struct TropicalPolynomial {
  int num_vars = 0;
  std::map<Exponent, Rat> terms;

  long degree() const {
    long d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, tropsatz::degree(e));
    return d;
  }
};

struct MinPlusPolynomial {
  TropicalPolynomial lhs, rhs;

  int num_vars() const { return lhs.num_vars; }
  long degree() const { return std::max(lhs.degree(), rhs.degree()); }
};

struct Point {
  std::vector<ExtValue> coords;

  Point() = default;
  explicit Point(std::vector<ExtValue> c) : coords(std::move(c)) {}
  size_t size() const { return coords.size(); }
  bool all_finite() const {
    for (const auto& v : coords)
      if (v.is_inf()) return false;
    return true;
  }
  std::string str() const;
};

struct EvalResult {
  ExtValue value;
  std::set<Exponent> argmin;  // empty iff value is infinite
};

/// min over terms of c_I + <a, I>, using 0 * inf = 0.
EvalResult eval_tropical(const TropicalPolynomial& f, const Point& a);

bool is_root_tropical(const TropicalPolynomial& f, const Point& a);
bool is_root_minplus(const MinPlusPolynomial& p, const Point& a);

enum class Semiring { R, Rinf };
enum class SystemKind { Tropical, MinPlus };

struct PolySystem {
  Semiring semiring = Semiring::R;
  SystemKind kind = SystemKind::Tropical;
  int num_vars = 0;
  std::vector<TropicalPolynomial> tropical;
  std::vector<MinPlusPolynomial> minplus;

  size_t size() const {
    return kind == SystemKind::Tropical ? tropical.size() : minplus.size();
  }
  long max_degree() const;
  std::vector<long> degrees() const;
};

bool is_root_system(const PolySystem& F, const Point& a);

/// Coefficient function with optional colors (min-plus): black marks values
/// coming from the left polynomial, white from the right. A point may carry
/// both colors.
struct ColoredFn {
  std::map<Exponent, Rat> values;
  std::map<Exponent, std::pair<bool, bool>> colors;  // (black, white)

  static ColoredFn plain(const std::map<Exponent, Rat>& v) {
    ColoredFn f;
    f.values = v;
    return f;
  }
};

/// phi_f with colors for a min-plus pair: phi(I) = min of the two
/// coefficients of x^I, black iff achieved by lhs, white iff by rhs.
ColoredFn colored_coefficients(const MinPlusPolynomial& p);

struct SingularitySet {
  std::optional<Rat> shift;  // the unique t with phi + t <= psi, tight
  std::set<Exponent> points;
  // colors of the singular points, carried from the psi side when colored
  std::map<Exponent, std::pair<bool, bool>> colors;
};

/// Sing(phi, psi): t = min over the common domain of psi - phi; points are
/// the minimizers. Empty (no shift) when the domains are disjoint.
SingularitySet sing_set(const std::map<Exponent, Rat>& phi,
                        const std::map<Exponent, Rat>& psi);
SingularitySet sing_set_colored(const std::map<Exponent, Rat>& phi,
                                const ColoredFn& psi);

/// phi is singular to psi iff |Sing| != 1.
bool is_singular(const SingularitySet& s);
/// Colored variant: empty, or singular points of both colors present.
bool is_singular_colored(const SingularitySet& s);

/// chi_a(I) = -<a, I> restricted to exponents where it is finite, over a
/// given domain.
std::map<Exponent, Rat> hyperplane_fn(const Point& a,
                                      const std::vector<Exponent>& domain);

/// All exponents of n variables with degree <= N, in graded lex order.
std::vector<Exponent> degree_simplex(int n, long N);

}  // namespace tropsatz
