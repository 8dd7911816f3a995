#pragma once

#include <optional>
#include <vector>

#include "tropsatz/macaulay.hpp"
#include "tropsatz/poly.hpp"

namespace tropsatz {

/// One summand of an algebraic combination: coef (x) x^shift (x) f_poly,
/// with the pair optionally swapped to (g, f) in the min-plus case.
struct CombinationPart {
  int poly = 0;
  bool swapped = false;
  Rat coef;
  Exponent shift;
};

/// Tropical primary certificate: every monomial of the combination has a
/// unique strictly-minimal part, and distinct monomials have distinct parts.
struct NonsingularCombination {
  std::vector<CombinationPart> parts;
};

/// Min-plus primary certificate: every monomial's coefficient on the f-side
/// strictly exceeds its coefficient on the g-side.
struct DominatedCombination {
  std::vector<CombinationPart> parts;
};

struct Certificate {
  enum class Kind { Root, Nonsingular, Dominated } kind = Kind::Root;
  Point root;
  NonsingularCombination nonsingular;
  DominatedCombination dominated;
};

struct DecideResult {
  bool has_root = false;
  Point root;                    // verified root when has_root
  long certificate_degree = -1;  // Macaulay degree certifying NoRoot
};

/// Dual Nullstellensatz drivers. The Macaulay degree is raised along a
/// doubling ladder capped by the theorem bound: unsolvability at any rung
/// certifies NoRoot (a root solves every truncation), a verified extracted
/// root certifies Root, and at the bound itself extraction is guaranteed.
DecideResult decide_dual_R(const PolySystem& F);
DecideResult decide_dual_Rinf(const PolySystem& F);
DecideResult decide_dual(const PolySystem& F);

struct FPrimeSystem {
  PolySystem polys;  // first polynomial is f1 (finite constant term)
  std::vector<std::vector<CombinationPart>> provenance;  // over the input F
  Rat delta;   // joint variation, floored at 1
  Rat big_c;   // the -C coefficient magnitude
  long alpha = 0;
  long num_polys = 0;   // K <= (n+2) k
  long max_degree = 0;  // d' <= 2 (4d)^(min(n,k)+2)
};

/// The augmented system over R with infinity: every polynomial gains a
/// finite constant term while solvability is preserved. Polynomial `first`
/// of F must have a finite constant term; it becomes polynomial 0 of the
/// result.
FPrimeSystem build_f_prime(const PolySystem& F, int first);

struct RestrictTrace {
  std::vector<std::set<int>> stages;  // S_0 .. S_r
  bool growth_claim_ok = true;        // the monitored coordinate bound
};

/// Turn a finite root b of F' into a root of F by fixing the coordinates
/// outside the final support stage to infinity.
Point infinity_restrict(const PolySystem& F, int first, const Point& b,
                        RestrictTrace* trace = nullptr);

/// Primary certificates from the linear duality applied to the Macaulay
/// matrix at a degree where the dual system is unsolvable.
Certificate extract_primary(const PolySystem& F, long N);

/// Recompute the combination exactly and check the defining conditions plus
/// the degree bound; min-plus over R with infinity also requires a finite
/// constant term on the g side, tropical over R with infinity on the
/// combination itself.
bool verify_primary(const PolySystem& F, const Certificate& cert,
                    const Int& max_degree);

}  // namespace tropsatz
