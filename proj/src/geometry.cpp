#include "tropsatz/geometry.hpp"

#include <algorithm>
#include <set>

#include "tropsatz/lp.hpp"

namespace tropsatz {

namespace {

std::vector<Rat> lift(const Exponent& e, const Rat& h) {
  std::vector<Rat> x;
  x.reserve(e.size() + 1);
  for (int c : e) x.push_back(Rat(c));
  x.push_back(h);
  return x;
}

void dedupe(LiftedPointSet& P) {
  std::sort(P.gens.begin(), P.gens.end());
  P.gens.erase(std::unique(P.gens.begin(), P.gens.end()), P.gens.end());
}

// Constraints for: sum lambda_g g + mu e_up = q, sum lambda = 1,
// lambda >= 0, mu >= 0, over variables (lambda..., mu, extra...).
std::vector<LinConstraint> membership_constraints(const LiftedPointSet& P,
                                                  const std::vector<Rat>& q,
                                                  int extra_vars) {
  int G = static_cast<int>(P.gens.size());
  int dim = P.n + 1;
  int nv = G + 1 + extra_vars;
  std::vector<LinConstraint> cs;
  for (int d = 0; d < dim; ++d) {
    LinConstraint c;
    c.coef.assign(nv, Rat(0));
    for (int g = 0; g < G; ++g) c.coef[g] = P.gens[g].x[d];
    if (d == dim - 1) c.coef[G] = 1;  // the upward ray
    c.op = CmpOp::Eq;
    c.rhs = q[d];
    cs.push_back(std::move(c));
  }
  LinConstraint ones;
  ones.coef.assign(nv, Rat(0));
  for (int g = 0; g < G; ++g) ones.coef[g] = 1;
  ones.op = CmpOp::Eq;
  ones.rhs = 1;
  cs.push_back(std::move(ones));
  return cs;
}

// lambdas and mu are nonnegative, trailing extras are free
std::vector<bool> membership_mask(int G, int extra_vars) {
  std::vector<bool> m(G + 1 + extra_vars, true);
  for (int v = G + 1; v < G + 1 + extra_vars; ++v) m[v] = false;
  return m;
}

int affine_rank(const std::vector<std::vector<Rat>>& pts) {
  if (pts.empty()) return -1;
  std::vector<std::vector<Rat>> diffs;
  for (size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rat> d(pts[i].size());
    for (size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  int rank = 0;
  size_t cols = pts[0].size();
  for (size_t col = 0; col < cols && rank < static_cast<int>(diffs.size());
       ++col) {
    int piv = -1;
    for (size_t r = rank; r < diffs.size(); ++r)
      if (diffs[r][col] != 0) {
        piv = static_cast<int>(r);
        break;
      }
    if (piv < 0) continue;
    std::swap(diffs[rank], diffs[piv]);
    for (size_t r = 0; r < diffs.size(); ++r) {
      if (static_cast<int>(r) == rank || diffs[r][col] == 0) continue;
      Rat f = diffs[r][col] / diffs[rank][col];
      for (size_t j = col; j < cols; ++j) diffs[r][j] -= f * diffs[rank][j];
    }
    ++rank;
  }
  return rank;
}

// A functional theta with <theta, g> < <theta, pivot> for every other
// generator and nonpositive vertical component; exists iff pivot is a vertex.
std::optional<std::vector<Rat>> exposing_functional(const LiftedPointSet& P,
                                                    const std::vector<Rat>& pivot) {
  int n = P.n;
  std::vector<LinConstraint> cs;
  for (const auto& g : P.gens) {
    if (g.x == pivot) continue;
    LinConstraint c;
    c.coef.assign(n + 1, Rat(0));
    for (int d = 0; d <= n; ++d) c.coef[d] = g.x[d] - pivot[d];
    c.op = CmpOp::Le;
    c.rhs = -1;
    cs.push_back(std::move(c));
  }
  LinConstraint up;
  up.coef.assign(n + 1, Rat(0));
  up.coef[n] = 1;
  up.op = CmpOp::Le;
  up.rhs = 0;
  cs.push_back(std::move(up));
  auto r = lp_minimize(std::vector<Rat>(n + 1, Rat(0)), cs);
  if (r.status != LpResult::Status::Optimal) return std::nullopt;
  r.point.resize(n + 1);
  return r.point;
}

// Unique theta-argmax generator of each part; nullopt on a tie.
std::optional<std::vector<std::vector<Rat>>> part_argmaxes(
    const std::vector<LiftedPointSet>& parts, const std::vector<Rat>& theta) {
  int n = parts[0].n;
  std::vector<std::vector<Rat>> out;
  for (const auto& part : parts) {
    int arg = -1;
    bool tie = false;
    Rat best;
    for (size_t g = 0; g < part.gens.size(); ++g) {
      Rat v(0);
      for (int d = 0; d <= n; ++d) v += theta[d] * part.gens[g].x[d];
      if (arg < 0 || v > best) {
        arg = static_cast<int>(g);
        best = v;
        tie = false;
      } else if (v == best) {
        tie = true;
      }
    }
    if (arg < 0 || tie) return std::nullopt;
    out.push_back(part.gens[arg].x);
  }
  return out;
}

}  // namespace

LiftedPointSet newton(const TropicalPolynomial& f) {
  LiftedPointSet P;
  P.n = f.num_vars;
  for (const auto& [e, c] : f.terms)
    P.gens.push_back({lift(e, c), {false, false}});
  dedupe(P);
  return P;
}

LiftedPointSet newton(const MinPlusPolynomial& p) {
  LiftedPointSet P;
  P.n = p.num_vars();
  ColoredFn f = colored_coefficients(p);
  for (const auto& [e, c] : f.values)
    P.gens.push_back({lift(e, c), f.colors.at(e)});
  dedupe(P);
  return P;
}

namespace {

LiftedPointSet minkowski(const LiftedPointSet& A, const LiftedPointSet& B) {
  LiftedPointSet S;
  S.n = A.n;
  for (const auto& a : A.gens)
    for (const auto& b : B.gens) {
      LiftedPoint p;
      p.x.resize(a.x.size());
      for (size_t d = 0; d < a.x.size(); ++d) p.x[d] = a.x[d] + b.x[d];
      S.gens.push_back(std::move(p));
    }
  dedupe(S);
  return S;
}

LiftedPointSet dilate(const LiftedPointSet& P, int k) {
  LiftedPointSet S;
  S.n = P.n;
  for (const auto& g : P.gens) {
    LiftedPoint p;
    p.x.resize(g.x.size());
    for (size_t d = 0; d < g.x.size(); ++d) p.x[d] = g.x[d] * k;
    S.gens.push_back(std::move(p));
  }
  return S;
}

}  // namespace

LiftedPointSet envelope(const std::vector<LiftedPointSet>& parts) {
  if (parts.empty()) throw std::invalid_argument("envelope: empty family");
  LiftedPointSet sum = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) sum = minkowski(sum, parts[i]);
  return dilate(sum, parts[0].n + 2);
}

LiftedPointSet prune_to_vertices(const LiftedPointSet& P) {
  LiftedPointSet deduped = P;
  dedupe(deduped);
  LiftedPointSet out;
  out.n = P.n;
  for (size_t g = 0; g < deduped.gens.size(); ++g) {
    LiftedPointSet rest;
    rest.n = P.n;
    for (size_t h = 0; h < deduped.gens.size(); ++h)
      if (h != g) rest.gens.push_back(deduped.gens[h]);
    if (rest.gens.empty() || !contains(rest, deduped.gens[g].x))
      out.gens.push_back(deduped.gens[g]);
  }
  return out;
}

LiftedPointSet envelope_pruned(const std::vector<LiftedPointSet>& parts) {
  if (parts.empty()) throw std::invalid_argument("envelope: empty family");
  LiftedPointSet sum = prune_to_vertices(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i)
    sum = prune_to_vertices(minkowski(sum, prune_to_vertices(parts[i])));
  return dilate(sum, parts[0].n + 2);
}

bool contains(const LiftedPointSet& P, const std::vector<Rat>& q) {
  if (P.gens.empty()) return false;
  auto cs = membership_constraints(P, q, 0);
  auto mask = membership_mask(static_cast<int>(P.gens.size()), 0);
  auto r = lp_minimize(std::vector<Rat>(P.gens.size() + 1, Rat(0)), cs, &mask);
  return r.status == LpResult::Status::Optimal;
}

std::optional<Rat> bottom(const LiftedPointSet& P, const std::vector<Rat>& xh) {
  if (static_cast<int>(xh.size()) != P.n)
    throw std::invalid_argument("bottom: dimension mismatch");
  int G = static_cast<int>(P.gens.size());
  std::vector<LinConstraint> cs;
  for (int d = 0; d < P.n; ++d) {
    LinConstraint c;
    c.coef.assign(G, Rat(0));
    for (int g = 0; g < G; ++g) c.coef[g] = P.gens[g].x[d];
    c.op = CmpOp::Eq;
    c.rhs = xh[d];
    cs.push_back(std::move(c));
  }
  LinConstraint ones;
  ones.coef.assign(G, Rat(1));
  ones.op = CmpOp::Eq;
  ones.rhs = 1;
  cs.push_back(std::move(ones));
  std::vector<Rat> obj(G);
  for (int g = 0; g < G; ++g) obj[g] = P.gens[g].x[P.n];
  std::vector<bool> mask(G, true);
  auto r = lp_minimize(obj, cs, &mask);
  if (r.status != LpResult::Status::Optimal) return std::nullopt;
  return r.objective;
}

std::optional<Rat> bottom(const LiftedPointSet& P, const Exponent& I) {
  std::vector<Rat> xh;
  for (int c : I) xh.push_back(Rat(c));
  return bottom(P, xh);
}

Face minimal_face(const LiftedPointSet& P, const std::vector<Rat>& q) {
  Face f;
  int G = static_cast<int>(P.gens.size());
  std::vector<std::vector<Rat>> pts;
  for (int g = 0; g < G; ++g) {
    if (P.gens[g].x == q) {
      f.gen_indices.push_back(g);
      pts.push_back(P.gens[g].x);
      continue;
    }
    // g is on the minimal face iff the segment from g through q can be
    // extended past q without leaving the polytope
    auto cs = membership_constraints(P, q, 1);
    int tvar = G + 1;
    for (int d = 0; d <= P.n; ++d)
      cs[d].coef[tvar] = -(q[d] - P.gens[g].x[d]);
    LinConstraint tcap;
    tcap.coef.assign(G + 2, Rat(0));
    tcap.coef[tvar] = 1;
    tcap.op = CmpOp::Le;
    tcap.rhs = 1;
    cs.push_back(tcap);
    tcap.op = CmpOp::Ge;
    tcap.rhs = 0;
    cs.push_back(tcap);
    std::vector<Rat> obj(G + 2, Rat(0));
    obj[tvar] = 1;
    auto mask = membership_mask(G, 1);
    auto r = lp_maximize(obj, cs, &mask);
    if (r.status == LpResult::Status::Optimal && r.objective > 0) {
      f.gen_indices.push_back(g);
      pts.push_back(P.gens[g].x);
    }
  }
  f.dim = std::max(affine_rank(pts), 0);
  return f;
}

bool face_is_whole_set(const LiftedPointSet& P, const Face& f) {
  return f.gen_indices.size() == P.gens.size();
}

std::optional<std::pair<std::vector<Rat>, Rat>> support_hyperplane(
    const LiftedPointSet& P, const Face& Q) {
  if (Q.gen_indices.empty())
    throw std::invalid_argument("support_hyperplane: empty face");
  int n = P.n;
  // variables: s_0..s_{n-1}, c
  std::vector<LinConstraint> cs;
  std::set<int> onface(Q.gen_indices.begin(), Q.gen_indices.end());
  for (size_t g = 0; g < P.gens.size(); ++g) {
    LinConstraint c;
    c.coef.assign(n + 1, Rat(0));
    for (int d = 0; d < n; ++d) c.coef[d] = P.gens[g].x[d];
    c.coef[n] = 1;
    c.op = onface.count(static_cast<int>(g)) ? CmpOp::Eq : CmpOp::Le;
    c.rhs = P.gens[g].x[n];
    cs.push_back(std::move(c));
  }
  if (lp_minimize(std::vector<Rat>(n + 1, Rat(0)), cs).status !=
      LpResult::Status::Optimal)
    return std::nullopt;  // only vertical supports
  // slope chosen coordinatewise: minimum when bounded, otherwise the finite
  // endpoint on the other side, otherwise zero
  std::vector<Rat> s(n);
  for (int d = 0; d < n; ++d) {
    std::vector<Rat> obj(n + 1, Rat(0));
    obj[d] = 1;
    auto lo = lp_minimize(obj, cs);
    Rat chosen(0);
    if (lo.status == LpResult::Status::Optimal) {
      chosen = lo.objective;
    } else {
      auto hi = lp_maximize(obj, cs);
      if (hi.status == LpResult::Status::Optimal) chosen = hi.objective;
    }
    s[d] = chosen;
    LinConstraint fix;
    fix.coef.assign(n + 1, Rat(0));
    fix.coef[d] = 1;
    fix.op = CmpOp::Eq;
    fix.rhs = chosen;
    cs.push_back(std::move(fix));
  }
  const auto& q = P.gens[Q.gen_indices[0]].x;
  Rat c = q[n];
  for (int d = 0; d < n; ++d) c -= s[d] * q[d];
  return std::make_pair(s, c);
}

std::optional<std::vector<Rat>> touching_translation(
    const std::vector<LiftedPointSet>& parts, int j,
    const std::vector<Rat>& x) {
  int n = parts[0].n;
  std::vector<LiftedPointSet> pruned;
  for (const auto& p : parts) pruned.push_back(prune_to_vertices(p));
  LiftedPointSet P0 = envelope_pruned(parts);

  Face Q0 = minimal_face(P0, x);
  if (Q0.gen_indices.empty()) return std::nullopt;

  if (Q0.dim == 0) {
    // x is a vertex of P0 = (n+2) sum of parts: decompose it into the
    // per-part argmaxes of a functional exposing it
    if (P0.gens[Q0.gen_indices[0]].x != x) return std::nullopt;
    auto theta = exposing_functional(P0, x);
    if (!theta) return std::nullopt;
    auto args = part_argmaxes(pruned, *theta);
    if (!args) return std::nullopt;
    std::vector<Rat> alpha(n + 1, Rat(0)), check(n + 1, Rat(0));
    for (size_t i = 0; i < args->size(); ++i)
      for (int d = 0; d <= n; ++d) {
        check[d] += Rat(n + 2) * (*args)[i][d];
        alpha[d] += Rat(n + 2) * (*args)[i][d];
      }
    if (check != x) return std::nullopt;
    for (int d = 0; d <= n; ++d) alpha[d] -= (*args)[j][d];
    return alpha;
  }

  // x inside a positive-dimensional face: map a homothety copy of P0 onto x
  // through the largest barycentric vertex of that face
  LiftedPointSet faceset;
  faceset.n = n;
  for (int g : Q0.gen_indices) faceset.gens.push_back(P0.gens[g]);
  auto cs = membership_constraints(faceset, x, 0);
  auto bmask = membership_mask(static_cast<int>(faceset.gens.size()), 0);
  auto bary =
      lp_minimize(std::vector<Rat>(faceset.gens.size() + 1, Rat(0)), cs, &bmask);
  if (bary.status != LpResult::Status::Optimal) return std::nullopt;
  int best = -1;
  Rat bw(0);
  for (size_t g = 0; g < faceset.gens.size(); ++g)
    if (bary.point[g] > bw) {
      bw = bary.point[g];
      best = static_cast<int>(g);
    }
  if (best < 0 || bw >= 1) return std::nullopt;  // bw == 1 means x is a vertex
  std::vector<Rat> vprime(n + 1, Rat(0));
  Rat rest = 1 - bw;
  for (size_t g = 0; g < faceset.gens.size(); ++g) {
    if (static_cast<int>(g) == best) continue;
    for (int d = 0; d <= n; ++d)
      vprime[d] += bary.point[g] * faceset.gens[g].x[d] / rest;
  }
  Rat t = (1 - bw) / ((n + 1) * bw);
  std::vector<Rat> y(n + 1), shift(n + 1);
  for (int d = 0; d <= n; ++d) {
    y[d] = x[d] + t * (vprime[d] - x[d]);
    shift[d] = y[d] * Rat(n + 1) / Rat(n + 2);
  }
  auto theta = exposing_functional(P0, faceset.gens[best].x);
  if (!theta) return std::nullopt;
  auto args = part_argmaxes(pruned, *theta);
  if (!args) return std::nullopt;
  std::vector<Rat> alpha = shift, check = shift;
  for (size_t i = 0; i < args->size(); ++i)
    for (int d = 0; d <= n; ++d) {
      check[d] += (*args)[i][d];
      if (static_cast<int>(i) != j) alpha[d] += (*args)[i][d];
    }
  if (check != x) return std::nullopt;
  return alpha;
}

bool touches(const LiftedPointSet& Pj, const std::vector<Rat>& alpha,
             const LiftedPointSet& P0, const std::vector<Rat>& x) {
  bool meets_x = false;
  for (const auto& g : Pj.gens) {
    std::vector<Rat> y(g.x.size());
    for (size_t d = 0; d < g.x.size(); ++d) y[d] = g.x[d] + alpha[d];
    if (!contains(P0, y)) return false;
    if (y == x) {
      meets_x = true;
      continue;
    }
    Face fy = minimal_face(P0, y);
    if (face_is_whole_set(P0, fy)) continue;  // interior point
    // boundary contact: some face must contain both y and x; the minimal
    // face of the segment midpoint is the smallest such candidate
    std::vector<Rat> mid(y.size());
    for (size_t d = 0; d < y.size(); ++d) mid[d] = (y[d] + x[d]) / 2;
    Face fm = minimal_face(P0, mid);
    if (face_is_whole_set(P0, fm)) return false;
  }
  return meets_x;
}

std::optional<Point> extract_root(const std::map<Exponent, Rat>& phi_a,
                                  const LiftedPointSet& P0) {
  std::map<Exponent, Rat> psi;
  for (const auto& [I, v] : phi_a)
    if (auto b = bottom(P0, I)) psi[I] = *b;
  SingularitySet S = sing_set(phi_a, psi);
  if (S.points.empty()) return std::nullopt;
  // the singular point in the most general position: maximal dimension of
  // its minimal face, ties to the lexicographically smallest exponent
  int best_dim = -1;
  Face best_face;
  for (const auto& xe : S.points) {
    std::vector<Rat> q = lift(xe, psi.at(xe));
    Face f = minimal_face(P0, q);
    if (f.dim > best_dim) {
      best_dim = f.dim;
      best_face = f;
    }
  }
  auto sh = support_hyperplane(P0, best_face);
  if (!sh) throw std::logic_error("extract_root: selected face is vertical");
  Point root;
  for (int d = 0; d < P0.n; ++d)
    root.coords.push_back(ExtValue(Rat(-sh->first[d])));
  return root;
}

}  // namespace tropsatz
