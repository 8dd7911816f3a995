#include "tropsatz/poly.hpp"

#include <functional>
#include <sstream>

namespace tropsatz {

std::string Point::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << to_string(coords[i]);
  }
  os << ")";
  return os.str();
}

EvalResult eval_tropical(const TropicalPolynomial& f, const Point& a) {
  if (static_cast<int>(a.size()) != f.num_vars)
    throw std::invalid_argument("eval_tropical: dimension mismatch");
  EvalResult r;
  r.value = ExtValue::infinity();
  for (const auto& [e, c] : f.terms) {
    ExtValue v(c);
    for (int j = 0; j < f.num_vars; ++j)
      v = trop_mul(v, scale(e[j], a.coords[j]));
    if (v < r.value) {
      r.value = v;
      r.argmin.clear();
      r.argmin.insert(e);
    } else if (v == r.value && v.is_finite()) {
      r.argmin.insert(e);
    }
  }
  if (r.value.is_inf()) r.argmin.clear();
  return r;
}

bool is_root_tropical(const TropicalPolynomial& f, const Point& a) {
  EvalResult r = eval_tropical(f, a);
  return r.value.is_inf() || r.argmin.size() >= 2;
}

bool is_root_minplus(const MinPlusPolynomial& p, const Point& a) {
  return eval_tropical(p.lhs, a).value == eval_tropical(p.rhs, a).value;
}

long PolySystem::max_degree() const {
  long d = 0;
  for (long x : degrees()) d = std::max(d, x);
  return d;
}

std::vector<long> PolySystem::degrees() const {
  std::vector<long> ds;
  if (kind == SystemKind::Tropical)
    for (const auto& f : tropical) ds.push_back(f.degree());
  else
    for (const auto& p : minplus) ds.push_back(p.degree());
  return ds;
}

bool is_root_system(const PolySystem& F, const Point& a) {
  if (F.kind == SystemKind::Tropical) {
    for (const auto& f : F.tropical)
      if (!is_root_tropical(f, a)) return false;
  } else {
    for (const auto& p : F.minplus)
      if (!is_root_minplus(p, a)) return false;
  }
  return true;
}

ColoredFn colored_coefficients(const MinPlusPolynomial& p) {
  ColoredFn out;
  for (const auto& [e, c] : p.lhs.terms) {
    out.values[e] = c;
    out.colors[e] = {true, false};
  }
  for (const auto& [e, c] : p.rhs.terms) {
    auto it = out.values.find(e);
    if (it == out.values.end()) {
      out.values[e] = c;
      out.colors[e] = {false, true};
    } else if (c < it->second) {
      it->second = c;
      out.colors[e] = {false, true};
    } else if (c == it->second) {
      out.colors[e].second = true;
    }
  }
  return out;
}

SingularitySet sing_set(const std::map<Exponent, Rat>& phi,
                        const std::map<Exponent, Rat>& psi) {
  SingularitySet s;
  for (const auto& [e, pv] : phi) {
    auto it = psi.find(e);
    if (it == psi.end()) continue;
    Rat diff = it->second - pv;  // psi - phi
    if (!s.shift || diff < *s.shift) {
      s.shift = diff;
      s.points.clear();
      s.points.insert(e);
    } else if (diff == *s.shift) {
      s.points.insert(e);
    }
  }
  return s;
}

SingularitySet sing_set_colored(const std::map<Exponent, Rat>& phi,
                                const ColoredFn& psi) {
  SingularitySet s = sing_set(phi, psi.values);
  for (const auto& e : s.points) {
    auto it = psi.colors.find(e);
    s.colors[e] = it == psi.colors.end() ? std::make_pair(true, true)
                                         : it->second;
  }
  return s;
}

bool is_singular(const SingularitySet& s) { return s.points.size() != 1; }

bool is_singular_colored(const SingularitySet& s) {
  if (s.points.empty()) return true;
  bool black = false, white = false;
  for (const auto& [e, c] : s.colors) {
    black = black || c.first;
    white = white || c.second;
  }
  return black && white;
}

std::map<Exponent, Rat> hyperplane_fn(const Point& a,
                                      const std::vector<Exponent>& domain) {
  std::map<Exponent, Rat> chi;
  for (const auto& e : domain) {
    ExtValue v(0);
    for (size_t j = 0; j < a.size(); ++j)
      v = trop_mul(v, scale(e[j], a.coords[j]));
    if (v.is_finite()) chi[e] = -v.value();
  }
  return chi;
}

std::vector<Exponent> degree_simplex(int n, long N) {
  std::vector<Exponent> out;
  Exponent cur(n, 0);
  // graded order, lexicographic within a degree
  for (long d = 0; d <= N; ++d) {
    std::vector<Exponent> level;
    std::function<void(int, long)> rec = [&](int pos, long left) {
      if (pos == n - 1) {
        cur[pos] = static_cast<int>(left);
        level.push_back(cur);
        return;
      }
      for (long v = left; v >= 0; --v) {
        cur[pos] = static_cast<int>(v);
        rec(pos + 1, left - v);
      }
    };
    if (n == 0) {
      if (d == 0) out.push_back({});
      continue;
    }
    rec(0, d);
    for (auto& e : level) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace tropsatz
