#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropsatz {

using Rat = mpq_class;
using Int = mpz_class;

/// Element of the min-plus semiring over Q or Q with +infinity.
/// Finite values are canonical rationals (lowest terms, positive
/// denominator, which mpq_class maintains); Infinity is +infinity only.
class ExtValue {
 public:
  ExtValue() : inf_(false), v_(0) {}
  ExtValue(const Rat& v) : inf_(false), v_(v) { v_.canonicalize(); }
  ExtValue(long v) : inf_(false), v_(v) {}

  static ExtValue infinity() {
    ExtValue x;
    x.inf_ = true;
    return x;
  }

  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }

  const Rat& value() const {
    if (inf_) throw std::logic_error("ExtValue: value() of infinity");
    return v_;
  }

  bool operator==(const ExtValue& o) const {
    if (inf_ || o.inf_) return inf_ == o.inf_;
    return v_ == o.v_;
  }
  bool operator!=(const ExtValue& o) const { return !(*this == o); }
  // Total order with infinity as the unique maximum.
  bool operator<(const ExtValue& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return v_ < o.v_;
  }
  bool operator<=(const ExtValue& o) const { return !(o < *this); }
  bool operator>(const ExtValue& o) const { return o < *this; }
  bool operator>=(const ExtValue& o) const { return !(*this < o); }

  std::string str() const;

 private:
  bool inf_;
  Rat v_;
};

// Semiring operations: a (+) b = min, a (x) b = classical sum with infinity
// absorbing.
inline ExtValue trop_add(const ExtValue& a, const ExtValue& b) {
  return a < b ? a : b;
}
inline ExtValue trop_mul(const ExtValue& a, const ExtValue& b) {
  if (a.is_inf() || b.is_inf()) return ExtValue::infinity();
  return ExtValue(Rat(a.value() + b.value()));
}

/// k * a for a nonnegative integer k, with the convention 0 * inf = 0.
ExtValue scale(long k, const ExtValue& a);

/// Exponent vector of a monomial: nonnegative integer coordinates.
using Exponent = std::vector<int>;

inline long degree(const Exponent& e) {
  long d = 0;
  for (int c : e) d += c;
  return d;
}

Exponent add_exponents(const Exponent& a, const Exponent& b);

/// Text form shared by all file formats: integers as -?[0-9]+, rationals as
/// p/q in lowest terms, infinity as "inf".
std::string to_string(const Rat& v);
std::string to_string(const ExtValue& v);
Rat parse_rat(const std::string& s);
ExtValue parse_ext(const std::string& s);

/// LCM of denominators of a finite set of values (infinite entries are
/// skipped). Multiplying by it clears every finite value to an integer.
Int lcm_denominators(const std::vector<ExtValue>& vals);

/// Logging controlled by TROPSATZ_LOG in {quiet, info, debug}.
enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };
LogLevel log_level();
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

}  // namespace tropsatz
