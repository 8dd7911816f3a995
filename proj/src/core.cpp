#include "tropsatz/core.hpp"

#include <cstdlib>
#include <iostream>

namespace tropsatz {

std::string ExtValue::str() const { return to_string(*this); }

ExtValue scale(long k, const ExtValue& a) {
  if (k < 0) throw std::invalid_argument("scale: negative multiplier");
  if (k == 0) return ExtValue(0);  // 0 * inf = 0
  if (a.is_inf()) return ExtValue::infinity();
  return ExtValue(Rat(a.value() * k));
}

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("add_exponents: dimension mismatch");
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string to_string(const ExtValue& v) {
  if (v.is_inf()) return "inf";
  return to_string(v.value());
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  Rat v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("parse_rat: bad value '" + s + "'");
  if (v.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator");
  v.canonicalize();
  return v;
}

ExtValue parse_ext(const std::string& s) {
  if (s == "inf") return ExtValue::infinity();
  return ExtValue(parse_rat(s));
}

Int lcm_denominators(const std::vector<ExtValue>& vals) {
  Int l = 1;
  for (const auto& v : vals) {
    if (v.is_inf()) continue;
    Int d = v.value().get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    l = l / g * d;
  }
  return l;
}

LogLevel log_level() {
  static LogLevel lvl = [] {
    const char* e = std::getenv("TROPSATZ_LOG");
    if (!e) return LogLevel::Quiet;
    std::string s(e);
    if (s == "debug") return LogLevel::Debug;
    if (s == "info") return LogLevel::Info;
    return LogLevel::Quiet;
  }();
  return lvl;
}

void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::Info) std::cerr << "[tropsatz] " << msg << "\n";
}

void log_debug(const std::string& msg) {
  if (log_level() >= LogLevel::Debug) std::cerr << "[tropsatz] " << msg << "\n";
}

}  // namespace tropsatz
