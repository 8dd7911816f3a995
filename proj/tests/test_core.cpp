#include <doctest.h>

#include <random>

#include "tropsatz/core.hpp"

using namespace tropsatz;

TEST_CASE("semiring operations") {
  ExtValue a(Rat(3, 2)), b(5);
  CHECK(trop_add(a, b) == a);
  CHECK(trop_mul(a, b) == ExtValue(Rat(13, 2)));
  ExtValue inf = ExtValue::infinity();
  CHECK(trop_add(inf, b) == b);
  CHECK(trop_mul(inf, b).is_inf());
  CHECK(scale(0, inf) == ExtValue(0));
  CHECK(scale(3, ExtValue(Rat(1, 2))) == ExtValue(Rat(3, 2)));
  CHECK(scale(2, inf).is_inf());
}

TEST_CASE("ordering: total with infinity maximal, consistent with min") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-8, 8), den(1, 4), coin(0, 5);
  auto rnd = [&]() {
    if (coin(rng) == 0) return ExtValue::infinity();
    return ExtValue(Rat(num(rng), den(rng)));
  };
  for (int t = 0; t < 1000; ++t) {
    ExtValue a = rnd(), b = rnd(), c = rnd();
    // a (+) b == a  iff  a <= b
    CHECK((trop_add(a, b) == a) == (a <= b));
    CHECK(a <= ExtValue::infinity());
    // associativity, commutativity, idempotence, distributivity
    CHECK(trop_add(a, b) == trop_add(b, a));
    CHECK(trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c)));
    CHECK(trop_add(a, a) == a);
    CHECK(trop_mul(a, b) == trop_mul(b, a));
    CHECK(trop_mul(trop_mul(a, b), c) == trop_mul(a, trop_mul(b, c)));
    CHECK(trop_mul(a, trop_add(b, c)) ==
          trop_add(trop_mul(a, b), trop_mul(a, c)));
  }
}

TEST_CASE("text form") {
  CHECK(to_string(ExtValue(Rat(-3, 6))) == "-1/2");
  CHECK(to_string(ExtValue(7)) == "7");
  CHECK(to_string(ExtValue::infinity()) == "inf");
  CHECK(parse_ext("inf").is_inf());
  CHECK(parse_ext("-4/8") == ExtValue(Rat(-1, 2)));
  CHECK(parse_ext("12") == ExtValue(12));
  CHECK_THROWS(parse_ext("1.5"));
  CHECK_THROWS(parse_ext(""));
}

TEST_CASE("lcm of denominators") {
  std::vector<ExtValue> vals = {ExtValue(Rat(1, 6)), ExtValue(Rat(3, 4)),
                                ExtValue::infinity(), ExtValue(2)};
  CHECK(lcm_denominators(vals) == 12);
  CHECK(lcm_denominators({}) == 1);
}

TEST_CASE("exponents") {
  Exponent a{1, 2, 0}, b{0, 1, 3};
  CHECK(degree(a) == 3);
  CHECK(add_exponents(a, b) == Exponent{1, 3, 3});
}
