#include "doctest.h"

#include "concord/rational.hpp"

using namespace concord;

TEST_CASE("parses fractions, integers, and finite decimals exactly") {
  CHECK(parse_rational("3/5") == Rational(3, 5));
  CHECK(parse_rational("1") == Rational(1));
  CHECK(parse_rational("0.6") == Rational(3, 5));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational(" 7/10 ") == Rational(7, 10));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
}

TEST_CASE("rejects malformed numbers") {
  CHECK_THROWS_AS(parse_rational("1/0"), NumberError);
  CHECK_THROWS_AS(parse_rational(""), NumberError);
  CHECK_THROWS_AS(parse_rational("x"), NumberError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), NumberError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), NumberError);
}

TEST_CASE("formats canonically") {
  CHECK(format_rational(Rational(1, 10)) == "1/10");
  CHECK(format_rational(Rational(2, 4)) == "1/2");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(format_rational(Rational(1)) == "1");
}

TEST_CASE("decimal approximation is 6-digit and rounded") {
  CHECK(approx_decimal(Rational(1, 10)) == "0.100000");
  CHECK(approx_decimal(Rational(1, 3)) == "0.333333");
  CHECK(approx_decimal(Rational(2, 3)) == "0.666667");
  CHECK(approx_decimal(Rational(1)) == "1.000000");
}
