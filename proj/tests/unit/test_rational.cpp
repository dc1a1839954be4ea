#include "credal/errors.hpp"
#include "credal/rational.hpp"

#include <doctest.h>

using namespace credal;

TEST_CASE("rationals parse to lowest terms and print canonically") {
  CHECK(to_string(parse_rational("2/4")) == "1/2");
  CHECK(to_string(parse_rational("-6/3")) == "-2");
  CHECK(to_string(parse_rational(" 5/10 ")) == "1/2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(to_string(parse_rational("17")) == "17");
  CHECK(parse_rational("123456789012345678901234567890/2") == Rational("61728394506172839450617283945"));
}

TEST_CASE("malformed rationals are rejected") {
  for (const char* bad : {"", "0.5", "1e3", "1/0", "a/b", "1//2", "3/-9", "1/2/3", "/2", "3/"}) {
    CAPTURE(std::string(bad));
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("to_string and parse_rational round-trip") {
  for (long p = -12; p <= 12; ++p) {
    for (long q = 1; q <= 9; ++q) {
      const Rational r = Rational(p) / q;
      CHECK(parse_rational(to_string(r)) == r);
    }
  }
}

TEST_CASE("dot product") {
  CHECK(dot({Rational(1, 2), Rational(1, 3)}, {Rational(2), Rational(3)}) == 2);
}
