#include <catch2/catch_amalgamated.hpp>

#include "soliton_forge/rational.hpp"
#include "soliton_forge/rng.hpp"

using namespace sforge;

TEST_CASE("rationals are stored reduced with positive denominator", "[rational]") {
  const Rational r = make_rational(6, -4);
  CHECK(numerator(r) == -3);
  CHECK(denominator(r) == 2);
  CHECK(r.str() == "-3/2");
  CHECK(make_rational(7, 21).str() == "1/3");
  CHECK(make_rational(0, 5).str() == "0");
  CHECK(make_rational(-5, 1).str() == "-5");
}

TEST_CASE("arithmetic is exact", "[rational]") {
  CHECK(make_rational(1, 3) + make_rational(1, 6) == make_rational(1, 2));
  CHECK(make_rational(1, 10) * 10 == 1);
  // the classic float counterexample: 0.1 + 0.2 == 0.3 holds here
  CHECK(make_rational(1, 10) + make_rational(2, 10) == make_rational(3, 10));
  Rational big = 1;
  for (int i = 0; i < 64; ++i) big *= make_rational(1, 2);
  CHECK(big * Rational(Integer(1) << 64) == 1);
}

TEST_CASE("wire format p and p/q parses and round-trips", "[rational]") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("3/4") == make_rational(3, 4));
  CHECK(parse_rational("-3/4") == make_rational(-3, 4));
  CHECK(parse_rational("6/4") == make_rational(3, 2));  // canonicalized on read

  SplitMix64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const Rational r = random_rational(rng);
    CHECK(parse_rational(r.str()) == r);
  }
}

TEST_CASE("malformed rationals are rejected", "[rational]") {
  for (const char* bad : {"", "-", "/2", "3/", "3/-4", "3/0", "1.5", "a", "1/2/3", "+5", " 1"})
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  CHECK_THROWS_AS(make_rational(1, 0), Error);
}
