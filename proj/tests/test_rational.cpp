#include <doctest.h>

#include "liecp/rational.hpp"

using liecp::Rational;

TEST_CASE("rationals are stored canonically") {
  CHECK(Rational::parse("-3/12").str() == "-1/4");
  CHECK(Rational::parse("4/2").str() == "2");
  CHECK(Rational::parse("0/7").str() == "0");
  CHECK(Rational(-6, -4).str() == "3/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational::parse(" 7 / 3 ").str() == "7/3");
}

TEST_CASE("arithmetic is exact") {
  const Rational third(1, 3), sixth(1, 6);
  CHECK(third + sixth == Rational(1, 2));
  CHECK(third - sixth == sixth);
  CHECK(third * Rational(3) == Rational(1));
  CHECK(Rational(7, 2) / Rational(7) == Rational(1, 2));
  CHECK((-third).str() == "-1/3");

  // no drift over many operations
  Rational acc;
  for (int i = 1; i <= 50; ++i) acc += Rational(1, i) - Rational(1, i);
  CHECK(acc.is_zero());
}

TEST_CASE("bad literals are rejected") {
  CHECK_THROWS_AS(Rational::parse("1/0"), liecp::error);
  CHECK_THROWS_AS(Rational::parse(""), liecp::error);
  CHECK_THROWS_AS(Rational::parse("a/b"), liecp::error);
  CHECK_THROWS_AS(Rational::parse("1.5"), liecp::error);
  CHECK_THROWS_AS(Rational::parse("1/-2"), liecp::error);
  CHECK_THROWS_AS(Rational(1, 0), liecp::error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), liecp::error);
}

TEST_CASE("comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5) < Rational(0));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 3).sign() == 1);
  CHECK(Rational(-1, 3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("arbitrary precision") {
  const std::string big = "123456789012345678901234567890";
  const Rational r = Rational::parse(big) * Rational::parse(big);
  CHECK(r.str() == "15241578753238836750495351562536198787501905199875019052100");
  CHECK((r / Rational::parse(big)).str() == big);
}
