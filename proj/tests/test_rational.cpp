#include <doctest.h>

#include <random>

#include "jacq/rational.hpp"

using jacq::Integer;
using jacq::Rational;

TEST_CASE("rational normal form: lowest terms, positive denominator") {
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(2, -4).denominator() == 2);
  CHECK(Rational(2, -4).numerator() == -1);
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational string form") {
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-1, 4).str() == "-1/4");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational("293") == Rational(293));
  CHECK(Rational("-6/8") == Rational(-3, 4));
  CHECK_THROWS(Rational("not a number"));
}

TEST_CASE("pow2 handles both signs") {
  CHECK(Rational::pow2(0) == Rational(1));
  CHECK(Rational::pow2(10) == Rational(1024));
  CHECK(Rational::pow2(-2) == Rational(1, 4));
  CHECK(Rational::pow2(-2).str() == "1/4");
}

TEST_CASE("arithmetic stays canonical") {
  CHECK(Rational(1, 6) + Rational(1, 3) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("field axioms on sampled values") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  auto draw = [&] { return Rational(num(rng), den(rng)); };
  for (int t = 0; t < 200; ++t) {
    const Rational x = draw(), y = draw(), z = draw();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x + Rational(0) == x);
    CHECK(x * Rational(1) == x);
    if (!x.is_zero()) CHECK(x / x == Rational(1));
  }
}
