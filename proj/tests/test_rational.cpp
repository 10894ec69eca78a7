#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "zagier/rational.hpp"

using zagier::binom;
using zagier::Integer;
using zagier::Rational;

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational(-691, -2730) == Rational(691, 2730));
  CHECK(Rational(-691, -2730).denominator() == 2730);
  CHECK_THROWS_AS(Rational(1, 0), zagier::DivisionByZero);
}

TEST_CASE("canonical form invariants on random values") {
  for (int i = 0; i < 500; ++i) {
    const Rational r = test_util::random_rational(1000);
    CHECK(r.denominator() > 0);
    Integer g;
    mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
    CHECK(g == 1);
  }
}

TEST_CASE("arithmetic and division by zero") {
  const Rational a(3, 4), b(-1, 6);
  CHECK(a + b == Rational(7, 12));
  CHECK(a * b == Rational(-1, 8));
  CHECK(a / b == Rational(-9, 2));
  CHECK_THROWS_AS(a / Rational(0), zagier::DivisionByZero);
  CHECK(-a == Rational(-3, 4));
  CHECK(a.abs() == a);
  CHECK(b.abs() == Rational(1, 6));
  CHECK(a > b);
  CHECK(Rational(1, 3).is_integer() == false);
  CHECK(Rational(6, 3).is_integer());
}

TEST_CASE("field axioms on random triples") {
  for (int i = 0; i < 200; ++i) {
    const Rational a = test_util::random_rational();
    const Rational b = test_util::random_rational();
    const Rational c = test_util::random_rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
  }
}

TEST_CASE("string round trip") {
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("3/0"), zagier::DivisionByZero);
  for (int i = 0; i < 300; ++i) {
    const Rational r = test_util::random_rational(100000);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("pow and binomial edge cases") {
  CHECK(pow(Rational(3, 2), 0) == Rational(1));
  CHECK(pow(Rational(3, 2), 3) == Rational(27, 8));
  CHECK(pow(Rational(-1, 2), 2) == Rational(1, 4));
  CHECK(binom(10, 5) == 252);
  CHECK(binom(5, -1) == 0);
  CHECK(binom(5, 7) == 0);
  CHECK(binom(0, 0) == 1);
}
