#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "zagier/rational_function.hpp"

using zagier::Poly;
using zagier::Rational;
using zagier::RationalFunction;
using zagier::series_expand;

TEST_CASE("zero polynomial and degree reporting") {
  const Poly z;
  CHECK(z.is_zero());
  CHECK_FALSE(z.degree().has_value());
  CHECK(Poly({0, 0, 0}).is_zero());  // trailing zeros normalize away
  CHECK(Poly({1, 2}).degree() == 1);
  CHECK(Poly({Rational(5)}).degree() == 0);
}

TEST_CASE("evaluation") {
  const Poly p({Rational(3, 4), Rational(1, 2)});  // x/2 + 3/4
  CHECK(p(1) == Rational(5, 4));
  CHECK(Poly()(Rational(17, 3)) == Rational(0));
  // B_2(x) = x^2 - x + 1/6 at 1/2
  const Poly b2({Rational(1, 6), -1, 1});
  CHECK(b2(Rational(1, 2)) == Rational(-1, 12));
}

TEST_CASE("arithmetic") {
  const Poly xp1({1, 1}), xm1({-1, 1});
  CHECK(xp1 * xm1 == Poly({-1, 0, 1}));
  const Poly p = test_util::random_poly(6);
  CHECK(p + Poly() == p);
  const Poly b2({Rational(1, 6), -1, 1});
  CHECK(b2 * Rational(1, 4) == Poly({Rational(1, 24), Rational(-1, 4), Rational(1, 4)}));
  CHECK((xp1 - xp1).is_zero());
  CHECK_THROWS_AS(xp1 / Rational(0), zagier::DivisionByZero);
}

TEST_CASE("composition") {
  CHECK(Poly({0, 0, 1}).compose(Poly({1, 1})) == Poly({1, 2, 1}));
  const Poly t2({-1, 0, 2});  // 2x^2 - 1
  CHECK(t2.compose(Poly({0, Rational(1, 2)})) == Poly({-1, 0, Rational(1, 2)}));
  const Poly p = test_util::random_poly(8);
  CHECK(p.compose(Poly::x()) == p);
  CHECK(p.shifted(0) == p);
}

TEST_CASE("derivative") {
  CHECK(Poly({Rational(1, 24), Rational(3, 4), Rational(1, 4)}).derivative() ==
        Poly({Rational(3, 4), Rational(1, 2)}));
  CHECK(Poly({Rational(9)}).derivative().is_zero());
  CHECK(Poly({0, 0, 0, 1}).derivative() == Poly({0, 0, 3}));
}

TEST_CASE("chain rule with unit inner derivative") {
  for (int i = 0; i < 60; ++i) {
    const Poly p = test_util::random_poly(7);
    const Rational a = test_util::random_rational();
    CHECK(p.shifted(a).derivative() == p.derivative().shifted(a));
  }
}

TEST_CASE("ring axioms on random polynomials") {
  for (int i = 0; i < 60; ++i) {
    const Poly a = test_util::random_poly(5);
    const Poly b = test_util::random_poly(5);
    const Poly c = test_util::random_poly(5);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("series expansion of 1/(1-z)") {
  const RationalFunction geom(Poly({1}), Poly({1, -1}));
  const auto c = series_expand(geom, 4);
  CHECK(c == std::vector<Rational>{1, 1, 1, 1});
}

TEST_CASE("series expansion requires den(0) != 0") {
  const RationalFunction f(Poly({1}), Poly({0, 1}));
  CHECK_THROWS_AS(series_expand(f, 3), zagier::NotExpandable);
  CHECK_THROWS_AS(RationalFunction(Poly({1}), Poly()), zagier::DivisionByZero);
}

TEST_CASE("series of the odd-number certificate starts 3/4, 0, -1/4") {
  std::vector<Rational> num(12), den(13);
  num[1] = -3; num[3] = 1; num[5] = 1; num[7] = -1; num[9] = -1; num[11] = 3;
  den[0] = -4; den[12] = 4;
  const RationalFunction g(Poly(std::move(num)), Poly(std::move(den)));
  const auto c = series_expand(g, 4);
  CHECK(c[1] == Rational(3, 4));
  CHECK(c[2] == Rational(0));
  CHECK(c[3] == Rational(-1, 4));
}

TEST_CASE("series reconvolved with the denominator returns the numerator") {
  for (int i = 0; i < 40; ++i) {
    const Poly p = test_util::random_poly(5);
    Poly q = test_util::random_poly(5);
    if (q.coeff(0).is_zero()) q += Poly({Rational(1)});
    const std::size_t n = 12;
    const auto a = series_expand(RationalFunction(p, q), n);
    for (std::size_t m = 0; m < n; ++m) {
      Rational conv;
      for (std::size_t k = 0; k <= m; ++k) conv += q.coeff(k) * a[m - k];
      CHECK(conv == p.coeff(m));
    }
  }
}
