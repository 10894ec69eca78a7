#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "zagier/periodicity.hpp"

using namespace zagier;

namespace {
const std::vector<Rational> kOddCycle = {{3, 4}, {-1, 4}, {-1, 4}, {1, 4}, {1, 4}, {-3, 4}};
const std::vector<Rational> kACycle = {{1, 2}, {-1, 2}, {0, 1}};
}  // namespace

TEST_CASE("detect_period basics") {
  std::vector<Rational> constant(30, Rational(5, 7));
  auto r = detect_period(constant, 10);
  REQUIRE(r.has_value());
  CHECK(r->first == 1);

  std::vector<Rational> six;
  for (int rep = 0; rep < 10; ++rep)
    six.insert(six.end(), kOddCycle.begin(), kOddCycle.end());
  r = detect_period(six, 20);
  REQUIRE(r.has_value());
  CHECK(r->first == 6);
  CHECK(r->second == kOddCycle);

  std::vector<Rational> rising;
  for (long i = 0; i < 30; ++i) rising.push_back(Rational(i));
  CHECK_FALSE(detect_period(rising, 10).has_value());

  CHECK_THROWS_AS(detect_period(rising, 11), InsufficientData);
}

TEST_CASE("odd sequences at the paper's anchor points") {
  const auto at0 = odd_zagier_sequence({0}, 6);
  CHECK(at0 == kOddCycle);

  const auto at_center = odd_zagier_sequence({-3}, 12);  // x = -3/2
  for (const auto& v : at_center) CHECK(v == Rational(0));

  const auto at_m2 = odd_zagier_sequence({-4}, 12);  // x = -2
  for (std::size_t n = 0; n < at_m2.size(); ++n) {
    const Rational expect = (n % 2 == 0) ? Rational(-1, 4) : Rational(1, 4);
    CHECK(at_m2[n] == expect);
  }
}

TEST_CASE("classifier verdicts for the key integer points") {
  auto c = classify_odd_zagier({0}, 60);
  CHECK(c.verdict == Verdict::Periodic);
  CHECK(c.period == 6);
  CHECK(c.cycle == kOddCycle);
  CHECK(c.n_max_tested == 60);

  c = classify_odd_zagier({-8}, 60);  // x = -4
  CHECK(c.verdict == Verdict::DriftPeriodic);
  CHECK(c.period == 6);
  CHECK(c.slope == Rational(-1));

  c = classify_odd_zagier({3}, 60);  // x = 3/2
  CHECK(c.verdict == Verdict::Unbounded);

  c = classify_odd_zagier({-3}, 60);  // x = -3/2
  CHECK(c.verdict == Verdict::IdenticallyZero);

  c = classify_odd_zagier({-1}, 60);  // x = -1/2: bounded, never repeats
  CHECK(c.verdict == Verdict::Inconclusive);

  CHECK_THROWS_AS(classify_odd_zagier({0}, 35), InsufficientData);
}

TEST_CASE("classifier verdicts for the A-function") {
  auto c = classify_even_zagier(1, 60);
  CHECK(c.verdict == Verdict::IdenticallyZero);

  c = classify_even_zagier(2, 60);
  CHECK(c.verdict == Verdict::Periodic);
  CHECK(c.period == 3);
  CHECK(c.cycle == kACycle);

  c = classify_even_zagier(3, 60);
  CHECK(c.verdict == Verdict::DriftPeriodic);
  CHECK(c.period == 3);
  CHECK(c.slope == Rational(1));
  CHECK(c.cycle == kACycle);

  c = classify_even_zagier(5, 60);
  CHECK(c.verdict == Verdict::Unbounded);
}

TEST_CASE("closed form for the odd numbers") {
  CHECK(odd_zagier_closed_form(0) == Rational(3, 4));
  CHECK(odd_zagier_closed_form(5) == Rational(-3, 4));
  for (std::size_t n = 0; n <= 30; ++n)
    CHECK(odd_zagier_closed_form(n) == zagier_number(2 * n + 1));
}

TEST_CASE("generating-function certificate") {
  const auto coeffs = series_expand(gf_odd_certificate(), 30);
  CHECK(coeffs[1] == Rational(3, 4));
  CHECK(coeffs[2] == Rational(0));
  CHECK(coeffs[3] == Rational(-1, 4));
  for (std::size_t i = 1; i < 30; ++i) {
    const Rational expect = (i % 2 == 1) ? zagier_number(i) : Rational(0);
    CHECK(coeffs[i] == expect);
  }
}

TEST_CASE("closed forms for integer and half-integer arguments") {
  for (long k = 3; k <= 6; ++k)
    for (std::size_t n = 0; n <= 20; ++n)
      CHECK(special_value_formula(k, n) == zagier_poly(2 * n + 1)(Rational(-k)));
  CHECK_THROWS_AS(special_value_formula(2, 1), IndexError);

  for (long k = -1; k <= 3; ++k)
    for (std::size_t n = 0; n <= 20; ++n)
      CHECK(half_value_formula(k, n) == zagier_poly(2 * n + 1)(Rational(2 * k + 1, 2)));
  CHECK_THROWS_AS(half_value_formula(-2, 1), IndexError);
}

TEST_CASE("jacobi character") {
  CHECK(jacobi_minus3(1) == 1);
  CHECK(jacobi_minus3(2) == -1);
  CHECK(jacobi_minus3(3) == 0);
  // it is U_{2n-1}(1/2)
  for (std::size_t n = 1; n <= 15; ++n)
    CHECK(Rational(jacobi_minus3(n)) == chebyshev_u(2 * n - 1)(Rational(1, 2)));
}

TEST_CASE("classification is symmetric under x -> -x-3") {
  for (long twice : {0L, -2L, -4L, -8L, 1L, 3L}) {
    const auto a = classify_odd_zagier({twice}, 60);
    const auto b = classify_odd_zagier({-twice - 6}, 60);
    CHECK(a.verdict == b.verdict);
    CHECK(a.period == b.period);
  }
}

TEST_CASE("A-function symmetry A(u) = A(1-u)") {
  for (long u = -3; u <= 4; ++u) {
    const auto a = even_a_sequence(u, 30);
    const auto b = even_a_sequence(1 - u, 30);
    CHECK(a == b);
  }
}

TEST_CASE("A-function as a Chebyshev sum") {
  // A*_{2n}(u) = (1/2) sum_{j=2..u+1} U_{2n-1}((u+1-j)/2)
  for (long u = 1; u <= 5; ++u) {
    const auto seq = even_a_sequence(u, 20);
    for (std::size_t n = 1; n <= 20; ++n) {
      Rational s;
      for (long j = 2; j <= u + 1; ++j)
        s += chebyshev_u(2 * n - 1)(Rational(u + 1 - j, 2));
      CHECK(seq[n - 1] == s / Rational(2));
    }
  }
}
