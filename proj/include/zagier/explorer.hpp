#ifndef ZAGIER_EXPLORER_HPP
#define ZAGIER_EXPLORER_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "zagier/zagier.hpp"

// Denominator arithmetic, coefficient statistics, numeric roots, and the
// floating-point validation of the transcendental generating functions.
// Floats live in this module only; every float-consuming test states its
// tolerance explicitly.

namespace zagier {

/// Denominator of B*_n in lowest terms.
inline Integer alpha(std::size_t n) { return zagier_number(n).denominator(); }

struct DenominatorProfile {
  std::size_t n = 0;
  Integer alpha;
  std::optional<Integer> alpha_over_4;        // present when n is even and 4 | alpha
  std::map<unsigned long, unsigned> prime_powers;
};

namespace detail {

inline std::map<unsigned long, unsigned> factor_by_trial_division(Integer a) {
  std::map<unsigned long, unsigned> out;
  for (unsigned long p = 2; Integer(p) * Integer(p) <= a; p += (p == 2) ? 1 : 2) {
    while (mpz_divisible_ui_p(a.get_mpz_t(), p)) {
      ++out[p];
      mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), p);
    }
  }
  if (a > 1) ++out[a.get_ui()];  // alpha values are smooth; the tail is one prime
  return out;
}

}  // namespace detail

inline DenominatorProfile denominator_profile(std::size_t n) {
  DenominatorProfile out;
  out.n = n;
  out.alpha = alpha(n);
  if (n % 2 == 0 && mpz_divisible_ui_p(out.alpha.get_mpz_t(), 4))
    out.alpha_over_4 = out.alpha / 4;
  out.prime_powers = detail::factor_by_trial_division(out.alpha);
  return out;
}

/// p-adic valuation of alpha(n). Throws InvalidPrime if p is not prime.
inline unsigned prime_power_profile(std::size_t n, unsigned long p) {
  Integer pz(static_cast<long>(p));
  if (p < 2 || mpz_probab_prime_p(pz.get_mpz_t(), 40) == 0)
    throw InvalidPrime("prime_power_profile: p = " + std::to_string(p));
  Integer a = alpha(n);
  unsigned e = 0;
  while (mpz_divisible_ui_p(a.get_mpz_t(), p)) {
    ++e;
    mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), p);
  }
  return e;
}

struct IntegralityReport {
  bool all_integral = true;
  long failing_j = 0;
  std::size_t failing_n = 0;
  Rational failing_value;
};

/// Checks 4 B*_{2n+1}(j) in Z for j in [j_lo, j_hi], 0 <= n <= n_max.
inline IntegralityReport integrality_4b(long j_lo, long j_hi, std::size_t n_max) {
  IntegralityReport out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Poly& p = zagier_poly(2 * n + 1);
    for (long j = j_lo; j <= j_hi; ++j) {
      const Rational v = Rational(4) * p(Rational(j));
      if (!v.is_integer()) {
        out.all_integral = false;
        out.failing_j = j;
        out.failing_n = n;
        out.failing_value = v;
        return out;
      }
    }
  }
  return out;
}

struct ConstancyReport {
  bool constant = true;
  long failing_j = 0;
  Integer expected;
  Integer found;
};

/// True iff denominator(B*_n(j)) == alpha(n) for every j in the range.
inline ConstancyReport denominator_constancy(std::size_t n, long j_lo, long j_hi) {
  ConstancyReport out;
  out.expected = alpha(n);
  const Poly& p = zagier_poly(n);
  for (long j = j_lo; j <= j_hi; ++j) {
    const Integer d = p(Rational(j)).denominator();
    if (d != out.expected) {
      out.constant = false;
      out.failing_j = j;
      out.found = d;
      return out;
    }
  }
  return out;
}

struct CoefficientStats {
  std::size_t n = 0;
  std::size_t integer_count = 0;       // over the n+1 dense coefficients of B*_n(x)
  Rational positive_excess;            // (#positive - #negative) / (n+1)
  std::optional<unsigned> logconcave_depth;  // nullopt = exceeded the budget
  unsigned logconcave_budget = 0;
};

namespace detail {

inline std::vector<Rational> logconcavity_step(const std::vector<Rational>& a) {
  std::vector<Rational> out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    const Rational left = j > 0 ? a[j - 1] : Rational(0);
    const Rational right = j + 1 < a.size() ? a[j + 1] : Rational(0);
    out[j] = a[j] * a[j] - left * right;
  }
  return out;
}

}  // namespace detail

/// Counts integer coefficients and the sign excess of B*_n(x), and probes the
/// log-concavity operator L{a_j} = {a_j^2 - a_{j-1} a_{j+1}} on the shifted
/// coefficients of B*_n(x + 3/2): depth = number of successive applications
/// that stay strictly positive, up to the budget.
inline CoefficientStats coefficient_stats(std::size_t n, unsigned logconcave_budget = 6) {
  detail::require_positive_index(n, "coefficient_stats");
  CoefficientStats out;
  out.n = n;
  out.logconcave_budget = logconcave_budget;

  const Poly& p = zagier_poly(n);
  long pos = 0, neg = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational c = p.coeff(i);
    if (c.is_integer()) ++out.integer_count;
    if (c.sign() > 0) ++pos;
    if (c.sign() < 0) ++neg;
  }
  out.positive_excess = Rational(pos - neg, static_cast<long>(n) + 1);

  std::vector<Rational> a = p.shifted(Rational(3, 2)).coeffs();
  a.resize(n + 1);
  for (unsigned d = 0; d < logconcave_budget; ++d) {
    a = detail::logconcavity_step(a);
    for (const auto& v : a)
      if (v.sign() <= 0) {
        out.logconcave_depth = d;
        return out;
      }
  }
  return out;  // all budget iterations strictly positive
}

// ---------------------------------------------------------------------------
// Numeric roots (Durand-Kerner, double precision)

struct RootEstimate {
  std::complex<double> root;
  double residual = 0.0;  // |B*_n(root)| with double coefficients
};

inline std::vector<RootEstimate> roots_numeric(std::size_t n, double tol = 1e-16,
                                               std::size_t max_iter = 600) {
  detail::require_positive_index(n, "roots_numeric");
  using C = std::complex<long double>;
  const Poly& p = zagier_poly(n);
  const std::size_t deg = *p.degree();
  std::vector<C> c(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) c[i] = p.coeff(i).to_long_double();

  // monic copy for the iteration; long double keeps the root conditioning of
  // the large coefficients below the 1e-8 symmetry checks downstream
  std::vector<C> m(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) m[i] = c[i] / c[deg];

  auto eval = [](const std::vector<C>& cs, C z) {
    C acc = 0.0L;
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * z + cs[i];
    return acc;
  };

  // initial guesses on a ring around the centroid; radius from the coefficient bound
  long double radius = 0.0L;
  for (std::size_t i = 0; i < deg; ++i)
    radius = std::max(radius,
                      std::pow(std::abs(m[i]), 1.0L / static_cast<long double>(deg - i)));
  radius = 1.0L + 2.0L * radius;
  const C center = -m[deg - 1] / static_cast<long double>(deg);
  std::vector<C> z(deg);
  for (std::size_t i = 0; i < deg; ++i) {
    const long double th =
        2.0L * M_PIl * static_cast<long double>(i) / static_cast<long double>(deg) + 0.35L;
    z[i] = center + radius * C(std::cos(th), std::sin(th));
  }

  for (std::size_t it = 0; it < max_iter; ++it) {
    long double worst = 0.0L;
    for (std::size_t i = 0; i < deg; ++i) {
      C denom = 1.0L;
      for (std::size_t j = 0; j < deg; ++j)
        if (j != i) denom *= (z[i] - z[j]);
      const C delta = eval(m, z[i]) / denom;
      z[i] -= delta;
      worst = std::max(worst, std::abs(delta));
    }
    if (worst < static_cast<long double>(tol)) break;
  }

  std::vector<RootEstimate> out(deg);
  for (std::size_t i = 0; i < deg; ++i) {
    out[i].root = std::complex<double>(static_cast<double>(z[i].real()),
                                       static_cast<double>(z[i].imag()));
    out[i].residual = static_cast<double>(std::abs(eval(c, z[i])));
  }
  std::sort(out.begin(), out.end(), [](const RootEstimate& a, const RootEstimate& b) {
    if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
    return a.root.imag() < b.root.imag();
  });
  return out;
}

// ---------------------------------------------------------------------------
// Digamma and Hurwitz zeta (double wrappers over long-double internals)

namespace detail {

// B_{2k}/(2k) for the asymptotic tail, k = 1..8
template <typename Real>
constexpr Real asym_coeff(int k) {
  constexpr double num[8] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
                             1.0 / 132, -691.0 / 32760, 1.0 / 12, -3617.0 / 8160};
  return static_cast<Real>(num[k - 1]);
}

template <typename Real>
Real digamma_impl(Real x) {
  if (x <= Real(0)) {
    if (x == std::floor(x)) throw DomainError("digamma pole at nonpositive integer");
    // reflection: psi(x) = psi(1-x) - pi cot(pi x)
    const Real pi = Real(3.14159265358979323846264338327950288L);
    return digamma_impl(Real(1) - x) - pi / std::tan(pi * x);
  }
  Real acc = 0;
  while (x < Real(16)) {
    acc -= Real(1) / x;
    x += Real(1);
  }
  const Real inv2 = Real(1) / (x * x);
  Real tail = 0, power = inv2;
  for (int k = 1; k <= 8; ++k) {
    tail += asym_coeff<Real>(k) * power;
    power *= inv2;
  }
  return acc + std::log(x) - Real(1) / (Real(2) * x) - tail;
}

// Euler-Maclaurin with lift to a+N >= 16 and eight correction terms.
template <typename Real>
Real hurwitz_zeta_impl(Real s, Real a) {
  if (!(s > Real(1))) throw DomainError("hurwitz zeta needs s > 1");
  if (!(a > Real(0))) throw DomainError("hurwitz zeta needs a > 0");
  int N = 0;
  while (a + Real(N) < Real(16)) ++N;
  Real sum = 0;
  for (int k = 0; k < N; ++k) sum += std::pow(a + Real(k), -s);
  const Real M = a + Real(N);
  sum += std::pow(M, Real(1) - s) / (s - Real(1));
  sum += std::pow(M, -s) / Real(2);
  // sum_j B_{2j}/(2j)! * (s)_{2j-1} * M^{-s-2j+1}
  static const double b2j_over_fact[8] = {
      1.0 / 12, -1.0 / 720, 1.0 / 30240, -1.0 / 1209600,
      1.0 / 47900160, -691.0 / 1307674368000.0, 1.0 / 74724249600.0,
      -3617.0 / 10670622842880000.0};
  Real poch = s;  // (s)_1
  Real mp = std::pow(M, -s - Real(1));
  for (int j = 1; j <= 8; ++j) {
    sum += static_cast<Real>(b2j_over_fact[j - 1]) * poch * mp;
    poch *= (s + Real(2 * j - 1)) * (s + Real(2 * j));
    mp /= M * M;
  }
  return sum;
}

}  // namespace detail

/// Double-precision digamma; >= 12 significant digits for x > 0.
inline double digamma_numeric(double x) {
  return static_cast<double>(detail::digamma_impl<long double>(static_cast<long double>(x)));
}

/// Hurwitz zeta(s, a) for s > 1, a > 0.
inline double hurwitz_zeta_numeric(double s, double a) {
  return static_cast<double>(detail::hurwitz_zeta_impl<long double>(
      static_cast<long double>(s), static_cast<long double>(a)));
}

struct AsymptoticCheck {
  long double lhs = 0;
  long double rhs = 0;
  long double abs_diff = 0;
};

/// Truncated sum_{n=1..n_trunc} B*_n(x) z^n against
/// -log(z)/2 - psi(z + 1/z - 1 - x)/2. The series is asymptotic; the caller
/// bounds abs_diff by a calibrated multiple of the first omitted term.
inline AsymptoticCheck asymptotic_gf_check(const Rational& x, long double z,
                                           std::size_t n_trunc) {
  AsymptoticCheck out;
  long double zp = 1;
  for (std::size_t n = 1; n <= n_trunc; ++n) {
    zp *= z;
    out.lhs += zagier_poly(n)(x).to_long_double() * zp;
  }
  const long double arg = z + 1 / z - 1 - x.to_long_double();
  out.rhs = -std::log(z) / 2 - detail::digamma_impl<long double>(arg) / 2;
  out.abs_diff = std::fabs(out.lhs - out.rhs);
  return out;
}

/// Truncated sum_{n=0..n_trunc-1} B_n(x) z^n against (1/z) zeta(2, 1/z - x + 1).
inline AsymptoticCheck asymptotic_hurwitz_check(const Rational& x, long double z,
                                                std::size_t n_terms) {
  AsymptoticCheck out;
  long double zp = 1;
  for (std::size_t n = 0; n < n_terms; ++n) {
    out.lhs += bernoulli_poly(n)(x).to_long_double() * zp;
    zp *= z;
  }
  const long double arg = 1 / z - x.to_long_double() + 1;
  out.rhs = detail::hurwitz_zeta_impl<long double>(2.0L, arg) / z;
  out.abs_diff = std::fabs(out.lhs - out.rhs);
  return out;
}

struct QuadratureCheck {
  double quadrature = 0;
  double exact = 0;
  double abs_diff = 0;
};

namespace detail {

// Gauss-Legendre nodes/weights on [-1,1], computed once by Newton iteration.
inline const std::pair<std::vector<double>, std::vector<double>>& gl32() {
  static const auto nw = [] {
    const int m = 32;
    std::vector<double> xs(m), ws(m);
    for (int i = 0; i < m; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= m; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        const double dp = m * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-16) break;
      }
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = m * (x * p1 - p0) / (x * x - 1.0);
      xs[i] = x;
      ws[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return std::make_pair(xs, ws);
  }();
  return nw;
}

}  // namespace detail

/// Quadrature of (pi/2) Int (x - 1/2 + it)^n sech^2(pi t) dt over |t| <= 10
/// against the exact B_n(x). sech^2(pi t) < 1e-26 beyond the cutoff, far
/// below every tolerance used. Defined for n <= 12 (integrand growth).
inline QuadratureCheck soliton_integral_check(std::size_t n, const Rational& x) {
  if (n > 12) throw std::invalid_argument("soliton_integral_check: n <= 12");
  const double c = x.to_double() - 0.5;
  const auto& [nodes, weights] = detail::gl32();
  double integral = 0.0;
  for (int panel = 0; panel < 10; ++panel) {
    const double lo = panel, hi = panel + 1.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double t = 0.5 * (hi - lo) * nodes[i] + 0.5 * (hi + lo);
      const std::complex<double> base(c, t);
      std::complex<double> pw = 1.0;
      for (std::size_t k = 0; k < n; ++k) pw *= base;
      const double sech = 1.0 / std::cosh(M_PI * t);
      acc += weights[i] * pw.real() * sech * sech;
    }
    integral += acc * 0.5 * (hi - lo);
  }
  // f(-t) = conj(f(t)), so the two-sided integral is twice the real part
  QuadratureCheck out;
  out.quadrature = M_PI / 2.0 * 2.0 * integral;
  out.exact = bernoulli_poly(n)(x).to_double();
  out.abs_diff = std::fabs(out.quadrature - out.exact);
  return out;
}

}  // namespace zagier

#endif  // ZAGIER_EXPLORER_HPP
