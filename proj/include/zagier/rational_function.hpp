#ifndef ZAGIER_RATIONAL_FUNCTION_HPP
#define ZAGIER_RATIONAL_FUNCTION_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "zagier/polynomial.hpp"

namespace zagier {

/// Quotient of two polynomials. Expansion at the origin requires den(0) != 0.
struct RationalFunction {
  Poly num;
  Poly den;

  RationalFunction(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  }
};

/// First n_terms Taylor coefficients of f at 0 by exact long division:
///   a_n = (num_n - sum_{k=1..deg den} den_k a_{n-k}) / den_0.
inline std::vector<Rational> series_expand(const RationalFunction& f, std::size_t n_terms) {
  const Rational d0 = f.den.coeff(0);
  if (d0.is_zero()) throw NotExpandable();
  std::vector<Rational> a(n_terms);
  for (std::size_t n = 0; n < n_terms; ++n) {
    Rational s = f.num.coeff(n);
    const std::size_t kmax = std::min(n, f.den.size() ? f.den.size() - 1 : 0);
    for (std::size_t k = 1; k <= kmax; ++k) s -= f.den.coeff(k) * a[n - k];
    a[n] = s / d0;
  }
  return a;
}

}  // namespace zagier

#endif  // ZAGIER_RATIONAL_FUNCTION_HPP
