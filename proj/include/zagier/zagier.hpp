#ifndef ZAGIER_ZAGIER_HPP
#define ZAGIER_ZAGIER_HPP

#include <cstddef>
#include <mutex>
#include <utility>
#include <vector>

#include "zagier/umbral.hpp"

// Zagier numbers/polynomials, the modified Euler family, and the exact
// identities tying them to the Bernoulli, Euler, Chebyshev and Gegenbauer
// families. Identity operations return the defect polynomial (or the exact
// reconstruction) rather than a boolean so a failing test carries the full
// discrepancy.
//
// All starred families require n >= 1: the r = 0 term of the defining sum
// contributes 1/n, so index 0 is rejected rather than given a conventional
// value.

namespace zagier {

namespace detail {

struct ZagierNumTag {};
struct ZagierPolyTag {};
struct ModEulerNumTag {};
struct ModEulerPolyTag {};

inline void require_positive_index(std::size_t n, const char* who) {
  if (n == 0) throw UndefinedIndex(std::string(who) + ": defined for n >= 1 only");
}

}  // namespace detail

/// B*_n = sum_{r=0..n} C(n+r,2r) B_r / (n+r), n >= 1.
inline Rational zagier_number(std::size_t n) {
  detail::require_positive_index(n, "zagier_number");
  auto& c = detail::family_cache<detail::ZagierNumTag, Rational>();
  std::scoped_lock lk(c.m);
  if (c.v.empty()) c.v.push_back(0);  // slot 0 unused
  while (c.v.size() <= n) {
    const std::size_t m = c.v.size();
    Rational s;
    for (std::size_t r = 0; r <= m; ++r)
      s += Rational(binom(m + r, static_cast<long>(2 * r)), Integer(m + r)) *
           bernoulli_number(r);
    c.v.push_back(s);
  }
  return c.v[n];
}

/// B*_n(x) = sum_{r=0..n} C(n+r,2r) B_r(x) / (n+r), n >= 1.
inline Poly zagier_poly(std::size_t n) {
  detail::require_positive_index(n, "zagier_poly");
  auto& c = detail::family_cache<detail::ZagierPolyTag, Poly>();
  std::scoped_lock lk(c.m);
  if (c.v.empty()) c.v.push_back(Poly());  // slot 0 unused
  while (c.v.size() <= n) {
    const std::size_t m = c.v.size();
    Poly s;
    for (std::size_t r = 0; r <= m; ++r)
      s += bernoulli_poly(r) * Rational(binom(m + r, static_cast<long>(2 * r)),
                                        Integer(m + r));
    c.v.push_back(std::move(s));
  }
  return c.v[n];
}

/// Chebyshev route to the same polynomial:
/// B*_n(x) = eval{(1/n) T_n((B + x + 2)/2)}, realized by composing T_n with
/// (y+2)/2 and applying the Bernoulli umbra to the shift.
inline Poly zagier_poly_via_chebyshev(std::size_t n) {
  detail::require_positive_index(n, "zagier_poly_via_chebyshev");
  const Poly inner({1, Rational(1, 2)});  // (y + 2)/2
  const Poly tn_shifted = chebyshev_t(n).compose(inner);
  return umbral_eval_poly(tn_shifted, bernoulli_umbra()) / Rational(static_cast<long>(n));
}

/// Inversion: B_n = 2n sum_{k=1..n} (-1)^{n+k} [C(2n-1,n-k) - C(2n-1,n-k-1)] B*_k
///                 + 2 (-1)^n C(2n-1,n).
inline Rational bernoulli_from_zagier(std::size_t n) {
  detail::require_positive_index(n, "bernoulli_from_zagier");
  Rational s;
  for (std::size_t k = 1; k <= n; ++k) {
    const Integer w = binom(2 * n - 1, static_cast<long>(n - k)) -
                      binom(2 * n - 1, static_cast<long>(n) - static_cast<long>(k) - 1);
    const Rational sign = ((n + k) % 2 == 0) ? 1 : -1;
    s += sign * Rational(w) * zagier_number(k);
  }
  const Rational sign_n = (n % 2 == 0) ? 1 : -1;
  return Rational(2 * static_cast<long>(n)) * s +
         Rational(2) * sign_n * Rational(binom(2 * n - 1, static_cast<long>(n)));
}

/// Polynomial analogue of the inversion; reproduces B_n(x).
inline Poly bernoulli_poly_from_zagier(std::size_t n) {
  detail::require_positive_index(n, "bernoulli_poly_from_zagier");
  Poly s;
  for (std::size_t k = 1; k <= n; ++k) {
    const Integer w = binom(2 * n - 1, static_cast<long>(n - k)) -
                      binom(2 * n - 1, static_cast<long>(n) - static_cast<long>(k) - 1);
    const Rational sign = ((n + k) % 2 == 0) ? 1 : -1;
    s += zagier_poly(k) * (sign * Rational(w));
  }
  const Rational sign_n = (n % 2 == 0) ? 1 : -1;
  return s * Rational(2 * static_cast<long>(n)) +
         Poly::constant(Rational(2) * sign_n *
                        Rational(binom(2 * n - 1, static_cast<long>(n))));
}

/// Right-hand side of the derivative identity:
///   d/dx B*_n(x) = sum_{j<=n/2} (2j-1) B*_{2j-1}(x)          (n even)
///   d/dx B*_n(x) = 1/2 + sum_{j<=n/2} 2j B*_{2j}(x)          (n odd)
inline Poly zagier_derivative_rhs(std::size_t n) {
  detail::require_positive_index(n, "zagier_derivative_rhs");
  const std::size_t half = n / 2;
  Poly s;
  if (n % 2 == 0) {
    for (std::size_t j = 1; j <= half; ++j)
      s += zagier_poly(2 * j - 1) * Rational(2 * static_cast<long>(j) - 1);
  } else {
    s = Poly::constant(Rational(1, 2));
    for (std::size_t j = 1; j <= half; ++j)
      s += zagier_poly(2 * j) * Rational(2 * static_cast<long>(j));
  }
  return s;
}

/// sum_{r=1..n-1} (-1)^r 2(r+1)/(n+r+1) C(2r-1,r) C(n+r+1,2r+2); equals -floor(n/2).
inline Rational binomial_sum_S1(std::size_t n) {
  detail::require_positive_index(n, "binomial_sum_S1");
  Rational s;
  for (std::size_t r = 1; r + 1 <= n; ++r) {
    Rational t = Rational(2 * static_cast<long>(r) + 2, static_cast<long>(n + r + 1));
    t *= Rational(binom(2 * r - 1, static_cast<long>(r)));
    t *= Rational(binom(n + r + 1, static_cast<long>(2 * r + 2)));
    s += (r % 2 == 0) ? t : -t;
  }
  return s;
}

/// u(n,k) = sum_{r=k..n-1} 2(-1)^r r(r+1)/(n+r+1) C(n+r+1,2r+2)
///          [C(2r-1,r-k) - C(2r-1,r-k-1)], for 1 <= k <= n-1.
/// Case table: n even -> -k (k odd), 0 (k even); n odd -> 0 (k odd), k (k even).
inline Rational binomial_sum_u(std::size_t n, std::size_t k) {
  if (k < 1 || k + 1 > n) throw IndexError("binomial_sum_u: need 1 <= k <= n-1");
  Rational s;
  for (std::size_t r = k; r + 1 <= n; ++r) {
    Rational t = Rational(2 * static_cast<long>(r) * (static_cast<long>(r) + 1),
                          static_cast<long>(n + r + 1));
    t *= Rational(binom(n + r + 1, static_cast<long>(2 * r + 2)));
    t *= Rational(binom(2 * r - 1, static_cast<long>(r - k)) -
                  binom(2 * r - 1, static_cast<long>(r) - static_cast<long>(k) - 1));
    s += (r % 2 == 0) ? t : -t;
  }
  return s;
}

/// Even-index Chebyshev representation; reconstructs B*_{2n}(x):
/// 2 B*_{2n}(x) = sum_{r=0..n} (-1)^{n+r} C(n+r,2r) B_{2r}(x)/(n+r)
///              + U_{2n-1}(x/2) + U_{2n-1}((x+1)/2).
inline Poly zagier_even_cheb_rep(std::size_t n) {
  detail::require_positive_index(n, "zagier_even_cheb_rep");
  Poly s;
  for (std::size_t r = 0; r <= n; ++r) {
    const Rational sign = ((n + r) % 2 == 0) ? 1 : -1;
    s += bernoulli_poly(2 * r) *
         (sign * Rational(binom(n + r, static_cast<long>(2 * r)), Integer(n + r)));
  }
  const Poly half_x({0, Rational(1, 2)});
  const Poly half_x1({Rational(1, 2), Rational(1, 2)});
  s += chebyshev_u(2 * n - 1).compose(half_x);
  s += chebyshev_u(2 * n - 1).compose(half_x1);
  return s / Rational(2);
}

/// Odd-index companion; reconstructs B*_{2n+1}(x) for n >= 0:
/// 2 B*_{2n+1}(x) = sum_{r=0..n} (-1)^{n+r} C(n+r+1,2r+1) B_{2r+1}(x)/(n+r+1)
///                + U_{2n}(x/2) + U_{2n}((x+1)/2).
inline Poly zagier_odd_cheb_rep(std::size_t n) {
  Poly s;
  for (std::size_t r = 0; r <= n; ++r) {
    const Rational sign = ((n + r) % 2 == 0) ? 1 : -1;
    s += bernoulli_poly(2 * r + 1) *
         (sign * Rational(binom(n + r + 1, static_cast<long>(2 * r + 1)),
                          Integer(n + r + 1)));
  }
  const Poly half_x({0, Rational(1, 2)});
  const Poly half_x1({Rational(1, 2), Rational(1, 2)});
  s += chebyshev_u(2 * n).compose(half_x);
  s += chebyshev_u(2 * n).compose(half_x1);
  return s / Rational(2);
}

/// (1/2) sum_{j=1..k} U_{n-1}((x-j)/2 + 1); equals B*_n(x) - B*_n(x-k).
inline Poly zagier_difference(std::size_t n, std::size_t k) {
  detail::require_positive_index(n, "zagier_difference");
  detail::require_positive_index(k, "zagier_difference (shift k)");
  Poly s;
  for (std::size_t j = 1; j <= k; ++j) {
    const Poly inner({Rational(2 - static_cast<long>(j), 2), Rational(1, 2)});
    s += chebyshev_u(n - 1).compose(inner);
  }
  return s / Rational(2);
}

/// sum_{r=0..n} (-1)^{n+r} C(n+r,2r) B_{2r}(x)/(n+r); equals 2 B*_{2n}(x-2).
inline Poly zagier_even_alt_sum(std::size_t n) {
  detail::require_positive_index(n, "zagier_even_alt_sum");
  Poly s;
  for (std::size_t r = 0; r <= n; ++r) {
    const Rational sign = ((n + r) % 2 == 0) ? 1 : -1;
    s += bernoulli_poly(2 * r) *
         (sign * Rational(binom(n + r, static_cast<long>(2 * r)), Integer(n + r)));
  }
  return s;
}

/// B*_n(-x-3) - (-1)^n B*_n(x); zero by the reflection symmetry about -3/2.
inline Poly zagier_symmetry_defect(std::size_t n) {
  detail::require_positive_index(n, "zagier_symmetry_defect");
  const Poly reflected = zagier_poly(n).compose(Poly({-3, -1}));
  const Rational sign = (n % 2 == 0) ? 1 : -1;
  return reflected - zagier_poly(n) * sign;
}

/// Gegenbauer expansion of the centered polynomial B*_n(x - 3/2):
///   (1/n) T_n(x/2) + sum_{k=1..n/2} (B_{2k}(1/2)/(4k)) C^{(2k)}_{n-2k}(x/2).
/// The coefficient B_{2k}(1/2)/(4k) comes from the even moments
/// E[(iL_B/2)^{2k}] = B_{2k}(1/2)/2^{2k} combined with
/// (d/dy)^{2k} T_n(y) = n 2^{2k-1} (2k-1)! C^{(2k)}_{n-2k}(y).
inline Poly zagier_shifted_gegenbauer(std::size_t n) {
  detail::require_positive_index(n, "zagier_shifted_gegenbauer");
  const Poly half_x({0, Rational(1, 2)});
  Poly s = chebyshev_t(n).compose(half_x) / Rational(static_cast<long>(n));
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    const Rational c = bernoulli_poly(2 * k)(Rational(1, 2)) /
                       Rational(4 * static_cast<long>(k));
    s += gegenbauer(n - 2 * k, static_cast<long>(2 * k)).compose(half_x) * c;
  }
  return s;
}

/// E*_n = sum_{r=0..n} C(n+r,2r) (n/(n+r)) E_r with the Euler numbers E_r.
/// Note the weight n/(n+r), not 1/(n+r); the period-3/period-12 structure
/// depends on it.
inline Rational modified_euler_number(std::size_t n) {
  detail::require_positive_index(n, "modified_euler_number");
  auto& c = detail::family_cache<detail::ModEulerNumTag, Rational>();
  std::scoped_lock lk(c.m);
  if (c.v.empty()) c.v.push_back(0);
  while (c.v.size() <= n) {
    const std::size_t m = c.v.size();
    Rational s;
    for (std::size_t r = 0; r <= m; ++r)
      s += Rational(binom(m + r, static_cast<long>(2 * r))) *
           Rational(static_cast<long>(m), static_cast<long>(m + r)) * euler_number(r);
    c.v.push_back(s);
  }
  return c.v[n];
}

/// E*_n(x) with the Euler polynomials E_r(x) and the same n/(n+r) weight.
inline Poly modified_euler_poly(std::size_t n) {
  detail::require_positive_index(n, "modified_euler_poly");
  auto& c = detail::family_cache<detail::ModEulerPolyTag, Poly>();
  std::scoped_lock lk(c.m);
  if (c.v.empty()) c.v.push_back(Poly());
  while (c.v.size() <= n) {
    const std::size_t m = c.v.size();
    Poly s;
    for (std::size_t r = 0; r <= m; ++r)
      s += euler_poly(r) * (Rational(binom(m + r, static_cast<long>(2 * r))) *
                            Rational(static_cast<long>(m), static_cast<long>(m + r)));
    c.v.push_back(std::move(s));
  }
  return c.v[n];
}

/// E*_n(-x-3) - (-1)^n E*_n(x); zero polynomial.
inline Poly modified_euler_symmetry_defect(std::size_t n) {
  detail::require_positive_index(n, "modified_euler_symmetry_defect");
  const Poly reflected = modified_euler_poly(n).compose(Poly({-3, -1}));
  const Rational sign = (n % 2 == 0) ? 1 : -1;
  return reflected - modified_euler_poly(n) * sign;
}

/// 2 B*_n(2x) - (B* o E)_n(2x) - (B* o E)_n(2x+1), via umbral composition;
/// zero polynomial (the duplication formula).
inline Poly duplication_defect(std::size_t n) {
  detail::require_positive_index(n, "duplication_defect");
  PolySequence p, q;
  p.polys.push_back(Poly());  // B*_0 never enters; only P_n is read
  for (std::size_t k = 1; k <= n; ++k) p.polys.push_back(zagier_poly(k));
  for (std::size_t k = 0; k <= n; ++k) q.polys.push_back(euler_poly(k));
  const Poly comp = umbral_compose(p, q, n);
  const Poly two_x({0, 2});
  const Poly two_x1({1, 2});
  return zagier_poly(n).compose(two_x) * Rational(2) - comp.compose(two_x) -
         comp.compose(two_x1);
}

}  // namespace zagier

#endif  // ZAGIER_ZAGIER_HPP
