#ifndef ZAGIER_CLASSICAL_HPP
#define ZAGIER_CLASSICAL_HPP

#include <cstddef>
#include <map>
#include <mutex>
#include <vector>

#include "zagier/polynomial.hpp"

// Memoized constructors for the classical families: Bernoulli and Euler
// numbers/polynomials, Chebyshev T and U, and integer-order Gegenbauer
// polynomials. Caches are append-only behind a mutex, so concurrent callers
// observe each entry either absent or in its final state.

namespace zagier {

namespace detail {

template <typename T>
struct FamilyCache {
  std::mutex m;
  std::vector<T> v;
};

template <typename Tag, typename T>
FamilyCache<T>& family_cache() {
  static FamilyCache<T> cache;
  return cache;
}

struct BernoulliNumTag {};
struct BernoulliPolyTag {};
struct EulerPolyTag {};
struct ChebyshevTTag {};
struct ChebyshevUTag {};

}  // namespace detail

/// B_n from the recursion sum_{k<=n} C(n+1,k) B_k = 0 (n >= 1), B_0 = 1.
/// Classical convention: B_1 = -1/2.
inline Rational bernoulli_number(std::size_t n) {
  auto& c = detail::family_cache<detail::BernoulliNumTag, Rational>();
  std::scoped_lock lk(c.m);
  if (c.v.empty()) c.v.push_back(1);
  while (c.v.size() <= n) {
    const std::size_t m = c.v.size();
    Rational s;
    for (std::size_t k = 0; k < m; ++k)
      s += Rational(binom(m + 1, static_cast<long>(k))) * c.v[k];
    c.v.push_back(-s / Rational(static_cast<long>(m) + 1));
  }
  return c.v[n];
}

/// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
inline Poly bernoulli_poly(std::size_t n) {
  auto& c = detail::family_cache<detail::BernoulliPolyTag, Poly>();
  std::scoped_lock lk(c.m);
  while (c.v.size() <= n) {
    const std::size_t m = c.v.size();
    std::vector<Rational> coeffs(m + 1);
    for (std::size_t k = 0; k <= m; ++k)
      coeffs[m - k] = Rational(binom(m, static_cast<long>(k))) * bernoulli_number(k);
    c.v.emplace_back(std::move(coeffs));
  }
  return c.v[n];
}

/// E_n(x) = x^n - (1/2) sum_{k<n} C(n,k) E_k(x), the unique solution of
/// E_n(x) + sum_k C(n,k) E_k(x) = 2 x^n.
inline Poly euler_poly(std::size_t n) {
  auto& c = detail::family_cache<detail::EulerPolyTag, Poly>();
  std::scoped_lock lk(c.m);
  while (c.v.size() <= n) {
    const std::size_t m = c.v.size();
    Poly p = Poly::monomial(m);
    Poly s;
    for (std::size_t k = 0; k < m; ++k)
      s += Rational(binom(m, static_cast<long>(k))) * c.v[k];
    p -= s / Rational(2);
    c.v.push_back(std::move(p));
  }
  return c.v[n];
}

/// E_n = 2^n E_n(1/2); integer-valued, zero at odd n.
inline Rational euler_number(std::size_t n) {
  return pow(Rational(2), n) * euler_poly(n)(Rational(1, 2));
}

namespace detail {

inline Poly chebyshev_from_recurrence(FamilyCache<Poly>& c, std::size_t n, const Poly& p1) {
  std::scoped_lock lk(c.m);
  if (c.v.empty()) {
    c.v.push_back(Poly::constant(1));
    c.v.push_back(p1);
  }
  const Poly two_x({0, 2});
  while (c.v.size() <= n) {
    const std::size_t m = c.v.size();
    c.v.push_back(two_x * c.v[m - 1] - c.v[m - 2]);
  }
  return c.v[n];
}

}  // namespace detail

/// T_n: T_0 = 1, T_1 = x, T_n = 2x T_{n-1} - T_{n-2}.
inline Poly chebyshev_t(std::size_t n) {
  return detail::chebyshev_from_recurrence(
      detail::family_cache<detail::ChebyshevTTag, Poly>(), n, Poly::x());
}

/// U_n: same recurrence with U_0 = 1, U_1 = 2x.
inline Poly chebyshev_u(std::size_t n) {
  return detail::chebyshev_from_recurrence(
      detail::family_cache<detail::ChebyshevUTag, Poly>(), n, Poly({0, 2}));
}

/// Gegenbauer C_n^(lam) for integer order lam >= 1:
///   C_0 = 1, C_1 = 2 lam x, n C_n = 2x(n+lam-1) C_{n-1} - (n+2 lam-2) C_{n-2}.
/// C_n^(1) = U_n.
inline Poly gegenbauer(std::size_t n, long lam) {
  if (lam < 1) throw std::invalid_argument("gegenbauer order must be a positive integer");
  struct GegenbauerCache {
    std::mutex m;
    std::map<long, std::vector<Poly>> by_order;
  };
  static GegenbauerCache cache;
  std::scoped_lock lk(cache.m);
  auto& v = cache.by_order[lam];
  if (v.empty()) {
    v.push_back(Poly::constant(1));
    v.push_back(Poly({0, Rational(2 * lam)}));
  }
  while (v.size() <= n) {
    const long m = static_cast<long>(v.size());
    Poly p = Poly({0, Rational(2 * (m + lam - 1))}) * v[m - 1] -
             Rational(m + 2 * lam - 2) * v[m - 2];
    v.push_back(p / Rational(m));
  }
  return v[n];
}

}  // namespace zagier

#endif  // ZAGIER_CLASSICAL_HPP
