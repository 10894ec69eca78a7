#ifndef ZAGIER_POLYNOMIAL_HPP
#define ZAGIER_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "zagier/rational.hpp"

namespace zagier {

/// Dense univariate polynomial over Rational, coefficient i = coefficient of
/// x^i. The zero polynomial is the empty list; otherwise the stored leading
/// coefficient is nonzero. Degree of the zero polynomial is reported as
/// nullopt rather than -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Rational& a) { return Poly({a}); }
  static Poly x() { return Poly({0, 1}); }
  static Poly monomial(std::size_t k, const Rational& a = 1) {
    std::vector<Rational> c(k + 1);
    c[k] = a;
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  std::size_t size() const { return c_.size(); }

  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const {
    Rational acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(d));
  }

  /// p(q(x)), by Horner over polynomials. Composing with x + a is the shift.
  Poly compose(const Poly& inner) const {
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly::constant(c_[i]);
    return acc;
  }

  Poly shifted(const Rational& a) const { return compose(Poly({a, 1})); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(c));
  }
  Poly operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Rational& s) {
    std::vector<Rational> c(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i] * s;
    return Poly(std::move(c));
  }
  friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }
  friend Poly operator/(const Poly& a, const Rational& s) {
    if (s.is_zero()) throw DivisionByZero("polynomial divided by zero scalar");
    std::vector<Rational> c(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i] / s;
    return Poly(std::move(c));
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// "[c0, c1, ...]", low degree first.
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ", ";
      s += c_[i].str();
    }
    return s + "]";
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace zagier

#endif  // ZAGIER_POLYNOMIAL_HPP
