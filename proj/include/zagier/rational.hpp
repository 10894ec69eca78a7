#ifndef ZAGIER_RATIONAL_HPP
#define ZAGIER_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <string>

#include "zagier/errors.hpp"

namespace zagier {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in canonical form: lowest terms,
/// positive denominator, zero stored as 0/1. Canonical form makes structural
/// equality coincide with mathematical equality.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit on purpose
  Rational(int n) : q_(static_cast<long>(n)) {}
  Rational(const Integer& n) : q_(n) {}

  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.q_ == 0) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.q_ = -q_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational abs() const { Rational r; r.q_ = ::abs(q_); return r; }

  double to_double() const { return q_.get_d(); }
  long double to_long_double() const {
    // split to keep precision beyond double for moderate operands
    return static_cast<long double>(mpf_class(q_.get_num(), 256).get_d()) /
           static_cast<long double>(mpf_class(q_.get_den(), 256).get_d());
  }

  std::string str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  /// Parses "p" or "p/q" (optional leading minus). Throws std::invalid_argument
  /// on malformed input, DivisionByZero on a zero denominator.
  static Rational parse(const std::string& s);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class q_;
};

inline Rational pow(const Rational& base, unsigned long e) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.numerator().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.denominator().get_mpz_t(), e);
  return Rational(n, d);
}

inline Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// C(n, k); zero for k < 0 or k > n, as needed by the inversion formulas.
inline Integer binom(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

inline Rational Rational::parse(const std::string& s) {
  auto bad = [&] { throw std::invalid_argument("malformed rational: '" + s + "'"); };
  auto is_int = [&](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int(s)) bad();
    return Rational(Integer(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) bad();
  return Rational(Integer(num), Integer(den));
}

}  // namespace zagier

#endif  // ZAGIER_RATIONAL_HPP
