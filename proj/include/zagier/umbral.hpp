#ifndef ZAGIER_UMBRAL_HPP
#define ZAGIER_UMBRAL_HPP

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zagier/classical.hpp"

// Umbrae as moment sequences with a linear evaluation functional. Every
// evaluation used here reduces to a finite linear combination of moments, so
// a moment table is the whole story; no symbolic rewriting is involved.

namespace zagier {

/// A named moment sequence, lazily materialized and memoized. Copies share
/// the memo table.
class Umbra {
 public:
  Umbra(std::string name, std::function<Rational(std::size_t)> moments)
      : s_(std::make_shared<State>(std::move(name), std::move(moments))) {}

  const std::string& name() const { return s_->name; }

  Rational moment(std::size_t k) const {
    std::scoped_lock lk(s_->m);
    if (s_->memo.size() <= k) s_->memo.resize(k + 1);
    if (!s_->memo[k]) s_->memo[k] = s_->gen(k);
    return *s_->memo[k];
  }

 private:
  struct State {
    State(std::string n, std::function<Rational(std::size_t)> g)
        : name(std::move(n)), gen(std::move(g)) {}
    std::string name;
    std::function<Rational(std::size_t)> gen;
    std::mutex m;
    std::vector<std::optional<Rational>> memo;
  };
  std::shared_ptr<State> s_;
};

/// The Bernoulli umbra: moment(n) = B_n.
inline const Umbra& bernoulli_umbra() {
  static const Umbra u("B", [](std::size_t k) { return bernoulli_number(k); });
  return u;
}

/// The Euler umbra: moment(n) = E_n(0), so that x^n evaluates to E_n(x).
inline const Umbra& euler_umbra() {
  static const Umbra u("E", [](std::size_t k) { return euler_poly(k)(0); });
  return u;
}

/// Sum of independent umbrae: moments by binomial convolution.
inline Umbra convolve(const Umbra& a, const Umbra& b) {
  return Umbra(a.name() + "+" + b.name(), [a, b](std::size_t j) {
    Rational s;
    for (std::size_t i = 0; i <= j; ++i)
      s += Rational(binom(j, static_cast<long>(i))) * a.moment(i) * b.moment(j - i);
    return s;
  });
}

/// eval{p(u)} = sum_k coeff_k(p) moment(k).
inline Rational umbral_eval(const Poly& p, const Umbra& u) {
  Rational s;
  for (std::size_t k = 0; k < p.size(); ++k) s += p.coeff(k) * u.moment(k);
  return s;
}

/// x |-> eval{p(x + u)} as a polynomial in x: expand (x+u)^m binomially and
/// apply moments to the powers of u.
inline Poly umbral_eval_poly(const Poly& p, const Umbra& u) {
  if (p.is_zero()) return Poly();
  std::vector<Rational> out(p.size());
  for (std::size_t m = 0; m < p.size(); ++m) {
    const Rational cm = p.coeff(m);
    if (cm.is_zero()) continue;
    for (std::size_t j = 0; j <= m; ++j)
      out[j] += cm * Rational(binom(m, static_cast<long>(j))) * u.moment(m - j);
  }
  return Poly(std::move(out));
}

/// Even moments of the random variable behind the Bernoulli umbra:
/// E[(i L_B / 2)^{2k}] = B_{2k}(1/2) / 4^k. Odd moments vanish.
inline Rational lb_even_moment(std::size_t k) {
  return bernoulli_poly(2 * k)(Rational(1, 2)) / pow(Rational(4), k);
}

inline Rational lb_moment(std::size_t j) {
  if (j % 2 == 1) return 0;
  return lb_even_moment(j / 2);
}

/// A polynomial sequence indexed by degree; polys[n] has degree <= n.
struct PolySequence {
  std::vector<Poly> polys;
};

/// Umbral composition (P o Q)_n(x) = sum_k p_{k,n} Q_k(x) with p_{k,n} the
/// x^k coefficient of P_n.
inline Poly umbral_compose(const PolySequence& p, const PolySequence& q, std::size_t n) {
  if (p.polys.size() <= n || q.polys.size() <= n)
    throw IndexError("umbral_compose: sequences not materialized up to n");
  const Poly& pn = p.polys[n];
  Poly out;
  for (std::size_t k = 0; k < pn.size(); ++k) {
    const Rational c = pn.coeff(k);
    if (!c.is_zero()) out += c * q.polys[k];
  }
  return out;
}

}  // namespace zagier

#endif  // ZAGIER_UMBRAL_HPP
