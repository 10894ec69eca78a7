#ifndef ZAGIER_PERIODICITY_HPP
#define ZAGIER_PERIODICITY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zagier/rational_function.hpp"
#include "zagier/zagier.hpp"

// Empirical classification of the special-value sequences B*_{2n+1}(x) and
// A*_{2n}(u) = B*_{2n}(-1-u) - B*_{2n}(-1) over a finite window. A verdict
// records the window size (n_max_tested); it is a finite observation, not a
// proof.

namespace zagier {

/// x with 2x integral; the only values for which the odd-index generating
/// function can be a rational function of z.
struct HalfInteger {
  long twice = 0;
  Rational value() const { return Rational(twice, 2); }
};

enum class Verdict { IdenticallyZero, Periodic, DriftPeriodic, Unbounded, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::IdenticallyZero: return "IdenticallyZero";
    case Verdict::Periodic: return "Periodic";
    case Verdict::DriftPeriodic: return "DriftPeriodic";
    case Verdict::Unbounded: return "Unbounded";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct SequenceClassification {
  Verdict verdict = Verdict::Inconclusive;
  std::size_t period = 0;          // Periodic / DriftPeriodic
  std::vector<Rational> cycle;     // Periodic: raw; DriftPeriodic: drift-removed
  Rational slope;                  // DriftPeriodic
  std::size_t witness_index = 0;   // Unbounded (window offset)
  Rational witness_value;          // Unbounded
  std::size_t n_max_tested = 0;
};

/// Smallest p <= max_period with values[i+p] == values[i] throughout, with
/// the cycle; nullopt if none. Requires at least 3*max_period values.
inline std::optional<std::pair<std::size_t, std::vector<Rational>>> detect_period(
    const std::vector<Rational>& values, std::size_t max_period) {
  if (values.size() < 3 * max_period)
    throw InsufficientData("detect_period: need at least 3*max_period values");
  for (std::size_t p = 1; p <= max_period; ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < values.size(); ++i)
      if (values[i + p] != values[i]) { ok = false; break; }
    if (ok)
      return std::make_pair(p, std::vector<Rational>(values.begin(), values.begin() + p));
  }
  return std::nullopt;
}

/// Core classifier. `first_index` is the mathematical index of values[0]
/// (0 for B*_{2n+1}, 1 for A*_{2n}); drift removal subtracts slope times the
/// true index, which is the convention the expected cycles are stated in.
///
/// Order of tests: identically zero; exact period; constant first difference
/// at lag p (slope = d/p, the period-averaged first difference); growth
/// beyond 100*max(1,|a_0|)*(3/2)^i; otherwise inconclusive.
inline SequenceClassification classify_values(const std::vector<Rational>& values,
                                              long first_index,
                                              std::size_t max_period) {
  SequenceClassification out;
  out.n_max_tested = values.size();

  bool all_zero = true;
  for (const auto& v : values)
    if (!v.is_zero()) { all_zero = false; break; }
  if (all_zero) {
    out.verdict = Verdict::IdenticallyZero;
    return out;
  }

  for (std::size_t p = 1; p <= max_period && p < values.size(); ++p) {
    const Rational d = values[p] - values[0];
    bool constant = true;
    for (std::size_t i = 0; i + p < values.size(); ++i)
      if (values[i + p] - values[i] != d) { constant = false; break; }
    if (!constant) continue;
    if (d.is_zero()) {
      out.verdict = Verdict::Periodic;
      out.period = p;
      out.cycle.assign(values.begin(), values.begin() + p);
      return out;
    }
    out.verdict = Verdict::DriftPeriodic;
    out.period = p;
    out.slope = d / Rational(static_cast<long>(p));
    for (std::size_t i = 0; i < p; ++i)
      out.cycle.push_back(values[i] - out.slope * Rational(first_index + static_cast<long>(i)));
    return out;
  }

  const Rational base = Rational(100) * std::max(Rational(1), values[0].abs());
  Rational growth = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].abs() > base * growth) {
      out.verdict = Verdict::Unbounded;
      out.witness_index = i;
      out.witness_value = values[i];
      return out;
    }
    growth *= Rational(3, 2);
  }

  out.verdict = Verdict::Inconclusive;
  return out;
}

/// [B*_1(x), B*_3(x), ..., B*_{2 n_max - 1}(x)], exact.
inline std::vector<Rational> odd_zagier_sequence(HalfInteger x, std::size_t n_max) {
  if (n_max < 1) throw InsufficientData("odd_zagier_sequence: n_max >= 1");
  const Rational xv = x.value();
  std::vector<Rational> out;
  out.reserve(n_max);
  for (std::size_t n = 0; n < n_max; ++n) out.push_back(zagier_poly(2 * n + 1)(xv));
  return out;
}

/// [A*_2(u), A*_4(u), ...] with A*_{2n}(u) = B*_{2n}(-1-u) - B*_{2n}(-1).
inline std::vector<Rational> even_a_sequence(long u, std::size_t n_max) {
  if (n_max < 1) throw InsufficientData("even_a_sequence: n_max >= 1");
  std::vector<Rational> out;
  out.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Poly& p = zagier_poly(2 * n);
    out.push_back(p(Rational(-1 - u)) - p(Rational(-1)));
  }
  return out;
}

inline SequenceClassification classify_odd_zagier(HalfInteger x, std::size_t n_max) {
  if (n_max < 36) throw InsufficientData("classify_odd_zagier: n_max >= 36");
  return classify_values(odd_zagier_sequence(x, n_max), 0, n_max / 3);
}

inline SequenceClassification classify_even_zagier(long u, std::size_t n_max) {
  if (n_max < 36) throw InsufficientData("classify_even_zagier: n_max >= 36");
  return classify_values(even_a_sequence(u, n_max), 1, n_max / 3);
}

/// B*_{2n+1} = (-1)^n/4 + U_{2n}(1/2)/2 with U_{2n}(1/2) = 1, 0, -1 for
/// n = 0, 1, 2 mod 3; the period-6 closed form.
inline Rational odd_zagier_closed_form(std::size_t n) {
  static const int u3[3] = {1, 0, -1};
  const Rational sign = (n % 2 == 0) ? 1 : -1;
  return sign * Rational(1, 4) + Rational(u3[n % 3], 2);
}

/// Exact generating-function certificate for the odd Zagier numbers:
/// G(z) = (3z^11 - z^9 - z^7 + z^5 + z^3 - 3z) / (4(z^12 - 1)).
inline RationalFunction gf_odd_certificate() {
  std::vector<Rational> num(12), den(13);
  num[1] = -3; num[3] = 1; num[5] = 1; num[7] = -1; num[9] = -1; num[11] = 3;
  den[0] = -4; den[12] = 4;
  return RationalFunction(Poly(std::move(num)), Poly(std::move(den)));
}

/// B*_{2n+1}(-k) = -U_{2n}(0)/4 - (1/2) sum_{j=1..k-2} U_{2n}(j/2), k >= 3.
inline Rational special_value_formula(long k, std::size_t n) {
  if (k < 3) throw IndexError("special_value_formula: k >= 3");
  const Poly u = chebyshev_u(2 * n);
  Rational s = -u(Rational(0)) / Rational(4);
  for (long j = 1; j <= k - 2; ++j) s -= u(Rational(j, 2)) / Rational(2);
  return s;
}

/// B*_{2n+1}(k + 1/2) = (1/2) sum_{r=0..k+1} U_{2n}((2r+1)/4), k >= -1.
inline Rational half_value_formula(long k, std::size_t n) {
  if (k < -1) throw IndexError("half_value_formula: k >= -1");
  const Poly u = chebyshev_u(2 * n);
  Rational s;
  for (long r = 0; r <= k + 1; ++r) s += u(Rational(2 * r + 1, 4));
  return s / Rational(2);
}

/// The 3-periodic character 1, -1, 0 for n = 1, 2, 0 mod 3; this is
/// U_{2n-1}(1/2) and the Jacobi symbol (-3/n).
inline int jacobi_minus3(std::size_t n) {
  if (n == 0) throw IndexError("jacobi_minus3: n >= 1");
  static const int table[3] = {0, 1, -1};
  return table[n % 3];
}

}  // namespace zagier

#endif  // ZAGIER_PERIODICITY_HPP
