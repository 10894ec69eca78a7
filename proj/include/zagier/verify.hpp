#ifndef ZAGIER_VERIFY_HPP
#define ZAGIER_VERIFY_HPP

#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "zagier/explorer.hpp"
#include "zagier/periodicity.hpp"

// Named identity suites behind the `verify` CLI subcommand. Each suite runs
// an exact check up to n_max and reports the first counterexample on failure.

namespace zagier {

struct VerifyResult {
  bool pass = true;
  std::string counterexample;  // empty on pass
};

struct VerifySuite {
  std::string description;
  std::size_t default_n_max;
  std::function<VerifyResult(std::size_t)> run;
};

namespace detail {

inline VerifyResult fail_at(const std::string& what) {
  return VerifyResult{false, what};
}

template <typename F>
VerifyResult check_range(std::size_t lo, std::size_t hi, F&& body) {
  for (std::size_t n = lo; n <= hi; ++n) {
    std::string why;
    if (!body(n, why)) {
      std::ostringstream os;
      os << "n=" << n << ": " << why;
      return fail_at(os.str());
    }
  }
  return {};
}

inline bool poly_equal(const Poly& a, const Poly& b, std::string& why) {
  if (a == b) return true;
  why = "lhs " + a.str() + " != rhs " + b.str();
  return false;
}

inline bool rat_equal(const Rational& a, const Rational& b, std::string& why) {
  if (a == b) return true;
  why = "lhs " + a.str() + " != rhs " + b.str();
  return false;
}

}  // namespace detail

inline const std::map<std::string, VerifySuite>& verification_suites() {
  static const std::map<std::string, VerifySuite> suites = [] {
    using detail::check_range;
    using detail::poly_equal;
    using detail::rat_equal;
    std::map<std::string, VerifySuite> m;

    m["period6"] = {"odd Zagier numbers repeat the 6-cycle {3/4,-1/4,-1/4,1/4,1/4,-3/4}", 60,
                    [](std::size_t nm) {
                      static const Rational cyc[6] = {{3, 4}, {-1, 4}, {-1, 4},
                                                      {1, 4},  {1, 4},  {-3, 4}};
                      return check_range(0, nm - 1, [&](std::size_t n, std::string& why) {
                        return rat_equal(zagier_number(2 * n + 1), cyc[n % 6], why);
                      });
                    }};

    m["gf_odd"] = {"series of the rational certificate matches the odd Zagier numbers", 60,
                   [](std::size_t nm) {
                     const auto coeffs = series_expand(gf_odd_certificate(), nm + 1);
                     return check_range(1, nm, [&](std::size_t i, std::string& why) {
                       const Rational expect = (i % 2 == 1) ? zagier_number(i) : Rational(0);
                       return rat_equal(coeffs[i], expect, why);
                     });
                   }};

    m["inversion"] = {"Bernoulli numbers recovered from Zagier numbers", 40,
                      [](std::size_t nm) {
                        return check_range(1, nm, [&](std::size_t n, std::string& why) {
                          return rat_equal(bernoulli_from_zagier(n), bernoulli_number(n), why);
                        });
                      }};

    m["inversion_poly"] = {"Bernoulli polynomials recovered from Zagier polynomials", 30,
                           [](std::size_t nm) {
                             return check_range(1, nm, [&](std::size_t n, std::string& why) {
                               return poly_equal(bernoulli_poly_from_zagier(n),
                                                 bernoulli_poly(n), why);
                             });
                           }};

    m["derivative"] = {"derivative of B*_n equals the lower-order Zagier sum", 40,
                       [](std::size_t nm) {
                         return check_range(1, nm, [&](std::size_t n, std::string& why) {
                           return poly_equal(zagier_poly(n).derivative(),
                                             zagier_derivative_rhs(n), why);
                         });
                       }};

    m["binomial_s1"] = {"alternating binomial sum equals -floor(n/2)", 40,
                        [](std::size_t nm) {
                          return check_range(1, nm, [&](std::size_t n, std::string& why) {
                            return rat_equal(binomial_sum_S1(n),
                                             Rational(-static_cast<long>(n / 2)), why);
                          });
                        }};

    m["binomial_u"] = {"u(n,k) matches its parity case table", 30,
                       [](std::size_t nm) {
                         return check_range(2, nm, [&](std::size_t n, std::string& why) {
                           for (std::size_t k = 1; k < n; ++k) {
                             long expect;
                             if (n % 2 == 0)
                               expect = (k % 2 == 1) ? -static_cast<long>(k) : 0;
                             else
                               expect = (k % 2 == 0) ? static_cast<long>(k) : 0;
                             if (binomial_sum_u(n, k) != Rational(expect)) {
                               why = "k=" + std::to_string(k) + " value " +
                                     binomial_sum_u(n, k).str();
                               return false;
                             }
                           }
                           return true;
                         });
                       }};

    m["cheb_rep"] = {"Chebyshev representations rebuild B*_{2n} and B*_{2n+1}", 15,
                     [](std::size_t nm) {
                       auto r = check_range(1, nm, [&](std::size_t n, std::string& why) {
                         return poly_equal(zagier_even_cheb_rep(n), zagier_poly(2 * n), why);
                       });
                       if (!r.pass) return r;
                       return check_range(0, nm, [&](std::size_t n, std::string& why) {
                         return poly_equal(zagier_odd_cheb_rep(n), zagier_poly(2 * n + 1), why);
                       });
                     }};

    m["nice_two"] = {"alternating even sum equals 2 B*_{2n}(x-2)", 15,
                     [](std::size_t nm) {
                       return check_range(1, nm, [&](std::size_t n, std::string& why) {
                         return poly_equal(zagier_even_alt_sum(n),
                                           zagier_poly(2 * n).shifted(-2) * Rational(2), why);
                       });
                     }};

    m["difference"] = {"Chebyshev telescoping of B*_n(x) - B*_n(x-k), k <= 4", 20,
                       [](std::size_t nm) {
                         return check_range(1, nm, [&](std::size_t n, std::string& why) {
                           for (std::size_t k = 1; k <= 4; ++k) {
                             const Poly lhs = zagier_difference(n, k);
                             const Poly rhs = zagier_poly(n) -
                                              zagier_poly(n).shifted(-static_cast<long>(k));
                             if (lhs != rhs) {
                               why = "k=" + std::to_string(k);
                               return false;
                             }
                           }
                           return true;
                         });
                       }};

    m["symmetry"] = {"B*_n(-x-3) = (-1)^n B*_n(x)", 40,
                     [](std::size_t nm) {
                       return check_range(1, nm, [&](std::size_t n, std::string& why) {
                         if (zagier_symmetry_defect(n).is_zero()) return true;
                         why = "defect " + zagier_symmetry_defect(n).str();
                         return false;
                       });
                     }};

    m["euler_symmetry"] = {"E*_n(-x-3) = (-1)^n E*_n(x)", 30,
                           [](std::size_t nm) {
                             return check_range(1, nm, [&](std::size_t n, std::string& why) {
                               if (modified_euler_symmetry_defect(n).is_zero()) return true;
                               why = "defect " + modified_euler_symmetry_defect(n).str();
                               return false;
                             });
                           }};

    m["jacobi"] = {"2 B*_{2n} = (-3/n) + alternating Bernoulli sum", 30,
                   [](std::size_t nm) {
                     return check_range(1, nm, [&](std::size_t n, std::string& why) {
                       Rational rhs = Rational(jacobi_minus3(n));
                       for (std::size_t r = 0; r <= n; ++r) {
                         const Rational sign = ((n + r) % 2 == 0) ? 1 : -1;
                         rhs += sign *
                                Rational(binom(n + r, static_cast<long>(2 * r)),
                                         Integer(n + r)) *
                                bernoulli_number(2 * r);
                       }
                       return rat_equal(Rational(2) * zagier_number(2 * n), rhs, why);
                     });
                   }};

    m["bstar_plus_n"] = {"B*_{2n} + n = B*_{2n}(1)", 30,
                         [](std::size_t nm) {
                           return check_range(1, nm, [&](std::size_t n, std::string& why) {
                             return rat_equal(zagier_number(2 * n) + Rational(static_cast<long>(n)),
                                              zagier_poly(2 * n)(1), why);
                           });
                         }};

    m["half_value"] = {"2 B*_{2n+1}(1/2) = U_{2n}(1/4) + U_{2n}(3/4)", 20,
                       [](std::size_t nm) {
                         return check_range(0, nm, [&](std::size_t n, std::string& why) {
                           const Poly u = chebyshev_u(2 * n);
                           return rat_equal(Rational(2) * zagier_poly(2 * n + 1)(Rational(1, 2)),
                                            u(Rational(1, 4)) + u(Rational(3, 4)), why);
                         });
                       }};

    m["closed_form"] = {"B*_{2n+1} = (-1)^n/4 + U_{2n}(1/2)/2", 60,
                        [](std::size_t nm) {
                          return check_range(0, nm, [&](std::size_t n, std::string& why) {
                            return rat_equal(odd_zagier_closed_form(n),
                                             zagier_number(2 * n + 1), why);
                          });
                        }};

    m["euler_period3"] = {"E*_{2n+1} repeats the 3-cycle {1,-2,1}", 30,
                          [](std::size_t nm) {
                            static const long cyc[3] = {1, -2, 1};
                            return check_range(0, nm, [&](std::size_t n, std::string& why) {
                              return rat_equal(modified_euler_number(2 * n + 1),
                                               Rational(cyc[n % 3]), why);
                            });
                          }};

    m["euler_period12"] = {"E*_{2n}(0) repeats {1,0,-2,3,-2,0} (period 12 in the index)", 36,
                           [](std::size_t nm) {
                             static const long cyc[6] = {1, 0, -2, 3, -2, 0};
                             return check_range(1, nm, [&](std::size_t n, std::string& why) {
                               return rat_equal(modified_euler_poly(2 * n)(0),
                                                Rational(cyc[n % 6]), why);
                             });
                           }};

    m["duplication"] = {"2 B*_n(2x) = (B* o E)_n(2x) + (B* o E)_n(2x+1)", 25,
                        [](std::size_t nm) {
                          return check_range(1, nm, [&](std::size_t n, std::string& why) {
                            if (duplication_defect(n).is_zero()) return true;
                            why = "defect " + duplication_defect(n).str();
                            return false;
                          });
                        }};

    m["gegenbauer_shift"] = {"Gegenbauer expansion equals B*_n(x - 3/2)", 25,
                             [](std::size_t nm) {
                               return check_range(1, nm, [&](std::size_t n, std::string& why) {
                                 return poly_equal(zagier_shifted_gegenbauer(n),
                                                   zagier_poly(n).shifted(Rational(-3, 2)), why);
                               });
                             }};

    m["cheby12"] = {"sum C(n+r,2r) x^r/(n+r) = T_n(x/2+1)/n", 30,
                    [](std::size_t nm) {
                      return check_range(1, nm, [&](std::size_t n, std::string& why) {
                        std::vector<Rational> cs(n + 1);
                        for (std::size_t r = 0; r <= n; ++r)
                          cs[r] = Rational(binom(n + r, static_cast<long>(2 * r)),
                                           Integer(n + r));
                        const Poly lhs(std::move(cs));
                        const Poly rhs = chebyshev_t(n).compose(
                                             Poly({1, Rational(1, 2)})) /
                                         Rational(static_cast<long>(n));
                        return poly_equal(lhs, rhs, why);
                      });
                    }};

    m["alpha_odd"] = {"alpha(2n+1) = 4", 50,
                      [](std::size_t nm) {
                        return check_range(0, nm, [&](std::size_t n, std::string& why) {
                          if (alpha(2 * n + 1) == 4) return true;
                          why = "alpha = " + alpha(2 * n + 1).get_str();
                          return false;
                        });
                      }};

    m["integrality"] = {"4 B*_{2n+1}(j) integral for |j| <= 10", 30,
                        [](std::size_t nm) {
                          const auto rep = integrality_4b(-10, 10, nm);
                          if (rep.all_integral) return VerifyResult{};
                          std::ostringstream os;
                          os << "j=" << rep.failing_j << " n=" << rep.failing_n << " value "
                             << rep.failing_value.str();
                          return detail::fail_at(os.str());
                        }};

    m["structure_sweep"] = {"periodicity verdicts for B*_{2n+1}(k), k in [-8,5]", 60,
                            [](std::size_t nm) {
                              return check_range(0, 13, [&](std::size_t i, std::string& why) {
                                const long k = static_cast<long>(i) - 8;
                                const auto c = classify_odd_zagier({2 * k}, nm);
                                Verdict expect;
                                if (k >= 2 || k <= -5) expect = Verdict::Unbounded;
                                else if (k == -4 || k == 1) expect = Verdict::DriftPeriodic;
                                else expect = Verdict::Periodic;
                                if (c.verdict == expect) return true;
                                why = std::string("k=") + std::to_string(k) + " got " +
                                      to_string(c.verdict) + " want " + to_string(expect);
                                return false;
                              });
                            }};

    return m;
  }();
  return suites;
}

}  // namespace zagier

#endif  // ZAGIER_VERIFY_HPP
