#ifndef ZAGIER_CLI_HPP
#define ZAGIER_CLI_HPP

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zagier/io.hpp"
#include "zagier/verify.hpp"

// Command-line surface: compute | verify | classify | table.
// Exit codes: 0 success/pass, 1 identity violated, 2 usage error, 3 IO error.

namespace zagier {
namespace cli {

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct OutputTarget {
  std::ostream* os;
  std::unique_ptr<std::ofstream> file;  // owns the stream when --out was given
};

inline bool open_target(const std::string& out_path, std::ostream& fallback,
                        std::ostream& err, OutputTarget& target) {
  if (out_path.empty()) {
    target.os = &fallback;
    return true;
  }
  target.file = std::make_unique<std::ofstream>(out_path);
  if (!*target.file) {
    err << "error: cannot open '" << out_path << "' for writing\n";
    return false;
  }
  target.os = target.file.get();
  return true;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation, verification and classification for the "
               "Zagier/modified-Bernoulli polynomial families"};
  app.require_subcommand(1);
  app.fallthrough();  // global --format/--out may follow the subcommand

  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", out_path, "Write output to a file instead of stdout");

  // ---- compute ----
  auto* compute = app.add_subcommand("compute", "Compute a family member");
  std::string family;
  long comp_n = 0, comp_lam = 0;
  std::string at_str;
  bool as_poly = false;
  compute->add_option("family", family, "Family name")
      ->required()
      ->check(CLI::IsMember({"bernoulli", "euler", "chebyshev_t", "chebyshev_u",
                             "gegenbauer", "zagier", "mod_euler"}));
  compute->add_option("n", comp_n, "Index")->required();
  compute->add_option("--at", at_str, "Evaluate the polynomial at a rational point (p/q)");
  compute->add_option("--lam", comp_lam, "Gegenbauer order (positive integer)");
  compute->add_flag("--poly", as_poly, "Print the polynomial for number-valued families");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "Run a named identity suite");
  std::string theorem_id;
  long nmax_opt = -1;
  verify->add_option("id", theorem_id, "Identity suite id (or 'list')")->required();
  verify->add_option("--nmax", nmax_opt, "Depth override");

  // ---- classify ----
  auto* classify = app.add_subcommand("classify", "Classify a special-value sequence");
  long x2 = 0;
  bool even = false;
  long cls_nmax = 60;
  classify->add_option("--x2", x2, "Twice the evaluation point (2x, so half-integers stay exact)")
      ->required();
  classify->add_flag("--even", even, "Classify A*_{2n}(u) with u = x2/2 instead of B*_{2n+1}(x)");
  classify->add_option("--nmax", cls_nmax, "Window length (>= 36)");

  // ---- table ----
  auto* table = app.add_subcommand("table", "Emit a data table");
  std::string which;
  long tbl_nmax = 30;
  table->add_option("which", which, "Table name")
      ->required()
      ->check(CLI::IsMember({"alpha", "coeff_stats", "roots", "gf_coeffs"}));
  table->add_option("--nmax", tbl_nmax, "Depth");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help and friends
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  detail::OutputTarget target;
  if (!detail::open_target(out_path, out, err, target)) return 3;
  std::ostream& os = *target.os;

  try {
    if (*compute) {
      if (comp_n < 0) {
        err << "error: index must be nonnegative\n";
        return 2;
      }
      const auto n = static_cast<std::size_t>(comp_n);
      const bool number_family =
          family == "bernoulli" || family == "euler" || family == "mod_euler";

      Poly p;
      if (family == "bernoulli") p = bernoulli_poly(n);
      else if (family == "euler") p = euler_poly(n);
      else if (family == "mod_euler") p = modified_euler_poly(n);
      else if (family == "zagier") p = zagier_poly(n);
      else if (family == "chebyshev_t") p = chebyshev_t(n);
      else if (family == "chebyshev_u") p = chebyshev_u(n);
      else {
        if (comp_lam < 1) {
          err << "error: gegenbauer requires --lam >= 1\n";
          return 2;
        }
        p = gegenbauer(n, comp_lam);
      }

      OutputRecord rec;
      rec.metadata = Json{{"command", "compute"},
                          {"parameters", Json{{"family", family}, {"n", comp_n}}}};
      if (!at_str.empty()) {
        const Rational x = Rational::parse(at_str);
        rec.kind = "value";
        rec.payload = Json{{"value", p(x).str()}};
        rec.metadata["parameters"]["at"] = at_str;
        if (format == "json") os << rec.to_json().dump() << "\n";
        else os << p(x).str() << "\n";
      } else if (number_family && !as_poly) {
        Rational v;
        if (family == "bernoulli") v = bernoulli_number(n);
        else if (family == "euler") v = euler_number(n);
        else v = modified_euler_number(n);
        rec.kind = "value";
        rec.payload = Json{{"value", v.str()}};
        if (format == "json") os << rec.to_json().dump() << "\n";
        else os << v.str() << "\n";
      } else {
        rec.kind = "polynomial";
        rec.payload = Json{{"coeffs", poly_to_json(p)}};
        if (format == "json") os << rec.to_json().dump() << "\n";
        else os << "coeffs: " << p.str() << "\n";
      }
      return 0;
    }

    if (*verify) {
      const auto& suites = verification_suites();
      if (theorem_id == "list") {
        for (const auto& [id, suite] : suites)
          os << id << "  (default nmax " << suite.default_n_max << "): "
             << suite.description << "\n";
        return 0;
      }
      auto it = suites.find(theorem_id);
      if (it == suites.end()) {
        err << "error: unknown identity suite '" << theorem_id << "' (try 'verify list')\n";
        return 2;
      }
      const std::size_t nm =
          nmax_opt > 0 ? static_cast<std::size_t>(nmax_opt) : it->second.default_n_max;
      const VerifyResult r = it->second.run(nm);
      if (format == "json") {
        OutputRecord rec;
        rec.kind = "report";
        rec.payload = Json{{"id", theorem_id},
                           {"pass", r.pass},
                           {"counterexample", r.counterexample}};
        rec.metadata = Json{{"command", "verify"}, {"n_max_tested", nm}};
        os << rec.to_json().dump() << "\n";
      } else if (r.pass) {
        os << "verify " << theorem_id << ": PASS (" << it->second.description
           << ", nmax=" << nm << ")\n";
      } else {
        os << "verify " << theorem_id << ": FAIL at " << r.counterexample << "\n";
      }
      return r.pass ? 0 : 1;
    }

    if (*classify) {
      if (cls_nmax < 36) {
        err << "error: --nmax must be at least 36\n";
        return 2;
      }
      SequenceClassification c;
      OutputRecord rec;
      rec.kind = "classification";
      if (even) {
        if (x2 % 2 != 0) {
          err << "error: --even classification takes integer u; --x2 must be even\n";
          return 2;
        }
        c = classify_even_zagier(x2 / 2, static_cast<std::size_t>(cls_nmax));
        rec.metadata = Json{{"command", "classify"},
                            {"parameters", Json{{"u", x2 / 2}, {"even", true}}}};
      } else {
        c = classify_odd_zagier({x2}, static_cast<std::size_t>(cls_nmax));
        rec.metadata = Json{{"command", "classify"},
                            {"parameters", Json{{"x2", x2}, {"even", false}}}};
      }
      rec.payload = classification_to_json(c);
      os << rec.to_json().dump() << "\n";
      return 0;
    }

    if (*table) {
      if (tbl_nmax < 1) {
        err << "error: --nmax must be positive\n";
        return 2;
      }
      const auto nm = static_cast<std::size_t>(tbl_nmax);
      std::vector<std::string> header;
      std::vector<std::vector<std::string>> rows;

      if (which == "alpha") {
        header = {"n", "alpha", "alpha_over_4"};
        for (std::size_t n = 1; n <= nm; ++n) {
          const auto prof = denominator_profile(n);
          rows.push_back({std::to_string(n), prof.alpha.get_str(),
                          prof.alpha_over_4 ? prof.alpha_over_4->get_str() : ""});
        }
      } else if (which == "coeff_stats") {
        header = {"n", "integer_count", "positive_excess", "logconcave_depth"};
        for (std::size_t n = 1; n <= nm; ++n) {
          const auto st = coefficient_stats(n);
          rows.push_back({std::to_string(n), std::to_string(st.integer_count),
                          st.positive_excess.str(),
                          st.logconcave_depth ? std::to_string(*st.logconcave_depth)
                                              : "exceeded_budget"});
        }
      } else if (which == "roots") {
        header = {"n", "re", "im", "residual"};
        for (std::size_t n = 1; n <= nm; ++n)
          for (const auto& r : roots_numeric(n))
            rows.push_back({std::to_string(n), detail::format_double(r.root.real()),
                            detail::format_double(r.root.imag()),
                            detail::format_double(r.residual)});
      } else {  // gf_coeffs
        const auto coeffs = series_expand(gf_odd_certificate(), nm + 1);
        header = {"n", "coeff"};
        for (std::size_t n = 0; n <= nm; ++n)
          rows.push_back({std::to_string(n), coeffs[n].str()});
      }

      if (format == "json") {
        Json arr = Json::array();
        for (const auto& row : rows) {
          OutputRecord rec;
          rec.kind = "report";
          for (std::size_t i = 0; i < header.size(); ++i) rec.payload[header[i]] = row[i];
          rec.metadata = Json{{"command", "table"}, {"parameters", Json{{"which", which}}},
                              {"n_max_tested", nm}};
          arr.push_back(rec.to_json());
        }
        os << arr.dump() << "\n";
      } else {
        write_csv(os, header, rows);
      }
      if (!out_path.empty() && !os.good()) {
        err << "error: write to '" << out_path << "' failed\n";
        return 3;
      }
      return 0;
    }
  } catch (const UndefinedIndex& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const IndexError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InsufficientData& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cli
}  // namespace zagier

#endif  // ZAGIER_CLI_HPP
