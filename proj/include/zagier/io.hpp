#ifndef ZAGIER_IO_HPP
#define ZAGIER_IO_HPP

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zagier/periodicity.hpp"

namespace zagier {

using Json = nlohmann::json;

/// One deterministic unit of CLI output. Rationals serialize in lowest terms
/// with positive denominator; polynomials as coefficient arrays, low degree
/// first, so coefficient index = array index.
struct OutputRecord {
  std::string kind;  // value | polynomial | classification | report
  Json payload;
  Json metadata;

  Json to_json() const {
    return Json{{"kind", kind}, {"payload", payload}, {"metadata", metadata}};
  }
};

inline Json poly_to_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

inline Json classification_to_json(const SequenceClassification& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["n_max_tested"] = c.n_max_tested;
  switch (c.verdict) {
    case Verdict::Periodic: {
      j["period"] = c.period;
      Json cyc = Json::array();
      for (const auto& v : c.cycle) cyc.push_back(v.str());
      j["cycle"] = cyc;
      break;
    }
    case Verdict::DriftPeriodic: {
      j["period"] = c.period;
      j["slope"] = c.slope.str();
      Json cyc = Json::array();
      for (const auto& v : c.cycle) cyc.push_back(v.str());
      j["cycle"] = cyc;
      break;
    }
    case Verdict::Unbounded:
      j["witness_index"] = c.witness_index;
      j["witness_value"] = c.witness_value.str();
      break;
    default:
      break;
  }
  return j;
}

/// CSV: UTF-8, comma separated, header row. Values here never contain commas
/// or quotes ("p/q" rationals, plain numbers), so no escaping is needed.
inline void write_csv(std::ostream& os, const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) os << ',';
    os << header[i];
  }
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << row[i];
    }
    os << '\n';
  }
}

}  // namespace zagier

#endif  // ZAGIER_IO_HPP
