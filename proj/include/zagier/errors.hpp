#ifndef ZAGIER_ERRORS_HPP
#define ZAGIER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zagier {

struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& what = "division by zero")
      : std::domain_error(what) {}
};

struct NotExpandable : std::domain_error {
  explicit NotExpandable(const std::string& what = "denominator vanishes at the origin")
      : std::domain_error(what) {}
};

// Starred families are defined for n >= 1 only (the r = 0 term carries 1/n).
struct UndefinedIndex : std::domain_error {
  explicit UndefinedIndex(const std::string& what = "index out of the defined range")
      : std::domain_error(what) {}
};

struct IndexError : std::out_of_range {
  explicit IndexError(const std::string& what = "index out of range")
      : std::out_of_range(what) {}
};

struct InvalidPrime : std::invalid_argument {
  explicit InvalidPrime(const std::string& what = "argument is not prime")
      : std::invalid_argument(what) {}
};

struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what = "argument outside function domain")
      : std::domain_error(what) {}
};

struct InsufficientData : std::invalid_argument {
  explicit InsufficientData(const std::string& what = "not enough data")
      : std::invalid_argument(what) {}
};

}  // namespace zagier

#endif  // ZAGIER_ERRORS_HPP
