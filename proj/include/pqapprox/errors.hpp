#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pqapprox {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A (p,q)-series did not meet its tolerance within the term budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double partial_sum, std::size_t terms)
      : std::runtime_error(what), partial_sum_(partial_sum), terms_(terms) {}

  double partial_sum() const noexcept { return partial_sum_; }
  std::size_t terms() const noexcept { return terms_; }

 private:
  double partial_sum_;
  std::size_t terms_;
};

/// A function was asked for a value outside its declared domain.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double at)
      : std::runtime_error(what), at_(at) {}

  double at() const noexcept { return at_; }

 private:
  double at_;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class RegistryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operator evaluation failed inside an experiment run; carries the offending point.
class ExperimentError : public std::runtime_error {
 public:
  ExperimentError(const std::string& what, int n, double x)
      : std::runtime_error(what), n_(n), x_(x) {}

  int n() const noexcept { return n_; }
  double x() const noexcept { return x_; }

 private:
  int n_;
  double x_;
};

}  // namespace pqapprox
