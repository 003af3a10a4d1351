#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace regshannon {

/// Argument outside the mathematical domain of a function (negative Bessel
/// argument, non-finite input, delta outside (0, pi), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A parameter choice violates the hypothesis of the bound it is used with.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature ran out of its subdivision budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate, double error_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

/// Reconstruction needed samples that the SampleSet does not hold.
class OutOfRangeError : public std::out_of_range {
 public:
  OutOfRangeError(const std::string& what, std::vector<std::int64_t> missing)
      : std::out_of_range(what), missing_(std::move(missing)) {}

  const std::vector<std::int64_t>& missing_indices() const noexcept { return missing_; }

 private:
  std::vector<std::int64_t> missing_;
};

/// A sample could not be ingested (non-finite value, malformed CSV row).
class IngestionError : public std::runtime_error {
 public:
  IngestionError(const std::string& what, std::int64_t index)
      : std::runtime_error(what), index_(index) {}

  std::int64_t index() const noexcept { return index_; }

 private:
  std::int64_t index_;
};

}  // namespace regshannon
