#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace hoft {

/// Input outside the mathematical domain of an operation (poles, negative radii, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical method could not reach its accuracy target.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}

  /// Best relative accuracy reached before giving up (+inf when unknown).
  double achieved_tolerance() const noexcept { return achieved_; }

 private:
  double achieved_ = std::numeric_limits<double>::infinity();
};

/// Invalid configuration or parameter combination, detected before any work starts.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hoft
