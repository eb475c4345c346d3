#pragma once

#include <stdexcept>
#include <string>

namespace hencky {

/// Input outside the domain of an operation. `parameter()` names the
/// offending argument so front ends can report it verbatim.
class DomainError : public std::domain_error {
 public:
  DomainError(std::string parameter, const std::string& what)
      : std::domain_error(parameter + ": " + what),
        parameter_(std::move(parameter)) {}

  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

/// An adaptive procedure ran out of budget before reaching its tolerance.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double best_estimate, double gap)
      : std::runtime_error(what), best_estimate_(best_estimate), gap_(gap) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double gap() const noexcept { return gap_; }

 private:
  double best_estimate_;
  double gap_;
};

}  // namespace hencky
