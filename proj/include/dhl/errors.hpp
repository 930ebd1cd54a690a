#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dhl {

// Argument sits on (or within 1e-12 of) a pole of Γ or of a denominator
// Pochhammer symbol.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Model parameters outside the regime c > 0, a - b > N, b - c > N, or a
// quantity that must be positive in that regime came out otherwise.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what, std::vector<std::string> violations = {})
      : std::invalid_argument(what), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dhl
