#pragma once

#include "dhl/rational.hpp"

#include <string>
#include <vector>

namespace dhl {

// Lattice parameters a, b, c (exact) and size N.
struct ModelParams {
  Rational a;
  Rational b;
  Rational c;
  int N = 1;

  static ModelParams parse(std::string_view a, std::string_view b, std::string_view c, int N);
};

struct ParamReport {
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

// Exact check of c > 0, a - b > N, b - c > N (plus N >= 1). Every failed
// inequality is listed.
ParamReport validate_params(const ModelParams& p);

// Throws ParameterError carrying the violations if validate_params fails.
void require_valid(const ModelParams& p);

}  // namespace dhl
