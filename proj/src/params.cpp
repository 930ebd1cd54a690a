#include "dhl/params.hpp"

#include "dhl/errors.hpp"

namespace dhl {

ModelParams ModelParams::parse(std::string_view a, std::string_view b, std::string_view c, int N) {
  return {parse_rational(a), parse_rational(b), parse_rational(c), N};
}

ParamReport validate_params(const ModelParams& p) {
  ParamReport report;
  if (p.N < 1) {
    report.violations.push_back("N >= 1 fails (N = " + std::to_string(p.N) + ")");
  }
  if (p.c <= 0) {
    report.violations.push_back("c > 0 fails (c = " + to_string(p.c) + ")");
  }
  if (p.a - p.b <= p.N) {
    report.violations.push_back("a - b > N fails (a - b = " + to_string(Rational(p.a - p.b)) + ")");
  }
  if (p.b - p.c <= p.N) {
    report.violations.push_back("b - c > N fails (b - c = " + to_string(Rational(p.b - p.c)) + ")");
  }
  return report;
}

void require_valid(const ModelParams& p) {
  auto report = validate_params(p);
  if (!report.ok()) {
    std::string what = "parameters outside the admissible regime:";
    for (const auto& v : report.violations) what += " " + v + ";";
    throw ParameterError(what, std::move(report.violations));
  }
}

}  // namespace dhl
