#include "dhl/specfun.hpp"

#include "dhl/errors.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <string>

#include <math.h>

namespace dhl {

namespace {

double lgamma_positive(double x) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

void require_nonnegative(int v, const char* what) {
  if (v < 0) {
    throw std::invalid_argument(std::string(what) + " must be nonnegative, got " + std::to_string(v));
  }
}

bool vanishes(double factor) noexcept { return std::abs(factor) <= kPoleTolerance; }

}  // namespace

bool is_nonpositive_integer(double x) noexcept {
  if (x > kPoleTolerance) return false;
  return std::abs(x - std::round(x)) <= kPoleTolerance;
}

SignedLog SignedLog::from(double v) noexcept {
  if (v == 0.0) return zero();
  return {std::log(std::abs(v)), v > 0 ? 1 : -1};
}

SignedLog& SignedLog::operator*=(const SignedLog& o) noexcept {
  if (sign == 0 || o.sign == 0) {
    *this = zero();
  } else {
    log_abs += o.log_abs;
    sign *= o.sign;
  }
  return *this;
}

SignedLog& SignedLog::operator/=(const SignedLog& o) {
  if (o.sign == 0) throw PoleError("division by an exact zero");
  if (sign != 0) {
    log_abs -= o.log_abs;
    sign *= o.sign;
  }
  return *this;
}

double pochhammer(double a, int n) {
  require_nonnegative(n, "pochhammer order");
  double r = 1.0;
  for (int k = 0; k < n; ++k) {
    if (vanishes(a + k)) return 0.0;
    r *= a + k;
  }
  return r;
}

double multi_pochhammer(std::span<const double> as, int n) {
  double r = 1.0;
  for (double a : as) r *= pochhammer(a, n);
  return r;
}

double multi_pochhammer(std::initializer_list<double> as, int n) {
  return multi_pochhammer(std::span<const double>(as.begin(), as.size()), n);
}

SignedLog log_pochhammer(double a, int n) {
  require_nonnegative(n, "pochhammer order");
  SignedLog r{0.0, 1};
  for (int k = 0; k < n; ++k) {
    const double f = a + k;
    if (vanishes(f)) return SignedLog::zero();
    r.log_abs += std::log(std::abs(f));
    if (f < 0) r.sign = -r.sign;
  }
  return r;
}

SignedLog log_factorial(int n) {
  require_nonnegative(n, "factorial argument");
  return {lgamma_positive(n + 1.0), 1};
}

SignedLog log_gamma_signed(double x) {
  if (is_nonpositive_integer(x)) {
    throw PoleError("Gamma pole at x = " + std::to_string(x));
  }
  if (x > 0) return {lgamma_positive(x), 1};
  // Γ(x) = π / (sin(πx) Γ(1-x)); reduce the sine argument first.
  const double k = std::round(x);
  double s = std::sin(std::numbers::pi * (x - k));
  if (std::fmod(std::abs(k), 2.0) == 1.0) s = -s;
  return {std::log(std::numbers::pi) - std::log(std::abs(s)) - lgamma_positive(1.0 - x),
          s > 0 ? 1 : -1};
}

double hyp3f2_terminating(int n, int x, double top, double bot1, double bot2) {
  require_nonnegative(n, "3F2 degree n");
  require_nonnegative(x, "3F2 variable x");
  const int terms = std::min(n, x);
  for (int k = 0; k < terms; ++k) {
    if (vanishes(bot1 + k) || vanishes(bot2 + k)) {
      throw PoleError("3F2 lower parameter Pochhammer vanishes at s = " + std::to_string(k + 1));
    }
  }
  KahanSum sum;
  double term = 1.0;
  sum += term;
  for (int s = 0; s < terms; ++s) {
    term *= (s - n) * static_cast<double>(s - x) * (top + s) / ((bot1 + s) * (bot2 + s) * (s + 1.0));
    sum += term;
  }
  return sum.value();
}

double dual_hahn(int n, int x, const DualHahnParams& p) {
  const double series =
      hyp3f2_terminating(n, x, x + p.gamma + p.delta + 1.0, p.alpha + 1.0, p.gamma + 1.0);
  return pochhammer(p.alpha + 1.0, n) * pochhammer(p.gamma + 1.0, n) * series;
}

SignedLog log_weight_w(int x, const DualHahnParams& p) {
  require_nonnegative(x, "weight argument");
  const double gd = p.gamma + p.delta;
  SignedLog num = log_pochhammer(gd + 1.0, x) * log_pochhammer(gd / 2.0 + 1.5, x) *
                  log_pochhammer(p.alpha + 1.0, x) * log_pochhammer(p.gamma + 1.0, x);
  if (x % 2 == 1) num.sign = -num.sign;
  const SignedLog den = log_pochhammer(gd / 2.0 + 0.5, x) *
                        log_pochhammer(gd - p.alpha + 1.0, x) *
                        log_pochhammer(p.delta + 1.0, x) * log_factorial(x);
  if (den.sign == 0) {
    throw PoleError("dual-Hahn weight denominator vanishes at x = " + std::to_string(x));
  }
  return num / den;
}

double weight_w(int x, const DualHahnParams& p) { return log_weight_w(x, p).value(); }

SignedLog log_norm_h(int n, const DualHahnParams& p) {
  require_nonnegative(n, "norm degree");
  const SignedLog gamma_ratio =
      log_gamma_signed(p.gamma + p.delta - p.alpha + 1.0) * log_gamma_signed(p.delta + 1.0) /
      (log_gamma_signed(p.gamma + p.delta + 2.0) * log_gamma_signed(p.delta - p.alpha));
  return log_factorial(n) * log_pochhammer(p.alpha + 1.0, n) * log_pochhammer(p.gamma + 1.0, n) *
         log_pochhammer(p.alpha - p.delta + 1.0, n) * gamma_ratio;
}

double norm_h(int n, const DualHahnParams& p) { return log_norm_h(n, p).value(); }

}  // namespace dhl
