#pragma once

#include <cmath>
#include <initializer_list>
#include <span>

namespace dhl {

// Arguments closer than this to a nonpositive integer count as poles.
inline constexpr double kPoleTolerance = 1e-12;

bool is_nonpositive_integer(double x) noexcept;

// sign * exp(log_abs); sign == 0 encodes an exact zero.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  static SignedLog zero() noexcept { return {0.0, 0}; }
  static SignedLog from(double v) noexcept;

  double value() const noexcept { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

  SignedLog& operator*=(const SignedLog& o) noexcept;
  // Division by an exact zero throws PoleError.
  SignedLog& operator/=(const SignedLog& o);
};

inline SignedLog operator*(SignedLog a, const SignedLog& b) noexcept { return a *= b; }
inline SignedLog operator/(SignedLog a, const SignedLog& b) { return a /= b; }

// Neumaier-compensated running sum.
class KahanSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  KahanSum& operator+=(double v) noexcept {
    add(v);
    return *this;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// (a)_n = a (a+1) ... (a+n-1); exact 0 when a is a nonpositive integer with -a < n.
double pochhammer(double a, int n);
double multi_pochhammer(std::span<const double> as, int n);
double multi_pochhammer(std::initializer_list<double> as, int n);

SignedLog log_pochhammer(double a, int n);
SignedLog log_factorial(int n);

// Γ(x) in sign/log form. Negative non-integer x goes through the reflection
// formula. Throws PoleError at nonpositive integers.
SignedLog log_gamma_signed(double x);

// 3F2(-n, -x, top; bot1, bot2; 1), which terminates after min(n, x) terms.
// Throws PoleError if (bot1)_s or (bot2)_s vanishes for some s <= min(n, x).
double hyp3f2_terminating(int n, int x, double top, double bot1, double bot2);

// Parameters (α, δ, γ) of the dual-Hahn polynomial
//   d_n(x) = (α+1)_n (γ+1)_n 3F2(-n, -x, x+γ+δ+1; α+1, γ+1; 1).
// When γ+1 = -L for a nonnegative integer L the family lives on x = 0..L,
// which is how both factors of the bivariate product use it.
struct DualHahnParams {
  double alpha = 0.0;
  double delta = 0.0;
  double gamma = 0.0;
};

double dual_hahn(int n, int x, const DualHahnParams& p);

// Orthogonality weight w_x(α, δ, γ), including the (-1)^x factor.
double weight_w(int x, const DualHahnParams& p);
SignedLog log_weight_w(int x, const DualHahnParams& p);

// Squared norm h_n(α, δ, γ) = n! (α+1, γ+1, α-δ+1)_n Γ(γ+δ-α+1)Γ(δ+1) / [Γ(γ+δ+2)Γ(δ-α)].
double norm_h(int n, const DualHahnParams& p);
SignedLog log_norm_h(int n, const DualHahnParams& p);

}  // namespace dhl
