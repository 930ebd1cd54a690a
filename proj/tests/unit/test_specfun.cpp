#include "dhl/bivariate.hpp"
#include "dhl/errors.hpp"
#include "dhl/specfun.hpp"
#include "dhl/verify.hpp"
#include "fixtures.hpp"
#include "oracle/exact.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using dhl::DualHahnParams;
using dhl::Rational;

namespace {

DualHahnParams to_double(const oracle::Triple& t) {
  return {dhl::to_double(t.alpha), dhl::to_double(t.delta), dhl::to_double(t.gamma)};
}

// h_n^{-1/2} d_n, optionally times (-1)^n.
double orthonormal(int n, int x, const DualHahnParams& p, int L, bool alternate) {
  if (n < 0 || n > L) return 0.0;
  const double v = dhl::dual_hahn(n, x, p) / std::sqrt(dhl::norm_h(n, p));
  return alternate && n % 2 == 1 ? -v : v;
}

// Three-term recurrence of the orthonormal family on x = 0..L, written for
// α + 1 = -L. Returns the worst residual relative to the largest term.
double recurrence_residual(const DualHahnParams& p, int L, bool alternate = true) {
  const double al = p.alpha, de = p.delta, ga = p.gamma;
  CHECK(std::abs(al + 1 + L) < 1e-12);
  double worst = 0.0;
  for (int x = 0; x <= L; ++x) {
    for (int n = 0; n <= L; ++n) {
      const double up = std::sqrt((n + 1) * (n + ga + 1) * (L - n) * (de + L - n));
      const double mid = (n + ga + 1) * (L - n) + n * (de + L - n + 1);
      const double down = n == 0 ? 0.0 : std::sqrt(n * (n + ga) * (L - n + 1) * (de + 1 + L - n));
      const double lhs = -x * (x + de + ga + 1) * orthonormal(n, x, p, L, alternate);
      const double t1 = up * orthonormal(n + 1, x, p, L, alternate);
      const double t2 = mid * orthonormal(n, x, p, L, alternate);
      const double t3 = down * orthonormal(n - 1, x, p, L, alternate);
      const double scale = std::max({std::abs(lhs), std::abs(t1), std::abs(t2), std::abs(t3), 1.0});
      worst = std::max(worst, std::abs(lhs - (t1 - t2 + t3)) / scale);
    }
  }
  return worst;
}

// d_n(x; α, δ, γ) = d_n(x; γ, δ+γ-α, α): same polynomial, weight and norm, with
// the truncating parameter moved into the α slot.
DualHahnParams swap_alpha_gamma(const DualHahnParams& p) {
  return {p.gamma, p.delta + p.gamma - p.alpha, p.alpha};
}

}  // namespace

TEST_SUITE("specfun") {
  TEST_CASE("pochhammer examples") {
    CHECK(dhl::pochhammer(5.0, 0) == 1.0);
    CHECK(dhl::pochhammer(3.0, 2) == 12.0);
    CHECK(dhl::pochhammer(0.5, 3) == doctest::Approx(15.0 / 8.0).epsilon(1e-15));
    CHECK(dhl::pochhammer(-2.0, 3) == 0.0);
    CHECK(dhl::pochhammer(-2.0, 2) == 2.0);
    CHECK(dhl::multi_pochhammer({2.0, 3.0}, 1) == 6.0);
    CHECK(dhl::multi_pochhammer({0.75}, 4) == dhl::pochhammer(0.75, 4));
    CHECK(dhl::multi_pochhammer({-1.0, 5.0}, 2) == 0.0);
  }

  TEST_CASE("pochhammer splits over consecutive ranges") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> dist(-7.5, 7.5);
    for (int trial = 0; trial < 200; ++trial) {
      const double a = dist(rng);
      for (int n = 0; n <= 10; ++n) {
        for (int m = 0; m <= 10; ++m) {
          const double whole = dhl::pochhammer(a, n + m);
          const double split = dhl::pochhammer(a, n) * dhl::pochhammer(a + n, m);
          CHECK(std::abs(whole - split) <= 1e-12 * std::abs(whole));
        }
      }
    }
    // exact version
    for (int num = -30; num <= 30; num += 7) {
      const Rational a(num, 7);
      for (int n = 0; n <= 10; ++n)
        for (int m = 0; m <= 10; ++m)
          CHECK(oracle::rising(a, n + m) == oracle::rising(a, n) * oracle::rising(a + n, m));
    }
  }

  TEST_CASE("log_pochhammer matches pochhammer") {
    for (double a : {-3.25, -0.5, 0.125, 2.0, 17.6666}) {
      for (int n = 0; n <= 15; ++n) {
        const dhl::SignedLog l = dhl::log_pochhammer(a, n);
        const double direct = dhl::pochhammer(a, n);
        CHECK(l.value() == doctest::Approx(direct).epsilon(1e-12));
      }
    }
    CHECK(dhl::log_pochhammer(-3.0, 5).sign == 0);
    CHECK(dhl::log_factorial(5).value() == doctest::Approx(120.0).epsilon(1e-14));
  }

  TEST_CASE("log_gamma_signed examples") {
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    auto g1 = dhl::log_gamma_signed(1.0);
    CHECK(g1.sign == 1);
    CHECK(std::abs(g1.log_abs) < 1e-15);
    auto gh = dhl::log_gamma_signed(0.5);
    CHECK(gh.sign == 1);
    CHECK(gh.log_abs == doctest::Approx(std::log(sqrt_pi)).epsilon(1e-14));
    auto gm = dhl::log_gamma_signed(-0.5);
    CHECK(gm.sign == -1);
    CHECK(gm.log_abs == doctest::Approx(std::log(2 * sqrt_pi)).epsilon(1e-14));
    // Γ(-3/2) = 4√π/3, Γ(-5/2) = -8√π/15
    CHECK(dhl::log_gamma_signed(-1.5).value() == doctest::Approx(4 * sqrt_pi / 3).epsilon(1e-13));
    CHECK(dhl::log_gamma_signed(-2.5).value() == doctest::Approx(-8 * sqrt_pi / 15).epsilon(1e-13));
    CHECK(dhl::log_gamma_signed(-6.33333333333).sign == -1);
  }

  TEST_CASE("log_gamma_signed rejects poles") {
    CHECK_THROWS_AS(dhl::log_gamma_signed(0.0), dhl::PoleError);
    CHECK_THROWS_AS(dhl::log_gamma_signed(-3.0), dhl::PoleError);
    CHECK_THROWS_AS(dhl::log_gamma_signed(-3.0 + 1e-14), dhl::PoleError);
    CHECK_NOTHROW(dhl::log_gamma_signed(-3.0 + 1e-6));
  }

  TEST_CASE("SignedLog arithmetic") {
    const auto a = dhl::SignedLog::from(-6.0);
    const auto b = dhl::SignedLog::from(2.0);
    CHECK((a * b).value() == doctest::Approx(-12.0));
    CHECK((a / b).value() == doctest::Approx(-3.0));
    CHECK((dhl::SignedLog::zero() * a).value() == 0.0);
    CHECK_THROWS_AS(a / dhl::SignedLog::zero(), dhl::PoleError);
  }

  TEST_CASE("hyp3f2_terminating examples") {
    CHECK(dhl::hyp3f2_terminating(0, 5, 1.5, 2.5, -7.0) == 1.0);
    CHECK(dhl::hyp3f2_terminating(4, 0, 1.5, 2.5, -7.0) == 1.0);
    // n = 1: 1 - x top / (bot1 bot2)
    CHECK(dhl::hyp3f2_terminating(1, 3, 2.0, 4.0, 5.0) == doctest::Approx(1.0 + 3 * 2.0 / 20.0));
    CHECK_THROWS_AS(dhl::hyp3f2_terminating(3, 3, 1.0, 2.0, -1.0), dhl::PoleError);
    // the vanishing factor is never reached when min(n, x) is small enough
    CHECK_NOTHROW(dhl::hyp3f2_terminating(1, 3, 1.0, 2.0, -1.0));
  }

  TEST_CASE("dual_hahn examples") {
    const DualHahnParams p{0.75, 2.5, -4.0};
    for (int x = 0; x <= 3; ++x) {
      CHECK(dhl::dual_hahn(0, x, p) == 1.0);
      const double one = (p.alpha + 1) * (p.gamma + 1) + x * (x + p.gamma + p.delta + 1);
      CHECK(dhl::dual_hahn(1, x, p) == doctest::Approx(one).epsilon(1e-14));
    }
    const auto exact = oracle::dual_hahn(2, 1, {0, 0, 0});
    REQUIRE(exact);
    CHECK(*exact == 20);
    CHECK(dhl::dual_hahn(2, 1, {0.0, 0.0, 0.0}) == doctest::Approx(20.0).epsilon(1e-15));
  }

  TEST_CASE("dual_hahn against term-by-term summation") {
    int compared = 0, poles = 0;
    for (const auto& mp : {fixtures::figure1(), fixtures::figure2()}) {
      std::vector<oracle::Triple> triples;
      for (int k = 0; k <= mp.N; ++k) {
        triples.push_back(oracle::inner(k, mp));
        triples.push_back(oracle::outer(k, mp));
      }
      for (const auto& t : triples) {
        for (int n = 0; n <= 12; ++n) {
          for (int x = 0; x <= 12; ++x) {
            const auto exact = oracle::dual_hahn(n, x, t);
            if (!exact) {
              CHECK_THROWS_AS(dhl::dual_hahn(n, x, to_double(t)), dhl::PoleError);
              ++poles;
              continue;
            }
            const double value = dhl::dual_hahn(n, x, to_double(t));
            const double scale = std::max(1.0, dhl::to_double(oracle::dual_hahn_magnitude(n, x, t)));
            CHECK(std::abs(value - dhl::to_double(*exact)) <= 1e-10 * scale);
            ++compared;
          }
        }
      }
    }
    CHECK(compared > 2000);
    CHECK(poles > 0);
  }

  TEST_CASE("weight_w examples") {
    const DualHahnParams p{1.25, 3.5, -6.0};
    CHECK(dhl::weight_w(0, p) == 1.0);
    const double al = p.alpha, de = p.delta, ga = p.gamma;
    const double w1 = -(ga + de + 1) * (ga / 2 + de / 2 + 1.5) * (al + 1) * (ga + 1) /
                      ((ga / 2 + de / 2 + 0.5) * (ga + de - al + 1) * (de + 1));
    CHECK(dhl::weight_w(1, p) == doctest::Approx(w1).epsilon(1e-14));
    for (int x = 0; x <= 5; ++x) {
      const Rational exact = oracle::weight_ratio(x, {Rational(5, 4), Rational(7, 2), Rational(-6)});
      CHECK(dhl::weight_w(x, p) == doctest::Approx(dhl::to_double(exact)).epsilon(1e-13));
      CHECK(dhl::log_weight_w(x, p).value() == doctest::Approx(dhl::weight_w(x, p)).epsilon(1e-13));
    }
  }

  TEST_CASE("norm_h examples") {
    const DualHahnParams p{-7.0, 1.0 / 3.0, 2.5};
    const double h0 = std::exp(std::lgamma(p.gamma + p.delta - p.alpha + 1) + std::lgamma(p.delta + 1) -
                               std::lgamma(p.gamma + p.delta + 2) - std::lgamma(p.delta - p.alpha));
    CHECK(dhl::norm_h(0, p) == doctest::Approx(h0).epsilon(1e-13));
    for (int n = 0; n <= 6; ++n) {
      const double ratio = std::tgamma(n + 1.0) *
                           dhl::multi_pochhammer({p.alpha + 1, p.gamma + 1, p.alpha - p.delta + 1}, n);
      CHECK(dhl::norm_h(n, p) / h0 == doctest::Approx(ratio).epsilon(1e-12));
      CHECK(dhl::log_norm_h(n, p).value() == doctest::Approx(dhl::norm_h(n, p)).epsilon(1e-12));
    }
  }

  TEST_CASE("orthogonality inside the bivariate embedding") {
    std::vector<dhl::ModelParams> sets{fixtures::figure1(), fixtures::figure2()};
    for (int N = 1; N <= 8; ++N) {
      for (auto fam : {dhl::Family::odd_period, dhl::Family::even_period}) {
        sets.push_back(dhl::family_params(dhl::first_admissible(fam, N), N).params);
      }
    }
    for (const auto& mp : sets) {
      CAPTURE(mp.N);
      for (int y = 0; y <= mp.N; ++y) {
        CHECK(dhl::univariate_orthogonality_error(dhl::inner_params(y, mp), y) <= 1e-8);
      }
      for (int m = 0; m <= mp.N; ++m) {
        CHECK(dhl::univariate_orthogonality_error(dhl::outer_params(m, mp), mp.N - m) <= 1e-8);
      }
    }
  }

  TEST_CASE("orthogonality cross-check from explicit sums") {
    // Recompute one case by hand: Σ_x w_x d_n d_m against h_n δ_nm.
    const DualHahnParams p = dhl::inner_params(5, fixtures::figure1());
    for (int n = 0; n <= 5; ++n) {
      for (int m = 0; m <= 5; ++m) {
        dhl::KahanSum s;
        for (int x = 0; x <= 5; ++x) s += dhl::weight_w(x, p) * dhl::dual_hahn(n, x, p) * dhl::dual_hahn(m, x, p);
        const double expect = n == m ? dhl::norm_h(n, p) : 0.0;
        const double scale = std::sqrt(std::abs(dhl::norm_h(n, p) * dhl::norm_h(m, p)));
        CHECK(std::abs(s.value() - expect) <= 1e-8 * scale);
      }
    }
  }

  TEST_CASE("orthonormal three-term recurrence") {
    // The positive off-diagonal coefficients belong to (-1)^n h_n^{-1/2} d_n;
    // for h_n^{-1/2} d_n itself both of them change sign.
    for (const DualHahnParams& p : {DualHahnParams{-7.0, -9.25, -8.5}, DualHahnParams{-5.0, -6.5, -17.0 / 3.0},
                                    DualHahnParams{-7.0, 2.5, 1.0 / 3.0}}) {
      const int L = static_cast<int>(-p.alpha) - 1;
      CHECK(recurrence_residual(p, L) <= 1e-8);
      CHECK(recurrence_residual(p, L, false) > 1e-2);
    }
    CHECK(recurrence_residual({-9.0, 0.2, 4.75}, 8) <= 1e-8);
    // both families of the bivariate embedding, truncation moved to α
    for (const auto& mp : {fixtures::figure1(), fixtures::figure2()}) {
      for (int y = 1; y <= mp.N; ++y) {
        CHECK(recurrence_residual(swap_alpha_gamma(dhl::inner_params(y, mp)), y) <= 1e-8);
      }
      for (int m = 0; m < mp.N; ++m) {
        CHECK(recurrence_residual(swap_alpha_gamma(dhl::outer_params(m, mp)), mp.N - m) <= 1e-8);
      }
    }
  }

  TEST_CASE("the α-γ exchange leaves polynomial, weight and norm unchanged") {
    const DualHahnParams p = dhl::outer_params(2, fixtures::figure2());
    const DualHahnParams s = swap_alpha_gamma(p);
    for (int n = 0; n <= 4; ++n) {
      CHECK(dhl::norm_h(n, s) == doctest::Approx(dhl::norm_h(n, p)).epsilon(1e-10));
      for (int x = 0; x <= 4; ++x) {
        CHECK(dhl::dual_hahn(n, x, s) == doctest::Approx(dhl::dual_hahn(n, x, p)).epsilon(1e-10));
        CHECK(dhl::weight_w(x, s) == doctest::Approx(dhl::weight_w(x, p)).epsilon(1e-12));
      }
    }
  }
}
