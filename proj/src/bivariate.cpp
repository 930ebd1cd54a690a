#include "dhl/bivariate.hpp"

#include "dhl/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace dhl {

namespace {

double d(const Rational& r) { return to_double(r); }

void check_indices(const Site& degree, const GridPoint& g, int N) {
  const Triangle t(N);
  if (!t.contains(degree)) throw std::out_of_range("degree " + to_string(degree) + " outside 0 <= m+n <= N");
  if (!t.contains(g)) throw std::out_of_range("grid point " + to_string(g) + " outside 0 <= x <= y <= N");
}

// w_{x,y} / w_{0,0} as a product of Pochhammer symbols; the Γ factors of the
// closed form telescope.
SignedLog relative_weight(const GridPoint& g, const ModelParams& p) {
  const int x = g.x;
  const int y = g.y;
  const int N = p.N;
  SignedLog num = log_pochhammer(d(p.b - p.a), y - x) * log_pochhammer(d(p.b), y + x) *
                  log_pochhammer(d(p.a), x) * log_pochhammer(d(p.a / 2 + 1), x) *
                  log_pochhammer(d(p.b / 2 + 1), y) * log_pochhammer(d(p.c + N), y) *
                  log_pochhammer(-N, y);
  if (x % 2 == 1) num.sign = -num.sign;
  const SignedLog den = log_factorial(x) * log_factorial(y - x) * log_pochhammer(d(p.a + 1), y + x) *
                        log_pochhammer(d(p.a / 2), x) * log_pochhammer(d(p.b / 2), y) *
                        log_pochhammer(d(p.b - p.c - N + 1), y) *
                        log_pochhammer(d(p.b + N + 1), y);
  return num / den;
}

double evaluate_D(int m, int n, const GridPoint& g, const DualHahnParams& inner,
                  const DualHahnParams& outer) {
  if (m > g.y) return 0.0;
  return dual_hahn(m, g.x, inner) * dual_hahn(n, g.y - m, outer);
}

int admissible_size(const ModelParams& p) {
  require_valid(p);
  return p.N;
}

}  // namespace

DualHahnParams inner_params(int y, const ModelParams& p) {
  return {d(p.b + y - 1), d(p.a + y), static_cast<double>(-y - 1)};
}

DualHahnParams outer_params(int m, const ModelParams& p) {
  return {d(p.c + m + p.N - 1), d(p.b + m + p.N), static_cast<double>(m - p.N - 1)};
}

double tratnik_D(const Site& degree, const GridPoint& g, const ModelParams& p) {
  check_indices(degree, g, p.N);
  if (degree.i > g.y) return 0.0;
  return evaluate_D(degree.i, degree.j, g, inner_params(g.y, p), outer_params(degree.i, p));
}

double weight(const GridPoint& g, const ModelParams& p) {
  check_indices({0, 0}, g, p.N);
  const int N = p.N;
  // w_{0,0} / r_{0,0} = (b-c-N+1)_N / (b+1)_N
  const SignedLog scale =
      log_pochhammer(d(p.b - p.c - N + 1), N) / log_pochhammer(d(p.b + 1), N);
  const SignedLog w = relative_weight(g, p) * scale;
  if (w.sign <= 0) {
    throw ParameterError("weight at " + to_string(g) + " is not positive; parameters outside the admissible regime");
  }
  return w.value();
}

double norm(const Site& degree, const ModelParams& p) {
  check_indices(degree, {0, 0}, p.N);
  const int m = degree.i;
  const int n = degree.j;
  const SignedLog r = log_factorial(m) * log_factorial(n) * log_pochhammer(-p.N, m + n) *
                      log_pochhammer(d(p.c + p.N), m + n) * log_pochhammer(d(p.b - p.a), m) *
                      log_pochhammer(d(p.c - p.b), n);
  if (r.sign <= 0) {
    throw ParameterError("norm r" + to_string(degree) + " is not positive; parameters outside the admissible regime");
  }
  return r.value();
}

SignedLog weight_gamma_form(const GridPoint& g, const ModelParams& p) {
  check_indices({0, 0}, g, p.N);
  const int x = g.x;
  const int y = g.y;
  const int N = p.N;
  SignedLog num = log_gamma_signed(d(p.b - p.a) + y - x) * log_gamma_signed(d(p.b) + y + x) *
                  log_pochhammer(d(p.a), x) * log_pochhammer(d(p.a / 2 + 1), x) *
                  log_pochhammer(d(p.b / 2 + 1), y) * log_pochhammer(d(p.c + N), y) *
                  log_pochhammer(-N, y);
  if (x % 2 == 1) num.sign = -num.sign;
  // (b-c-N+1)_y here; the sign-flipped (c-b-N+1)_y does not give an
  // orthogonality weight.
  const SignedLog den = log_factorial(x) * log_factorial(y - x) *
                        log_gamma_signed(d(p.a) + 1 + y + x) * log_pochhammer(d(p.a / 2), x) *
                        log_pochhammer(d(p.b / 2), y) * log_pochhammer(d(p.b - p.c - N + 1), y) *
                        log_pochhammer(d(p.b + N + 1), y);
  return num / den;
}

SignedLog norm_gamma_form(const Site& degree, const ModelParams& p) {
  check_indices(degree, {0, 0}, p.N);
  const int m = degree.i;
  const int n = degree.j;
  const int N = p.N;
  SignedLog num = log_factorial(m) * log_factorial(n) * log_pochhammer(-N, m + n) *
                  log_pochhammer(d(p.c + N), m + n) * log_gamma_signed(d(p.b - p.a) + m) *
                  log_gamma_signed(d(p.c - p.b) + n) * log_gamma_signed(d(p.b) + N + 1);
  SignedLog den = SignedLog::from(d(p.a * p.b)) * log_gamma_signed(d(p.a)) *
                  log_gamma_signed(d(p.c - p.b) + N);
  if (N % 2 == 1) den.sign = -den.sign;
  return num / den;
}

Rational eigenvalue(const GridPoint& g, const ModelParams& p) {
  check_indices({0, 0}, g, p.N);
  return Rational(g.x) * (g.x + p.a) - Rational(g.y) * (g.y + p.b);
}

double eigvec_entry(const Site& site, const GridPoint& g, const ModelParams& p) {
  return std::sqrt(weight(g, p) / norm(site, p)) * tratnik_D(site, g, p);
}

SpectralModel::SpectralModel(ModelParams params)
    : params_(std::move(params)), lattice_(admissible_size(params_)) {
  const auto M = static_cast<Eigen::Index>(lattice_.count());
  d_.resize(M, M);
  w_.resize(M);
  r_.resize(M);
  lambda_.resize(M);
  lambda_exact_.reserve(static_cast<std::size_t>(M));
  for (Eigen::Index k = 0; k < M; ++k) {
    const GridPoint g = lattice_.grid_point(static_cast<std::size_t>(k));
    w_(k) = weight(g, params_);
    lambda_exact_.push_back(eigenvalue(g, params_));
    lambda_(k) = to_double(lambda_exact_.back());
  }
  for (Eigen::Index s = 0; s < M; ++s) {
    const Site deg = lattice_.site(static_cast<std::size_t>(s));
    r_(s) = norm(deg, params_);
  }
  std::vector<DualHahnParams> inner;
  std::vector<DualHahnParams> outer;
  for (int v = 0; v <= params_.N; ++v) {
    inner.push_back(inner_params(v, params_));
    outer.push_back(outer_params(v, params_));
  }
  for (Eigen::Index k = 0; k < M; ++k) {
    const GridPoint g = lattice_.grid_point(static_cast<std::size_t>(k));
    for (Eigen::Index s = 0; s < M; ++s) {
      const Site deg = lattice_.site(static_cast<std::size_t>(s));
      d_(s, k) = evaluate_D(deg.i, deg.j, g, inner[static_cast<std::size_t>(g.y)],
                            outer[static_cast<std::size_t>(deg.i)]);
    }
  }
  W_.resize(M, M);
  for (Eigen::Index s = 0; s < M; ++s) {
    for (Eigen::Index k = 0; k < M; ++k) {
      W_(s, k) = std::sqrt(w_(k) / r_(s)) * d_(s, k);
    }
  }
}

double SpectralModel::D(const Site& degree, const GridPoint& g) const {
  return d_(static_cast<Eigen::Index>(lattice_.index(degree)),
            static_cast<Eigen::Index>(lattice_.index(g)));
}

double SpectralModel::W(const Site& site, const GridPoint& g) const {
  return W_(static_cast<Eigen::Index>(lattice_.index(site)),
            static_cast<Eigen::Index>(lattice_.index(g)));
}

}  // namespace dhl
