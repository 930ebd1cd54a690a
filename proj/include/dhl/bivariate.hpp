#pragma once

#include "dhl/geometry.hpp"
#include "dhl/params.hpp"
#include "dhl/specfun.hpp"

#include <Eigen/Dense>

#include <vector>

namespace dhl {

// Parameters of the two univariate factors of
//   D_{m,n}(x, y) = d_m(x; b+y-1, a+y, -y-1) d_n(y-m; m+c+N-1, m+b+N, m-N-1).
// The first lives on x = 0..y, the second on y-m = 0..N-m.
DualHahnParams inner_params(int y, const ModelParams& p);
DualHahnParams outer_params(int m, const ModelParams& p);

// D_{m,n}(x, y). Zero for m > y, where (-y)_m kills the first factor.
double tratnik_D(const Site& degree, const GridPoint& g, const ModelParams& p);

// Orthogonality weight on the grid, normalized so that r_{0,0} = 1 (the
// weights then sum to one). Strictly positive for admissible parameters;
// throws ParameterError otherwise.
double weight(const GridPoint& g, const ModelParams& p);

// Squared norm r_{m,n} = m! n! (-N, c+N)_{m+n} (b-a)_m (c-b)_n in the same
// normalization. Positive for admissible parameters; throws ParameterError
// otherwise.
double norm(const Site& degree, const ModelParams& p);

// The closed Γ-function forms of the weight and norm before normalization.
// They share the overall sign of Γ(b-a), and have poles when a - b is an
// integer. weight == weight_gamma_form / norm_gamma_form(0,0).
SignedLog weight_gamma_form(const GridPoint& g, const ModelParams& p);
SignedLog norm_gamma_form(const Site& degree, const ModelParams& p);

// Eigenvalue x(x+a) - y(y+b), exact.
Rational eigenvalue(const GridPoint& g, const ModelParams& p);

// W_{i,j}(x,y) = sqrt(w_{x,y} / r_{i,j}) D_{i,j}(x,y).
double eigvec_entry(const Site& site, const GridPoint& g, const ModelParams& p);

// Tables of D, w, r, W and λ for one parameter set, built eagerly and
// read-only afterwards.
class SpectralModel {
 public:
  // Throws ParameterError if the parameters are not admissible.
  explicit SpectralModel(ModelParams params);

  const ModelParams& params() const noexcept { return params_; }
  const Triangle& lattice() const noexcept { return lattice_; }
  int size() const noexcept { return params_.N; }
  std::size_t dimension() const noexcept { return lattice_.count(); }

  // D_{m,n}(x,y) as a (degree index, grid index) matrix.
  const Eigen::MatrixXd& polynomials() const noexcept { return d_; }
  const Eigen::VectorXd& weights() const noexcept { return w_; }
  const Eigen::VectorXd& norms() const noexcept { return r_; }
  // W with rows indexed by site and columns by grid point.
  const Eigen::MatrixXd& eigenvectors() const noexcept { return W_; }
  const Eigen::VectorXd& eigenvalues() const noexcept { return lambda_; }
  const std::vector<Rational>& exact_eigenvalues() const noexcept { return lambda_exact_; }

  double D(const Site& degree, const GridPoint& g) const;
  double W(const Site& site, const GridPoint& g) const;

 private:
  ModelParams params_;
  Triangle lattice_;
  Eigen::MatrixXd d_;
  Eigen::VectorXd w_;
  Eigen::VectorXd r_;
  Eigen::MatrixXd W_;
  Eigen::VectorXd lambda_;
  std::vector<Rational> lambda_exact_;
};

}  // namespace dhl
