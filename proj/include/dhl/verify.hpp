#pragma once

#include "dhl/bivariate.hpp"
#include "dhl/dynamics.hpp"
#include "dhl/lattice.hpp"
#include "dhl/transfer.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace dhl {

// Invariant measures shared by the verify command and the test suites.

// max over n, m <= L of |sum_x w_x d_n d_m - h_n delta_nm| / sqrt(|h_n h_m|),
// on x = 0..L.
double univariate_orthogonality_error(const DualHahnParams& p, int L);

// Same for D_{m,n} against r_{m,n} over the full grid.
double bivariate_orthogonality_error(const SpectralModel& model);

// max(|W W^T - I|, |W^T W - I|), entrywise.
double eigvec_orthogonality_error(const SpectralModel& model);

// max over grid points of ||H w - λ w||_inf / ||H||_inf for the analytic
// eigenvector columns w.
double eigen_relation_residual(const SpectralModel& model, const Eigen::MatrixXd& hamiltonian);

// max over sources of |sum_dst |f|^2 - 1|.
double unitarity_error(const Eigen::MatrixXcd& propagator);

// max |U_spectral - U_oracle| over all site pairs.
double oracle_deviation(const SpectralModel& model, const OraclePropagator& oracle, const Time& t);

// First admissible family member for lattice size N (smallest q, then p, k = 1).
PstFamilySpec first_admissible(Family family, int N);

enum class VerifyLevel { quick, full };

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double threshold = 0.0;
};

// quick: every invariant for N <= 4; full: N <= 8, plus oracle equivalence,
// PST and FR at the two reference parameter sets.
std::vector<CheckResult> run_verification(VerifyLevel level,
                                          CouplingVariant variant = CouplingVariant::corrected);

// {"passed": bool, "checks": n, "failures": [{name, value, threshold}]}
nlohmann::json to_json(const std::vector<CheckResult>& results);

}  // namespace dhl
