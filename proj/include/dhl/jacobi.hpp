#pragma once

#include <Eigen/Dense>

namespace dhl {

struct SymmetricEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // orthonormal columns
  int sweeps = 0;
};

// Cyclic Jacobi eigensolver for real symmetric matrices. Sweeps over all (p, q)
// pairs row by row until the off-diagonal Frobenius norm drops below
// rel_tol * ||A||_F. Throws ConvergenceError after max_sweeps sweeps.
SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& a, double rel_tol = 1e-12, int max_sweeps = 50);

}  // namespace dhl
