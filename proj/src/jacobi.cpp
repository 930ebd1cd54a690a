#include "dhl/jacobi.hpp"

#include "dhl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dhl {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double s = 0.0;
  for (Eigen::Index p = 0; p < a.rows(); ++p) {
    for (Eigen::Index q = 0; q < a.cols(); ++q) {
      if (p != q) s += a(p, q) * a(p, q);
    }
  }
  return std::sqrt(s);
}

// Zeroes a(p,q) with the rotation J = [c s; -s c] acting on rows/columns p, q.
void rotate(Eigen::MatrixXd& a, Eigen::MatrixXd& v, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& input, double rel_tol, int max_sweeps) {
  if (input.rows() != input.cols()) throw std::invalid_argument("jacobi_eigen: matrix must be square");
  if ((input - input.transpose()).cwiseAbs().maxCoeff() != 0.0) {
    throw std::invalid_argument("jacobi_eigen: matrix must be exactly symmetric");
  }
  const Eigen::Index n = input.rows();
  Eigen::MatrixXd a = input;
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double threshold = rel_tol * input.norm();

  int sweeps = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweeps == max_sweeps) {
      throw ConvergenceError("jacobi_eigen: no convergence after " + std::to_string(max_sweeps) + " sweeps");
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
    ++sweeps;
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index l, Eigen::Index r) { return a(l, l) < a(r, r); });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]);
    out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  out.sweeps = sweeps;
  return out;
}

}  // namespace dhl
