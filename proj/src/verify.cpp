#include "dhl/verify.hpp"

#include <cmath>
#include <stdexcept>

namespace dhl {

namespace {

std::string label(const ModelParams& p) {
  return "a=" + to_string(p.a) + " b=" + to_string(p.b) + " c=" + to_string(p.c) +
         " N=" + std::to_string(p.N);
}

ModelParams figure1() { return ModelParams::parse("53/3", "34/3", "1/6", 6); }
ModelParams figure2() { return ModelParams::parse("19", "23/2", "1/4", 6); }

// Off the PST families: c is not b/2 - N + 1/2.
ModelParams generic_params(int N) {
  const Rational b = Rational(N) + Rational(27, 10);
  return {b + N + Rational(4, 3), b, Rational(1, 3), N};
}

class Recorder {
 public:
  void check(std::string name, double value, double threshold) {
    results_.push_back({std::move(name), std::isfinite(value) && value <= threshold, value, threshold});
  }
  void check_at_least(std::string name, double value, double threshold) {
    results_.push_back({std::move(name), std::isfinite(value) && value >= threshold, value, threshold});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

void model_suite(Recorder& rec, const ModelParams& p, CouplingVariant variant) {
  const std::string tag = " [" + label(p) + "]";
  double uni = 0.0;
  for (int v = 0; v <= p.N; ++v) {
    uni = std::max(uni, univariate_orthogonality_error(inner_params(v, p), v));
    uni = std::max(uni, univariate_orthogonality_error(outer_params(v, p), p.N - v));
  }
  rec.check("univariate orthogonality" + tag, uni, 1e-8);

  const SpectralModel model(p);
  rec.check("bivariate orthogonality" + tag, bivariate_orthogonality_error(model), 1e-8);
  rec.check("eigenvector matrix orthogonality" + tag, eigvec_orthogonality_error(model), 1e-8);
  rec.check("eigen-relation" + tag, eigen_relation_residual(model, assemble(p, variant).matrix), 1e-8);

  double unit = 0.0;
  for (const char* t : {"1/2", "1/1", "2/1", "3/1"}) {
    unit = std::max(unit, unitarity_error(spectral_propagator(model, Time::parse(t))));
  }
  rec.check("unitarity" + tag, unit, 1e-8);

  if (const auto spec = family_membership(p)) {
    const FamilyParams fp = family_params(*spec, p.N);
    const Eigen::MatrixXcd U = spectral_propagator(model, fp.period);
    rec.check("column structure at period" + tag, max_cross_column_amplitude(U, model.lattice()), 1e-8);
    rec.check_at_least("mirror PST at period" + tag, certify_pst(model, fp.period, 1e-6).min_modulus, 1.0 - 1e-6);
  }
}

}  // namespace

double univariate_orthogonality_error(const DualHahnParams& p, int L) {
  std::vector<double> w(static_cast<std::size_t>(L + 1));
  std::vector<double> h(static_cast<std::size_t>(L + 1));
  std::vector<std::vector<double>> d(static_cast<std::size_t>(L + 1), std::vector<double>(static_cast<std::size_t>(L + 1)));
  for (int x = 0; x <= L; ++x) w[static_cast<std::size_t>(x)] = weight_w(x, p);
  for (int n = 0; n <= L; ++n) {
    h[static_cast<std::size_t>(n)] = norm_h(n, p);
    for (int x = 0; x <= L; ++x) d[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)] = dual_hahn(n, x, p);
  }
  double worst = 0.0;
  for (std::size_t n = 0; n <= static_cast<std::size_t>(L); ++n) {
    for (std::size_t m = 0; m <= n; ++m) {
      KahanSum s;
      for (std::size_t x = 0; x <= static_cast<std::size_t>(L); ++x) s += w[x] * d[n][x] * d[m][x];
      const double expected = n == m ? h[n] : 0.0;
      worst = std::max(worst, std::abs(s.value() - expected) / std::sqrt(std::abs(h[n] * h[m])));
    }
  }
  return worst;
}

double bivariate_orthogonality_error(const SpectralModel& model) {
  const auto& D = model.polynomials();
  const auto& w = model.weights();
  const auto& r = model.norms();
  double worst = 0.0;
  for (Eigen::Index s = 0; s < D.rows(); ++s) {
    for (Eigen::Index t = 0; t <= s; ++t) {
      KahanSum sum;
      for (Eigen::Index k = 0; k < D.cols(); ++k) sum += w(k) * D(s, k) * D(t, k);
      const double expected = s == t ? r(s) : 0.0;
      worst = std::max(worst, std::abs(sum.value() - expected) / std::sqrt(r(s) * r(t)));
    }
  }
  return worst;
}

double eigvec_orthogonality_error(const SpectralModel& model) {
  const auto& W = model.eigenvectors();
  const auto I = Eigen::MatrixXd::Identity(W.rows(), W.cols());
  return std::max((W * W.transpose() - I).cwiseAbs().maxCoeff(),
                  (W.transpose() * W - I).cwiseAbs().maxCoeff());
}

double eigen_relation_residual(const SpectralModel& model, const Eigen::MatrixXd& H) {
  const auto& W = model.eigenvectors();
  const auto& lambda = model.eigenvalues();
  const double hnorm = H.cwiseAbs().rowwise().sum().maxCoeff();
  double worst = 0.0;
  for (Eigen::Index k = 0; k < W.cols(); ++k) {
    const Eigen::VectorXd res = H * W.col(k) - lambda(k) * W.col(k);
    worst = std::max(worst, res.cwiseAbs().maxCoeff());
  }
  return hnorm > 0 ? worst / hnorm : worst;
}

double unitarity_error(const Eigen::MatrixXcd& U) {
  double worst = 0.0;
  for (Eigen::Index s = 0; s < U.rows(); ++s) {
    KahanSum p;
    for (Eigen::Index d = 0; d < U.cols(); ++d) p += std::norm(U(s, d));
    worst = std::max(worst, std::abs(p.value() - 1.0));
  }
  return worst;
}

double oracle_deviation(const SpectralModel& model, const OraclePropagator& oracle, const Time& t) {
  return (spectral_propagator(model, t) - oracle.matrix(t)).cwiseAbs().maxCoeff();
}

PstFamilySpec first_admissible(Family family, int N) {
  for (int q = 1; q <= 400; ++q) {
    for (int p = 1; p <= 400; ++p) {
      const PstFamilySpec spec{family, 1, p, q};
      if (family_params(spec, N).accepted()) return spec;
    }
  }
  throw std::logic_error("first_admissible: no admissible family member found");
}

std::vector<CheckResult> run_verification(VerifyLevel level, CouplingVariant variant) {
  Recorder rec;
  const int max_n = level == VerifyLevel::quick ? 4 : 8;
  for (int N = 1; N <= max_n; ++N) {
    model_suite(rec, family_params(first_admissible(Family::odd_period, N), N).params, variant);
    model_suite(rec, family_params(first_admissible(Family::even_period, N), N).params, variant);
    model_suite(rec, generic_params(N), variant);
  }
  model_suite(rec, figure1(), variant);
  model_suite(rec, figure2(), variant);

  if (level == VerifyLevel::full) {
    for (const ModelParams& p : {figure1(), figure2()}) {
      const SpectralModel model(p);
      const OraclePropagator oracle(assemble(p, variant));
      double dev = 0.0;
      for (const char* t : {"0/1", "1/2", "1/1", "2/1", "3/1"}) {
        dev = std::max(dev, oracle_deviation(model, oracle, Time::parse(t)));
      }
      rec.check("spectral/oracle equivalence [" + label(p) + "]", dev, 1e-7);
    }
    const SpectralModel fig2(figure2());
    const TransferReport fr = detect_fractional_revival(fig2, Time::parse("1/1"), 1e-6);
    rec.check("fractional revival column probability at pi [" + label(figure2()) + "]",
              std::abs(fr.column_probability - 1.0), 1e-8);
    rec.check_at_least("fractional revival detected at pi [" + label(figure2()) + "]",
                       fr.kind == TransferKind::fr ? 1.0 : 0.0, 1.0);
  }
  return rec.take();
}

nlohmann::json to_json(const std::vector<CheckResult>& results) {
  auto failures = nlohmann::json::array();
  for (const auto& r : results) {
    if (!r.passed) failures.push_back({{"name", r.name}, {"value", r.value}, {"threshold", r.threshold}});
  }
  return {{"passed", failures.empty()}, {"checks", results.size()}, {"failures", std::move(failures)}};
}

}  // namespace dhl
