#include "dhl/dynamics.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace dhl {

namespace {

struct ComplexKahan {
  KahanSum re;
  KahanSum im;
  void add(const Amplitude& z) {
    re.add(z.real());
    im.add(z.imag());
  }
  Amplitude value() const { return {re.value(), im.value()}; }
};

nlohmann::json site_json(const Site& s) { return nlohmann::json::array({s.i, s.j}); }

Eigen::VectorXcd phases(const SpectralModel& model, const Time& t) {
  const auto& lambda = model.exact_eigenvalues();
  Eigen::VectorXcd ph(static_cast<Eigen::Index>(lambda.size()));
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    ph(static_cast<Eigen::Index>(k)) =
        t.symbolic() ? phase(lambda[k], t) : std::polar(1.0, -t.value() * model.eigenvalues()(static_cast<Eigen::Index>(k)));
  }
  return ph;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Time Time::pi_multiple(Rational tau) {
  Time t;
  t.symbolic_ = true;
  t.value_ = to_double(tau) * std::numbers::pi;
  t.tau_ = std::move(tau);
  return t;
}

Time Time::real(double v) {
  Time t;
  t.symbolic_ = false;
  t.value_ = v;
  return t;
}

Time Time::parse(std::string_view text) {
  std::string_view s = trim(text);
  bool pi = false;
  if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
    pi = true;
    s = trim(s.substr(0, s.size() - 2));
    if (!s.empty() && s.back() == '*') s = trim(s.substr(0, s.size() - 1));
    if (s.empty()) return pi_multiple(Rational(1));
  }
  if (pi || s.find('/') != std::string_view::npos) return pi_multiple(parse_rational(s));
  const std::string owned(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(owned, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed time '" + std::string(text) + "'");
  }
  if (used != owned.size() || !std::isfinite(v)) {
    throw std::invalid_argument("malformed time '" + std::string(text) + "'");
  }
  return real(v);
}

const Rational& Time::over_pi() const {
  if (!symbolic_) throw std::logic_error("time " + label() + " is not a rational multiple of pi");
  return tau_;
}

std::string Time::label() const {
  return symbolic_ ? to_string(tau_) + "pi" : format_double(value_);
}

Time Time::operator-() const {
  return symbolic_ ? pi_multiple(-tau_) : real(-value_);
}

Time operator+(const Time& l, const Time& r) {
  if (l.symbolic() && r.symbolic()) return Time::pi_multiple(l.over_pi() + r.over_pi());
  return Time::real(l.value() + r.value());
}

Amplitude phase(const Rational& lambda, const Time& t) {
  if (!t.symbolic()) return std::polar(1.0, -t.value() * to_double(lambda));
  // exp(-i pi r) with r = tau * lambda mod 2
  const Rational r = floor_mod(t.over_pi() * lambda, Rational(2));
  if (r == 0) return {1.0, 0.0};
  if (r == 1) return {-1.0, 0.0};
  if (r == Rational(1, 2)) return {0.0, -1.0};
  if (r == Rational(3, 2)) return {0.0, 1.0};
  return std::polar(1.0, -std::numbers::pi * to_double(r));
}

double AmplitudeGrid::total_probability() const {
  KahanSum s;
  for (const auto& v : values) s += std::norm(v);
  return s.value();
}

Amplitude propagate_spectral(const SpectralModel& model, const Site& src, const Site& dst, const Time& t) {
  const auto& W = model.eigenvectors();
  const auto& lambda = model.exact_eigenvalues();
  const auto s = static_cast<Eigen::Index>(model.lattice().index(src));
  const auto d = static_cast<Eigen::Index>(model.lattice().index(dst));
  ComplexKahan sum;
  for (Eigen::Index k = 0; k < W.cols(); ++k) {
    const Amplitude ph = t.symbolic() ? phase(lambda[static_cast<std::size_t>(k)], t)
                                      : std::polar(1.0, -t.value() * model.eigenvalues()(k));
    sum.add(W(s, k) * W(d, k) * ph);
  }
  return sum.value();
}

Eigen::MatrixXcd spectral_propagator(const SpectralModel& model, const Time& t) {
  const auto& W = model.eigenvectors();
  const Eigen::VectorXcd ph = phases(model, t);
  const Eigen::Index M = W.rows();
  Eigen::MatrixXcd U(M, M);
  for (Eigen::Index s = 0; s < M; ++s) {
    for (Eigen::Index d = s; d < M; ++d) {
      ComplexKahan sum;
      for (Eigen::Index k = 0; k < M; ++k) sum.add(W(s, k) * W(d, k) * ph(k));
      U(s, d) = sum.value();
      U(d, s) = U(s, d);
    }
  }
  return U;
}

AmplitudeGrid spectral_row(const SpectralModel& model, const Site& src, const Time& t) {
  const auto& W = model.eigenvectors();
  const Eigen::VectorXcd ph = phases(model, t);
  const auto s = static_cast<Eigen::Index>(model.lattice().index(src));
  AmplitudeGrid grid{model.lattice(), src, t, {}};
  grid.values.reserve(model.dimension());
  for (Eigen::Index d = 0; d < W.rows(); ++d) {
    ComplexKahan sum;
    for (Eigen::Index k = 0; k < W.cols(); ++k) sum.add(W(s, k) * W(d, k) * ph(k));
    grid.values.push_back(sum.value());
  }
  return grid;
}

OraclePropagator::OraclePropagator(const Hamiltonian& h)
    : lattice_(h.lattice()), eigen_(jacobi_eigen(h.matrix)) {}

Eigen::MatrixXcd OraclePropagator::matrix(const Time& t) const {
  const Eigen::Index M = eigen_.values.size();
  Eigen::VectorXcd ph(M);
  for (Eigen::Index k = 0; k < M; ++k) ph(k) = std::polar(1.0, -t.value() * eigen_.values(k));
  const Eigen::MatrixXcd V = eigen_.vectors.cast<Amplitude>();
  return V * ph.asDiagonal() * V.transpose();
}

AmplitudeGrid OraclePropagator::row(const Site& src, const Time& t) const {
  const Eigen::Index M = eigen_.values.size();
  const auto s = static_cast<Eigen::Index>(lattice_.index(src));
  AmplitudeGrid grid{lattice_, src, t, {}};
  grid.values.reserve(static_cast<std::size_t>(M));
  for (Eigen::Index d = 0; d < M; ++d) {
    ComplexKahan sum;
    for (Eigen::Index k = 0; k < M; ++k) {
      sum.add(eigen_.vectors(s, k) * eigen_.vectors(d, k) * std::polar(1.0, -t.value() * eigen_.values(k)));
    }
    grid.values.push_back(sum.value());
  }
  return grid;
}

AmplitudeGrid propagate_oracle(const Site& src, const Time& t, const ModelParams& p) {
  return OraclePropagator(assemble(p)).row(src, t);
}

std::vector<AmplitudeRecord> amplitude_timeseries(const SpectralModel& model, const Site& src,
                                                  std::span<const Site> dsts,
                                                  std::span<const Time> times) {
  std::vector<AmplitudeRecord> out;
  out.reserve(dsts.size() * times.size());
  for (const Time& t : times) {
    const AmplitudeGrid row = spectral_row(model, src, t);
    for (const Site& d : dsts) out.push_back({d, t, row.at(d)});
  }
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, std::span<const AmplitudeRecord> records) {
  os << "i,j,t,re,im,abs\n";
  for (const auto& r : records) {
    os << r.site.i << ',' << r.site.j << ',' << format_double(r.time.value()) << ','
       << format_double(r.value.real()) << ',' << format_double(r.value.imag()) << ','
       << format_double(std::abs(r.value)) << '\n';
  }
}

nlohmann::json to_json(std::span<const AmplitudeRecord> records) {
  auto arr = nlohmann::json::array();
  for (const auto& r : records) {
    arr.push_back({{"site", site_json(r.site)},
                   {"t", r.time.value()},
                   {"time", r.time.label()},
                   {"re", r.value.real()},
                   {"im", r.value.imag()},
                   {"abs", std::abs(r.value)}});
  }
  return arr;
}

std::vector<AmplitudeRecord> records_from_json(const nlohmann::json& j) {
  std::vector<AmplitudeRecord> out;
  for (const auto& e : j) {
    out.push_back({{e.at("site").at(0).get<int>(), e.at("site").at(1).get<int>()},
                   Time::parse(e.at("time").get<std::string>()),
                   {e.at("re").get<double>(), e.at("im").get<double>()}});
  }
  return out;
}

nlohmann::json to_json(const AmplitudeGrid& grid) {
  nlohmann::json j;
  j["source"] = site_json(grid.source);
  j["time"] = grid.time.value();
  j["time_over_pi"] = grid.time.symbolic() ? nlohmann::json(to_string(grid.time.over_pi())) : nlohmann::json(nullptr);
  auto values = nlohmann::json::array();
  for (std::size_t k = 0; k < grid.values.size(); ++k) {
    const Amplitude& v = grid.values[k];
    values.push_back({{"site", site_json(grid.lattice.site(k))},
                      {"re", v.real()},
                      {"im", v.imag()},
                      {"modulus", std::abs(v)}});
  }
  j["values"] = std::move(values);
  return j;
}

}  // namespace dhl
