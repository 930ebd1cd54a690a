#pragma once

#include "dhl/bivariate.hpp"
#include "dhl/jacobi.hpp"
#include "dhl/lattice.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <complex>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dhl {

using Amplitude = std::complex<double>;

// Evolution time in units with hbar = 1. Either an exact rational multiple of
// pi (phases are then reduced exactly) or a plain real.
class Time {
 public:
  Time() = default;
  static Time pi_multiple(Rational tau);
  static Time real(double t);

  // "p/q" or "p/q pi" / "3pi" → multiple of pi; "2.5", "3" → plain real.
  static Time parse(std::string_view text);

  bool symbolic() const noexcept { return symbolic_; }
  // Throws std::logic_error for plain-real times.
  const Rational& over_pi() const;
  double value() const noexcept { return value_; }
  // The text parse() accepts for this time.
  std::string label() const;

  Time operator-() const;
  friend Time operator+(const Time& l, const Time& r);

 private:
  bool symbolic_ = true;
  Rational tau_{0};
  double value_ = 0.0;
};

// exp(-i T λ) for an exact eigenvalue λ.
Amplitude phase(const Rational& lambda, const Time& t);

// Transition amplitudes from one source to every site at one time.
struct AmplitudeGrid {
  Triangle lattice{1};
  Site source;
  Time time;
  std::vector<Amplitude> values;  // Triangle site order

  Amplitude at(const Site& s) const { return values.at(lattice.index(s)); }
  double total_probability() const;
};

// f_{src,dst}(T) = sum over the grid (y outer, x inner) of
// W_src(x,y) W_dst(x,y) exp(-i T λ_{x,y}), compensated.
Amplitude propagate_spectral(const SpectralModel& model, const Site& src, const Site& dst, const Time& t);

AmplitudeGrid spectral_row(const SpectralModel& model, const Site& src, const Time& t);

// Full propagator exp(-i T H) in the site basis.
Eigen::MatrixXcd spectral_propagator(const SpectralModel& model, const Time& t);

// exp(-i T H) from a numerical diagonalization of the assembled Hamiltonian;
// shares nothing with the analytic eigensystem.
class OraclePropagator {
 public:
  explicit OraclePropagator(const Hamiltonian& h);

  const SymmetricEigen& eigen() const noexcept { return eigen_; }
  AmplitudeGrid row(const Site& src, const Time& t) const;
  Eigen::MatrixXcd matrix(const Time& t) const;

 private:
  Triangle lattice_;
  SymmetricEigen eigen_;
};

AmplitudeGrid propagate_oracle(const Site& src, const Time& t, const ModelParams& p);

struct AmplitudeRecord {
  Site site;
  Time time;
  Amplitude value;
};

// Time outer, destination inner, both in input order.
std::vector<AmplitudeRecord> amplitude_timeseries(const SpectralModel& model, const Site& src,
                                                  std::span<const Site> dsts,
                                                  std::span<const Time> times);

// Header "i,j,t,re,im,abs", 17 significant digits.
void write_csv(std::ostream& os, std::span<const AmplitudeRecord> records);
nlohmann::json to_json(std::span<const AmplitudeRecord> records);
std::vector<AmplitudeRecord> records_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AmplitudeGrid& grid);

// printf("%.17g")
std::string format_double(double v);

}  // namespace dhl
