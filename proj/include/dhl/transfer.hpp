#pragma once

#include "dhl/bivariate.hpp"
#include "dhl/dynamics.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dhl {

// odd_period:  a = (2p+1)/(2k+1), b = 2q/(2k+1),   T = (2k+1) pi
// even_period: a = p/k,           b = (2q+1)/(2k), T = 2k pi
// and in both c = b/2 - N + 1/2.
enum class Family { odd_period, even_period };

std::string to_string(Family f);

struct PstFamilySpec {
  Family family = Family::odd_period;
  int k = 1;
  int p = 0;
  int q = 0;
};

struct FamilyParams {
  ModelParams params;           // always filled, admissible or not
  Time period;                  // the family's transfer time
  std::vector<std::string> violations;

  bool accepted() const noexcept { return violations.empty(); }
};

// Builds the exact parameters of a family member. Inadmissible parameters are
// reported through `violations`, not thrown. k < 1 or p, q < 0 throw
// std::invalid_argument.
FamilyParams family_params(const PstFamilySpec& spec, int N);

// The smallest-k family member reproducing (a, b, c) exactly, if any.
std::optional<PstFamilySpec> family_membership(const ModelParams& p);

// exp(-i T x(x+a)) = 1 for every x = 0..N.
bool x_phase_trivial(const ModelParams& p, const Time& t);
// exp(-i T y(y+b)) = (-1)^y for every y = 0..N.
bool y_phase_alternating(const ModelParams& p, const Time& t);
// Both of the above. Exact for rational multiples of pi, otherwise each phase
// is compared with a tolerance of 1e-9.
bool check_phase_condition(const ModelParams& p, const Time& t);

// |f_{(0,0),(0,N)}|^2 = (c+N, b+1-c-N)_N / ((b+1)/2)_N^2, exact. Valid when the
// phase condition holds.
Rational endpoint_amplitude_squared(const ModelParams& p);
// Its square root; throws ParameterError on a negative value.
double endpoint_amplitude_closed_form(const ModelParams& p);

enum class TransferKind { pst, fr, none };

std::string to_string(TransferKind k);

struct TransferEntry {
  Site site;
  std::optional<Site> mirror;  // set for mirror-pair entries
  double modulus = 0.0;
};

struct TransferReport {
  TransferKind kind = TransferKind::none;
  Site source;
  Time time;
  bool phase_condition_satisfied = false;
  std::vector<TransferEntry> entries;
  double column_probability = 0.0;  // sum_j |f_{(0,0),(0,j)}|^2
  double min_modulus = 0.0;         // over entries
};

// |f_{(i,j),(i,N-i-j)}(T)| for every site; PST iff all are >= 1 - tol.
TransferReport certify_pst(const SpectralModel& model, const Time& t, double tol);

// Amplitudes from (0,0) onto the column i = 0. FR iff the column holds at
// least 1 - tol of the probability and two or more of its sites carry
// modulus >= tol.
TransferReport detect_fractional_revival(const SpectralModel& model, const Time& t, double tol);

// {kind, source, time, time_over_pi, phase_condition, pairs: [{site, mirror?, modulus}],
//  column_probability, min_modulus}
nlohmann::json to_json(const TransferReport& r);

// Largest |f_{(i,j),(k,l)}| with i != k.
double max_cross_column_amplitude(const Eigen::MatrixXcd& propagator, const Triangle& lattice);

struct ScanRow {
  PstFamilySpec spec;
  ModelParams params;
  Time period;
  bool phase_condition = false;
  bool pst = false;
  double min_mirror_modulus = 0.0;
  double max_cross_column = 0.0;
};

struct ScanBounds {
  int N = 6;
  int k_max = 1;
  int p_max = 30;
  int q_max = 20;
  std::vector<Family> families{Family::odd_period, Family::even_period};
  double tol = 1e-6;
};

// Enumerates k = 1..k_max, p = 1..p_max, q = 1..q_max per family, keeps the
// admissible members and certifies each at its period. Rows are in
// enumeration order (family, k, p, q).
std::vector<ScanRow> scan_families(const ScanBounds& bounds);

nlohmann::json to_json(const ScanRow& row);

}  // namespace dhl
