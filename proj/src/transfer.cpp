#include "dhl/transfer.hpp"

#include "dhl/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dhl {

namespace {

nlohmann::json site_json(const Site& s) { return nlohmann::json::array({s.i, s.j}); }

// distance of theta from the nearest multiple of 2 pi
double phase_distance(double theta) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double r = std::remainder(theta, two_pi);
  return std::abs(r);
}

constexpr double kNumericPhaseTolerance = 1e-9;

bool is_even_integer(const Rational& r) { return floor_mod(r, Rational(2)) == 0; }

}  // namespace

std::string to_string(Family f) { return f == Family::odd_period ? "odd-period" : "even-period"; }

std::string to_string(TransferKind k) {
  switch (k) {
    case TransferKind::pst:
      return "PST";
    case TransferKind::fr:
      return "FR";
    case TransferKind::none:
      break;
  }
  return "none";
}

FamilyParams family_params(const PstFamilySpec& spec, int N) {
  if (spec.k < 1) throw std::invalid_argument("family parameter k must be positive");
  if (spec.p < 0 || spec.q < 0) throw std::invalid_argument("family parameters p, q must be nonnegative");
  FamilyParams out;
  ModelParams& mp = out.params;
  mp.N = N;
  if (spec.family == Family::odd_period) {
    mp.a = Rational(2 * spec.p + 1, 2 * spec.k + 1);
    mp.b = Rational(2 * spec.q, 2 * spec.k + 1);
    out.period = Time::pi_multiple(Rational(2 * spec.k + 1));
  } else {
    mp.a = Rational(spec.p, spec.k);
    mp.b = Rational(2 * spec.q + 1, 2 * spec.k);
    out.period = Time::pi_multiple(Rational(2 * spec.k));
  }
  mp.c = mp.b / 2 - N + Rational(1, 2);
  if (mp.b != 2 * mp.c + 2 * N - 1) throw std::logic_error("family_params: b != 2c + 2N - 1");
  out.violations = validate_params(mp).violations;
  return out;
}

std::optional<PstFamilySpec> family_membership(const ModelParams& p) {
  using boost::multiprecision::cpp_int;
  if (p.c != p.b / 2 - p.N + Rational(1, 2)) return std::nullopt;
  const cpp_int bound = denominator(p.a) * denominator(p.b) * 2 + 1;
  if (bound > 100000) return std::nullopt;
  const int kmax = bound.convert_to<int>();
  for (int k = 1; k <= kmax; ++k) {
    // odd period
    const Rational two_p_plus_1 = p.a * (2 * k + 1);
    const Rational two_q = p.b * (2 * k + 1);
    if (is_integer(two_p_plus_1) && is_integer(two_q) && !is_even_integer(two_p_plus_1) &&
        is_even_integer(two_q) && two_p_plus_1 >= 1 && two_q >= 0) {
      const int pp = ((numerator(two_p_plus_1) - 1) / 2).convert_to<int>();
      const int qq = (numerator(two_q) / 2).convert_to<int>();
      return PstFamilySpec{Family::odd_period, k, pp, qq};
    }
  }
  for (int k = 1; k <= kmax; ++k) {
    const Rational pp = p.a * k;
    const Rational two_q_plus_1 = p.b * (2 * k);
    if (is_integer(pp) && is_integer(two_q_plus_1) && !is_even_integer(two_q_plus_1) && pp >= 0 &&
        two_q_plus_1 >= 1) {
      return PstFamilySpec{Family::even_period, k, numerator(pp).convert_to<int>(),
                           ((numerator(two_q_plus_1) - 1) / 2).convert_to<int>()};
    }
  }
  return std::nullopt;
}

bool x_phase_trivial(const ModelParams& p, const Time& t) {
  for (int x = 0; x <= p.N; ++x) {
    const Rational e = Rational(x) * (x + p.a);
    if (t.symbolic()) {
      if (!is_even_integer(t.over_pi() * e)) return false;
    } else if (phase_distance(t.value() * to_double(e)) > kNumericPhaseTolerance) {
      return false;
    }
  }
  return true;
}

bool y_phase_alternating(const ModelParams& p, const Time& t) {
  for (int y = 0; y <= p.N; ++y) {
    const Rational e = Rational(y) * (y + p.b);
    if (t.symbolic()) {
      if (!is_even_integer(t.over_pi() * e - y)) return false;
    } else if (phase_distance(t.value() * to_double(e) - y * std::numbers::pi) > kNumericPhaseTolerance) {
      return false;
    }
  }
  return true;
}

bool check_phase_condition(const ModelParams& p, const Time& t) {
  return x_phase_trivial(p, t) && y_phase_alternating(p, t);
}

Rational endpoint_amplitude_squared(const ModelParams& p) {
  const int N = p.N;
  Rational num = 1;
  Rational den = 1;
  const Rational half = (p.b + 1) / 2;
  for (int k = 0; k < N; ++k) {
    num *= (p.c + N + k) * (p.b + 1 - p.c - N + k);
    den *= (half + k) * (half + k);
  }
  if (den == 0) throw PoleError("endpoint amplitude: ((b+1)/2)_N vanishes");
  return num / den;
}

double endpoint_amplitude_closed_form(const ModelParams& p) {
  const Rational sq = endpoint_amplitude_squared(p);
  if (sq < 0) {
    throw ParameterError("endpoint amplitude: negative radicand " + to_string(sq));
  }
  return std::sqrt(to_double(sq));
}

TransferReport certify_pst(const SpectralModel& model, const Time& t, double tol) {
  const Triangle& lat = model.lattice();
  const Eigen::MatrixXcd U = spectral_propagator(model, t);
  TransferReport r;
  r.source = {0, 0};
  r.time = t;
  r.phase_condition_satisfied = check_phase_condition(model.params(), t);
  r.min_modulus = lat.count() ? 1e300 : 0.0;
  for (std::size_t k = 0; k < lat.count(); ++k) {
    const Site s = lat.site(k);
    const Site m = lat.mirror(s);
    const double mod = std::abs(U(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(lat.index(m))));
    r.entries.push_back({s, m, mod});
    r.min_modulus = std::min(r.min_modulus, mod);
  }
  const auto src = static_cast<Eigen::Index>(lat.index(Site{0, 0}));
  KahanSum col;
  for (int j = 0; j <= model.size(); ++j) {
    col += std::norm(U(src, static_cast<Eigen::Index>(lat.index(Site{0, j}))));
  }
  r.column_probability = col.value();
  r.kind = r.min_modulus >= 1.0 - tol ? TransferKind::pst : TransferKind::none;
  return r;
}

TransferReport detect_fractional_revival(const SpectralModel& model, const Time& t, double tol) {
  const AmplitudeGrid row = spectral_row(model, {0, 0}, t);
  TransferReport r;
  r.source = {0, 0};
  r.time = t;
  // the half-period hypothesis: x-phases trivial, y-phases not alternating
  r.phase_condition_satisfied =
      x_phase_trivial(model.params(), t) && !y_phase_alternating(model.params(), t);
  KahanSum col;
  int supported = 0;
  r.min_modulus = 1e300;
  for (int j = 0; j <= model.size(); ++j) {
    const double mod = std::abs(row.at({0, j}));
    r.entries.push_back({{0, j}, std::nullopt, mod});
    r.min_modulus = std::min(r.min_modulus, mod);
    col += mod * mod;
    if (mod >= tol) ++supported;
  }
  r.column_probability = col.value();
  r.kind = (r.column_probability >= 1.0 - tol && supported >= 2) ? TransferKind::fr : TransferKind::none;
  return r;
}

nlohmann::json to_json(const TransferReport& r) {
  nlohmann::json j;
  j["kind"] = to_string(r.kind);
  j["source"] = site_json(r.source);
  j["time"] = r.time.value();
  j["time_over_pi"] = r.time.symbolic() ? nlohmann::json(to_string(r.time.over_pi())) : nlohmann::json(nullptr);
  j["phase_condition"] = r.phase_condition_satisfied;
  auto pairs = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json p{{"site", site_json(e.site)}, {"modulus", e.modulus}};
    if (e.mirror) p["mirror"] = site_json(*e.mirror);
    pairs.push_back(std::move(p));
  }
  j["pairs"] = std::move(pairs);
  j["column_probability"] = r.column_probability;
  j["min_modulus"] = r.min_modulus;
  return j;
}

double max_cross_column_amplitude(const Eigen::MatrixXcd& propagator, const Triangle& lattice) {
  double worst = 0.0;
  for (std::size_t s = 0; s < lattice.count(); ++s) {
    for (std::size_t d = 0; d < lattice.count(); ++d) {
      if (lattice.site(s).i == lattice.site(d).i) continue;
      worst = std::max(worst, std::abs(propagator(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(d))));
    }
  }
  return worst;
}

std::vector<ScanRow> scan_families(const ScanBounds& bounds) {
  std::vector<ScanRow> rows;
  for (Family family : bounds.families) {
    for (int k = 1; k <= bounds.k_max; ++k) {
      for (int p = 1; p <= bounds.p_max; ++p) {
        for (int q = 1; q <= bounds.q_max; ++q) {
          const PstFamilySpec spec{family, k, p, q};
          FamilyParams fp = family_params(spec, bounds.N);
          if (!fp.accepted()) continue;
          const SpectralModel model(fp.params);
          const Eigen::MatrixXcd U = spectral_propagator(model, fp.period);
          const Triangle& lat = model.lattice();
          double min_mirror = 1e300;
          for (std::size_t s = 0; s < lat.count(); ++s) {
            const auto m = lat.index(lat.mirror(lat.site(s)));
            min_mirror = std::min(min_mirror, std::abs(U(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(m))));
          }
          ScanRow row{spec, fp.params, fp.period, check_phase_condition(fp.params, fp.period), false,
                      min_mirror, max_cross_column_amplitude(U, lat)};
          row.pst = min_mirror >= 1.0 - bounds.tol;
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

nlohmann::json to_json(const ScanRow& row) {
  return {{"family", to_string(row.spec.family)},
          {"k", row.spec.k},
          {"p", row.spec.p},
          {"q", row.spec.q},
          {"a", to_string(row.params.a)},
          {"b", to_string(row.params.b)},
          {"c", to_string(row.params.c)},
          {"N", row.params.N},
          {"time_over_pi", to_string(row.period.over_pi())},
          {"phase_condition", row.phase_condition},
          {"pst", row.pst},
          {"min_mirror_modulus", row.min_mirror_modulus},
          {"max_cross_column", row.max_cross_column}};
}

}  // namespace dhl
