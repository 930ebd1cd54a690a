#include "dhl/errors.hpp"
#include "dhl/transfer.hpp"
#include "fixtures.hpp"
#include "oracle/exact.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using dhl::Family;
using dhl::ModelParams;
using dhl::PstFamilySpec;
using dhl::Rational;
using dhl::Site;
using dhl::Time;
using dhl::TransferKind;

TEST_SUITE("transfer") {
  TEST_CASE("family parameter examples") {
    const auto odd = dhl::family_params({Family::odd_period, 1, 26, 17}, 6);
    CHECK(odd.accepted());
    CHECK(odd.params.a == Rational(53, 3));
    CHECK(odd.params.b == Rational(34, 3));
    CHECK(odd.params.c == Rational(1, 6));
    CHECK(odd.period.over_pi() == 3);

    const auto even = dhl::family_params({Family::even_period, 1, 19, 11}, 6);
    CHECK(even.accepted());
    CHECK(even.params.a == 19);
    CHECK(even.params.b == Rational(23, 2));
    CHECK(even.params.c == Rational(1, 4));
    CHECK(even.period.over_pi() == 2);

    const auto tiny = dhl::family_params({Family::odd_period, 1, 0, 0}, 6);
    CHECK_FALSE(tiny.accepted());
    bool mentions_ab = false;
    for (const auto& v : tiny.violations) mentions_ab |= v.find("a - b > N") != std::string::npos;
    CHECK(mentions_ab);

    CHECK_THROWS_AS(dhl::family_params({Family::odd_period, 0, 5, 5}, 6), std::invalid_argument);
    CHECK_THROWS_AS(dhl::family_params({Family::even_period, 1, -1, 5}, 6), std::invalid_argument);
  }

  TEST_CASE("family members satisfy b = 2c + 2N - 1 and the phase condition") {
    long admissible = 0;
    for (int N = 1; N <= 6; ++N) {
      for (auto fam : {Family::odd_period, Family::even_period}) {
        for (int k = 1; k <= 2; ++k) {
          for (int p = 0; p <= 60; ++p) {
            for (int q = 0; q <= 60; ++q) {
              const auto fp = dhl::family_params({fam, k, p, q}, N);
              const ModelParams& m = fp.params;
              CHECK(m.b == 2 * m.c + 2 * N - 1);
              if (!fp.accepted()) continue;
              ++admissible;
              if (!dhl::check_phase_condition(m, fp.period)) {
                FAIL("phase condition fails for " << dhl::to_string(fam) << " k=" << k << " p=" << p
                                                  << " q=" << q << " N=" << N);
              }
            }
          }
        }
      }
    }
    CHECK(admissible > 10000);
  }

  TEST_CASE("membership is solved exactly") {
    const auto f1 = dhl::family_membership(fixtures::figure1());
    REQUIRE(f1);
    CHECK(f1->family == Family::odd_period);
    CHECK(f1->k == 1);
    CHECK(f1->p == 26);
    CHECK(f1->q == 17);
    const auto f2 = dhl::family_membership(fixtures::figure2());
    REQUIRE(f2);
    CHECK(f2->family == Family::even_period);
    CHECK(f2->k == 1);
    CHECK(f2->p == 19);
    CHECK(f2->q == 11);
    CHECK_FALSE(dhl::family_membership(fixtures::generic(5)));
    CHECK_FALSE(dhl::family_membership(ModelParams::parse("53/3", "34/3", "4/15", 6)));
    // a k = 2 member comes back with its own indices
    const auto fp = dhl::family_params({Family::odd_period, 2, 48, 31}, 6);
    const auto back = dhl::family_membership(fp.params);
    REQUIRE(back);
    CHECK(back->k == 2);
    CHECK(back->p == 48);
    CHECK(back->q == 31);
  }

  TEST_CASE("phase condition examples") {
    CHECK(dhl::check_phase_condition(fixtures::figure1(), Time::pi_multiple(3)));
    CHECK(dhl::check_phase_condition(fixtures::figure2(), Time::pi_multiple(2)));
    CHECK_FALSE(dhl::check_phase_condition(fixtures::figure1(), Time::pi_multiple(0)));
    CHECK(dhl::x_phase_trivial(fixtures::figure1(), Time::pi_multiple(0)));
    CHECK_FALSE(dhl::y_phase_alternating(fixtures::figure1(), Time::pi_multiple(0)));
    CHECK_FALSE(dhl::check_phase_condition(fixtures::figure1(), Time::pi_multiple(1)));
    CHECK_FALSE(dhl::check_phase_condition(fixtures::generic(4), Time::pi_multiple(3)));
    // figure 2 at half period: x-phases trivial, y-phases not alternating
    CHECK(dhl::x_phase_trivial(fixtures::figure2(), Time::pi_multiple(1)));
    CHECK_FALSE(dhl::y_phase_alternating(fixtures::figure2(), Time::pi_multiple(1)));
    // numeric path
    CHECK(dhl::check_phase_condition(fixtures::figure1(), Time::real(3 * std::numbers::pi)));
    CHECK_FALSE(dhl::check_phase_condition(fixtures::figure1(), Time::real(3 * std::numbers::pi + 1e-3)));
  }

  TEST_CASE("endpoint closed form") {
    CHECK(dhl::endpoint_amplitude_squared(fixtures::figure1()) == 1);
    CHECK(dhl::endpoint_amplitude_squared(fixtures::figure2()) == 1);
    CHECK(dhl::endpoint_amplitude_closed_form(fixtures::figure1()) == 1.0);

    // perturbed c: exact value from the rational oracle
    const ModelParams p = ModelParams::parse("53/3", "34/3", "4/15", 6);
    const Rational exact = oracle::rising(p.c + p.N, p.N) * oracle::rising(p.b + 1 - p.c - p.N, p.N) /
                           (oracle::rising((p.b + 1) / 2, p.N) * oracle::rising((p.b + 1) / 2, p.N));
    CHECK(exact == Rational(dhl::parse_rational("12633780629968968749154304/12645202119461431884765625")));
    CHECK(dhl::endpoint_amplitude_squared(p) == exact);
    const double closed = dhl::endpoint_amplitude_closed_form(p);
    CHECK(closed < 1.0);
    CHECK(closed == doctest::Approx(0.99954828441650458056).epsilon(1e-15));
    const dhl::SpectralModel model(p);
    const Time T = Time::pi_multiple(3);
    REQUIRE(dhl::check_phase_condition(p, T));
    CHECK(std::abs(std::abs(dhl::propagate_spectral(model, {0, 0}, {0, 6}, T)) - closed) <= 1e-8);
  }

  TEST_CASE("closed form tracks the spectral amplitude across family members") {
    for (int q = 14; q <= 20; ++q) {
      const auto fp = dhl::family_params({Family::odd_period, 1, 26, q}, 5);
      if (!fp.accepted()) continue;
      ModelParams p = fp.params;
      p.c += Rational(1, 7);
      if (!dhl::validate_params(p).ok()) continue;
      const dhl::SpectralModel model(p);
      REQUIRE(dhl::check_phase_condition(p, fp.period));
      CHECK(std::abs(std::abs(dhl::propagate_spectral(model, {0, 0}, {0, 5}, fp.period)) -
                     dhl::endpoint_amplitude_closed_form(p)) <= 1e-8);
    }
  }

  TEST_CASE("mirror transfer at figure 1") {
    const dhl::SpectralModel model(fixtures::figure1());
    const auto report = dhl::certify_pst(model, Time::pi_multiple(3), 1e-6);
    CHECK(report.kind == TransferKind::pst);
    CHECK(report.phase_condition_satisfied);
    REQUIRE(report.entries.size() == 28);
    bool seen = false;
    for (const auto& e : report.entries) {
      REQUIRE(e.mirror);
      CHECK(*e.mirror == model.lattice().mirror(e.site));
      CHECK(std::abs(e.modulus - 1.0) <= 1e-6);
      if (e.site == Site{1, 2}) {
        seen = true;
        CHECK(*e.mirror == Site{1, 3});
      }
    }
    CHECK(seen);
    CHECK(report.min_modulus >= 1 - 1e-6);

    const auto json = dhl::to_json(report);
    CHECK(json.at("kind") == "PST");
    CHECK(json.at("time_over_pi") == "3/1");
    CHECK(json.at("pairs").size() == 28);
    CHECK(json.at("pairs")[0].contains("mirror"));
  }

  TEST_CASE("no transfer at zero or at the wrong time") {
    const dhl::SpectralModel model(fixtures::figure1());
    CHECK(dhl::certify_pst(model, Time::pi_multiple(0), 1e-6).kind == TransferKind::none);
    CHECK(dhl::certify_pst(model, Time::pi_multiple(1), 1e-6).kind == TransferKind::none);
    const dhl::SpectralModel generic(fixtures::generic(5));
    CHECK(dhl::certify_pst(generic, Time::pi_multiple(3), 1e-6).kind == TransferKind::none);
  }

  TEST_CASE("fractional revival at figure 2") {
    const dhl::SpectralModel model(fixtures::figure2());
    const auto half = dhl::detect_fractional_revival(model, Time::pi_multiple(1), 1e-6);
    CHECK(half.kind == TransferKind::fr);
    CHECK(std::abs(half.column_probability - 1.0) <= 1e-8);
    int above = 0;
    for (const auto& e : half.entries) {
      CHECK(e.site.i == 0);
      above += e.modulus >= 1e-6;
    }
    CHECK(above >= 2);
    CHECK(half.phase_condition_satisfied);

    const auto full = dhl::detect_fractional_revival(model, Time::pi_multiple(2), 1e-6);
    CHECK(full.kind != TransferKind::fr);
    CHECK(dhl::certify_pst(model, Time::pi_multiple(2), 1e-6).kind == TransferKind::pst);

    const dhl::SpectralModel generic(fixtures::generic(5));
    CHECK(dhl::detect_fractional_revival(generic, Time::pi_multiple(1), 1e-6).kind == TransferKind::none);
  }

  TEST_CASE("column structure under the phase condition") {
    for (const auto& p : {fixtures::figure1(), fixtures::figure2()}) {
      const auto spec = *dhl::family_membership(p);
      const auto fp = dhl::family_params(spec, p.N);
      const dhl::SpectralModel model(p);
      const auto U = dhl::spectral_propagator(model, fp.period);
      CHECK(dhl::max_cross_column_amplitude(U, model.lattice()) <= 1e-8);
      const auto V = dhl::spectral_propagator(model, Time::pi_multiple(Rational(1, 3)));
      CHECK(dhl::max_cross_column_amplitude(V, model.lattice()) > 1e-3);
    }
  }

  TEST_CASE("scan") {
    dhl::ScanBounds tiny;
    tiny.p_max = 2;
    tiny.q_max = 2;
    CHECK(dhl::scan_families(tiny).empty());

    dhl::ScanBounds bounds;
    bounds.families = {Family::odd_period};
    const auto rows = dhl::scan_families(bounds);
    bool fig1 = false;
    for (const auto& r : rows) {
      CHECK(r.pst);
      CHECK(r.phase_condition);
      CHECK(r.min_mirror_modulus >= 1 - bounds.tol);
      if (r.spec.k == 1 && r.spec.p == 26 && r.spec.q == 17) fig1 = true;
    }
    CHECK(fig1);
    REQUIRE_FALSE(rows.empty());
    const auto j = dhl::to_json(rows.front());
    CHECK(j.at("family") == "odd-period");
    CHECK(j.contains("min_mirror_modulus"));
  }
}
