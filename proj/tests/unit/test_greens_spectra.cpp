// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "polariton/ensemble.hpp"
#include "polariton/greens_spectra.hpp"
#include "polariton/oracle.hpp"

using namespace polariton;

namespace {

constexpr double kPi = std::numbers::pi;

DisorderRealization small_realization(const ModelParams& p, std::uint64_t seed) {
  return sample_realization({1, seed, Model::I}, 0, p);
}

}  // namespace

TEST_CASE("partitioned Green's functions equal the dense resolvent") {
  const ModelParams p = params_for_coupling(0.1379, 12, 2.0, 1.98, 0.05);
  const DisorderRealization r = small_realization(p, 77);
  const ArrowMatrix h = make_arrow(r, p);
  const SpectralEvaluator ev(EmpiricalSource{r}, p, 2e-3);
  for (double omega : {1.7, 1.86, 1.95, 2.0, 2.02, 2.15, 2.4}) {
    const DenseResolvent d = dense_resolvent(h, omega, 2e-3);
    const PointValues v = ev.at(omega);
    CAPTURE(omega);
    CHECK(std::abs(v.g_cc - d.g_cc) < 1e-11);
    CHECK(std::abs(v.g_molmol - d.g_molmol) < 1e-11);
    CHECK(std::abs(v.g_cc + v.trace_molecular - d.trace) < 1e-9);
  }
}

TEST_CASE("Model II realization also matches the dense resolvent") {
  ModelParams p = params_for_coupling(0.12, 10, 2.0, 2.0, 0.03);
  p.model2_coupling = Model2Coupling::Raw;
  const DisorderRealization r = sample_realization({1, 5, Model::II}, 0, p);
  const ArrowMatrix h = make_arrow(r, p);
  const SpectralEvaluator ev(EmpiricalSource{r}, p, 1e-3);
  for (double omega : {1.9, 2.0, 2.05}) {
    const DenseResolvent d = dense_resolvent(h, omega, 1e-3);
    const PointValues v = ev.at(omega);
    CHECK(std::abs(v.g_cc - d.g_cc) < 1e-11);
    CHECK(std::abs(v.g_molmol - d.g_molmol) < 1e-10);
  }
}

TEST_CASE("zero disorder: rho_c is two half-weight Lorentzians") {
  const ModelParams p = params_for_coupling(0.1, 100, 2.0, 2.0, 0.0);
  const double eta = 5e-3;
  const SpectralEvaluator ev(AnalyticSource{}, p, eta);
  auto lorentz = [&](double x) { return eta / kPi / (x * x + eta * eta); };
  for (double omega : {1.85, 1.9, 1.97, 2.0, 2.1, 2.3}) {
    const double expected = 0.5 * lorentz(omega - 1.9) + 0.5 * lorentz(omega - 2.1);
    CHECK(ev.rho_c(omega) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("spectral sum rules on one realization") {
  const std::size_t n = 50;
  const ModelParams p = params_for_coupling(0.1379, n, 2.0, 2.0, 0.05);
  const DisorderRealization r = small_realization(p, 3);
  const double eta = 1e-3;
  const double half = 20.0 * 0.1379;
  const SpectralGrid grid{2.0 - half, 2.0 + half, 55161, eta};
  const EmpiricalSource src{r};
  const double deficit = lorentzian_tail_deficit(half - 0.3, eta);
  CHECK(integrate(rho_c(grid, src, p)) == doctest::Approx(1.0).epsilon(2.0 * deficit + 1e-5));
  CHECK(integrate(rho_mol(grid, src, p)) == doctest::Approx(1.0).epsilon(2.0 * deficit + 1e-5));
  CHECK(integrate(rho_t(grid, src, p)) ==
        doctest::Approx(static_cast<double>(n + 1)).epsilon(2.0 * deficit + 1e-5));
  CHECK(integrate(rho_t(grid, src, p, RhoTScale::PerMolecule)) ==
        doctest::Approx(static_cast<double>(n + 1) / n).epsilon(2.0 * deficit + 1e-5));
}

TEST_CASE("analytic rho_c and rho_mol carry unit weight") {
  const ModelParams p = params_for_coupling(0.1379, 1500, 2.0, 2.0, 0.08);
  const SpectralGrid grid{-1.0, 5.0, 120001, 1e-3};
  const double deficit = lorentzian_tail_deficit(2.8, 1e-3);
  CHECK(integrate(rho_c(grid, AnalyticSource{}, p)) ==
        doctest::Approx(1.0 - deficit).epsilon(1e-4));
  CHECK(integrate(rho_mol(grid, AnalyticSource{}, p)) ==
        doctest::Approx(1.0 - deficit).epsilon(1e-4));
}

TEST_CASE("spectra are nonnegative") {
  ModelParams p = params_for_coupling(0.1379, 1500, 2.1, 2.0, 0.05);
  p.gamma_a = 1e-3;
  p.gamma_c = 2e-2;
  const SpectralGrid grid{1.5, 2.5, 801, 1e-3};
  for (SpectrumKind k : {SpectrumKind::RhoC, SpectrumKind::RhoMol, SpectrumKind::RhoT,
                         SpectrumKind::Absorption}) {
    const Spectrum s = compute_spectrum(k, grid, AnalyticSource{}, p);
    CAPTURE(to_string(k));
    CHECK(*std::min_element(s.value.begin(), s.value.end()) >= 0.0);
  }
}

TEST_CASE("rho_T splits into bare band plus Delta rho_T") {
  const ModelParams p = params_for_coupling(0.1379, 40, 2.0, 2.0, 0.05);
  const DisorderRealization r = small_realization(p, 9);
  const double eta = 2e-3;
  const SpectralEvaluator ev(EmpiricalSource{r}, p, eta);
  const auto eps = site_energies(r, p);
  for (double omega : {1.8, 1.95, 2.0, 2.03, 2.2}) {
    double bare = 0.0;
    for (double e : eps) bare += eta / kPi / ((omega - e) * (omega - e) + eta * eta);
    const double t = ev.value(SpectrumKind::RhoT, omega);
    const double dt = ev.value(SpectrumKind::DeltaRhoT, omega);
    const double dm = ev.value(SpectrumKind::DeltaRhoM, omega);
    CHECK(t == doctest::Approx(bare + dt).epsilon(1e-10));
    CHECK(dt == doctest::Approx(ev.rho_c(omega) + dm).epsilon(1e-12));
  }
}

TEST_CASE("analytic Delta rho_M conserves molecular weight") {
  const ModelParams p = params_for_coupling(0.1379, 1500, 2.0, 2.0, 0.03);
  const SpectralGrid grid{1.0, 3.0, 40001, 1e-3};
  const Spectrum dm = delta_rho_m(grid, AnalyticSource{}, p);
  const Spectrum c = rho_c(grid, AnalyticSource{}, p);
  // The cavity adds one state; molecular weight only moves around.
  CHECK(integrate(dm) == doctest::Approx(0.0).epsilon(2e-3));
  CHECK(integrate(dm) + integrate(c) == doctest::Approx(1.0).epsilon(2e-3));
}

TEST_CASE("analytic Model II source is Model I with g^2/6") {
  ModelParams p = params_for_coupling(0.1379, 1500, 2.0, 2.0, 0.05);
  p.model2_coupling = Model2Coupling::Raw;
  ModelParams q = p;
  q.v_tilde /= std::sqrt(6.0);
  const SpectralEvaluator a(AnalyticSource{Model::II}, p, 1e-3);
  const SpectralEvaluator b(AnalyticSource{Model::I}, q, 1e-3);
  for (double omega : {1.9, 2.0, 2.04}) {
    CHECK(a.rho_c(omega) == doctest::Approx(b.rho_c(omega)).epsilon(1e-13));
  }
}

TEST_CASE("absorption prefactors and absolute units") {
  ModelParams p = params_for_coupling(0.1379, 1500, 2.0, 2.0, 0.05);
  const SpectralEvaluator ev(AnalyticSource{}, p, 1e-3);
  const double omega = 2.05;
  const double rho = ev.value(SpectrumKind::RhoMol, omega);

  SpectrumOptions o;
  CHECK(ev.value(SpectrumKind::Absorption, omega, o) == doctest::Approx(rho));
  o.absorption_model = Model::II;
  CHECK(ev.value(SpectrumKind::Absorption, omega, o) == doctest::Approx(rho / 6.0));

  o.absorption_model = Model::I;
  o.absorption_units = AbsorptionUnits::Absolute;
  CHECK_THROWS_AS((void)ev.value(SpectrumKind::Absorption, omega, o), InvalidParameter);

  p.mu_eg = 10.0;
  const SpectralEvaluator ev_mu(AnalyticSource{}, p, 1e-3);
  // SI: alpha = pi w N mu^2 rho_w/(eps0 c hbar), w in rad/s, rho_w per rad/s.
  const double hbar_js = units::hbar_eVs * units::elementary_charge;
  const double w = omega / units::hbar_eVs;
  const double rho_w = rho * units::hbar_eVs;
  const double mu = 10.0 * units::debye;
  const double expected = kPi * w * 1500.0 * mu * mu * rho_w /
                          (units::vacuum_permittivity * units::speed_of_light * hbar_js);
  CHECK(ev_mu.value(SpectrumKind::Absorption, omega, o) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("Green's function edge cases") {
  const ModelParams p = params_for_coupling(0.1, 10, 2.0, 2.0, 0.0);
  const SelfEnergyValue zero{2.0, 0.0, 0.0, {}};
  CHECK_THROWS_AS((void)g_cc(2.0, zero, p, 0.0), SingularityError);
  CHECK_THROWS_AS((void)g_cc(2.0, zero, p, -1.0), DomainError);
  CHECK(std::abs(g_cc(2.1, zero, p, 0.0) - cplx(10.0, 0.0)) < 1e-12);
  CHECK_THROWS_AS((void)g_molmol(zero, cplx(1.0), 0.0), DomainError);

  ModelParams uncoupled = p;
  uncoupled.v_tilde = 0.0;
  DisorderRealization r;
  r.xi.assign(10, 0.0);
  const SpectralEvaluator ev(EmpiricalSource{r}, uncoupled, 1e-3);
  CHECK_THROWS_AS((void)ev.value(SpectrumKind::RhoMol, 2.0), DomainError);
  CHECK(ev.rho_c(2.0) == doctest::Approx(1.0 / (kPi * 1e-3)));

  CHECK_THROWS_AS(SpectralEvaluator(AnalyticSource{}, p, -1e-3), DomainError);
}

TEST_CASE("spectrum kind names round-trip") {
  for (SpectrumKind k : {SpectrumKind::RhoC, SpectrumKind::RhoMol, SpectrumKind::RhoT,
                         SpectrumKind::DeltaRhoM, SpectrumKind::DeltaRhoT,
                         SpectrumKind::Absorption}) {
    CHECK(parse_spectrum_kind(to_string(k)) == k);
  }
  CHECK_THROWS_AS((void)parse_spectrum_kind("rho_x"), InvalidParameter);
}

TEST_CASE("Lorentzian tail deficit") {
  CHECK(lorentzian_tail_deficit(0.0, 1e-3) == doctest::Approx(1.0));
  CHECK(lorentzian_tail_deficit(10.0, 1e-3) == doctest::Approx(2e-3 / (kPi * 10.0)).epsilon(1e-6));
  CHECK_THROWS_AS((void)lorentzian_tail_deficit(1.0, 0.0), DomainError);
}

TEST_CASE("spectra are identical for any thread count") {
  const ModelParams p = params_for_coupling(0.1379, 300, 2.0, 2.0, 0.05);
  const DisorderRealization r = small_realization(p, 12);
  const SpectralGrid grid{1.6, 2.4, 257, 1e-3};
  setenv("POLARITON_LAB_THREADS", "1", 1);
  const Spectrum a = rho_t(grid, EmpiricalSource{r}, p);
  setenv("POLARITON_LAB_THREADS", "3", 1);
  const Spectrum b = rho_t(grid, EmpiricalSource{r}, p);
  unsetenv("POLARITON_LAB_THREADS");
  CHECK(a.value == b.value);
  CHECK(a.label == "rho_t:empirical");
}
