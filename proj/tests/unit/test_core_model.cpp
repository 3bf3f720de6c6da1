// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "polariton/core_model.hpp"

using namespace polariton;

TEST_CASE("collective coupling from density and v_tilde") {
  ModelParams p;
  p.v_tilde = 3.56e-3;
  p.number_density = 1500.0;
  CHECK(p.coupling() == doctest::Approx(0.137879).epsilon(1e-5));
  CHECK(p.rabi_splitting() == doctest::Approx(2.0 * p.coupling()));

  p.v_tilde = 4.06e-14;
  p.number_density = 1.15e25;
  CHECK(p.coupling() == doctest::Approx(0.1376813).epsilon(1e-6));
}

TEST_CASE("N V^2 equals g^2 for any volume") {
  ModelParams p;
  p.v_tilde = 4.06e-14;
  p.number_density = 1.15e25;
  p.n_molecules = 1500;
  const double v = p.per_molecule_coupling();
  CHECK(1500.0 * v * v == doctest::Approx(p.coupling() * p.coupling()).epsilon(1e-12));
}

TEST_CASE("params_for_coupling round-trips g") {
  const ModelParams p = params_for_coupling(0.1379, 50, 2.0, 2.0, 0.05);
  CHECK(p.coupling() == doctest::Approx(0.1379).epsilon(1e-14));
  CHECK(p.volume() == doctest::Approx(1.0));
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("validate names the violated invariant") {
  ModelParams p;
  p.sigma = -1.0;
  CHECK_THROWS_WITH_AS(p.validate(), "sigma >= 0", InvalidParameter);
  p = ModelParams{};
  p.n_molecules = 0;
  CHECK_THROWS_WITH_AS(p.validate(), "n_molecules >= 1", InvalidParameter);
  p = ModelParams{};
  p.gamma_c = -0.1;
  CHECK_THROWS_AS(p.validate(), InvalidParameter);
  p = ModelParams{};
  p.number_density = 0.0;
  CHECK_THROWS_AS(p.validate(), InvalidParameter);
  p = ModelParams{};
  p.eps_a = std::nan("");
  CHECK_THROWS_AS(p.validate(), InvalidParameter);
}

TEST_CASE("realization validation") {
  DisorderRealization r;
  r.xi = {0.0, 0.1};
  CHECK_NOTHROW(r.validate(2));
  CHECK_THROWS_AS(r.validate(3), InvalidParameter);
  r.theta = std::vector<double>{0.0, 1.0};
  CHECK_THROWS_AS(r.validate(2), InvalidParameter);  // z missing
  r.z = std::vector<double>{0.5, 0.5};
  CHECK(r.is_model2());
  CHECK_NOTHROW(r.validate(2));
}

TEST_CASE("Model II couplings follow cos(theta) sin(pi z)") {
  ModelParams p = params_for_coupling(0.2, 2, 2.0, 2.0, 0.0);
  DisorderRealization r;
  r.xi = {0.0, 0.0};
  r.theta = std::vector<double>{0.0, std::numbers::pi / 3.0};
  r.z = std::vector<double>{0.5, 1.0 / 6.0};
  const double v = p.per_molecule_coupling();

  p.model2_coupling = Model2Coupling::Raw;
  auto c = couplings(r, p);
  CHECK(c[0] == doctest::Approx(v));
  CHECK(c[1] == doctest::Approx(v * 0.5 * 0.5));

  p.model2_coupling = Model2Coupling::Renormalized;
  c = couplings(r, p);
  CHECK(c[0] == doctest::Approx(v * std::sqrt(6.0)));

  r.theta.reset();
  r.z.reset();
  c = couplings(r, p);
  CHECK(c[0] == doctest::Approx(v));
  CHECK(c[1] == doctest::Approx(v));
}

TEST_CASE("site energies add the mean") {
  ModelParams p;
  p.eps_a = 2.1;
  DisorderRealization r;
  r.xi = {-0.1, 0.0, 0.25};
  const auto e = site_energies(r, p);
  CHECK(e[0] == doctest::Approx(2.0));
  CHECK(e[2] == doctest::Approx(2.35));
}

TEST_CASE("grid and trapezoid integration") {
  SpectralGrid g{0.0, 1.0, 11, 1e-3};
  CHECK(g.step() == doctest::Approx(0.1));
  CHECK(g.omega(10) == 1.0);
  CHECK(g.points().size() == 11);

  Spectrum s;
  s.omega = g.points();
  for (double w : s.omega) s.value.push_back(3.0 * w + 1.0);
  CHECK(integrate(s) == doctest::Approx(2.5));
  CHECK(integrate(s, 0.2, 0.6) == doctest::Approx(0.88).epsilon(1e-12));

  SpectralGrid bad{1.0, 0.5, 11, 1e-3};
  CHECK_THROWS_AS(bad.validate(), InvalidParameter);
  bad = SpectralGrid{0.0, 1.0, 1, 1e-3};
  CHECK_THROWS_AS(bad.validate(), InvalidParameter);
}
