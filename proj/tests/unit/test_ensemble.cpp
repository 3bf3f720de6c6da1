// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "doctest.h"
#include "polariton/ensemble.hpp"

using namespace polariton;

// Known-answer vectors published with the Random123 reference implementation.
TEST_CASE("Philox4x32-10 known answers") {
  using C = Philox4x32::Counter;
  using K = Philox4x32::Key;
  CHECK(Philox4x32::block(C{0, 0, 0, 0}, K{0, 0}) ==
        C{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  CHECK(Philox4x32::block(C{0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                          K{0xffffffffu, 0xffffffffu}) ==
        C{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
  CHECK(Philox4x32::block(C{0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                          K{0xa4093822u, 0x299f31d0u}) ==
        C{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("streams depend only on seed and index") {
  RandomStream a(42, 7);
  RandomStream b(42, 7);
  RandomStream c(42, 8);
  RandomStream d(43, 7);
  bool differ_index = false;
  bool differ_seed = false;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t x = a.next_u64();
    CHECK(x == b.next_u64());
    differ_index = differ_index || x != c.next_u64();
    differ_seed = differ_seed || x != d.next_u64();
  }
  CHECK(differ_index);
  CHECK(differ_seed);
}

TEST_CASE("uniform and normal variates have the right moments") {
  RandomStream s(2024, 0);
  const int n = 200000;
  double um = 0.0, nm = 0.0, n2 = 0.0, n4 = 0.0;
  double umin = 1.0, umax = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform();
    umin = std::min(umin, u);
    umax = std::max(umax, u);
    um += u;
  }
  for (int i = 0; i < n; ++i) {
    const double z = s.normal();
    nm += z;
    n2 += z * z;
    n4 += z * z * z * z;
  }
  CHECK(umin >= 0.0);
  CHECK(umax < 1.0);
  CHECK(um / n == doctest::Approx(0.5).epsilon(0.005));
  CHECK(std::abs(nm / n) < 0.01);
  CHECK(n2 / n == doctest::Approx(1.0).epsilon(0.01));
  CHECK(n4 / n == doctest::Approx(3.0).epsilon(0.03));
}

TEST_CASE("realizations are reproducible and correctly shaped") {
  ModelParams p = params_for_coupling(0.1, 500, 2.0, 2.0, 0.05);
  const EnsembleSpec s1{10, 99, Model::I};
  const DisorderRealization a = sample_realization(s1, 3, p);
  const DisorderRealization b = sample_realization(s1, 3, p);
  CHECK(a.xi == b.xi);
  CHECK_FALSE(a.is_model2());
  CHECK(a.xi.size() == 500);
  double m = 0.0, v = 0.0;
  for (double x : a.xi) m += x;
  m /= 500.0;
  for (double x : a.xi) v += (x - m) * (x - m);
  CHECK(std::sqrt(v / 499.0) == doctest::Approx(0.05).epsilon(0.1));

  const EnsembleSpec s2{10, 99, Model::II};
  const DisorderRealization c = sample_realization(s2, 3, p);
  REQUIRE(c.is_model2());
  CHECK(c.xi == a.xi);  // detunings come first in the stream
  double cos_mean = 0.0, cos2 = 0.0;
  for (std::size_t i = 0; i < 500; ++i) {
    CHECK((*c.theta)[i] >= 0.0);
    CHECK((*c.theta)[i] <= std::numbers::pi);
    CHECK((*c.z)[i] >= 0.0);
    CHECK((*c.z)[i] < 1.0);
    cos_mean += std::cos((*c.theta)[i]);
    cos2 += std::cos((*c.theta)[i]) * std::cos((*c.theta)[i]);
  }
  CHECK(std::abs(cos_mean / 500.0) < 0.1);
  CHECK(cos2 / 500.0 == doctest::Approx(1.0 / 3.0).epsilon(0.15));

  CHECK_THROWS_AS((void)sample_realization(s1, 10, p), InvalidParameter);
  CHECK_THROWS_AS((void)sample_realization({0, 1, Model::I}, 0, p), InvalidParameter);
}

TEST_CASE("ensemble average is bitwise independent of thread count") {
  const ModelParams p = params_for_coupling(0.1379, 120, 2.0, 2.0, 0.08);
  const SpectralGrid grid{1.7, 2.3, 61, 2e-3};
  const EnsembleSpec spec{70, 5, Model::I};
  setenv("POLARITON_LAB_THREADS", "1", 1);
  const EnsembleSpectrum a = ensemble_average(spec, p, grid, SpectrumKind::RhoMol);
  setenv("POLARITON_LAB_THREADS", "4", 1);
  const EnsembleSpectrum b = ensemble_average(spec, p, grid, SpectrumKind::RhoMol);
  unsetenv("POLARITON_LAB_THREADS");
  const EnsembleSpectrum c = ensemble_average(spec, p, grid, SpectrumKind::RhoMol);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(a.mean == c.mean);
  CHECK(a.label == "rho_mol:ensemble");
  CHECK(a.n_realizations == 70);
}

TEST_CASE("one realization without disorder is the closed form") {
  const ModelParams p = params_for_coupling(0.1379, 100, 2.0, 2.0, 0.0);
  const SpectralGrid grid{1.7, 2.3, 121, 1e-3};
  const EnsembleSpectrum e = ensemble_average({1, 0, Model::I}, p, grid, SpectrumKind::RhoC);
  const Spectrum a = rho_c(grid, AnalyticSource{}, p);
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    CHECK(e.mean[i] == doctest::Approx(a.value[i]).epsilon(1e-11));
    CHECK(e.std_error[i] == 0.0);
  }
}

TEST_CASE("standard error shrinks as 1/sqrt(R)") {
  const ModelParams p = params_for_coupling(0.1379, 60, 2.0, 2.0, 0.1);
  const SpectralGrid grid{1.7, 2.3, 31, 5e-3};
  const EnsembleSpectrum a = ensemble_average({1000, 8, Model::I}, p, grid, SpectrumKind::RhoC);
  const EnsembleSpectrum b = ensemble_average({4000, 8, Model::I}, p, grid, SpectrumKind::RhoC);
  double ratio = 0.0;
  for (std::size_t i = 0; i < grid.n_points; ++i) ratio += b.std_error[i] / a.std_error[i];
  ratio /= static_cast<double>(grid.n_points);
  CHECK(ratio >= 0.45);
  CHECK(ratio <= 0.55);
}

TEST_CASE("convergence report") {
  // Large N so the finite-N bias sits below the R = 3000 noise floor.
  const ModelParams p = params_for_coupling(0.1379, 1500, 2.0, 2.0, 0.1);
  const SpectralGrid grid{1.6, 2.4, 41, 2e-2};
  const auto rows =
      convergence_report({3000, 3, Model::I}, p, grid, SpectrumKind::RhoC, {100, 500, 3000});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].l2_distance > rows[2].l2_distance);
  const double scaling = rows[0].l2_distance / rows[2].l2_distance;
  CHECK(scaling >= std::sqrt(30.0) / 2.0);
  CHECK(scaling <= std::sqrt(30.0) * 2.0);
  CHECK(rows[0].mean_stderr > rows[2].mean_stderr);

  const ModelParams clean = params_for_coupling(0.1379, 50, 2.0, 2.0, 0.0);
  for (const ConvergenceRow& r :
       convergence_report({20, 1, Model::I}, clean, grid, SpectrumKind::RhoC, {5, 20})) {
    CHECK(r.l2_distance < 1e-10);
  }
  CHECK_THROWS_AS((void)convergence_report({20, 1, Model::I}, clean, grid, SpectrumKind::RhoC,
                                           {20, 5}),
                  InvalidParameter);
}

TEST_CASE("more molecules at fixed g approach the analytic curve") {
  const SpectralGrid grid{1.6, 2.4, 41, 2e-2};
  double d[2];
  int k = 0;
  for (std::size_t n : {25, 400}) {
    const ModelParams p = params_for_coupling(0.1379, n, 2.0, 2.0, 0.1);
    d[k++] = convergence_report({2000, 6, Model::I}, p, grid, SpectrumKind::RhoC, {2000})[0]
                 .l2_distance;
  }
  CHECK(d[1] < d[0]);
}
