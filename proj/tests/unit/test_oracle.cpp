// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "polariton/ensemble.hpp"
#include "polariton/greens_spectra.hpp"
#include "polariton/oracle.hpp"

using namespace polariton;

namespace {

ArrowMatrix random_arrow(std::size_t n, std::uint64_t seed, double sigma = 0.05) {
  const ModelParams p = params_for_coupling(0.1379, n, 2.0, 2.0, sigma);
  return make_arrow(sample_realization({1, seed, Model::I}, 0, p), p);
}

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

TEST_CASE("secular and dense solvers agree") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const ArrowMatrix h = random_arrow(40, seed);
    const OracleResult a = solve_arrow_secular(h);
    const OracleResult b = solve_arrow_dense(h);
    REQUIRE(a.eigenvalues.size() == 41);
    REQUIRE(b.eigenvalues.size() == 41);
    for (std::size_t i = 0; i < 41; ++i) {
      CHECK(std::abs(a.eigenvalues[i] - b.eigenvalues[i]) < 1e-12);
      CHECK(std::abs(a.cavity_weights[i] - b.cavity_weights[i]) < 1e-10);
      CHECK(std::abs(a.mol_weights[i] - b.mol_weights[i]) < 1e-10);
    }
  }
}

TEST_CASE("weights are complete and the trace is preserved") {
  const ArrowMatrix h = random_arrow(60, 17);
  const OracleResult r = solve_arrow_secular(h);
  CHECK(sum(r.cavity_weights) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sum(r.mol_weights) == doctest::Approx(1.0).epsilon(1e-12));
  const double trace = h.eps_c + sum(h.diagonal);
  CHECK(sum(r.eigenvalues) == doctest::Approx(trace).epsilon(1e-13));
  CHECK(std::is_sorted(r.eigenvalues.begin(), r.eigenvalues.end()));
}

TEST_CASE("eigenvalues interlace the molecular energies") {
  const ArrowMatrix h = random_arrow(30, 4);
  std::vector<double> d = h.diagonal;
  std::sort(d.begin(), d.end());
  const OracleResult r = solve_arrow_secular(h);
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(r.eigenvalues[i] <= d[i]);
    CHECK(r.eigenvalues[i + 1] >= d[i]);
  }
}

TEST_CASE("identical molecules give dark states and the closed-form pair") {
  ArrowMatrix h;
  h.eps_c = 2.0;
  h.diagonal.assign(25, 2.0);
  h.couplings.assign(25, 0.1 / 5.0);  // g = 0.1
  const OracleResult r = solve_arrow_secular(h);
  CHECK(r.eigenvalues.front() == doctest::Approx(1.9).epsilon(1e-14));
  CHECK(r.eigenvalues.back() == doctest::Approx(2.1).epsilon(1e-14));
  for (std::size_t i = 1; i + 1 < r.eigenvalues.size(); ++i) {
    CHECK(r.eigenvalues[i] == 2.0);
    CHECK(r.cavity_weights[i] == 0.0);
    CHECK(r.mol_weights[i] == doctest::Approx(0.0).epsilon(1e-15));
  }
  CHECK(r.cavity_weights.front() == doctest::Approx(0.5));
  CHECK(r.mol_weights.back() == doctest::Approx(0.5));
}

TEST_CASE("zero couplings deflate exactly") {
  ArrowMatrix h;
  h.eps_c = 2.0;
  h.diagonal = {1.9, 2.05, 2.2};
  h.couplings = {0.0, 0.0, 0.0};
  const OracleResult r = solve_arrow_secular(h);
  CHECK(r.eigenvalues == std::vector<double>{1.9, 2.0, 2.05, 2.2});
  CHECK(r.cavity_weights[1] == 1.0);
  CHECK(sum(r.mol_weights) == 0.0);
}

TEST_CASE("partly degenerate spectrum matches the dense solver") {
  ArrowMatrix h;
  h.eps_c = 2.02;
  h.diagonal = {1.95, 2.0, 2.0, 2.0, 2.1, 2.1, 2.3};
  h.couplings = {0.03, 0.02, -0.01, 0.04, 0.0, 0.05, 0.02};
  const OracleResult a = solve_arrow_secular(h);
  const OracleResult b = solve_arrow_dense(h);
  for (std::size_t i = 0; i < a.eigenvalues.size(); ++i) {
    CHECK(std::abs(a.eigenvalues[i] - b.eigenvalues[i]) < 1e-13);
    CHECK(std::abs(a.cavity_weights[i] - b.cavity_weights[i]) < 1e-12);
  }
}

TEST_CASE("large random system stays accurate") {
  const ArrowMatrix h = random_arrow(1500, 8, 0.1);
  const OracleResult r = solve_arrow_secular(h);
  CHECK(sum(r.cavity_weights) == doctest::Approx(1.0).epsilon(1e-11));
  // Each eigenvalue solves lambda - eps_c = sum V^2/(lambda - eps_i).
  for (std::size_t m : {std::size_t{0}, std::size_t{700}, r.eigenvalues.size() - 1}) {
    const double lambda = r.eigenvalues[m];
    double s = 0.0;
    double ds = 0.0;
    for (std::size_t i = 0; i < h.diagonal.size(); ++i) {
      const double d = lambda - h.diagonal[i];
      s += h.couplings[i] * h.couplings[i] / d;
      ds += h.couplings[i] * h.couplings[i] / (d * d);
    }
    CHECK(std::abs(lambda - h.eps_c - s) < 1e-9 * (1.0 + ds));
  }
}

TEST_CASE("Lorentzian reconstruction equals the resolvent") {
  const ArrowMatrix h = random_arrow(20, 21);
  const OracleResult r = solve_arrow_secular(h);
  const SpectralGrid grid{1.7, 2.3, 61, 2e-3};
  const Spectrum s = lorentzian_spectrum(r.eigenvalues, r.cavity_weights, grid);
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const DenseResolvent d = dense_resolvent(h, s.omega[i], grid.eta);
    CHECK(s.value[i] == doctest::Approx(-d.g_cc.imag() / std::numbers::pi).epsilon(1e-10));
  }
  CHECK_THROWS_AS((void)lorentzian_spectrum({1.0}, {0.5, 0.5}, grid), InvalidParameter);
}

TEST_CASE("oracle input checks") {
  ArrowMatrix h;
  h.diagonal = {1.0, 2.0};
  h.couplings = {0.1};
  CHECK_THROWS_AS(h.validate(), InvalidParameter);
  h.couplings = {0.1, std::nan("")};
  CHECK_THROWS_AS(h.validate(), InvalidParameter);

  ModelParams p = params_for_coupling(0.1, 5, 2.0, 2.0, 0.0);
  p.gamma_c = 0.01;
  DisorderRealization r;
  r.xi.assign(5, 0.0);
  CHECK_THROWS_AS((void)exact_diagonalization_oracle(r, p, SpectralGrid{}), InvalidParameter);

  ArrowMatrix big;
  big.diagonal.assign(10001, 2.0);
  big.couplings.assign(10001, 0.001);
  CHECK_THROWS_AS((void)solve_arrow_dense(big), DomainError);
}
