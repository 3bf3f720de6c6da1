// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
#include "polariton/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polariton {

namespace {

void require(bool ok, const char* invariant) {
  if (!ok) throw InvalidParameter(invariant);
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

void ModelParams::validate() const {
  require(finite(eps_c) && finite(eps_a), "eps_c and eps_a must be finite");
  require(finite(sigma) && sigma >= 0.0, "sigma >= 0");
  require(finite(v_tilde), "v_tilde must be finite");
  require(finite(number_density) && number_density > 0.0, "number_density > 0");
  require(n_molecules >= 1, "n_molecules >= 1");
  require(finite(gamma_a) && gamma_a >= 0.0, "gamma_a >= 0");
  require(finite(gamma_c) && gamma_c >= 0.0, "gamma_c >= 0");
  if (mu_eg) require(finite(*mu_eg) && *mu_eg >= 0.0, "mu_eg >= 0");
}

double ModelParams::coupling() const { return std::sqrt(number_density) * v_tilde; }

double ModelParams::volume() const {
  return static_cast<double>(n_molecules) / number_density;
}

double ModelParams::per_molecule_coupling() const { return v_tilde / std::sqrt(volume()); }

double collective_coupling(const ModelParams& params) { return params.coupling(); }

ModelParams params_for_coupling(double g, std::size_t n_molecules, double eps_c,
                                double eps_a, double sigma) {
  ModelParams p;
  p.eps_c = eps_c;
  p.eps_a = eps_a;
  p.sigma = sigma;
  p.n_molecules = n_molecules;
  p.number_density = static_cast<double>(n_molecules);
  p.v_tilde = g / std::sqrt(p.number_density);
  return p;
}

void DisorderRealization::validate(std::size_t n_molecules) const {
  require(xi.size() == n_molecules, "realization xi length must equal n_molecules");
  require(theta.has_value() == z.has_value(),
          "theta and z must be both absent (Model I) or both present (Model II)");
  if (theta) {
    require(theta->size() == xi.size() && z->size() == xi.size(),
            "theta and z must have the same length as xi");
  }
  for (double x : xi) require(finite(x), "realization xi must be finite");
}

std::vector<double> couplings(const DisorderRealization& realization,
                              const ModelParams& params) {
  const double v = params.per_molecule_coupling();
  std::vector<double> out(realization.size(), v);
  if (!realization.is_model2()) return out;

  const double scale =
      params.model2_coupling == Model2Coupling::Renormalized ? std::sqrt(6.0) : 1.0;
  const auto& theta = *realization.theta;
  const auto& z = *realization.z;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = v * scale * std::cos(theta[i]) * std::sin(std::numbers::pi * z[i]);
  }
  return out;
}

std::vector<double> site_energies(const DisorderRealization& realization,
                                  const ModelParams& params) {
  std::vector<double> eps(realization.size());
  std::transform(realization.xi.begin(), realization.xi.end(), eps.begin(),
                 [&](double x) { return params.eps_a + x; });
  return eps;
}

void SpectralGrid::validate() const {
  require(finite(omega_min) && finite(omega_max) && omega_min < omega_max,
          "omega_min < omega_max");
  require(n_points >= 2, "n_points >= 2");
  require(finite(eta) && eta > 0.0, "eta > 0");
}

double SpectralGrid::step() const {
  return (omega_max - omega_min) / static_cast<double>(n_points - 1);
}

double SpectralGrid::omega(std::size_t i) const {
  if (i + 1 == n_points) return omega_max;
  return omega_min + static_cast<double>(i) * step();
}

std::vector<double> SpectralGrid::points() const {
  std::vector<double> w(n_points);
  for (std::size_t i = 0; i < n_points; ++i) w[i] = omega(i);
  return w;
}

double integrate(const Spectrum& s) {
  double acc = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    acc += 0.5 * (s.value[i] + s.value[i - 1]) * (s.omega[i] - s.omega[i - 1]);
  }
  return acc;
}

double integrate(const Spectrum& s, double lo, double hi) {
  // Trapezoid over [lo, hi] with linear interpolation at partial end intervals.
  double acc = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const double a = s.omega[i - 1];
    const double b = s.omega[i];
    const double left = std::max(a, lo);
    const double right = std::min(b, hi);
    if (right <= left) continue;
    const double slope = (s.value[i] - s.value[i - 1]) / (b - a);
    const double fl = s.value[i - 1] + slope * (left - a);
    const double fr = s.value[i - 1] + slope * (right - a);
    acc += 0.5 * (fl + fr) * (right - left);
  }
  return acc;
}

}  // namespace polariton
