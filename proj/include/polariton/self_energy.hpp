// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Cavity self-energy Sigma(omega+) from three sources: a direct sum over one
// disorder realization, the Gaussian-ensemble closed form, and the Model II
// orientation/position average.
//
// Sign convention: Im Sigma(omega + i eta) <= 0 (retarded branch), so every
// density of states built from G_cc = 1/(omega+ - eps_c - Sigma) is >= 0.
#pragma once

#include <complex>
#include <vector>

#include "polariton/core_model.hpp"

namespace polariton {

using cplx = std::complex<double>;

struct SelfEnergyValue {
  double omega = 0.0;
  double re = 0.0;   // Sigma_R, eV
  double im = 0.0;   // Sigma_I, eV
  cplx d_omega{};    // dSigma/domega

  [[nodiscard]] cplx value() const { return {re, im}; }
};

/// K(z) = E[1/(z - eps_a - xi)] for Gaussian xi with standard deviation sigma,
/// and dK/dz, at z = omega + i*shift.
struct Resolvent {
  cplx value{};
  cplx derivative{};
};

/// Gaussian resolvent. shift == 0 gives the real-axis limit in closed form
/// (Dawson function for the real part, Gaussian for the imaginary part).
/// shift > 0 goes through the Faddeeva function,
/// K = -i sqrt(pi/2)/sigma w((z - eps_a)/(sqrt2 sigma)), evaluated by a
/// rational expansion near the origin and a continued fraction beyond |.| = 6.
/// sigma == 0 reduces to the bare pole 1/(z - eps_a).
[[nodiscard]] Resolvent gaussian_resolvent(double omega, double shift, double eps_a,
                                           double sigma);

/// Per-realization data needed by every empirical sum: complex site energies
/// eps_i - i gamma_a and squared couplings |V_i|^2.
class EmpiricalSystem {
 public:
  EmpiricalSystem(const DisorderRealization& realization, const ModelParams& params);
  /// Explicit couplings, used for the Model II averaged form and by tests.
  EmpiricalSystem(std::vector<double> site_energies, std::vector<double> coupling_sq,
                  double gamma_a);

  struct Sums {
    cplx bare{};        // sum_i 1/(z - eps_i)
    cplx sigma{};       // sum_i |V_i|^2/(z - eps_i)
    cplx d_sigma{};     // -sum_i |V_i|^2/(z - eps_i)^2
  };

  /// All three sums at z = omega + i eta, pairwise (tree) summed in index
  /// order so the result does not depend on how callers parallelize.
  [[nodiscard]] Sums sums(double omega, double eta) const;
  /// Only sum_i |V_i|^2/(z - eps_i); the hot path of ensemble rho_c.
  [[nodiscard]] cplx sigma(double omega, double eta) const;

  [[nodiscard]] double bright_weight() const { return bright_weight_; }
  [[nodiscard]] std::size_t size() const { return eps_.size(); }
  [[nodiscard]] const std::vector<double>& site_energies() const { return eps_; }
  [[nodiscard]] const std::vector<double>& coupling_sq() const { return v2_; }
  [[nodiscard]] double gamma_a() const { return gamma_a_; }

 private:
  std::vector<double> eps_;
  std::vector<double> v2_;
  double gamma_a_ = 0.0;
  double bright_weight_ = 0.0;
};

/// Sigma(omega + i eta) by direct summation over the realization.
[[nodiscard]] SelfEnergyValue sigma_empirical(double omega,
                                              const DisorderRealization& realization,
                                              const ModelParams& params, double eta);

/// Gaussian-ensemble closed form on the real axis (eta -> 0+). With
/// gamma_a > 0 the molecular energy eps_a - i gamma_a is threaded through.
/// Requires sigma > 0.
[[nodiscard]] SelfEnergyValue sigma_analytic(double omega, const ModelParams& params);

/// Gaussian-ensemble closed form at omega + i eta (eta >= 0), i.e. the exact
/// ensemble mean of sigma_empirical at the same eta.
[[nodiscard]] SelfEnergyValue sigma_analytic(double omega, const ModelParams& params,
                                             double eta);

/// sigma == 0 limit: g^2/(omega + i eta - eps_a + i gamma_a).
[[nodiscard]] SelfEnergyValue sigma_resonant_limit(double omega, const ModelParams& params,
                                                   double eta);

/// Orientation- and position-averaged Model II self-energy
/// <Sigma> = (V^2/6) sum_i 1/(omega+ - eps_i) for Raw coupling, or the Model I
/// sum for Renormalized coupling (the sqrt(6) cancels the 1/6).
[[nodiscard]] SelfEnergyValue sigma_model2_averaged(double omega,
                                                    const DisorderRealization& realization,
                                                    const ModelParams& params, double eta);

/// Squared-coupling reduction of the Model II average relative to Model I.
[[nodiscard]] double model2_average_factor(const ModelParams& params);

}  // namespace polariton
