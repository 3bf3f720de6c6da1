// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Cavity and bright-state Green's functions and every observable spectrum
// derived from them. A spectrum source is either the Gaussian-ensemble closed
// form or a single disorder realization; both go through the same partitioned
// Green's function formulas.
#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "polariton/core_model.hpp"
#include "polariton/self_energy.hpp"

namespace polariton {

struct GreensValue {
  double omega = 0.0;
  cplx g_cc{};
  cplx g_molmol{};
  SelfEnergyValue sigma;
};

/// G_cc = 1/(omega + i eta - (eps_c - i gamma_c) - Sigma). eta may be 0 for
/// real-axis pole analysis; an exactly zero denominator throws
/// SingularityError.
[[nodiscard]] cplx g_cc(double omega, const SelfEnergyValue& sigma_value,
                        const ModelParams& params, double eta);

/// Bright-state Green's function G_mol,mol = (omega+ - eps_c) G_cc Sigma / W,
/// evaluated through the identity (omega+ - eps_c) G_cc = 1 + Sigma G_cc.
/// W = g^2 = N V^2 for Model I. Throws DomainError when W == 0.
[[nodiscard]] cplx g_molmol(double omega, const SelfEnergyValue& sigma_value,
                            cplx g_cc_value, const ModelParams& params);
/// Same with an explicit bright weight W = sum_i |V_i|^2.
[[nodiscard]] cplx g_molmol(const SelfEnergyValue& sigma_value, cplx g_cc_value,
                            double bright_weight);

struct AnalyticSource {
  Model model = Model::I;
};
struct EmpiricalSource {
  DisorderRealization realization;
};
using SpectrumSource = std::variant<AnalyticSource, EmpiricalSource>;

enum class SpectrumKind { RhoC, RhoMol, RhoT, DeltaRhoM, DeltaRhoT, Absorption };

[[nodiscard]] std::string_view to_string(SpectrumKind kind);
/// Parses the CLI names rho_c, rho_mol, rho_t, delta_rho_m, delta_rho_t, alpha.
[[nodiscard]] SpectrumKind parse_spectrum_kind(std::string_view name);

enum class AbsorptionUnits { Normalized, Absolute };
enum class RhoTScale { Total, PerMolecule };

struct SpectrumOptions {
  Model absorption_model = Model::I;
  AbsorptionUnits absorption_units = AbsorptionUnits::Normalized;
  RhoTScale rho_t_scale = RhoTScale::Total;
};

/// Everything a spectrum needs at one frequency.
struct PointValues {
  double omega = 0.0;
  cplx sigma{};
  cplx d_sigma{};
  cplx g_cc{};
  cplx g_molmol{};     // NaN when the bright weight is zero
  cplx trace_molecular{};  // sum_i G_ii
  double bright_weight = 0.0;
  double n_molecules = 0.0;
};

/// Evaluates Green's functions for one source at omega + i eta.
class SpectralEvaluator {
 public:
  SpectralEvaluator(SpectrumSource source, const ModelParams& params, double eta);

  [[nodiscard]] PointValues at(double omega) const;
  [[nodiscard]] GreensValue greens(double omega) const;
  /// Value of one spectrum kind at omega.
  [[nodiscard]] double value(SpectrumKind kind, double omega,
                             const SpectrumOptions& options = {}) const;
  /// rho_c only; avoids the extra sums the other kinds need.
  [[nodiscard]] double rho_c(double omega) const;

  [[nodiscard]] const ModelParams& params() const { return params_; }
  [[nodiscard]] double eta() const { return eta_; }

 private:
  [[nodiscard]] cplx cavity_denominator(double omega) const;

  ModelParams params_;
  double eta_;
  bool analytic_ = true;
  double coupling_sq_ = 0.0;  // effective g^2 of the analytic source
  std::optional<EmpiricalSystem> system_;
};

/// Value of a spectrum kind derived from point values.
[[nodiscard]] double spectrum_value(SpectrumKind kind, const PointValues& p,
                                   const SpectrumOptions& options, const ModelParams& params);

/// Any spectrum on a grid. Grid points are evaluated concurrently.
[[nodiscard]] Spectrum compute_spectrum(SpectrumKind kind, const SpectralGrid& grid,
                                        const SpectrumSource& source, const ModelParams& params,
                                        const SpectrumOptions& options = {});

/// rho_c = -(1/pi) Im G_cc(omega+).
[[nodiscard]] Spectrum rho_c(const SpectralGrid& grid, const SpectrumSource& source,
                             const ModelParams& params);
/// rho_mol = -(1/pi) Im G_mol,mol(omega+).
[[nodiscard]] Spectrum rho_mol(const SpectralGrid& grid, const SpectrumSource& source,
                               const ModelParams& params);
/// rho_T = rho_c - (1/pi) Im sum_i G_ii, optionally divided by N.
[[nodiscard]] Spectrum rho_t(const SpectralGrid& grid, const SpectrumSource& source,
                             const ModelParams& params, RhoTScale scale = RhoTScale::Total);
/// Delta rho_M = (1/pi) Im(dSigma/domega G_cc).
[[nodiscard]] Spectrum delta_rho_m(const SpectralGrid& grid, const SpectrumSource& source,
                                   const ModelParams& params);
/// Delta rho_T = rho_c + Delta rho_M.
[[nodiscard]] Spectrum delta_rho_t(const SpectralGrid& grid, const SpectrumSource& source,
                                   const ModelParams& params);
/// Absorption cross-section. Normalized units give prefactor * rho_mol in
/// 1/eV; Absolute units give m^2 and need params.mu_eg. The Model II
/// prefactor is 1/6 of the Model I one.
[[nodiscard]] Spectrum absorption(const SpectralGrid& grid, const SpectrumSource& source,
                                  const ModelParams& params, Model model,
                                  AbsorptionUnits units = AbsorptionUnits::Normalized);

/// Fraction of a unit-weight Lorentzian of half-width eta centred in a window
/// of half-width half_window that lies outside the window.
[[nodiscard]] double lorentzian_tail_deficit(double half_window, double eta);

}  // namespace polariton
