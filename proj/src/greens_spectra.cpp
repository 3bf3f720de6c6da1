// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
#include "polariton/greens_spectra.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "polariton/parallel.hpp"

namespace polariton {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kNaN{std::numeric_limits<double>::quiet_NaN(),
                    std::numeric_limits<double>::quiet_NaN()};

cplx checked_inverse(cplx denominator) {
  if (denominator == cplx{}) {
    throw SingularityError("G_cc denominator is exactly zero (eta = gamma = 0 at a pole)");
  }
  return 1.0 / denominator;
}

double absorption_prefactor(Model model) { return model == Model::II ? 1.0 / 6.0 : 1.0; }

}  // namespace

cplx g_cc(double omega, const SelfEnergyValue& sigma_value, const ModelParams& params,
          double eta) {
  if (!(eta >= 0.0)) throw DomainError("g_cc: eta must be >= 0");
  return checked_inverse(cplx(omega - params.eps_c, eta + params.gamma_c) - sigma_value.value());
}

cplx g_molmol(double /*omega*/, const SelfEnergyValue& sigma_value, cplx g_cc_value,
              const ModelParams& params) {
  const double g = params.coupling();
  return g_molmol(sigma_value, g_cc_value, g * g);
}

cplx g_molmol(const SelfEnergyValue& sigma_value, cplx g_cc_value, double bright_weight) {
  if (!(bright_weight > 0.0)) {
    throw DomainError("g_molmol: coupling must be nonzero (|mol> undefined)");
  }
  const cplx s = sigma_value.value();
  return s * (1.0 + s * g_cc_value) / bright_weight;
}

std::string_view to_string(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::RhoC: return "rho_c";
    case SpectrumKind::RhoMol: return "rho_mol";
    case SpectrumKind::RhoT: return "rho_t";
    case SpectrumKind::DeltaRhoM: return "delta_rho_m";
    case SpectrumKind::DeltaRhoT: return "delta_rho_t";
    case SpectrumKind::Absorption: return "alpha";
  }
  return "unknown";
}

SpectrumKind parse_spectrum_kind(std::string_view name) {
  for (auto kind : {SpectrumKind::RhoC, SpectrumKind::RhoMol, SpectrumKind::RhoT,
                    SpectrumKind::DeltaRhoM, SpectrumKind::DeltaRhoT,
                    SpectrumKind::Absorption}) {
    if (to_string(kind) == name) return kind;
  }
  throw InvalidParameter("unknown spectrum kind '" + std::string(name) +
                         "' (expected rho_c, rho_mol, rho_t, delta_rho_m, delta_rho_t, alpha)");
}

SpectralEvaluator::SpectralEvaluator(SpectrumSource source, const ModelParams& params,
                                     double eta)
    : params_(params), eta_(eta) {
  params_.validate();
  if (!(eta >= 0.0) || !std::isfinite(eta)) throw DomainError("eta must be >= 0");
  if (auto* analytic = std::get_if<AnalyticSource>(&source)) {
    const double g = params_.coupling();
    coupling_sq_ = g * g;
    if (analytic->model == Model::II) coupling_sq_ *= model2_average_factor(params_);
  } else {
    analytic_ = false;
    system_.emplace(std::get<EmpiricalSource>(source).realization, params_);
  }
}

cplx SpectralEvaluator::cavity_denominator(double omega) const {
  return {omega - params_.eps_c, eta_ + params_.gamma_c};
}

PointValues SpectralEvaluator::at(double omega) const {
  PointValues p;
  p.omega = omega;
  if (analytic_) {
    const Resolvent k =
        gaussian_resolvent(omega, eta_ + params_.gamma_a, params_.eps_a, params_.sigma);
    p.sigma = coupling_sq_ * k.value;
    p.d_sigma = coupling_sq_ * k.derivative;
    p.g_cc = checked_inverse(cavity_denominator(omega) - p.sigma);
    // K (1 + Sigma G_cc) stays finite as g -> 0, unlike Sigma (1 + Sigma G_cc)/g^2.
    p.g_molmol = k.value * (1.0 + p.sigma * p.g_cc);
    p.n_molecules = static_cast<double>(params_.n_molecules);
    p.trace_molecular = p.n_molecules * k.value - p.d_sigma * p.g_cc;
    p.bright_weight = coupling_sq_;
    return p;
  }
  const auto s = system_->sums(omega, eta_);
  p.sigma = s.sigma;
  p.d_sigma = s.d_sigma;
  p.g_cc = checked_inverse(cavity_denominator(omega) - p.sigma);
  p.bright_weight = system_->bright_weight();
  p.g_molmol = p.bright_weight > 0.0 ? p.sigma * (1.0 + p.sigma * p.g_cc) / p.bright_weight
                                     : kNaN;
  p.n_molecules = static_cast<double>(system_->size());
  p.trace_molecular = s.bare - p.d_sigma * p.g_cc;
  return p;
}

GreensValue SpectralEvaluator::greens(double omega) const {
  const PointValues p = at(omega);
  return {omega, p.g_cc, p.g_molmol, {omega, p.sigma.real(), p.sigma.imag(), p.d_sigma}};
}

double SpectralEvaluator::rho_c(double omega) const {
  cplx sigma;
  if (analytic_) {
    sigma = coupling_sq_ *
            gaussian_resolvent(omega, eta_ + params_.gamma_a, params_.eps_a, params_.sigma).value;
  } else {
    sigma = system_->sigma(omega, eta_);
  }
  return -checked_inverse(cavity_denominator(omega) - sigma).imag() / kPi;
}

double SpectralEvaluator::value(SpectrumKind kind, double omega,
                                const SpectrumOptions& options) const {
  if (kind == SpectrumKind::RhoC) return rho_c(omega);
  return spectrum_value(kind, at(omega), options, params_);
}

double spectrum_value(SpectrumKind kind, const PointValues& p, const SpectrumOptions& options,
                      const ModelParams& params) {
  const double rho_c = -p.g_cc.imag() / kPi;
  switch (kind) {
    case SpectrumKind::RhoC:
      return rho_c;
    case SpectrumKind::RhoMol:
      if (std::isnan(p.g_molmol.real())) {
        throw DomainError("rho_mol: coupling must be nonzero (|mol> undefined)");
      }
      return -p.g_molmol.imag() / kPi;
    case SpectrumKind::RhoT: {
      const double total = rho_c - p.trace_molecular.imag() / kPi;
      return options.rho_t_scale == RhoTScale::PerMolecule ? total / p.n_molecules : total;
    }
    case SpectrumKind::DeltaRhoM:
      return (p.d_sigma * p.g_cc).imag() / kPi;
    case SpectrumKind::DeltaRhoT:
      return rho_c + (p.d_sigma * p.g_cc).imag() / kPi;
    case SpectrumKind::Absorption: {
      if (std::isnan(p.g_molmol.real())) {
        throw DomainError("absorption: coupling must be nonzero (|mol> undefined)");
      }
      const double rho_mol = -p.g_molmol.imag() / kPi;
      const double pre = absorption_prefactor(options.absorption_model);
      if (options.absorption_units == AbsorptionUnits::Normalized) return pre * rho_mol;
      if (!params.mu_eg) {
        throw InvalidParameter("absolute absorption requires mu_eg");
      }
      // alpha = pi omega N |mu|^2 rho(omega) / (eps0 c hbar) with rho per unit
      // angular frequency; rho per eV converts through hbar.
      const double mu = *params.mu_eg * units::debye;
      const double n = static_cast<double>(params.n_molecules);
      return pre * kPi * n * mu * mu * p.omega * rho_mol /
             (units::vacuum_permittivity * units::speed_of_light * units::hbar_eVs *
              units::elementary_charge);
    }
  }
  return 0.0;
}

Spectrum compute_spectrum(SpectrumKind kind, const SpectralGrid& grid,
                          const SpectrumSource& source, const ModelParams& params,
                          const SpectrumOptions& options) {
  grid.validate();
  const SpectralEvaluator evaluator(source, params, grid.eta);
  Spectrum out;
  out.omega = grid.points();
  out.value.assign(grid.n_points, 0.0);
  out.label = std::string(to_string(kind)) +
              (std::holds_alternative<AnalyticSource>(source) ? ":analytic" : ":empirical");
  parallel_for(grid.n_points, [&](std::size_t i) {
    out.value[i] = evaluator.value(kind, out.omega[i], options);
  });
  return out;
}

Spectrum rho_c(const SpectralGrid& grid, const SpectrumSource& source,
               const ModelParams& params) {
  return compute_spectrum(SpectrumKind::RhoC, grid, source, params);
}

Spectrum rho_mol(const SpectralGrid& grid, const SpectrumSource& source,
                 const ModelParams& params) {
  return compute_spectrum(SpectrumKind::RhoMol, grid, source, params);
}

Spectrum rho_t(const SpectralGrid& grid, const SpectrumSource& source,
               const ModelParams& params, RhoTScale scale) {
  SpectrumOptions options;
  options.rho_t_scale = scale;
  return compute_spectrum(SpectrumKind::RhoT, grid, source, params, options);
}

Spectrum delta_rho_m(const SpectralGrid& grid, const SpectrumSource& source,
                     const ModelParams& params) {
  return compute_spectrum(SpectrumKind::DeltaRhoM, grid, source, params);
}

Spectrum delta_rho_t(const SpectralGrid& grid, const SpectrumSource& source,
                     const ModelParams& params) {
  return compute_spectrum(SpectrumKind::DeltaRhoT, grid, source, params);
}

Spectrum absorption(const SpectralGrid& grid, const SpectrumSource& source,
                    const ModelParams& params, Model model, AbsorptionUnits units) {
  SpectrumOptions options;
  options.absorption_model = model;
  options.absorption_units = units;
  return compute_spectrum(SpectrumKind::Absorption, grid, source, params, options);
}

double lorentzian_tail_deficit(double half_window, double eta) {
  if (!(eta > 0.0)) throw DomainError("lorentzian_tail_deficit: eta must be > 0");
  if (!(half_window >= 0.0)) throw DomainError("lorentzian_tail_deficit: window must be >= 0");
  return 1.0 - (2.0 / kPi) * std::atan(half_window / eta);
}

}  // namespace polariton
