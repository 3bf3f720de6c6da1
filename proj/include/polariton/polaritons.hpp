// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Pole structure of the ensemble-averaged G_cc: real roots of
// omega - eps_c - Sigma_R(omega), their classification into long-lived
// polaritons and the virtual state, and the closed-form approximations.
#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "polariton/core_model.hpp"

namespace polariton {

struct ExistenceResult {
  bool exists_pair = false;
  double ratio = 0.0;  // g^2/sigma^2, +inf for sigma = 0
};

/// On-resonance criterion g^2/sigma^2 > 1 (strict).
[[nodiscard]] ExistenceResult existence_check(const ModelParams& params);

enum class PoleKind { Polaritonic, Virtual };

struct PoleEntry {
  double energy = 0.0;              // eV
  PoleKind kind = PoleKind::Virtual;
  double residue = 0.0;             // |<c|pole>|^2 = [1 + g^2/(energy - eps_a)^2]^-1
  double quasiparticle_weight = 0.0;  // 1/(1 - dSigma_R/domega)
  double sigma_im = 0.0;            // Sigma_I at the pole, eV
  double width_estimate = 0.0;      // 2 |Sigma_I| residue, eV
};

struct PoleSearchOptions {
  double width_threshold = 0.1;  // polaritonic if width < threshold * gap scale
  double scan_resolution = 200.0;  // scan steps per min(sigma, g)
};

struct PoleReport {
  std::vector<PoleEntry> poles;  // ascending energy
  double existence_ratio = 0.0;
  /// Distance between the lowest and highest polaritonic poles when at least
  /// two are found.
  std::optional<double> gap;
  /// Scale the width threshold was compared with: the distance between the
  /// outermost roots, or the closed-form splitting when fewer than two roots
  /// exist.
  double gap_scale = 0.0;

  /// Outer roots enclosing a middle one: the disorder-split polariton pair.
  [[nodiscard]] bool pair_found() const { return poles.size() >= 3; }
  [[nodiscard]] std::size_t polaritonic_count() const;
};

/// Real roots of omega - eps_c - Sigma_R(omega) from the Gaussian closed form.
/// Sign changes are located on a uniform scan of
/// [min(eps_a, eps_c) - 3g - 5 sigma, max(eps_a, eps_c) + 3g + 5 sigma] and
/// refined with TOMS 748. sigma = 0 returns the closed-form pair.
[[nodiscard]] PoleReport find_poles(const ModelParams& params,
                                    const PoleSearchOptions& options = {});

struct PolaritonPair {
  double eps_plus = 0.0;
  double eps_minus = 0.0;
  double residue_plus = 0.0;
  double residue_minus = 0.0;
};

/// eps_pm = (eps_a + eps_c)/2 +- sqrt(g^2 + ((eps_a - eps_c)/2)^2).
[[nodiscard]] PolaritonPair polariton_energies_closed(const ModelParams& params);

struct SecondOrderPoles {
  double eps_plus = 0.0;
  double eps_minus = 0.0;
  double gap = 0.0;
  bool sigma_large = false;  // sigma > g/3, expansion not trustworthy
};

/// Energies with the sigma^2 correction
///   eps_s = mean + s R + s sigma^2 (d (d + s R) + g^2)/(g^2 R),
/// d = (eps_a - eps_c)/2, R = sqrt(g^2 + d^2); on resonance
/// eps_pm = eps_c +- (g + sigma^2/g).
[[nodiscard]] SecondOrderPoles polariton_energies_second_order(const ModelParams& params);

/// Disorder width of the polariton peaks,
/// (g^2 pi/(sqrt(2 pi) sigma)) exp(-g^2/(2 sigma^2)). Requires sigma > 0.
[[nodiscard]] double width_estimate(const ModelParams& params);

/// Poles of G_cc with eps_c -> eps_c - i gamma_c and eps_a -> eps_a - i gamma_a
/// in the sigma -> 0 limit. Returns (eps_plus, eps_minus); -Im is the half-width.
[[nodiscard]] std::pair<std::complex<double>, std::complex<double>> complex_poles_with_lifetimes(
    const ModelParams& params);

struct AbsorptionPartition {
  double polaritonic = 0.0;  // integrated weight in the polariton poles
  double grey = 0.0;         // integrated weight of the molecular band
  double polaritonic_fraction = 0.0;
  double grey_fraction = 0.0;
};

/// Splits the integrated Model I absorption into the polariton poles (the
/// bright-state residue (omega* - eps_c)^2 Z/g^2 at each polaritonic root)
/// and the grey-state band (real-axis quadrature of rho_mol between the
/// polaritons). omega_weighted multiplies by omega as in alpha(omega).
/// Requires sigma > 0 and a polariton pair.
[[nodiscard]] AbsorptionPartition absorption_partition(const ModelParams& params,
                                                       bool omega_weighted = true);

}  // namespace polariton
