// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact diagonalization of the single-excitation Hamiltonian
//
//   H = [ eps_c  V^T ]
//       [ V      diag(eps_i) ]
//
// used as the reference against which the Green's function formulas are
// checked. Only loss-free systems (gamma_a = gamma_c = 0) are Hermitian.
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "polariton/core_model.hpp"

namespace polariton {

struct ArrowMatrix {
  double eps_c = 0.0;
  std::vector<double> diagonal;   // eps_i
  std::vector<double> couplings;  // V_i

  [[nodiscard]] std::size_t dimension() const { return diagonal.size() + 1; }
  /// Throws InvalidParameter on size mismatch or non-finite entries.
  void validate() const;
};

[[nodiscard]] ArrowMatrix make_arrow(const DisorderRealization& realization,
                                     const ModelParams& params);

struct OracleResult {
  std::vector<double> eigenvalues;     // ascending, N + 1 values
  std::vector<double> cavity_weights;  // |<c|m>|^2
  std::vector<double> mol_weights;     // |<mol|m>|^2; all zero when V = 0
};

/// Secular-equation solver. Exact duplicates among eps_i and zero couplings
/// are deflated into dark eigenvalues first; each remaining root of
/// lambda - eps_c = sum_k w_k/(lambda - d_k) is bisected inside its
/// interlacing interval, in coordinates centred on the nearer pole.
[[nodiscard]] OracleResult solve_arrow_secular(const ArrowMatrix& h);

/// Dense symmetric eigensolver (Eigen). O(N^3); limited to N <= 10^4.
[[nodiscard]] OracleResult solve_arrow_dense(const ArrowMatrix& h);

/// Elements of (z - H)^{-1} from a dense complex LU solve at z = omega + i eta.
struct DenseResolvent {
  std::complex<double> g_cc;
  std::complex<double> g_molmol;
  std::complex<double> trace;  // full trace including the cavity element
};
[[nodiscard]] DenseResolvent dense_resolvent(const ArrowMatrix& h, double omega, double eta);

/// Spectrum sum_m weight_m L_eta(omega - lambda_m) with a unit-area Lorentzian.
[[nodiscard]] Spectrum lorentzian_spectrum(const std::vector<double>& eigenvalues,
                                           const std::vector<double>& weights,
                                           const SpectralGrid& grid);

struct OracleSpectra {
  OracleResult result;
  Spectrum rho_c;
  Spectrum rho_mol;
  Spectrum rho_t;
};

/// Secular solve plus rho_c, rho_mol and rho_t reconstructed on the grid.
/// Requires gamma_a = gamma_c = 0.
[[nodiscard]] OracleSpectra exact_diagonalization_oracle(const DisorderRealization& realization,
                                                         const ModelParams& params,
                                                         const SpectralGrid& grid);

}  // namespace polariton
