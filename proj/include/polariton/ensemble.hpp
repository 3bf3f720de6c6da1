// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Disorder sampling and reproducible Monte-Carlo ensemble averages.
#pragma once

#include <array>
#include <string>
#include <cstdint>
#include <vector>

#include "polariton/core_model.hpp"
#include "polariton/greens_spectra.hpp"

namespace polariton {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  /// One block: ten rounds of the Philox bijection on ctr under key.
  [[nodiscard]] static Counter block(Counter ctr, Key key);
};

/// Sequential stream over Philox blocks for one (seed, index) pair.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t index);

  [[nodiscard]] std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  [[nodiscard]] double uniform();
  /// Standard normal (Box-Muller; the second variate is cached).
  [[nodiscard]] double normal();

 private:
  Philox4x32::Key key_;
  Philox4x32::Counter ctr_;
  Philox4x32::Counter buffer_{};
  int used_ = 4;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

struct EnsembleSpec {
  std::size_t n_realizations = 3000;
  std::uint64_t base_seed = 0;
  Model model = Model::I;

  void validate() const;
};

struct EnsembleSpectrum {
  std::vector<double> omega;
  std::vector<double> mean;
  std::vector<double> std_error;  // standard error of the mean
  std::size_t n_realizations = 0;
  std::string label;
};

/// Realization `index` of the ensemble: N Gaussian detunings with standard
/// deviation sigma, and for Model II also theta (cos theta uniform on
/// [-1, 1]) and z uniform on [0, 1]. Depends only on (base_seed, index).
[[nodiscard]] DisorderRealization sample_realization(const EnsembleSpec& spec, std::size_t index,
                                                     const ModelParams& params);

/// Per-point mean and standard error over spec.n_realizations realizations.
/// Realizations are grouped into fixed blocks by index and the block
/// statistics merged in a fixed tree order, so the result is bitwise
/// independent of thread count.
[[nodiscard]] EnsembleSpectrum ensemble_average(const EnsembleSpec& spec,
                                                const ModelParams& params,
                                                const SpectralGrid& grid, SpectrumKind kind,
                                                const SpectrumOptions& options = {});

struct ConvergenceRow {
  std::size_t n_realizations = 0;
  double l2_distance = 0.0;  // sqrt(sum (mean - analytic)^2 domega)
  double mean_stderr = 0.0;  // stderr averaged over grid points
};

/// Distance of the running ensemble mean (first R realizations) from the
/// analytic curve at each checkpoint R. Checkpoints must be ascending.
[[nodiscard]] std::vector<ConvergenceRow> convergence_report(
    const EnsembleSpec& spec, const ModelParams& params, const SpectralGrid& grid,
    SpectrumKind kind, const std::vector<std::size_t>& checkpoints,
    const SpectrumOptions& options = {});

}  // namespace polariton
