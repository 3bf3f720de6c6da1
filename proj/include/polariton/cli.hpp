// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: scenarios, CSV/JSON artifacts and the self-test.
#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "polariton/core_model.hpp"
#include "polariton/ensemble.hpp"
#include "polariton/greens_spectra.hpp"

namespace polariton::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitIo = 3;

/// CSV column layout version; bumped only on incompatible changes.
inline constexpr int kCsvSchemaVersion = 1;

enum class Scenario { Dos, Absorption, Poles, Ensemble, Sweep };

[[nodiscard]] std::string to_string(Scenario s);

struct SweepSpec {
  std::string name;  // sigma (values x eps_a), omega_rabi (eV), detuning (eps_c - eps_a, eV)
  std::vector<double> values;
};

struct RunConfig {
  Scenario scenario = Scenario::Dos;
  ModelParams params;
  SpectralGrid grid;
  std::optional<EnsembleSpec> ensemble;
  std::optional<SweepSpec> sweep;
  std::string output_path = "out.csv";
  SpectrumKind kind = SpectrumKind::RhoC;
  Model model = Model::I;
  AbsorptionUnits units = AbsorptionUnits::Normalized;
  RhoTScale rho_t_scale = RhoTScale::Total;

  /// Throws InvalidParameter naming the violated invariant.
  void validate() const;
};

/// Runs one scenario, writing the CSV at output_path and a JSON manifest
/// next to it. Returns an exit code.
[[nodiscard]] int run(const RunConfig& config, std::ostream& log);

/// Oracle-equivalence, sum-rule and Dawson-accuracy suites; prints a table.
[[nodiscard]] int self_test(std::ostream& out);

/// Full command-line entry point.
[[nodiscard]] int main_entry(int argc, char** argv);

/// Path of the manifest written for a CSV path (extension replaced by
/// .manifest.json).
[[nodiscard]] std::string manifest_path(const std::string& csv_path);

/// Library version and git describe string baked in at build time.
[[nodiscard]] std::string version_string();

}  // namespace polariton::cli
