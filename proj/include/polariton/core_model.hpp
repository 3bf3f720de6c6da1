// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Physical parameters, units and the disorder-realization data model shared
// by every other part of the library. All energies are in eV.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polariton {

namespace units {
inline constexpr double hbar_eVs = 6.582119569e-16;       // eV s
inline constexpr double speed_of_light = 2.99792458e8;    // m/s
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double debye = 3.33564e-30;              // C m
inline constexpr double elementary_charge = 1.602176634e-19;     // J/eV
}  // namespace units

/// Input outside the domain of a mathematical operation (e.g. eta <= 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Green's function denominator that is exactly zero.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter set that violates one of the model invariants. The message
/// names the violated invariant.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Model { I, II };

/// Per-molecule coupling convention for Model II realizations.
///   Renormalized: V_i = (g/sqrt(N)) sqrt(6) cos(theta_i) sin(pi z_i), so that
///                 <V_i^2> = g^2/N as in Model I.
///   Raw:          V_i = (g/sqrt(N)) cos(theta_i) sin(pi z_i); the averaged
///                 self-energy is the Model I one divided by 6.
enum class Model2Coupling { Renormalized, Raw };

struct ModelParams {
  double eps_c = 2.0;           // cavity excitation energy, eV
  double eps_a = 2.0;           // mean molecular excitation energy, eV
  double sigma = 0.0;           // disorder standard deviation, eV
  double v_tilde = 0.0;         // volume-independent coupling, eV m^{3/2}
  double number_density = 1.0;  // molecules per m^3
  std::size_t n_molecules = 1;
  double gamma_a = 0.0;  // molecular homogeneous width, eV
  double gamma_c = 0.0;  // cavity mode width, eV
  std::optional<double> mu_eg;  // transition dipole, Debye
  Model2Coupling model2_coupling = Model2Coupling::Renormalized;

  /// Throws InvalidParameter naming the first violated invariant.
  void validate() const;

  /// Collective coupling g = sqrt(number_density) * v_tilde, eV.
  [[nodiscard]] double coupling() const;
  /// Rabi splitting 2g, eV.
  [[nodiscard]] double rabi_splitting() const { return 2.0 * coupling(); }
  /// Cavity volume implied by N and the number density, m^3.
  [[nodiscard]] double volume() const;
  /// Model I per-molecule coupling V = v_tilde / sqrt(volume), eV.
  [[nodiscard]] double per_molecule_coupling() const;
};

/// Collective coupling g = sqrt(N/V) * v_tilde in eV.
[[nodiscard]] double collective_coupling(const ModelParams& params);

/// Parameters with N molecules and collective coupling g. The number density
/// is set to N (unit volume), so that g^2 = N V^2 holds for the ensemble path.
[[nodiscard]] ModelParams params_for_coupling(double g, std::size_t n_molecules,
                                              double eps_c, double eps_a,
                                              double sigma);

struct DisorderRealization {
  std::vector<double> xi;                    // detunings, eV
  std::optional<std::vector<double>> theta;  // polar angles, rad (Model II)
  std::optional<std::vector<double>> z;      // positions in [0, 1] (Model II)
  std::uint64_t seed = 0;

  [[nodiscard]] bool is_model2() const { return theta.has_value(); }
  [[nodiscard]] std::size_t size() const { return xi.size(); }
  void validate(std::size_t n_molecules) const;
};

/// Per-molecule couplings V_i for a realization: Model I gives a constant
/// vector, Model II applies cos(theta) sin(pi z) with the params' convention.
[[nodiscard]] std::vector<double> couplings(const DisorderRealization& realization,
                                            const ModelParams& params);

/// Molecular excitation energies eps_a + xi_i.
[[nodiscard]] std::vector<double> site_energies(const DisorderRealization& realization,
                                                const ModelParams& params);

/// Uniform frequency axis plus the broadening eta of omega+ = omega + i eta.
struct SpectralGrid {
  double omega_min = 1.5;
  double omega_max = 2.5;
  std::size_t n_points = 1001;
  double eta = 1e-3;

  void validate() const;
  [[nodiscard]] double step() const;
  [[nodiscard]] double omega(std::size_t i) const;
  [[nodiscard]] std::vector<double> points() const;
};

struct Spectrum {
  std::vector<double> omega;
  std::vector<double> value;
  std::string label;

  [[nodiscard]] std::size_t size() const { return omega.size(); }
};

/// Trapezoid integral of a spectrum over its whole axis.
[[nodiscard]] double integrate(const Spectrum& s);

/// Trapezoid integral restricted to [lo, hi] (grid points inside only).
[[nodiscard]] double integrate(const Spectrum& s, double lo, double hi);

}  // namespace polariton
