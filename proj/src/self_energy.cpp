// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
#include "polariton/self_energy.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "polariton/special_functions.hpp"

namespace polariton {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kPairwiseBlock = 64;

// Real-axis closed form of the Gaussian resolvent.
Resolvent resolvent_real_axis(double omega, double eps_a, double sigma) {
  const double detuning = omega - eps_a;
  const double x = detuning / (std::numbers::sqrt2 * sigma);
  const DawsonEval d = dawson_eval(x);
  const double gauss = std::exp(-x * x);
  const double peak = std::sqrt(kPi / 2.0) / sigma;
  const cplx value{std::numbers::sqrt2 / sigma * d.value, -peak * gauss};
  const cplx derivative{d.derivative / (sigma * sigma),
                        peak * gauss * detuning / (sigma * sigma)};
  return {value, derivative};
}

// Weideman's rational expansion of the Faddeeva function w(z), Im z > 0:
//   w(z) = 2 p(Z)/(L - iz)^2 + pi^{-1/2}/(L - iz),  Z = (L + iz)/(L - iz),
// with p of degree kWeidemanN - 1. About 1e-14 relative for |z| < 6.
constexpr int kWeidemanN = 40;

struct WeidemanTable {
  double L;
  std::array<double, kWeidemanN> a;  // highest degree first

  WeidemanTable() : L(std::sqrt(kWeidemanN / std::numbers::sqrt2)), a{} {
    constexpr int m = 2 * kWeidemanN;
    constexpr int n = 2 * m;
    // f_j for k = -m+1 .. m-1 preceded by a zero, then fftshifted.
    std::array<double, n> f{};
    for (int k = -m + 1; k <= m - 1; ++k) {
      const double t = L * std::tan(0.5 * k * kPi / m);
      f[static_cast<std::size_t>(k + m)] = std::exp(-t * t) * (L * L + t * t);
    }
    std::array<double, n> shifted{};
    for (int i = 0; i < n; ++i) shifted[i] = f[(i + n / 2) % n];
    for (int j = 1; j <= kWeidemanN; ++j) {
      double re = 0.0;
      for (int i = 0; i < n; ++i) re += shifted[i] * std::cos(2.0 * kPi * j * i / n);
      a[static_cast<std::size_t>(kWeidemanN - j)] = re / n;
    }
  }
};

struct Faddeeva {
  cplx w;
  cplx dw;  // w'(z) = -2 z w + 2i/sqrt(pi)
};

Faddeeva faddeeva_upper(cplx z) {
  const double inv_sqrt_pi = 1.0 / std::sqrt(kPi);
  if (std::norm(z) >= 36.0) {
    // Laplace continued fraction w = (i/sqrt(pi))/(z - r),
    // r = (1/2)/(z - 1/(z - (3/2)/(z - ...))); then w' = -2 r w exactly.
    cplx r{};
    for (int k = 20; k >= 1; --k) r = (0.5 * k) / (z - r);
    const cplx w = cplx(0.0, inv_sqrt_pi) / (z - r);
    return {w, -2.0 * r * w};
  }
  static const WeidemanTable table;
  const cplx iz{-z.imag(), z.real()};
  const cplx den = table.L - iz;
  const cplx big_z = (table.L + iz) / den;
  cplx p = table.a[0];
  for (int i = 1; i < kWeidemanN; ++i) p = p * big_z + table.a[static_cast<std::size_t>(i)];
  const cplx w = 2.0 * p / (den * den) + inv_sqrt_pi / den;
  return {w, -2.0 * z * w + cplx(0.0, 2.0 * inv_sqrt_pi)};
}

// K(omega + i shift) = -i sqrt(pi/2)/sigma w(z), z = (omega - eps_a + i shift)/(sqrt2 sigma).
Resolvent resolvent_shifted(double omega, double shift, double eps_a, double sigma) {
  const double scale = std::numbers::sqrt2 * sigma;
  const Faddeeva f = faddeeva_upper(cplx(omega - eps_a, shift) / scale);
  const cplx pre{0.0, -std::sqrt(kPi / 2.0) / sigma};
  return {pre * f.w, pre * f.dw / scale};
}

template <bool kFull>
void accumulate(const std::vector<double>& eps, const std::vector<double>& v2, double omega,
                double damping, std::size_t lo, std::size_t hi, EmpiricalSystem::Sums& out) {
  if (hi - lo > kPairwiseBlock) {
    const std::size_t mid = lo + (hi - lo) / 2;
    EmpiricalSystem::Sums left;
    EmpiricalSystem::Sums right;
    accumulate<kFull>(eps, v2, omega, damping, lo, mid, left);
    accumulate<kFull>(eps, v2, omega, damping, mid, hi, right);
    out.bare = left.bare + right.bare;
    out.sigma = left.sigma + right.sigma;
    out.d_sigma = left.d_sigma + right.d_sigma;
    return;
  }
  double bare_re = 0.0, bare_im = 0.0;
  double sig_re = 0.0, sig_im = 0.0;
  double der_re = 0.0, der_im = 0.0;
  for (std::size_t i = lo; i < hi; ++i) {
    // 1/(a + i b) with a = omega - eps_i, b = damping.
    const double a = omega - eps[i];
    const double inv = 1.0 / (a * a + damping * damping);
    const double r_re = a * inv;
    const double r_im = -damping * inv;
    sig_re += v2[i] * r_re;
    sig_im += v2[i] * r_im;
    if constexpr (kFull) {
      bare_re += r_re;
      bare_im += r_im;
      const double sq_re = r_re * r_re - r_im * r_im;
      const double sq_im = 2.0 * r_re * r_im;
      der_re -= v2[i] * sq_re;
      der_im -= v2[i] * sq_im;
    }
  }
  out.bare = {bare_re, bare_im};
  out.sigma = {sig_re, sig_im};
  out.d_sigma = {der_re, der_im};
}

void require_eta(double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw DomainError("self-energy: eta must be > 0");
  }
}

SelfEnergyValue from_complex(double omega, cplx sigma, cplx derivative) {
  return {omega, sigma.real(), sigma.imag(), derivative};
}

}  // namespace

Resolvent gaussian_resolvent(double omega, double shift, double eps_a, double sigma) {
  if (!(shift >= 0.0)) throw DomainError("gaussian_resolvent: shift must be >= 0");
  if (!(sigma >= 0.0)) throw DomainError("gaussian_resolvent: sigma must be >= 0");
  if (sigma == 0.0) {
    const cplx r = 1.0 / cplx(omega - eps_a, shift);
    return {r, -r * r};
  }
  return shift == 0.0 ? resolvent_real_axis(omega, eps_a, sigma)
                      : resolvent_shifted(omega, shift, eps_a, sigma);
}

EmpiricalSystem::EmpiricalSystem(const DisorderRealization& realization,
                                 const ModelParams& params)
    : eps_(polariton::site_energies(realization, params)), gamma_a_(params.gamma_a) {
  realization.validate(params.n_molecules);
  v2_ = couplings(realization, params);
  for (double& v : v2_) v *= v;
  for (double w : v2_) bright_weight_ += w;
}

EmpiricalSystem::EmpiricalSystem(std::vector<double> site_energies,
                                 std::vector<double> coupling_sq, double gamma_a)
    : eps_(std::move(site_energies)), v2_(std::move(coupling_sq)), gamma_a_(gamma_a) {
  if (eps_.size() != v2_.size()) {
    throw InvalidParameter("site energies and couplings must have equal length");
  }
  for (double w : v2_) bright_weight_ += w;
}

EmpiricalSystem::Sums EmpiricalSystem::sums(double omega, double eta) const {
  Sums out;
  if (!eps_.empty()) accumulate<true>(eps_, v2_, omega, eta + gamma_a_, 0, eps_.size(), out);
  return out;
}

cplx EmpiricalSystem::sigma(double omega, double eta) const {
  Sums out;
  if (!eps_.empty()) accumulate<false>(eps_, v2_, omega, eta + gamma_a_, 0, eps_.size(), out);
  return out.sigma;
}

SelfEnergyValue sigma_empirical(double omega, const DisorderRealization& realization,
                                const ModelParams& params, double eta) {
  require_eta(eta);
  const EmpiricalSystem system(realization, params);
  const auto s = system.sums(omega, eta);
  return from_complex(omega, s.sigma, s.d_sigma);
}

SelfEnergyValue sigma_analytic(double omega, const ModelParams& params) {
  return sigma_analytic(omega, params, 0.0);
}

SelfEnergyValue sigma_analytic(double omega, const ModelParams& params, double eta) {
  if (!(params.sigma > 0.0)) {
    throw DomainError("sigma_analytic: sigma must be > 0 (use sigma_resonant_limit)");
  }
  if (!(eta >= 0.0)) throw DomainError("sigma_analytic: eta must be >= 0");
  const double g2 = params.coupling() * params.coupling();
  const Resolvent k = gaussian_resolvent(omega, eta + params.gamma_a, params.eps_a, params.sigma);
  return from_complex(omega, g2 * k.value, g2 * k.derivative);
}

SelfEnergyValue sigma_resonant_limit(double omega, const ModelParams& params, double eta) {
  require_eta(eta);
  const double g2 = params.coupling() * params.coupling();
  const cplx r = 1.0 / cplx(omega - params.eps_a, eta + params.gamma_a);
  return from_complex(omega, g2 * r, -g2 * r * r);
}

double model2_average_factor(const ModelParams& params) {
  return params.model2_coupling == Model2Coupling::Raw ? 1.0 / 6.0 : 1.0;
}

SelfEnergyValue sigma_model2_averaged(double omega, const DisorderRealization& realization,
                                      const ModelParams& params, double eta) {
  require_eta(eta);
  realization.validate(params.n_molecules);
  const double v = params.per_molecule_coupling();
  std::vector<double> v2(realization.size(), v * v * model2_average_factor(params));
  const EmpiricalSystem system(site_energies(realization, params), std::move(v2),
                               params.gamma_a);
  const auto s = system.sums(omega, eta);
  return from_complex(omega, s.sigma, s.d_sigma);
}

}  // namespace polariton
