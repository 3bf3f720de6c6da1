// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
#include "polariton/polaritons.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "polariton/self_energy.hpp"

namespace polariton {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxScanPoints = 4'000'000;

double secular(double omega, const ModelParams& params) {
  return omega - params.eps_c - sigma_analytic(omega, params).re;
}

std::vector<double> scan_roots(const ModelParams& params, double resolution) {
  const double g = params.coupling();
  const double lo = std::min(params.eps_a, params.eps_c) - 3.0 * g - 5.0 * params.sigma;
  const double hi = std::max(params.eps_a, params.eps_c) + 3.0 * g + 5.0 * params.sigma;
  const double scale = g > 0.0 ? std::min(params.sigma, g) : params.sigma;
  const auto n = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::ceil((hi - lo) / (scale / resolution))), 16, kMaxScanPoints);
  const double step = (hi - lo) / static_cast<double>(n);

  std::vector<double> roots;
  double a = lo;
  double fa = secular(a, params);
  for (std::size_t i = 1; i <= n; ++i) {
    const double b = i == n ? hi : lo + static_cast<double>(i) * step;
    const double fb = secular(b, params);
    if (fa == 0.0) {
      roots.push_back(a);
    } else if ((fa < 0.0) != (fb < 0.0) && fb != 0.0) {
      std::uintmax_t iters = 200;
      const auto bracket = boost::math::tools::toms748_solve(
          [&](double w) { return secular(w, params); }, a, b, fa, fb,
          boost::math::tools::eps_tolerance<double>(52), iters);
      roots.push_back(0.5 * (bracket.first + bracket.second));
    }
    a = b;
    fa = fb;
  }
  if (fa == 0.0) roots.push_back(a);
  return roots;
}

PoleEntry describe(double omega, const ModelParams& params) {
  const SelfEnergyValue s = sigma_analytic(omega, params);
  const double g2 = params.coupling() * params.coupling();
  const double detuning = omega - params.eps_a;
  PoleEntry e;
  e.energy = omega;
  e.residue = 1.0 / (1.0 + g2 / (detuning * detuning));
  e.quasiparticle_weight = 1.0 / (1.0 - s.d_omega.real());
  e.sigma_im = s.im;
  e.width_estimate = 2.0 * std::abs(s.im) * e.residue;
  return e;
}

}  // namespace

std::size_t PoleReport::polaritonic_count() const {
  return static_cast<std::size_t>(std::count_if(poles.begin(), poles.end(), [](const PoleEntry& p) {
    return p.kind == PoleKind::Polaritonic;
  }));
}

ExistenceResult existence_check(const ModelParams& params) {
  params.validate();
  if (params.sigma == 0.0) return {true, std::numeric_limits<double>::infinity()};
  const double g = params.coupling();
  const double ratio = g * g / (params.sigma * params.sigma);
  return {ratio > 1.0, ratio};
}

PoleReport find_poles(const ModelParams& params, const PoleSearchOptions& options) {
  params.validate();
  if (!(options.scan_resolution >= 1.0)) throw InvalidParameter("scan_resolution >= 1");
  PoleReport report;
  report.existence_ratio = existence_check(params).ratio;
  const PolaritonPair closed = polariton_energies_closed(params);

  if (params.sigma == 0.0) {
    PoleEntry minus{closed.eps_minus, PoleKind::Polaritonic, closed.residue_minus,
                    closed.residue_minus, 0.0, 0.0};
    PoleEntry plus{closed.eps_plus, PoleKind::Polaritonic, closed.residue_plus,
                   closed.residue_plus, 0.0, 0.0};
    report.poles = {minus, plus};
    report.gap = closed.eps_plus - closed.eps_minus;
    report.gap_scale = *report.gap;
    return report;
  }

  const std::vector<double> roots = scan_roots(params, options.scan_resolution);
  report.gap_scale = roots.size() >= 2 ? roots.back() - roots.front()
                                       : closed.eps_plus - closed.eps_minus;
  for (double r : roots) {
    PoleEntry e = describe(r, params);
    // The asymptotic residue vanishes at an on-resonance virtual root, so the
    // classification uses the bare imaginary part.
    e.kind = 2.0 * std::abs(e.sigma_im) < options.width_threshold * report.gap_scale
                 ? PoleKind::Polaritonic
                 : PoleKind::Virtual;
    report.poles.push_back(e);
  }
  std::vector<double> polaritonic;
  for (const PoleEntry& p : report.poles) {
    if (p.kind == PoleKind::Polaritonic) polaritonic.push_back(p.energy);
  }
  if (polaritonic.size() >= 2) report.gap = polaritonic.back() - polaritonic.front();
  return report;
}

PolaritonPair polariton_energies_closed(const ModelParams& params) {
  const double g = params.coupling();
  const double mean = 0.5 * (params.eps_a + params.eps_c);
  const double d = 0.5 * (params.eps_a - params.eps_c);
  const double r = std::sqrt(g * g + d * d);
  PolaritonPair out{mean + r, mean - r, 0.0, 0.0};
  if (g == 0.0) {
    out.residue_plus = out.eps_plus == params.eps_c ? 1.0 : 0.0;
    out.residue_minus = 1.0 - out.residue_plus;
    return out;
  }
  auto residue = [&](double e) {
    const double x = e - params.eps_a;
    return 1.0 / (1.0 + g * g / (x * x));
  };
  out.residue_plus = residue(out.eps_plus);
  out.residue_minus = residue(out.eps_minus);
  return out;
}

SecondOrderPoles polariton_energies_second_order(const ModelParams& params) {
  const double g = params.coupling();
  const double s2 = params.sigma * params.sigma;
  const PolaritonPair closed = polariton_energies_closed(params);
  SecondOrderPoles out{closed.eps_plus, closed.eps_minus, closed.eps_plus - closed.eps_minus,
                       params.sigma > g / 3.0};
  if (s2 == 0.0) return out;
  if (g == 0.0) throw DomainError("second-order pole energies need g > 0");
  const double d = 0.5 * (params.eps_a - params.eps_c);
  const double r = std::sqrt(g * g + d * d);
  auto correction = [&](double s) { return s * s2 * (d * (d + s * r) + g * g) / (g * g * r); };
  out.eps_plus += correction(1.0);
  out.eps_minus += correction(-1.0);
  out.gap = out.eps_plus - out.eps_minus;
  return out;
}

double width_estimate(const ModelParams& params) {
  if (!(params.sigma > 0.0)) throw DomainError("width_estimate: sigma must be > 0");
  const double g2 = params.coupling() * params.coupling();
  const double s = params.sigma;
  return g2 * kPi / (std::sqrt(2.0 * kPi) * s) * std::exp(-g2 / (2.0 * s * s));
}

std::pair<std::complex<double>, std::complex<double>> complex_poles_with_lifetimes(
    const ModelParams& params) {
  using C = std::complex<double>;
  const double g = params.coupling();
  const C centre{params.eps_a + params.eps_c, -(params.gamma_a + params.gamma_c)};
  const C d{params.eps_c - params.eps_a, params.gamma_a - params.gamma_c};
  const C root = std::sqrt(d * d + 4.0 * g * g);
  return {0.5 * (centre + root), 0.5 * (centre - root)};
}

AbsorptionPartition absorption_partition(const ModelParams& params, bool omega_weighted) {
  if (!(params.sigma > 0.0)) throw DomainError("absorption_partition: sigma must be > 0");
  const PoleReport report = find_poles(params);
  std::vector<double> pol;
  for (const PoleEntry& p : report.poles) {
    if (p.kind == PoleKind::Polaritonic) pol.push_back(p.energy);
  }
  if (pol.size() < 2) throw DomainError("absorption_partition: no polariton pair found");

  const double g2 = params.coupling() * params.coupling();
  AbsorptionPartition out;
  for (double w : pol) {
    const SelfEnergyValue s = sigma_analytic(w, params);
    const double z = 1.0 / (1.0 - s.d_omega.real());
    const double weight = (w - params.eps_c) * (w - params.eps_c) * z / g2;
    out.polaritonic += omega_weighted ? w * weight : weight;
  }

  // Band between the outer polaritons. The last 1e-4 of the gap next to each
  // pole belongs to the pole's Lorentzian and is attributed to it.
  const double margin = 1e-4 * (pol.back() - pol.front());
  const double lo = pol.front() + margin;
  const double hi = pol.back() - margin;
  auto rho_mol = [&](double w) {
    const SelfEnergyValue s = sigma_analytic(w, params);
    // Im[Sigma (1 + Sigma G_cc)] = Im[Sigma c/(c - Sigma)], c = omega - eps_c + i gamma_c,
    // written without the cancellation between 1 and Sigma G_cc near a pole.
    const cplx sig = s.value();
    const cplx c(w - params.eps_c, params.gamma_c);
    const double im = (std::norm(c) * sig.imag() - params.gamma_c * std::norm(sig)) /
                      std::norm(c - sig);
    const double rho = -im / (kPi * g2);
    return omega_weighted ? w * rho : rho;
  };
  std::vector<double> cuts{lo, hi};
  for (double k : {-6.0, -3.0, 0.0, 3.0, 6.0}) {
    const double c = params.eps_a + k * params.sigma;
    if (c > lo && c < hi) cuts.push_back(c);
  }
  for (const PoleEntry& p : report.poles) {
    if (p.energy > lo && p.energy < hi) cuts.push_back(p.energy);
  }
  // The integrand falls off as the pole's Lorentzian tail, ~ 1/(omega - pole)^2;
  // geometric cuts keep each piece smooth. omega - eps_c - Sigma_R carries
  // ~1e-11 relative rounding next to the poles, hence the 1e-10 tolerance.
  for (double d = 10.0 * margin; d < 0.5 * (hi - lo); d *= 10.0) {
    cuts.push_back(pol.front() + d);
    cuts.push_back(pol.back() - d);
  }
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    out.grey += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        rho_mol, cuts[i - 1], cuts[i], 15, 1e-10);
  }
  const double total = out.polaritonic + out.grey;
  out.polaritonic_fraction = out.polaritonic / total;
  out.grey_fraction = out.grey / total;
  return out;
}

}  // namespace polariton
