// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
#include "polariton/reference.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace polariton::reference {

namespace {

using boost::math::quadrature::gauss_kronrod;

template <class F>
double integrate_pieces(F f, std::vector<double> cuts) {
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    if (cuts[i] > cuts[i - 1]) {
      total += gauss_kronrod<double, 61>::integrate(f, cuts[i - 1], cuts[i], 12, 1e-14);
    }
  }
  return total;
}

}  // namespace

double dawson_by_quadrature(double x) {
  if (!std::isfinite(x)) throw std::domain_error("dawson_by_quadrature: x must be finite");
  if (x == 0.0) return 0.0;
  const double a = std::abs(x);
  // With t = a - y the integrand exp(-t (2a - t)) decays on the scale 1/(2a).
  auto f = [a](double t) { return std::exp(-t * (2.0 * a - t)); };
  std::vector<double> cuts{0.0, a};
  for (double k : {1.0, 4.0, 16.0, 64.0}) {
    const double c = k / (2.0 * a);
    if (c < a) cuts.push_back(c);
  }
  const double v = integrate_pieces(f, cuts);
  return std::signbit(x) ? -v : v;
}

std::complex<double> gaussian_resolvent_by_quadrature(double omega, double shift, double eps_a,
                                                      double sigma) {
  if (!(shift > 0.0) || !(sigma > 0.0)) {
    throw std::domain_error("gaussian_resolvent_by_quadrature: shift and sigma must be > 0");
  }
  const double norm = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * sigma);
  const double d = omega - eps_a;
  auto weight = [&](double xi) { return norm * std::exp(-0.5 * xi * xi / (sigma * sigma)); };
  auto re = [&](double xi) {
    const double a = d - xi;
    return weight(xi) * a / (a * a + shift * shift);
  };
  auto im = [&](double xi) {
    const double a = d - xi;
    return -weight(xi) * shift / (a * a + shift * shift);
  };
  const double span = 12.0 * sigma;
  std::vector<double> cuts{-span, span, 0.0};
  for (double k : {-100.0, -10.0, -1.0, 0.0, 1.0, 10.0, 100.0}) {
    const double c = d + k * shift;
    if (c > -span && c < span) cuts.push_back(c);
  }
  return {integrate_pieces(re, cuts), integrate_pieces(im, cuts)};
}

}  // namespace polariton::reference
