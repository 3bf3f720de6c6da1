// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Slow, independent quadrature evaluations used only to check the fast paths.
#pragma once

#include <complex>

namespace polariton::reference {

/// Dawson function as int_0^x exp(y^2 - x^2) dy by adaptive Gauss-Kronrod.
/// Combining the exponents keeps the integrand <= 1 for any x.
[[nodiscard]] double dawson_by_quadrature(double x);

/// E[1/(omega + i shift - eps_a - xi)] for xi ~ N(0, sigma^2) by direct
/// quadrature over xi. Requires shift > 0 and sigma > 0.
[[nodiscard]] std::complex<double> gaussian_resolvent_by_quadrature(double omega, double shift,
                                                                    double eps_a, double sigma);

}  // namespace polariton::reference
