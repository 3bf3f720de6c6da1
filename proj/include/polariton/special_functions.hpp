// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace polariton {

/// Dawson's integral F(x) = exp(-x^2) * integral_0^x exp(y^2) dy together
/// with its derivative. derivative == 1 - 2 x value.
struct DawsonEval {
  double x = 0.0;
  double value = 0.0;
  double derivative = 1.0;
};

/// Dawson's integral, absolute error below 1e-13 for all finite x.
/// Exactly odd: dawson(-x) == -dawson(x). Throws DomainError for non-finite x.
[[nodiscard]] double dawson(double x);

/// Truncated large-|x| expansion 1/(2x) + 1/(4x^3) + 3/(8x^5), keeping
/// n_terms (1..3) terms. Requires |x| >= 3.
[[nodiscard]] double dawson_asymptotic(double x, int n_terms);

/// F'(x) = 1 - 2 x F(x).
[[nodiscard]] double dawson_derivative(double x);

[[nodiscard]] DawsonEval dawson_eval(double x);

namespace testing {
/// Negative-control hook for the self-test: when enabled, the sampling-sum
/// branch of dawson() uses a deliberately perturbed step.
void set_dawson_fault_injection(bool enabled);
}  // namespace testing

}  // namespace polariton
