// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
#include "polariton/special_functions.hpp"

#include <atomic>
#include <cmath>
#include <numbers>

#include "polariton/core_model.hpp"

namespace polariton {

namespace {

std::atomic<bool> g_fault_injection{false};

constexpr double kSeriesLimit = 1.0;
constexpr double kAsymptoticLimit = 50.0;

// Alternating power series sum_n (-2x^2)^n x / (2n+1)!!, used for |x| < 1.
double dawson_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int n = 1; n < 60; ++n) {
    term *= -2.0 * x2 / (2.0 * n + 1.0);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Rybicki's sampling formula F(x) ~ pi^{-1/2} sum_{n odd} exp(-(x - n h)^2) / n.
// The aliasing error is of order exp(-(pi/(2h))^2), about 1e-27 at h = 0.2,
// and terms with |x - n h| > 7 are below 1e-21.
double dawson_sampling(double x) {
  const double h = g_fault_injection.load(std::memory_order_relaxed) ? 0.45 : 0.2;
  constexpr double kWindow = 7.0;
  long n_lo = static_cast<long>(std::floor((x - kWindow) / h));
  const long n_hi = static_cast<long>(std::ceil((x + kWindow) / h));
  if (n_lo % 2 == 0) ++n_lo;
  double sum = 0.0;
  for (long n = n_lo; n <= n_hi; n += 2) {
    const double d = x - static_cast<double>(n) * h;
    sum += std::exp(-d * d) / static_cast<double>(n);
  }
  return sum / std::sqrt(std::numbers::pi);
}

// Tail sum_{k>=1} (2k-1)!! / (2x^2)^k of the asymptotic series
// F(x) = (1/2x)(1 + tail); for |x| > 50 five terms reach 1e-17.
double asymptotic_tail(double x) {
  const double inv = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 12; ++k) {
    term *= (2.0 * k - 1.0) * inv;
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double dawson_large(double x) { return (1.0 + asymptotic_tail(x)) / (2.0 * x); }

}  // namespace

double dawson(double x) {
  if (!std::isfinite(x)) throw DomainError("dawson: argument must be finite");
  const double ax = std::abs(x);
  double value;
  if (ax < kSeriesLimit) {
    value = dawson_series(ax);
  } else if (ax <= kAsymptoticLimit) {
    value = dawson_sampling(ax);
  } else {
    value = dawson_large(ax);
  }
  return std::signbit(x) ? -value : value;
}

double dawson_asymptotic(double x, int n_terms) {
  if (!std::isfinite(x) || std::abs(x) < 3.0) {
    throw DomainError("dawson_asymptotic: requires |x| >= 3");
  }
  if (n_terms < 1 || n_terms > 3) {
    throw DomainError("dawson_asymptotic: n_terms must be 1, 2 or 3");
  }
  const double x2 = x * x;
  double sum = 1.0 / (2.0 * x);
  if (n_terms >= 2) sum += 1.0 / (4.0 * x * x2);
  if (n_terms >= 3) sum += 3.0 / (8.0 * x * x2 * x2);
  return sum;
}

double dawson_derivative(double x) { return dawson_eval(x).derivative; }

DawsonEval dawson_eval(double x) {
  const double f = dawson(x);
  // 1 - 2xF cancels to -tail beyond the asymptotic limit; use the tail directly.
  if (std::abs(x) > kAsymptoticLimit) return {x, f, -asymptotic_tail(std::abs(x))};
  return {x, f, 1.0 - 2.0 * x * f};
}

namespace testing {
void set_dawson_fault_injection(bool enabled) {
  g_fault_injection.store(enabled, std::memory_order_relaxed);
}
}  // namespace testing

}  // namespace polariton
