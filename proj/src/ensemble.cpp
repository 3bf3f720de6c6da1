// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
#include "polariton/ensemble.hpp"

#include <cmath>
#include <numbers>

#include "polariton/parallel.hpp"

namespace polariton {

namespace {

constexpr std::uint32_t kM0 = 0xD2511F53u;
constexpr std::uint32_t kM1 = 0xCD9E8D57u;
constexpr std::uint32_t kW0 = 0x9E3779B9u;
constexpr std::uint32_t kW1 = 0xBB67AE85u;

// Realizations per reduction block. Fixed, so the merge tree does not depend
// on the number of threads.
constexpr std::size_t kBlock = 16;

struct Moments {
  double n = 0.0;
  std::vector<double> mean;
  std::vector<double> m2;
};

// Chan et al. pairwise update of (n, mean, M2).
void merge_into(Moments& a, const Moments& b) {
  if (b.n == 0.0) return;
  if (a.n == 0.0) {
    a = b;
    return;
  }
  const double n = a.n + b.n;
  for (std::size_t i = 0; i < a.mean.size(); ++i) {
    const double delta = b.mean[i] - a.mean[i];
    a.mean[i] += delta * (b.n / n);
    a.m2[i] += b.m2[i] + delta * delta * (a.n * b.n / n);
  }
  a.n = n;
}

Moments tree_merge(std::vector<Moments>& blocks, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return std::move(blocks[lo]);
  const std::size_t mid = lo + (hi - lo) / 2;
  Moments left = tree_merge(blocks, lo, mid);
  const Moments right = tree_merge(blocks, mid, hi);
  merge_into(left, right);
  return left;
}

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kW0;
      key[1] += kW1;
    }
    const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t index)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      ctr_{0u, 0u, static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)} {}

std::uint64_t RandomStream::next_u64() {
  if (used_ >= 4) {
    buffer_ = Philox4x32::block(ctr_, key_);
    if (++ctr_[0] == 0) ++ctr_[1];
    used_ = 0;
  }
  const std::uint64_t v =
      (static_cast<std::uint64_t>(buffer_[used_]) << 32) | buffer_[used_ + 1];
  used_ += 2;
  return v;
}

double RandomStream::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double RandomStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] keeps the logarithm finite.
  const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

void EnsembleSpec::validate() const {
  if (n_realizations < 1) throw InvalidParameter("n_realizations >= 1");
}

DisorderRealization sample_realization(const EnsembleSpec& spec, std::size_t index,
                                       const ModelParams& params) {
  spec.validate();
  if (index >= spec.n_realizations) throw InvalidParameter("realization index < n_realizations");
  const std::size_t n = params.n_molecules;
  RandomStream rng(spec.base_seed, index);
  DisorderRealization r;
  r.seed = spec.base_seed;
  r.xi.resize(n);
  for (double& x : r.xi) x = params.sigma * rng.normal();
  if (spec.model == Model::II) {
    std::vector<double> theta(n);
    std::vector<double> z(n);
    for (double& t : theta) t = std::acos(2.0 * rng.uniform() - 1.0);
    for (double& v : z) v = rng.uniform();
    r.theta = std::move(theta);
    r.z = std::move(z);
  }
  return r;
}

EnsembleSpectrum ensemble_average(const EnsembleSpec& spec, const ModelParams& params,
                                  const SpectralGrid& grid, SpectrumKind kind,
                                  const SpectrumOptions& options) {
  spec.validate();
  params.validate();
  grid.validate();
  const std::vector<double> omega = grid.points();
  const std::size_t points = omega.size();
  const std::size_t n_blocks = (spec.n_realizations + kBlock - 1) / kBlock;

  std::vector<Moments> blocks(n_blocks);
  parallel_for(n_blocks, [&](std::size_t b) {
    Moments& m = blocks[b];
    m.mean.assign(points, 0.0);
    m.m2.assign(points, 0.0);
    const std::size_t end = std::min(spec.n_realizations, (b + 1) * kBlock);
    for (std::size_t r = b * kBlock; r < end; ++r) {
      const SpectralEvaluator evaluator(EmpiricalSource{sample_realization(spec, r, params)},
                                        params, grid.eta);
      m.n += 1.0;
      for (std::size_t i = 0; i < points; ++i) {
        const double x = evaluator.value(kind, omega[i], options);
        const double delta = x - m.mean[i];
        m.mean[i] += delta / m.n;
        m.m2[i] += delta * (x - m.mean[i]);
      }
    }
  });

  const Moments total = tree_merge(blocks, 0, n_blocks);
  EnsembleSpectrum out;
  out.omega = omega;
  out.mean = total.mean;
  out.std_error.assign(points, 0.0);
  out.n_realizations = spec.n_realizations;
  out.label = std::string(to_string(kind)) + ":ensemble";
  if (total.n > 1.0) {
    for (std::size_t i = 0; i < points; ++i) {
      const double variance = total.m2[i] / (total.n - 1.0);
      out.std_error[i] = std::sqrt(std::max(variance, 0.0) / total.n);
    }
  }
  return out;
}

std::vector<ConvergenceRow> convergence_report(const EnsembleSpec& spec,
                                               const ModelParams& params,
                                               const SpectralGrid& grid, SpectrumKind kind,
                                               const std::vector<std::size_t>& checkpoints,
                                               const SpectrumOptions& options) {
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 1 || (i > 0 && checkpoints[i] <= checkpoints[i - 1])) {
      throw InvalidParameter("checkpoints must be ascending and >= 1");
    }
  }
  const Spectrum analytic =
      compute_spectrum(kind, grid, AnalyticSource{spec.model}, params, options);
  const double step = grid.step();
  std::vector<ConvergenceRow> rows;
  for (std::size_t r : checkpoints) {
    EnsembleSpec sub = spec;
    sub.n_realizations = r;
    const EnsembleSpectrum e = ensemble_average(sub, params, grid, kind, options);
    ConvergenceRow row;
    row.n_realizations = r;
    double acc = 0.0;
    double se = 0.0;
    for (std::size_t i = 0; i < e.mean.size(); ++i) {
      const double d = e.mean[i] - analytic.value[i];
      acc += d * d * step;
      se += e.std_error[i];
    }
    row.l2_distance = std::sqrt(acc);
    row.mean_stderr = se / static_cast<double>(e.mean.size());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace polariton
