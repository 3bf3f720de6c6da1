// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
#include "polariton/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "polariton/parallel.hpp"

namespace polariton {

namespace {

struct Pole {
  double d;
  double w;  // summed |V_i|^2 of the molecules sitting at d
};

struct Eigenpair {
  double lambda;
  double cavity;
  double mol;
};

// f(tau) = (d_j + tau) - eps_c - sum_k w_k/((d_j - d_k) + tau), i.e. the
// secular function in coordinates centred on pole j.
class ShiftedSecular {
 public:
  ShiftedSecular(const std::vector<Pole>& poles, std::size_t origin, double eps_c)
      : poles_(poles), origin_(poles[origin].d), offset_(poles[origin].d - eps_c) {
    delta_.reserve(poles.size());
    for (const Pole& p : poles) delta_.push_back(origin_ - p.d);
  }

  [[nodiscard]] double operator()(double tau) const {
    double s = 0.0;
    for (std::size_t k = 0; k < poles_.size(); ++k) s += poles_[k].w / (delta_[k] + tau);
    return offset_ + tau - s;
  }

  // Bisection on (lo, hi) where f(lo) < 0 < f(hi); stops when the midpoint no
  // longer splits the interval.
  [[nodiscard]] double solve(double lo, double hi) const {
    for (int it = 0; it < 2000; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if ((*this)(mid) < 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }

  [[nodiscard]] Eigenpair eigenpair(double tau, double bright_weight) const {
    double norm = 1.0;
    double overlap = 0.0;
    for (std::size_t k = 0; k < poles_.size(); ++k) {
      const double diff = delta_[k] + tau;
      norm += poles_[k].w / (diff * diff);
      overlap += poles_[k].w / diff;
    }
    return {origin_ + tau, 1.0 / norm, overlap * overlap / (bright_weight * norm)};
  }

 private:
  const std::vector<Pole>& poles_;
  double origin_;
  double offset_;
  std::vector<double> delta_;
};

void sort_result(std::vector<Eigenpair>& pairs, OracleResult& out) {
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Eigenpair& a, const Eigenpair& b) { return a.lambda < b.lambda; });
  out.eigenvalues.clear();
  out.cavity_weights.clear();
  out.mol_weights.clear();
  for (const Eigenpair& p : pairs) {
    out.eigenvalues.push_back(p.lambda);
    out.cavity_weights.push_back(p.cavity);
    out.mol_weights.push_back(p.mol);
  }
}

}  // namespace

void ArrowMatrix::validate() const {
  if (diagonal.size() != couplings.size()) {
    throw InvalidParameter("arrow matrix: diagonal and couplings must have equal length");
  }
  if (!std::isfinite(eps_c)) throw InvalidParameter("arrow matrix: eps_c must be finite");
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    if (!std::isfinite(diagonal[i]) || !std::isfinite(couplings[i])) {
      throw InvalidParameter("arrow matrix: entries must be finite");
    }
  }
}

ArrowMatrix make_arrow(const DisorderRealization& realization, const ModelParams& params) {
  realization.validate(params.n_molecules);
  return {params.eps_c, site_energies(realization, params), couplings(realization, params)};
}

OracleResult solve_arrow_secular(const ArrowMatrix& h) {
  h.validate();
  const std::size_t n = h.diagonal.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return h.diagonal[a] < h.diagonal[b]; });

  // Deflation: each group of equal eps_i keeps one coupled combination; the
  // rest (and any group with zero coupling) are dark eigenvalues.
  std::vector<Pole> poles;
  std::vector<Eigenpair> pairs;
  pairs.reserve(n + 1);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    double w = 0.0;
    while (j < n && h.diagonal[order[j]] == h.diagonal[order[i]]) {
      w += h.couplings[order[j]] * h.couplings[order[j]];
      ++j;
    }
    const double d = h.diagonal[order[i]];
    const std::size_t dark = w > 0.0 ? j - i - 1 : j - i;
    for (std::size_t k = 0; k < dark; ++k) pairs.push_back({d, 0.0, 0.0});
    if (w > 0.0) poles.push_back({d, w});
    i = j;
  }

  double bright = 0.0;
  for (const Pole& p : poles) bright += p.w;
  if (poles.empty()) {
    pairs.push_back({h.eps_c, 1.0, 0.0});
    OracleResult out;
    sort_result(pairs, out);
    return out;
  }

  const std::size_t m = poles.size();
  std::vector<Eigenpair> roots(m + 1);
  const double reach = std::sqrt(bright) + std::abs(h.eps_c - poles.front().d) +
                       std::abs(h.eps_c - poles.back().d) + 1.0;
  parallel_for(m + 1, [&](std::size_t r) {
    if (r == 0) {
      // Below the lowest pole.
      const ShiftedSecular f(poles, 0, h.eps_c);
      double lo = -reach;
      while (f(lo) > 0.0) lo *= 2.0;
      roots[r] = f.eigenpair(f.solve(lo, 0.0), bright);
    } else if (r == m) {
      const ShiftedSecular f(poles, m - 1, h.eps_c);
      double hi = reach;
      while (f(hi) < 0.0) hi *= 2.0;
      roots[r] = f.eigenpair(f.solve(0.0, hi), bright);
    } else {
      const double gap = poles[r].d - poles[r - 1].d;
      const ShiftedSecular left(poles, r - 1, h.eps_c);
      if (left(0.5 * gap) >= 0.0) {
        roots[r] = left.eigenpair(left.solve(0.0, 0.5 * gap), bright);
      } else {
        const ShiftedSecular right(poles, r, h.eps_c);
        roots[r] = right.eigenpair(right.solve(-0.5 * gap, 0.0), bright);
      }
    }
  });
  pairs.insert(pairs.end(), roots.begin(), roots.end());
  OracleResult out;
  sort_result(pairs, out);
  return out;
}

OracleResult solve_arrow_dense(const ArrowMatrix& h) {
  h.validate();
  const std::size_t n = h.diagonal.size();
  if (n > 10000) throw DomainError("dense oracle limited to N <= 10^4");
  const auto dim = static_cast<Eigen::Index>(n + 1);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  m(0, 0) = h.eps_c;
  double bright = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<Eigen::Index>(i + 1);
    m(k, k) = h.diagonal[i];
    m(0, k) = m(k, 0) = h.couplings[i];
    bright += h.couplings[i] * h.couplings[i];
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw SingularityError("dense eigensolver failed");

  OracleResult out;
  const auto& vecs = solver.eigenvectors();
  for (Eigen::Index c = 0; c < dim; ++c) {
    out.eigenvalues.push_back(solver.eigenvalues()(c));
    out.cavity_weights.push_back(vecs(0, c) * vecs(0, c));
    double overlap = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      overlap += h.couplings[i] * vecs(static_cast<Eigen::Index>(i + 1), c);
    }
    out.mol_weights.push_back(bright > 0.0 ? overlap * overlap / bright : 0.0);
  }
  return out;
}

DenseResolvent dense_resolvent(const ArrowMatrix& h, double omega, double eta) {
  h.validate();
  using Mat = Eigen::MatrixXcd;
  const std::size_t n = h.diagonal.size();
  const auto dim = static_cast<Eigen::Index>(n + 1);
  const std::complex<double> z{omega, eta};
  Mat a = Mat::Zero(dim, dim);
  a(0, 0) = z - h.eps_c;
  double bright = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<Eigen::Index>(i + 1);
    a(k, k) = z - h.diagonal[i];
    a(0, k) = a(k, 0) = -h.couplings[i];
    bright += h.couplings[i] * h.couplings[i];
  }
  const Mat inv = a.partialPivLu().inverse();
  Eigen::VectorXcd u = Eigen::VectorXcd::Zero(dim);
  for (std::size_t i = 0; i < n; ++i) {
    u(static_cast<Eigen::Index>(i + 1)) = h.couplings[i] / std::sqrt(bright);
  }
  DenseResolvent out;
  out.g_cc = inv(0, 0);
  out.g_molmol = bright > 0.0 ? std::complex<double>(u.transpose() * inv * u)
                              : std::complex<double>{};
  out.trace = inv.trace();
  return out;
}

Spectrum lorentzian_spectrum(const std::vector<double>& eigenvalues,
                             const std::vector<double>& weights, const SpectralGrid& grid) {
  grid.validate();
  if (eigenvalues.size() != weights.size()) {
    throw InvalidParameter("eigenvalues and weights must have equal length");
  }
  Spectrum out;
  out.omega = grid.points();
  out.value.assign(grid.n_points, 0.0);
  const double eta = grid.eta;
  parallel_for(grid.n_points, [&](std::size_t i) {
    double acc = 0.0;
    for (std::size_t m = 0; m < eigenvalues.size(); ++m) {
      const double d = out.omega[i] - eigenvalues[m];
      acc += weights[m] * eta / (d * d + eta * eta);
    }
    out.value[i] = acc / std::numbers::pi;
  });
  return out;
}

OracleSpectra exact_diagonalization_oracle(const DisorderRealization& realization,
                                           const ModelParams& params,
                                           const SpectralGrid& grid) {
  params.validate();
  if (params.gamma_a != 0.0 || params.gamma_c != 0.0) {
    throw InvalidParameter("exact diagonalization requires gamma_a = gamma_c = 0");
  }
  OracleSpectra out;
  out.result = solve_arrow_secular(make_arrow(realization, params));
  const auto& r = out.result;
  out.rho_c = lorentzian_spectrum(r.eigenvalues, r.cavity_weights, grid);
  out.rho_c.label = "rho_c:oracle";
  out.rho_mol = lorentzian_spectrum(r.eigenvalues, r.mol_weights, grid);
  out.rho_mol.label = "rho_mol:oracle";
  out.rho_t = lorentzian_spectrum(r.eigenvalues, std::vector<double>(r.eigenvalues.size(), 1.0),
                                  grid);
  out.rho_t.label = "rho_t:oracle";
  return out;
}

}  // namespace polariton
