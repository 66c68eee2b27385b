// Copyright 2026 The beamprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Moments, dispersions and distinguishability measures for density operators.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "beamprep/core.hpp"
#include "beamprep/philox.hpp"
#include "beamprep/tensor.hpp"

namespace beamprep {

template <typename Real = double>
struct MomentReport {
  Real mean = 0;
  Real second_moment = 0;
  Real dispersion = 0;
};

namespace detail {

/// Tr(rho A^2) for Hermitian A. Diagonal rho only needs the diagonal of A^2.
template <typename Real>
Real second_moment(const NOperator<Real>& rho, const NOperator<Real>& obs) {
  if (rho.is_diagonal() && !obs.is_diagonal()) {
    const auto& a = obs.dense_entries();
    const VectorXc<Real> sq_diag = a.cwiseProduct(a.transpose()).rowwise().sum();
    const Complex<Real> t = rho.diagonal_entries().cwiseProduct(sq_diag).sum();
    if (std::abs(t.imag()) > kAccumulatedTolerance<Real>) {
      throw NumericalError("moments: complex second moment");
    }
    return t.real();
  }
  return expectation(rho, matrix_power2(obs));
}

}  // namespace detail

/// Mean, second moment and dispersion of `obs` in state `rho`.
template <typename Real>
MomentReport<Real> moments(const NOperator<Real>& rho, const NOperator<Real>& obs) {
  MomentReport<Real> r;
  r.mean = expectation(rho, obs);
  r.second_moment = detail::second_moment(rho, obs);
  const Real variance = r.second_moment - r.mean * r.mean;
  if (variance < -kAccumulatedTolerance<Real>) {
    throw NumericalError("moments: negative variance " + std::to_string(double(variance)));
  }
  r.dispersion = variance > Real(0) ? std::sqrt(variance) : Real(0);
  return r;
}

/// Half the trace norm of (a - b).
template <typename Real>
Real trace_distance(const NOperator<Real>& a, const NOperator<Real>& b) {
  detail::require_same_n(a.n(), b.n(), "trace_distance");
  if (!a.flags().density || !b.flags().density) {
    throw ValidationError("trace_distance: arguments must be density operators");
  }
  if (a.is_diagonal() && b.is_diagonal()) {
    return (a.diagonal_entries() - b.diagonal_entries()).cwiseAbs().sum() / Real(2);
  }
  const MatrixXc<Real> diff = a.to_dense() - b.to_dense();
  if ((diff - diff.adjoint()).cwiseAbs().maxCoeff() > kTolerance<Real>) {
    throw NumericalError("trace_distance: difference of density operators is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<MatrixXc<Real>> solver(diff, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("trace_distance: eigensolver failed");
  return solver.eigenvalues().cwiseAbs().sum() / Real(2);
}

/// H = (G + G^dagger) / 2 with i.i.d. standard complex normal entries of G,
/// drawn column by column from `rng`.
template <typename Real = double>
NOperator<Real> random_hermitian(int n, PhiloxStream& rng) {
  require_particle_count(n, kDenseCap, "random_hermitian");
  const auto dim = static_cast<Eigen::Index>(hilbert_dimension(n));
  MatrixXc<Real> g(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const std::complex<double> z = rng.complex_normal();
      g(i, j) = Complex<Real>(Real(z.real()), Real(z.imag()));
    }
  }
  MatrixXc<Real> h = (g + g.adjoint()) / Real(2);
  return NOperator<Real>::dense(n, std::move(h), OperatorFlags::hermitian_only());
}

template <typename Real = double>
struct NoSignalingReport {
  int trials = 0;
  /// max_t |Tr(a H_t) - Tr(b H_t)|.
  Real max_deviation = 0;
  /// max_t of the deviation divided by the Frobenius norm of H_t.
  Real max_relative_deviation = 0;
  int worst_trial = -1;
  bool passed = true;
};

/// Relative threshold: a trial fails when the deviation exceeds this times
/// the Frobenius norm of its observable.
template <typename Real>
constexpr Real kNoSignalingThreshold = Real(1e-10);

/// Compares two states on `trials` random Hermitian observables. Trial t
/// draws its observable from Philox stream (seed, t), so the result does not
/// depend on evaluation order.
template <typename Real>
NoSignalingReport<Real> no_signaling_check(const NOperator<Real>& a, const NOperator<Real>& b, int trials,
                                           std::uint64_t seed) {
  detail::require_same_n(a.n(), b.n(), "no_signaling_check");
  if (trials < 0) throw ValidationError("no_signaling_check: negative trial count");
  NoSignalingReport<Real> report;
  report.trials = trials;
  for (int t = 0; t < trials; ++t) {
    PhiloxStream rng(seed, static_cast<std::uint64_t>(t));
    const NOperator<Real> h = random_hermitian<Real>(a.n(), rng);
    const Real dev = std::abs(expectation(a, h) - expectation(b, h));
    const Real rel = dev / h.dense_entries().norm();
    if (dev > report.max_deviation || report.worst_trial < 0) {
      report.max_deviation = dev;
      report.worst_trial = t;
    }
    report.max_relative_deviation = std::max(report.max_relative_deviation, rel);
    if (rel > kNoSignalingThreshold<Real>) report.passed = false;
  }
  return report;
}

}  // namespace beamprep
