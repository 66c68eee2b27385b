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

// N-particle tensor-product states and operators.
//
// Basis index convention: alpha = (a_1 a_2 ... a_n)_2 with a_1 the most
// significant bit, and particle k carries the label i_k = (-1)^{a_k}.

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "beamprep/core.hpp"
#include "beamprep/qubit.hpp"

namespace beamprep {

/// Sequence of +1/-1 labels, one per particle.
class Configuration {
 public:
  explicit Configuration(std::vector<int> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw ValidationError("Configuration: empty label sequence");
    for (int l : labels_) {
      if (l != 1 && l != -1) {
        throw ValidationError("Configuration: labels must be +1 or -1, got " + std::to_string(l));
      }
    }
  }

  int n() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  int operator[](int k) const { return labels_[static_cast<std::size_t>(k)]; }

  int label_sum() const {
    int s = 0;
    for (int l : labels_) s += l;
    return s;
  }
  int plus_count() const {
    return static_cast<int>(std::count(labels_.begin(), labels_.end(), 1));
  }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<int> labels_;
};

inline std::uint64_t configuration_index(const Configuration& config) {
  if (config.n() > 63) throw CapacityError("configuration_index: more than 63 particles");
  std::uint64_t alpha = 0;
  for (int l : config.labels()) alpha = (alpha << 1) | (l == -1 ? 1U : 0U);
  return alpha;
}

inline Configuration configuration_from_index(int n, std::uint64_t alpha) {
  if (n < 1 || n > 63) throw ValidationError("configuration_from_index: bad particle count");
  if (alpha >> n) throw ValidationError("configuration_from_index: index out of range");
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) labels[static_cast<std::size_t>(k)] = site_bit(alpha, n, k) ? -1 : 1;
  return Configuration(std::move(labels));
}

/// Normalized state vector of n particles.
template <typename Real = double>
class NState {
 public:
  NState(int n, VectorXc<Real> amplitudes, Real tol = kTolerance<Real>)
      : n_(n), amplitudes_(std::move(amplitudes)) {
    require_particle_count(n, kDiagonalCap, "NState");
    if (static_cast<std::size_t>(amplitudes_.size()) != hilbert_dimension(n)) {
      throw ValidationError("NState: amplitude count does not match 2^n");
    }
    if (std::abs(amplitudes_.squaredNorm() - Real(1)) > tol) {
      throw ValidationError("NState: state not normalized");
    }
  }

  static NState basis_state(int n, std::uint64_t alpha) {
    VectorXc<Real> v = VectorXc<Real>::Zero(static_cast<Eigen::Index>(hilbert_dimension(n)));
    v[static_cast<Eigen::Index>(alpha)] = Real(1);
    return NState(n, std::move(v));
  }

  int n() const { return n_; }
  const VectorXc<Real>& amplitudes() const { return amplitudes_; }

 private:
  int n_;
  VectorXc<Real> amplitudes_;
};

template <typename Real>
Complex<Real> inner(const NState<Real>& a, const NState<Real>& b) {
  if (a.n() != b.n()) throw ValidationError("inner: particle count mismatch");
  return a.amplitudes().dot(b.amplitudes());
}

/// Kronecker product of single-particle states, leftmost factor = particle 1.
template <typename Real>
NState<Real> kron_states(std::span<const PureQubit<Real>> factors) {
  const int n = static_cast<int>(factors.size());
  if (n == 0) throw ValidationError("kron_states: empty factor sequence");
  require_particle_count(n, kDiagonalCap, "kron_states");
  VectorXc<Real> acc(1);
  acc[0] = Real(1);
  for (const auto& f : factors) {
    VectorXc<Real> next(acc.size() * 2);
    for (Eigen::Index i = 0; i < acc.size(); ++i) {
      next[2 * i] = acc[i] * f[0];
      next[2 * i + 1] = acc[i] * f[1];
    }
    acc = std::move(next);
  }
  return NState<Real>(n, std::move(acc));
}

template <typename Real>
NState<Real> kron_states(const std::vector<PureQubit<Real>>& factors) {
  return kron_states(std::span<const PureQubit<Real>>(factors));
}

/// Product state of basis vectors selected by a configuration.
template <typename Real>
NState<Real> product_state(const BasisPair<Real>& basis, const Configuration& config) {
  std::vector<PureQubit<Real>> factors;
  factors.reserve(config.labels().size());
  for (int l : config.labels()) factors.push_back(basis.state(l == -1));
  return kron_states<Real>(factors);
}

struct OperatorFlags {
  bool hermitian = false;
  bool projector = false;
  bool density = false;

  static OperatorFlags hermitian_only() { return {true, false, false}; }
  static OperatorFlags density_operator() { return {true, false, true}; }
  static OperatorFlags pure_density() { return {true, true, true}; }

  friend bool operator==(const OperatorFlags&, const OperatorFlags&) = default;
};

enum class Structure { Dense, Diagonal };

/// Operator on n particles, stored densely or as its diagonal. Flags are
/// validated on construction.
template <typename Real = double>
class NOperator {
 public:
  static NOperator dense(int n, MatrixXc<Real> entries, OperatorFlags flags = {}) {
    require_particle_count(n, kDenseCap, "NOperator(dense)");
    const auto dim = static_cast<Eigen::Index>(hilbert_dimension(n));
    if (entries.rows() != dim || entries.cols() != dim) {
      throw ValidationError("NOperator: matrix is not 2^n x 2^n");
    }
    NOperator op(n, Structure::Dense, flags);
    op.dense_ = std::move(entries);
    op.validate();
    return op;
  }

  static NOperator diagonal(int n, VectorXc<Real> entries, OperatorFlags flags = {}) {
    require_particle_count(n, kDiagonalCap, "NOperator(diagonal)");
    if (static_cast<std::size_t>(entries.size()) != hilbert_dimension(n)) {
      throw ValidationError("NOperator: diagonal length is not 2^n");
    }
    NOperator op(n, Structure::Diagonal, flags);
    op.diag_ = std::move(entries);
    op.validate();
    return op;
  }

  static NOperator identity(int n) {
    return diagonal(n, VectorXc<Real>::Ones(static_cast<Eigen::Index>(hilbert_dimension(n))),
                    {true, true, false});
  }

  /// Id(2^n) / 2^n.
  static NOperator maximally_mixed(int n) {
    const auto dim = static_cast<Eigen::Index>(hilbert_dimension(n));
    return diagonal(n, VectorXc<Real>::Constant(dim, Real(1) / Real(dim)),
                    OperatorFlags::density_operator());
  }

  int n() const { return n_; }
  Eigen::Index dimension() const { return static_cast<Eigen::Index>(hilbert_dimension(n_)); }
  Structure structure() const { return structure_; }
  bool is_diagonal() const { return structure_ == Structure::Diagonal; }
  const OperatorFlags& flags() const { return flags_; }

  const VectorXc<Real>& diagonal_entries() const {
    if (!is_diagonal()) throw ValidationError("NOperator: not diagonal-structured");
    return diag_;
  }
  const MatrixXc<Real>& dense_entries() const {
    if (is_diagonal()) throw ValidationError("NOperator: not dense-structured");
    return dense_;
  }

  /// Diagonal of the operator regardless of storage.
  VectorXc<Real> diagonal_part() const { return is_diagonal() ? diag_ : VectorXc<Real>(dense_.diagonal()); }

  MatrixXc<Real> to_dense() const {
    if (!is_diagonal()) return dense_;
    require_particle_count(n_, kDenseCap, "NOperator::to_dense");
    return diag_.asDiagonal();
  }

  Complex<Real> coeff(Eigen::Index row, Eigen::Index col) const {
    if (!is_diagonal()) return dense_(row, col);
    return row == col ? diag_[row] : Complex<Real>(0);
  }

  Complex<Real> trace() const { return is_diagonal() ? diag_.sum() : dense_.trace(); }

  /// Same entries with different (re-validated) flags.
  NOperator with_flags(OperatorFlags flags) const {
    NOperator op = *this;
    op.flags_ = flags;
    op.validate();
    return op;
  }

 private:
  NOperator(int n, Structure s, OperatorFlags flags) : n_(n), structure_(s), flags_(flags) {}

  void validate() {
    if (flags_.density || flags_.projector) flags_.hermitian = true;
    const bool finite = is_diagonal() ? diag_.allFinite() : dense_.allFinite();
    if (!finite) throw ValidationError("NOperator: non-finite entry");
    if (flags_.hermitian) validate_hermitian();
    if (flags_.density) validate_density();
    if (flags_.projector) validate_projector();
  }

  Real scale() const {
    const Real m = is_diagonal() ? diag_.cwiseAbs().maxCoeff() : dense_.cwiseAbs().maxCoeff();
    return std::max(Real(1), m);
  }

  void validate_hermitian() const {
    const Real tol = kTolerance<Real> * scale();
    Real err = 0;
    if (is_diagonal()) {
      err = diag_.imag().cwiseAbs().maxCoeff();
    } else {
      err = (dense_ - dense_.adjoint()).cwiseAbs().maxCoeff();
    }
    if (err > tol) {
      throw ValidationError("NOperator: flagged Hermitian but |A - A^dagger| = " +
                            std::to_string(double(err)));
    }
  }

  void validate_density() const {
    const Complex<Real> tr = trace();
    if (std::abs(tr - Complex<Real>(1)) > kAccumulatedTolerance<Real>) {
      throw ValidationError("NOperator: flagged density but trace = " + std::to_string(double(tr.real())));
    }
    // Positivity for dense operators is guaranteed by construction as a
    // convex combination; see min_eigenvalue() for explicit checks.
    if (is_diagonal() && diag_.real().minCoeff() < -kAccumulatedTolerance<Real>) {
      throw ValidationError("NOperator: flagged density but has a negative diagonal entry");
    }
  }

  void validate_projector() const {
    const Real tol = kTolerance<Real>;
    if (is_diagonal()) {
      for (Eigen::Index i = 0; i < diag_.size(); ++i) {
        const Real r = diag_[i].real();
        if (std::min(std::abs(r), std::abs(r - Real(1))) > tol) {
          throw ValidationError("NOperator: flagged projector but diagonal entry is not 0 or 1");
        }
      }
    } else if (n_ <= 8) {
      const MatrixXc<Real> sq = dense_ * dense_;
      if ((sq - dense_).cwiseAbs().maxCoeff() > tol) {
        throw ValidationError("NOperator: flagged projector but not idempotent");
      }
    }
  }

  int n_;
  Structure structure_;
  OperatorFlags flags_;
  VectorXc<Real> diag_;
  MatrixXc<Real> dense_;
};

// ---------------------------------------------------------------------------
// Construction

/// Kronecker product of single-particle operators. Diagonal storage is used
/// when every factor is exactly diagonal.
template <typename Real>
NOperator<Real> kron_ops(std::span<const Operator2<Real>> factors) {
  const int n = static_cast<int>(factors.size());
  if (n == 0) throw ValidationError("kron_ops: empty factor sequence");
  const bool all_diagonal =
      std::all_of(factors.begin(), factors.end(), [](const auto& f) { return f.is_diagonal(); });
  const bool all_hermitian =
      std::all_of(factors.begin(), factors.end(), [](const auto& f) { return f.is_hermitian(); });
  const bool all_projector =
      std::all_of(factors.begin(), factors.end(), [](const auto& f) { return f.is_projector(); });
  const OperatorFlags flags{all_hermitian, all_projector, false};

  if (all_diagonal) {
    require_particle_count(n, kDiagonalCap, "kron_ops");
    VectorXc<Real> acc(1);
    acc[0] = Real(1);
    for (const auto& f : factors) {
      VectorXc<Real> next(acc.size() * 2);
      for (Eigen::Index i = 0; i < acc.size(); ++i) {
        next[2 * i] = acc[i] * f(0, 0);
        next[2 * i + 1] = acc[i] * f(1, 1);
      }
      acc = std::move(next);
    }
    return NOperator<Real>::diagonal(n, std::move(acc), flags);
  }

  require_particle_count(n, kDenseCap, "kron_ops");
  MatrixXc<Real> acc = MatrixXc<Real>::Ones(1, 1);
  for (const auto& f : factors) {
    MatrixXc<Real> next(acc.rows() * 2, acc.cols() * 2);
    for (Eigen::Index j = 0; j < acc.cols(); ++j) {
      for (Eigen::Index i = 0; i < acc.rows(); ++i) {
        next.template block<2, 2>(2 * i, 2 * j) = acc(i, j) * f.matrix();
      }
    }
    acc = std::move(next);
  }
  return NOperator<Real>::dense(n, std::move(acc), flags);
}

template <typename Real>
NOperator<Real> kron_ops(const std::vector<Operator2<Real>>& factors) {
  return kron_ops(std::span<const Operator2<Real>>(factors));
}

/// Sum over sites of `single` acting on that site and identity elsewhere.
template <typename Real>
NOperator<Real> collective_observable(const Operator2<Real>& single, int n) {
  const OperatorFlags flags{single.is_hermitian(), false, false};
  if (single.is_diagonal()) {
    require_particle_count(n, kDiagonalCap, "collective_observable");
    const auto dim = static_cast<Eigen::Index>(hilbert_dimension(n));
    VectorXc<Real> d(dim);
    for (Eigen::Index alpha = 0; alpha < dim; ++alpha) {
      Complex<Real> s(0);
      for (int k = 0; k < n; ++k) {
        const int b = site_bit(static_cast<std::uint64_t>(alpha), n, k) ? 1 : 0;
        s += single(b, b);
      }
      d[alpha] = s;
    }
    return NOperator<Real>::diagonal(n, std::move(d), flags);
  }

  require_particle_count(n, kDenseCap, "collective_observable");
  const auto dim = static_cast<Eigen::Index>(hilbert_dimension(n));
  MatrixXc<Real> m = MatrixXc<Real>::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    for (int k = 0; k < n; ++k) {
      const int shift = site_shift(n, k);
      const Eigen::Index mask = Eigen::Index{1} << shift;
      const int b = static_cast<int>((col >> shift) & 1);
      for (int a = 0; a < 2; ++a) {
        const Eigen::Index row = (col & ~mask) | (Eigen::Index{a} << shift);
        m(row, col) += single(a, b);
      }
    }
  }
  return NOperator<Real>::dense(n, std::move(m), flags);
}

/// |psi><psi| as a pure density operator.
template <typename Real>
NOperator<Real> projector(const NState<Real>& psi) {
  require_particle_count(psi.n(), kDenseCap, "projector");
  const auto& a = psi.amplitudes();
  return NOperator<Real>::dense(psi.n(), a * a.adjoint(), OperatorFlags::pure_density());
}

namespace detail {

/// In place M <- (I x ... x u x ... x I) M with u acting on `site`.
template <typename Real>
void apply_local_left(MatrixXc<Real>& m, const Matrix2c<Real>& u, int n, int site) {
  const Eigen::Index stride = Eigen::Index{1} << site_shift(n, site);
  const Eigen::Index dim = m.rows();
  const Complex<Real> u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    Complex<Real>* c = m.col(col).data();
    for (Eigen::Index base = 0; base < dim; base += 2 * stride) {
      for (Eigen::Index i = base; i < base + stride; ++i) {
        const Complex<Real> a = c[i];
        const Complex<Real> b = c[i + stride];
        c[i] = u00 * a + u01 * b;
        c[i + stride] = u10 * a + u11 * b;
      }
    }
  }
}

// m <- m (I (x) .. (x) v (x) .. (x) I), acting on contiguous column blocks.
template <typename Real>
void apply_local_right(MatrixXc<Real>& m, const Matrix2c<Real>& v, int n, int site) {
  const Eigen::Index stride = Eigen::Index{1} << site_shift(n, site);
  const Eigen::Index dim = m.cols();
  MatrixXc<Real> t(m.rows(), stride);
  for (Eigen::Index base = 0; base < dim; base += 2 * stride) {
    auto left = m.middleCols(base, stride);
    auto right = m.middleCols(base + stride, stride);
    t = left;
    left = v(0, 0) * t + v(1, 0) * right;
    right = v(0, 1) * t + v(1, 1) * right;
  }
}

}  // namespace detail

/// U^{(x)n} A (U^{(x)n})^dagger for a single-particle unitary U, applied one
/// site at a time in O(n 4^n).
template <typename Real>
NOperator<Real> conjugate_by_product(const Matrix2c<Real>& u, const NOperator<Real>& op) {
  if (((u * u.adjoint()) - Matrix2c<Real>::Identity()).cwiseAbs().maxCoeff() > kTolerance<Real>) {
    throw ValidationError("conjugate_by_product: single-particle matrix is not unitary");
  }
  const int n = op.n();
  MatrixXc<Real> m = op.to_dense();
  const Matrix2c<Real> v = u.adjoint();
  for (int k = 0; k < n; ++k) {
    detail::apply_local_left<Real>(m, u, n, k);
    detail::apply_local_right<Real>(m, v, n, k);
  }
  return NOperator<Real>::dense(n, std::move(m), op.flags());
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace detail {

inline void require_same_n(int a, int b, const char* what) {
  if (a != b) {
    throw ValidationError(std::string(what) + ": particle count mismatch (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
  }
}

}  // namespace detail

/// Tr(A B) without forming the product.
template <typename Real>
Complex<Real> trace_of_product(const NOperator<Real>& a, const NOperator<Real>& b) {
  detail::require_same_n(a.n(), b.n(), "trace_of_product");
  if (a.is_diagonal() && b.is_diagonal()) {
    return a.diagonal_entries().cwiseProduct(b.diagonal_entries()).sum();
  }
  if (a.is_diagonal()) return a.diagonal_entries().cwiseProduct(b.dense_entries().diagonal()).sum();
  if (b.is_diagonal()) return b.diagonal_entries().cwiseProduct(a.dense_entries().diagonal()).sum();
  return a.dense_entries().cwiseProduct(b.dense_entries().transpose()).sum();
}

/// <A>_rho = Tr(rho A).
template <typename Real>
Real expectation(const NOperator<Real>& rho, const NOperator<Real>& obs) {
  detail::require_same_n(rho.n(), obs.n(), "expectation");
  if (!rho.flags().density) throw ValidationError("expectation: first argument is not a density operator");
  if (!obs.flags().hermitian) throw ValidationError("expectation: observable is not Hermitian");
  const Complex<Real> t = trace_of_product(rho, obs);
  if (std::abs(t.imag()) > kAccumulatedTolerance<Real>) {
    throw NumericalError("expectation: imaginary part " + std::to_string(double(t.imag())) +
                         " exceeds tolerance");
  }
  return t.real();
}

/// A * A; diagonal storage is preserved.
template <typename Real>
NOperator<Real> matrix_power2(const NOperator<Real>& op) {
  const OperatorFlags flags{op.flags().hermitian, op.flags().projector, false};
  if (op.is_diagonal()) {
    return NOperator<Real>::diagonal(op.n(), op.diagonal_entries().cwiseProduct(op.diagonal_entries()), flags);
  }
  MatrixXc<Real> sq = op.dense_entries() * op.dense_entries();
  if (flags.hermitian) sq = (sq + sq.adjoint().eval()) / Real(2);
  return NOperator<Real>::dense(op.n(), std::move(sq), flags);
}

template <typename Real>
NOperator<Real> operator+(const NOperator<Real>& a, const NOperator<Real>& b) {
  detail::require_same_n(a.n(), b.n(), "operator+");
  const OperatorFlags flags{a.flags().hermitian && b.flags().hermitian, false, false};
  if (a.is_diagonal() && b.is_diagonal()) {
    return NOperator<Real>::diagonal(a.n(), a.diagonal_entries() + b.diagonal_entries(), flags);
  }
  return NOperator<Real>::dense(a.n(), a.to_dense() + b.to_dense(), flags);
}

template <typename Real>
NOperator<Real> operator-(const NOperator<Real>& a, const NOperator<Real>& b) {
  detail::require_same_n(a.n(), b.n(), "operator-");
  const OperatorFlags flags{a.flags().hermitian && b.flags().hermitian, false, false};
  if (a.is_diagonal() && b.is_diagonal()) {
    return NOperator<Real>::diagonal(a.n(), a.diagonal_entries() - b.diagonal_entries(), flags);
  }
  return NOperator<Real>::dense(a.n(), a.to_dense() - b.to_dense(), flags);
}

template <typename Real>
NOperator<Real> operator*(Real s, const NOperator<Real>& a) {
  const OperatorFlags flags{a.flags().hermitian, false, false};
  if (a.is_diagonal()) return NOperator<Real>::diagonal(a.n(), s * a.diagonal_entries(), flags);
  return NOperator<Real>::dense(a.n(), s * a.dense_entries(), flags);
}

/// Sum_k w_k A_k for non-negative weights summing to one; density flags are
/// kept when every term is a density operator.
template <typename Real>
NOperator<Real> convex_combination(std::span<const Real> weights, std::span<const NOperator<Real>> ops) {
  if (weights.size() != ops.size() || ops.empty()) {
    throw ValidationError("convex_combination: need matching, non-empty weights and operators");
  }
  Real total = 0;
  for (Real w : weights) {
    if (w < Real(0)) throw ValidationError("convex_combination: negative weight");
    total += w;
  }
  if (std::abs(total - Real(1)) > kTolerance<Real>) {
    throw ValidationError("convex_combination: weights do not sum to 1");
  }
  const int n = ops.front().n();
  const bool all_diagonal = std::all_of(ops.begin(), ops.end(), [](const auto& o) { return o.is_diagonal(); });
  const bool all_density = std::all_of(ops.begin(), ops.end(), [](const auto& o) { return o.flags().density; });
  const bool all_hermitian =
      std::all_of(ops.begin(), ops.end(), [](const auto& o) { return o.flags().hermitian; });
  const OperatorFlags flags{all_hermitian, false, all_density};
  for (const auto& o : ops) detail::require_same_n(n, o.n(), "convex_combination");

  if (all_diagonal) {
    VectorXc<Real> acc = VectorXc<Real>::Zero(ops.front().dimension());
    for (std::size_t k = 0; k < ops.size(); ++k) acc += weights[k] * ops[k].diagonal_entries();
    return NOperator<Real>::diagonal(n, std::move(acc), flags);
  }
  require_particle_count(n, kDenseCap, "convex_combination");
  const auto dim = ops.front().dimension();
  MatrixXc<Real> acc = MatrixXc<Real>::Zero(dim, dim);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (ops[k].is_diagonal()) {
      acc.diagonal() += weights[k] * ops[k].diagonal_entries();
    } else {
      acc += weights[k] * ops[k].dense_entries();
    }
  }
  return NOperator<Real>::dense(n, std::move(acc), flags);
}

// ---------------------------------------------------------------------------
// Comparison

/// max_ij |A_ij - B_ij|.
template <typename Real>
Real max_abs_difference(const NOperator<Real>& a, const NOperator<Real>& b) {
  detail::require_same_n(a.n(), b.n(), "max_abs_difference");
  if (a.is_diagonal() && b.is_diagonal()) {
    return (a.diagonal_entries() - b.diagonal_entries()).cwiseAbs().maxCoeff();
  }
  return (a.to_dense() - b.to_dense()).cwiseAbs().maxCoeff();
}

template <typename Real>
bool approx_equal(const NOperator<Real>& a, const NOperator<Real>& b, Real tol = kTolerance<Real>) {
  return max_abs_difference(a, b) < tol;
}

/// Smallest eigenvalue of a Hermitian operator (symmetric eigensolver).
template <typename Real>
Real min_eigenvalue(const NOperator<Real>& op) {
  if (!op.flags().hermitian) throw ValidationError("min_eigenvalue: operator is not Hermitian");
  if (op.is_diagonal()) return op.diagonal_entries().real().minCoeff();
  Eigen::SelfAdjointEigenSolver<MatrixXc<Real>> solver(op.dense_entries(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("min_eigenvalue: eigensolver failed");
  return solver.eigenvalues().minCoeff();
}

}  // namespace beamprep
