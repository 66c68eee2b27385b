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

// Single-particle spin-1/2 primitives: states, 2x2 operators and
// measurement bases.

#include <cmath>
#include <string>

#include "beamprep/core.hpp"

namespace beamprep {

/// Normalized state of one spin-1/2 particle.
template <typename Real = double>
class PureQubit {
 public:
  using Amplitudes = Vector2c<Real>;

  explicit PureQubit(const Amplitudes& amplitudes, Real tol = kTolerance<Real>)
      : amplitudes_(amplitudes) {
    if (!amplitudes_.allFinite()) {
      throw ValidationError("PureQubit: non-finite amplitude");
    }
    const Real norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - Real(1)) > tol) {
      throw ValidationError("PureQubit: state not normalized (|a|^2 = " + std::to_string(double(norm2)) +
                            ")");
    }
  }

  PureQubit(Complex<Real> a0, Complex<Real> a1) : PureQubit(Amplitudes(a0, a1)) {}

  /// Rescales a nonzero vector to unit norm.
  static PureQubit normalized(const Amplitudes& v) {
    const Real norm = v.norm();
    if (!(norm > Real(0)) || !std::isfinite(double(norm))) {
      throw ValidationError("PureQubit: cannot normalize a zero or non-finite vector");
    }
    return PureQubit(Amplitudes(v / norm));
  }

  const Amplitudes& amplitudes() const { return amplitudes_; }
  Complex<Real> operator[](int i) const { return amplitudes_[i]; }

  friend bool operator==(const PureQubit& a, const PureQubit& b) {
    return a.amplitudes_ == b.amplitudes_;
  }

 private:
  Amplitudes amplitudes_;
};

template <typename Real>
Complex<Real> inner(const PureQubit<Real>& a, const PureQubit<Real>& b) {
  return a.amplitudes().dot(b.amplitudes());  // conjugate-linear in a
}

/// 2x2 complex operator, optionally tagged as an orthogonal projector.
template <typename Real = double>
class Operator2 {
 public:
  using Matrix = Matrix2c<Real>;

  explicit Operator2(const Matrix& entries, bool projector = false)
      : entries_(entries), projector_(projector) {
    if (!entries_.allFinite()) throw ValidationError("Operator2: non-finite entry");
    if (projector_) {
      const Real tol = kTolerance<Real>;
      if (!is_hermitian(tol) || ((entries_ * entries_) - entries_).cwiseAbs().maxCoeff() > tol) {
        throw ValidationError("Operator2: tagged projector is not Hermitian and idempotent");
      }
    }
  }

  const Matrix& matrix() const { return entries_; }
  Complex<Real> operator()(int r, int c) const { return entries_(r, c); }

  bool is_projector() const { return projector_; }
  /// Exact check: both off-diagonal entries are zero.
  bool is_diagonal() const {
    return entries_(0, 1) == Complex<Real>(0) && entries_(1, 0) == Complex<Real>(0);
  }
  bool is_hermitian(Real tol = kTolerance<Real>) const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
  }
  Complex<Real> trace() const { return entries_.trace(); }

  /// Applies the operator and renormalizes the image.
  PureQubit<Real> apply(const PureQubit<Real>& s) const {
    return PureQubit<Real>::normalized(entries_ * s.amplitudes());
  }

 private:
  Matrix entries_;
  bool projector_ = false;
};

template <typename Real = double>
Operator2<Real> identity2() {
  return Operator2<Real>(Matrix2c<Real>::Identity(), true);
}

template <typename Real = double>
Operator2<Real> pauli_z() {
  Matrix2c<Real> m;
  m << Real(1), Real(0), Real(0), Real(-1);
  return Operator2<Real>(m);
}

template <typename Real = double>
Operator2<Real> pauli_x() {
  Matrix2c<Real> m;
  m << Real(0), Real(1), Real(1), Real(0);
  return Operator2<Real>(m);
}

namespace detail {

template <typename Real>
Matrix2c<Real> pauli_y_matrix() {
  Matrix2c<Real> m;
  m << Real(0), Complex<Real>(0, -1), Complex<Real>(0, 1), Real(0);
  return m;
}

/// Global phase convention: first non-negligible amplitude real and >= 0.
template <typename Real>
Vector2c<Real> canonical_phase(const Vector2c<Real>& v) {
  const int lead = std::abs(v[0]) > kTolerance<Real> ? 0 : 1;
  const Real mag = std::abs(v[lead]);
  if (mag == Real(0)) return v;
  return v * (std::conj(v[lead]) / mag);
}

}  // namespace detail

/// |state><state| for a normalized state.
template <typename Real>
Operator2<Real> projector(const PureQubit<Real>& state) {
  const auto& a = state.amplitudes();
  return Operator2<Real>(a * a.adjoint(), true);
}

/// Orthonormal pair of single-particle states; `plus` carries label +1.
template <typename Real = double>
class BasisPair {
 public:
  BasisPair(const PureQubit<Real>& plus, const PureQubit<Real>& minus, Real tol = kTolerance<Real>)
      : plus_(plus), minus_(minus) {
    if (std::abs(inner(plus_, minus_)) > tol) {
      throw ValidationError("BasisPair: states are not orthogonal");
    }
  }

  const PureQubit<Real>& plus() const { return plus_; }
  const PureQubit<Real>& minus() const { return minus_; }
  const PureQubit<Real>& state(bool minus_label) const { return minus_label ? minus_ : plus_; }

  /// Unitary whose columns are (plus, minus); maps the z basis onto this one.
  Matrix2c<Real> unitary() const {
    Matrix2c<Real> u;
    u.col(0) = plus_.amplitudes();
    u.col(1) = minus_.amplitudes();
    return u;
  }

  /// True when both states are the z eigenvectors up to phase, exactly.
  bool is_computational() const {
    return plus_[1] == Complex<Real>(0) && minus_[0] == Complex<Real>(0);
  }

  friend bool operator==(const BasisPair& a, const BasisPair& b) {
    return a.plus_ == b.plus_ && a.minus_ == b.minus_;
  }

 private:
  PureQubit<Real> plus_;
  PureQubit<Real> minus_;
};

template <typename Real = double>
BasisPair<Real> basis_z() {
  return BasisPair<Real>(PureQubit<Real>(Real(1), Real(0)), PureQubit<Real>(Real(0), Real(1)));
}

template <typename Real = double>
BasisPair<Real> basis_x() {
  const Real h = Real(1) / std::sqrt(Real(2));
  return BasisPair<Real>(PureQubit<Real>(h, h), PureQubit<Real>(h, -h));
}

/// Eigenbasis of cos(polar) sz + sin(polar) cos(azimuth) sx + sin(polar) sin(azimuth) sy.
template <typename Real = double>
BasisPair<Real> bloch_basis(Real polar, Real azimuth) {
  if (!std::isfinite(double(polar)) || !std::isfinite(double(azimuth))) {
    throw ValidationError("bloch_basis: non-finite angle");
  }
  const Real c = std::cos(polar / 2);
  const Real s = std::sin(polar / 2);
  const Complex<Real> phase = std::polar(Real(1), azimuth);
  const Vector2c<Real> plus(Complex<Real>(c), phase * s);
  const Vector2c<Real> minus(-std::conj(phase) * s, Complex<Real>(c));
  return BasisPair<Real>(PureQubit<Real>::normalized(detail::canonical_phase<Real>(plus)),
                         PureQubit<Real>::normalized(detail::canonical_phase<Real>(minus)));
}

/// Named measurement axis. Preparations carry an axis rather than a bare
/// basis so that they can be printed and re-parsed exactly.
template <typename Real = double>
struct Axis {
  enum class Kind { Z, X, Bloch };

  Kind kind = Kind::Z;
  Real polar = Real(0);
  Real azimuth = Real(0);

  static Axis z() { return {Kind::Z, Real(0), Real(0)}; }
  static Axis x() { return {Kind::X, Real(0), Real(0)}; }
  static Axis bloch(Real polar, Real azimuth) { return {Kind::Bloch, polar, azimuth}; }

  BasisPair<Real> basis() const {
    switch (kind) {
      case Kind::Z: return basis_z<Real>();
      case Kind::X: return basis_x<Real>();
      case Kind::Bloch: return bloch_basis<Real>(polar, azimuth);
    }
    return basis_z<Real>();
  }

  friend bool operator==(const Axis& a, const Axis& b) {
    if (a.kind != b.kind) return false;
    return a.kind != Kind::Bloch || (a.polar == b.polar && a.azimuth == b.azimuth);
  }
};

}  // namespace beamprep
