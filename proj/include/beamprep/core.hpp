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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace beamprep {

inline constexpr std::string_view kLibraryVersion = "0.1.0";

/// Largest particle count for which dense 2^n x 2^n operators are built.
inline constexpr int kDenseCap = 12;
/// Largest particle count for diagonal operators and the beam sampler.
inline constexpr int kDiagonalCap = 24;

/// Library-wide absolute tolerance for structural invariant checks.
template <typename Real>
constexpr Real kTolerance = Real(1e-12);

/// Looser tolerance for quantities accumulated over 2^n entries (traces,
/// positivity of eigenvalues, imaginary residue of expectation values).
template <typename Real>
constexpr Real kAccumulatedTolerance = Real(1e-10);

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using Vector2c = Eigen::Matrix<Complex<Real>, 2, 1>;

template <typename Real>
using Matrix2c = Eigen::Matrix<Complex<Real>, 2, 2>;

template <typename Real>
using VectorXc = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using MatrixXc = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

/// Raised when a requested particle count exceeds a construction cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised when an input violates a documented invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed quantity is inconsistent with the operator flags
/// it was derived from (e.g. a markedly negative variance).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::size_t hilbert_dimension(int n) { return std::size_t{1} << n; }

inline void require_particle_count(int n, int cap, std::string_view what) {
  if (n < 1) {
    throw ValidationError(std::string(what) + ": particle count must be >= 1, got " +
                          std::to_string(n));
  }
  if (n > cap) {
    throw CapacityError(std::string(what) + ": particle count " + std::to_string(n) +
                        " exceeds cap " + std::to_string(cap));
  }
}

/// Bit of basis index `alpha` holding particle `site` (0-based). Particle 0
/// is the leftmost tensor factor and the most significant bit.
inline int site_shift(int n, int site) { return n - 1 - site; }

inline bool site_bit(std::uint64_t alpha, int n, int site) {
  return ((alpha >> site_shift(n, site)) & 1U) != 0;
}

}  // namespace beamprep
