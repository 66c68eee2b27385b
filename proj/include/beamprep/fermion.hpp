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

// Antisymmetrized (Slater) states of spin-1/2 fermions whose one-particle
// states are labeled by a spin state and an orthonormal time slot.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "beamprep/core.hpp"
#include "beamprep/qubit.hpp"

namespace beamprep {

/// Largest particle count for which expand() builds the full amplitude vector.
inline constexpr int kSlaterExpansionCap = 6;

/// Raised when antisymmetrization annihilates the state (Pauli exclusion).
class NullStateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <typename Real = double>
struct SingleParticleState {
  PureQubit<Real> spin;
  int slot = 0;  // 0 = latest preparation, increasing into the past
};

/// <a|b> with orthonormal slots.
template <typename Real>
Complex<Real> overlap(const SingleParticleState<Real>& a, const SingleParticleState<Real>& b) {
  return a.slot == b.slot ? inner(a.spin, b.spin) : Complex<Real>(0);
}

namespace detail {

template <typename Real>
MatrixXc<Real> gram(const std::vector<SingleParticleState<Real>>& a, const std::vector<SingleParticleState<Real>>& b) {
  const auto n = static_cast<Eigen::Index>(a.size());
  MatrixXc<Real> g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = overlap(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]);
  }
  return g;
}

}  // namespace detail

/// (1/sqrt(n!)) sum_pi sgn(pi) phi_pi(1) x ... x phi_pi(n), kept implicitly
/// as its ordered constituents. The identity permutation has sign +1.
template <typename Real = double>
class SlaterState {
 public:
  const std::vector<SingleParticleState<Real>>& particles() const { return particles_; }
  int n() const { return static_cast<int>(particles_.size()); }
  Real normalization() const { return normalization_; }

  template <typename R>
  friend SlaterState<R> antisymmetrize(std::vector<SingleParticleState<R>> ordered);

 private:
  SlaterState(std::vector<SingleParticleState<Real>> particles, Real normalization)
      : particles_(std::move(particles)), normalization_(normalization) {}

  std::vector<SingleParticleState<Real>> particles_;
  Real normalization_;
};

template <typename Real>
SlaterState<Real> antisymmetrize(std::vector<SingleParticleState<Real>> ordered) {
  if (ordered.empty()) throw ValidationError("antisymmetrize: empty particle sequence");
  for (const auto& p : ordered) {
    if (p.slot < 0) throw ValidationError("antisymmetrize: negative slot label");
  }
  // |psi|^2 = det of the self-overlap matrix; zero means the factors are
  // linearly dependent and the antisymmetrized state vanishes.
  const Complex<Real> norm2 = detail::gram(ordered, ordered).determinant();
  if (std::abs(norm2) < kTolerance<Real>) {
    throw NullStateError("antisymmetrize: state vanishes (linearly dependent one-particle states)");
  }
  const Real normalization = Real(1) / std::sqrt(std::tgamma(Real(ordered.size() + 1)));
  return SlaterState<Real>(std::move(ordered), normalization);
}

/// det[<a_i|b_j>]; equals the inner product of the antisymmetrized vectors.
template <typename Real>
Complex<Real> slater_inner(const SlaterState<Real>& a, const SlaterState<Real>& b) {
  if (a.n() != b.n()) {
    throw ValidationError("slater_inner: particle counts differ (" + std::to_string(a.n()) + " vs " +
                          std::to_string(b.n()) + ")");
  }
  return detail::gram(a.particles(), b.particles()).determinant();
}

/// Inner product of the ordered (non-symmetrized) tensor products.
template <typename Real>
Complex<Real> ordered_inner(const std::vector<SingleParticleState<Real>>& a,
                            const std::vector<SingleParticleState<Real>>& b) {
  if (a.size() != b.size()) throw ValidationError("ordered_inner: particle counts differ");
  Complex<Real> acc(1);
  for (std::size_t k = 0; k < a.size(); ++k) acc *= overlap(a[k], b[k]);
  return acc;
}

/// Number of slots spanned by a particle sequence (max slot + 1).
template <typename Real>
int slot_count(const std::vector<SingleParticleState<Real>>& particles) {
  int s = 0;
  for (const auto& p : particles) s = std::max(s, p.slot + 1);
  return s;
}

namespace detail {

/// Accumulates sign * (phi_order[0] x ... x phi_order[n-1]) into `out`. The
/// one-particle space is slot (x) spin with local index 2 * slot + spin.
template <typename Real>
void accumulate_product(VectorXc<Real>& out, const std::vector<SingleParticleState<Real>>& particles,
                        const std::vector<int>& order, int slots, Complex<Real> factor) {
  const int n = static_cast<int>(order.size());
  const Eigen::Index local = 2 * slots;
  for (std::uint32_t spins = 0; spins < (1U << n); ++spins) {
    Eigen::Index index = 0;
    Complex<Real> amp = factor;
    for (int k = 0; k < n; ++k) {
      const auto& p = particles[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
      const int s = static_cast<int>((spins >> (n - 1 - k)) & 1U);
      index = index * local + 2 * p.slot + s;
      amp *= p.spin[s];
    }
    out[index] += amp;
  }
}

inline int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace detail

/// Full amplitude vector over (2 * slots)^n, particle 1 most significant.
/// `slots` defaults to the span of the state's own slot labels.
template <typename Real>
VectorXc<Real> expand(const SlaterState<Real>& state, int slots = 0) {
  const int n = state.n();
  require_particle_count(n, kSlaterExpansionCap, "expand");
  slots = std::max(slots, slot_count(state.particles()));
  const Eigen::Index local = 2 * slots;
  Eigen::Index dim = 1;
  for (int k = 0; k < n; ++k) dim *= local;
  VectorXc<Real> out = VectorXc<Real>::Zero(dim);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const Real sign = Real(detail::permutation_sign(perm));
    detail::accumulate_product(out, state.particles(), perm, slots, Complex<Real>(sign * state.normalization()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// The ordered tensor product in the same embedding as expand().
template <typename Real>
VectorXc<Real> expand_ordered(const std::vector<SingleParticleState<Real>>& particles, int slots = 0) {
  const int n = static_cast<int>(particles.size());
  require_particle_count(n, kSlaterExpansionCap, "expand_ordered");
  slots = std::max(slots, slot_count(particles));
  Eigen::Index dim = 1;
  for (int k = 0; k < n; ++k) dim *= 2 * slots;
  VectorXc<Real> out = VectorXc<Real>::Zero(dim);
  std::vector<int> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  detail::accumulate_product(out, particles, identity, slots, Complex<Real>(1));
  return out;
}

}  // namespace beamprep
