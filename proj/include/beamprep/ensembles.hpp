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

// Preparation procedures for beams of n spin-1/2 particles and the exact
// density operators they produce.

#include <bit>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "beamprep/core.hpp"
#include "beamprep/qubit.hpp"
#include "beamprep/tensor.hpp"

namespace beamprep {

/// Every configuration in the axis basis with equal weight 1/2^n.
template <typename Real = double>
struct RandomMixture {
  Axis<Real> axis;
  friend bool operator==(const RandomMixture&, const RandomMixture&) = default;
};

/// Equal-weight mixture over configurations with exactly `up_count` plus labels.
template <typename Real = double>
struct FixedMagnetization {
  Axis<Real> axis;
  int up_count = 0;
  friend bool operator==(const FixedMagnetization&, const FixedMagnetization&) = default;
};

/// Particle k (0-based, in preparation order) is prepared with label (-1)^k.
/// An n-particle window sees the pattern +-+-... for even n and an equal
/// mixture of the two phase offsets for odd n.
template <typename Real = double>
struct AlternatingCorrelated {
  Axis<Real> axis;
  friend bool operator==(const AlternatingCorrelated&, const AlternatingCorrelated&) = default;
};

template <typename Real = double>
struct MixtureTerm {
  Real weight;
  std::vector<PureQubit<Real>> states;
  friend bool operator==(const MixtureTerm&, const MixtureTerm&) = default;
};

/// Sum_a w_a |phi_a><phi_a| over product states phi_a. Duplicate terms are
/// allowed; their weights simply add up.
template <typename Real = double>
class ExplicitMixture {
 public:
  explicit ExplicitMixture(std::vector<MixtureTerm<Real>> terms, std::string source = {})
      : terms_(std::move(terms)), source_(std::move(source)) {
    if (terms_.empty()) throw ValidationError("ExplicitMixture: no terms");
    Real total = 0;
    const std::size_t len = terms_.front().states.size();
    if (len == 0) throw ValidationError("ExplicitMixture: term with no states");
    for (const auto& t : terms_) {
      if (!(t.weight > Real(0)) || !std::isfinite(double(t.weight))) {
        throw ValidationError("ExplicitMixture: weights must be positive");
      }
      if (t.states.size() != len) {
        throw ValidationError("ExplicitMixture: state sequences have unequal lengths");
      }
      total += t.weight;
    }
    if (std::abs(total - Real(1)) > kTolerance<Real>) {
      throw ValidationError("ExplicitMixture: weights sum to " + std::to_string(double(total)) +
                            ", expected 1");
    }
  }

  const std::vector<MixtureTerm<Real>>& terms() const { return terms_; }
  int n() const { return static_cast<int>(terms_.front().states.size()); }
  /// File the mixture was read from, if any (used when printing).
  const std::string& source() const { return source_; }

  friend bool operator==(const ExplicitMixture& a, const ExplicitMixture& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<MixtureTerm<Real>> terms_;
  std::string source_;
};

template <typename Real = double>
using Preparation =
    std::variant<RandomMixture<Real>, FixedMagnetization<Real>, AlternatingCorrelated<Real>, ExplicitMixture<Real>>;

/// A preparation viewed as producing n-particle beams.
template <typename Real = double>
class EnsembleSpec {
 public:
  EnsembleSpec(Preparation<Real> preparation, int n) : preparation_(std::move(preparation)), n_(n) {
    if (n_ < 1) throw ValidationError("EnsembleSpec: beam length must be >= 1");
    if (n_ > kDiagonalCap) {
      throw CapacityError("EnsembleSpec: beam length " + std::to_string(n_) + " exceeds cap " +
                          std::to_string(kDiagonalCap));
    }
    if (const auto* f = std::get_if<FixedMagnetization<Real>>(&preparation_)) {
      if (f->up_count < 0) throw ValidationError("FixedMagnetization: m must be >= 0");
      if (f->up_count > n_) {
        throw ValidationError("FixedMagnetization: m exceeds n (m = " + std::to_string(f->up_count) +
                              ", n = " + std::to_string(n_) + ")");
      }
    }
    if (const auto* e = std::get_if<ExplicitMixture<Real>>(&preparation_)) {
      if (e->n() != n_) {
        throw ValidationError("ExplicitMixture: state sequences have length " + std::to_string(e->n()) +
                              " but n = " + std::to_string(n_));
      }
    }
  }

  const Preparation<Real>& preparation() const { return preparation_; }
  int n() const { return n_; }

 private:
  Preparation<Real> preparation_;
  int n_;
};

/// Axis of a basis-type preparation; empty for explicit mixtures.
template <typename Real>
std::optional<Axis<Real>> preparation_axis(const Preparation<Real>& prep) {
  return std::visit(
      [](const auto& p) -> std::optional<Axis<Real>> {
        if constexpr (requires { p.axis; }) {
          return p.axis;
        } else {
          return std::nullopt;
        }
      },
      prep);
}

/// C(n, m) / 2^n via the multiplicative recurrence, rescaled as it goes so
/// that no intermediate overflows.
template <typename Real = double>
Real chopping_weight(int n, int m) {
  if (n < 0 || m < 0 || m > n) {
    throw ValidationError("chopping_weight: need 0 <= m <= n (n = " + std::to_string(n) +
                          ", m = " + std::to_string(m) + ")");
  }
  const int k = std::min(m, n - m);
  Real w = 1;
  int exponent = -n;
  for (int i = 1; i <= k; ++i) {
    w = w * Real(n - k + i) / Real(i);
    if (w > Real(0x1p400)) {
      w = std::ldexp(w, -400);
      exponent += 400;
    }
  }
  return std::ldexp(w, exponent);
}

/// Configurations seen by an n-particle window of the alternating
/// preparation, with their weights.
inline std::vector<std::pair<double, Configuration>> alternating_configurations(int n) {
  if (n < 1) throw ValidationError("alternating_configurations: n must be >= 1");
  auto pattern = [n](int first) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) labels[static_cast<std::size_t>(k)] = (k % 2 == 0) ? first : -first;
    return Configuration(std::move(labels));
  };
  if (n % 2 == 0) return {{1.0, pattern(+1)}};
  return {{0.5, pattern(+1)}, {0.5, pattern(-1)}};
}

template <typename Real = double>
std::vector<std::pair<Real, NState<Real>>> correlated_pure_states(const BasisPair<Real>& basis, int n) {
  require_particle_count(n, kDiagonalCap, "correlated_pure_states");
  std::vector<std::pair<Real, NState<Real>>> out;
  for (const auto& [w, config] : alternating_configurations(n)) {
    out.emplace_back(Real(w), product_state(basis, config));
  }
  return out;
}

namespace detail {

/// Weights of the basis projectors making up a basis-type preparation,
/// indexed by configuration index in that basis.
template <typename Real>
VectorXc<Real> configuration_weights(const Preparation<Real>& prep, int n) {
  const auto dim = static_cast<Eigen::Index>(hilbert_dimension(n));
  VectorXc<Real> w = VectorXc<Real>::Zero(dim);
  if (std::holds_alternative<RandomMixture<Real>>(prep)) {
    w.setConstant(Real(1) / Real(dim));
  } else if (const auto* f = std::get_if<FixedMagnetization<Real>>(&prep)) {
    // m plus labels <=> n - m one-bits in the index; each of the C(n, m)
    // matching configurations gets 1 / C(n, m).
    std::vector<Eigen::Index> members;
    for (Eigen::Index alpha = 0; alpha < dim; ++alpha) {
      if (std::popcount(static_cast<std::uint64_t>(alpha)) == n - f->up_count) members.push_back(alpha);
    }
    const Real each = Real(1) / Real(members.size());
    for (Eigen::Index alpha : members) w[alpha] = each;
  } else if (std::holds_alternative<AlternatingCorrelated<Real>>(prep)) {
    for (const auto& [weight, config] : alternating_configurations(n)) {
      w[static_cast<Eigen::Index>(configuration_index(config))] += Real(weight);
    }
  } else {
    throw ValidationError("configuration_weights: explicit mixtures have no basis");
  }
  return w;
}

template <typename Real>
std::optional<int> z_label(const PureQubit<Real>& s) {
  if (s[1] == Complex<Real>(0)) return 0;
  if (s[0] == Complex<Real>(0)) return 1;
  return std::nullopt;
}

template <typename Real>
NOperator<Real> explicit_density(const ExplicitMixture<Real>& mix) {
  const int n = mix.n();
  bool all_z = true;
  for (const auto& t : mix.terms()) {
    for (const auto& s : t.states) all_z = all_z && z_label(s).has_value();
  }
  if (all_z) {
    require_particle_count(n, kDiagonalCap, "density_matrix(explicit)");
    VectorXc<Real> d = VectorXc<Real>::Zero(static_cast<Eigen::Index>(hilbert_dimension(n)));
    for (const auto& t : mix.terms()) {
      std::uint64_t alpha = 0;
      for (const auto& s : t.states) alpha = (alpha << 1) | static_cast<std::uint64_t>(*z_label(s));
      d[static_cast<Eigen::Index>(alpha)] += t.weight;
    }
    return NOperator<Real>::diagonal(n, std::move(d), OperatorFlags::density_operator());
  }
  require_particle_count(n, kDenseCap, "density_matrix(explicit)");
  const auto dim = static_cast<Eigen::Index>(hilbert_dimension(n));
  MatrixXc<Real> rho = MatrixXc<Real>::Zero(dim, dim);
  for (const auto& t : mix.terms()) {
    const VectorXc<Real> psi = kron_states<Real>(t.states).amplitudes();
    rho.noalias() += t.weight * (psi * psi.adjoint());
  }
  return NOperator<Real>::dense(n, std::move(rho), OperatorFlags::density_operator());
}

}  // namespace detail

/// Exact density operator of the n-particle beams produced by a preparation.
///
/// Basis-type preparations are assembled on the diagonal in their own basis.
/// For the z basis that diagonal is the result (allowed up to kDiagonalCap);
/// any other basis is reached by conjugating with U^{(x)n}, where U maps the
/// z eigenvectors onto the preparation basis (dense, up to kDenseCap).
template <typename Real>
NOperator<Real> density_matrix(const EnsembleSpec<Real>& spec) {
  const int n = spec.n();
  const auto& prep = spec.preparation();
  if (const auto* mix = std::get_if<ExplicitMixture<Real>>(&prep)) return detail::explicit_density(*mix);

  const BasisPair<Real> basis = preparation_axis(prep)->basis();
  if (!basis.is_computational()) require_particle_count(n, kDenseCap, "density_matrix");
  auto diag = NOperator<Real>::diagonal(n, detail::configuration_weights(prep, n),
                                        OperatorFlags::density_operator());
  if (basis.is_computational()) return diag;
  return conjugate_by_product(basis.unitary(), diag);
}

template <typename Real>
NOperator<Real> density_matrix(const Preparation<Real>& prep, int n) {
  return density_matrix(EnsembleSpec<Real>(prep, n));
}

/// Sum_m C(n,m)/2^n * rho_{n,m}: the random mixture reassembled from its
/// fixed-magnetization sectors.
template <typename Real>
NOperator<Real> mix_fixed_magnetization(const Axis<Real>& axis, int n) {
  require_particle_count(n, axis.basis().is_computational() ? kDiagonalCap : kDenseCap,
                         "mix_fixed_magnetization");
  std::vector<Real> weights;
  std::vector<NOperator<Real>> sectors;
  for (int m = 0; m <= n; ++m) {
    weights.push_back(chopping_weight<Real>(n, m));
    sectors.push_back(density_matrix<Real>(FixedMagnetization<Real>{axis, m}, n));
  }
  return convex_combination<Real>(weights, sectors);
}

}  // namespace beamprep
