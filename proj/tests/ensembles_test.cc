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

#include "beamprep/ensembles.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "beamprep/statistics.hpp"
#include "gtest/gtest.h"

using namespace beamprep;

namespace {

constexpr double kTol = 1e-12;
using Ax = Axis<double>;

std::vector<Ax> test_axes() {
  std::vector<Ax> axes{Ax::z(), Ax::x()};
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> polar(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> azimuth(0.0, 2 * std::numbers::pi);
  for (int i = 0; i < 10; ++i) axes.push_back(Ax::bloch(polar(gen), azimuth(gen)));
  return axes;
}

MatrixXc<double> maximally_mixed_dense(int n) {
  const auto dim = static_cast<Eigen::Index>(hilbert_dimension(n));
  return MatrixXc<double>::Identity(dim, dim) / static_cast<double>(dim);
}

/// Integer reference for C(n, m) by Pascal's triangle.
std::uint64_t pascal(int n, int m) {
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(i + 1), 1);
    for (int j = 1; j < i; ++j) next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
    row = next;
  }
  return row[static_cast<std::size_t>(m)];
}

}  // namespace

TEST(DensityMatrix, random_mixture_single_particle) {
  const auto rho = density_matrix<double>(RandomMixture<double>{Ax::z()}, 1);
  EXPECT_LT((rho.to_dense() - 0.5 * MatrixXc<double>::Identity(2, 2)).cwiseAbs().maxCoeff(), kTol);
}

TEST(DensityMatrix, random_mixture_is_basis_independent) {
  for (const auto& axis : test_axes()) {
    for (int n = 1; n <= 6; ++n) {
      const auto rho = density_matrix<double>(RandomMixture<double>{axis}, n);
      EXPECT_LT((rho.to_dense() - maximally_mixed_dense(n)).cwiseAbs().maxCoeff(), kTol) << "n = " << n;
      EXPECT_TRUE(rho.flags().density);
    }
  }
}

TEST(DensityMatrix, z_basis_uses_diagonal_storage_beyond_dense_cap) {
  const auto rho = density_matrix<double>(RandomMixture<double>{Ax::z()}, 16);
  EXPECT_TRUE(rho.is_diagonal());
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-10);
  EXPECT_THROW(density_matrix<double>(RandomMixture<double>{Ax::x()}, kDenseCap + 1), CapacityError);
}

TEST(DensityMatrix, alternating_three_particles) {
  const auto rho = density_matrix<double>(AlternatingCorrelated<double>{Ax::z()}, 3);
  ASSERT_TRUE(rho.is_diagonal());
  const std::vector<double> expected{0, 0, 0.5, 0, 0, 0.5, 0, 0};
  for (int i = 0; i < 8; ++i) EXPECT_EQ(rho.diagonal_entries()[i], Complex<double>(expected[i]));
}

TEST(DensityMatrix, alternating_two_particles_is_pure_up_down) {
  const auto z = basis_z();
  const auto rho = density_matrix<double>(AlternatingCorrelated<double>{Ax::z()}, 2);
  const auto expected = projector(kron_states<double>({z.plus(), z.minus()}));
  EXPECT_LT(max_abs_difference(rho, expected), kTol);
}

TEST(DensityMatrix, fixed_magnetization_two_particles) {
  const auto rho = density_matrix<double>(FixedMagnetization<double>{Ax::z(), 1}, 2);
  const std::vector<double> expected{0, 0.5, 0.5, 0};
  for (int i = 0; i < 4; ++i) EXPECT_EQ(rho.diagonal_entries()[i], Complex<double>(expected[i]));
}

TEST(DensityMatrix, explicit_equal_mixture_of_polarized_beams) {
  const auto z = basis_z();
  const ExplicitMixture<double> mix({{0.5, {z.plus()}}, {0.5, {z.minus()}}});
  const auto rho = density_matrix<double>(mix, 1);
  EXPECT_LT((rho.to_dense() - 0.5 * MatrixXc<double>::Identity(2, 2)).cwiseAbs().maxCoeff(), kTol);
}

TEST(DensityMatrix, explicit_non_z_terms_and_duplicates) {
  const auto x = basis_x();
  // Duplicate terms just accumulate.
  const ExplicitMixture<double> split({{0.25, {x.plus(), x.minus()}}, {0.25, {x.plus(), x.minus()}},
                                       {0.5, {x.minus(), x.plus()}}});
  const ExplicitMixture<double> merged({{0.5, {x.plus(), x.minus()}}, {0.5, {x.minus(), x.plus()}}});
  const auto a = density_matrix<double>(split, 2);
  const auto b = density_matrix<double>(merged, 2);
  EXPECT_FALSE(a.is_diagonal());
  EXPECT_LT(max_abs_difference(a, b), kTol);
  EXPECT_NEAR(trace_of_product(a, a).real(), 0.5, kTol);
}

TEST(DensityMatrix, validation_errors) {
  const auto z = basis_z();
  EXPECT_THROW(EnsembleSpec<double>(FixedMagnetization<double>{Ax::z(), 5}, 4), ValidationError);
  EXPECT_THROW(EnsembleSpec<double>(FixedMagnetization<double>{Ax::z(), -1}, 4), ValidationError);
  EXPECT_THROW(EnsembleSpec<double>(RandomMixture<double>{Ax::z()}, 0), ValidationError);
  EXPECT_THROW(EnsembleSpec<double>(RandomMixture<double>{Ax::z()}, kDiagonalCap + 1), CapacityError);
  EXPECT_THROW(ExplicitMixture<double>({{0.5, {z.plus()}}, {0.4, {z.minus()}}}), ValidationError);
  EXPECT_THROW(ExplicitMixture<double>({{1.5, {z.plus()}}, {-0.5, {z.minus()}}}), ValidationError);
  EXPECT_THROW(ExplicitMixture<double>({{0.5, {z.plus()}}, {0.5, {z.minus(), z.plus()}}}), ValidationError);
  const ExplicitMixture<double> one({{1.0, {z.plus()}}});
  EXPECT_THROW(EnsembleSpec<double>(one, 2), ValidationError);
}

TEST(ChoppingWeight, examples) {
  EXPECT_EQ(chopping_weight(2, 1), 0.5);
  // Oracle: 3-bit strings with exactly one zero bit, out of 8.
  int count = 0;
  for (int s = 0; s < 8; ++s) count += (std::popcount(static_cast<unsigned>(s)) == 2) ? 1 : 0;
  EXPECT_EQ(chopping_weight(3, 1), count / 8.0);
  EXPECT_EQ(chopping_weight(3, 1), 0.375);
  EXPECT_THROW(chopping_weight(3, 4), ValidationError);
  EXPECT_THROW(chopping_weight(3, -1), ValidationError);
}

TEST(ChoppingWeight, exact_against_integer_reference) {
  for (int n = 0; n <= 20; ++n) {
    double sum = 0;
    for (int m = 0; m <= n; ++m) {
      EXPECT_EQ(chopping_weight(n, m), std::ldexp(static_cast<double>(pascal(n, m)), -n)) << n << "," << m;
      sum += chopping_weight(n, m);
    }
    EXPECT_EQ(sum, 1.0);
  }
  for (int n = 21; n <= 64; ++n) {
    double sum = 0;
    for (int m = 0; m <= n; ++m) sum += chopping_weight(n, m);
    EXPECT_NEAR(sum, 1.0, 1e-14);
    EXPECT_NEAR(chopping_weight(n, n / 2), std::ldexp(static_cast<double>(pascal(n, n / 2)), -n), 1e-15);
  }
  EXPECT_TRUE(std::isfinite(chopping_weight(2000, 1000)));
}

TEST(MixFixedMagnetization, reassembles_random_mixture) {
  for (const auto& axis : {Ax::z(), Ax::x()}) {
    for (int n = 1; n <= 8; ++n) {
      const auto mixed = mix_fixed_magnetization(axis, n);
      const auto random = density_matrix<double>(RandomMixture<double>{axis}, n);
      EXPECT_LT(max_abs_difference(mixed, random), kTol) << "n = " << n;
      EXPECT_LT((mixed.to_dense() - maximally_mixed_dense(n)).cwiseAbs().maxCoeff(), kTol);
    }
  }
}

TEST(CorrelatedPureStates, examples) {
  const auto z = basis_z();
  auto index_of = [](const NState<double>& s) {
    Eigen::Index idx = 0;
    s.amplitudes().cwiseAbs().maxCoeff(&idx);
    EXPECT_EQ(std::abs(s.amplitudes()[idx]), 1.0);
    return idx;
  };
  const auto two = correlated_pure_states(z, 2);
  ASSERT_EQ(two.size(), 1U);
  EXPECT_EQ(two[0].first, 1.0);
  EXPECT_EQ(index_of(two[0].second), 1);

  const auto three = correlated_pure_states(z, 3);
  ASSERT_EQ(three.size(), 2U);
  EXPECT_EQ(three[0].first, 0.5);
  EXPECT_EQ(index_of(three[0].second), 2);
  EXPECT_EQ(index_of(three[1].second), 5);

  const auto one = correlated_pure_states(z, 1);
  ASSERT_EQ(one.size(), 2U);
  EXPECT_EQ(index_of(one[0].second), 0);
  EXPECT_EQ(index_of(one[1].second), 1);
}

TEST(CorrelatedPureStates, even_pattern_is_0101) {
  for (int n = 2; n <= 12; n += 2) {
    const auto configs = alternating_configurations(n);
    ASSERT_EQ(configs.size(), 1U);
    std::uint64_t expected = 0;
    for (int k = 0; k < n; ++k) expected = (expected << 1) | static_cast<std::uint64_t>(k % 2);
    EXPECT_EQ(configuration_index(configs[0].second), expected);
  }
}

TEST(Ensembles, purity_dichotomy) {
  for (const auto& axis : {Ax::z(), Ax::x()}) {
    for (int n = 1; n <= 8; ++n) {
      const auto rho = density_matrix<double>(AlternatingCorrelated<double>{axis}, n);
      EXPECT_NEAR(trace_of_product(rho, rho).real(), n % 2 == 0 ? 1.0 : 0.5, kTol);
    }
  }
}

TEST(Ensembles, same_magnetization_dispersion) {
  // Every mixture of z configurations with a fixed up count m has dispersion
  // 0; the x-basis analogue has dispersion sqrt(n).
  std::mt19937_64 gen(41);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  for (int n = 1; n <= 5; ++n) {
    const auto sz = collective_observable(pauli_z<double>(), n);
    for (int m = 0; m <= n; ++m) {
      for (const auto& axis : {Ax::z(), Ax::x()}) {
        const auto basis = axis.basis();
        std::vector<MixtureTerm<double>> terms;
        double total = 0;
        for (std::uint64_t alpha = 0; alpha < hilbert_dimension(n); ++alpha) {
          const auto config = configuration_from_index(n, alpha);
          if (config.plus_count() != m) continue;
          std::vector<PureQubit<double>> states;
          for (int l : config.labels()) states.push_back(basis.state(l == -1));
          terms.push_back({u(gen), std::move(states)});
          total += terms.back().weight;
        }
        for (auto& t : terms) t.weight /= total;
        const auto rho = density_matrix<double>(ExplicitMixture<double>(terms), n);
        const auto mo = moments(rho, sz);
        if (axis == Ax::z()) {
          EXPECT_NEAR(mo.dispersion, 0.0, 1e-7) << n << "," << m;
        } else {
          EXPECT_NEAR(mo.dispersion, std::sqrt(n), 1e-10) << n << "," << m;
        }
      }
    }
  }
}

TEST(Ensembles, all_outputs_are_valid_densities) {
  for (const auto& axis : test_axes()) {
    for (int n = 1; n <= 5; ++n) {
      std::vector<Preparation<double>> preps{RandomMixture<double>{axis}, AlternatingCorrelated<double>{axis}};
      for (int m = 0; m <= n; ++m) preps.push_back(FixedMagnetization<double>{axis, m});
      for (const auto& p : preps) {
        const auto rho = density_matrix<double>(p, n);
        EXPECT_TRUE(rho.flags().density);
        EXPECT_NEAR(rho.trace().real(), 1.0, 1e-10);
        EXPECT_GE(min_eigenvalue(rho), -1e-10);
      }
    }
  }
}
