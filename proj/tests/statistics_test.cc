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

#include "beamprep/statistics.hpp"

#include <cmath>
#include <random>

#include "beamprep/ensembles.hpp"
#include "gtest/gtest.h"

using namespace beamprep;

namespace {

using Ax = Axis<double>;

NOperator<double> rho_of(const Preparation<double>& p, int n) { return density_matrix<double>(p, n); }
NOperator<double> sigma_z(int n) { return collective_observable(pauli_z<double>(), n); }

NOperator<double> random_density(int n, std::mt19937_64& gen) {
  std::normal_distribution<double> g;
  const auto dim = static_cast<Eigen::Index>(hilbert_dimension(n));
  MatrixXc<double> a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = {g(gen), g(gen)};
  MatrixXc<double> rho = a * a.adjoint();
  rho /= rho.trace();
  rho = (rho + rho.adjoint().eval()) / 2.0;
  return NOperator<double>::dense(n, rho, OperatorFlags::density_operator());
}

}  // namespace

TEST(Moments, random_mixture_dispersion_is_sqrt_n) {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& axis : {Ax::z(), Ax::x()}) {
      const auto m = moments(rho_of(RandomMixture<double>{axis}, n), sigma_z(n));
      EXPECT_NEAR(m.mean, 0.0, 1e-10);
      EXPECT_NEAR(m.dispersion, std::sqrt(n), 1e-10) << "n = " << n;
    }
  }
  for (int n = 13; n <= 20; ++n) {
    const auto rho = rho_of(RandomMixture<double>{Ax::z()}, n);
    ASSERT_TRUE(rho.is_diagonal());
    const auto m = moments(rho, sigma_z(n));
    EXPECT_NEAR(m.mean, 0.0, 1e-10);
    EXPECT_NEAR(m.dispersion, std::sqrt(n), 1e-10) << "n = " << n;
  }
}

TEST(Moments, alternating_examples) {
  EXPECT_EQ(moments(rho_of(AlternatingCorrelated<double>{Ax::z()}, 2), sigma_z(2)).dispersion, 0.0);
  EXPECT_NEAR(moments(rho_of(AlternatingCorrelated<double>{Ax::x()}, 2), sigma_z(2)).dispersion, std::sqrt(2.0),
              1e-10);
  const auto m3 = moments(rho_of(AlternatingCorrelated<double>{Ax::z()}, 3), sigma_z(3));
  EXPECT_NEAR(m3.mean, 0.0, 1e-12);
  EXPECT_NEAR(m3.second_moment, 1.0, 1e-12);
  EXPECT_NEAR(m3.dispersion, 1.0, 1e-12);
  const auto x3 = moments(rho_of(AlternatingCorrelated<double>{Ax::x()}, 3), sigma_z(3));
  EXPECT_NEAR(x3.second_moment, 3.0, 1e-12);
  EXPECT_NEAR(x3.dispersion, std::sqrt(3.0), 1e-12);
}

TEST(Moments, even_odd_law) {
  for (int k = 1; k <= 5; ++k) {
    const int even = 2 * k;
    const int odd = 2 * k + 1;
    EXPECT_NEAR(moments(rho_of(AlternatingCorrelated<double>{Ax::z()}, even), sigma_z(even)).dispersion, 0.0, 1e-10);
    EXPECT_NEAR(moments(rho_of(AlternatingCorrelated<double>{Ax::x()}, even), sigma_z(even)).dispersion,
                std::sqrt(even), 1e-10);
    EXPECT_NEAR(moments(rho_of(AlternatingCorrelated<double>{Ax::z()}, odd), sigma_z(odd)).dispersion, 1.0, 1e-10);
    EXPECT_NEAR(moments(rho_of(AlternatingCorrelated<double>{Ax::x()}, odd), sigma_z(odd)).dispersion,
                std::sqrt(odd), 1e-10);
  }
}

TEST(Moments, zero_total_spin_beams) {
  for (int n = 2; n <= 10; n += 2) {
    EXPECT_NEAR(moments(rho_of(FixedMagnetization<double>{Ax::z(), n / 2}, n), sigma_z(n)).dispersion, 0.0, 1e-10);
    EXPECT_NEAR(moments(rho_of(FixedMagnetization<double>{Ax::x(), n / 2}, n), sigma_z(n)).dispersion, std::sqrt(n),
                1e-10);
  }
}

TEST(Moments, variance_identity_and_dense_observable) {
  std::mt19937_64 gen(3);
  for (int n = 1; n <= 4; ++n) {
    const auto rho = random_density(n, gen);
    const auto sx = collective_observable(pauli_x<double>(), n);
    const auto m = moments(rho, sx);
    EXPECT_NEAR(m.dispersion * m.dispersion, m.second_moment - m.mean * m.mean, 1e-10);
    // Diagonal rho with dense observable takes the row-norm shortcut.
    const auto rho_d = rho_of(AlternatingCorrelated<double>{Ax::z()}, n);
    const auto rho_dense = NOperator<double>::dense(n, rho_d.to_dense(), OperatorFlags::density_operator());
    EXPECT_NEAR(moments(rho_d, sx).second_moment, moments(rho_dense, sx).second_moment, 1e-12);
  }
}

TEST(Moments, long_double_instantiation) {
  const auto rho = density_matrix<long double>(RandomMixture<long double>{Axis<long double>::x()}, 4);
  const auto m = moments(rho, collective_observable(pauli_z<long double>(), 4));
  EXPECT_NEAR(static_cast<double>(m.dispersion), 2.0, 1e-15);
}

TEST(TraceDistance, examples) {
  const auto rho = rho_of(AlternatingCorrelated<double>{Ax::x()}, 3);
  EXPECT_NEAR(trace_distance(rho, rho), 0.0, 1e-12);

  const auto z2 = rho_of(AlternatingCorrelated<double>{Ax::z()}, 2);
  const auto x2 = rho_of(AlternatingCorrelated<double>{Ax::x()}, 2);
  // Oracle 1: pure states, T = sqrt(1 - |<psi|phi>|^2).
  const auto z = basis_z();
  const auto x = basis_x();
  const auto psi = kron_states<double>({z.plus(), z.minus()});
  const auto phi = kron_states<double>({x.plus(), x.minus()});
  const Complex<double> ov = inner(psi, phi);
  EXPECT_NEAR(ov.real(), -0.5, 1e-15);
  const double oracle = std::sqrt(1.0 - std::norm(ov));
  EXPECT_NEAR(oracle, std::sqrt(3.0) / 2, 1e-15);
  // Oracle 2: general (non-Hermitian) eigensolver on the 4x4 difference.
  Eigen::ComplexEigenSolver<MatrixXc<double>> ces(z2.to_dense() - x2.to_dense());
  const double general = ces.eigenvalues().cwiseAbs().sum() / 2;
  EXPECT_NEAR(general, oracle, 1e-12);
  EXPECT_NEAR(trace_distance(z2, x2), oracle, 1e-12);

  for (int n = 1; n <= 8; ++n) {
    EXPECT_LT(trace_distance(rho_of(RandomMixture<double>{Ax::z()}, n), rho_of(RandomMixture<double>{Ax::x()}, n)),
              1e-10);
  }
}

TEST(TraceDistance, metric_properties) {
  std::mt19937_64 gen(19);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + t % 3;
    const auto a = random_density(n, gen);
    const auto b = random_density(n, gen);
    const auto c = random_density(n, gen);
    const double ab = trace_distance(a, b);
    EXPECT_NEAR(ab, trace_distance(b, a), 1e-12);
    EXPECT_GT(ab, 0.0);
    EXPECT_LE(ab, 1.0 + 1e-12);
    EXPECT_LT(trace_distance(a, a), 1e-12);
    EXPECT_LE(trace_distance(a, c), ab + trace_distance(b, c) + 1e-12);
  }
}

TEST(TraceDistance, errors) {
  EXPECT_THROW(trace_distance(NOperator<double>::maximally_mixed(1), NOperator<double>::maximally_mixed(2)),
               ValidationError);
  EXPECT_THROW(trace_distance(NOperator<double>::maximally_mixed(1), sigma_z(1)), ValidationError);
}

TEST(NoSignaling, random_preparations_pass) {
  for (int n = 1; n <= 6; ++n) {
    const auto r = no_signaling_check(rho_of(RandomMixture<double>{Ax::z()}, n),
                                      rho_of(RandomMixture<double>{Ax::x()}, n), 100, 2024);
    EXPECT_TRUE(r.passed);
    EXPECT_LT(r.max_deviation, 1e-10);
  }
}

TEST(NoSignaling, correlated_pair_fails) {
  const auto r = no_signaling_check(rho_of(AlternatingCorrelated<double>{Ax::z()}, 2),
                                    rho_of(AlternatingCorrelated<double>{Ax::x()}, 2), 100, 2024);
  EXPECT_FALSE(r.passed);
  EXPECT_GT(r.max_deviation, 0.1);
}

TEST(NoSignaling, identical_states_have_zero_deviation) {
  const auto rho = rho_of(AlternatingCorrelated<double>{Ax::x()}, 3);
  const auto r = no_signaling_check(rho, rho, 20, 1);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.max_deviation, 0.0);
}

TEST(NoSignaling, verdict_agrees_with_trace_distance) {
  std::vector<Preparation<double>> preps{RandomMixture<double>{Ax::z()},          RandomMixture<double>{Ax::x()},
                                         AlternatingCorrelated<double>{Ax::z()},  AlternatingCorrelated<double>{Ax::x()},
                                         FixedMagnetization<double>{Ax::z(), 1},  FixedMagnetization<double>{Ax::x(), 1},
                                         RandomMixture<double>{Ax::bloch(1.0, 2.0)}};
  for (int n = 1; n <= 3; ++n) {
    for (const auto& a : preps) {
      for (const auto& b : preps) {
        const auto ra = rho_of(a, n);
        const auto rb = rho_of(b, n);
        EXPECT_EQ(no_signaling_check(ra, rb, 30, 7).passed, trace_distance(ra, rb) < 1e-10);
      }
    }
  }
}

TEST(NoSignaling, deterministic_for_seed) {
  const auto a = rho_of(AlternatingCorrelated<double>{Ax::z()}, 3);
  const auto b = rho_of(AlternatingCorrelated<double>{Ax::x()}, 3);
  const auto r1 = no_signaling_check(a, b, 10, 99);
  const auto r2 = no_signaling_check(a, b, 10, 99);
  EXPECT_EQ(r1.max_deviation, r2.max_deviation);
  EXPECT_EQ(r1.worst_trial, r2.worst_trial);
  PhiloxStream s1(5, 0), s2(5, 0);
  EXPECT_EQ(random_hermitian(2, s1).dense_entries(), random_hermitian(2, s2).dense_entries());
}
