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

#include "beamprep/claims.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "beamprep/ensembles.hpp"
#include "beamprep/statistics.hpp"

namespace beamprep {
namespace {

struct Expected {
  double value;
  std::string form;
};

Expected integer(long v) { return {static_cast<double>(v), std::to_string(v)}; }
Expected root(int n) { return {std::sqrt(static_cast<double>(n)), "sqrt(" + std::to_string(n) + ")"}; }
Expected half() { return {0.5, "1/2"}; }

class Table {
 public:
  void add(std::string id, int n, std::string method, std::string quantity, const Expected& expected,
           double computed, std::string source) {
    rows_.push_back({std::move(id), n, std::move(method), std::move(quantity), expected.value, expected.form,
                     computed, std::abs(expected.value - computed), std::move(source)});
  }

  std::vector<ClaimRow> finish() && {
    std::stable_sort(rows_.begin(), rows_.end(), [](const ClaimRow& a, const ClaimRow& b) {
      return a.claim_id != b.claim_id ? a.claim_id < b.claim_id : a.n < b.n;
    });
    return std::move(rows_);
  }

 private:
  std::vector<ClaimRow> rows_;
};

const Axis<double> kAxisI = Axis<double>::z();
const Axis<double> kAxisII = Axis<double>::x();

void random_mixture_rows(Table& t, int n, const NOperator<double>& sigma_z) {
  const auto rho_i = density_matrix<double>(RandomMixture<double>{kAxisI}, n);
  const auto rho_ii = density_matrix<double>(RandomMixture<double>{kAxisII}, n);
  const auto m_i = moments(rho_i, sigma_z);
  const auto m_ii = moments(rho_ii, sigma_z);
  const std::string src_mean = "<Sigma_z> = 0 for completely random mixtures";
  const std::string src_disp = "sigma_N = sqrt(N) for completely random mixtures";
  t.add("random-mixture-mean", n, "I", "mean", integer(0), m_i.mean, src_mean);
  t.add("random-mixture-mean", n, "II", "mean", integer(0), m_ii.mean, src_mean);
  t.add("random-mixture-dispersion", n, "I", "dispersion", root(n), m_i.dispersion, src_disp);
  t.add("random-mixture-dispersion", n, "II", "dispersion", root(n), m_ii.dispersion, src_disp);
  t.add("random-mixture-equality", n, "I-vs-II", "trace_distance", integer(0), trace_distance(rho_i, rho_ii),
        "rho_N^I = rho_N^II = Id(2^N)/2^N");

  double weight_sum = 0;
  for (int m = 0; m <= n; ++m) weight_sum += chopping_weight<double>(n, m);
  t.add("chopping-weight-sum", n, "I", "sum_m C(N,m)/2^N", integer(1), weight_sum,
        "sum_m C(N,m) = 2^N");
}

void correlated_rows(Table& t, int n, const NOperator<double>& sigma_z) {
  const auto rho_i = density_matrix<double>(AlternatingCorrelated<double>{kAxisI}, n);
  const auto rho_ii = density_matrix<double>(AlternatingCorrelated<double>{kAxisII}, n);
  const auto m_i = moments(rho_i, sigma_z);
  const auto m_ii = moments(rho_ii, sigma_z);
  const bool even = n % 2 == 0;
  const std::string src_i = even ? "alternating preparation, even N: sigma^I = 0"
                                 : "alternating preparation, odd N: sigma^I = 1";
  const std::string src_ii = "alternating preparation: sigma^II = sqrt(N)";
  t.add("correlated-mean", n, "I", "mean", integer(0), m_i.mean, "<Sigma_z> = 0 for alternating preparations");
  t.add("correlated-mean", n, "II", "mean", integer(0), m_ii.mean, "<Sigma_z> = 0 for alternating preparations");
  t.add("correlated-second-moment", n, "I", "second_moment", integer(even ? 0 : 1), m_i.second_moment, src_i);
  t.add("correlated-second-moment", n, "II", "second_moment", integer(n), m_ii.second_moment, src_ii);
  t.add("correlated-dispersion", n, "I", "dispersion", integer(even ? 0 : 1), m_i.dispersion, src_i);
  t.add("correlated-dispersion", n, "II", "dispersion", root(n), m_ii.dispersion, src_ii);
  if (n == 1) {
    t.add("correlated-one-particle-equality", n, "I-vs-II", "trace_distance", integer(0),
          trace_distance(rho_i, rho_ii), "rho_1^I = rho_1^II = Id(2)/2");
  }
}

void fixed_magnetization_rows(Table& t, int n, const NOperator<double>& sigma_z) {
  const int m = n / 2;
  const auto m_i = moments(density_matrix<double>(FixedMagnetization<double>{kAxisI, m}, n), sigma_z);
  const auto m_ii = moments(density_matrix<double>(FixedMagnetization<double>{kAxisII, m}, n), sigma_z);
  t.add("fixed-magnetization-dispersion", n, "I", "dispersion", integer(0), m_i.dispersion,
        "zero total spin beams: sigma^I = 0");
  t.add("fixed-magnetization-dispersion", n, "II", "dispersion", root(n), m_ii.dispersion,
        "zero total spin beams: sigma^II = sqrt(N)");
}

void three_particle_rows(Table& t) {
  constexpr int n = 3;
  const std::array<Expected, 8> density{integer(0), integer(0), half(), integer(0),
                                        integer(0), half(),     integer(0), integer(0)};
  const std::array<long, 8> spectrum{3, 1, 1, -1, 1, -1, -1, -3};
  const std::array<long, 8> spectrum_sq{9, 1, 1, 1, 1, 1, 1, 9};

  const auto rho_i = density_matrix<double>(AlternatingCorrelated<double>{kAxisI}, n);
  // Method II in its own (x) basis: undo the basis change.
  const auto rho_ii = density_matrix<double>(AlternatingCorrelated<double>{kAxisII}, n);
  const Matrix2c<double> u = kAxisII.basis().unitary();
  const auto rho_ii_own = conjugate_by_product<double>(u.adjoint(), rho_ii);
  const auto sigma_z = collective_observable(pauli_z<double>(), n);
  const auto sigma_z_sq = matrix_power2(sigma_z);

  const VectorXc<double> d_i = rho_i.diagonal_part();
  const VectorXc<double> d_ii = rho_ii_own.diagonal_part();
  const VectorXc<double> s = sigma_z.diagonal_part();
  const VectorXc<double> s2 = sigma_z_sq.diagonal_part();
  for (int k = 0; k < 8; ++k) {
    const std::string q = "diag[" + std::to_string(k) + "]";
    t.add("n3-density-diagonal", n, "I", q, density[k], d_i[k].real(), "rho_3 = diag(0,0,1/2,0,0,1/2,0,0)");
    t.add("n3-density-diagonal", n, "II", q, density[k], d_ii[k].real(),
          "rho_3 = diag(0,0,1/2,0,0,1/2,0,0) in the f basis");
    t.add("n3-sigma-z-diagonal", n, "I", q, integer(spectrum[k]), s[k].real(),
          "Sigma_z = diag(3,1,1,-1,1,-1,-1,-3)");
    t.add("n3-sigma-z-squared-diagonal", n, "I", q, integer(spectrum_sq[k]), s2[k].real(),
          "Sigma_z^2 = diag(9,1,1,1,1,1,1,9)");
  }
}

}  // namespace

std::vector<ClaimRow> reproduce_all(int max_n) {
  require_particle_count(max_n, kDenseCap, "reproduce_all");
  Table table;
  for (int n = 1; n <= max_n; ++n) {
    const auto sigma_z = collective_observable(pauli_z<double>(), n);
    random_mixture_rows(table, n, sigma_z);
    correlated_rows(table, n, sigma_z);
    if (n % 2 == 0) fixed_magnetization_rows(table, n, sigma_z);
  }
  if (max_n >= 3) three_particle_rows(table);
  return std::move(table).finish();
}

std::size_t expected_row_count(int max_n) {
  const auto n = static_cast<std::size_t>(max_n);
  return 12 * n + 1 + 2 * (n / 2) + (max_n >= 3 ? 32 : 0);
}

}  // namespace beamprep
