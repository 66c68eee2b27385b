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

#include "beamprep/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <variant>

namespace beamprep {
namespace {

std::vector<int> draw_labels(const Preparation<double>& prep, int n, PhiloxStream& rng) {
  std::vector<int> labels(static_cast<std::size_t>(n), 1);
  if (std::holds_alternative<RandomMixture<double>>(prep)) {
    for (int& l : labels) l = rng.fair_bit() ? -1 : 1;
  } else if (const auto* f = std::get_if<FixedMagnetization<double>>(&prep)) {
    std::fill(labels.begin() + f->up_count, labels.end(), -1);
    for (std::size_t i = labels.size() - 1; i > 0; --i) {
      std::swap(labels[i], labels[rng.uniform_below(i + 1)]);
    }
  } else if (std::holds_alternative<AlternatingCorrelated<double>>(prep)) {
    const int first = (n % 2 == 1 && rng.fair_bit()) ? -1 : 1;
    for (int k = 0; k < n; ++k) labels[static_cast<std::size_t>(k)] = (k % 2 == 0) ? first : -first;
  }
  return labels;
}

/// Born-rule z measurement of one qubit: +1 with probability |<e_+|s>|^2.
int measure_z(const PureQubit<double>& s, PhiloxStream& rng) {
  if (s[1] == 0.0) return 1;
  if (s[0] == 0.0) return -1;
  return rng.uniform() < std::norm(s[0]) ? 1 : -1;
}

}  // namespace

BeamSample sample_beam(const Preparation<double>& prep, int n, PhiloxStream& rng) {
  const EnsembleSpec<double> spec(prep, n);  // validates caps and m

  if (const auto* mix = std::get_if<ExplicitMixture<double>>(&prep)) {
    const double u = rng.uniform();
    const auto& terms = mix->terms();
    std::size_t chosen = terms.size() - 1;
    double cumulative = 0;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      cumulative += terms[t].weight;
      if (u < cumulative) {
        chosen = t;
        break;
      }
    }
    std::vector<int> measured;
    measured.reserve(static_cast<std::size_t>(n));
    for (const auto& s : terms[chosen].states) measured.push_back(measure_z(s, rng));
    Configuration config(std::move(measured));
    const double value = config.label_sum();
    return {std::move(config), value};
  }

  Configuration config(draw_labels(prep, n, rng));
  const BasisPair<double> basis = preparation_axis(prep)->basis();
  if (basis.is_computational()) {
    const double value = config.label_sum();
    return {std::move(config), value};
  }
  // Every prepared beam is a product state, so the measurement factorizes.
  int total = 0;
  for (int l : config.labels()) total += measure_z(basis.state(l == -1), rng);
  return {std::move(config), static_cast<double>(total)};
}

EmpiricalReport summarize(const std::vector<double>& values) {
  const auto m = static_cast<std::int64_t>(values.size());
  if (m < 2) throw ValidationError("summarize: need at least 2 values");
  double sum = 0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(m);
  double ss = 0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(m - 1));
  EmpiricalReport r;
  r.beams = m;
  r.mean = mean;
  r.dispersion = sd;
  r.standard_error_mean = sd / std::sqrt(static_cast<double>(m));
  r.standard_error_dispersion = sd / std::sqrt(2.0 * static_cast<double>(m - 1));
  return r;
}

EmpiricalReport empirical_moments(const Preparation<double>& prep, int n, std::int64_t beams, std::uint64_t seed,
                                  int workers) {
  if (beams < 2) throw ValidationError("empirical_moments: need at least 2 beams");
  if (workers < 1) throw ValidationError("empirical_moments: need at least 1 worker");
  const EnsembleSpec<double> spec(prep, n);

  std::vector<double> values(static_cast<std::size_t>(beams));
  auto fill = [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t b = begin; b < end; ++b) {
      PhiloxStream rng(seed, static_cast<std::uint64_t>(b));
      values[static_cast<std::size_t>(b)] = sample_beam(prep, n, rng).sigma_z_value;
    }
  };
  if (workers == 1) {
    fill(0, beams);
  } else {
    std::vector<std::jthread> pool;
    const std::int64_t chunk = (beams + workers - 1) / workers;
    for (std::int64_t begin = 0; begin < beams; begin += chunk) {
      pool.emplace_back(fill, begin, std::min(beams, begin + chunk));
    }
  }
  return summarize(values);
}

}  // namespace beamprep
