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

// Monte Carlo beam sampler: draws beams from a preparation and measures the
// collective z spin on each. Independent of the density-operator code path.

#include <cstdint>
#include <vector>

#include "beamprep/ensembles.hpp"
#include "beamprep/philox.hpp"
#include "beamprep/tensor.hpp"

namespace beamprep {

struct BeamSample {
  /// Labels in the preparation's own basis (measured z labels for explicit
  /// mixtures).
  Configuration configuration;
  /// Measured eigenvalue of the collective z observable.
  double sigma_z_value = 0;
};

struct EmpiricalReport {
  std::int64_t beams = 0;
  double mean = 0;
  /// Sample standard deviation (M - 1 denominator).
  double dispersion = 0;
  double standard_error_mean = 0;
  /// Normal-theory approximation dispersion / sqrt(2 (M - 1)).
  double standard_error_dispersion = 0;

  friend bool operator==(const EmpiricalReport&, const EmpiricalReport&) = default;
};

BeamSample sample_beam(const Preparation<double>& prep, int n, PhiloxStream& rng);

/// Beam b is drawn from Philox stream (seed, b); the report is identical for
/// any number of workers.
EmpiricalReport empirical_moments(const Preparation<double>& prep, int n, std::int64_t beams, std::uint64_t seed,
                                  int workers = 1);

/// Summary statistics of a list of measured values (sequential reduction).
EmpiricalReport summarize(const std::vector<double>& values);

}  // namespace beamprep
