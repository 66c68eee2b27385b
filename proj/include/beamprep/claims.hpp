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

// Regression table of every quantitative statement about the preparations:
// closed-form expected values next to the values computed by the library.

#include <cstddef>
#include <string>
#include <vector>

namespace beamprep {

/// Maximum |expected - computed| tolerated for any row.
inline constexpr double kClaimTolerance = 1e-10;

struct ClaimRow {
  std::string claim_id;
  int n = 0;
  std::string method;
  std::string quantity;
  double paper_value = 0;
  /// Symbolic rendering of paper_value, e.g. "sqrt(6)".
  std::string paper_form;
  double computed_value = 0;
  double abs_error = 0;
  std::string source;
};

/// All rows for beam lengths 1..max_n, ordered by (claim_id, n).
std::vector<ClaimRow> reproduce_all(int max_n);

/// Number of rows reproduce_all(max_n) returns.
std::size_t expected_row_count(int max_n);

}  // namespace beamprep
