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

// Textual form of preparations:
//
//   random:<axis>   fixedm:<axis>:<m>   alternating:<axis>   explicit:@<file>
//   <axis> := z | x | bloch(<polar>,<azimuth>)      (angles in radians)
//
// Explicit mixture files are JSON:
//   {"terms":[{"weight":w,"states":[[re0,im0,re1,im1],...]},...]}

#include <cstddef>
#include <string>
#include <string_view>

#include "beamprep/ensembles.hpp"

namespace beamprep {

/// Syntax error; `position` is the byte offset into the parsed text.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : ValidationError("at position " + std::to_string(position) + ": " + message), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Preparation<double> parse_preparation(std::string_view text);

/// Inverse of parse_preparation. Explicit mixtures are printable only when
/// they remember the file they came from.
std::string format_preparation(const Preparation<double>& prep);

std::string format_axis(const Axis<double>& axis);

ExplicitMixture<double> parse_explicit_mixture(std::string_view json_text, std::string source = {});
ExplicitMixture<double> read_explicit_mixture(const std::string& path);

}  // namespace beamprep
