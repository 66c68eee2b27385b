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

// Output helpers: JSON with 17 significant digits and RFC 4180 CSV fields.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace beamprep {

/// Serializes with two-space indentation; floating-point values are written
/// with %.17g, non-finite ones as null.
std::string dump_json(const nlohmann::ordered_json& value);

std::string format_double(double v);

/// Quotes a field when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view field);
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace beamprep
