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

// Command-line front end. Exit codes: 0 success, 1 invalid input or I/O
// failure, 2 an acceptance check failed.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace beamprep {

enum class Command { Density, Moments, Compare, Sample, Reproduce, NoSignal };
enum class OutputFormat { Json, Csv, Pretty };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitAcceptanceFailure = 2;

/// Environment variable that overrides the default output format.
inline constexpr const char* kFormatEnvVar = "BEAMPREP_FORMAT";

struct RunConfig {
  Command command = Command::Moments;
  std::string prep;    // --prep, or --prep-a for compare/nosignal
  std::string prep_b;  // --prep-b
  int n = 1;
  std::int64_t beams = 100000;
  std::optional<std::uint64_t> seed;
  int trials = 100;
  int max_n = 10;
  int workers = 1;
  /// nosignal: expected verdict; a mismatch exits with 2.
  std::optional<bool> expect_pass;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> output_path;
};

OutputFormat parse_output_format(const std::string& name);
std::string command_name(Command c);

/// Parses argv; returns nullopt after printing help or a usage error, with
/// the exit code stored in `exit_code`.
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, int& exit_code, std::ostream& out,
                                            std::ostream& err);

/// Executes one command, writing to `output_path` or `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Formats the command's output without writing it anywhere; the exit code
/// the command would return is stored in `exit_code`.
std::string render(const RunConfig& config, int& exit_code);

}  // namespace beamprep
