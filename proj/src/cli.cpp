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

#include "beamprep/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "beamprep/claims.hpp"
#include "beamprep/ensembles.hpp"
#include "beamprep/output.hpp"
#include "beamprep/preparation_text.hpp"
#include "beamprep/sampling.hpp"
#include "beamprep/statistics.hpp"

namespace beamprep {
namespace {

using Json = nlohmann::ordered_json;

/// Trace distances below this count as "same density operator".
constexpr double kIndistinguishable = 1e-10;

std::string pretty_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

Json envelope(const RunConfig& config, Json inputs, Json results) {
  Json doc;
  doc["command"] = command_name(config.command);
  doc["inputs"] = std::move(inputs);
  doc["results"] = std::move(results);
  doc["library_version"] = std::string(kLibraryVersion);
  return doc;
}

Json complex_json(const Complex<double>& z) { return Json::array({z.real(), z.imag()}); }

Json moments_json(const MomentReport<double>& m) {
  Json j;
  j["mean"] = m.mean;
  j["second_moment"] = m.second_moment;
  j["dispersion"] = m.dispersion;
  return j;
}

NOperator<double> sigma_z(int n) { return collective_observable(pauli_z<double>(), n); }

// ---------------------------------------------------------------------------

std::string render_density(const RunConfig& c) {
  const auto prep = parse_preparation(c.prep);
  const auto rho = density_matrix(EnsembleSpec<double>(prep, c.n));
  const double purity = trace_of_product(rho, rho).real();
  const auto dim = rho.dimension();

  switch (c.format) {
    case OutputFormat::Json: {
      Json results;
      results["n"] = c.n;
      results["structure"] = rho.is_diagonal() ? "diagonal" : "dense";
      results["trace"] = rho.trace().real();
      results["purity"] = purity;
      if (rho.is_diagonal()) {
        Json diag = Json::array();
        for (Eigen::Index i = 0; i < dim; ++i) diag.push_back(complex_json(rho.diagonal_entries()[i]));
        results["diagonal"] = std::move(diag);
      } else {
        Json rows = Json::array();
        for (Eigen::Index i = 0; i < dim; ++i) {
          Json row = Json::array();
          for (Eigen::Index j = 0; j < dim; ++j) row.push_back(complex_json(rho.coeff(i, j)));
          rows.push_back(std::move(row));
        }
        results["entries"] = std::move(rows);
      }
      return dump_json(envelope(c, Json{{"prep", c.prep}, {"n", c.n}}, std::move(results)));
    }
    case OutputFormat::Csv: {
      std::string out = csv_line({"row", "col", "re", "im"});
      for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
          if (rho.is_diagonal() && i != j) continue;
          const auto z = rho.coeff(i, j);
          if (z == Complex<double>(0)) continue;
          out += csv_line({std::to_string(i), std::to_string(j), format_double(z.real()), format_double(z.imag())});
        }
      }
      return out;
    }
    case OutputFormat::Pretty: {
      std::ostringstream os;
      os << "density operator of " << c.prep << " at n = " << c.n << " ("
         << (rho.is_diagonal() ? "diagonal" : "dense") << ", purity " << pretty_number(purity) << ")\n";
      for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
          if (rho.is_diagonal() && i != j) continue;
          const auto z = rho.coeff(i, j);
          if (std::abs(z) < kTolerance<double>) continue;
          os << "  [" << i << "," << j << "]  " << pretty_number(z.real());
          if (z.imag() != 0.0) os << (z.imag() < 0 ? " - " : " + ") << pretty_number(std::abs(z.imag())) << "i";
          os << "\n";
        }
      }
      return os.str();
    }
  }
  return {};
}

std::string render_moments(const RunConfig& c) {
  const auto prep = parse_preparation(c.prep);
  const auto m = moments(density_matrix(EnsembleSpec<double>(prep, c.n)), sigma_z(c.n));
  switch (c.format) {
    case OutputFormat::Json: {
      Json results{{"observable", "sigma_z"}, {"mean", m.mean}, {"second_moment", m.second_moment},
                   {"dispersion", m.dispersion}};
      return dump_json(envelope(c, Json{{"prep", c.prep}, {"n", c.n}}, std::move(results)));
    }
    case OutputFormat::Csv:
      return csv_line({"prep", "n", "mean", "second_moment", "dispersion"}) +
             csv_line({c.prep, std::to_string(c.n), format_double(m.mean), format_double(m.second_moment),
                       format_double(m.dispersion)});
    case OutputFormat::Pretty: {
      std::ostringstream os;
      os << "Sigma_z statistics of " << c.prep << " at n = " << c.n << "\n"
         << "  mean           " << pretty_number(m.mean) << "\n"
         << "  second moment  " << pretty_number(m.second_moment) << "\n"
         << "  dispersion     " << pretty_number(m.dispersion) << "\n";
      return os.str();
    }
  }
  return {};
}

std::string render_compare(const RunConfig& c) {
  const auto rho_a = density_matrix(EnsembleSpec<double>(parse_preparation(c.prep), c.n));
  const auto rho_b = density_matrix(EnsembleSpec<double>(parse_preparation(c.prep_b), c.n));
  const double td = trace_distance(rho_a, rho_b);
  const bool distinguishable = td >= kIndistinguishable;
  const auto obs = sigma_z(c.n);
  const auto ma = moments(rho_a, obs);
  const auto mb = moments(rho_b, obs);
  switch (c.format) {
    case OutputFormat::Json: {
      Json results{{"trace_distance", td},
                   {"distinguishable", distinguishable},
                   {"sigma_z_a", moments_json(ma)},
                   {"sigma_z_b", moments_json(mb)}};
      return dump_json(
          envelope(c, Json{{"prep_a", c.prep}, {"prep_b", c.prep_b}, {"n", c.n}}, std::move(results)));
    }
    case OutputFormat::Csv:
      return csv_line({"prep_a", "prep_b", "n", "trace_distance", "distinguishable", "dispersion_a",
                       "dispersion_b"}) +
             csv_line({c.prep, c.prep_b, std::to_string(c.n), format_double(td), distinguishable ? "true" : "false",
                       format_double(ma.dispersion), format_double(mb.dispersion)});
    case OutputFormat::Pretty: {
      std::ostringstream os;
      os << c.prep << " vs " << c.prep_b << " at n = " << c.n << "\n"
         << "  trace distance   " << pretty_number(td) << "\n"
         << "  distinguishable  " << (distinguishable ? "yes" : "no") << "\n"
         << "  dispersion a     " << pretty_number(ma.dispersion) << "\n"
         << "  dispersion b     " << pretty_number(mb.dispersion) << "\n";
      return os.str();
    }
  }
  return {};
}

std::string render_sample(const RunConfig& c) {
  const auto prep = parse_preparation(c.prep);
  const auto report = empirical_moments(prep, c.n, c.beams, *c.seed, c.workers);
  std::optional<double> exact;
  if (c.n <= kDenseCap) exact = moments(density_matrix(EnsembleSpec<double>(prep, c.n)), sigma_z(c.n)).dispersion;
  std::optional<double> z_score;
  if (exact && report.standard_error_dispersion > 0) {
    z_score = (report.dispersion - *exact) / report.standard_error_dispersion;
  }
  switch (c.format) {
    case OutputFormat::Json: {
      Json results{{"beams", report.beams},
                   {"mean", report.mean},
                   {"dispersion", report.dispersion},
                   {"standard_error_mean", report.standard_error_mean},
                   {"standard_error_dispersion", report.standard_error_dispersion}};
      results["exact_dispersion"] = exact ? Json(*exact) : Json(nullptr);
      results["dispersion_z_score"] = z_score ? Json(*z_score) : Json(nullptr);
      return dump_json(envelope(
          c, Json{{"prep", c.prep}, {"n", c.n}, {"beams", c.beams}, {"seed", *c.seed}}, std::move(results)));
    }
    case OutputFormat::Csv:
      return csv_line({"prep", "n", "beams", "seed", "mean", "dispersion", "standard_error_mean",
                       "standard_error_dispersion", "exact_dispersion"}) +
             csv_line({c.prep, std::to_string(c.n), std::to_string(report.beams), std::to_string(*c.seed),
                       format_double(report.mean), format_double(report.dispersion),
                       format_double(report.standard_error_mean), format_double(report.standard_error_dispersion),
                       exact ? format_double(*exact) : ""});
    case OutputFormat::Pretty: {
      std::ostringstream os;
      os << "sampled " << report.beams << " beams of " << c.prep << " at n = " << c.n << " (seed " << *c.seed
         << ")\n"
         << "  mean        " << pretty_number(report.mean) << " +/- " << pretty_number(report.standard_error_mean)
         << "\n"
         << "  dispersion  " << pretty_number(report.dispersion) << " +/- "
         << pretty_number(report.standard_error_dispersion) << "\n";
      if (exact) os << "  exact       " << pretty_number(*exact) << "\n";
      return os.str();
    }
  }
  return {};
}

std::string render_reproduce(const RunConfig& c, int& exit_code) {
  const auto rows = reproduce_all(c.max_n);
  double max_error = 0;
  for (const auto& r : rows) max_error = std::max(max_error, r.abs_error);
  const bool passed = max_error <= kClaimTolerance;
  exit_code = passed ? kExitOk : kExitAcceptanceFailure;
  switch (c.format) {
    case OutputFormat::Json: {
      Json table = Json::array();
      for (const auto& r : rows) {
        table.push_back(Json{{"claim_id", r.claim_id},
                             {"n", r.n},
                             {"method", r.method},
                             {"quantity", r.quantity},
                             {"paper_value", r.paper_value},
                             {"paper_form", r.paper_form},
                             {"computed_value", r.computed_value},
                             {"abs_error", r.abs_error},
                             {"source", r.source}});
      }
      Json results{{"row_count", rows.size()},
                   {"tolerance", kClaimTolerance},
                   {"max_abs_error", max_error},
                   {"passed", passed},
                   {"rows", std::move(table)}};
      return dump_json(envelope(c, Json{{"max_n", c.max_n}}, std::move(results)));
    }
    case OutputFormat::Csv: {
      std::string out = csv_line(
          {"claim_id", "n", "method", "quantity", "paper_value", "computed_value", "abs_error", "source"});
      for (const auto& r : rows) {
        out += csv_line({r.claim_id, std::to_string(r.n), r.method, r.quantity, format_double(r.paper_value),
                         format_double(r.computed_value), format_double(r.abs_error), r.source});
      }
      return out;
    }
    case OutputFormat::Pretty: {
      std::ostringstream os;
      os << pad_right("claim", 34) << pad_right("n", 4) << pad_right("method", 9) << pad_right("quantity", 18)
         << pad_right("expected", 24) << pad_right("computed", 20) << "abs_error\n";
      for (const auto& r : rows) {
        std::string expected = r.paper_form;
        if (r.paper_form.starts_with("sqrt(") || r.paper_form.find('/') != std::string::npos) {
          expected += " = " + pretty_number(r.paper_value);
        }
        os << pad_right(r.claim_id, 34) << pad_right(std::to_string(r.n), 4) << pad_right(r.method, 9)
           << pad_right(r.quantity, 18) << pad_right(expected, 24) << pad_right(pretty_number(r.computed_value), 20)
           << pretty_number(r.abs_error) << "\n";
      }
      os << rows.size() << " rows, max abs error " << pretty_number(max_error) << " ("
         << (passed ? "PASS" : "FAIL") << " at tolerance " << pretty_number(kClaimTolerance) << ")\n";
      return os.str();
    }
  }
  return {};
}

std::string render_nosignal(const RunConfig& c, int& exit_code) {
  const auto rho_a = density_matrix(EnsembleSpec<double>(parse_preparation(c.prep), c.n));
  const auto rho_b = density_matrix(EnsembleSpec<double>(parse_preparation(c.prep_b), c.n));
  const auto report = no_signaling_check(rho_a, rho_b, c.trials, *c.seed);
  const double td = trace_distance(rho_a, rho_b);
  const bool consistent = report.passed == (td < kIndistinguishable);
  const bool as_expected = !c.expect_pass || *c.expect_pass == report.passed;
  exit_code = consistent && as_expected ? kExitOk : kExitAcceptanceFailure;
  switch (c.format) {
    case OutputFormat::Json: {
      Json results{{"trials", report.trials},
                   {"max_deviation", report.max_deviation},
                   {"max_relative_deviation", report.max_relative_deviation},
                   {"worst_trial", report.worst_trial},
                   {"passed", report.passed},
                   {"trace_distance", td},
                   {"consistent_with_trace_distance", consistent}};
      if (c.expect_pass) results["expected_pass"] = *c.expect_pass;
      return dump_json(envelope(c,
                                Json{{"prep_a", c.prep},
                                     {"prep_b", c.prep_b},
                                     {"n", c.n},
                                     {"trials", c.trials},
                                     {"seed", *c.seed}},
                                std::move(results)));
    }
    case OutputFormat::Csv:
      return csv_line({"prep_a", "prep_b", "n", "trials", "seed", "max_deviation", "max_relative_deviation",
                       "passed", "trace_distance"}) +
             csv_line({c.prep, c.prep_b, std::to_string(c.n), std::to_string(c.trials), std::to_string(*c.seed),
                       format_double(report.max_deviation), format_double(report.max_relative_deviation),
                       report.passed ? "true" : "false", format_double(td)});
    case OutputFormat::Pretty: {
      std::ostringstream os;
      os << "no-signaling check: " << c.prep << " vs " << c.prep_b << " at n = " << c.n << ", " << report.trials
         << " random observables (seed " << *c.seed << ")\n"
         << "  max |<A>_a - <A>_b|   " << pretty_number(report.max_deviation) << "\n"
         << "  max relative          " << pretty_number(report.max_relative_deviation) << "\n"
         << "  trace distance        " << pretty_number(td) << "\n"
         << "  verdict               " << (report.passed ? "indistinguishable" : "distinguishable") << "\n";
      return os.str();
    }
  }
  return {};
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "pretty") return OutputFormat::Pretty;
  throw ValidationError("unknown output format '" + name + "' (expected json, csv or pretty)");
}

std::string command_name(Command c) {
  switch (c) {
    case Command::Density: return "density";
    case Command::Moments: return "moments";
    case Command::Compare: return "compare";
    case Command::Sample: return "sample";
    case Command::Reproduce: return "reproduce";
    case Command::NoSignal: return "nosignal";
  }
  return "?";
}

std::string render(const RunConfig& config, int& exit_code) {
  exit_code = kExitOk;
  if (config.command == Command::Sample || config.command == Command::NoSignal) {
    if (!config.seed) throw ValidationError(command_name(config.command) + " requires --seed");
  }
  switch (config.command) {
    case Command::Density: return render_density(config);
    case Command::Moments: return render_moments(config);
    case Command::Compare: return render_compare(config);
    case Command::Sample: return render_sample(config);
    case Command::Reproduce: return render_reproduce(config, exit_code);
    case Command::NoSignal: return render_nosignal(config, exit_code);
  }
  return {};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  int exit_code = kExitOk;
  std::string text;
  try {
    text = render(config, exit_code);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text) || !file.flush()) {
      err << "error: cannot write output file '" << *config.output_path << "'\n";
      return kExitInvalid;
    }
  } else {
    out << text;
  }
  return exit_code;
}

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, int& exit_code, std::ostream& out,
                                            std::ostream& err) {
  CLI::App app{"Exact and sampled statistics of spin-1/2 beam preparations", "beamprep"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kLibraryVersion));

  RunConfig config;
  std::string format_name;
  std::string output_path;
  std::string expect;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format: json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("-o,--output", output_path, "Write output to this file instead of stdout");
  };
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "Beam length (particles per beam)")->required()->check(CLI::Range(1, 64));
  };

  auto* density = app.add_subcommand("density", "Print the density operator of a preparation");
  density->add_option("--prep", config.prep, "Preparation, e.g. random:z")->required();
  add_n(density);
  add_common(density);

  auto* moments_cmd = app.add_subcommand("moments", "Exact mean and dispersion of Sigma_z");
  moments_cmd->add_option("--prep", config.prep, "Preparation")->required();
  add_n(moments_cmd);
  add_common(moments_cmd);

  auto* compare = app.add_subcommand("compare", "Trace distance between two preparations");
  compare->add_option("--prep-a", config.prep, "First preparation")->required();
  compare->add_option("--prep-b", config.prep_b, "Second preparation")->required();
  add_n(compare);
  add_common(compare);

  auto* sample = app.add_subcommand("sample", "Monte Carlo estimate of the Sigma_z dispersion");
  sample->add_option("--prep", config.prep, "Preparation")->required();
  add_n(sample);
  sample->add_option("--beams", config.beams, "Number of sampled beams")->check(CLI::Range(2L, 1000000000L));
  sample->add_option("--seed", seed, "Generator seed")->required();
  sample->add_option("--workers", config.workers, "Worker threads")->check(CLI::Range(1, 256));
  add_common(sample);

  auto* reproduce = app.add_subcommand("reproduce", "Regenerate the claim table");
  reproduce->add_option("--max-n", config.max_n, "Largest beam length")->check(CLI::Range(1, kDenseCap));
  add_common(reproduce);

  auto* nosignal = app.add_subcommand("nosignal", "Compare two preparations on random observables");
  nosignal->add_option("--prep-a", config.prep, "First preparation")->required();
  nosignal->add_option("--prep-b", config.prep_b, "Second preparation")->required();
  add_n(nosignal);
  nosignal->add_option("--trials", config.trials, "Number of random observables")->check(CLI::Range(1, 1000000));
  nosignal->add_option("--seed", seed, "Generator seed")->required();
  nosignal->add_option("--expect", expect, "Expected verdict")->check(CLI::IsMember({"pass", "fail"}));
  add_common(nosignal);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    exit_code = code == 0 ? kExitOk : kExitInvalid;
    return std::nullopt;
  }

  const std::pair<CLI::App*, Command> commands[] = {
      {density, Command::Density}, {moments_cmd, Command::Moments}, {compare, Command::Compare},
      {sample, Command::Sample},   {reproduce, Command::Reproduce}, {nosignal, Command::NoSignal}};
  for (const auto& [sub, cmd] : commands) {
    if (sub->parsed()) config.command = cmd;
  }
  if (config.command == Command::Sample || config.command == Command::NoSignal) config.seed = seed;
  if (!expect.empty()) config.expect_pass = expect == "pass";
  if (!output_path.empty()) config.output_path = output_path;

  try {
    if (!format_name.empty()) {
      config.format = parse_output_format(format_name);
    } else if (const char* env = std::getenv(kFormatEnvVar); env != nullptr && *env != '\0') {
      config.format = parse_output_format(env);
    }
  } catch (const ValidationError& e) {
    err << "error: " << kFormatEnvVar << ": " << e.what() << "\n";
    exit_code = kExitInvalid;
    return std::nullopt;
  }
  exit_code = kExitOk;
  return config;
}

}  // namespace beamprep
