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

#include "beamprep/preparation_text.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "gtest/gtest.h"

using namespace beamprep;

namespace {

using Ax = Axis<double>;

std::size_t error_position(std::string_view text) {
  try {
    parse_preparation(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no ParseError for '" << text << "'";
  return std::string_view::npos;
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST(ParsePreparation, examples) {
  EXPECT_EQ(parse_preparation("random:z"), Preparation<double>(RandomMixture<double>{Ax::z()}));
  EXPECT_EQ(parse_preparation("alternating:x"), Preparation<double>(AlternatingCorrelated<double>{Ax::x()}));
  EXPECT_EQ(parse_preparation("fixedm:x:3"), Preparation<double>(FixedMagnetization<double>{Ax::x(), 3}));
  EXPECT_EQ(parse_preparation("random:bloch(1.5,-0.25)"),
            Preparation<double>(RandomMixture<double>{Ax::bloch(1.5, -0.25)}));
}

TEST(ParsePreparation, error_positions) {
  EXPECT_EQ(error_position("mixed:z"), 0U);
  EXPECT_EQ(error_position("random:y"), 7U);
  EXPECT_EQ(error_position("random:zz"), 8U);
  EXPECT_EQ(error_position("fixedm:z"), 8U);
  EXPECT_EQ(error_position("fixedm:z:"), 9U);
  EXPECT_EQ(error_position("fixedm:z:-1"), 9U);
  EXPECT_EQ(error_position("random:bloch(1,"), 15U);
  EXPECT_EQ(error_position("random:bloch(1,2"), 16U);
  EXPECT_EQ(error_position("explicit:@"), 10U);
  EXPECT_EQ(error_position(""), 0U);
}

TEST(ParsePreparation, magnetization_is_checked_against_length) {
  const auto prep = parse_preparation("fixedm:z:5");
  EXPECT_THROW(EnsembleSpec<double>(prep, 4), ValidationError);
  EXPECT_NO_THROW(EnsembleSpec<double>(prep, 5));
}

TEST(FormatPreparation, round_trip) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> angle(-7.0, 7.0);
  for (int i = 0; i < 200; ++i) {
    const Ax axis = i % 3 == 0 ? Ax::z() : i % 3 == 1 ? Ax::x() : Ax::bloch(angle(gen), angle(gen));
    const std::vector<Preparation<double>> preps{RandomMixture<double>{axis}, AlternatingCorrelated<double>{axis},
                                                 FixedMagnetization<double>{axis, i % 9}};
    for (const auto& p : preps) {
      const auto text = format_preparation(p);
      EXPECT_EQ(parse_preparation(text), p) << text;
      EXPECT_EQ(format_preparation(parse_preparation(text)), text);
    }
  }
}

TEST(ExplicitMixture, file_round_trip) {
  const auto path = temp_file("beamprep_mix_test.json",
                              R"({"terms":[{"weight":0.25,"states":[[1,0,0,0],[0,0,1,0]]},)"
                              R"({"weight":0.75,"states":[[0.6,0,0,0.8],[1,0,0,0]]}]})");
  const std::string text = "explicit:@" + path.string();
  const auto prep = parse_preparation(text);
  const auto& mix = std::get<ExplicitMixture<double>>(prep);
  ASSERT_EQ(mix.terms().size(), 2U);
  EXPECT_EQ(mix.terms()[0].weight, 0.25);
  EXPECT_EQ(mix.source(), path.string());
  EXPECT_EQ(format_preparation(prep), text);
  EXPECT_EQ(parse_preparation(format_preparation(prep)), prep);
  EXPECT_NO_THROW(EnsembleSpec<double>(prep, 2));
  EXPECT_THROW(EnsembleSpec<double>(prep, 3), ValidationError);
  std::filesystem::remove(path);
}

TEST(ExplicitMixture, json_errors) {
  EXPECT_THROW(parse_explicit_mixture("{\"terms\": [", "x"), ParseError);
  EXPECT_THROW(parse_explicit_mixture("[]", "x"), ValidationError);
  EXPECT_THROW(parse_explicit_mixture(R"({"terms":[{"weight":1}]})", "x"), ValidationError);
  EXPECT_THROW(parse_explicit_mixture(R"({"terms":[{"weight":1,"states":[[1,0,0]]}]})", "x"), ValidationError);
  // Weights must sum to one; states must be normalized.
  EXPECT_THROW(parse_explicit_mixture(R"({"terms":[{"weight":0.5,"states":[[1,0,0,0]]}]})", "x"), ValidationError);
  EXPECT_THROW(parse_explicit_mixture(R"({"terms":[{"weight":1,"states":[[1,0,1,0]]}]})", "x"), ValidationError);
  EXPECT_THROW(parse_preparation("explicit:@/nonexistent/beamprep.json"), ValidationError);
  EXPECT_THROW(format_preparation(parse_explicit_mixture(R"({"terms":[{"weight":1,"states":[[1,0,0,0]]}]})")),
               ValidationError);
}
