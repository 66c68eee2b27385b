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

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace beamprep {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t position() const { return pos_; }
  bool done() const { return pos_ == text_.size(); }

  bool consume(std::string_view token) {
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!consume(token)) throw ParseError(pos_, "expected '" + std::string(token) + "'");
  }

  double number() {
    double v = 0;
    const char* begin = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), v);
    if (ec != std::errc() || ptr == begin) throw ParseError(pos_, "expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  int integer() {
    int v = 0;
    const char* begin = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), v);
    if (ec != std::errc() || ptr == begin) throw ParseError(pos_, "expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  std::string_view rest() const { return text_.substr(pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Axis<double> parse_axis(Cursor& c) {
  if (c.consume("bloch(")) {
    const double polar = c.number();
    c.expect(",");
    const double azimuth = c.number();
    c.expect(")");
    return Axis<double>::bloch(polar, azimuth);
  }
  if (c.consume("z")) return Axis<double>::z();
  if (c.consume("x")) return Axis<double>::x();
  throw ParseError(c.position(), "expected an axis: z, x or bloch(<polar>,<azimuth>)");
}

void expect_end(const Cursor& c) {
  if (!c.done()) throw ParseError(c.position(), "unexpected trailing text '" + std::string(c.rest()) + "'");
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Preparation<double> parse_preparation(std::string_view text) {
  Cursor c(text);
  if (c.consume("random:")) {
    const auto axis = parse_axis(c);
    expect_end(c);
    return RandomMixture<double>{axis};
  }
  if (c.consume("alternating:")) {
    const auto axis = parse_axis(c);
    expect_end(c);
    return AlternatingCorrelated<double>{axis};
  }
  if (c.consume("fixedm:")) {
    const auto axis = parse_axis(c);
    c.expect(":");
    const std::size_t at = c.position();
    const int m = c.integer();
    expect_end(c);
    if (m < 0) throw ParseError(at, "up count m must be >= 0");
    return FixedMagnetization<double>{axis, m};
  }
  if (c.consume("explicit:@")) {
    if (c.done()) throw ParseError(c.position(), "expected a file path after '@'");
    return read_explicit_mixture(std::string(c.rest()));
  }
  throw ParseError(0, "expected one of random:, fixedm:, alternating:, explicit:@");
}

std::string format_axis(const Axis<double>& axis) {
  switch (axis.kind) {
    case Axis<double>::Kind::Z: return "z";
    case Axis<double>::Kind::X: return "x";
    case Axis<double>::Kind::Bloch:
      return "bloch(" + format_number(axis.polar) + "," + format_number(axis.azimuth) + ")";
  }
  return "z";
}

std::string format_preparation(const Preparation<double>& prep) {
  if (const auto* r = std::get_if<RandomMixture<double>>(&prep)) return "random:" + format_axis(r->axis);
  if (const auto* f = std::get_if<FixedMagnetization<double>>(&prep)) {
    return "fixedm:" + format_axis(f->axis) + ":" + std::to_string(f->up_count);
  }
  if (const auto* a = std::get_if<AlternatingCorrelated<double>>(&prep)) return "alternating:" + format_axis(a->axis);
  const auto& e = std::get<ExplicitMixture<double>>(prep);
  if (e.source().empty()) throw ValidationError("format_preparation: explicit mixture has no source file");
  return "explicit:@" + e.source();
}

ExplicitMixture<double> parse_explicit_mixture(std::string_view json_text, std::string source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, std::string("explicit mixture JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
    throw ValidationError("explicit mixture JSON: expected an object with a \"terms\" array");
  }
  std::vector<MixtureTerm<double>> terms;
  for (const auto& t : doc["terms"]) {
    if (!t.is_object() || !t.contains("weight") || !t.contains("states") || !t["weight"].is_number() ||
        !t["states"].is_array()) {
      throw ValidationError("explicit mixture JSON: each term needs a numeric \"weight\" and a \"states\" array");
    }
    MixtureTerm<double> term{t["weight"].get<double>(), {}};
    for (const auto& s : t["states"]) {
      if (!s.is_array() || s.size() != 4) {
        throw ValidationError("explicit mixture JSON: each state must be [re0, im0, re1, im1]");
      }
      for (const auto& x : s) {
        if (!x.is_number()) throw ValidationError("explicit mixture JSON: non-numeric amplitude");
      }
      term.states.emplace_back(Complex<double>(s[0].get<double>(), s[1].get<double>()),
                               Complex<double>(s[2].get<double>(), s[3].get<double>()));
    }
    terms.push_back(std::move(term));
  }
  return ExplicitMixture<double>(std::move(terms), std::move(source));
}

ExplicitMixture<double> read_explicit_mixture(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open explicit mixture file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_explicit_mixture(buf.str(), path);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace beamprep
