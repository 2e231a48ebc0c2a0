// Copyright 2026 The SRN Authors
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

#include "srn/config.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "srn/error.h"

namespace srn {

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void ParseFailure(std::string_view key, std::string_view value) {
  Fail(ErrorCode::kConfigParse, "config: cannot parse value '" +
                                    std::string(value) + "' for key '" +
                                    std::string(key) + "'");
}

double ParseDouble(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    ParseFailure(key, value);
  return out;
}

template <typename Int>
Int ParseInt(std::string_view key, std::string_view value) {
  Int out = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    ParseFailure(key, value);
  return out;
}

std::string FormatDouble(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

constexpr std::array<const char*, 7> kSizeKeys = {"n_x", "n_y", "n_z", "n_a",
                                                  "n_b", "n_c", "n_h"};

}  // namespace

std::string_view UpdateModeName(UpdateMode mode) {
  return mode == UpdateMode::kAccumulated ? "accumulated" : "per_event";
}

SimulationConfig AdditionConfig() { return SimulationConfig{}; }

SimulationConfig XorConfig() {
  SimulationConfig config;
  config.sizes = {784, 784, 784, 256, 256, 256, 128};
  return config;
}

void Validate(const SimulationConfig& c) {
  Validate(HyperParamsFrom(c));
  Require(c.r_max > 0 && c.r_max * c.dt <= 1.0, ErrorCode::kInvalidArgument,
          "config: r_max must be positive and at most one spike per step");
  Require(c.t_expl > 0, ErrorCode::kInvalidArgument,
          "config: t_expl must be positive");
  Require(c.t_bp >= 1, ErrorCode::kInvalidArgument, "config: t_bp must be >= 1");
  Require(c.n_train >= 0, ErrorCode::kInvalidArgument,
          "config: n_train must be non-negative");
  Require(c.decay_factor > 0 && c.decay_factor <= 1, ErrorCode::kInvalidArgument,
          "config: decay_factor must lie in (0, 1]");
  Require(c.decay_interval > 0, ErrorCode::kInvalidArgument,
          "config: decay_interval must be positive");
  Require(c.settle_steps >= 0, ErrorCode::kInvalidArgument,
          "config: settle_steps must be non-negative");
  for (auto n : c.sizes)
    Require(n > 0, ErrorCode::kInvalidArgument,
            "config: population sizes must be positive");
}

HyperParams HyperParamsFrom(const SimulationConfig& c) {
  return HyperParams{c.theta_ff, c.theta_bp, c.eta, c.dt};
}

std::int64_t PresentationSteps(const SimulationConfig& c) {
  return static_cast<std::int64_t>(std::llround(static_cast<double>(c.t_expl) / c.dt));
}

const std::vector<std::string>& ConfigKeys() {
  static const std::vector<std::string> keys = {
      "theta_ff", "theta_bp", "eta",  "r_max", "t_expl", "t_bp",
      "dt",       "n_train",  "n_x",  "n_y",   "n_z",    "n_a",
      "n_b",      "n_c",      "n_h",  "seed",  "decay_factor",
      "decay_interval", "update_mode", "settle_steps"};
  return keys;
}

void ApplyOverride(SimulationConfig& c, std::string_view key,
                   std::string_view raw) {
  const std::string_view value = Trim(raw);
  if (key == "theta_ff") c.theta_ff = ParseDouble(key, value);
  else if (key == "theta_bp") c.theta_bp = ParseDouble(key, value);
  else if (key == "eta") c.eta = ParseDouble(key, value);
  else if (key == "r_max") c.r_max = ParseDouble(key, value);
  else if (key == "t_expl") c.t_expl = ParseInt<std::int64_t>(key, value);
  else if (key == "t_bp") c.t_bp = ParseInt<std::int64_t>(key, value);
  else if (key == "dt") c.dt = ParseDouble(key, value);
  else if (key == "n_train") c.n_train = ParseInt<std::int64_t>(key, value);
  else if (key == "seed") c.seed = ParseInt<std::uint64_t>(key, value);
  else if (key == "decay_factor") c.decay_factor = ParseDouble(key, value);
  else if (key == "decay_interval")
    c.decay_interval = ParseInt<std::int64_t>(key, value);
  else if (key == "settle_steps")
    c.settle_steps = ParseInt<std::int64_t>(key, value);
  else if (key == "update_mode") {
    if (value == "accumulated") c.update_mode = UpdateMode::kAccumulated;
    else if (value == "per_event") c.update_mode = UpdateMode::kPerEvent;
    else ParseFailure(key, value);
  } else {
    for (std::size_t k = 0; k < kSizeKeys.size(); ++k) {
      if (key == kSizeKeys[k]) {
        c.sizes[k] = ParseInt<std::uint32_t>(key, value);
        return;
      }
    }
    Fail(ErrorCode::kUnknownKey,
         "config: unknown key '" + std::string(key) + "'");
  }
}

void ApplyConfigText(SimulationConfig& config, std::string_view text) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = Trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      Fail(ErrorCode::kConfigParse,
           "config: line " + std::to_string(line_no) + " is not key=value");
    ApplyOverride(config, Trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

std::string ToConfigText(const SimulationConfig& c) {
  std::ostringstream out;
  out << "theta_ff=" << FormatDouble(c.theta_ff) << '\n'
      << "theta_bp=" << FormatDouble(c.theta_bp) << '\n'
      << "eta=" << FormatDouble(c.eta) << '\n'
      << "r_max=" << FormatDouble(c.r_max) << '\n'
      << "t_expl=" << c.t_expl << '\n'
      << "t_bp=" << c.t_bp << '\n'
      << "dt=" << FormatDouble(c.dt) << '\n'
      << "n_train=" << c.n_train << '\n';
  for (std::size_t k = 0; k < kSizeKeys.size(); ++k)
    out << kSizeKeys[k] << '=' << c.sizes[k] << '\n';
  out << "seed=" << c.seed << '\n'
      << "decay_factor=" << FormatDouble(c.decay_factor) << '\n'
      << "decay_interval=" << c.decay_interval << '\n'
      << "update_mode=" << UpdateModeName(c.update_mode) << '\n'
      << "settle_steps=" << c.settle_steps << '\n';
  return out.str();
}

SimulationConfig LoadConfigFile(const std::string& path, SimulationConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "config: cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  ApplyConfigText(base, buffer.str());
  return base;
}

void SaveConfigFile(const SimulationConfig& config, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorCode::kIo, "config: cannot write " + path);
  out << ToConfigText(config);
}

}  // namespace srn
