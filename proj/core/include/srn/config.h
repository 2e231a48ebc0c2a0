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

#ifndef SRN_CONFIG_H_
#define SRN_CONFIG_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "srn/neuron.h"

namespace srn {

enum class UpdateMode { kAccumulated, kPerEvent };

std::string_view UpdateModeName(UpdateMode mode);

// Population sizes in the fixed order X, Y, Z, A, B, C, H.
using PopulationSizes = std::array<std::uint32_t, 7>;

struct SimulationConfig {
  double theta_ff = 1.0;
  double theta_bp = 1.0;
  double eta = 0.00005;
  double r_max = 0.12;
  std::int64_t t_expl = 100;
  std::int64_t t_bp = 10;
  double dt = 1.0;
  std::int64_t n_train = 10000;
  PopulationSizes sizes = {100, 100, 100, 256, 256, 256, 128};
  std::uint64_t seed = 1;
  double decay_factor = 0.97;
  std::int64_t decay_interval = 1000;
  UpdateMode update_mode = UpdateMode::kAccumulated;
  std::int64_t settle_steps = 0;

  friend bool operator==(const SimulationConfig&,
                         const SimulationConfig&) = default;
};

// Table I parameters with an IO population of 100 (number profiles).
SimulationConfig AdditionConfig();
// Table I parameters with an IO population of 784 (28x28 pixel rates).
SimulationConfig XorConfig();

// Throws kInvalidArgument when any invariant is violated.
void Validate(const SimulationConfig& config);

HyperParams HyperParamsFrom(const SimulationConfig& config);

// Number of simulation steps covering the presentation window.
std::int64_t PresentationSteps(const SimulationConfig& config);

// Key names accepted by ApplyOverride and the config file format.
const std::vector<std::string>& ConfigKeys();

// Sets one field from its text form. Unknown keys throw kUnknownKey; values
// that fail to parse throw kConfigParse.
void ApplyOverride(SimulationConfig& config, std::string_view key,
                   std::string_view value);

// Applies "key=value" lines. Blank lines and lines starting with '#' are
// skipped.
void ApplyConfigText(SimulationConfig& config, std::string_view text);

// One "key=value" line per field, in ConfigKeys() order, LF-terminated.
// Doubles are written with round-trip precision.
std::string ToConfigText(const SimulationConfig& config);

SimulationConfig LoadConfigFile(const std::string& path,
                                SimulationConfig base = SimulationConfig{});
void SaveConfigFile(const SimulationConfig& config, const std::string& path);

}  // namespace srn

#endif  // SRN_CONFIG_H_
