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

#ifndef SRN_CHECKPOINT_H_
#define SRN_CHECKPOINT_H_

// Binary checkpoint layout, all integers little-endian:
//
//   "SRN1"                      4 bytes magic
//   version                     u32 (kCheckpointVersion)
//   sizes X Y Z A B C H         7 x u32
//   weights X-A Y-B Z-C A-H B-H C-H
//                               row-major f64, shape (post, pre)
//   config length               u32 byte count
//   config                      UTF-8 key=value lines

#include <cstdint>
#include <string>
#include <vector>

#include "srn/config.h"
#include "srn/topology.h"

namespace srn {

inline constexpr char kCheckpointMagic[4] = {'S', 'R', 'N', '1'};
inline constexpr std::uint32_t kCheckpointVersion = 1;

struct Checkpoint {
  RelationalTopology topology;
  SimulationConfig config;
};

std::vector<std::uint8_t> SerializeCheckpoint(const RelationalTopology& topo,
                                              const SimulationConfig& config);

// Errors: kCorruptHeader (magic or header fields inconsistent),
// kVersionMismatch, kTruncated, kConfigParse/kUnknownKey for the config block.
Checkpoint ParseCheckpoint(const std::vector<std::uint8_t>& bytes);

void SaveCheckpoint(const RelationalTopology& topo,
                    const SimulationConfig& config, const std::string& path);
Checkpoint LoadCheckpoint(const std::string& path);

// kSizeMismatch unless the checkpoint's population sizes equal `expected`.
void RequireSizes(const Checkpoint& checkpoint, const PopulationSizes& expected);

}  // namespace srn

#endif  // SRN_CHECKPOINT_H_
