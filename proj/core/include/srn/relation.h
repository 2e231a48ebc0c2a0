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

#ifndef SRN_RELATION_H_
#define SRN_RELATION_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "srn/mnist.h"
#include "srn/topology.h"

namespace srn {

using Rng = std::mt19937_64;

enum class Task { kAddition, kXor };

// One relation instance. Addition samples carry three numbers in [0, 1);
// XOR samples carry three image indices into a LabeledImageSet together with
// the labels of those images. Index 0, 1, 2 correspond to X, Y, Z.
struct RelationSample {
  Task kind = Task::kAddition;
  std::array<double, 3> values{};
  std::array<std::size_t, 3> image_index{};
  std::array<std::uint8_t, 3> labels{};
  Population direction = Population::kZ;
};

// gamma = alpha + beta - floor(alpha + beta).
double PeriodicSum(double alpha, double beta);

RelationSample MakeAddition(double alpha, double beta,
                            Population direction = Population::kZ);

// alpha, beta uniform in [0, 1).
RelationSample SampleAddition(Rng& rng);

// Draws XOR triples from a set containing both labels 0 and 1.
class XorSampler {
 public:
  explicit XorSampler(const LabeledImageSet& set);

  // Label pair uniform over {0,1}^2, third label their XOR, one uniformly
  // random image per label.
  RelationSample Sample(Rng& rng) const;
  RelationSample Sample(std::uint8_t label_x, std::uint8_t label_y,
                        Rng& rng) const;

 private:
  std::array<std::vector<std::size_t>, 2> by_label_;
};

RelationSample SampleXor(const LabeledImageSet& set, Rng& rng);

}  // namespace srn

#endif  // SRN_RELATION_H_
