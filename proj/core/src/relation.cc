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

#include "srn/relation.h"

#include <cmath>

#include "srn/error.h"

namespace srn {

double PeriodicSum(double alpha, double beta) {
  const double s = alpha + beta;
  return s - std::floor(s);
}

RelationSample MakeAddition(double alpha, double beta, Population direction) {
  RelationSample s;
  s.kind = Task::kAddition;
  s.values = {alpha, beta, PeriodicSum(alpha, beta)};
  s.direction = direction;
  return s;
}

RelationSample SampleAddition(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double alpha = unit(rng);
  const double beta = unit(rng);
  return MakeAddition(alpha, beta);
}

XorSampler::XorSampler(const LabeledImageSet& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    if (set.label(i) <= 1) by_label_[set.label(i)].push_back(i);
  Require(!by_label_[0].empty() && !by_label_[1].empty(),
          ErrorCode::kInvalidArgument,
          "xor sampler: set must contain both labels 0 and 1");
}

RelationSample XorSampler::Sample(Rng& rng) const {
  std::uniform_int_distribution<int> bit(0, 1);
  const auto a = static_cast<std::uint8_t>(bit(rng));
  const auto b = static_cast<std::uint8_t>(bit(rng));
  return Sample(a, b, rng);
}

RelationSample XorSampler::Sample(std::uint8_t label_x, std::uint8_t label_y,
                                  Rng& rng) const {
  Require(label_x <= 1 && label_y <= 1, ErrorCode::kInvalidArgument,
          "xor sampler: labels must be 0 or 1");
  RelationSample s;
  s.kind = Task::kXor;
  s.labels = {label_x, label_y, static_cast<std::uint8_t>(label_x ^ label_y)};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& pool = by_label_[s.labels[k]];
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    s.image_index[k] = pool[pick(rng)];
    s.values[k] = s.labels[k];
  }
  return s;
}

RelationSample SampleXor(const LabeledImageSet& set, Rng& rng) {
  return XorSampler(set).Sample(rng);
}

}  // namespace srn
