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

#ifndef SRN_TRAINER_H_
#define SRN_TRAINER_H_

// Example presentation (forward phase, loss, output error spikes, backward
// phase, weight update), the training loop with inference-direction rotation
// and learning-rate decay, and evaluation of both relational tasks.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "srn/codec.h"
#include "srn/config.h"
#include "srn/mnist.h"
#include "srn/relation.h"
#include "srn/topology.h"

namespace srn {

// Output activity in spike-count units, y_i = x_i / eta + V_i, against the
// integer target spike counts t_i.
struct LossReadout {
  std::vector<double> y;
  std::vector<double> t;
};

LossReadout ReadOutput(const PopulationState& output,
                       std::span<const std::int32_t> target_counts);

// sum_i 0.5 * (y_i - t_i)^2.
double SquaredLoss(const LossReadout& readout);

// U_i = y_i - t_i on the inferring population.
void InjectOutputError(PopulationState& output, const LossReadout& readout);

// The inferring population discretizes its error integrator into at most one
// ungated spike per neuron per step. Returns the number of spikes emitted.
std::int64_t EmitOutputErrorSpikes(PopulationState& output,
                                   const HyperParams& hp,
                                   std::span<std::int8_t> out);

// Encoder rates of variable k (0 = X, 1 = Y, 2 = Z) of a sample. XOR samples
// need the image set the indices refer to.
RateVector StimulusRates(const RelationSample& sample, std::size_t k,
                         const SimulationConfig& config,
                         const LabeledImageSet* images);

// Runs one supervised example: reset, t_expl forward steps with the two input
// populations driven by their encoders, loss readout, t_bp backward steps,
// weight update. Uses topo.hp for thresholds and the current eta. Returns the
// loss.
double PresentExample(RelationalTopology& topo, const RelationSample& sample,
                      const SimulationConfig& config,
                      const LabeledImageSet* images = nullptr);

// Forward phase only (plus config.settle_steps silent steps). Returns the
// target population's net spike counts.
std::vector<double> Infer(RelationalTopology& topo, Population target,
                          const RateVector& first_input,
                          const RateVector& second_input,
                          const SimulationConfig& config);

// Inference direction used for training sample k: Z, X, Y, Z, X, ...
Population DirectionForSample(std::int64_t k);

struct TrainingLog {
  std::vector<double> loss;
  std::vector<Population> direction;
  std::vector<double> eta;

  void WriteCsv(std::ostream& out) const;
};

struct TrainOptions {
  // Called after every sample with (index, loss); may be empty.
  std::function<void(std::int64_t, double)> progress;
};

// Presents config.n_train samples; eta is multiplied by decay_factor after
// every decay_interval samples. `images` is the training set for Task::kXor
// and ignored for addition.
TrainingLog Train(RelationalTopology& topo, Task task,
                  const SimulationConfig& config,
                  const LabeledImageSet* images = nullptr,
                  const TrainOptions& options = {});

struct AdditionEvalRow {
  Population direction;
  double u, v;
  double target;
  double inferred;  // NaN when the output was silent
  double periodic_error;
};

struct AdditionEval {
  std::array<double, 3> rmse{};  // indexed X, Y, Z
  double average_rmse = 0.0;
  std::int64_t undecodable = 0;
  std::vector<AdditionEvalRow> rows;

  void WriteCsv(std::ostream& out) const;
};

// For each direction, the two known variables take the values (u, v) on a
// grid_n x grid_n grid over [0, 1)^2 (in X, Y, Z order of the known ones) and
// the third is inferred. A silent output counts as error 0.5.
AdditionEval EvalAddition(const RelationalTopology& topo, int grid_n,
                          const SimulationConfig& config);

// Nearest-centroid classifier over the mean images of digits 0 and 1.
class CentroidClassifier {
 public:
  explicit CentroidClassifier(const LabeledImageSet& binary_set);
  std::uint8_t Classify(std::span<const double> pixels) const;
  const std::array<std::vector<double>, 2>& centroids() const {
    return centroids_;
  }

 private:
  std::array<std::vector<double>, 2> centroids_;
};

struct XorEval {
  double accuracy = 0.0;
  std::array<double, 3> direction_accuracy{};
  std::int64_t trials = 0;
};

// Runs n_trials inferences on random test triples with rotating directions
// and classifies the decoded image of the inferred variable.
XorEval EvalXor(const RelationalTopology& topo, const LabeledImageSet& test,
                int n_trials, const SimulationConfig& config,
                std::uint64_t seed);

}  // namespace srn

#endif  // SRN_TRAINER_H_
