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

#ifndef SRN_ORACLE_H_
#define SRN_ORACLE_H_

// Full-precision ReLU reference network. It mirrors the enabled path of a
// relational topology with value-copied weights and serves as ground truth
// for the spiking network's accumulated forward activity and weight updates.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "srn/config.h"
#include "srn/matrix.h"
#include "srn/topology.h"

namespace srn {

struct DenseInput {
  std::size_t source;  // node index
  Matrix weights;      // (node size, source size)
};

struct DenseNode {
  std::size_t size = 0;
  std::vector<DenseInput> inputs;  // empty for input nodes
  Population population = Population::kX;
};

// Nodes are stored in topological order; nodes without inputs are fed
// directly and the last node is the output.
struct DenseReluNet {
  std::vector<DenseNode> nodes;

  std::vector<std::size_t> InputNodes() const;
  std::size_t OutputNode() const { return nodes.size() - 1; }
};

// A single chain input -> layer 1 -> ... with the given (out, in) matrices.
DenseReluNet MakeChain(const std::vector<Matrix>& layers);

// Value copy of the enabled path of `mask`, nodes in mask.order.
DenseReluNet FromTopology(const RelationalTopology& topo,
                          const DirectionMask& mask);

struct Activations {
  std::vector<std::vector<double>> pre;   // weighted input per node
  std::vector<std::vector<double>> post;  // max(0, pre); raw input for inputs
};

// `inputs` holds one vector per input node, in node order.
Activations AnnForward(const DenseReluNet& net,
                       const std::vector<std::vector<double>>& inputs);
Activations AnnForward(const DenseReluNet& net, const std::vector<double>& input);

// Which output quantity enters the loss: the rectified activation, or the
// weighted input before rectification. The latter is what the spiking
// readout x / eta + V measures once the output has settled.
enum class OutputReadout { kRectified, kPreActivation };

// Gradient of sum 0.5 (y - t)^2 through the rectifier chain; one matrix per
// DenseInput, same nesting as net.nodes[n].inputs.
using Gradients = std::vector<std::vector<Matrix>>;
Gradients AnnBackward(const DenseReluNet& net, const Activations& acts,
                      const std::vector<double>& target,
                      OutputReadout readout = OutputReadout::kRectified);

double AnnLoss(const DenseReluNet& net,
               const std::vector<std::vector<double>>& inputs,
               const std::vector<double>& target,
               OutputReadout readout = OutputReadout::kRectified);

// Central finite differences of AnnLoss, independent of AnnBackward.
Gradients NumericalGradient(const DenseReluNet& net,
                            const std::vector<std::vector<double>>& inputs,
                            const std::vector<double>& target, double step,
                            OutputReadout readout = OutputReadout::kRectified);

// Per-population |x / eta - ReLU activation| after a spiking forward phase in
// which input neuron i fires exactly input_counts[k][i] spikes spread over
// t_expl steps, followed by config.settle_steps silent steps.
struct ForwardComparison {
  std::array<std::vector<double>, kNumPopulations> deviation;
  std::array<int, kNumPopulations> depth{};  // layer depth along the mask
  double MaxDeviation(Population p) const;
};

ForwardComparison CompareForward(
    const RelationalTopology& topo, const DirectionMask& mask,
    const std::array<std::vector<double>, 2>& input_counts,
    const SimulationConfig& config);

// Sign agreement between -(accumulated spiking update) / eta and the oracle
// gradient (pre-activation readout), over entries whose oracle magnitude
// exceeds the median magnitude. The spiking error phase runs for
// config.t_bp steps.
struct GradientComparison {
  std::int64_t considered = 0;
  std::int64_t agreeing = 0;
  std::int64_t silent = 0;  // considered entries with no spiking update
  double agreement() const {
    return considered ? static_cast<double>(agreeing) / considered : 0.0;
  }
};

GradientComparison CompareGradients(
    const RelationalTopology& topo, const DirectionMask& mask,
    const std::array<std::vector<double>, 2>& input_counts,
    const std::vector<double>& target_counts, const SimulationConfig& config);

// Largest |a - b| / max(|a|, |b|, floor) across all entries.
double MaxRelativeError(const Gradients& a, const Gradients& b, double floor);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Forward ReLU equivalence, gradient fidelity and finite-difference checks on
// randomized small networks.
std::vector<CheckResult> RunOracleChecks(std::uint64_t seed);

}  // namespace srn

#endif  // SRN_ORACLE_H_
