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

#ifndef SRN_TOPOLOGY_H_
#define SRN_TOPOLOGY_H_

// Seven-population relational network: IO populations X, Y, Z, peripheral
// populations A, B, C and the hidden population H. Six undirected edges are
// stored once each in canonical orientation and are read transposed when
// traversed in the opposite direction.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "srn/config.h"
#include "srn/matrix.h"
#include "srn/neuron.h"

namespace srn {

enum class Population : std::uint8_t { kX = 0, kY, kZ, kA, kB, kC, kH };
inline constexpr std::size_t kNumPopulations = 7;
inline constexpr std::array<Population, kNumPopulations> kAllPopulations = {
    Population::kX, Population::kY, Population::kZ, Population::kA,
    Population::kB, Population::kC, Population::kH};

constexpr std::size_t Index(Population p) { return static_cast<std::size_t>(p); }
std::string_view Name(Population p);
bool IsIo(Population p);
// Peripheral population attached to an IO population (X->A, Y->B, Z->C).
Population PeripheralOf(Population io);

// Undirected edges in canonical order. Canonical orientation is IO ->
// peripheral and peripheral -> hidden.
enum class Edge : std::uint8_t { kXA = 0, kYB, kZC, kAH, kBH, kCH };
inline constexpr std::size_t kNumEdges = 6;

struct EdgeEnds {
  Population pre;
  Population post;
};
EdgeEnds CanonicalEnds(Edge e);

struct DirectedEdge {
  Population from;
  Population to;
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

struct EdgeRef {
  Edge edge;
  bool reversed;  // traversal runs opposite to canonical orientation
};
// Throws kInvalidArgument if (from, to) is not one of the twelve directions.
EdgeRef Resolve(DirectedEdge d);

// Feedforward path enabled for one inference direction.
struct DirectionMask {
  Population target = Population::kZ;
  std::array<Population, 2> inputs{};
  // Enabled directed edges, listed in topological order.
  std::vector<DirectedEdge> enabled_directed_edges;
  // All seven populations in topological order, inputs first, target last.
  std::array<Population, kNumPopulations> order{};

  bool Enables(DirectedEdge d) const;
};

// Throws kInvalidArgument when target is not an IO population.
DirectionMask MaskFor(Population target);

// He-normal weights: N(0, sqrt(2 / n_in)), shape (n_out, n_in).
Matrix InitWeights(std::size_t n_out, std::size_t n_in, std::uint64_t seed);

struct RelationalTopology {
  PopulationSizes sizes{};
  std::array<PopulationState, kNumPopulations> populations;
  std::array<Matrix, kNumEdges> weights;       // (post, pre), canonical
  std::array<Matrix, kNumEdges> accumulators;  // same shapes as weights
  HyperParams hp;
  bool forward_done = false;

  // Spikes emitted in the latest forward step and gated error spikes of the
  // latest backward step, per population.
  std::array<std::vector<std::int8_t>, kNumPopulations> spikes;
  std::array<std::vector<std::int8_t>, kNumPopulations> deltas;
  std::array<std::vector<double>, kNumPopulations> scratch;

  PopulationState& state(Population p) { return populations[Index(p)]; }
  const PopulationState& state(Population p) const {
    return populations[Index(p)];
  }
  Matrix& weight(Edge e) { return weights[static_cast<std::size_t>(e)]; }
  const Matrix& weight(Edge e) const {
    return weights[static_cast<std::size_t>(e)];
  }
};

// Sizes validated, states zeroed, weights He-initialized from config.seed.
RelationalTopology Build(const SimulationConfig& config);
RelationalTopology Build(const PopulationSizes& sizes, std::uint64_t seed,
                         const HyperParams& hp = HyperParams{});

// The one storage location read for a directed traversal of an edge, in both
// forward and backward passes.
const Matrix& EdgeMatrix(const RelationalTopology& topo, DirectedEdge d);

// Clears every population state and the forward-phase marker.
void ResetStates(RelationalTopology& topo);

// One network time step. `first` and `second` are the encoder spikes for
// mask.inputs[0] and mask.inputs[1]. Populations are updated in topological
// order so a spike can cross the whole path within the step. Returns the
// target population's spikes (a view into topo.spikes).
std::span<const std::int8_t> NetworkForwardStep(
    RelationalTopology& topo, const DirectionMask& mask,
    std::span<const std::int8_t> first, std::span<const std::int8_t> second);

// Same step addressed by population. Exactly the two input populations must
// be present; spikes for the target throw kInvalidArgument.
TernarySpikeVector NetworkForwardStep(
    RelationalTopology& topo, const DirectionMask& mask,
    const std::map<Population, TernarySpikeVector>& input_spikes);

// One backward step: the target's error spikes travel the reversed enabled
// edges through the same weight storage, every interior population runs
// ErrorStep then GateError, and each enabled edge accumulates (or, in
// per-event mode, applies) its weight updates. Throws kInvalidState before a
// forward phase.
void NetworkBackwardStep(RelationalTopology& topo, const DirectionMask& mask,
                         std::span<const std::int8_t> output_error_spikes,
                         UpdateMode mode = UpdateMode::kAccumulated);

// Adds accumulators into weights and zeroes them (accumulated mode); no-op in
// per-event mode.
void ApplyUpdates(RelationalTopology& topo, UpdateMode mode);

}  // namespace srn

#endif  // SRN_TOPOLOGY_H_
