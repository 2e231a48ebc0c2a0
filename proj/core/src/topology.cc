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

#include "srn/topology.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "srn/error.h"

namespace srn {

namespace {

constexpr std::array<EdgeEnds, kNumEdges> kCanonical = {{
    {Population::kX, Population::kA},
    {Population::kY, Population::kB},
    {Population::kZ, Population::kC},
    {Population::kA, Population::kH},
    {Population::kB, Population::kH},
    {Population::kC, Population::kH},
}};

// Adds the signed contribution of `pre_spikes` traversing `ref` into `out`.
// Pure accumulate: each spike adds or subtracts one weight per target.
void Propagate(const Matrix& w, bool transposed,
               std::span<const std::int8_t> pre_spikes, std::span<double> out) {
  if (!transposed) {
    // pre indexes columns; add column j into out.
    const std::size_t rows = w.rows();
    for (std::size_t j = 0; j < pre_spikes.size(); ++j) {
      const std::int8_t s = pre_spikes[j];
      if (s > 0) {
        for (std::size_t q = 0; q < rows; ++q) out[q] += w(q, j);
      } else if (s < 0) {
        for (std::size_t q = 0; q < rows; ++q) out[q] -= w(q, j);
      }
    }
  } else {
    // pre indexes rows; add row q into out.
    for (std::size_t q = 0; q < pre_spikes.size(); ++q) {
      const std::int8_t s = pre_spikes[q];
      if (s == 0) continue;
      const auto row = w.row(q);
      if (s > 0) {
        for (std::size_t p = 0; p < row.size(); ++p) out[p] += row[p];
      } else {
        for (std::size_t p = 0; p < row.size(); ++p) out[p] -= row[p];
      }
    }
  }
}

// Applies the update rule for one enabled directed edge into `target`
// (accumulator or weight matrix), canonical orientation.
void AccumulateEdge(Matrix& target, bool reversed,
                    std::span<const std::int8_t> post_delta,
                    std::span<const double> pre_trace) {
  if (!reversed) {
    // post = canonical row q, pre = canonical column p.
    for (std::size_t q = 0; q < post_delta.size(); ++q) {
      const std::int8_t d = post_delta[q];
      if (d == 0) continue;
      auto row = target.row(q);
      for (std::size_t p = 0; p < row.size(); ++p)
        row[p] += AccumulateUpdate(d, pre_trace[p]);
    }
  } else {
    // post = canonical column p, pre = canonical row q.
    const std::size_t rows = target.rows();
    for (std::size_t p = 0; p < post_delta.size(); ++p) {
      const std::int8_t d = post_delta[p];
      if (d == 0) continue;
      for (std::size_t q = 0; q < rows; ++q)
        target(q, p) += AccumulateUpdate(d, pre_trace[q]);
    }
  }
}

void ValidateSpikes(std::span<const std::int8_t> s, std::size_t n,
                    const char* what) {
  Require(s.size() == n, ErrorCode::kDimensionMismatch, what);
  for (auto v : s)
    Require(v >= -1 && v <= 1, ErrorCode::kInvalidArgument,
            "spike values must be ternary");
}

}  // namespace

std::string_view Name(Population p) {
  static constexpr std::array<std::string_view, kNumPopulations> kNames = {
      "X", "Y", "Z", "A", "B", "C", "H"};
  return kNames[Index(p)];
}

bool IsIo(Population p) { return Index(p) <= Index(Population::kZ); }

Population PeripheralOf(Population io) {
  Require(IsIo(io), ErrorCode::kInvalidArgument,
          "peripheral lookup needs an IO population");
  return static_cast<Population>(Index(io) + 3);
}

EdgeEnds CanonicalEnds(Edge e) { return kCanonical[static_cast<std::size_t>(e)]; }

EdgeRef Resolve(DirectedEdge d) {
  for (std::size_t k = 0; k < kNumEdges; ++k) {
    if (kCanonical[k].pre == d.from && kCanonical[k].post == d.to)
      return {static_cast<Edge>(k), false};
    if (kCanonical[k].post == d.from && kCanonical[k].pre == d.to)
      return {static_cast<Edge>(k), true};
  }
  Fail(ErrorCode::kInvalidArgument, "no edge between " +
                                        std::string(Name(d.from)) + " and " +
                                        std::string(Name(d.to)));
}

bool DirectionMask::Enables(DirectedEdge d) const {
  return std::find(enabled_directed_edges.begin(), enabled_directed_edges.end(),
                   d) != enabled_directed_edges.end();
}

DirectionMask MaskFor(Population target) {
  Require(IsIo(target), ErrorCode::kInvalidArgument,
          "inference target must be X, Y or Z");
  DirectionMask mask;
  mask.target = target;
  std::size_t k = 0;
  for (Population io : {Population::kX, Population::kY, Population::kZ})
    if (io != target) mask.inputs[k++] = io;
  const Population p0 = PeripheralOf(mask.inputs[0]);
  const Population p1 = PeripheralOf(mask.inputs[1]);
  const Population pt = PeripheralOf(target);
  mask.enabled_directed_edges = {
      {mask.inputs[0], p0}, {mask.inputs[1], p1}, {p0, Population::kH},
      {p1, Population::kH}, {Population::kH, pt}, {pt, target}};
  mask.order = {mask.inputs[0], mask.inputs[1], p0, p1, Population::kH, pt,
                target};
  return mask;
}

Matrix InitWeights(std::size_t n_out, std::size_t n_in, std::uint64_t seed) {
  Require(n_out > 0 && n_in > 0, ErrorCode::kInvalidArgument,
          "init weights: dimensions must be positive");
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n_out),
                    static_cast<std::uint32_t>(n_in)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(
      0.0, std::sqrt(2.0 / static_cast<double>(n_in)));
  Matrix w(n_out, n_in);
  for (double& v : w.data()) v = normal(rng);
  return w;
}

RelationalTopology Build(const PopulationSizes& sizes, std::uint64_t seed,
                         const HyperParams& hp) {
  for (auto n : sizes)
    Require(n > 0, ErrorCode::kInvalidArgument,
            "build: population sizes must be positive");
  Validate(hp);
  RelationalTopology topo;
  topo.sizes = sizes;
  topo.hp = hp;
  for (std::size_t p = 0; p < kNumPopulations; ++p) {
    topo.populations[p] = PopulationState(sizes[p]);
    topo.spikes[p].assign(sizes[p], 0);
    topo.deltas[p].assign(sizes[p], 0);
    topo.scratch[p].assign(sizes[p], 0.0);
  }
  for (std::size_t k = 0; k < kNumEdges; ++k) {
    const std::size_t n_in = sizes[Index(kCanonical[k].pre)];
    const std::size_t n_out = sizes[Index(kCanonical[k].post)];
    topo.weights[k] = InitWeights(n_out, n_in, seed + 0x9e3779b97f4a7c15ULL * (k + 1));
    topo.accumulators[k] = Matrix(n_out, n_in);
  }
  return topo;
}

RelationalTopology Build(const SimulationConfig& config) {
  Validate(config);
  return Build(config.sizes, config.seed, HyperParamsFrom(config));
}

const Matrix& EdgeMatrix(const RelationalTopology& topo, DirectedEdge d) {
  return topo.weight(Resolve(d).edge);
}

void ResetStates(RelationalTopology& topo) {
  for (std::size_t p = 0; p < kNumPopulations; ++p) {
    Reset(topo.populations[p]);
    std::fill(topo.spikes[p].begin(), topo.spikes[p].end(), 0);
    std::fill(topo.deltas[p].begin(), topo.deltas[p].end(), 0);
  }
  topo.forward_done = false;
}

std::span<const std::int8_t> NetworkForwardStep(
    RelationalTopology& topo, const DirectionMask& mask,
    std::span<const std::int8_t> first, std::span<const std::int8_t> second) {
  for (std::size_t k = 0; k < 2; ++k) {
    const Population in = mask.inputs[k];
    const auto spikes = k == 0 ? first : second;
    ValidateSpikes(spikes, topo.sizes[Index(in)],
                   "forward step: input spike vector size mismatch");
    ImposeSpikes(topo.state(in), spikes, topo.hp);
    std::copy(spikes.begin(), spikes.end(), topo.spikes[Index(in)].begin());
  }
  for (std::size_t o = 2; o < kNumPopulations; ++o) {
    const Population pop = mask.order[o];
    PopulationState& st = topo.state(pop);
    auto& in = topo.scratch[Index(pop)];
    if (st.bias_pending) {
      std::copy(st.b.begin(), st.b.end(), in.begin());
    } else {
      std::fill(in.begin(), in.end(), 0.0);
    }
    for (const DirectedEdge& d : mask.enabled_directed_edges) {
      if (d.to != pop) continue;
      const EdgeRef ref = Resolve(d);
      Propagate(topo.weight(ref.edge), ref.reversed, topo.spikes[Index(d.from)],
                in);
    }
    ForwardStep<double>(st, in, topo.hp, topo.spikes[Index(pop)]);
  }
  topo.forward_done = true;
  return topo.spikes[Index(mask.target)];
}

TernarySpikeVector NetworkForwardStep(
    RelationalTopology& topo, const DirectionMask& mask,
    const std::map<Population, TernarySpikeVector>& input_spikes) {
  Require(!input_spikes.contains(mask.target), ErrorCode::kInvalidArgument,
          "forward step: spikes supplied for the inference target");
  Require(input_spikes.size() == 2 && input_spikes.contains(mask.inputs[0]) &&
              input_spikes.contains(mask.inputs[1]),
          ErrorCode::kInvalidArgument,
          "forward step: spikes must be given for both input populations");
  const std::int64_t step = topo.state(mask.target).forward_steps;
  const auto out =
      NetworkForwardStep(topo, mask, input_spikes.at(mask.inputs[0]).values,
                         input_spikes.at(mask.inputs[1]).values);
  return TernarySpikeVector{std::vector<std::int8_t>(out.begin(), out.end()),
                            step};
}

void NetworkBackwardStep(RelationalTopology& topo, const DirectionMask& mask,
                         std::span<const std::int8_t> output_error_spikes,
                         UpdateMode mode) {
  Require(topo.forward_done, ErrorCode::kInvalidState,
          "backward step called before a forward phase");
  ValidateSpikes(output_error_spikes, topo.sizes[Index(mask.target)],
                 "backward step: output error size mismatch");
  std::copy(output_error_spikes.begin(), output_error_spikes.end(),
            topo.deltas[Index(mask.target)].begin());

  // Interior populations in reverse topological order.
  for (std::size_t o = kNumPopulations - 2; o >= 2; --o) {
    const Population pop = mask.order[o];
    auto& in = topo.scratch[Index(pop)];
    std::fill(in.begin(), in.end(), 0.0);
    for (const DirectedEdge& d : mask.enabled_directed_edges) {
      if (d.from != pop) continue;
      // Error travels d.to -> d.from through the same storage, transposed.
      const EdgeRef ref = Resolve(d);
      Propagate(topo.weight(ref.edge), !ref.reversed, topo.deltas[Index(d.to)],
                in);
    }
    auto& delta = topo.deltas[Index(pop)];
    ErrorStep<double>(topo.state(pop), in, topo.hp, delta);
    GateErrorInPlace<double>(delta, topo.state(pop));
  }

  for (const DirectedEdge& d : mask.enabled_directed_edges) {
    const EdgeRef ref = Resolve(d);
    const std::size_t k = static_cast<std::size_t>(ref.edge);
    Matrix& target =
        mode == UpdateMode::kAccumulated ? topo.accumulators[k] : topo.weights[k];
    AccumulateEdge(target, ref.reversed, topo.deltas[Index(d.to)],
                   topo.state(d.from).x);
  }
}

void ApplyUpdates(RelationalTopology& topo, UpdateMode mode) {
  if (mode == UpdateMode::kPerEvent) return;
  for (std::size_t k = 0; k < kNumEdges; ++k) {
    auto w = topo.weights[k].data();
    auto acc = topo.accumulators[k].data();
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] += acc[i];
      acc[i] = 0.0;
    }
  }
}

}  // namespace srn
