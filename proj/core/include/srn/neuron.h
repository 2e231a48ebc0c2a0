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

#ifndef SRN_NEURON_H_
#define SRN_NEURON_H_

// Integrate-and-fire population kernels for signed forward spikes and
// ternarized backward error spikes.
//
// The kernels are templates over the state scalar so that tests can run them
// on an instrumented number type; production code uses PopulationState
// (double). Every kernel is built from additions, sign flips and comparisons
// only.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "srn/error.h"

namespace srn {

struct HyperParams {
  double theta_ff = 1.0;
  double theta_bp = 1.0;
  double eta = 0.00005;
  double dt = 1.0;
};

void Validate(const HyperParams& hp);

// Per-step neuron outputs in {-1, 0, +1}.
struct TernarySpikeVector {
  std::vector<std::int8_t> values;
  std::int64_t step = 0;

  std::size_t size() const { return values.size(); }
  std::int8_t operator[](std::size_t i) const { return values[i]; }
};

template <typename T>
struct BasicPopulationState {
  explicit BasicPopulationState(std::size_t n = 0)
      : V(n, T(0)), x(n, T(0)), U(n, T(0)), b(n, T(0)), net_spikes(n, 0) {}

  std::size_t size() const { return V.size(); }

  std::vector<T> V;  // membrane potential
  std::vector<T> x;  // eta-weighted net spike count
  std::vector<T> U;  // error integrator
  std::vector<T> b;  // bias, injected once per stimulus
  // Net signed spike count; x[i] == eta * net_spikes[i] up to rounding. The
  // negative-spike gate and the surrogate derivative test this integer so
  // that the x >= 0 bound holds exactly.
  std::vector<std::int32_t> net_spikes;
  bool bias_pending = true;
  std::int64_t forward_steps = 0;
  std::int64_t backward_steps = 0;
};

using PopulationState = BasicPopulationState<double>;

namespace internal {

template <typename T>
bool IsFiniteValue(const T& v) {
  using std::isfinite;
  return isfinite(v);
}

}  // namespace internal

template <typename T>
void Reset(BasicPopulationState<T>& state) {
  for (std::size_t i = 0; i < state.size(); ++i) {
    state.V[i] = T(0);
    state.x[i] = T(0);
    state.U[i] = T(0);
    state.net_spikes[i] = 0;
  }
  state.bias_pending = true;
  state.forward_steps = 0;
  state.backward_steps = 0;
}

// Integrates one step of weighted input and writes at most one signed spike
// per neuron into `out`. Order per neuron: integrate, threshold test (the
// negative branch is gated on the trace before this step's update), reset by
// subtraction, trace update.
template <typename T>
void ForwardStep(BasicPopulationState<T>& state,
                 std::span<const T> weighted_input, const HyperParams& hp,
                 std::span<std::int8_t> out) {
  const std::size_t n = state.size();
  Require(weighted_input.size() == n && out.size() == n,
          ErrorCode::kDimensionMismatch, "forward step: input size mismatch");
  const T theta(hp.theta_ff);
  const T neg_theta = -theta;
  const T eta(hp.eta);
  for (std::size_t i = 0; i < n; ++i) {
    if (!internal::IsFiniteValue(weighted_input[i]))
      Fail(ErrorCode::kNonFinite, "forward step: non-finite input");
    state.V[i] += weighted_input[i];
    if (state.V[i] > theta) {
      out[i] = 1;
      state.V[i] -= theta;
      state.x[i] += eta;
      ++state.net_spikes[i];
    } else if (state.V[i] < neg_theta && state.net_spikes[i] > 0) {
      out[i] = -1;
      state.V[i] += theta;
      // Exact zero once the count is back to zero; repeated +-eta drifts.
      state.x[i] = --state.net_spikes[i] == 0 ? T(0) : state.x[i] - eta;
    } else {
      out[i] = 0;
    }
  }
  state.bias_pending = false;
  ++state.forward_steps;
}

template <typename T>
TernarySpikeVector ForwardStep(BasicPopulationState<T>& state,
                               std::span<const T> weighted_input,
                               const HyperParams& hp) {
  TernarySpikeVector s{std::vector<std::int8_t>(state.size(), 0),
                       state.forward_steps};
  ForwardStep(state, weighted_input, hp, std::span<std::int8_t>(s.values));
  return s;
}

// Forces externally scheduled (encoder) spikes onto a population; only the
// trace and the net count are affected.
template <typename T>
void ImposeSpikes(BasicPopulationState<T>& state,
                  std::span<const std::int8_t> spikes, const HyperParams& hp) {
  Require(spikes.size() == state.size(), ErrorCode::kDimensionMismatch,
          "impose spikes: size mismatch");
  const T eta(hp.eta);
  for (std::size_t i = 0; i < spikes.size(); ++i) {
    if (spikes[i] > 0) {
      state.x[i] += eta;
      ++state.net_spikes[i];
    } else if (spikes[i] < 0) {
      state.x[i] = --state.net_spikes[i] == 0 ? T(0) : state.x[i] - eta;
    }
  }
  state.bias_pending = false;
  ++state.forward_steps;
}

// Returns 1 iff V > 0 or the trace is positive.
template <typename T>
int SurrogateDerivative(const BasicPopulationState<T>& state, std::size_t i) {
  Require(i < state.size(), ErrorCode::kOutOfRange,
          "surrogate derivative: neuron index out of range");
  return (state.V[i] > T(0) || state.net_spikes[i] > 0) ? 1 : 0;
}

// Integrates backpropagated error and emits at most one ternary error spike
// per neuron.
template <typename T>
void ErrorStep(BasicPopulationState<T>& state,
               std::span<const T> weighted_error_input, const HyperParams& hp,
               std::span<std::int8_t> out) {
  const std::size_t n = state.size();
  Require(weighted_error_input.size() == n && out.size() == n,
          ErrorCode::kDimensionMismatch, "error step: input size mismatch");
  const T theta(hp.theta_bp);
  const T neg_theta = -theta;
  for (std::size_t i = 0; i < n; ++i) {
    state.U[i] += weighted_error_input[i];
    if (state.U[i] > theta) {
      out[i] = 1;
      state.U[i] -= theta;
    } else if (state.U[i] < neg_theta) {
      out[i] = -1;
      state.U[i] += theta;
    } else {
      out[i] = 0;
    }
  }
  ++state.backward_steps;
}

template <typename T>
TernarySpikeVector ErrorStep(BasicPopulationState<T>& state,
                             std::span<const T> weighted_error_input,
                             const HyperParams& hp) {
  TernarySpikeVector z{std::vector<std::int8_t>(state.size(), 0),
                       state.backward_steps};
  ErrorStep(state, weighted_error_input, hp, std::span<std::int8_t>(z.values));
  return z;
}

// delta = z * a'(V, x), done in place.
template <typename T>
void GateErrorInPlace(std::span<std::int8_t> z,
                      const BasicPopulationState<T>& state) {
  Require(z.size() == state.size(), ErrorCode::kDimensionMismatch,
          "gate error: size mismatch");
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] != 0 && !(state.V[i] > T(0) || state.net_spikes[i] > 0)) z[i] = 0;
  }
}

template <typename T>
TernarySpikeVector GateError(const TernarySpikeVector& z,
                             const BasicPopulationState<T>& state) {
  TernarySpikeVector delta = z;
  GateErrorInPlace(std::span<std::int8_t>(delta.values), state);
  return delta;
}

// Weight increment contributed by one error spike passing a synapse whose
// presynaptic trace is `trace`.
template <typename T>
T AccumulateUpdate(std::int8_t delta, const T& trace) {
  if (delta > 0) return -trace;
  if (delta < 0) return trace;
  return T(0);
}

inline void Validate(const HyperParams& hp) {
  Require(hp.theta_ff > 0 && hp.theta_bp > 0 && hp.eta > 0 && hp.dt > 0,
          ErrorCode::kInvalidArgument,
          "hyperparameters: thresholds, eta and dt must be positive");
}

}  // namespace srn

#endif  // SRN_NEURON_H_
