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

#ifndef SRN_CODEC_H_
#define SRN_CODEC_H_

// Deterministic rate coding of numbers and images into spike trains, and
// decoding of population activity back into numbers and pixel values.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace srn {

// Firing rate per neuron, in spikes per unit time.
struct RateVector {
  std::vector<double> rates;
  std::size_t size() const { return rates.size(); }
};

// Spike times per neuron within (t_start, t_stop].
struct SpikeSchedule {
  double t_start = 0.0;
  double t_stop = 0.0;
  std::vector<std::vector<double>> times;
};

// Per-step spike vectors for a population; raster[s][i] is neuron i's output
// in simulation step s + 1.
using SpikeRaster = std::vector<std::vector<std::int8_t>>;

// Tolerance absorbing floating point error in a / r when the exact spike time
// lands on a step boundary.
inline constexpr double kTimeTolerance = 1e-9;

// Equally spaced spikes at t_start + a / r_i for a = 1, 2, ... up to t_stop.
SpikeSchedule Schedule(const RateVector& rates, double t_start, double t_stop);

// Spike in step t iff t - dt < t_in <= t, for t = t_start + dt, ...,
// t_start + n_steps * dt.
SpikeRaster Rasterize(const SpikeSchedule& schedule, std::int64_t n_steps,
                      double dt = 1.0);

// Spike counts per neuron over a window of length `duration`; equal to the
// schedule sizes, floor(duration * r_i).
std::vector<std::int32_t> ExpectedCounts(const RateVector& rates,
                                         double duration);

// Triangular periodic profile: r_i = r_max * |1 - 2 |xi - i / N||.
RateVector NumberProfile(double xi, std::size_t n, double r_max);

// r_i = p_i * r_max.
RateVector PixelRates(std::span<const double> pixels, double r_max);

// Ring distance min(|i - j|, N - |i - j|).
std::int64_t PeriodicDistance(std::int64_t i, std::int64_t j, std::int64_t n);

// argmin_i sum_j counts[j] * d_N(i, j), divided by N, ties to the smallest
// index. Throws kUndecodable when no entry is positive.
double DecodeValue(std::span<const double> counts);

// Pixel value min(1, count * scale).
std::vector<double> DecodeImage(std::span<const double> counts, double scale);

// Scale mapping a neuron firing at r_max for the whole window onto 1.0.
double ImageScale(double r_max, double t_expl);

// Periodic error between two values in [0, 1).
double PeriodicError(double a, double b);

}  // namespace srn

#endif  // SRN_CODEC_H_
