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

#include "srn/codec.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "srn/error.h"

namespace srn {

SpikeSchedule Schedule(const RateVector& rates, double t_start, double t_stop) {
  Require(t_stop > t_start, ErrorCode::kInvalidArgument,
          "schedule: t_stop must exceed t_start");
  SpikeSchedule s;
  s.t_start = t_start;
  s.t_stop = t_stop;
  s.times.resize(rates.size());
  for (std::size_t i = 0; i < rates.size(); ++i) {
    const double r = rates.rates[i];
    Require(std::isfinite(r) && r >= 0, ErrorCode::kInvalidArgument,
            "schedule: rates must be finite and non-negative");
    if (r == 0) continue;
    const double period = 1.0 / r;
    for (std::int64_t a = 1;; ++a) {
      const double t = t_start + static_cast<double>(a) * period;
      if (t > t_stop + kTimeTolerance) break;
      s.times[i].push_back(t);
    }
  }
  return s;
}

SpikeRaster Rasterize(const SpikeSchedule& schedule, std::int64_t n_steps,
                      double dt) {
  Require(n_steps >= 0 && dt > 0, ErrorCode::kInvalidArgument,
          "rasterize: bad step count or dt");
  const std::size_t n = schedule.times.size();
  SpikeRaster raster(static_cast<std::size_t>(n_steps),
                     std::vector<std::int8_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (double t_in : schedule.times[i]) {
      // Smallest step index s >= 1 with t_in <= t_start + s * dt.
      const double rel = (t_in - schedule.t_start) / dt;
      auto s = static_cast<std::int64_t>(std::ceil(rel - kTimeTolerance));
      s = std::max<std::int64_t>(s, 1);
      if (s > n_steps) continue;
      // Rates above one spike per step collapse into a single spike.
      raster[static_cast<std::size_t>(s - 1)][i] = 1;
    }
  }
  return raster;
}

std::vector<std::int32_t> ExpectedCounts(const RateVector& rates,
                                         double duration) {
  std::vector<std::int32_t> counts(rates.size());
  for (std::size_t i = 0; i < rates.size(); ++i)
    counts[i] = static_cast<std::int32_t>(
        std::floor(duration * rates.rates[i] + kTimeTolerance));
  return counts;
}

RateVector NumberProfile(double xi, std::size_t n, double r_max) {
  Require(xi >= 0.0 && xi <= 1.0, ErrorCode::kOutOfRange,
          "number profile: xi must lie in [0, 1]");
  Require(n > 0, ErrorCode::kInvalidArgument, "number profile: N must be > 0");
  RateVector r;
  r.rates.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::abs(xi - static_cast<double>(i) / static_cast<double>(n));
    r.rates[i] = r_max * std::abs(1.0 - 2.0 * d);
  }
  return r;
}

RateVector PixelRates(std::span<const double> pixels, double r_max) {
  RateVector r;
  r.rates.resize(pixels.size());
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    Require(pixels[i] >= 0.0 && pixels[i] <= 1.0, ErrorCode::kOutOfRange,
            "pixel rates: pixel values must lie in [0, 1]");
    r.rates[i] = pixels[i] * r_max;
  }
  return r;
}

std::int64_t PeriodicDistance(std::int64_t i, std::int64_t j, std::int64_t n) {
  Require(n > 0 && i >= 0 && j >= 0 && i < n && j < n, ErrorCode::kOutOfRange,
          "periodic distance: index out of range");
  const std::int64_t d = i > j ? i - j : j - i;
  return 2 * d <= n ? d : n - d;
}

double DecodeValue(std::span<const double> counts) {
  const auto n = static_cast<std::int64_t>(counts.size());
  Require(std::any_of(counts.begin(), counts.end(),
                      [](double c) { return c > 0; }),
          ErrorCode::kUndecodable, "decode: population has no activity");
  std::int64_t best = 0;
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::int64_t i = 0; i < n; ++i) {
    double cost = 0.0;
    for (std::int64_t j = 0; j < n; ++j)
      cost += counts[static_cast<std::size_t>(j)] *
              static_cast<double>(PeriodicDistance(i, j, n));
    if (cost < best_cost) {
      best_cost = cost;
      best = i;
    }
  }
  return static_cast<double>(best) / static_cast<double>(n);
}

std::vector<double> DecodeImage(std::span<const double> counts, double scale) {
  std::vector<double> pixels(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    Require(counts[i] >= 0, ErrorCode::kInvalidArgument,
            "decode image: counts must be non-negative");
    pixels[i] = std::min(1.0, counts[i] * scale);
  }
  return pixels;
}

double ImageScale(double r_max, double t_expl) {
  Require(r_max > 0 && t_expl > 0, ErrorCode::kInvalidArgument,
          "image scale: r_max and t_expl must be positive");
  return 1.0 / (r_max * t_expl);
}

double PeriodicError(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, 1.0 - d);
}

}  // namespace srn
