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

#include "srn/trainer.h"

#include <cmath>
#include <limits>
#include <optional>
#include <ostream>

#include "srn/error.h"

namespace srn {

namespace {

constexpr std::array<Population, 3> kDirectionCycle = {
    Population::kZ, Population::kX, Population::kY};

std::int64_t StepsFor(double duration, double dt) {
  return static_cast<std::int64_t>(std::llround(duration / dt));
}

// Forward phase shared by training and inference: inputs driven for the
// presentation window, then `settle_steps` silent steps.
void RunForwardPhase(RelationalTopology& topo, const DirectionMask& mask,
                     const RateVector& first, const RateVector& second,
                     const SimulationConfig& config, std::int64_t settle_steps) {
  const double t_expl = static_cast<double>(config.t_expl);
  const std::int64_t steps = PresentationSteps(config);
  const SpikeRaster r0 = Rasterize(Schedule(first, 0.0, t_expl), steps, config.dt);
  const SpikeRaster r1 = Rasterize(Schedule(second, 0.0, t_expl), steps, config.dt);
  for (std::int64_t s = 0; s < steps; ++s)
    NetworkForwardStep(topo, mask, r0[static_cast<std::size_t>(s)],
                       r1[static_cast<std::size_t>(s)]);
  const std::vector<std::int8_t> z0(first.size(), 0), z1(second.size(), 0);
  for (std::int64_t s = 0; s < settle_steps; ++s)
    NetworkForwardStep(topo, mask, z0, z1);
}

std::vector<double> Counts(const PopulationState& st) {
  return std::vector<double>(st.net_spikes.begin(), st.net_spikes.end());
}

}  // namespace

LossReadout ReadOutput(const PopulationState& output,
                       std::span<const std::int32_t> target_counts) {
  Require(target_counts.size() == output.size(), ErrorCode::kDimensionMismatch,
          "readout: target size mismatch");
  LossReadout r;
  r.y.resize(output.size());
  r.t.resize(output.size());
  for (std::size_t i = 0; i < output.size(); ++i) {
    r.y[i] = static_cast<double>(output.net_spikes[i]) + output.V[i];
    r.t[i] = static_cast<double>(target_counts[i]);
  }
  return r;
}

double SquaredLoss(const LossReadout& readout) {
  double loss = 0.0;
  for (std::size_t i = 0; i < readout.y.size(); ++i) {
    const double e = readout.y[i] - readout.t[i];
    loss += 0.5 * e * e;
  }
  return loss;
}

void InjectOutputError(PopulationState& output, const LossReadout& readout) {
  Require(readout.y.size() == output.size(), ErrorCode::kDimensionMismatch,
          "inject error: size mismatch");
  for (std::size_t i = 0; i < output.size(); ++i)
    output.U[i] = readout.y[i] - readout.t[i];
}

std::int64_t EmitOutputErrorSpikes(PopulationState& output,
                                   const HyperParams& hp,
                                   std::span<std::int8_t> out) {
  const std::vector<double> none(output.size(), 0.0);
  ErrorStep<double>(output, none, hp, out);
  std::int64_t emitted = 0;
  for (auto z : out) emitted += z != 0;
  return emitted;
}

RateVector StimulusRates(const RelationSample& sample, std::size_t k,
                         const SimulationConfig& config,
                         const LabeledImageSet* images) {
  Require(k < 3, ErrorCode::kOutOfRange, "stimulus index must be 0, 1 or 2");
  const std::size_t n = config.sizes[k];
  if (sample.kind == Task::kAddition)
    return NumberProfile(sample.values[k], n, config.r_max);
  Require(images != nullptr, ErrorCode::kInvalidArgument,
          "xor stimulus needs an image set");
  Require(images->pixels_per_image() == n, ErrorCode::kSizeMismatch,
          "xor stimulus: image size differs from IO population size");
  return PixelRates(images->Pixels(sample.image_index[k]), config.r_max);
}

double PresentExample(RelationalTopology& topo, const RelationSample& sample,
                      const SimulationConfig& config,
                      const LabeledImageSet* images) {
  Require(!topo.weights[0].data().empty(), ErrorCode::kInvalidState,
          "present example: topology not built");
  Require(topo.sizes == config.sizes, ErrorCode::kSizeMismatch,
          "present example: topology sizes differ from config");
  const DirectionMask mask = MaskFor(sample.direction);
  ResetStates(topo);

  const std::size_t target = Index(mask.target);
  const RateVector in0 = StimulusRates(sample, Index(mask.inputs[0]), config, images);
  const RateVector in1 = StimulusRates(sample, Index(mask.inputs[1]), config, images);
  const RateVector tgt = StimulusRates(sample, target, config, images);
  RunForwardPhase(topo, mask, in0, in1, config, config.settle_steps);

  const auto target_counts = ExpectedCounts(tgt, static_cast<double>(config.t_expl));
  PopulationState& out = topo.state(mask.target);
  const LossReadout readout = ReadOutput(out, target_counts);
  const double loss = SquaredLoss(readout);
  InjectOutputError(out, readout);

  std::vector<std::int8_t> error_spikes(out.size(), 0);
  const std::int64_t bp_steps = StepsFor(static_cast<double>(config.t_bp), config.dt);
  for (std::int64_t s = 0; s < bp_steps; ++s) {
    EmitOutputErrorSpikes(out, topo.hp, error_spikes);
    NetworkBackwardStep(topo, mask, error_spikes, config.update_mode);
  }
  ApplyUpdates(topo, config.update_mode);
  return loss;
}

std::vector<double> Infer(RelationalTopology& topo, Population target,
                          const RateVector& first_input,
                          const RateVector& second_input,
                          const SimulationConfig& config) {
  const DirectionMask mask = MaskFor(target);
  ResetStates(topo);
  RunForwardPhase(topo, mask, first_input, second_input, config,
                  config.settle_steps);
  return Counts(topo.state(target));
}

Population DirectionForSample(std::int64_t k) {
  return kDirectionCycle[static_cast<std::size_t>(k % 3)];
}

void TrainingLog::WriteCsv(std::ostream& out) const {
  out << "sample,direction,loss,eta\n";
  out.precision(17);
  for (std::size_t k = 0; k < loss.size(); ++k)
    out << k << ',' << Name(direction[k]) << ',' << loss[k] << ',' << eta[k]
        << '\n';
}

TrainingLog Train(RelationalTopology& topo, Task task,
                  const SimulationConfig& config, const LabeledImageSet* images,
                  const TrainOptions& options) {
  Validate(config);
  std::optional<XorSampler> xor_sampler;
  if (task == Task::kXor) {
    Require(images != nullptr, ErrorCode::kInvalidArgument,
            "train: xor task needs the binary training set");
    xor_sampler.emplace(*images);
  }
  topo.hp = HyperParamsFrom(config);
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                    static_cast<std::uint32_t>(config.seed >> 32), 0x5eedu};
  Rng rng(seq);

  TrainingLog log;
  log.loss.reserve(static_cast<std::size_t>(config.n_train));
  for (std::int64_t k = 0; k < config.n_train; ++k) {
    RelationSample sample =
        task == Task::kAddition ? SampleAddition(rng) : xor_sampler->Sample(rng);
    sample.direction = DirectionForSample(k);
    const double loss = PresentExample(topo, sample, config, images);
    log.loss.push_back(loss);
    log.direction.push_back(sample.direction);
    log.eta.push_back(topo.hp.eta);
    if (options.progress) options.progress(k, loss);
    if ((k + 1) % config.decay_interval == 0) topo.hp.eta *= config.decay_factor;
  }
  return log;
}

void AdditionEval::WriteCsv(std::ostream& out) const {
  out << "direction,u,v,target,inferred,periodic_error\n";
  out.precision(17);
  for (const auto& r : rows) {
    out << Name(r.direction) << ',' << r.u << ',' << r.v << ',' << r.target
        << ',';
    if (std::isnan(r.inferred)) out << "nan";
    else out << r.inferred;
    out << ',' << r.periodic_error << '\n';
  }
}

AdditionEval EvalAddition(const RelationalTopology& frozen, int grid_n,
                          const SimulationConfig& config) {
  Require(grid_n > 0, ErrorCode::kInvalidArgument, "eval: grid must be positive");
  RelationalTopology topo = frozen;
  AdditionEval eval;
  for (Population target : {Population::kX, Population::kY, Population::kZ}) {
    const DirectionMask mask = MaskFor(target);
    double sum_sq = 0.0;
    for (int i = 0; i < grid_n; ++i) {
      for (int j = 0; j < grid_n; ++j) {
        const double u = static_cast<double>(i) / grid_n;
        const double v = static_cast<double>(j) / grid_n;
        // (u, v) are the known variables in X, Y, Z order.
        double truth = 0.0;
        switch (target) {
          case Population::kZ: truth = PeriodicSum(u, v); break;
          case Population::kX: truth = PeriodicSum(v, -u); break;
          default: truth = PeriodicSum(v, -u); break;
        }
        const std::size_t n_in0 = config.sizes[Index(mask.inputs[0])];
        const std::size_t n_in1 = config.sizes[Index(mask.inputs[1])];
        const auto counts =
            Infer(topo, target, NumberProfile(u, n_in0, config.r_max),
                  NumberProfile(v, n_in1, config.r_max), config);
        AdditionEvalRow row{target, u, v, truth,
                            std::numeric_limits<double>::quiet_NaN(), 0.5};
        try {
          row.inferred = DecodeValue(counts);
          row.periodic_error = PeriodicError(row.inferred, truth);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kUndecodable) throw;
          ++eval.undecodable;
        }
        sum_sq += row.periodic_error * row.periodic_error;
        eval.rows.push_back(row);
      }
    }
    eval.rmse[Index(target)] = std::sqrt(sum_sq / (grid_n * grid_n));
  }
  eval.average_rmse = (eval.rmse[0] + eval.rmse[1] + eval.rmse[2]) / 3.0;
  return eval;
}

CentroidClassifier::CentroidClassifier(const LabeledImageSet& set) {
  const std::size_t n = set.pixels_per_image();
  std::array<std::size_t, 2> count{};
  centroids_[0].assign(n, 0.0);
  centroids_[1].assign(n, 0.0);
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto label = set.label(i);
    if (label > 1) continue;
    const auto raw = set.raw_image(i);
    for (std::size_t p = 0; p < n; ++p) centroids_[label][p] += raw[p] / 255.0;
    ++count[label];
  }
  Require(count[0] > 0 && count[1] > 0, ErrorCode::kInvalidArgument,
          "centroid classifier: need images of both 0 and 1");
  for (int c = 0; c < 2; ++c)
    for (double& v : centroids_[c]) v /= static_cast<double>(count[c]);
}

std::uint8_t CentroidClassifier::Classify(std::span<const double> pixels) const {
  Require(pixels.size() == centroids_[0].size(), ErrorCode::kDimensionMismatch,
          "centroid classifier: image size mismatch");
  std::array<double, 2> dist{};
  for (int c = 0; c < 2; ++c)
    for (std::size_t p = 0; p < pixels.size(); ++p) {
      const double d = pixels[p] - centroids_[c][p];
      dist[c] += d * d;
    }
  return dist[1] < dist[0] ? 1 : 0;
}

XorEval EvalXor(const RelationalTopology& frozen, const LabeledImageSet& test,
                int n_trials, const SimulationConfig& config,
                std::uint64_t seed) {
  Require(n_trials > 0, ErrorCode::kInvalidArgument,
          "eval xor: trial count must be positive");
  RelationalTopology topo = frozen;
  const XorSampler sampler(test);
  const CentroidClassifier classifier(test);
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), 0xe7a1u};
  Rng rng(seq);
  const double scale = ImageScale(config.r_max, static_cast<double>(config.t_expl));

  std::array<std::int64_t, 3> hits{}, totals{};
  for (int trial = 0; trial < n_trials; ++trial) {
    RelationSample sample = sampler.Sample(rng);
    sample.direction = DirectionForSample(trial);
    const DirectionMask mask = MaskFor(sample.direction);
    const auto counts =
        Infer(topo, mask.target,
              StimulusRates(sample, Index(mask.inputs[0]), config, &test),
              StimulusRates(sample, Index(mask.inputs[1]), config, &test), config);
    const auto image = DecodeImage(counts, scale);
    const std::size_t t = Index(mask.target);
    ++totals[t];
    if (classifier.Classify(image) == sample.labels[t]) ++hits[t];
  }
  XorEval eval;
  eval.trials = n_trials;
  std::int64_t all_hits = 0;
  for (std::size_t d = 0; d < 3; ++d) {
    eval.direction_accuracy[d] =
        totals[d] ? static_cast<double>(hits[d]) / static_cast<double>(totals[d]) : 0.0;
    all_hits += hits[d];
  }
  eval.accuracy = static_cast<double>(all_hits) / n_trials;
  return eval;
}

}  // namespace srn
