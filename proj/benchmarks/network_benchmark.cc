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

#include <benchmark/benchmark.h>

#include <random>

#include "srn/codec.h"
#include "srn/config.h"
#include "srn/relation.h"
#include "srn/topology.h"
#include "srn/trainer.h"

namespace srn {
namespace {

std::vector<std::int8_t> RandomSpikes(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution fire(p);
  std::vector<std::int8_t> s(n);
  for (auto& v : s) v = fire(rng);
  return s;
}

void BM_ForwardStep(benchmark::State& state) {
  const SimulationConfig config = AdditionConfig();
  RelationalTopology topo = Build(config);
  const DirectionMask mask = MaskFor(Population::kZ);
  std::mt19937_64 rng(1);
  const auto a = RandomSpikes(100, state.range(0) / 100.0, rng);
  const auto b = RandomSpikes(100, state.range(0) / 100.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(NetworkForwardStep(topo, mask, a, b).data());
}
BENCHMARK(BM_ForwardStep)->Arg(0)->Arg(12)->Arg(50);

void BM_BackwardStep(benchmark::State& state) {
  const SimulationConfig config = AdditionConfig();
  RelationalTopology topo = Build(config);
  const DirectionMask mask = MaskFor(Population::kZ);
  std::mt19937_64 rng(2);
  for (int s = 0; s < 100; ++s)
    NetworkForwardStep(topo, mask, RandomSpikes(100, 0.12, rng), RandomSpikes(100, 0.12, rng));
  std::vector<std::int8_t> err(100, 0);
  for (std::size_t i = 0; i < err.size(); i += 4) err[i] = 1;
  for (auto _ : state) {
    NetworkBackwardStep(topo, mask, err, UpdateMode::kAccumulated);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_BackwardStep);

void BM_PresentExample(benchmark::State& state) {
  const SimulationConfig config = AdditionConfig();
  RelationalTopology topo = Build(config);
  Rng rng(3);
  std::int64_t k = 0;
  for (auto _ : state) {
    RelationSample sample = SampleAddition(rng);
    sample.direction = DirectionForSample(k++);
    benchmark::DoNotOptimize(PresentExample(topo, sample, config));
  }
}
BENCHMARK(BM_PresentExample)->Unit(benchmark::kMillisecond);

void BM_DecodeValue(benchmark::State& state) {
  const auto counts = ExpectedCounts(NumberProfile(0.3, 100, 0.12), 100.0);
  const std::vector<double> c(counts.begin(), counts.end());
  for (auto _ : state) benchmark::DoNotOptimize(DecodeValue(c));
}
BENCHMARK(BM_DecodeValue);

}  // namespace
}  // namespace srn

BENCHMARK_MAIN();
