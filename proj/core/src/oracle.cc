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

#include "srn/oracle.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "srn/codec.h"
#include "srn/error.h"

namespace srn {

namespace {

// Weight matrix in (to, from) orientation for a directed traversal.
Matrix Oriented(const RelationalTopology& topo, DirectedEdge d) {
  const EdgeRef ref = Resolve(d);
  const Matrix& w = topo.weight(ref.edge);
  return ref.reversed ? w.Transposed() : w;
}

std::size_t NodeOf(const DirectionMask& mask, Population p) {
  for (std::size_t n = 0; n < mask.order.size(); ++n)
    if (mask.order[n] == p) return n;
  Fail(ErrorCode::kInvalidArgument, "population not in mask order");
}

// Spiking forward phase with input neuron i firing exactly counts[i] times.
void DriveCounts(RelationalTopology& topo, const DirectionMask& mask,
                 const std::array<std::vector<double>, 2>& input_counts,
                 const SimulationConfig& config) {
  ResetStates(topo);
  const double t_expl = static_cast<double>(config.t_expl);
  const std::int64_t steps = PresentationSteps(config);
  std::array<SpikeRaster, 2> rasters;
  for (std::size_t k = 0; k < 2; ++k) {
    RateVector rates;
    for (double c : input_counts[k]) {
      Require(c >= 0 && c <= steps, ErrorCode::kInvalidArgument,
              "compare: input counts must fit the presentation window");
      rates.rates.push_back(c / t_expl);
    }
    Require(rates.size() == topo.sizes[Index(mask.inputs[k])],
            ErrorCode::kDimensionMismatch, "compare: input count size mismatch");
    rasters[k] = Rasterize(Schedule(rates, 0.0, t_expl), steps, config.dt);
  }
  for (std::int64_t s = 0; s < steps; ++s)
    NetworkForwardStep(topo, mask, rasters[0][static_cast<std::size_t>(s)],
                       rasters[1][static_cast<std::size_t>(s)]);
  const std::vector<std::int8_t> z0(input_counts[0].size(), 0),
      z1(input_counts[1].size(), 0);
  for (std::int64_t s = 0; s < config.settle_steps; ++s)
    NetworkForwardStep(topo, mask, z0, z1);
}

void ForEachEntry(Gradients& g, const auto& fn) {
  for (auto& node : g)
    for (auto& m : node)
      for (double& v : m.data()) fn(v);
}

}  // namespace

std::vector<std::size_t> DenseReluNet::InputNodes() const {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < nodes.size(); ++n)
    if (nodes[n].inputs.empty()) out.push_back(n);
  return out;
}

DenseReluNet MakeChain(const std::vector<Matrix>& layers) {
  Require(!layers.empty(), ErrorCode::kInvalidArgument, "chain needs a layer");
  DenseReluNet net;
  net.nodes.push_back(DenseNode{layers.front().cols(), {}, Population::kX});
  for (const Matrix& w : layers) {
    Require(w.cols() == net.nodes.back().size, ErrorCode::kDimensionMismatch,
            "chain: consecutive layer shapes do not match");
    DenseNode node;
    node.size = w.rows();
    node.inputs.push_back(DenseInput{net.nodes.size() - 1, w});
    net.nodes.push_back(std::move(node));
  }
  return net;
}

DenseReluNet FromTopology(const RelationalTopology& topo,
                          const DirectionMask& mask) {
  DenseReluNet net;
  for (Population p : mask.order) {
    DenseNode node;
    node.size = topo.sizes[Index(p)];
    node.population = p;
    for (const DirectedEdge& d : mask.enabled_directed_edges)
      if (d.to == p) node.inputs.push_back(DenseInput{NodeOf(mask, d.from), Oriented(topo, d)});
    net.nodes.push_back(std::move(node));
  }
  return net;
}

Activations AnnForward(const DenseReluNet& net,
                       const std::vector<std::vector<double>>& inputs) {
  Activations acts;
  acts.pre.resize(net.nodes.size());
  acts.post.resize(net.nodes.size());
  std::size_t next_input = 0;
  for (std::size_t n = 0; n < net.nodes.size(); ++n) {
    const DenseNode& node = net.nodes[n];
    if (node.inputs.empty()) {
      Require(next_input < inputs.size(), ErrorCode::kDimensionMismatch,
              "ann forward: missing input vector");
      const auto& in = inputs[next_input++];
      Require(in.size() == node.size, ErrorCode::kDimensionMismatch,
              "ann forward: input dimension mismatch");
      acts.pre[n] = in;
      acts.post[n] = in;
      continue;
    }
    std::vector<double> pre(node.size, 0.0);
    for (const DenseInput& e : node.inputs) {
      const auto& a = acts.post[e.source];
      Require(e.weights.rows() == node.size && e.weights.cols() == a.size(),
              ErrorCode::kDimensionMismatch, "ann forward: weight shape mismatch");
      for (std::size_t q = 0; q < node.size; ++q) {
        const auto row = e.weights.row(q);
        for (std::size_t p = 0; p < a.size(); ++p) pre[q] += row[p] * a[p];
      }
    }
    std::vector<double> post(pre.size());
    for (std::size_t q = 0; q < pre.size(); ++q) post[q] = std::max(0.0, pre[q]);
    acts.pre[n] = std::move(pre);
    acts.post[n] = std::move(post);
  }
  Require(next_input == inputs.size(), ErrorCode::kDimensionMismatch,
          "ann forward: too many input vectors");
  return acts;
}

Activations AnnForward(const DenseReluNet& net, const std::vector<double>& input) {
  return AnnForward(net, std::vector<std::vector<double>>{input});
}

Gradients AnnBackward(const DenseReluNet& net, const Activations& acts,
                      const std::vector<double>& target, OutputReadout readout) {
  const std::size_t out = net.OutputNode();
  Require(target.size() == net.nodes[out].size, ErrorCode::kDimensionMismatch,
          "ann backward: target size mismatch");
  std::vector<std::vector<double>> d_post(net.nodes.size());
  for (std::size_t n = 0; n < net.nodes.size(); ++n)
    d_post[n].assign(net.nodes[n].size, 0.0);
  const auto& y =
      readout == OutputReadout::kRectified ? acts.post[out] : acts.pre[out];
  for (std::size_t q = 0; q < target.size(); ++q) d_post[out][q] = y[q] - target[q];

  Gradients grads(net.nodes.size());
  for (std::size_t n = net.nodes.size(); n-- > 0;) {
    const DenseNode& node = net.nodes[n];
    if (node.inputs.empty()) continue;
    const bool linear = n == out && readout == OutputReadout::kPreActivation;
    std::vector<double> d_pre(node.size);
    for (std::size_t q = 0; q < node.size; ++q)
      d_pre[q] = (linear || acts.pre[n][q] > 0) ? d_post[n][q] : 0.0;
    for (const DenseInput& e : node.inputs) {
      const auto& a = acts.post[e.source];
      Matrix g(node.size, a.size());
      for (std::size_t q = 0; q < node.size; ++q)
        for (std::size_t p = 0; p < a.size(); ++p) {
          g(q, p) = d_pre[q] * a[p];
          d_post[e.source][p] += e.weights(q, p) * d_pre[q];
        }
      grads[n].push_back(std::move(g));
    }
  }
  return grads;
}

double AnnLoss(const DenseReluNet& net,
               const std::vector<std::vector<double>>& inputs,
               const std::vector<double>& target, OutputReadout readout) {
  const Activations acts = AnnForward(net, inputs);
  const auto& y = readout == OutputReadout::kRectified
                      ? acts.post[net.OutputNode()]
                      : acts.pre[net.OutputNode()];
  double loss = 0.0;
  for (std::size_t q = 0; q < y.size(); ++q)
    loss += 0.5 * (y[q] - target[q]) * (y[q] - target[q]);
  return loss;
}

Gradients NumericalGradient(const DenseReluNet& net,
                            const std::vector<std::vector<double>>& inputs,
                            const std::vector<double>& target, double step,
                            OutputReadout readout) {
  DenseReluNet probe = net;
  Gradients grads(net.nodes.size());
  for (std::size_t n = 0; n < net.nodes.size(); ++n) {
    for (std::size_t e = 0; e < net.nodes[n].inputs.size(); ++e) {
      Matrix& w = probe.nodes[n].inputs[e].weights;
      Matrix g(w.rows(), w.cols());
      for (std::size_t i = 0; i < w.size(); ++i) {
        const double orig = w.data()[i];
        w.data()[i] = orig + step;
        const double up = AnnLoss(probe, inputs, target, readout);
        w.data()[i] = orig - step;
        const double down = AnnLoss(probe, inputs, target, readout);
        w.data()[i] = orig;
        g.data()[i] = (up - down) / (2 * step);
      }
      grads[n].push_back(std::move(g));
    }
  }
  return grads;
}

double MaxRelativeError(const Gradients& a, const Gradients& b, double floor) {
  Require(a.size() == b.size(), ErrorCode::kDimensionMismatch,
          "gradient comparison: shape mismatch");
  double worst = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    Require(a[n].size() == b[n].size(), ErrorCode::kDimensionMismatch,
            "gradient comparison: shape mismatch");
    for (std::size_t e = 0; e < a[n].size(); ++e) {
      const auto da = a[n][e].data();
      const auto db = b[n][e].data();
      Require(da.size() == db.size(), ErrorCode::kDimensionMismatch,
              "gradient comparison: shape mismatch");
      for (std::size_t i = 0; i < da.size(); ++i) {
        const double scale = std::max({std::abs(da[i]), std::abs(db[i]), floor});
        worst = std::max(worst, std::abs(da[i] - db[i]) / scale);
      }
    }
  }
  return worst;
}

double ForwardComparison::MaxDeviation(Population p) const {
  const auto& d = deviation[Index(p)];
  return d.empty() ? 0.0 : *std::max_element(d.begin(), d.end());
}

ForwardComparison CompareForward(
    const RelationalTopology& frozen, const DirectionMask& mask,
    const std::array<std::vector<double>, 2>& input_counts,
    const SimulationConfig& config) {
  RelationalTopology topo = frozen;
  DriveCounts(topo, mask, input_counts, config);
  const DenseReluNet net = FromTopology(frozen, mask);
  const Activations acts =
      AnnForward(net, {input_counts[0], input_counts[1]});

  ForwardComparison cmp;
  constexpr std::array<int, kNumPopulations> kDepthByOrder = {0, 0, 1, 1, 2, 3, 4};
  for (std::size_t n = 0; n < mask.order.size(); ++n) {
    const Population p = mask.order[n];
    const PopulationState& st = topo.state(p);
    cmp.depth[Index(p)] = kDepthByOrder[n];
    auto& dev = cmp.deviation[Index(p)];
    dev.resize(st.size());
    for (std::size_t i = 0; i < st.size(); ++i)
      dev[i] = std::abs(st.x[i] / topo.hp.eta - acts.post[n][i]);
  }
  return cmp;
}

GradientComparison CompareGradients(
    const RelationalTopology& frozen, const DirectionMask& mask,
    const std::array<std::vector<double>, 2>& input_counts,
    const std::vector<double>& target_counts, const SimulationConfig& config) {
  RelationalTopology topo = frozen;
  for (Matrix& acc : topo.accumulators) acc.Fill(0.0);
  DriveCounts(topo, mask, input_counts, config);

  PopulationState& out = topo.state(mask.target);
  Require(target_counts.size() == out.size(), ErrorCode::kDimensionMismatch,
          "compare gradients: target size mismatch");
  for (std::size_t i = 0; i < out.size(); ++i)
    out.U[i] = static_cast<double>(out.net_spikes[i]) + out.V[i] - target_counts[i];
  std::vector<std::int8_t> err(out.size(), 0);
  const std::vector<double> none(out.size(), 0.0);
  for (std::int64_t s = 0; s < config.t_bp; ++s) {
    ErrorStep<double>(out, none, topo.hp, err);
    NetworkBackwardStep(topo, mask, err, UpdateMode::kAccumulated);
  }

  const DenseReluNet net = FromTopology(frozen, mask);
  const Activations acts = AnnForward(net, {input_counts[0], input_counts[1]});
  const Gradients grads =
      AnnBackward(net, acts, target_counts, OutputReadout::kPreActivation);

  // Pair every oracle gradient entry with the spiking update of that weight.
  std::vector<std::pair<double, double>> pairs;
  for (std::size_t n = 0; n < net.nodes.size(); ++n) {
    for (std::size_t e = 0; e < net.nodes[n].inputs.size(); ++e) {
      const DirectedEdge d{mask.order[net.nodes[n].inputs[e].source], mask.order[n]};
      const EdgeRef ref = Resolve(d);
      const Matrix& acc = topo.accumulators[static_cast<std::size_t>(ref.edge)];
      const Matrix& g = grads[n][e];
      for (std::size_t q = 0; q < g.rows(); ++q)
        for (std::size_t p = 0; p < g.cols(); ++p) {
          const double update = ref.reversed ? acc(p, q) : acc(q, p);
          pairs.emplace_back(g(q, p), -update / topo.hp.eta);
        }
    }
  }
  std::vector<double> mags;
  for (const auto& [g, s] : pairs) mags.push_back(std::abs(g));
  GradientComparison cmp;
  if (mags.empty()) return cmp;
  std::nth_element(mags.begin(), mags.begin() + mags.size() / 2, mags.end());
  const double median = mags[mags.size() / 2];
  for (const auto& [g, s] : pairs) {
    if (!(std::abs(g) > median)) continue;
    ++cmp.considered;
    if (s == 0) ++cmp.silent;
    if ((g > 0 && s > 0) || (g < 0 && s < 0)) ++cmp.agreeing;
  }
  return cmp;
}

std::vector<CheckResult> RunOracleChecks(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> results;
  auto format = [](double v) {
    std::ostringstream o;
    o << v;
    return o.str();
  };

  {
    // Backprop against central differences on small random chains.
    double worst = 0.0;
    std::uniform_int_distribution<int> width(2, 5);
    std::uniform_real_distribution<double> value(0.0, 12.0);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Matrix> layers;
      std::size_t in = static_cast<std::size_t>(width(rng));
      const std::size_t n_in = in;
      for (int l = 0; l < 3; ++l) {
        const auto out = static_cast<std::size_t>(width(rng));
        layers.push_back(InitWeights(out, in, rng()));
        in = out;
      }
      const DenseReluNet net = MakeChain(layers);
      std::vector<double> x(n_in), t(in);
      for (double& v : x) v = value(rng);
      for (double& v : t) v = value(rng);
      const auto analytic = AnnBackward(net, AnnForward(net, x), t);
      const auto numeric = NumericalGradient(net, {x}, t, 1e-6);
      worst = std::max(worst, MaxRelativeError(analytic, numeric, 1e-3));
    }
    results.push_back({"finite-difference gradient", worst < 1e-5,
                       "max relative error " + format(worst)});
  }

  {
    // Spiking forward totals against the ReLU network.
    SimulationConfig config;
    config.settle_steps = 3 * config.t_expl;
    std::array<double, 5> worst{};
    std::uniform_int_distribution<int> size(1, 20), count(0, 12);
    for (int trial = 0; trial < 50; ++trial) {
      PopulationSizes sizes{};
      for (auto& n : sizes) n = static_cast<std::uint32_t>(size(rng));
      const RelationalTopology topo = Build(sizes, rng());
      const DirectionMask mask = MaskFor(static_cast<Population>(trial % 3));
      std::array<std::vector<double>, 2> in;
      for (std::size_t k = 0; k < 2; ++k)
        for (std::uint32_t i = 0; i < sizes[Index(mask.inputs[k])]; ++i)
          in[k].push_back(count(rng));
      const ForwardComparison cmp = CompareForward(topo, mask, in, config);
      for (Population p : kAllPopulations) {
        const int d = cmp.depth[Index(p)];
        worst[d] = std::max(worst[d], cmp.MaxDeviation(p));
      }
    }
    for (int d = 1; d <= 4; ++d)
      results.push_back({"forward ReLU equivalence depth " + std::to_string(d),
                         worst[d] <= d,
                         "max deviation " + format(worst[d]) + " (bound " +
                             std::to_string(d) + ")"});
  }

  {
    // Gradient sign fidelity with long presentation and error windows.
    SimulationConfig config;
    config.t_expl = 1000;
    config.t_bp = 1000;
    config.settle_steps = 3 * config.t_expl;
    std::uniform_int_distribution<int> size(2, 8), count(0, 120);
    GradientComparison total;
    for (int trial = 0; trial < 50; ++trial) {
      PopulationSizes sizes{};
      for (auto& n : sizes) n = static_cast<std::uint32_t>(size(rng));
      const RelationalTopology topo = Build(sizes, rng(), HyperParamsFrom(config));
      const DirectionMask mask = MaskFor(static_cast<Population>(trial % 3));
      std::array<std::vector<double>, 2> in;
      for (std::size_t k = 0; k < 2; ++k)
        for (std::uint32_t i = 0; i < sizes[Index(mask.inputs[k])]; ++i)
          in[k].push_back(count(rng));
      std::vector<double> target(sizes[Index(mask.target)]);
      for (double& v : target) v = count(rng);
      const GradientComparison cmp = CompareGradients(topo, mask, in, target, config);
      total.considered += cmp.considered;
      total.agreeing += cmp.agreeing;
      total.silent += cmp.silent;
    }
    results.push_back({"gradient sign fidelity", total.agreement() >= 0.9,
                       "agreement " + format(total.agreement()) + " over " +
                           std::to_string(total.considered) + " weights"});
  }
  return results;
}

}  // namespace srn
