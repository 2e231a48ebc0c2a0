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

#include "srn/checkpoint.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string_view>

#include "srn/error.h"

namespace srn {

namespace {

void PutU32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
}

void PutF64(std::vector<std::uint8_t>& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int b = 0; b < 8; ++b)
    out.push_back(static_cast<std::uint8_t>(bits >> (8 * b)));
}

class Reader {
 public:
  explicit Reader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

  void Need(std::size_t n) const {
    if (pos_ + n > bytes_.size())
      Fail(ErrorCode::kTruncated, "checkpoint: file truncated");
  }
  std::uint32_t U32() {
    Need(4);
    std::uint32_t v = 0;
    for (int b = 0; b < 4; ++b) v |= std::uint32_t{bytes_[pos_++]} << (8 * b);
    return v;
  }
  double F64() {
    Need(8);
    std::uint64_t v = 0;
    for (int b = 0; b < 8; ++b) v |= std::uint64_t{bytes_[pos_++]} << (8 * b);
    return std::bit_cast<double>(v);
  }
  std::string_view Bytes(std::size_t n) {
    Need(n);
    std::string_view s(reinterpret_cast<const char*>(bytes_.data()) + pos_, n);
    pos_ += n;
    return s;
  }
  bool AtEnd() const { return pos_ == bytes_.size(); }

 private:
  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> SerializeCheckpoint(const RelationalTopology& topo,
                                              const SimulationConfig& config) {
  std::vector<std::uint8_t> out(std::begin(kCheckpointMagic),
                                std::end(kCheckpointMagic));
  PutU32(out, kCheckpointVersion);
  for (auto n : topo.sizes) PutU32(out, n);
  for (const Matrix& w : topo.weights)
    for (double v : w.data()) PutF64(out, v);
  SimulationConfig stored = config;
  stored.sizes = topo.sizes;
  const std::string text = ToConfigText(stored);
  PutU32(out, static_cast<std::uint32_t>(text.size()));
  out.insert(out.end(), text.begin(), text.end());
  return out;
}

Checkpoint ParseCheckpoint(const std::vector<std::uint8_t>& bytes) {
  Reader in(bytes);
  if (bytes.size() < 4 ||
      std::memcmp(bytes.data(), kCheckpointMagic, sizeof(kCheckpointMagic)) != 0)
    Fail(ErrorCode::kCorruptHeader, "checkpoint: corrupt header (bad magic)");
  in.Bytes(4);
  const std::uint32_t version = in.U32();
  if (version != kCheckpointVersion)
    Fail(ErrorCode::kVersionMismatch,
         "checkpoint: version " + std::to_string(version) + " unsupported");
  PopulationSizes sizes{};
  for (auto& n : sizes) {
    n = in.U32();
    if (n == 0) Fail(ErrorCode::kCorruptHeader, "checkpoint: zero population size");
  }

  Checkpoint ck;
  // Weights are overwritten below; the seed is irrelevant.
  ck.topology = Build(sizes, 0);
  for (Matrix& w : ck.topology.weights) {
    in.Need(w.size() * 8);
    for (double& v : w.data()) v = in.F64();
  }
  const std::uint32_t text_len = in.U32();
  const std::string_view text = in.Bytes(text_len);
  ApplyConfigText(ck.config, text);
  if (ck.config.sizes != sizes)
    Fail(ErrorCode::kCorruptHeader,
         "checkpoint: config sizes disagree with header");
  if (!in.AtEnd())
    Fail(ErrorCode::kCorruptHeader, "checkpoint: trailing bytes");
  ck.topology.hp = HyperParamsFrom(ck.config);
  return ck;
}

void SaveCheckpoint(const RelationalTopology& topo,
                    const SimulationConfig& config, const std::string& path) {
  const auto bytes = SerializeCheckpoint(topo, config);
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorCode::kIo, "checkpoint: cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) Fail(ErrorCode::kIo, "checkpoint: write failed for " + path);
}

Checkpoint LoadCheckpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "checkpoint: cannot open " + path);
  const std::vector<std::uint8_t> bytes(std::istreambuf_iterator<char>(in), {});
  return ParseCheckpoint(bytes);
}

void RequireSizes(const Checkpoint& checkpoint, const PopulationSizes& expected) {
  if (checkpoint.topology.sizes != expected)
    Fail(ErrorCode::kSizeMismatch,
         "checkpoint: population sizes do not match this task");
}

}  // namespace srn
