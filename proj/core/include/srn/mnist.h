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

#ifndef SRN_MNIST_H_
#define SRN_MNIST_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace srn {

inline constexpr std::uint32_t kIdxImageMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelMagic = 0x00000801;

// Images stored as the raw unsigned bytes of the IDX payload; Pixels()
// returns them scaled to [0, 1].
class LabeledImageSet {
 public:
  LabeledImageSet() = default;
  LabeledImageSet(std::size_t rows, std::size_t cols,
                  std::vector<std::uint8_t> pixel_bytes,
                  std::vector<std::uint8_t> labels);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t pixels_per_image() const { return rows_ * cols_; }

  std::uint8_t label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::uint8_t>& labels() const { return labels_; }
  std::span<const std::uint8_t> raw_image(std::size_t i) const;
  std::vector<double> Pixels(std::size_t i) const;

  const std::vector<std::uint8_t>& pixel_bytes() const { return pixels_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> pixels_;
  std::vector<std::uint8_t> labels_;
};

// Parses a big-endian IDX image/label file pair. Errors: kIo (unreadable),
// kBadMagic, kTruncated, kCountMismatch.
LabeledImageSet LoadIdx(const std::string& images_path,
                        const std::string& labels_path);

// Byte-exact IDX encodings of a set (header followed by payload).
std::vector<std::uint8_t> SerializeIdxImages(const LabeledImageSet& set);
std::vector<std::uint8_t> SerializeIdxLabels(const LabeledImageSet& set);
void WriteIdx(const LabeledImageSet& set, const std::string& images_path,
              const std::string& labels_path);

// Keeps labels 0 and 1 in their original order; kEmptyResult if none remain.
LabeledImageSet FilterBinary(const LabeledImageSet& set);

// Official file names inside an MNIST directory.
struct MnistPaths {
  std::string train_images, train_labels, test_images, test_labels;
};
MnistPaths MnistFiles(const std::string& dir);

}  // namespace srn

#endif  // SRN_MNIST_H_
