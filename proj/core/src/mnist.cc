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

#include "srn/mnist.h"

#include <fstream>
#include <iterator>

#include "srn/error.h"

namespace srn {

namespace {

std::vector<std::uint8_t> ReadAll(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "idx: cannot open " + path);
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), {});
}

std::uint32_t ReadBigEndian(const std::vector<std::uint8_t>& bytes,
                            std::size_t offset, const std::string& path) {
  if (bytes.size() < offset + 4)
    Fail(ErrorCode::kTruncated, "idx: header truncated in " + path);
  return (std::uint32_t{bytes[offset]} << 24) |
         (std::uint32_t{bytes[offset + 1]} << 16) |
         (std::uint32_t{bytes[offset + 2]} << 8) | std::uint32_t{bytes[offset + 3]};
}

void AppendBigEndian(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void WriteBytes(const std::vector<std::uint8_t>& bytes, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorCode::kIo, "idx: cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

LabeledImageSet::LabeledImageSet(std::size_t rows, std::size_t cols,
                                 std::vector<std::uint8_t> pixel_bytes,
                                 std::vector<std::uint8_t> labels)
    : rows_(rows),
      cols_(cols),
      pixels_(std::move(pixel_bytes)),
      labels_(std::move(labels)) {
  Require(pixels_.size() == labels_.size() * rows_ * cols_,
          ErrorCode::kCountMismatch, "image set: pixel and label counts differ");
}

std::span<const std::uint8_t> LabeledImageSet::raw_image(std::size_t i) const {
  const std::size_t n = pixels_per_image();
  return {pixels_.data() + i * n, n};
}

std::vector<double> LabeledImageSet::Pixels(std::size_t i) const {
  const auto raw = raw_image(i);
  std::vector<double> out(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k) out[k] = raw[k] / 255.0;
  return out;
}

LabeledImageSet LoadIdx(const std::string& images_path,
                        const std::string& labels_path) {
  const auto img = ReadAll(images_path);
  const auto lab = ReadAll(labels_path);

  if (ReadBigEndian(img, 0, images_path) != kIdxImageMagic)
    Fail(ErrorCode::kBadMagic, "idx: bad magic in " + images_path);
  if (ReadBigEndian(lab, 0, labels_path) != kIdxLabelMagic)
    Fail(ErrorCode::kBadMagic, "idx: bad magic in " + labels_path);

  const std::size_t n_images = ReadBigEndian(img, 4, images_path);
  const std::size_t rows = ReadBigEndian(img, 8, images_path);
  const std::size_t cols = ReadBigEndian(img, 12, images_path);
  const std::size_t n_labels = ReadBigEndian(lab, 4, labels_path);

  if (img.size() < 16 + n_images * rows * cols)
    Fail(ErrorCode::kTruncated, "idx: image payload truncated in " + images_path);
  if (lab.size() < 8 + n_labels)
    Fail(ErrorCode::kTruncated, "idx: label payload truncated in " + labels_path);
  if (n_images != n_labels)
    Fail(ErrorCode::kCountMismatch, "idx: " + std::to_string(n_images) +
                                        " images but " +
                                        std::to_string(n_labels) + " labels");

  std::vector<std::uint8_t> pixels(img.begin() + 16,
                                   img.begin() + 16 + n_images * rows * cols);
  std::vector<std::uint8_t> labels(lab.begin() + 8, lab.begin() + 8 + n_labels);
  return LabeledImageSet(rows, cols, std::move(pixels), std::move(labels));
}

std::vector<std::uint8_t> SerializeIdxImages(const LabeledImageSet& set) {
  std::vector<std::uint8_t> out;
  out.reserve(16 + set.pixel_bytes().size());
  AppendBigEndian(out, kIdxImageMagic);
  AppendBigEndian(out, static_cast<std::uint32_t>(set.size()));
  AppendBigEndian(out, static_cast<std::uint32_t>(set.rows()));
  AppendBigEndian(out, static_cast<std::uint32_t>(set.cols()));
  out.insert(out.end(), set.pixel_bytes().begin(), set.pixel_bytes().end());
  return out;
}

std::vector<std::uint8_t> SerializeIdxLabels(const LabeledImageSet& set) {
  std::vector<std::uint8_t> out;
  out.reserve(8 + set.size());
  AppendBigEndian(out, kIdxLabelMagic);
  AppendBigEndian(out, static_cast<std::uint32_t>(set.size()));
  out.insert(out.end(), set.labels().begin(), set.labels().end());
  return out;
}

void WriteIdx(const LabeledImageSet& set, const std::string& images_path,
              const std::string& labels_path) {
  WriteBytes(SerializeIdxImages(set), images_path);
  WriteBytes(SerializeIdxLabels(set), labels_path);
}

LabeledImageSet FilterBinary(const LabeledImageSet& set) {
  std::vector<std::uint8_t> pixels;
  std::vector<std::uint8_t> labels;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set.label(i) > 1) continue;
    const auto raw = set.raw_image(i);
    pixels.insert(pixels.end(), raw.begin(), raw.end());
    labels.push_back(set.label(i));
  }
  if (labels.empty())
    Fail(ErrorCode::kEmptyResult, "filter: no images labelled 0 or 1");
  return LabeledImageSet(set.rows(), set.cols(), std::move(pixels),
                         std::move(labels));
}

MnistPaths MnistFiles(const std::string& dir) {
  return {dir + "/train-images-idx3-ubyte", dir + "/train-labels-idx1-ubyte",
          dir + "/t10k-images-idx3-ubyte", dir + "/t10k-labels-idx1-ubyte"};
}

}  // namespace srn
