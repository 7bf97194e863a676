// Copyright 2026 The Glyphclash Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GLYPHCLASH_IMAGE_H_
#define GLYPHCLASH_IMAGE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace glyphclash {

// Row-major RGBA8 raster with straight (non-premultiplied) alpha.
class ImageBuffer {
 public:
  using Pixel = std::array<std::uint8_t, 4>;

  ImageBuffer() = default;
  // Fills with `fill`. Throws BoundsError for negative or oversized dims.
  ImageBuffer(int width, int height, Pixel fill = {0, 0, 0, 0});
  // Takes ownership of `pixels`, which must hold width * height * 4 bytes.
  ImageBuffer(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return width_ == 0 || height_ == 0; }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  }

  bool contains(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  Pixel at(int x, int y) const {
    const std::uint8_t* p = &pixels_[offset(x, y)];
    return {p[0], p[1], p[2], p[3]};
  }
  void set(int x, int y, Pixel px) {
    std::uint8_t* p = &pixels_[offset(x, y)];
    p[0] = px[0];
    p[1] = px[1];
    p[2] = px[2];
    p[3] = px[3];
  }

  std::span<const std::uint8_t> bytes() const { return pixels_; }
  std::span<std::uint8_t> mutable_bytes() { return pixels_; }

  bool operator==(const ImageBuffer&) const = default;

 private:
  std::size_t offset(int x, int y) const {
    return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
            static_cast<std::size_t>(x)) *
           4;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

// Provenance attached to composed images: how many canvas pixels carry the
// attack text and the flood distractor text. Travels inside the PNG as a
// tEXt chunk so out-of-process classifiers see what in-process ones see.
struct CompositionMetadata {
  std::uint64_t text_ink_px = 0;
  std::uint64_t flood_ink_px = 0;
  std::optional<std::string> target_label;

  bool operator==(const CompositionMetadata&) const = default;
};

struct DecodedPng {
  ImageBuffer image;
  std::optional<CompositionMetadata> metadata;
};

// Fixed encoder settings (no interlace, filter None, zlib level 9, no
// timestamps), so identical inputs give identical bytes. Metadata equal to
// CompositionMetadata{} is not written.
std::string encode_png(const ImageBuffer& image,
                       const CompositionMetadata* metadata = nullptr);
// Any PNG libpng understands is accepted and converted to RGBA8; images
// without alpha get alpha 255. Throws DecodeError.
DecodedPng decode_png(std::string_view bytes);

// Throws IoError or DecodeError.
ImageBuffer load_image(const std::filesystem::path& path);
DecodedPng load_png_file(const std::filesystem::path& path);
// Throws IoError.
void save_image(const ImageBuffer& image, const std::filesystem::path& path,
                const CompositionMetadata* metadata = nullptr);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view data);

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

std::string base64_encode(std::string_view data);
// Throws DecodeError on malformed input.
std::string base64_decode(std::string_view text);

}  // namespace glyphclash

#endif  // GLYPHCLASH_IMAGE_H_
