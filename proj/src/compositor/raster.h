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


// Shared internals of the layer operations. Each public op in
// glyphclash/compositor.h wraps one apply_* function; compose() drives the
// same functions on a Canvas that also tracks which pixels carry text.

#ifndef GLYPHCLASH_SRC_COMPOSITOR_RASTER_H_
#define GLYPHCLASH_SRC_COMPOSITOR_RASTER_H_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "glyphclash/attack_dsl.h"
#include "glyphclash/compositor.h"
#include "glyphclash/image.h"
#include "glyphclash/rng.h"

namespace glyphclash::compositor::internal {

// Integer division rounded half away from zero, for non-negative operands.
inline std::uint64_t round_div(std::uint64_t num, std::uint64_t den) {
  return (2 * num + den) / (2 * den);
}

inline std::uint8_t round_to_byte(double v) {
  if (!(v > 0)) return 0;
  if (v >= 255) return 255;
  return static_cast<std::uint8_t>(std::floor(v + 0.5));
}

inline int round_half_away(double v) {
  return static_cast<int>(v < 0 ? -std::floor(-v + 0.5) : std::floor(v + 0.5));
}

inline int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Who owns a pixel's visible ink.
enum InkOwner : std::uint8_t { kInkNone = 0, kInkText = 1, kInkFlood = 2 };

// What a paint does to the ink plane.
enum class InkEffect {
  kKeep,     // leave ownership alone
  kText,     // any visible paint claims the pixel for the target text
  kFlood,    // same, for distractor text
  kOcclude,  // an opaque paint removes any text ink below it
};

class Canvas {
 public:
  explicit Canvas(ImageBuffer image, bool track_ink = false);

  int width() const { return image.width(); }
  int height() const { return image.height(); }

  // Source-over of `src` (alpha already scaled by coverage) at (x, y).
  // Off-canvas coordinates are ignored.
  void paint(int x, int y, Pixel src, InkEffect effect);

  std::uint64_t count_ink(InkOwner owner) const;

  ImageBuffer image;
  bool tracking = false;
  std::vector<std::uint8_t> ink;  // one InkOwner per pixel when tracking
};

// Single-channel 8-bit plane, zero outside its bounds.
struct Plane {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> v;

  Plane() = default;
  Plane(int w, int h) : width(w), height(h), v(static_cast<std::size_t>(w) * h, 0) {}

  std::uint8_t at(int x, int y) const {
    if (x < 0 || y < 0 || x >= width || y >= height) return 0;
    return v[static_cast<std::size_t>(y) * width + x];
  }
  std::uint8_t& ref(int x, int y) {
    return v[static_cast<std::size_t>(y) * width + x];
  }
};

// Nearest-neighbour inverse map of a rotation about the canvas center into
// the expanded bounding box. src_index is -1 where the output pixel falls
// outside the source. Quarter turns use exact index arithmetic.
struct RotationMap {
  int out_w = 0;
  int out_h = 0;
  std::vector<std::int64_t> src_index;
};
RotationMap nearest_rotation_map(int w, int h, double degrees);

// True for angles (after normalization) that are multiples of 90.
bool is_quarter_turn(double degrees);

// Rotates a coverage plane about its center with nearest sampling.
Plane rotate_plane(const Plane& plane, double degrees);

std::filesystem::path resolve_asset(const std::filesystem::path& root,
                                    const std::string& path);

void apply_text(Canvas& canvas, const dsl::TextOverlay& layer);
void apply_image_font(Canvas& canvas, const dsl::ImageFontText& layer,
                      const std::filesystem::path& asset_root);
void apply_flood(Canvas& canvas, const dsl::FloodText& layer, RngState& rng,
                 FloodResult* report);
void apply_positioned(Canvas& canvas, const dsl::PositionedGlyphs& layer);
void apply_icon(Canvas& canvas, const dsl::IconOverlay& layer,
                const std::filesystem::path& asset_root);
void apply_patch(Canvas& canvas, const dsl::MaskPatch& layer);
void apply_remap(Canvas& canvas, const dsl::ColorRemap& layer);
Canvas apply_rotation(const Canvas& canvas, const dsl::Rotation& layer);
Canvas apply_figurative(const Canvas& canvas, const dsl::Figurative& layer,
                        RngState& rng);

}  // namespace glyphclash::compositor::internal

#endif  // GLYPHCLASH_SRC_COMPOSITOR_RASTER_H_
