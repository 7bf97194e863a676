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

// Deterministic raster engine: one function per attack layer operation plus
// compose(), which applies a whole AttackSpec.
//
// Conventions:
//  - Straight alpha, source-over. Per channel, over an opaque destination,
//    out = round_half_away((a * src + (255 - a) * dst) / 255).
//  - Glyph coverage c scales a color's alpha to round(alpha * c / 255).
//  - Pixel (x, y) has its center at (x + 0.5, y + 0.5).
//  - Positive rotation angles turn counterclockwise as displayed.
// Every operation takes its input by const reference and returns a new
// buffer, so distinct compositions can run concurrently.

#ifndef GLYPHCLASH_COMPOSITOR_H_
#define GLYPHCLASH_COMPOSITOR_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "glyphclash/attack_dsl.h"
#include "glyphclash/image.h"
#include "glyphclash/rng.h"

namespace glyphclash::compositor {

using Pixel = ImageBuffer::Pixel;

// Source-over of a straight-alpha source onto a straight-alpha destination.
Pixel blend_over(Pixel src, Pixel dst);

// round(alpha * coverage / 255), half away from zero.
std::uint8_t scale_alpha(std::uint8_t alpha, std::uint8_t coverage);

// Canvas rectangle a TextOverlay may touch (before clipping to the canvas).
dsl::Rect text_overlay_bounds(const dsl::TextOverlay& layer);

ImageBuffer overlay_text(const ImageBuffer& buf, const dsl::TextOverlay& layer);

// Relative texture paths resolve against asset_root.
ImageBuffer render_image_font(const ImageBuffer& buf,
                              const dsl::ImageFontText& layer,
                              const std::filesystem::path& asset_root = {});

struct SkippedWord {
  int index = 0;  // position in the placement order
  std::string word;
};

struct FloodResult {
  ImageBuffer image;
  std::vector<dsl::Rect> placed;  // word boxes in placement order
  std::vector<SkippedWord> skipped;
};

// Consumes draws from rng in a fixed order: per word one size draw, then an
// (x, y) pair per placement attempt.
FloodResult flood_background(const ImageBuffer& buf, const dsl::FloodText& layer,
                             RngState& rng);

ImageBuffer rotate_canvas(const ImageBuffer& buf, const dsl::Rotation& layer);

ImageBuffer embed_positioned_glyphs(const ImageBuffer& buf,
                                    const dsl::PositionedGlyphs& layer);

// Bilinear resize on pixel centers with edge clamping, interpolating in
// premultiplied space.
ImageBuffer resize_bilinear(const ImageBuffer& src, int width, int height);

ImageBuffer overlay_icon(const ImageBuffer& buf, const dsl::IconOverlay& layer,
                         const std::filesystem::path& asset_root = {});

ImageBuffer color_remap(const ImageBuffer& buf, const dsl::ColorRemap& layer);

ImageBuffer mask_patch(const ImageBuffer& buf, const dsl::MaskPatch& layer);

// Integer Rec.601 luma of the pixel flattened onto white.
std::uint8_t luma_on_white(Pixel p);

// 0/1 foreground bitmap, row-major.
struct Bitmap {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;

  bool at(int x, int y) const {
    return x >= 0 && y >= 0 && x < width && y < height &&
           bits[static_cast<std::size_t>(y) * width + x] != 0;
  }
  bool operator==(const Bitmap&) const = default;
};

// Zhang-Suen thinning; pixels outside the bitmap count as background.
Bitmap zhang_suen_thin(Bitmap input);

// paint_by_numbers draws its initial cluster centers from rng.
ImageBuffer figurative_transform(const ImageBuffer& buf,
                                 const dsl::Figurative& layer, RngState& rng);

struct ComposeOptions {
  std::filesystem::path asset_root;
};

struct Composition {
  ImageBuffer image;
  CompositionMetadata metadata;
  // One entry per FloodText layer, in layer order; their `image` is empty.
  std::vector<FloodResult> floods;
};

// Applies spec.layers in order to `base`. Throws BoundsError listing the
// validate_spec violations if the attack spec does not fit the base image; errors
// raised by a layer carry its index (Error::layer_index()).
Composition compose(const ImageBuffer& base, const dsl::AttackSpec& spec,
                    const ComposeOptions& options = {});

}  // namespace glyphclash::compositor

#endif  // GLYPHCLASH_COMPOSITOR_H_
