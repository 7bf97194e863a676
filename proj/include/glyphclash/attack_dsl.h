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

// Attack taxonomy and the declarative attack-spec format.
//
// An AttackSpec is an ordered list of layer operations applied to a base
// image. Specs are stored as JSON (see docs/attack_spec_schema.md); the
// serialized form is canonical, so a spec's bytes identify the experiment.

#ifndef GLYPHCLASH_ATTACK_DSL_H_
#define GLYPHCLASH_ATTACK_DSL_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "glyphclash/errors.h"

namespace glyphclash::dsl {

enum class Category { kTypography, kConceptual, kImagery, kFigurative };

enum class Variant {
  // typography
  kOov,
  kSynonym,
  kForeign,
  kSpelling,
  kTextFlood,
  kSize,
  kOrientation,
  // conceptual
  kImageFont,
  kAsciiArt,
  kCaptchaWarp,
  // imagery
  kMasked,
  kWordImage,
  kLogo,
  kPaintByNumbers,
  // figurative
  kDotArt,
  kSkeletonized,
};

inline constexpr std::size_t kVariantCount = 16;

std::string_view category_name(Category c);
std::string_view variant_name(Variant v);
std::optional<Category> category_from_name(std::string_view name);
std::optional<Variant> variant_from_name(std::string_view name);

// The one category a variant belongs to.
Category category_of(Variant v);
std::span<const Variant> all_variants();

struct AttackCategory {
  Category category = Category::kTypography;
  Variant variant = Variant::kOov;

  bool operator==(const AttackCategory&) const = default;
};

struct Rgba {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  std::uint8_t a = 255;

  bool operator==(const Rgba&) const = default;
};

struct Point {
  int x = 0;
  int y = 0;

  bool operator==(const Point&) const = default;
};

struct Rect {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  bool operator==(const Rect&) const = default;
};

inline constexpr std::string_view kDefaultFontId = "sans-plain";

struct Warp {
  double amplitude_px = 0;
  double wavelength_px = 1;

  bool operator==(const Warp&) const = default;
};

struct TextOverlay {
  std::string text;
  std::string font_id{kDefaultFontId};
  int size_px = 1;
  Rgba color;
  std::optional<Rgba> outline;
  Point anchor;
  double rotation_deg = 0;
  std::optional<Warp> warp;

  bool operator==(const TextOverlay&) const = default;
};

enum class ImageFontMode { kFill, kDecorate };

struct ImageFontText {
  std::string text;
  std::string texture;
  std::optional<std::vector<std::string>> per_glyph_textures;
  std::string font_id{kDefaultFontId};
  int size_px = 1;
  Point anchor;
  ImageFontMode mode = ImageFontMode::kFill;

  bool operator==(const ImageFontText&) const = default;
};

struct FloodText {
  std::vector<std::string> words;
  int count = 1;
  std::array<int, 2> size_px_range{1, 1};
  Rgba color;
  bool collision_free = false;
  std::string font_id{kDefaultFontId};

  bool operator==(const FloodText&) const = default;
};

struct IconOverlay {
  std::string icon;
  Point anchor;
  double scale = 1;
  std::optional<Rgba> tint;

  bool operator==(const IconOverlay&) const = default;
};

enum class Resample { kNearest, kBilinear };

struct Rotation {
  double degrees = 0;
  Resample resample = Resample::kNearest;

  bool operator==(const Rotation&) const = default;
};

struct PlacedGlyph {
  std::string character;  // exactly one UTF-8 code point
  int x = 0;
  int y = 0;
  int size_px = 1;
  Rgba color;

  bool operator==(const PlacedGlyph&) const = default;
};

struct PositionedGlyphs {
  std::vector<PlacedGlyph> glyphs;
  std::string font_id{kDefaultFontId};

  bool operator==(const PositionedGlyphs&) const = default;
};

enum class PatchShape { kRect, kEllipse };

struct MaskPatch {
  PatchShape shape = PatchShape::kRect;
  Rect bounds;
  Rgba fill;

  bool operator==(const MaskPatch&) const = default;
};

struct PaletteRule {
  Rgba from;
  Rgba to;

  bool operator==(const PaletteRule&) const = default;
};

struct ColorRemap {
  std::vector<PaletteRule> palette;
  double tolerance = 0;

  bool operator==(const ColorRemap&) const = default;
};

struct AsciiArtParams {
  int cell_px = 8;
  std::string charset;  // ordered dark to light
  std::string font_id{kDefaultFontId};

  bool operator==(const AsciiArtParams&) const = default;
};

struct DotArtParams {
  int spacing = 4;
  int threshold = 128;

  bool operator==(const DotArtParams&) const = default;
};

struct SkeletonParams {
  int threshold = 128;

  bool operator==(const SkeletonParams&) const = default;
};

struct PaintByNumbersParams {
  int k = 4;
  int digit_px = 10;

  bool operator==(const PaintByNumbersParams&) const = default;
};

using FigurativeParams =
    std::variant<AsciiArtParams, DotArtParams, SkeletonParams,
                 PaintByNumbersParams>;

// The variant alternative selects the kind.
struct Figurative {
  FigurativeParams params;

  bool operator==(const Figurative&) const = default;
};

using LayerOp =
    std::variant<TextOverlay, ImageFontText, FloodText, IconOverlay, Rotation,
                 PositionedGlyphs, MaskPatch, ColorRemap, Figurative>;

// Name used as the "op" tag in JSON.
std::string_view layer_op_name(const LayerOp& op);

struct AttackSpec {
  std::string id;
  AttackCategory category;
  std::string base_image;
  std::vector<LayerOp> layers;
  std::uint64_t seed = 0;
  std::optional<std::string> target_label;
  std::optional<std::string> notes;

  bool operator==(const AttackSpec&) const = default;
};

struct SweepSpec {
  AttackSpec base;
  std::string param_path;
  std::vector<double> values;

  bool operator==(const SweepSpec&) const = default;
};

// Maps any angle into [0, 360).
double normalize_degrees(double degrees);

// Canvas size after rotating a w x h canvas about its center and expanding
// to the axis-aligned bounding box.
std::array<int, 2> rotated_canvas_size(int width, int height, double degrees);

// Parsing and serialization. parse_spec throws SyntaxError, SchemaError or
// BoundsError; serialize_spec always succeeds for a spec that parse_spec
// would accept.
AttackSpec parse_spec(std::string_view doc);
std::string serialize_spec(const AttackSpec& spec);

SweepSpec parse_sweep(std::string_view doc);
std::string serialize_sweep(const SweepSpec& sweep);

struct Violation {
  // Index of the offending layer, or nullopt for spec-level rules.
  std::optional<std::size_t> layer;
  std::string rule;

  bool operator==(const Violation&) const = default;
};

std::string to_string(const Violation& v);

// Empty iff the attack spec can be composed onto a canvas of the given size.
std::vector<Violation> validate_spec(const AttackSpec& spec, int canvas_w,
                                     int canvas_h);

// Non-fatal findings, e.g. characters the chosen font has no glyph for
// (they render as a replacement box).
std::vector<Violation> lint_spec(const AttackSpec& spec);

// One spec per value, in order. Throws PathError when param_path does not
// name a numeric field of base; SchemaError/BoundsError when a value does not
// fit the field.
std::vector<AttackSpec> expand_sweep(const SweepSpec& sweep);

// The id suffix expand_sweep appends for a value, e.g. "@24" or "@0.5".
std::string sweep_value_suffix(double value);

}  // namespace glyphclash::dsl

#endif  // GLYPHCLASH_ATTACK_DSL_H_
