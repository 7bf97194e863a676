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

#include "glyphclash/attack_dsl.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "attack_dsl/json_codec.h"
#include "glyphclash/font.h"

namespace glyphclash::dsl {
namespace {

struct VariantRow {
  Variant variant;
  Category category;
  std::string_view name;
};

// Category/variant pairing. Each variant appears exactly once.
constexpr std::array<VariantRow, kVariantCount> kVariantTable = {{
    {Variant::kOov, Category::kTypography, "oov"},
    {Variant::kSynonym, Category::kTypography, "synonym"},
    {Variant::kForeign, Category::kTypography, "foreign"},
    {Variant::kSpelling, Category::kTypography, "spelling"},
    {Variant::kTextFlood, Category::kTypography, "text_flood"},
    {Variant::kSize, Category::kTypography, "size"},
    {Variant::kOrientation, Category::kTypography, "orientation"},
    {Variant::kImageFont, Category::kConceptual, "image_font"},
    {Variant::kAsciiArt, Category::kConceptual, "ascii_art"},
    {Variant::kCaptchaWarp, Category::kConceptual, "captcha_warp"},
    {Variant::kMasked, Category::kImagery, "masked"},
    {Variant::kWordImage, Category::kImagery, "word_image"},
    {Variant::kLogo, Category::kImagery, "logo"},
    {Variant::kPaintByNumbers, Category::kImagery, "paint_by_numbers"},
    {Variant::kDotArt, Category::kFigurative, "dot_art"},
    {Variant::kSkeletonized, Category::kFigurative, "skeletonized"},
}};

constexpr std::array<std::pair<Category, std::string_view>, 4> kCategoryNames = {{
    {Category::kTypography, "typography"},
    {Category::kConceptual, "conceptual"},
    {Category::kImagery, "imagery"},
    {Category::kFigurative, "figurative"},
}};

constexpr std::array<Variant, kVariantCount> kAllVariants = [] {
  std::array<Variant, kVariantCount> out{};
  for (std::size_t i = 0; i < kVariantCount; ++i) out[i] = kVariantTable[i].variant;
  return out;
}();

constexpr int kMaxSizePx = 4096;
constexpr int kMaxFloodCount = 100000;
constexpr double kMaxIconScale = 64.0;

std::size_t code_point_count(std::string_view s, bool* valid) {
  std::u32string decoded;
  *valid = font::decode_utf8(s, &decoded);
  return decoded.size();
}

std::size_t non_whitespace_count(std::string_view s) {
  std::u32string decoded;
  if (!font::decode_utf8(s, &decoded)) return 0;
  return static_cast<std::size_t>(std::count_if(
      decoded.begin(), decoded.end(), [](char32_t c) {
        return !(c == U' ' || c == U'\t' || c == U'\n' || c == U'\r');
      }));
}

class Rules {
 public:
  explicit Rules(std::vector<Violation>* out) : out_(out) {}

  void at(std::optional<std::size_t> layer) { layer_ = layer; }
  void check(bool ok, std::string rule) {
    if (!ok) out_->push_back({layer_, std::move(rule)});
  }

 private:
  std::vector<Violation>* out_;
  std::optional<std::size_t> layer_;
};

void check_text(Rules& r, std::string_view text, std::string_view field) {
  bool valid = true;
  const std::size_t n = code_point_count(text, &valid);
  r.check(valid, std::string(field) + " must be valid UTF-8");
  r.check(n > 0, std::string(field) + " must be non-empty");
}

void check_font(Rules& r, const std::string& font_id) {
  r.check(font::has_font(font_id), "unknown font_id '" + font_id + "'");
}

void check_size(Rules& r, int size_px, std::string_view field = "size_px") {
  r.check(size_px >= 1, std::string(field) + " must be >= 1");
  r.check(size_px <= kMaxSizePx,
          std::string(field) + " must be <= " + std::to_string(kMaxSizePx));
}

void check_point(Rules& r, Point p, std::string_view field) {
  r.check(p.x >= 0, std::string(field) + " x must be >= 0");
  r.check(p.y >= 0, std::string(field) + " y must be >= 0");
}

// Rules that do not depend on the canvas.
struct IntrinsicChecker {
  Rules& r;

  void operator()(const TextOverlay& l) const {
    check_text(r, l.text, "text");
    check_font(r, l.font_id);
    check_size(r, l.size_px);
    check_point(r, l.anchor, "anchor");
    r.check(std::isfinite(l.rotation_deg), "rotation_deg must be finite");
    if (l.warp) {
      r.check(std::isfinite(l.warp->amplitude_px) && l.warp->amplitude_px >= 0,
              "warp amplitude_px must be >= 0");
      r.check(l.warp->amplitude_px <= kMaxSizePx,
              "warp amplitude_px must be <= " + std::to_string(kMaxSizePx));
      r.check(std::isfinite(l.warp->wavelength_px) && l.warp->wavelength_px > 0,
              "warp wavelength_px must be > 0");
    }
  }
  void operator()(const ImageFontText& l) const {
    check_text(r, l.text, "text");
    r.check(!l.texture.empty(), "texture must be non-empty");
    check_font(r, l.font_id);
    check_size(r, l.size_px);
    check_point(r, l.anchor, "anchor");
    if (l.per_glyph_textures) {
      r.check(l.per_glyph_textures->size() == non_whitespace_count(l.text),
              "per_glyph_textures count must equal the non-whitespace glyph "
              "count");
      for (const auto& t : *l.per_glyph_textures) {
        r.check(!t.empty(), "per_glyph_textures entries must be non-empty");
      }
    }
  }
  void operator()(const FloodText& l) const {
    r.check(!l.words.empty(), "words must be non-empty");
    for (const auto& w : l.words) check_text(r, w, "words entry");
    r.check(l.count >= 1, "count must be >= 1");
    r.check(l.count <= kMaxFloodCount,
            "count must be <= " + std::to_string(kMaxFloodCount));
    check_size(r, l.size_px_range[0], "size_px_range min");
    check_size(r, l.size_px_range[1], "size_px_range max");
    r.check(l.size_px_range[0] <= l.size_px_range[1],
            "size_px_range min must be <= max");
    check_font(r, l.font_id);
  }
  void operator()(const IconOverlay& l) const {
    r.check(!l.icon.empty(), "icon must be non-empty");
    check_point(r, l.anchor, "anchor");
    r.check(std::isfinite(l.scale) && l.scale > 0, "scale must be > 0");
    r.check(l.scale <= kMaxIconScale, "scale must be <= 64");
  }
  void operator()(const Rotation& l) const {
    r.check(std::isfinite(l.degrees), "degrees must be finite");
  }
  void operator()(const PositionedGlyphs& l) const {
    check_font(r, l.font_id);
    for (std::size_t i = 0; i < l.glyphs.size(); ++i) {
      const PlacedGlyph& g = l.glyphs[i];
      const std::string prefix = "glyphs[" + std::to_string(i) + "] ";
      bool valid = true;
      const std::size_t n = code_point_count(g.character, &valid);
      r.check(valid && n == 1, prefix + "char must be exactly one code point");
      check_size(r, g.size_px, prefix + "size_px");
      r.check(g.x >= 0, prefix + "x must be >= 0");
      r.check(g.y >= 0, prefix + "y must be >= 0");
    }
  }
  void operator()(const MaskPatch& l) const {
    r.check(l.bounds.x >= 0, "bounds x must be >= 0");
    r.check(l.bounds.y >= 0, "bounds y must be >= 0");
    r.check(l.bounds.w >= 0, "bounds w must be >= 0");
    r.check(l.bounds.h >= 0, "bounds h must be >= 0");
  }
  void operator()(const ColorRemap& l) const {
    r.check(std::isfinite(l.tolerance) && l.tolerance >= 0,
            "tolerance must be >= 0");
  }
  void operator()(const Figurative& l) const {
    std::visit(
        [this](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, AsciiArtParams>) {
            r.check(p.cell_px >= 2, "ascii_art cell_px must be >= 2");
            r.check(p.cell_px <= kMaxSizePx, "ascii_art cell_px too large");
            check_text(r, p.charset, "ascii_art charset");
            check_font(r, p.font_id);
          } else if constexpr (std::is_same_v<T, DotArtParams>) {
            r.check(p.spacing >= 2, "dot_art spacing must be >= 2");
            r.check(p.spacing <= kMaxSizePx, "dot_art spacing too large");
            r.check(p.threshold >= 0 && p.threshold <= 255,
                    "dot_art threshold must be in 0..255");
          } else if constexpr (std::is_same_v<T, SkeletonParams>) {
            r.check(p.threshold >= 0 && p.threshold <= 255,
                    "skeletonized threshold must be in 0..255");
          } else {
            r.check(p.k >= 2 && p.k <= 16,
                    "paint_by_numbers k must be in 2..16");
            check_size(r, p.digit_px, "paint_by_numbers digit_px");
          }
        },
        l.params);
  }
};

void intrinsic_violations(const AttackSpec& spec, Rules& r) {
  r.at(std::nullopt);
  r.check(!spec.id.empty(), "id must be non-empty");
  r.check(!spec.layers.empty(), "layers must be non-empty");
  r.check(category_of(spec.category.variant) == spec.category.category,
          "variant '" + std::string(variant_name(spec.category.variant)) +
              "' does not belong to category '" +
              std::string(category_name(spec.category.category)) + "'");
  for (std::size_t i = 0; i < spec.layers.size(); ++i) {
    r.at(i);
    std::visit(IntrinsicChecker{r}, spec.layers[i]);
  }
}

}  // namespace

std::string_view category_name(Category c) {
  for (const auto& [cat, name] : kCategoryNames) {
    if (cat == c) return name;
  }
  return "?";
}

std::string_view variant_name(Variant v) {
  for (const auto& row : kVariantTable) {
    if (row.variant == v) return row.name;
  }
  return "?";
}

std::optional<Category> category_from_name(std::string_view name) {
  for (const auto& [cat, n] : kCategoryNames) {
    if (n == name) return cat;
  }
  return std::nullopt;
}

std::optional<Variant> variant_from_name(std::string_view name) {
  for (const auto& row : kVariantTable) {
    if (row.name == name) return row.variant;
  }
  return std::nullopt;
}

Category category_of(Variant v) {
  for (const auto& row : kVariantTable) {
    if (row.variant == v) return row.category;
  }
  return Category::kTypography;
}

std::span<const Variant> all_variants() { return kAllVariants; }

std::string_view layer_op_name(const LayerOp& op) {
  static constexpr std::array<std::string_view, 9> kNames = {
      "TextOverlay",      "ImageFontText", "FloodText",
      "IconOverlay",      "Rotation",      "PositionedGlyphs",
      "MaskPatch",        "ColorRemap",    "Figurative"};
  return kNames[op.index()];
}

double normalize_degrees(double degrees) {
  double d = std::fmod(degrees, 360.0);
  if (d < 0) d += 360.0;
  if (d >= 360.0 || d == 0.0) d = 0.0;  // also folds -0.0
  return d;
}

std::array<int, 2> rotated_canvas_size(int width, int height, double degrees) {
  const double d = normalize_degrees(degrees);
  if (d == 0.0 || d == 180.0) return {width, height};
  if (d == 90.0 || d == 270.0) return {height, width};
  const double rad = d * std::numbers::pi / 180.0;
  const double c = std::abs(std::cos(rad));
  const double s = std::abs(std::sin(rad));
  // The epsilon keeps exact integers (up to rounding noise) from growing.
  constexpr double kEps = 1e-9;
  const int w = static_cast<int>(std::ceil(width * c + height * s - kEps));
  const int h = static_cast<int>(std::ceil(width * s + height * c - kEps));
  return {std::max(w, 1), std::max(h, 1)};
}

std::string to_string(const Violation& v) {
  if (v.layer) return "layer " + std::to_string(*v.layer) + ": " + v.rule;
  return v.rule;
}

std::vector<Violation> validate_spec(const AttackSpec& spec, int canvas_w,
                                     int canvas_h) {
  std::vector<Violation> out;
  Rules r(&out);
  r.at(std::nullopt);
  r.check(canvas_w >= 1 && canvas_h >= 1, "canvas must be non-empty");
  intrinsic_violations(spec, r);
  if (canvas_w < 1 || canvas_h < 1) return out;

  int w = canvas_w;
  int h = canvas_h;
  for (std::size_t i = 0; i < spec.layers.size(); ++i) {
    r.at(i);
    const LayerOp& op = spec.layers[i];
    auto anchor_in = [&](Point p, const std::string& field) {
      r.check(p.x < w, field + " x out of bounds");
      r.check(p.y < h, field + " y out of bounds");
    };
    if (const auto* t = std::get_if<TextOverlay>(&op)) {
      anchor_in(t->anchor, "anchor");
    } else if (const auto* f = std::get_if<ImageFontText>(&op)) {
      anchor_in(f->anchor, "anchor");
    } else if (const auto* ic = std::get_if<IconOverlay>(&op)) {
      anchor_in(ic->anchor, "anchor");
    } else if (const auto* pg = std::get_if<PositionedGlyphs>(&op)) {
      for (std::size_t g = 0; g < pg->glyphs.size(); ++g) {
        anchor_in({pg->glyphs[g].x, pg->glyphs[g].y},
                  "glyphs[" + std::to_string(g) + "] position");
      }
    } else if (const auto* m = std::get_if<MaskPatch>(&op)) {
      r.check(static_cast<long long>(m->bounds.x) + m->bounds.w <= w,
              "bounds exceed canvas width");
      r.check(static_cast<long long>(m->bounds.y) + m->bounds.h <= h,
              "bounds exceed canvas height");
    } else if (const auto* rot = std::get_if<Rotation>(&op)) {
      if (std::isfinite(rot->degrees)) {
        const auto size = rotated_canvas_size(w, h, rot->degrees);
        w = size[0];
        h = size[1];
      }
    }
  }
  return out;
}

std::vector<Violation> lint_spec(const AttackSpec& spec) {
  std::vector<Violation> out;
  auto check_glyphs = [&](std::size_t layer, const std::string& font_id,
                          std::string_view text) {
    if (!font::has_font(font_id)) return;
    std::u32string decoded;
    if (!font::decode_utf8(text, &decoded)) return;
    for (char32_t c : decoded) {
      if (c == U' ') continue;
      if (!font::has_glyph(font_id, c)) {
        out.push_back({layer, "font '" + font_id + "' has no glyph for U+" +
                                  [c] {
                                    char buf[16];
                                    std::snprintf(buf, sizeof(buf), "%04X",
                                                  static_cast<unsigned>(c));
                                    return std::string(buf);
                                  }() +
                                  "; it renders as a replacement box"});
      }
    }
  };
  for (std::size_t i = 0; i < spec.layers.size(); ++i) {
    const LayerOp& op = spec.layers[i];
    if (const auto* t = std::get_if<TextOverlay>(&op)) {
      check_glyphs(i, t->font_id, t->text);
    } else if (const auto* f = std::get_if<ImageFontText>(&op)) {
      check_glyphs(i, f->font_id, f->text);
    } else if (const auto* fl = std::get_if<FloodText>(&op)) {
      for (const auto& w : fl->words) check_glyphs(i, fl->font_id, w);
    } else if (const auto* pg = std::get_if<PositionedGlyphs>(&op)) {
      for (const auto& g : pg->glyphs) check_glyphs(i, pg->font_id, g.character);
    } else if (const auto* fig = std::get_if<Figurative>(&op)) {
      if (const auto* a = std::get_if<AsciiArtParams>(&fig->params)) {
        check_glyphs(i, a->font_id, a->charset);
      }
    }
  }
  return out;
}

AttackSpec parse_spec(std::string_view doc) {
  const json_codec::Json j = json_codec::parse_document(doc);
  AttackSpec spec = json_codec::spec_from_json(j, "");
  std::vector<Violation> violations;
  Rules r(&violations);
  intrinsic_violations(spec, r);
  json_codec::throw_if_violations(violations);
  return spec;
}

std::string serialize_spec(const AttackSpec& spec) {
  return json_codec::spec_to_json(spec).dump(2) + "\n";
}

SweepSpec parse_sweep(std::string_view doc) {
  const json_codec::Json j = json_codec::parse_document(doc);
  SweepSpec sweep = json_codec::sweep_from_json(j, "");
  std::vector<Violation> violations;
  Rules r(&violations);
  intrinsic_violations(sweep.base, r);
  json_codec::throw_if_violations(violations);
  return sweep;
}

std::string serialize_sweep(const SweepSpec& sweep) {
  return json_codec::sweep_to_json(sweep).dump(2) + "\n";
}

std::string sweep_value_suffix(double value) {
  char buf[64];
  if (std::isfinite(value) && std::floor(value) == value &&
      std::abs(value) < 9.0e15) {
    auto res = std::to_chars(buf, buf + sizeof(buf),
                             static_cast<long long>(value));
    return "@" + std::string(buf, res.ptr);
  }
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return "@" + std::string(buf, res.ptr);
}

std::vector<AttackSpec> expand_sweep(const SweepSpec& sweep) {
  if (sweep.values.empty()) throw SchemaError("sweep values must be non-empty");
  for (std::size_t i = 0; i < sweep.values.size(); ++i) {
    if (!std::isfinite(sweep.values[i])) {
      throw SchemaError("sweep values must be finite");
    }
    if (i > 0 && !(sweep.values[i] > sweep.values[i - 1])) {
      throw SchemaError("sweep values must be strictly increasing");
    }
  }
  json_codec::Json base = json_codec::spec_to_json(sweep.base);
  // Resolve once against the base so PathError does not depend on values.
  json_codec::resolve_numeric_path(base, sweep.param_path);

  std::vector<AttackSpec> out;
  out.reserve(sweep.values.size());
  for (double v : sweep.values) {
    json_codec::Json j = base;
    json_codec::Json& field = json_codec::resolve_numeric_path(j, sweep.param_path);
    field = json_codec::number_to_json(v);
    j["id"] = sweep.base.id + sweep_value_suffix(v);
    AttackSpec spec = json_codec::spec_from_json(j, "");
    std::vector<Violation> violations;
    Rules r(&violations);
    intrinsic_violations(spec, r);
    json_codec::throw_if_violations(violations);
    out.push_back(std::move(spec));
  }
  return out;
}

}  // namespace glyphclash::dsl
