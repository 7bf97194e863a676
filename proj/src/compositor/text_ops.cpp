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


// Text-drawing layer ops: overlays, image-filled fonts, floods and
// independently positioned glyphs.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "compositor/raster.h"
#include "glyphclash/compositor.h"
#include "glyphclash/errors.h"
#include "glyphclash/font.h"

namespace glyphclash::compositor {
namespace internal {
namespace {

bool is_whitespace(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r';
}

Pixel to_pixel(const dsl::Rgba& c) { return {c.r, c.g, c.b, c.a}; }

Pixel with_coverage(Pixel p, std::uint8_t coverage) {
  p[3] = scale_alpha(p[3], coverage);
  return p;
}

// Coverage planes of a TextOverlay, positioned relative to its anchor.
struct TextPlanes {
  int ox = 0;
  int oy = 0;
  Plane fill;
  Plane outline;  // empty without an outline
};

Plane dilate(const Plane& in, int r) {
  Plane h(in.width, in.height);
  for (int y = 0; y < in.height; ++y) {
    for (int x = 0; x < in.width; ++x) {
      std::uint8_t m = 0;
      for (int k = -r; k <= r; ++k) m = std::max(m, in.at(x + k, y));
      h.ref(x, y) = m;
    }
  }
  Plane out(in.width, in.height);
  for (int y = 0; y < in.height; ++y) {
    for (int x = 0; x < in.width; ++x) {
      std::uint8_t m = 0;
      for (int k = -r; k <= r; ++k) m = std::max(m, h.at(x, y + k));
      out.ref(x, y) = m;
    }
  }
  return out;
}

Plane warp_columns(const Plane& in, const std::vector<int>& shift, int pad) {
  Plane out(in.width, in.height + 2 * pad);
  for (int x = 0; x < in.width; ++x) {
    for (int y = 0; y < out.height; ++y) {
      out.ref(x, y) = in.at(x, y - pad - shift[static_cast<std::size_t>(x)]);
    }
  }
  return out;
}

TextPlanes build_text_planes(const dsl::TextOverlay& layer) {
  const font::TextLayout layout =
      font::layout_text(layer.font_id, std::string_view(layer.text), layer.size_px);
  const int r = layer.outline ? std::max(1, layer.size_px / 16) : 0;

  TextPlanes planes;
  planes.ox = -r;
  planes.oy = -r;
  planes.fill = Plane(layout.width + 2 * r, layout.height + 2 * r);
  for (int y = 0; y < layout.height; ++y) {
    for (int x = 0; x < layout.width; ++x) {
      planes.fill.ref(x + r, y + r) = layout.at(x, y);
    }
  }
  if (layer.outline) planes.outline = dilate(planes.fill, r);

  if (layer.warp) {
    const dsl::Warp& warp = *layer.warp;
    if (!(warp.wavelength_px > 0) || !(warp.amplitude_px >= 0)) {
      throw BoundsError("warp needs amplitude >= 0 and wavelength > 0");
    }
    if (warp.amplitude_px > 0) {
      const int pad = static_cast<int>(std::ceil(warp.amplitude_px));
      std::vector<int> shift(static_cast<std::size_t>(planes.fill.width));
      for (int x = 0; x < planes.fill.width; ++x) {
        shift[static_cast<std::size_t>(x)] = round_half_away(
            warp.amplitude_px *
            std::sin(2 * std::numbers::pi * (x - r) / warp.wavelength_px));
      }
      planes.fill = warp_columns(planes.fill, shift, pad);
      if (layer.outline) planes.outline = warp_columns(planes.outline, shift, pad);
      planes.oy -= pad;
    }
  }

  if (dsl::normalize_degrees(layer.rotation_deg) != 0.0) {
    const int w = planes.fill.width;
    const int h = planes.fill.height;
    planes.fill = rotate_plane(planes.fill, layer.rotation_deg);
    if (layer.outline) planes.outline = rotate_plane(planes.outline, layer.rotation_deg);
    planes.ox += floor_div(w - planes.fill.width, 2);
    planes.oy += floor_div(h - planes.fill.height, 2);
  }
  return planes;
}

void require_on_canvas(const Canvas& canvas, int x, int y, const char* what) {
  if (!canvas.image.contains(x, y)) {
    throw BoundsError(std::string(what) + " (" + std::to_string(x) + ", " +
                      std::to_string(y) + ") lies outside the " +
                      std::to_string(canvas.width()) + "x" +
                      std::to_string(canvas.height()) + " canvas");
  }
}

void paint_plane(Canvas& canvas, const Plane& plane, int x0, int y0,
                 Pixel color, InkEffect effect) {
  for (int y = 0; y < plane.height; ++y) {
    for (int x = 0; x < plane.width; ++x) {
      const std::uint8_t cov = plane.at(x, y);
      if (cov == 0) continue;
      canvas.paint(x0 + x, y0 + y, with_coverage(color, cov), effect);
    }
  }
}

bool boxes_intersect(const dsl::Rect& a, const dsl::Rect& b) {
  return a.x < b.x + b.w && b.x < a.x + a.w && a.y < b.y + b.h &&
         b.y < a.y + a.h;
}

}  // namespace

void apply_text(Canvas& canvas, const dsl::TextOverlay& layer) {
  require_on_canvas(canvas, layer.anchor.x, layer.anchor.y, "anchor");
  const TextPlanes planes = build_text_planes(layer);
  const int x0 = layer.anchor.x + planes.ox;
  const int y0 = layer.anchor.y + planes.oy;
  if (layer.outline) {
    paint_plane(canvas, planes.outline, x0, y0, to_pixel(*layer.outline),
                InkEffect::kText);
  }
  paint_plane(canvas, planes.fill, x0, y0, to_pixel(layer.color),
              InkEffect::kText);
}

void apply_image_font(Canvas& canvas, const dsl::ImageFontText& layer,
                      const std::filesystem::path& asset_root) {
  require_on_canvas(canvas, layer.anchor.x, layer.anchor.y, "anchor");
  const font::TextLayout layout =
      font::layout_text(layer.font_id, std::string_view(layer.text), layer.size_px);

  std::vector<std::size_t> inked;  // indices of non-whitespace glyphs
  for (std::size_t i = 0; i < layout.glyphs.size(); ++i) {
    if (!is_whitespace(layout.glyphs[i].codepoint)) inked.push_back(i);
  }
  if (layer.per_glyph_textures &&
      layer.per_glyph_textures->size() != inked.size()) {
    throw ArityError("per_glyph_textures has " +
                     std::to_string(layer.per_glyph_textures->size()) +
                     " entries for " + std::to_string(inked.size()) +
                     " non-whitespace glyphs");
  }

  std::map<std::string, ImageBuffer> cache;
  auto texture = [&](const std::string& path) -> const ImageBuffer& {
    auto it = cache.find(path);
    if (it == cache.end()) {
      it = cache.emplace(path, load_image(resolve_asset(asset_root, path))).first;
    }
    return it->second;
  };
  auto glyph_texture = [&](std::size_t k) -> const ImageBuffer& {
    return layer.per_glyph_textures ? texture((*layer.per_glyph_textures)[k])
                                    : texture(layer.texture);
  };
  auto tex_at = [](const ImageBuffer& t, int x, int y) {
    return t.at(((x % t.width()) + t.width()) % t.width(),
                ((y % t.height()) + t.height()) % t.height());
  };
  const int ax = layer.anchor.x;
  const int ay = layer.anchor.y;

  if (layer.mode == dsl::ImageFontMode::kDecorate) {
    const int d = std::max(1, layer.size_px / 4);
    for (std::size_t k = 0; k < inked.size(); ++k) {
      const font::GlyphMask& g = layout.glyphs[inked[k]];
      if (g.width == 0 || g.height == 0) continue;
      const ImageBuffer stamp = resize_bilinear(glyph_texture(k), d, d);
      const int corners[4][2] = {{g.x - d, g.y - d},
                                 {g.x + g.width, g.y - d},
                                 {g.x - d, g.y + g.height},
                                 {g.x + g.width, g.y + g.height}};
      for (const auto& c : corners) {
        for (int y = 0; y < d; ++y) {
          for (int x = 0; x < d; ++x) {
            canvas.paint(ax + c[0] + x, ay + c[1] + y, stamp.at(x, y),
                         InkEffect::kKeep);
          }
        }
      }
    }
  }

  if (layer.per_glyph_textures) {
    for (std::size_t k = 0; k < inked.size(); ++k) {
      const font::GlyphMask& g = layout.glyphs[inked[k]];
      const ImageBuffer& tex = glyph_texture(k);
      for (int y = 0; y < g.height; ++y) {
        for (int x = 0; x < g.width; ++x) {
          const std::uint8_t cov = g.at(x, y);
          if (cov == 0) continue;
          canvas.paint(ax + g.x + x, ay + g.y + y,
                       with_coverage(tex_at(tex, x, y), cov), InkEffect::kText);
        }
      }
    }
  } else {
    const ImageBuffer& tex = texture(layer.texture);
    for (int y = 0; y < layout.height; ++y) {
      for (int x = 0; x < layout.width; ++x) {
        const std::uint8_t cov = layout.at(x, y);
        if (cov == 0) continue;
        canvas.paint(ax + x, ay + y, with_coverage(tex_at(tex, x, y), cov),
                     InkEffect::kText);
      }
    }
  }
}

void apply_flood(Canvas& canvas, const dsl::FloodText& layer, RngState& rng,
                 FloodResult* report) {
  if (layer.words.empty() || layer.count < 1) return;
  const int lo = std::min(layer.size_px_range[0], layer.size_px_range[1]);
  const int hi = std::max(layer.size_px_range[0], layer.size_px_range[1]);
  const int attempts = layer.collision_free ? 101 : 1;
  std::vector<dsl::Rect> placed;
  for (int i = 0; i < layer.count; ++i) {
    const std::string& word =
        layer.words[static_cast<std::size_t>(i) % layer.words.size()];
    const int size = lo + static_cast<int>(rng.below(
                              static_cast<std::uint64_t>(hi - lo) + 1));
    const font::TextLayout layout =
        font::layout_text(layer.font_id, std::string_view(word), size);
    const auto x_range = static_cast<std::uint64_t>(
        std::max(1, canvas.width() - layout.width + 1));
    const auto y_range = static_cast<std::uint64_t>(
        std::max(1, canvas.height() - layout.height + 1));
    bool ok = false;
    dsl::Rect box;
    for (int a = 0; a < attempts && !ok; ++a) {
      box.x = static_cast<int>(rng.below(x_range));
      box.y = static_cast<int>(rng.below(y_range));
      box.w = layout.width;
      box.h = layout.height;
      ok = !layer.collision_free ||
           std::none_of(placed.begin(), placed.end(), [&](const dsl::Rect& p) {
             return boxes_intersect(p, box);
           });
    }
    if (!ok) {
      if (report) report->skipped.push_back({i, word});
      continue;
    }
    placed.push_back(box);
    const Pixel color = to_pixel(layer.color);
    for (int y = 0; y < layout.height; ++y) {
      for (int x = 0; x < layout.width; ++x) {
        const std::uint8_t cov = layout.at(x, y);
        if (cov == 0) continue;
        canvas.paint(box.x + x, box.y + y, with_coverage(color, cov),
                     InkEffect::kFlood);
      }
    }
  }
  if (report) report->placed = std::move(placed);
}

void apply_positioned(Canvas& canvas, const dsl::PositionedGlyphs& layer) {
  for (const dsl::PlacedGlyph& g : layer.glyphs) {
    std::u32string decoded;
    if (!font::decode_utf8(g.character, &decoded) || decoded.size() != 1) {
      throw SchemaError("glyph character must be exactly one code point");
    }
    require_on_canvas(canvas, g.x, g.y, "glyph position");
    dsl::TextOverlay single;
    single.text = g.character;
    single.font_id = layer.font_id;
    single.size_px = g.size_px;
    single.color = g.color;
    single.anchor = {g.x, g.y};
    apply_text(canvas, single);
  }
}

}  // namespace internal

dsl::Rect text_overlay_bounds(const dsl::TextOverlay& layer) {
  const internal::TextPlanes planes = internal::build_text_planes(layer);
  return {layer.anchor.x + planes.ox, layer.anchor.y + planes.oy,
          planes.fill.width, planes.fill.height};
}

ImageBuffer overlay_text(const ImageBuffer& buf, const dsl::TextOverlay& layer) {
  internal::Canvas canvas(buf);
  internal::apply_text(canvas, layer);
  return std::move(canvas.image);
}

ImageBuffer render_image_font(const ImageBuffer& buf,
                              const dsl::ImageFontText& layer,
                              const std::filesystem::path& asset_root) {
  internal::Canvas canvas(buf);
  internal::apply_image_font(canvas, layer, asset_root);
  return std::move(canvas.image);
}

FloodResult flood_background(const ImageBuffer& buf, const dsl::FloodText& layer,
                             RngState& rng) {
  internal::Canvas canvas(buf);
  FloodResult result;
  internal::apply_flood(canvas, layer, rng, &result);
  result.image = std::move(canvas.image);
  return result;
}

ImageBuffer embed_positioned_glyphs(const ImageBuffer& buf,
                                    const dsl::PositionedGlyphs& layer) {
  internal::Canvas canvas(buf);
  internal::apply_positioned(canvas, layer);
  return std::move(canvas.image);
}

}  // namespace glyphclash::compositor
