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


// Canvas rotation, icon scaling and the per-pixel ops (patch, remap).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>

#include "compositor/raster.h"
#include "glyphclash/compositor.h"
#include "glyphclash/errors.h"

namespace glyphclash::compositor {
namespace internal {
namespace {

// Bilinear sample at continuous source coordinates (u, v), where integer
// values hit pixel centers. Interpolates premultiplied color. Out-of-range
// taps clamp to the edge or read as transparent.
Pixel bilinear_sample(const ImageBuffer& src, double u, double v, bool clamp) {
  const double fu = std::floor(u);
  const double fv = std::floor(v);
  const int x0 = static_cast<int>(fu);
  const int y0 = static_cast<int>(fv);
  const double fx = u - fu;
  const double fy = v - fv;
  double acc_a = 0;
  double acc_c[3] = {0, 0, 0};
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 2; ++i) {
      const double wgt = (i ? fx : 1 - fx) * (j ? fy : 1 - fy);
      if (wgt == 0) continue;
      int x = x0 + i;
      int y = y0 + j;
      if (clamp) {
        x = std::clamp(x, 0, src.width() - 1);
        y = std::clamp(y, 0, src.height() - 1);
      } else if (!src.contains(x, y)) {
        continue;
      }
      const Pixel p = src.at(x, y);
      acc_a += wgt * p[3];
      for (int c = 0; c < 3; ++c) acc_c[c] += wgt * p[3] * p[c];
    }
  }
  const std::uint8_t a = round_to_byte(acc_a);
  if (a == 0) return {0, 0, 0, 0};
  return {round_to_byte(acc_c[0] / acc_a), round_to_byte(acc_c[1] / acc_a),
          round_to_byte(acc_c[2] / acc_a), a};
}

}  // namespace

Canvas apply_rotation(const Canvas& canvas, const dsl::Rotation& layer) {
  const RotationMap map =
      nearest_rotation_map(canvas.width(), canvas.height(), layer.degrees);
  ImageBuffer out(map.out_w, map.out_h);
  if (layer.resample == dsl::Resample::kNearest ||
      is_quarter_turn(layer.degrees)) {
    const auto src = canvas.image.bytes();
    auto dst = out.mutable_bytes();
    for (std::size_t i = 0; i < map.src_index.size(); ++i) {
      const std::int64_t s = map.src_index[i];
      if (s < 0) continue;
      std::copy_n(src.begin() + s * 4, 4, dst.begin() + static_cast<std::ptrdiff_t>(i) * 4);
    }
  } else {
    const double rad =
        dsl::normalize_degrees(layer.degrees) * std::numbers::pi / 180.0;
    const double cs = std::cos(rad);
    const double sn = std::sin(rad);
    const double w = canvas.width();
    const double h = canvas.height();
    for (int y = 0; y < map.out_h; ++y) {
      for (int x = 0; x < map.out_w; ++x) {
        const double dx = x + 0.5 - map.out_w / 2.0;
        const double dy = y + 0.5 - map.out_h / 2.0;
        const double u = w / 2.0 + dx * cs - dy * sn - 0.5;
        const double v = h / 2.0 + dx * sn + dy * cs - 0.5;
        out.set(x, y, bilinear_sample(canvas.image, u, v, /*clamp=*/false));
      }
    }
  }
  Canvas result(std::move(out), canvas.tracking);
  if (canvas.tracking) {
    for (std::size_t i = 0; i < map.src_index.size(); ++i) {
      const std::int64_t s = map.src_index[i];
      if (s >= 0) result.ink[i] = canvas.ink[static_cast<std::size_t>(s)];
    }
  }
  return result;
}

void apply_icon(Canvas& canvas, const dsl::IconOverlay& layer,
                const std::filesystem::path& asset_root) {
  if (!(layer.scale > 0) || !std::isfinite(layer.scale)) {
    throw BoundsError("icon scale must be > 0");
  }
  const ImageBuffer icon = load_image(resolve_asset(asset_root, layer.icon));
  const int w = std::max(1, round_half_away(icon.width() * layer.scale));
  const int h = std::max(1, round_half_away(icon.height() * layer.scale));
  const ImageBuffer scaled = resize_bilinear(icon, w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      Pixel p = scaled.at(x, y);
      if (layer.tint) {
        const dsl::Rgba& t = *layer.tint;
        const std::uint8_t tint[4] = {t.r, t.g, t.b, t.a};
        for (int c = 0; c < 4; ++c) {
          p[c] = static_cast<std::uint8_t>(round_div(
              static_cast<std::uint64_t>(p[c]) * tint[c], 255));
        }
      }
      canvas.paint(layer.anchor.x + x, layer.anchor.y + y, p,
                   InkEffect::kOcclude);
    }
  }
}

void apply_patch(Canvas& canvas, const dsl::MaskPatch& layer) {
  const dsl::Rect& b = layer.bounds;
  if (b.x < 0 || b.y < 0 || b.w < 0 || b.h < 0 ||
      static_cast<std::int64_t>(b.x) + b.w > canvas.width() ||
      static_cast<std::int64_t>(b.y) + b.h > canvas.height()) {
    throw BoundsError("patch bounds exceed the canvas");
  }
  const Pixel fill = {layer.fill.r, layer.fill.g, layer.fill.b, layer.fill.a};
  const std::int64_t bw = b.w;
  const std::int64_t bh = b.h;
  for (int y = b.y; y < b.y + b.h; ++y) {
    for (int x = b.x; x < b.x + b.w; ++x) {
      if (layer.shape == dsl::PatchShape::kEllipse) {
        // Pixel center inside the inscribed ellipse, scaled by 2 * bw * bh
        // to stay in integers.
        const std::int64_t ex = (2 * static_cast<std::int64_t>(x - b.x) + 1 - bw) * bh;
        const std::int64_t ey = (2 * static_cast<std::int64_t>(y - b.y) + 1 - bh) * bw;
        if (ex * ex + ey * ey > bw * bw * bh * bh) continue;
      }
      canvas.paint(x, y, fill, InkEffect::kOcclude);
    }
  }
}

void apply_remap(Canvas& canvas, const dsl::ColorRemap& layer) {
  if (layer.palette.empty()) return;
  if (!(layer.tolerance >= 0)) throw BoundsError("tolerance must be >= 0");
  const double tol2 = layer.tolerance * layer.tolerance;
  ImageBuffer& img = canvas.image;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const Pixel p = img.at(x, y);
      for (const dsl::PaletteRule& rule : layer.palette) {
        const int dr = p[0] - rule.from.r;
        const int dg = p[1] - rule.from.g;
        const int db = p[2] - rule.from.b;
        if (static_cast<double>(dr * dr + dg * dg + db * db) <= tol2) {
          img.set(x, y, {rule.to.r, rule.to.g, rule.to.b, p[3]});
          break;
        }
      }
    }
  }
}

}  // namespace internal

ImageBuffer resize_bilinear(const ImageBuffer& src, int width, int height) {
  if (width == src.width() && height == src.height()) return src;
  ImageBuffer out(width, height);
  if (src.empty()) return out;
  const double sx = static_cast<double>(src.width()) / width;
  const double sy = static_cast<double>(src.height()) / height;
  for (int y = 0; y < height; ++y) {
    const double v = (y + 0.5) * sy - 0.5;
    for (int x = 0; x < width; ++x) {
      const double u = (x + 0.5) * sx - 0.5;
      out.set(x, y, internal::bilinear_sample(src, u, v, /*clamp=*/true));
    }
  }
  return out;
}

ImageBuffer rotate_canvas(const ImageBuffer& buf, const dsl::Rotation& layer) {
  return internal::apply_rotation(internal::Canvas(buf), layer).image;
}

ImageBuffer overlay_icon(const ImageBuffer& buf, const dsl::IconOverlay& layer,
                         const std::filesystem::path& asset_root) {
  internal::Canvas canvas(buf);
  internal::apply_icon(canvas, layer, asset_root);
  return std::move(canvas.image);
}

ImageBuffer color_remap(const ImageBuffer& buf, const dsl::ColorRemap& layer) {
  internal::Canvas canvas(buf);
  internal::apply_remap(canvas, layer);
  return std::move(canvas.image);
}

ImageBuffer mask_patch(const ImageBuffer& buf, const dsl::MaskPatch& layer) {
  internal::Canvas canvas(buf);
  internal::apply_patch(canvas, layer);
  return std::move(canvas.image);
}

}  // namespace glyphclash::compositor
