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


#include "compositor/raster.h"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <utility>

#include "glyphclash/compositor.h"

namespace glyphclash::compositor {

Pixel blend_over(Pixel src, Pixel dst) {
  const std::uint64_t as = src[3];
  if (as == 0) return dst;
  if (as == 255) return src;
  const std::uint64_t ad = dst[3];
  // Both sides are scaled by 255 so an opaque destination reduces exactly to
  // round((a * src + (255 - a) * dst) / 255).
  const std::uint64_t den = as * 255 + ad * (255 - as);
  Pixel out;
  for (int c = 0; c < 3; ++c) {
    const std::uint64_t num = src[c] * as * 255 + dst[c] * ad * (255 - as);
    out[c] = static_cast<std::uint8_t>(internal::round_div(num, den));
  }
  out[3] = static_cast<std::uint8_t>(internal::round_div(den, 255));
  return out;
}

std::uint8_t scale_alpha(std::uint8_t alpha, std::uint8_t coverage) {
  return static_cast<std::uint8_t>(
      internal::round_div(static_cast<std::uint64_t>(alpha) * coverage, 255));
}

std::uint8_t luma_on_white(Pixel p) {
  const std::uint32_t a = p[3];
  std::uint32_t flat[3];
  for (int c = 0; c < 3; ++c) {
    flat[c] = static_cast<std::uint32_t>(
        internal::round_div(p[c] * a + 255 * (255 - a), 255));
  }
  return static_cast<std::uint8_t>(
      (299 * flat[0] + 587 * flat[1] + 114 * flat[2] + 500) / 1000);
}

namespace internal {

Canvas::Canvas(ImageBuffer img, bool track_ink)
    : image(std::move(img)), tracking(track_ink) {
  if (tracking) ink.assign(image.pixel_count(), kInkNone);
}

void Canvas::paint(int x, int y, Pixel src, InkEffect effect) {
  if (!image.contains(x, y) || src[3] == 0) return;
  image.set(x, y, blend_over(src, image.at(x, y)));
  if (!tracking) return;
  std::uint8_t& owner =
      ink[static_cast<std::size_t>(y) * static_cast<std::size_t>(width()) + x];
  switch (effect) {
    case InkEffect::kKeep:
      break;
    case InkEffect::kText:
      owner = kInkText;
      break;
    case InkEffect::kFlood:
      owner = kInkFlood;
      break;
    case InkEffect::kOcclude:
      if (src[3] == 255) owner = kInkNone;
      break;
  }
}

std::uint64_t Canvas::count_ink(InkOwner owner) const {
  std::uint64_t n = 0;
  for (std::uint8_t o : ink) n += (o == owner) ? 1 : 0;
  return n;
}

bool is_quarter_turn(double degrees) {
  const double d = dsl::normalize_degrees(degrees);
  return d == 0.0 || d == 90.0 || d == 180.0 || d == 270.0;
}

RotationMap nearest_rotation_map(int w, int h, double degrees) {
  const double d = dsl::normalize_degrees(degrees);
  const auto size = dsl::rotated_canvas_size(w, h, d);
  RotationMap map;
  map.out_w = size[0];
  map.out_h = size[1];
  map.src_index.assign(static_cast<std::size_t>(map.out_w) * map.out_h, -1);
  auto index = [w](std::int64_t x, std::int64_t y) { return y * w + x; };

  const double rad = d * std::numbers::pi / 180.0;
  const double cs = std::cos(rad);
  const double sn = std::sin(rad);
  for (int y = 0; y < map.out_h; ++y) {
    for (int x = 0; x < map.out_w; ++x) {
      std::int64_t sx = 0;
      std::int64_t sy = 0;
      if (d == 0.0) {
        sx = x;
        sy = y;
      } else if (d == 90.0) {
        sx = w - 1 - y;
        sy = x;
      } else if (d == 180.0) {
        sx = w - 1 - x;
        sy = h - 1 - y;
      } else if (d == 270.0) {
        sx = y;
        sy = h - 1 - x;
      } else {
        const double dx = x + 0.5 - map.out_w / 2.0;
        const double dy = y + 0.5 - map.out_h / 2.0;
        sx = static_cast<std::int64_t>(std::floor(w / 2.0 + dx * cs - dy * sn));
        sy = static_cast<std::int64_t>(std::floor(h / 2.0 + dx * sn + dy * cs));
        if (sx < 0 || sy < 0 || sx >= w || sy >= h) continue;
      }
      map.src_index[static_cast<std::size_t>(y) * map.out_w + x] = index(sx, sy);
    }
  }
  return map;
}

Plane rotate_plane(const Plane& plane, double degrees) {
  const RotationMap map = nearest_rotation_map(plane.width, plane.height, degrees);
  Plane out(map.out_w, map.out_h);
  for (std::size_t i = 0; i < map.src_index.size(); ++i) {
    const std::int64_t s = map.src_index[i];
    if (s >= 0) out.v[i] = plane.v[static_cast<std::size_t>(s)];
  }
  return out;
}

std::filesystem::path resolve_asset(const std::filesystem::path& root,
                                    const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute() || root.empty()) return p;
  return root / p;
}

}  // namespace internal
}  // namespace glyphclash::compositor
