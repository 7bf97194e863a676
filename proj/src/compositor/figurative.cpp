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


// Figurative transforms: the whole image is redrawn as ASCII art, dots, a
// thinned skeleton or a paint-by-numbers sheet, in black on white.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "compositor/raster.h"
#include "glyphclash/compositor.h"
#include "glyphclash/errors.h"
#include "glyphclash/font.h"

namespace glyphclash::compositor {
namespace {

constexpr Pixel kWhite = {255, 255, 255, 255};
constexpr Pixel kBlack = {0, 0, 0, 255};

void require_threshold(int threshold) {
  if (threshold < 0 || threshold > 255) {
    throw ParamError("threshold must be in [0, 255]");
  }
}

void stamp_coverage(ImageBuffer& out, const font::TextLayout& layout, int x0,
                    int y0, int clip_x1, int clip_y1) {
  for (int y = 0; y < layout.height; ++y) {
    for (int x = 0; x < layout.width; ++x) {
      const int cx = x0 + x;
      const int cy = y0 + y;
      if (cx >= clip_x1 || cy >= clip_y1 || !out.contains(cx, cy)) continue;
      const std::uint8_t cov = layout.at(x, y);
      if (cov == 0) continue;
      Pixel ink = kBlack;
      ink[3] = cov;
      out.set(cx, cy, blend_over(ink, out.at(cx, cy)));
    }
  }
}

ImageBuffer ascii_art(const ImageBuffer& in, const dsl::AsciiArtParams& p) {
  if (p.cell_px < 2) throw ParamError("cell_px must be >= 2");
  std::u32string charset;
  if (!font::decode_utf8(p.charset, &charset) || charset.empty()) {
    throw ParamError("charset must be non-empty UTF-8");
  }
  std::vector<font::TextLayout> glyphs;
  for (char32_t c : charset) {
    glyphs.push_back(font::layout_text(p.font_id, std::u32string_view(&c, 1),
                                       p.cell_px));
  }
  ImageBuffer out(in.width(), in.height(), kWhite);
  const std::uint64_t n = charset.size();
  for (int cy = 0; cy < in.height(); cy += p.cell_px) {
    for (int cx = 0; cx < in.width(); cx += p.cell_px) {
      const int x1 = std::min(in.width(), cx + p.cell_px);
      const int y1 = std::min(in.height(), cy + p.cell_px);
      std::uint64_t sum = 0;
      std::uint64_t count = 0;
      for (int y = cy; y < y1; ++y) {
        for (int x = cx; x < x1; ++x) {
          sum += luma_on_white(in.at(x, y));
          ++count;
        }
      }
      // floor(mean / 256 * n) without floating point.
      const std::uint64_t index = (sum * n) / (count * 256);
      stamp_coverage(out, glyphs[index], cx, cy, x1, y1);
    }
  }
  return out;
}

ImageBuffer dot_art(const ImageBuffer& in, const dsl::DotArtParams& p) {
  if (p.spacing < 2) throw ParamError("spacing must be >= 2");
  require_threshold(p.threshold);
  ImageBuffer out(in.width(), in.height(), kWhite);
  const int s = p.spacing;
  const int r = s / 2;
  const std::int64_t limit = static_cast<std::int64_t>(s - 1) * (s - 1);
  for (int py = s / 2; py < in.height(); py += s) {
    for (int px = s / 2; px < in.width(); px += s) {
      if (luma_on_white(in.at(px, py)) >= p.threshold) continue;
      for (int y = py - r; y <= py + r; ++y) {
        for (int x = px - r; x <= px + r; ++x) {
          const std::int64_t dx = x - px;
          const std::int64_t dy = y - py;
          if (4 * (dx * dx + dy * dy) <= limit && out.contains(x, y)) {
            out.set(x, y, kBlack);
          }
        }
      }
    }
  }
  return out;
}

ImageBuffer skeleton(const ImageBuffer& in, const dsl::SkeletonParams& p) {
  require_threshold(p.threshold);
  Bitmap fg{in.width(), in.height(), {}};
  fg.bits.resize(in.pixel_count());
  for (int y = 0; y < in.height(); ++y) {
    for (int x = 0; x < in.width(); ++x) {
      fg.bits[static_cast<std::size_t>(y) * in.width() + x] =
          luma_on_white(in.at(x, y)) < p.threshold ? 1 : 0;
    }
  }
  const Bitmap thin = zhang_suen_thin(std::move(fg));
  ImageBuffer out(in.width(), in.height(), kWhite);
  for (int y = 0; y < in.height(); ++y) {
    for (int x = 0; x < in.width(); ++x) {
      if (thin.at(x, y)) out.set(x, y, kBlack);
    }
  }
  return out;
}

ImageBuffer paint_by_numbers(const ImageBuffer& in,
                             const dsl::PaintByNumbersParams& p, RngState& rng) {
  if (p.k < 2 || p.k > 16) throw ParamError("k must be in [2, 16]");
  if (p.digit_px < 1) throw ParamError("digit_px must be >= 1");
  const int w = in.width();
  const int h = in.height();
  const std::size_t n = in.pixel_count();
  ImageBuffer out(w, h, kWhite);
  if (n == 0) return out;

  std::vector<std::array<int, 3>> colors(n);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const Pixel px = in.at(x, y);
      std::array<int, 3>& c = colors[static_cast<std::size_t>(y) * w + x];
      for (int ch = 0; ch < 3; ++ch) {
        c[ch] = static_cast<int>(internal::round_div(
            px[ch] * px[3] + 255u * (255u - px[3]), 255));
      }
    }
  }

  const std::size_t k = static_cast<std::size_t>(p.k);
  std::vector<std::array<double, 3>> centers(k);
  for (auto& c : centers) {
    const auto& seed = colors[rng.below(n)];
    c = {double(seed[0]), double(seed[1]), double(seed[2])};
  }
  std::vector<std::uint8_t> labels(n, 0);
  auto assign = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < k; ++j) {
        double d = 0;
        for (int ch = 0; ch < 3; ++ch) {
          const double diff = colors[i][ch] - centers[j][ch];
          d += diff * diff;
        }
        if (d < best) {
          best = d;
          labels[i] = static_cast<std::uint8_t>(j);
        }
      }
    }
  };
  for (int iter = 0; iter < 10; ++iter) {
    assign();
    std::vector<std::array<double, 3>> sums(k, {0, 0, 0});
    std::vector<std::uint64_t> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (int ch = 0; ch < 3; ++ch) sums[labels[i]][ch] += colors[i][ch];
      ++counts[labels[i]];
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (counts[j] == 0) continue;
      for (int ch = 0; ch < 3; ++ch) {
        centers[j][ch] = sums[j][ch] / static_cast<double>(counts[j]);
      }
    }
  }
  assign();

  auto label = [&](int x, int y) {
    return labels[static_cast<std::size_t>(y) * w + x];
  };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if ((x + 1 < w && label(x + 1, y) != label(x, y)) ||
          (y + 1 < h && label(x, y + 1) != label(x, y))) {
        out.set(x, y, kBlack);
      }
    }
  }

  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::vector<font::TextLayout> digits(k);
  for (std::size_t j = 0; j < k; ++j) {
    digits[j] = font::layout_text(dsl::kDefaultFontId,
                                  std::string_view(&kDigits[j], 1), p.digit_px);
  }
  const std::uint64_t min_area =
      static_cast<std::uint64_t>(p.digit_px) * static_cast<std::uint64_t>(p.digit_px);
  std::vector<std::uint8_t> seen(n, 0);
  std::deque<std::pair<int, int>> queue;
  for (int sy = 0; sy < h; ++sy) {
    for (int sx = 0; sx < w; ++sx) {
      if (seen[static_cast<std::size_t>(sy) * w + sx]) continue;
      const std::uint8_t lab = label(sx, sy);
      std::uint64_t area = 0;
      std::uint64_t sum_x = 0;
      std::uint64_t sum_y = 0;
      seen[static_cast<std::size_t>(sy) * w + sx] = 1;
      queue.emplace_back(sx, sy);
      while (!queue.empty()) {
        const auto [x, y] = queue.front();
        queue.pop_front();
        ++area;
        sum_x += static_cast<std::uint64_t>(x);
        sum_y += static_cast<std::uint64_t>(y);
        const int nb[4][2] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
        for (const auto& q : nb) {
          if (q[0] < 0 || q[1] < 0 || q[0] >= w || q[1] >= h) continue;
          const std::size_t qi = static_cast<std::size_t>(q[1]) * w + q[0];
          if (seen[qi] || labels[qi] != lab) continue;
          seen[qi] = 1;
          queue.emplace_back(q[0], q[1]);
        }
      }
      if (area < min_area) continue;
      const int cx = static_cast<int>(internal::round_div(sum_x, area));
      const int cy = static_cast<int>(internal::round_div(sum_y, area));
      const font::TextLayout& d = digits[lab];
      stamp_coverage(out, d, cx - d.width / 2, cy - d.height / 2, w, h);
    }
  }
  return out;
}

}  // namespace

Bitmap zhang_suen_thin(Bitmap img) {
  const int w = img.width;
  const int h = img.height;
  std::vector<std::size_t> doomed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int pass = 0; pass < 2; ++pass) {
      doomed.clear();
      for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
          if (!img.at(x, y)) continue;
          // P2..P9 clockwise from north.
          const int n[8] = {img.at(x, y - 1),     img.at(x + 1, y - 1),
                            img.at(x + 1, y),     img.at(x + 1, y + 1),
                            img.at(x, y + 1),     img.at(x - 1, y + 1),
                            img.at(x - 1, y),     img.at(x - 1, y - 1)};
          int b = 0;
          int a = 0;
          for (int i = 0; i < 8; ++i) {
            b += n[i];
            if (n[i] == 0 && n[(i + 1) % 8] == 1) ++a;
          }
          if (b < 2 || b > 6 || a != 1) continue;
          const int p2 = n[0], p4 = n[2], p6 = n[4], p8 = n[6];
          if (pass == 0 ? (p2 * p4 * p6 != 0 || p4 * p6 * p8 != 0)
                        : (p2 * p4 * p8 != 0 || p2 * p6 * p8 != 0)) {
            continue;
          }
          doomed.push_back(static_cast<std::size_t>(y) * w + x);
        }
      }
      for (std::size_t i : doomed) img.bits[i] = 0;
      if (!doomed.empty()) changed = true;
    }
  }
  return img;
}

namespace internal {

Canvas apply_figurative(const Canvas& canvas, const dsl::Figurative& layer,
                        RngState& rng) {
  ImageBuffer out = std::visit(
      [&](const auto& p) -> ImageBuffer {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, dsl::AsciiArtParams>) {
          return ascii_art(canvas.image, p);
        } else if constexpr (std::is_same_v<T, dsl::DotArtParams>) {
          return dot_art(canvas.image, p);
        } else if constexpr (std::is_same_v<T, dsl::SkeletonParams>) {
          return skeleton(canvas.image, p);
        } else {
          return paint_by_numbers(canvas.image, p, rng);
        }
      },
      layer.params);
  return Canvas(std::move(out), canvas.tracking);
}

}  // namespace internal

ImageBuffer figurative_transform(const ImageBuffer& buf,
                                 const dsl::Figurative& layer, RngState& rng) {
  return internal::apply_figurative(internal::Canvas(buf), layer, rng).image;
}

}  // namespace glyphclash::compositor
