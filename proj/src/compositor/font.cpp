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

#include "glyphclash/font.h"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "compositor/font_data.h"
#include "glyphclash/errors.h"

namespace glyphclash::font {
namespace {
namespace font_data = compositor::font_data;

using font_data::FaceRecord;
using font_data::GlyphRecord;
using font_data::kMasterLineHeight;

constexpr int kSamples = 4;  // per axis

// Hollow box drawn for code points a face does not cover.
struct ReplacementGlyph {
  static constexpr int kAdvance = 24;
  static constexpr int kX0 = 3;
  static constexpr int kY0 = 9;
  static constexpr int kWidth = 18;
  static constexpr int kHeight = 29;
  static constexpr int kStroke = 2;

  static bool bit(int x, int y) {
    if (x < 0 || y < 0 || x >= kWidth || y >= kHeight) return false;
    return x < kStroke || y < kStroke || x >= kWidth - kStroke ||
           y >= kHeight - kStroke;
  }
};

const FaceRecord* find_face(std::string_view font_id) {
  for (std::size_t i = 0; i < font_data::kFaceCount; ++i) {
    if (font_id == font_data::kFaces[i].font_id) return &font_data::kFaces[i];
  }
  return nullptr;
}

const FaceRecord& require_face(std::string_view font_id) {
  const FaceRecord* face = find_face(font_id);
  if (face == nullptr) {
    throw FontError("unknown font_id '" + std::string(font_id) + "'");
  }
  return *face;
}

const GlyphRecord* find_glyph(const FaceRecord& face, char32_t cp) {
  const GlyphRecord* begin = face.glyphs;
  const GlyphRecord* end = face.glyphs + face.glyph_count;
  const GlyphRecord* it = std::lower_bound(
      begin, end, cp,
      [](const GlyphRecord& g, char32_t c) { return g.codepoint < c; });
  if (it == end || it->codepoint != cp) return nullptr;
  return it;
}

// Master-grid view of one glyph: the box and a bit accessor.
struct MasterGlyph {
  char32_t codepoint = 0;
  int advance = 0;
  int x0 = 0;
  int y0 = 0;
  int width = 0;
  int height = 0;
  const GlyphRecord* record = nullptr;  // null => replacement box
  const unsigned char* bits = nullptr;

  // (x, y) relative to the top-left of the ink box.
  bool bit(int x, int y) const {
    if (x < 0 || y < 0 || x >= width || y >= height) return false;
    if (record == nullptr) return ReplacementGlyph::bit(x, y);
    const int stride = (width + 7) / 8;
    const unsigned char byte =
        bits[record->offset + static_cast<std::size_t>(y) * stride + x / 8];
    return (byte & (0x80 >> (x % 8))) != 0;
  }
};

MasterGlyph master_glyph(const FaceRecord& face, char32_t cp) {
  MasterGlyph g;
  g.codepoint = cp;
  if (const GlyphRecord* rec = find_glyph(face, cp)) {
    g.advance = rec->advance;
    g.x0 = rec->x0;
    g.y0 = rec->y0;
    g.width = rec->width;
    g.height = rec->height;
    g.record = rec;
    g.bits = face.bits;
  } else {
    g.advance = ReplacementGlyph::kAdvance;
    g.x0 = ReplacementGlyph::kX0;
    g.y0 = ReplacementGlyph::kY0;
    g.width = ReplacementGlyph::kWidth;
    g.height = ReplacementGlyph::kHeight;
  }
  return g;
}

// Master coordinate hit by supersample s (0..3) of target pixel p.
inline std::int64_t master_coord(int p, int s, int size_px) {
  const std::int64_t num =
      (static_cast<std::int64_t>(p) * 2 * kSamples + 2 * s + 1) *
      kMasterLineHeight;
  const std::int64_t den = static_cast<std::int64_t>(2) * kSamples * size_px;
  // floor division; num may be negative for pixels left of the origin.
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

inline std::uint8_t coverage_from_count(int hits) {
  constexpr int kTotal = kSamples * kSamples;
  return static_cast<std::uint8_t>((hits * 255 + kTotal / 2) / kTotal);
}

inline int floor_scale(std::int64_t master, int size_px) {
  std::int64_t num = master * size_px;
  std::int64_t q = num / kMasterLineHeight;
  if (num % kMasterLineHeight != 0 && num < 0) --q;
  return static_cast<int>(q);
}

inline int ceil_scale(std::int64_t master, int size_px) {
  return -floor_scale(-master, size_px);
}

}  // namespace

const std::vector<std::string>& font_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < font_data::kFaceCount; ++i) {
      v.emplace_back(font_data::kFaces[i].font_id);
    }
    return v;
  }();
  return ids;
}

bool has_font(std::string_view font_id) { return find_face(font_id) != nullptr; }

bool has_glyph(std::string_view font_id, char32_t codepoint) {
  const FaceRecord* face = find_face(font_id);
  return face != nullptr && find_glyph(*face, codepoint) != nullptr;
}

bool decode_utf8(std::string_view text, std::u32string* out) {
  out->clear();
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    int extra = 0;
    char32_t cp = 0;
    if (lead < 0x80) {
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      extra = 1;
      cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2;
      cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3;
      cp = lead & 0x07;
    } else {
      return false;
    }
    if (i + extra >= text.size()) return false;
    for (int k = 1; k <= extra; ++k) {
      const auto c = static_cast<unsigned char>(text[i + k]);
      if ((c & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (c & 0x3F);
    }
    // Reject overlong forms, surrogates and out-of-range values.
    static constexpr char32_t kMin[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMin[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    out->push_back(cp);
    i += static_cast<std::size_t>(extra) + 1;
  }
  return true;
}

TextLayout layout_text(std::string_view font_id, std::u32string_view text,
                       int size_px) {
  const FaceRecord& face = require_face(font_id);
  if (size_px < 1) throw FontError("size_px must be >= 1");

  std::vector<MasterGlyph> masters;
  std::vector<std::int64_t> pens;
  masters.reserve(text.size());
  std::int64_t pen = 0;
  std::int64_t right = 0;
  for (char32_t cp : text) {
    MasterGlyph g = master_glyph(face, cp);
    pens.push_back(pen);
    if (g.width > 0) right = std::max<std::int64_t>(right, pen + g.x0 + g.width);
    pen += g.advance;
    masters.push_back(g);
  }
  right = std::max(right, pen);

  TextLayout layout;
  layout.width = ceil_scale(right, size_px);
  layout.height = size_px;
  layout.coverage.assign(
      static_cast<std::size_t>(layout.width) * layout.height, 0);

  // Master line bitmap: union of all glyph bits at their pen positions.
  const std::int64_t master_w = right;
  std::vector<std::uint8_t> line(
      static_cast<std::size_t>(master_w) * kMasterLineHeight, 0);
  for (std::size_t i = 0; i < masters.size(); ++i) {
    const MasterGlyph& g = masters[i];
    for (int y = 0; y < g.height; ++y) {
      const int my = g.y0 + y;
      if (my < 0 || my >= kMasterLineHeight) continue;
      for (int x = 0; x < g.width; ++x) {
        const std::int64_t mx = pens[i] + g.x0 + x;
        if (mx < 0 || mx >= master_w) continue;
        if (g.bit(x, y)) line[static_cast<std::size_t>(my) * master_w + mx] = 1;
      }
    }
  }

  for (int oy = 0; oy < layout.height; ++oy) {
    for (int ox = 0; ox < layout.width; ++ox) {
      int hits = 0;
      for (int sy = 0; sy < kSamples; ++sy) {
        const std::int64_t my = master_coord(oy, sy, size_px);
        if (my < 0 || my >= kMasterLineHeight) continue;
        for (int sx = 0; sx < kSamples; ++sx) {
          const std::int64_t mx = master_coord(ox, sx, size_px);
          if (mx < 0 || mx >= master_w) continue;
          hits += line[static_cast<std::size_t>(my) * master_w + mx];
        }
      }
      layout.coverage[static_cast<std::size_t>(oy) * layout.width + ox] =
          coverage_from_count(hits);
    }
  }

  // Per-glyph masks, each sampled from its own bits only.
  for (std::size_t i = 0; i < masters.size(); ++i) {
    const MasterGlyph& g = masters[i];
    GlyphMask mask;
    mask.codepoint = g.codepoint;
    mask.advance =
        ceil_scale(pens[i] + g.advance, size_px) - ceil_scale(pens[i], size_px);
    if (g.width > 0) {
      const std::int64_t gx0 = pens[i] + g.x0;
      const int px0 = std::max(0, floor_scale(gx0, size_px));
      const int px1 = std::min(layout.width, ceil_scale(gx0 + g.width, size_px));
      const int py0 = std::max(0, floor_scale(g.y0, size_px));
      const int py1 =
          std::min(layout.height, ceil_scale(g.y0 + g.height, size_px));
      mask.x = px0;
      mask.y = py0;
      mask.width = std::max(0, px1 - px0);
      mask.height = std::max(0, py1 - py0);
      mask.coverage.assign(static_cast<std::size_t>(mask.width) * mask.height,
                           0);
      for (int oy = py0; oy < py1; ++oy) {
        for (int ox = px0; ox < px1; ++ox) {
          int hits = 0;
          for (int sy = 0; sy < kSamples; ++sy) {
            const std::int64_t my = master_coord(oy, sy, size_px) - g.y0;
            for (int sx = 0; sx < kSamples; ++sx) {
              const std::int64_t mx = master_coord(ox, sx, size_px) - gx0;
              hits += g.bit(static_cast<int>(mx), static_cast<int>(my)) ? 1 : 0;
            }
          }
          mask.coverage[static_cast<std::size_t>(oy - py0) * mask.width +
                        (ox - px0)] = coverage_from_count(hits);
        }
      }
    } else {
      mask.x = std::min(layout.width, ceil_scale(pens[i], size_px));
      mask.y = 0;
    }
    layout.glyphs.push_back(std::move(mask));
  }
  return layout;
}

TextLayout layout_text(std::string_view font_id, std::string_view utf8_text,
                       int size_px) {
  std::u32string decoded;
  if (!decode_utf8(utf8_text, &decoded)) {
    throw FontError("text is not valid UTF-8");
  }
  return layout_text(font_id, std::u32string_view(decoded), size_px);
}

GlyphMask rasterize_glyph(std::string_view font_id, char32_t codepoint,
                          int size_px) {
  const char32_t text[] = {codepoint};
  TextLayout layout = layout_text(font_id, std::u32string_view(text, 1), size_px);
  return std::move(layout.glyphs.front());
}

}  // namespace glyphclash::font
