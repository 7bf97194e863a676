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

// Embedded bitmap fonts and text rasterization.
//
// Glyphs are stored as 1-bit masters at a 48 px line height and resampled
// with a fixed 4x4 supersampling grid in integer arithmetic, so coverage is
// identical on every platform. size_px is the full line height (ascent plus
// descent) of the rendered text.

#ifndef GLYPHCLASH_FONT_H_
#define GLYPHCLASH_FONT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace glyphclash::font {

// Font ids ordered by decoration complexity.
const std::vector<std::string>& font_ids();
bool has_font(std::string_view font_id);
bool has_glyph(std::string_view font_id, char32_t codepoint);

// Decodes UTF-8. Returns false on malformed input.
bool decode_utf8(std::string_view text, std::u32string* out);

// Coverage for one rasterized glyph, positioned in text-box coordinates.
struct GlyphMask {
  char32_t codepoint = 0;
  int x = 0;  // bearing: top-left of coverage within the text box
  int y = 0;
  int width = 0;
  int height = 0;
  int advance = 0;  // rounded advance in px
  std::vector<std::uint8_t> coverage;  // width * height, 0..255

  std::uint8_t at(int cx, int cy) const {
    return coverage[static_cast<std::size_t>(cy) * width + cx];
  }
};

// A line of text rasterized at one size. The box spans [0, width) x
// [0, height) with height == size_px; coverage is the union of all glyphs,
// sampled jointly so overlapping glyphs do not double count.
struct TextLayout {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> coverage;  // width * height
  std::vector<GlyphMask> glyphs;       // one per code point, whitespace too

  std::uint8_t at(int x, int y) const {
    return coverage[static_cast<std::size_t>(y) * width + x];
  }
};

// Throws FontError for an unknown font id. Missing glyphs render as a
// hollow replacement box.
TextLayout layout_text(std::string_view font_id, std::u32string_view text,
                       int size_px);
TextLayout layout_text(std::string_view font_id, std::string_view utf8_text,
                       int size_px);

GlyphMask rasterize_glyph(std::string_view font_id, char32_t codepoint,
                          int size_px);

}  // namespace glyphclash::font

#endif  // GLYPHCLASH_FONT_H_
