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

#ifndef GLYPHCLASH_SRC_COMPOSITOR_FONT_DATA_H_
#define GLYPHCLASH_SRC_COMPOSITOR_FONT_DATA_H_

#include <cstddef>
#include <cstdint>

namespace glyphclash::compositor::font_data {

// Every face is stored on a master grid with this line height.
inline constexpr int kMasterLineHeight = 48;

// One glyph's 1-bit master bitmap. (x0, y0) is the top-left of the ink box
// relative to the pen position at the top of the line.
struct GlyphRecord {
  std::uint32_t codepoint;
  std::int16_t advance;
  std::int16_t x0;
  std::int16_t y0;
  std::int16_t width;
  std::int16_t height;
  std::uint32_t offset;  // into the face's bit blob; rows padded to bytes
};

struct FaceRecord {
  const char* font_id;
  const GlyphRecord* glyphs;  // sorted by codepoint
  std::size_t glyph_count;
  const unsigned char* bits;
};

extern const FaceRecord kFaces[];
extern const std::size_t kFaceCount;

}  // namespace glyphclash::compositor::font_data

#endif  // GLYPHCLASH_SRC_COMPOSITOR_FONT_DATA_H_
