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


#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "glyphclash/attack_dsl.h"
#include "glyphclash/compositor.h"
#include "glyphclash/errors.h"
#include "glyphclash/font.h"
#include "glyphclash/image.h"
#include "glyphclash/rng.h"
#include "support/fixtures.h"

namespace glyphclash::compositor {
namespace {

namespace fs = std::filesystem;
using testing::oracle_over;

constexpr Pixel kBlack{0, 0, 0, 255};
constexpr Pixel kWhite{255, 255, 255, 255};

dsl::TextOverlay text_layer(std::string text, int size, dsl::Rgba color, dsl::Point at) {
  dsl::TextOverlay l;
  l.text = std::move(text);
  l.size_px = size;
  l.color = color;
  l.anchor = at;
  return l;
}

int count_diff(const ImageBuffer& a, const ImageBuffer& b) {
  int n = 0;
  for (int y = 0; y < a.height(); ++y) {
    for (int x = 0; x < a.width(); ++x) n += a.at(x, y) != b.at(x, y) ? 1 : 0;
  }
  return n;
}

class AssetDir : public ::testing::Test {
 protected:
  void SetUp() override { dir_ = testing::make_temp_dir("compositor"); }
  void TearDown() override { fs::remove_all(dir_); }
  std::string put(const std::string& name, const ImageBuffer& img) {
    save_image(img, dir_ / name);
    return name;
  }
  fs::path dir_;
};

// Blending

TEST(BlendOver, MatchesRationalOracleOnRandomTriples) {
  testing::Rng rng(7);
  for (int i = 0; i < 20000; ++i) {
    Pixel src, dst;
    for (auto& c : src) c = static_cast<std::uint8_t>(rng() & 0xff);
    for (auto& c : dst) c = static_cast<std::uint8_t>(rng() & 0xff);
    ASSERT_EQ(blend_over(src, dst), oracle_over(src, dst));
  }
}

TEST(BlendOver, EdgeAlphas) {
  EXPECT_EQ(blend_over({9, 9, 9, 0}, {1, 2, 3, 4}), (Pixel{1, 2, 3, 4}));
  EXPECT_EQ(blend_over({9, 8, 7, 255}, {1, 2, 3, 4}), (Pixel{9, 8, 7, 255}));
  EXPECT_EQ(blend_over({9, 8, 7, 100}, {0, 0, 0, 0}), (Pixel{9, 8, 7, 100}));
}

TEST(ScaleAlpha, RoundsHalfAway) {
  EXPECT_EQ(scale_alpha(255, 255), 255);
  EXPECT_EQ(scale_alpha(255, 0), 0);
  EXPECT_EQ(scale_alpha(128, 255), 128);
  EXPECT_EQ(scale_alpha(1, 128), 1);   // 0.502
  EXPECT_EQ(scale_alpha(1, 127), 0);   // 0.498
  EXPECT_EQ(scale_alpha(51, 5), 1);    // exactly 1.0
}

// Text overlay

TEST(OverlayText, TransparentColorIsIdentity) {
  const ImageBuffer base = testing::noise_image(64, 48, 1);
  EXPECT_EQ(overlay_text(base, text_layer("bee", 30, {255, 0, 0, 0}, {3, 4})), base);
}

TEST(OverlayText, OpaqueWhiteOverBlack) {
  const ImageBuffer base(8, 8, kBlack);
  const ImageBuffer out = overlay_text(base, text_layer("█", 8, {255, 255, 255, 255}, {0, 0}));
  EXPECT_EQ(out.at(0, 0), kWhite);
}

TEST(OverlayText, HalfAlphaWhiteOverBlack) {
  const ImageBuffer base(8, 8, kBlack);
  const ImageBuffer out = overlay_text(base, text_layer("█", 8, {255, 255, 255, 128}, {0, 0}));
  EXPECT_EQ(out.at(0, 0), (Pixel{128, 128, 128, 255}));
}

TEST(OverlayText, FullBlockOracleSweep) {
  testing::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const Pixel dst{static_cast<std::uint8_t>(rng() & 0xff), static_cast<std::uint8_t>(rng() & 0xff),
                    static_cast<std::uint8_t>(rng() & 0xff), static_cast<std::uint8_t>(rng() & 0xff)};
    const dsl::Rgba c{static_cast<std::uint8_t>(rng() & 0xff), static_cast<std::uint8_t>(rng() & 0xff),
                      static_cast<std::uint8_t>(rng() & 0xff), static_cast<std::uint8_t>(rng() & 0xff)};
    const ImageBuffer out = overlay_text(ImageBuffer(8, 8, dst), text_layer("█", 8, c, {0, 0}));
    ASSERT_EQ(out.at(0, 0), oracle_over({c.r, c.g, c.b, c.a}, dst));
  }
}

TEST(OverlayText, PixelsOutsideBoxUnchanged) {
  const ImageBuffer base = testing::noise_image(120, 80, 3);
  dsl::TextOverlay l = text_layer("bee", 24, {0, 0, 0, 255}, {30, 20});
  l.outline = dsl::Rgba{255, 255, 255, 255};
  l.warp = dsl::Warp{3, 11};
  l.rotation_deg = 20;
  const dsl::Rect box = text_overlay_bounds(l);
  const ImageBuffer out = overlay_text(base, l);
  int changed = 0;
  for (int y = 0; y < base.height(); ++y) {
    for (int x = 0; x < base.width(); ++x) {
      const bool inside = x >= box.x && y >= box.y && x < box.x + box.w && y < box.y + box.h;
      if (!inside) {
        ASSERT_EQ(out.at(x, y), base.at(x, y)) << x << "," << y;
      }
      changed += out.at(x, y) != base.at(x, y) ? 1 : 0;
    }
  }
  EXPECT_GT(changed, 50);
}

TEST(OverlayText, AnchorOffCanvasIsBoundsError) {
  const ImageBuffer base(16, 16, kBlack);
  EXPECT_THROW(overlay_text(base, text_layer("a", 8, {0, 0, 0, 255}, {16, 0})), BoundsError);
}

TEST(OverlayText, OutlineSurroundsFill) {
  const ImageBuffer base(64, 40, kBlack);
  dsl::TextOverlay plain = text_layer("I", 32, {255, 0, 0, 255}, {10, 4});
  dsl::TextOverlay outlined = plain;
  outlined.outline = dsl::Rgba{0, 255, 0, 255};
  const ImageBuffer a = overlay_text(base, plain);
  const ImageBuffer b = overlay_text(base, outlined);
  int green = 0;
  for (int y = 0; y < 40; ++y) {
    for (int x = 0; x < 64; ++x) {
      if (a.at(x, y) == (Pixel{255, 0, 0, 255})) {
        EXPECT_EQ(b.at(x, y), a.at(x, y));
      }
      green += b.at(x, y) == (Pixel{0, 255, 0, 255}) ? 1 : 0;
    }
  }
  EXPECT_GT(green, 0);
}

TEST(OverlayText, WarpShiftsColumnsOnly) {
  const ImageBuffer base(120, 60, kBlack);
  dsl::TextOverlay flat = text_layer("IIII", 30, {255, 255, 255, 255}, {10, 15});
  dsl::TextOverlay wavy = flat;
  wavy.warp = dsl::Warp{4, 20};
  const ImageBuffer a = overlay_text(base, flat);
  const ImageBuffer b = overlay_text(base, wavy);
  EXPECT_NE(a, b);
  // Column sums of lit pixels are preserved by a vertical shift.
  for (int x = 0; x < 120; ++x) {
    int na = 0, nb = 0;
    for (int y = 0; y < 60; ++y) {
      na += a.at(x, y)[0];
      nb += b.at(x, y)[0];
    }
    EXPECT_EQ(na, nb) << "column " << x;
  }
}

// Image font

TEST_F(AssetDir, SolidTextureEqualsFlatText) {
  const std::string tex = put("solid.png", ImageBuffer(3, 5, Pixel{20, 200, 40, 255}));
  const ImageBuffer base = testing::noise_image(100, 50, 5);
  dsl::ImageFontText l;
  l.text = "web";
  l.texture = tex;
  l.size_px = 30;
  l.anchor = {7, 9};
  EXPECT_EQ(render_image_font(base, l, dir_),
            overlay_text(base, text_layer("web", 30, {20, 200, 40, 255}, {7, 9})));
}

TEST_F(AssetDir, CheckerTilingOnLetterI) {
  ImageBuffer checker(2, 2);
  checker.set(0, 0, {255, 0, 0, 255});
  checker.set(1, 0, {0, 0, 255, 255});
  checker.set(0, 1, {0, 0, 255, 255});
  checker.set(1, 1, {255, 0, 0, 255});
  const std::string tex = put("checker.png", checker);
  const ImageBuffer base(40, 110, kBlack);
  dsl::ImageFontText l;
  l.text = "I";
  l.texture = tex;
  l.size_px = 96;  // stem 8 px wide
  l.anchor = {5, 3};
  const ImageBuffer out = render_image_font(base, l, dir_);
  const font::TextLayout t = font::layout_text("sans-plain", "I", 96);
  int full = 0;
  for (int y = 0; y < t.height; ++y) {
    for (int x = 0; x < t.width; ++x) {
      const Pixel got = out.at(5 + x, 3 + y);
      if (t.at(x, y) == 255) {
        ++full;
        ASSERT_EQ(got, checker.at(x % 2, y % 2)) << x << "," << y;
      } else if (t.at(x, y) == 0) {
        ASSERT_EQ(got, kBlack);
      }
    }
  }
  EXPECT_GE(full, 8 * 12);
}

TEST_F(AssetDir, DecorateKeepsGlyphInteriors) {
  const std::string tex = put("web.png", testing::noise_image(5, 5, 9));
  const ImageBuffer base = testing::apple_image(160, 80);
  dsl::ImageFontText fill;
  fill.text = "web";
  fill.texture = tex;
  fill.size_px = 40;
  fill.anchor = {20, 20};
  dsl::ImageFontText deco = fill;
  deco.mode = dsl::ImageFontMode::kDecorate;
  const ImageBuffer a = render_image_font(base, fill, dir_);
  const ImageBuffer b = render_image_font(base, deco, dir_);
  EXPECT_NE(a, b);
  const font::TextLayout t = font::layout_text("sans-plain", "web", 40);
  for (int y = 0; y < t.height; ++y) {
    for (int x = 0; x < t.width; ++x) {
      if (t.at(x, y) == 255) {
        ASSERT_EQ(a.at(20 + x, 20 + y), b.at(20 + x, 20 + y));
      }
    }
  }
}

TEST_F(AssetDir, PerGlyphTextureCountMismatchIsArityError) {
  const std::string tex = put("t.png", ImageBuffer(2, 2, kWhite));
  dsl::ImageFontText l;
  l.text = "ab c";
  l.texture = tex;
  l.per_glyph_textures = std::vector<std::string>{tex, tex};
  l.size_px = 10;
  EXPECT_THROW(render_image_font(ImageBuffer(50, 20, kBlack), l, dir_), ArityError);
  l.per_glyph_textures->push_back(tex);
  EXPECT_NO_THROW(render_image_font(ImageBuffer(50, 20, kBlack), l, dir_));
}

TEST_F(AssetDir, MissingTextureIsIoError) {
  dsl::ImageFontText l;
  l.text = "a";
  l.texture = "nope.png";
  l.size_px = 10;
  EXPECT_THROW(render_image_font(ImageBuffer(20, 20, kBlack), l, dir_), IoError);
}

// Flood

dsl::FloodText flood_layer(int count, bool collision_free) {
  dsl::FloodText l;
  l.words = {"meat", "loaf", "bun", "plate"};
  l.count = count;
  l.size_px_range = {12, 40};
  l.color = {30, 30, 30, 255};
  l.collision_free = collision_free;
  return l;
}

bool intersects(const dsl::Rect& a, const dsl::Rect& b) {
  return a.x < b.x + b.w && b.x < a.x + a.w && a.y < b.y + b.h && b.y < a.y + a.h;
}

TEST(FloodBackground, SingleWordIsReproducible) {
  const ImageBuffer base(200, 200, kWhite);
  RngState r1(77), r2(77);
  const FloodResult a = flood_background(base, flood_layer(1, false), r1);
  const FloodResult b = flood_background(base, flood_layer(1, false), r2);
  ASSERT_EQ(a.placed.size(), 1u);
  EXPECT_EQ(a.placed, b.placed);
  EXPECT_EQ(a.image, b.image);
  EXPECT_EQ(r1.state(), r2.state());
}

TEST(FloodBackground, CollisionFreeBoxesAreDisjoint) {
  const ImageBuffer base(512, 512, kWhite);
  RngState rng(2023);
  const FloodResult r = flood_background(base, flood_layer(20, true), rng);
  EXPECT_EQ(r.placed.size() + r.skipped.size(), 20u);
  EXPECT_GE(r.placed.size(), 15u);
  for (std::size_t i = 0; i < r.placed.size(); ++i) {
    for (std::size_t j = i + 1; j < r.placed.size(); ++j) {
      ASSERT_FALSE(intersects(r.placed[i], r.placed[j])) << i << " vs " << j;
    }
  }
}

TEST(FloodBackground, CrowdedCanvasSkipsWords) {
  const ImageBuffer base(60, 40, kWhite);
  RngState rng(5);
  dsl::FloodText l = flood_layer(30, true);
  l.size_px_range = {20, 20};
  const FloodResult r = flood_background(base, l, rng);
  EXPECT_FALSE(r.skipped.empty());
  EXPECT_EQ(r.placed.size() + r.skipped.size(), 30u);
}

TEST(FloodBackground, LaterLayersStayOnTop) {
  const ImageBuffer base(240, 120, kWhite);
  dsl::AttackSpec spec;
  spec.id = "fig8";
  spec.category = {dsl::Category::kTypography, dsl::Variant::kTextFlood};
  spec.base_image = "x.png";
  spec.seed = 8;
  dsl::FloodText flood = flood_layer(60, false);
  flood.color = {0, 0, 255, 255};
  spec.layers = {flood, text_layer("meat loaf", 40, {255, 0, 0, 255}, {10, 40})};
  const Composition c = compose(base, spec);
  const font::TextLayout t = font::layout_text("sans-plain", "meat loaf", 40);
  int checked = 0;
  for (int y = 0; y < t.height; ++y) {
    for (int x = 0; x < t.width && 10 + x < 240; ++x) {
      if (t.at(x, y) == 255) {
        ASSERT_EQ(c.image.at(10 + x, 40 + y), (Pixel{255, 0, 0, 255}));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100);
  EXPECT_GT(c.metadata.flood_ink_px, 0u);
}

// Rotation

TEST(RotateCanvas, ZeroIsIdentity) {
  const ImageBuffer base = testing::noise_image(13, 7, 2);
  EXPECT_EQ(rotate_canvas(base, {0, dsl::Resample::kNearest}), base);
  EXPECT_EQ(rotate_canvas(base, {360, dsl::Resample::kBilinear}), base);
}

TEST(RotateCanvas, FourQuarterTurnsAreIdentity) {
  const ImageBuffer base = testing::noise_image(13, 7, 2);
  ImageBuffer img = base;
  for (int i = 0; i < 4; ++i) {
    img = rotate_canvas(img, {90, dsl::Resample::kNearest});
    if (i == 0) {
      EXPECT_EQ(img.width(), 7);
    }
  }
  EXPECT_EQ(img, base);
}

TEST(RotateCanvas, QuarterTurnIsCounterclockwise) {
  ImageBuffer base(3, 2, kBlack);
  base.set(2, 0, kWhite);  // top-right
  const ImageBuffer out = rotate_canvas(base, {90, dsl::Resample::kNearest});
  EXPECT_EQ(out.at(0, 0), kWhite);  // ends top-left
}

TEST(RotateCanvas, FortyFiveDegreeBarMatchesInverseMapOracle) {
  ImageBuffer bar(10, 2, kWhite);
  const ImageBuffer out = rotate_canvas(bar, {45, dsl::Resample::kNearest});
  // Bounding box of the rotated 10x2 rectangle: (10 + 2) / sqrt(2) = 8.49.
  const int side = static_cast<int>(std::ceil(12.0 / std::sqrt(2.0)));
  ASSERT_EQ(out.width(), side);
  ASSERT_EQ(out.height(), side);
  const double a = std::acos(-1.0) / 4;
  int lit = 0;
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) {
      // Undo a counterclockwise-as-displayed turn (y grows downward).
      const double px = x + 0.5 - side / 2.0;
      const double py = y + 0.5 - side / 2.0;
      const double sx = 5 + px * std::cos(a) - py * std::sin(a);
      const double sy = 1 + px * std::sin(a) + py * std::cos(a);
      const bool inside = sx >= 0 && sy >= 0 && sx < 10 && sy < 2;
      ASSERT_EQ(out.at(x, y), inside ? kWhite : (Pixel{0, 0, 0, 0})) << x << "," << y;
      if (inside) {
        ++lit;
        // On the rising diagonal: px + py stays near 0.
        EXPECT_LE(std::abs(px + py) / std::sqrt(2.0), 1.0 + 1e-9);
      }
    }
  }
  EXPECT_GE(lit, 14);
}

TEST(RotateCanvas, BilinearKeepsOpaqueInterior) {
  const ImageBuffer base(20, 20, kWhite);
  const ImageBuffer out = rotate_canvas(base, {30, dsl::Resample::kBilinear});
  EXPECT_EQ(out.at(out.width() / 2, out.height() / 2), kWhite);
  EXPECT_EQ(out.at(0, 0), (Pixel{0, 0, 0, 0}));
}

// Positioned glyphs

TEST(PositionedGlyphs, EmptyListIsIdentity) {
  const ImageBuffer base = testing::noise_image(30, 30, 4);
  EXPECT_EQ(embed_positioned_glyphs(base, {}), base);
}

TEST(PositionedGlyphs, EqualsSequentialOverlays) {
  const ImageBuffer base = testing::noise_image(80, 60, 4);
  dsl::PositionedGlyphs l;
  l.glyphs = {{"S", 5, 5, 30, {255, 255, 0, 255}}, {"P", 20, 18, 36, {0, 255, 255, 180}}};
  const ImageBuffer oracle =
      overlay_text(overlay_text(base, text_layer("S", 30, {255, 255, 0, 255}, {5, 5})),
                   text_layer("P", 36, {0, 255, 255, 180}, {20, 18}));
  EXPECT_EQ(embed_positioned_glyphs(base, l), oracle);
}

TEST(PositionedGlyphs, SpaceBarOnlyTouchesKeyCaps) {
  const ImageBuffer base(400, 60, Pixel{200, 200, 200, 255});
  dsl::PositionedGlyphs l;
  const std::string word = "spacebar!";
  for (std::size_t i = 0; i < word.size(); ++i) {
    l.glyphs.push_back({std::string(1, word[i]), 10 + static_cast<int>(i) * 42, 15, 24,
                        {0, 0, 0, 255}});
  }
  const ImageBuffer out = embed_positioned_glyphs(base, l);
  for (int y = 0; y < 60; ++y) {
    for (int x = 0; x < 400; ++x) {
      if (out.at(x, y) == base.at(x, y)) continue;
      bool in_cap = false;
      for (const dsl::PlacedGlyph& g : l.glyphs) {
        const dsl::Rect r = text_overlay_bounds(text_layer(g.character, g.size_px, g.color, {g.x, g.y}));
        in_cap = in_cap || (x >= r.x && y >= r.y && x < r.x + r.w && y < r.y + r.h);
      }
      ASSERT_TRUE(in_cap) << x << "," << y;
    }
  }
  EXPECT_NE(out, base);
}

// Icons and resizing

TEST_F(AssetDir, TransparentIconIsIdentity) {
  const std::string icon = put("clear.png", ImageBuffer(5, 5));
  const ImageBuffer base = testing::noise_image(10, 10, 8);
  dsl::IconOverlay l;
  l.icon = icon;
  l.anchor = {2, 2};
  EXPECT_EQ(overlay_icon(base, l, dir_), base);
}

TEST_F(AssetDir, OpaqueIconReplacesFootprint) {
  const std::string icon = put("red.png", ImageBuffer(2, 2, Pixel{255, 0, 0, 255}));
  const ImageBuffer base(4, 4, kBlack);
  dsl::IconOverlay l;
  l.icon = icon;
  l.anchor = {1, 1};
  const ImageBuffer out = overlay_icon(base, l, dir_);
  EXPECT_EQ(count_diff(base, out), 4);
  EXPECT_EQ(out.at(2, 2), (Pixel{255, 0, 0, 255}));
}

TEST(ResizeBilinear, DoubleSizeMatchesOracle) {
  ImageBuffer src(2, 2);
  src.set(0, 0, {0, 10, 200, 255});
  src.set(1, 0, {2, 30, 100, 255});
  src.set(0, 1, {4, 50, 0, 255});
  src.set(1, 1, {255, 70, 1, 255});
  const ImageBuffer out = resize_bilinear(src, 4, 4);
  // Pixel centers map to -0.25, 0.25, 0.75, 1.25 with edge clamping.
  const double w[4][2] = {{1, 0}, {0.75, 0.25}, {0.25, 0.75}, {0, 1}};
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 4; ++x) {
      for (int c = 0; c < 3; ++c) {
        double v = 0;
        for (int j = 0; j < 2; ++j) {
          for (int i = 0; i < 2; ++i) v += w[x][i] * w[y][j] * src.at(i, j)[c];
        }
        const int expect = static_cast<int>(std::floor(v + 0.5));
        ASSERT_EQ(out.at(x, y)[c], expect) << x << "," << y << " c" << c;
      }
      ASSERT_EQ(out.at(x, y)[3], 255);
    }
  }
}

TEST(ResizeBilinear, InterpolatesPremultiplied) {
  ImageBuffer src(2, 1);
  src.set(0, 0, {255, 0, 0, 255});
  src.set(1, 0, {0, 255, 0, 0});  // invisible green must not bleed in
  const ImageBuffer out = resize_bilinear(src, 4, 1);
  EXPECT_EQ(out.at(1, 0), (Pixel{255, 0, 0, 191}));
  EXPECT_EQ(out.at(2, 0), (Pixel{255, 0, 0, 64}));
  EXPECT_EQ(resize_bilinear(src, 2, 1), src);
}

TEST_F(AssetDir, TintMultipliesChannels) {
  const std::string icon = put("w.png", ImageBuffer(1, 1, kWhite));
  dsl::IconOverlay l;
  l.icon = icon;
  l.tint = dsl::Rgba{255, 128, 0, 255};
  const ImageBuffer out = overlay_icon(ImageBuffer(2, 2, kBlack), l, dir_);
  EXPECT_EQ(out.at(0, 0), (Pixel{255, 128, 0, 255}));
  EXPECT_EQ(out.at(1, 1), kBlack);
}

// Remap and patches

TEST(ColorRemap, EmptyPaletteIsIdentity) {
  const ImageBuffer base = testing::noise_image(9, 9, 1);
  EXPECT_EQ(color_remap(base, {}), base);
}

TEST(ColorRemap, ExactMatch) {
  ImageBuffer base(3, 1);
  base.set(0, 0, {255, 0, 0, 255});
  base.set(1, 0, {254, 0, 0, 255});
  base.set(2, 0, {0, 255, 0, 255});
  dsl::ColorRemap l;
  l.palette = {{{255, 0, 0, 255}, {0, 0, 255, 255}}};
  const ImageBuffer out = color_remap(base, l);
  EXPECT_EQ(out.at(0, 0), (Pixel{0, 0, 255, 255}));
  EXPECT_EQ(out.at(1, 0), base.at(1, 0));
  EXPECT_EQ(out.at(2, 0), base.at(2, 0));
}

TEST(ColorRemap, ToleranceUsesEuclideanRgbDistance) {
  ImageBuffer base(4, 1);
  base.set(0, 0, {205, 3, 2, 77});   // sqrt(38) = 6.16
  base.set(1, 0, {210, 0, 1, 255});  // sqrt(101) = 10.05
  base.set(2, 0, {206, 8, 0, 255});  // sqrt(100) = 10
  base.set(3, 0, {200, 0, 0, 9});
  dsl::ColorRemap l;
  l.palette = {{{200, 0, 0, 255}, {0, 0, 0, 255}}, {{205, 3, 2, 255}, {1, 1, 1, 255}}};
  l.tolerance = 10;
  const ImageBuffer out = color_remap(base, l);
  EXPECT_EQ(out.at(0, 0), (Pixel{0, 0, 0, 77}));  // first rule wins, alpha kept
  EXPECT_EQ(out.at(1, 0), (Pixel{1, 1, 1, 255}));  // only the second rule reaches it
  EXPECT_EQ(out.at(2, 0), (Pixel{0, 0, 0, 255}));
  EXPECT_EQ(out.at(3, 0), (Pixel{0, 0, 0, 9}));
}

TEST(MaskPatch, ZeroAreaIsIdentity) {
  const ImageBuffer base = testing::noise_image(9, 9, 1);
  dsl::MaskPatch l;
  l.bounds = {3, 3, 0, 5};
  l.fill = {1, 2, 3, 255};
  EXPECT_EQ(mask_patch(base, l), base);
}

TEST(MaskPatch, FullCanvasOpaqueRect) {
  dsl::MaskPatch l;
  l.bounds = {0, 0, 9, 9};
  l.fill = {1, 2, 3, 255};
  EXPECT_EQ(mask_patch(testing::noise_image(9, 9, 1), l), ImageBuffer(9, 9, Pixel{1, 2, 3, 255}));
}

TEST(MaskPatch, EllipseMembership) {
  for (auto [w, h] : {std::pair{11, 11}, std::pair{11, 6}, std::pair{4, 9}}) {
    const ImageBuffer base(w, h, kBlack);
    dsl::MaskPatch l;
    l.shape = dsl::PatchShape::kEllipse;
    l.bounds = {0, 0, w, h};
    l.fill = {255, 255, 255, 255};
    const ImageBuffer out = mask_patch(base, l);
    const double a = w / 2.0, b = h / 2.0;
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const double dx = (x + 0.5 - a) / a;
        const double dy = (y + 0.5 - b) / b;
        ASSERT_EQ(out.at(x, y), dx * dx + dy * dy <= 1 ? kWhite : kBlack)
            << w << "x" << h << " at " << x << "," << y;
      }
    }
  }
}

TEST(MaskPatch, TranslucentFillBlends) {
  dsl::MaskPatch l;
  l.bounds = {0, 0, 1, 1};
  l.fill = {255, 255, 255, 128};
  EXPECT_EQ(mask_patch(ImageBuffer(2, 2, kBlack), l).at(0, 0), (Pixel{128, 128, 128, 255}));
}

TEST(MaskPatch, OutOfCanvasIsBoundsError) {
  dsl::MaskPatch l;
  l.bounds = {5, 5, 6, 1};
  EXPECT_THROW(mask_patch(ImageBuffer(10, 10, kBlack), l), BoundsError);
}

// Compose

dsl::AttackSpec spec_with(std::vector<dsl::LayerOp> layers, std::uint64_t seed = 0) {
  dsl::AttackSpec spec;
  spec.id = "t";
  spec.category = {dsl::Category::kTypography, dsl::Variant::kOov};
  spec.base_image = "base.png";
  spec.layers = std::move(layers);
  spec.seed = seed;
  return spec;
}

TEST(Compose, TransparentLayersKeepBase) {
  const ImageBuffer base = testing::apple_image(64, 64);
  dsl::MaskPatch patch;
  patch.bounds = {1, 1, 10, 10};
  patch.fill = {0, 0, 0, 0};
  const Composition c =
      compose(base, spec_with({text_layer("bee", 20, {0, 0, 0, 0}, {5, 5}), patch, dsl::Rotation{}}));
  EXPECT_EQ(c.image, base);
  EXPECT_EQ(c.metadata, CompositionMetadata{});
}

TEST(Compose, DeterministicBytes) {
  const ImageBuffer base = testing::apple_image(96, 96);
  dsl::FloodText flood = flood_layer(10, true);
  flood.size_px_range = {8, 14};
  dsl::AttackSpec spec = spec_with({flood, text_layer("bee", 30, {0, 0, 0, 255}, {20, 30})}, 42);
  spec.target_label = "bee";
  const Composition a = compose(base, spec);
  const Composition b = compose(base, spec);
  EXPECT_EQ(sha256_hex(encode_png(a.image, &a.metadata)), sha256_hex(encode_png(b.image, &b.metadata)));
  EXPECT_EQ(a.metadata.target_label, "bee");
  spec.seed = 43;
  EXPECT_NE(compose(base, spec).image, a.image);
}

TEST(Compose, CountsTextInk) {
  const ImageBuffer base(120, 80, kWhite);
  const dsl::TextOverlay l = text_layer("bee", 30, {0, 0, 0, 255}, {10, 10});
  const Composition c = compose(base, spec_with({l}));
  EXPECT_EQ(c.metadata.text_ink_px, testing::text_ink_oracle(l, 120, 80));
  EXPECT_EQ(c.metadata.flood_ink_px, 0u);
}

TEST(Compose, OpaquePatchErasesInk) {
  const ImageBuffer base(120, 80, kWhite);
  dsl::MaskPatch patch;
  patch.bounds = {0, 0, 120, 80};
  patch.fill = {9, 9, 9, 255};
  const Composition c = compose(base, spec_with({text_layer("bee", 30, {0, 0, 0, 255}, {10, 10}), patch}));
  EXPECT_EQ(c.metadata.text_ink_px, 0u);
}

TEST(Compose, OutputSizeChangesOnlyByRotation) {
  const ImageBuffer base(40, 20, kWhite);
  const Composition c = compose(base, spec_with({dsl::Rotation{90, dsl::Resample::kNearest},
                                                 text_layer("a", 8, {0, 0, 0, 255}, {2, 30})}));
  EXPECT_EQ(c.image.width(), 20);
  EXPECT_EQ(c.image.height(), 40);
}

TEST(Compose, ValidationFailureIsBoundsError) {
  const ImageBuffer base(40, 20, kWhite);
  try {
    compose(base, spec_with({text_layer("a", 8, {0, 0, 0, 255}, {2, 2}),
                             text_layer("a", 8, {0, 0, 0, 255}, {50, 2})}));
    FAIL() << "expected BoundsError";
  } catch (const BoundsError& e) {
    EXPECT_EQ(e.layer_index(), 1u);
  }
}

TEST(Compose, LayerErrorsCarryTheirIndex) {
  const ImageBuffer base(40, 20, kWhite);
  dsl::IconOverlay icon;
  icon.icon = "/nonexistent/icon.png";
  try {
    compose(base, spec_with({text_layer("a", 8, {0, 0, 0, 255}, {2, 2}), icon}));
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_EQ(e.layer_index(), 1u);
  }
}

}  // namespace
}  // namespace glyphclash::compositor
