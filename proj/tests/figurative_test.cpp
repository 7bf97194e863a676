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

#include <string>
#include <vector>

#include "glyphclash/compositor.h"
#include "glyphclash/errors.h"
#include "glyphclash/rng.h"
#include "support/fixtures.h"

namespace glyphclash::compositor {
namespace {

constexpr Pixel kBlack{0, 0, 0, 255};
constexpr Pixel kWhite{255, 255, 255, 255};

Bitmap from_rows(const std::vector<std::string>& rows) {
  Bitmap b{static_cast<int>(rows[0].size()), static_cast<int>(rows.size()), {}};
  for (const std::string& r : rows) {
    for (char c : r) b.bits.push_back(c == '#' ? 1 : 0);
  }
  return b;
}

bool subset(const Bitmap& a, const Bitmap& b) {
  for (std::size_t i = 0; i < a.bits.size(); ++i) {
    if (a.bits[i] && !b.bits[i]) return false;
  }
  return true;
}

ImageBuffer render(const Bitmap& b) {
  ImageBuffer img(b.width, b.height, kWhite);
  for (int y = 0; y < b.height; ++y) {
    for (int x = 0; x < b.width; ++x) {
      if (b.at(x, y)) img.set(x, y, kBlack);
    }
  }
  return img;
}

ImageBuffer transform(const ImageBuffer& in, dsl::FigurativeParams params, std::uint64_t seed = 0) {
  RngState rng(seed);
  return figurative_transform(in, dsl::Figurative{std::move(params)}, rng);
}

TEST(ZhangSuen, SolidFiveByFiveSquare) {
  // Worked by hand: pass 1 strips the south and east edges plus the
  // north-west corner, pass 2 the remaining north and west edges, and the
  // 3x3 remainder collapses to its center in the next round.
  const Bitmap square = from_rows({"#####", "#####", "#####", "#####", "#####"});
  EXPECT_EQ(zhang_suen_thin(square), from_rows({".....", ".....", "..#..", ".....", "....."}));
}

TEST(ZhangSuen, OnePixelLinesAreFixedPoints) {
  const Bitmap h = from_rows({".........", ".#######.", "........."});
  EXPECT_EQ(zhang_suen_thin(h), h);
  const Bitmap diag = from_rows({"#....", ".#...", "..#..", "...#.", "....#"});
  EXPECT_EQ(zhang_suen_thin(diag), diag);
}

TEST(ZhangSuen, FixturePropertiesHold) {
  const std::vector<Bitmap> fixtures = testing::bitmap_fixtures();
  ASSERT_EQ(fixtures.size(), 20u);
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const Bitmap once = zhang_suen_thin(fixtures[i]);
    EXPECT_TRUE(subset(once, fixtures[i])) << "fixture " << i;
    EXPECT_EQ(zhang_suen_thin(once), once) << "fixture " << i;
    EXPECT_EQ(once.width, fixtures[i].width);
  }
}

TEST(Figurative, SkeletonOfThickBarIsInsideBar) {
  ImageBuffer img(40, 20, kWhite);
  for (int y = 6; y < 14; ++y) {
    for (int x = 4; x < 36; ++x) img.set(x, y, kBlack);
  }
  const ImageBuffer out = transform(img, dsl::SkeletonParams{128});
  int black = 0;
  for (int y = 0; y < 20; ++y) {
    for (int x = 0; x < 40; ++x) {
      if (out.at(x, y) == kBlack) {
        ++black;
        EXPECT_EQ(img.at(x, y), kBlack);
      }
    }
  }
  EXPECT_GT(black, 20);
  EXPECT_LT(black, 40 * 2);
}

TEST(Figurative, SkeletonMatchesBitmapThinning) {
  for (const Bitmap& b : testing::bitmap_fixtures()) {
    EXPECT_EQ(transform(render(b), dsl::SkeletonParams{128}), render(zhang_suen_thin(b)));
  }
}

TEST(Figurative, DotArtOnWhiteIsBlank) {
  const ImageBuffer white(30, 20, kWhite);
  EXPECT_EQ(transform(white, dsl::DotArtParams{4, 128}), white);
}

TEST(Figurative, DotArtDiscs) {
  const ImageBuffer black(12, 12, kBlack);
  const ImageBuffer out = transform(black, dsl::DotArtParams{6, 128});
  // Centers at 3 and 9; a disc of diameter s - 1 = 5 leaves the corners of
  // each 6x6 cell white.
  for (int c : {3, 9}) {
    EXPECT_EQ(out.at(c, c), kBlack);
    EXPECT_EQ(out.at(c + 2, c), kBlack);
    EXPECT_EQ(out.at(c + 2, c + 2), kWhite);
  }
  EXPECT_EQ(out.at(0, 0), kWhite);
}

TEST(Figurative, AsciiArtPicksCharacterByLuma) {
  const dsl::AsciiArtParams p{8, "@ ", "sans-plain"};
  const ImageBuffer white(16, 16, kWhite);
  EXPECT_EQ(transform(white, p), white);  // index 1: space
  const ImageBuffer dark(16, 16, kBlack);
  const ImageBuffer out = transform(dark, p);
  EXPECT_NE(out, white);
  // Every cell holds the same glyph.
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) EXPECT_EQ(out.at(x, y), out.at(x + 8, y + 8));
  }
  EXPECT_EQ(transform(ImageBuffer(16, 16, Pixel{128, 128, 128, 255}), p), white);
  EXPECT_NE(transform(ImageBuffer(16, 16, Pixel{127, 127, 127, 255}), p), white);
}

TEST(Figurative, AsciiArtTreatsTransparentAsWhite) {
  EXPECT_EQ(luma_on_white({0, 0, 0, 0}), 255);
  EXPECT_EQ(luma_on_white({255, 0, 0, 255}), 76);
  EXPECT_EQ(luma_on_white({0, 255, 0, 255}), 150);
  EXPECT_EQ(luma_on_white({0, 0, 255, 255}), 29);
}

TEST(Figurative, PaintByNumbersTwoRegions) {
  ImageBuffer img(40, 20, Pixel{220, 30, 30, 255});
  for (int y = 0; y < 20; ++y) {
    for (int x = 20; x < 40; ++x) img.set(x, y, {30, 30, 220, 255});
  }
  const ImageBuffer a = transform(img, dsl::PaintByNumbersParams{2, 8}, 5);
  EXPECT_EQ(a, transform(img, dsl::PaintByNumbersParams{2, 8}, 5));
  // The boundary sits on the last column of the left region.
  for (int y = 0; y < 20; ++y) EXPECT_EQ(a.at(19, y), kBlack);
  EXPECT_EQ(a.at(0, 0), kWhite);
  // Each region got a digit near its centroid.
  int left = 0, right = 0;
  for (int y = 0; y < 20; ++y) {
    for (int x = 0; x < 40; ++x) {
      if (a.at(x, y) == kWhite || x == 19) continue;
      (x < 19 ? left : right)++;
    }
  }
  EXPECT_GT(left, 0);
  EXPECT_GT(right, 0);
}

TEST(Figurative, SmallRegionsGetNoDigit) {
  ImageBuffer img(40, 20, Pixel{220, 30, 30, 255});
  for (int y = 0; y < 20; ++y) {
    for (int x = 20; x < 40; ++x) img.set(x, y, {30, 30, 220, 255});
  }
  const ImageBuffer out = transform(img, dsl::PaintByNumbersParams{2, 30}, 5);
  for (int y = 0; y < 20; ++y) {
    for (int x = 0; x < 40; ++x) EXPECT_EQ(out.at(x, y), x == 19 ? kBlack : kWhite);
  }
}

TEST(Figurative, BadParamsAreParamErrors) {
  const ImageBuffer img(8, 8, kWhite);
  EXPECT_THROW(transform(img, dsl::DotArtParams{1, 128}), ParamError);
  EXPECT_THROW(transform(img, dsl::SkeletonParams{300}), ParamError);
  EXPECT_THROW(transform(img, dsl::PaintByNumbersParams{1, 8}), ParamError);
  EXPECT_THROW(transform(img, dsl::AsciiArtParams{1, "@", "sans-plain"}), ParamError);
}

}  // namespace
}  // namespace glyphclash::compositor
