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

#include <filesystem>
#include <string>

#include "glyphclash/errors.h"
#include "glyphclash/image.h"
#include "support/fixtures.h"
#include "support/png_reader.h"

namespace glyphclash {
namespace {

namespace fs = std::filesystem;

// Hand-assembled files: 1x1 RGB red, and 2x1 gray+alpha.
constexpr char kRedRgb[] =
    "iVBORw0KGgoAAAANSUhEUgAAAAEAAAABCAIAAACQd1PeAAAADElEQVR4nGP4z8AAAAMBAQDJ/pLvAAAAAElFTkSuQmCC";
constexpr char kGrayAlpha[] =
    "iVBORw0KGgoAAAANSUhEUgAAAAIAAAABCAQAAABeK7cBAAAADUlEQVR4nGPgEjnxHwAC+AHmXJDsqwAAAABJRU5ErkJggg==";

class ImageFiles : public ::testing::Test {
 protected:
  void SetUp() override { dir_ = testing::make_temp_dir("image"); }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

ImageBuffer gradient3() {
  ImageBuffer img(3, 3);
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 3; ++x) {
      img.set(x, y, {static_cast<std::uint8_t>(x * 100), static_cast<std::uint8_t>(y * 120),
                     static_cast<std::uint8_t>(7 + x + y), static_cast<std::uint8_t>(255 - 40 * x * y)});
    }
  }
  return img;
}

TEST(ImageBufferTest, RejectsBadDimensions) {
  EXPECT_THROW(ImageBuffer(-1, 2), BoundsError);
  EXPECT_THROW(ImageBuffer(2, 2, std::vector<std::uint8_t>(15)), BoundsError);
  EXPECT_TRUE(ImageBuffer(0, 5).empty());
}

TEST(DecodePng, OpaqueRgbGetsFullAlpha) {
  const DecodedPng d = decode_png(base64_decode(kRedRgb));
  ASSERT_EQ(d.image.width(), 1);
  EXPECT_EQ(d.image.at(0, 0), (ImageBuffer::Pixel{255, 0, 0, 255}));
  EXPECT_FALSE(d.metadata);
}

TEST(DecodePng, GrayAlphaExpands) {
  const DecodedPng d = decode_png(base64_decode(kGrayAlpha));
  EXPECT_EQ(d.image.at(0, 0), (ImageBuffer::Pixel{10, 10, 10, 20}));
  EXPECT_EQ(d.image.at(1, 0), (ImageBuffer::Pixel{200, 200, 200, 255}));
}

TEST(DecodePng, GarbageIsDecodeError) {
  EXPECT_THROW(decode_png("not a png"), DecodeError);
  std::string truncated = encode_png(gradient3());
  truncated.resize(truncated.size() / 2);
  EXPECT_THROW(decode_png(truncated), DecodeError);
}

TEST(EncodePng, IndependentReaderAgrees) {
  const ImageBuffer img = testing::noise_image(17, 5, 3);
  ImageBuffer with_alpha = img;
  with_alpha.set(2, 2, {1, 2, 3, 0});
  with_alpha.set(3, 2, {4, 5, 6, 77});
  const testing::RawPng raw = testing::read_png(encode_png(with_alpha));
  EXPECT_EQ(raw.width, 17u);
  EXPECT_EQ(raw.height, 5u);
  EXPECT_TRUE(std::equal(raw.rgba.begin(), raw.rgba.end(), with_alpha.bytes().begin()));
  EXPECT_TRUE(raw.text.empty());
}

TEST(EncodePng, MetadataTravelsAsText) {
  CompositionMetadata m;
  m.text_ink_px = 12;
  m.flood_ink_px = 3;
  m.target_label = "bée";
  const std::string png = encode_png(gradient3(), &m);
  const testing::RawPng raw = testing::read_png(png);
  ASSERT_EQ(raw.text.count("glyphclash:composition"), 1u);
  EXPECT_EQ(raw.text.at("glyphclash:composition"),
            R"({"text_ink_px":12,"flood_ink_px":3,"target_label":"b\u00e9e"})");
  const DecodedPng d = decode_png(png);
  EXPECT_EQ(d.metadata, m);
  EXPECT_EQ(d.image, gradient3());
}

TEST(EncodePng, DefaultMetadataIsOmitted) {
  const CompositionMetadata none;
  EXPECT_EQ(encode_png(gradient3(), &none), encode_png(gradient3()));
}

TEST_F(ImageFiles, RoundTripAndStableHash) {
  const ImageBuffer img = gradient3();
  save_image(img, dir_ / "a.png");
  save_image(img, dir_ / "b.png");
  EXPECT_EQ(load_image(dir_ / "a.png"), img);
  EXPECT_EQ(sha256_hex(read_file(dir_ / "a.png")), sha256_hex(read_file(dir_ / "b.png")));
}

TEST_F(ImageFiles, MissingFileIsIoError) {
  EXPECT_THROW(load_image(dir_ / "missing.png"), IoError);
}

TEST_F(ImageFiles, UnwritablePathIsIoError) {
  write_file(dir_ / "plain", "x");
  EXPECT_THROW(save_image(gradient3(), dir_ / "plain" / "out.png"), IoError);
}

TEST(Sha256, KnownVectors) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Base64, RoundTripAndErrors) {
  for (std::string s : {"", "f", "fo", "foo", "foob", "fooba", "foobar"}) {
    EXPECT_EQ(base64_decode(base64_encode(s)), s);
  }
  EXPECT_EQ(base64_encode("foobar"), "Zm9vYmFy");
  EXPECT_EQ(base64_encode("fo"), "Zm8=");
  EXPECT_THROW(base64_decode("Zm9v!"), DecodeError);
  EXPECT_THROW(base64_decode("Zm9"), DecodeError);
}

}  // namespace
}  // namespace glyphclash
