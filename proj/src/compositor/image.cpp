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

#include "glyphclash/image.h"

#include <openssl/evp.h>
#include <png.h>

#include <csetjmp>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include "glyphclash/errors.h"
#include "json.hpp"

namespace glyphclash {
namespace {

constexpr int kMaxDimension = 1 << 15;
constexpr char kMetadataKey[] = "glyphclash:composition";

struct ReadCursor {
  const unsigned char* data;
  std::size_t size;
  std::size_t pos;
};

void read_callback(png_structp png, png_bytep out, png_size_t length) {
  auto* cursor = static_cast<ReadCursor*>(png_get_io_ptr(png));
  if (cursor->size - cursor->pos < length) {
    png_error(png, "unexpected end of PNG data");
  }
  std::memcpy(out, cursor->data + cursor->pos, length);
  cursor->pos += length;
}

void write_callback(png_structp png, png_bytep data, png_size_t length) {
  auto* out = static_cast<std::string*>(png_get_io_ptr(png));
  out->append(reinterpret_cast<const char*>(data), length);
}

void flush_callback(png_structp) {}

// libpng reports errors via longjmp; the message is stashed here first.
struct ErrorSink {
  char message[256];
};

void error_callback(png_structp png, png_const_charp msg) {
  auto* sink = static_cast<ErrorSink*>(png_get_error_ptr(png));
  std::snprintf(sink->message, sizeof(sink->message), "%s", msg);
  png_longjmp(png, 1);
}

void warning_callback(png_structp, png_const_charp) {}

std::string metadata_to_text(const CompositionMetadata& m) {
  nlohmann::ordered_json j;
  j["text_ink_px"] = m.text_ink_px;
  j["flood_ink_px"] = m.flood_ink_px;
  if (m.target_label) j["target_label"] = *m.target_label;
  // ASCII-only so the value is valid Latin-1 tEXt.
  return j.dump(-1, ' ', true);
}

std::optional<CompositionMetadata> metadata_from_text(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    CompositionMetadata m;
    m.text_ink_px = j.at("text_ink_px").get<std::uint64_t>();
    m.flood_ink_px = j.at("flood_ink_px").get<std::uint64_t>();
    if (j.contains("target_label")) {
      m.target_label = j.at("target_label").get<std::string>();
    }
    return m;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void collect_metadata(png_structp png, png_infop info, std::string* out) {
  png_textp text = nullptr;
  int count = 0;
  if (png_get_text(png, info, &text, &count) > 0) {
    for (int i = 0; i < count; ++i) {
      if (std::strcmp(text[i].key, kMetadataKey) == 0) {
        out->assign(text[i].text, text[i].text_length);
      }
    }
  }
}

}  // namespace

ImageBuffer::ImageBuffer(int width, int height, Pixel fill)
    : width_(width), height_(height) {
  if (width < 0 || height < 0 || width > kMaxDimension || height > kMaxDimension) {
    throw BoundsError("image dimensions out of range: " + std::to_string(width) +
                      "x" + std::to_string(height));
  }
  pixels_.resize(pixel_count() * 4);
  for (std::size_t i = 0; i < pixels_.size(); i += 4) {
    std::memcpy(&pixels_[i], fill.data(), 4);
  }
}

ImageBuffer::ImageBuffer(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width < 0 || height < 0 || width > kMaxDimension || height > kMaxDimension) {
    throw BoundsError("image dimensions out of range");
  }
  if (pixels_.size() != pixel_count() * 4) {
    throw BoundsError("pixel data size does not match dimensions");
  }
}

std::string encode_png(const ImageBuffer& image, const CompositionMetadata* requested) {
  if (image.empty()) throw BoundsError("cannot encode an empty image");
  // Default metadata is not worth a chunk; leaving it out keeps images
  // that carry no attack text byte-identical to a plain encode.
  const CompositionMetadata* const metadata =
      requested != nullptr && *requested == CompositionMetadata{} ? nullptr : requested;
  std::string out;
  std::vector<png_bytep> rows(static_cast<std::size_t>(image.height()));
  auto* base = const_cast<std::uint8_t*>(image.bytes().data());
  for (int y = 0; y < image.height(); ++y) {
    rows[static_cast<std::size_t>(y)] =
        base + static_cast<std::size_t>(y) * static_cast<std::size_t>(image.width()) * 4;
  }
  std::string text_value;
  if (metadata != nullptr) text_value = metadata_to_text(*metadata);
  char key[sizeof(kMetadataKey)];
  std::memcpy(key, kMetadataKey, sizeof(kMetadataKey));
  ErrorSink sink{};

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &sink,
                                            error_callback, warning_callback);
  if (png == nullptr) throw IoError("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError(std::string("PNG encode failed: ") + sink.message);
  }
  png_set_write_fn(png, &out, write_callback, flush_callback);
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.width()),
               static_cast<png_uint_32>(image.height()), 8, PNG_COLOR_TYPE_RGBA,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_set_compression_level(png, 9);
  png_set_filter(png, PNG_FILTER_TYPE_BASE, PNG_FILTER_NONE);
  png_text text{};
  if (metadata != nullptr) {
    text.compression = PNG_TEXT_COMPRESSION_NONE;
    text.key = key;
    text.text = text_value.data();
    text.text_length = text_value.size();
    png_set_text(png, info, &text, 1);
  }
  png_set_rows(png, info, rows.data());
  png_write_png(png, info, PNG_TRANSFORM_IDENTITY, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

DecodedPng decode_png(std::string_view bytes) {
  if (bytes.size() < 8 ||
      png_sig_cmp(reinterpret_cast<png_const_bytep>(bytes.data()), 0, 8) != 0) {
    throw DecodeError("not a PNG file");
  }
  ReadCursor cursor{reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), 0};
  ErrorSink sink{};
  std::vector<std::uint8_t> pixels;
  std::vector<png_bytep> rows;
  std::string meta_text;
  png_uint_32 width = 0;
  png_uint_32 height = 0;

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &sink,
                                           error_callback, warning_callback);
  if (png == nullptr) throw DecodeError("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  png_infop end_info = png_create_info_struct(png);
  if (info == nullptr || end_info == nullptr) {
    png_destroy_read_struct(&png, &info, &end_info);
    throw DecodeError("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, &end_info);
    throw DecodeError(std::string("PNG decode failed: ") + sink.message);
  }
  png_set_read_fn(png, &cursor, read_callback);
  png_set_user_limits(png, kMaxDimension, kMaxDimension);
  png_read_info(png, info);
  width = png_get_image_width(png, info);
  height = png_get_image_height(png, info);
  const int color_type = png_get_color_type(png, info);
  const int bit_depth = png_get_bit_depth(png, info);

  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (bit_depth == 16) png_set_scale_16(png);
  if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
    png_set_gray_to_rgb(png);
  }
  if (!(color_type & PNG_COLOR_MASK_ALPHA) &&
      !png_get_valid(png, info, PNG_INFO_tRNS)) {
    png_set_add_alpha(png, 0xFF, PNG_FILLER_AFTER);
  }
  png_set_interlace_handling(png);
  png_read_update_info(png, info);
  if (png_get_rowbytes(png, info) != static_cast<png_size_t>(width) * 4) {
    png_error(png, "unexpected row layout after conversion");
  }
  pixels.resize(static_cast<std::size_t>(width) * height * 4);
  rows.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) {
    rows[y] = pixels.data() + static_cast<std::size_t>(y) * width * 4;
  }
  collect_metadata(png, info, &meta_text);
  png_read_image(png, rows.data());
  png_read_end(png, end_info);
  collect_metadata(png, end_info, &meta_text);
  png_destroy_read_struct(&png, &info, &end_info);

  DecodedPng out;
  out.image = ImageBuffer(static_cast<int>(width), static_cast<int>(height),
                          std::move(pixels));
  if (!meta_text.empty()) out.metadata = metadata_from_text(meta_text);
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed for '" + path.string() + "'");
  return data;
}

void write_file(const std::filesystem::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.close();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

DecodedPng load_png_file(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw IoError("no such file: '" + path.string() + "'");
  }
  return decode_png(read_file(path));
}

ImageBuffer load_image(const std::filesystem::path& path) {
  return load_png_file(path).image;
}

void save_image(const ImageBuffer& image, const std::filesystem::path& path,
                const CompositionMetadata* metadata) {
  write_file(path, encode_png(image, metadata));
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw IoError("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

std::string base64_encode(std::string_view data) {
  std::string out(4 * ((data.size() + 2) / 3), '\0');
  const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                                reinterpret_cast<const unsigned char*>(data.data()),
                                static_cast<int>(data.size()));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

std::string base64_decode(std::string_view text) {
  if (text.size() % 4 != 0) throw DecodeError("base64 length is not a multiple of 4");
  if (text.empty()) return {};
  std::string out(3 * (text.size() / 4), '\0');
  const int n = EVP_DecodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                                reinterpret_cast<const unsigned char*>(text.data()),
                                static_cast<int>(text.size()));
  if (n < 0) throw DecodeError("malformed base64");
  std::size_t padding = 0;
  if (text.back() == '=') ++padding;
  if (text.size() >= 2 && text[text.size() - 2] == '=') ++padding;
  out.resize(static_cast<std::size_t>(n) - padding);
  return out;
}

}  // namespace glyphclash
