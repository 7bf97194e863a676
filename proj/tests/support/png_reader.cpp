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


#include "support/png_reader.h"

#include <zlib.h>

#include <cstdlib>
#include <stdexcept>

namespace glyphclash::testing {
namespace {

std::uint32_t be32(const unsigned char* p) {
  return (std::uint32_t{p[0]} << 24) | (std::uint32_t{p[1]} << 16) |
         (std::uint32_t{p[2]} << 8) | std::uint32_t{p[3]};
}

int paeth(int a, int b, int c) {
  const int p = a + b - c;
  const int pa = std::abs(p - a);
  const int pb = std::abs(p - b);
  const int pc = std::abs(p - c);
  if (pa <= pb && pa <= pc) return a;
  return pb <= pc ? b : c;
}

std::string inflate_all(const std::string& in) {
  z_stream zs{};
  if (inflateInit(&zs) != Z_OK) throw std::runtime_error("inflateInit");
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(in.data()));
  zs.avail_in = static_cast<uInt>(in.size());
  std::string out;
  char buf[16384];
  int rc = Z_OK;
  while (rc != Z_STREAM_END) {
    zs.next_out = reinterpret_cast<Bytef*>(buf);
    zs.avail_out = sizeof(buf);
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&zs);
      throw std::runtime_error("inflate failed");
    }
    out.append(buf, sizeof(buf) - zs.avail_out);
  }
  inflateEnd(&zs);
  return out;
}

}  // namespace

RawPng read_png(std::string_view bytes) {
  static const unsigned char kSig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  if (bytes.size() < 8 || std::char_traits<char>::compare(
                              bytes.data(), reinterpret_cast<const char*>(kSig), 8) != 0) {
    throw std::runtime_error("bad signature");
  }
  RawPng png;
  std::string idat;
  std::size_t pos = 8;
  bool seen_end = false;
  while (!seen_end) {
    if (pos + 12 > bytes.size()) throw std::runtime_error("truncated chunk");
    const std::uint32_t len = be32(p + pos);
    if (pos + 12 + len > bytes.size()) throw std::runtime_error("truncated chunk body");
    const std::string type(bytes.substr(pos + 4, 4));
    const unsigned char* data = p + pos + 8;
    const std::uint32_t crc = be32(data + len);
    if (crc32(crc32(0, nullptr, 0), p + pos + 4, len + 4) != crc) {
      throw std::runtime_error("CRC mismatch in " + type);
    }
    png.chunk_types.push_back(type);
    if (type == "IHDR") {
      png.width = be32(data);
      png.height = be32(data + 4);
      if (data[8] != 8 || data[9] != 6 || data[12] != 0) {
        throw std::runtime_error("only 8-bit RGBA non-interlaced");
      }
    } else if (type == "IDAT") {
      idat.append(reinterpret_cast<const char*>(data), len);
    } else if (type == "tEXt") {
      const std::string body(reinterpret_cast<const char*>(data), len);
      const std::size_t nul = body.find('\0');
      if (nul == std::string::npos) throw std::runtime_error("tEXt without separator");
      png.text[body.substr(0, nul)] = body.substr(nul + 1);
    } else if (type == "IEND") {
      seen_end = true;
    }
    pos += 12 + len;
  }
  const std::string raw = inflate_all(idat);
  const std::size_t stride = std::size_t{png.width} * 4;
  if (raw.size() != (stride + 1) * png.height) throw std::runtime_error("bad IDAT size");
  png.rgba.assign(stride * png.height, 0);
  for (std::uint32_t y = 0; y < png.height; ++y) {
    const auto* in = reinterpret_cast<const unsigned char*>(raw.data()) + y * (stride + 1);
    const int filter = in[0];
    ++in;
    std::uint8_t* out = png.rgba.data() + y * stride;
    const std::uint8_t* up = y > 0 ? out - stride : nullptr;
    for (std::size_t i = 0; i < stride; ++i) {
      const int a = i >= 4 ? out[i - 4] : 0;
      const int b = up != nullptr ? up[i] : 0;
      const int c = (up != nullptr && i >= 4) ? up[i - 4] : 0;
      int pred = 0;
      switch (filter) {
        case 0: pred = 0; break;
        case 1: pred = a; break;
        case 2: pred = b; break;
        case 3: pred = (a + b) / 2; break;
        case 4: pred = paeth(a, b, c); break;
        default: throw std::runtime_error("bad filter type");
      }
      out[i] = static_cast<std::uint8_t>(in[i] + pred);
    }
  }
  return png;
}

}  // namespace glyphclash::testing
