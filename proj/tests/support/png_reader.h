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


// Minimal PNG reader used as a test oracle. It shares no code with the
// library's libpng path: chunks are walked by hand and IDAT is inflated with
// zlib directly. Only 8-bit RGBA, non-interlaced images are supported.

#ifndef GLYPHCLASH_TESTS_SUPPORT_PNG_READER_H_
#define GLYPHCLASH_TESTS_SUPPORT_PNG_READER_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace glyphclash::testing {

struct RawPng {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint8_t> rgba;  // unfiltered, row-major
  std::map<std::string, std::string> text;  // tEXt chunks
  std::vector<std::string> chunk_types;  // in file order
};

// Throws std::runtime_error on anything it does not understand, including
// CRC mismatches.
RawPng read_png(std::string_view bytes);

}  // namespace glyphclash::testing

#endif  // GLYPHCLASH_TESTS_SUPPORT_PNG_READER_H_
