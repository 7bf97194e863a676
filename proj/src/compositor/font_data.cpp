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

// GENERATED by tools/gen_fonts.py. Do not edit.
// Glyph outlines derived from the DejaVu fonts; see assets/fonts/LICENSE_DEJAVU.

#include "compositor/font_data.h"

namespace glyphclash::compositor::font_data {
namespace {

constexpr unsigned char k_sans_plain_bits[] = {
    0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0x00,0x00,0x00,0x00,
    0xf0,0xf0,0xf0,0xf0,0xf0,0xe1,0xe0,0xe1,0xe0,0xe1,0xe0,0xe1,0xe0,0xe1,0xe0,0xe1,0xe0,0xe1,0xe0,0xe1,0xe0,0xe1,0xe0,0xe1,
    0xe0,0xe1,0xe0,0x00,0x1c,0x0e,0x00,0x00,0x1c,0x0e,0x00,0x00,0x1c,0x0e,0x00,0x00,0x3c,0x1c,0x00,0x00,0x38,0x1c,0x00,0x00,
    0x38,0x1c,0x00,0x00,0x38,0x1c,0x00,0x00,0x78,0x38,0x00,0x3f,0xff,0xff,0xe0,0x3f,0xff,0xff,0xe0,0x3f,0xff,0xff,0xe0,0x00,
    0xf0,0x70,0x00,0x00,0xe0,0x70,0x00,0x00,0xe0,0x70,0x00,0x00,0xe0,0x70,0x00,0x00,0xe0,0xf0,0x00,0x01,0xc0,0xe0,0x00,0x01,
    0xc0,0xe0,0x00,0xff,0xff,0xff,0x80,0xff,0xff,0xff,0x80,0xff,0xff,0xff,0x80,0x03,0x81,0xc0,0x00,0x03,0x81,0xc0,0x00,0x03,
    0x83,0xc0,0x00,0x07,0x03,0x80,0x00,0x07,0x03,0x80,0x00,0x07,0x03,0x80,0x00,0x07,0x07,0x80,0x00,0x0e,0x07,0x00,0x00,0x00,
    0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x03,0xfe,0x00,0x1f,0xff,0x80,0x3f,0xff,0x80,0x7c,
    0x61,0x80,0x78,0x60,0x00,0xf0,0x60,0x00,0xf0,0x60,0x00,0xf0,0x60,0x00,0x78,0x60,0x00,0x7c,0x60,0x00,0x3f,0xe0,0x00,0x1f,
    0xfc,0x00,0x0f,0xff,0x00,0x00,0xff,0x80,0x00,0x6f,0xc0,0x00,0x63,0xe0,0x00,0x61,0xe0,0x00,0x61,0xe0,0x00,0x61,0xe0,0x00,
    0x61,0xe0,0x80,0x61,0xe0,0xe0,0x63,0xc0,0xf8,0x67,0xc0,0xff,0xff,0x80,0x3f,0xff,0x00,0x07,0xf8,0x00,0x00,0x60,0x00,0x00,
    0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x0f,0xc0,0x00,0xe0,0x00,0x1f,0xe0,0x00,0xe0,0x00,
    0x38,0x70,0x01,0xc0,0x00,0x70,0x78,0x03,0xc0,0x00,0x70,0x38,0x03,0x80,0x00,0xf0,0x38,0x07,0x00,0x00,0xe0,0x3c,0x07,0x00,
    0x00,0xe0,0x1c,0x0e,0x00,0x00,0xe0,0x1c,0x1e,0x00,0x00,0xe0,0x3c,0x1c,0x00,0x00,0xf0,0x38,0x38,0x00,0x00,0x70,0x38,0x38,
    0x00,0x00,0x70,0x38,0x70,0x00,0x00,0x38,0x70,0xe0,0x00,0x00,0x1f,0xe0,0xe0,0xfc,0x00,0x0f,0xc1,0xc1,0xfe,0x00,0x00,0x01,
    0xc3,0x87,0x00,0x00,0x03,0x87,0x83,0x80,0x00,0x07,0x07,0x03,0x80,0x00,0x07,0x07,0x03,0xc0,0x00,0x0e,0x0f,0x01,0xc0,0x00,
    0x1e,0x0e,0x01,0xc0,0x00,0x1c,0x0e,0x01,0xc0,0x00,0x38,0x0f,0x01,0xc0,0x00,0x38,0x07,0x03,0xc0,0x00,0x70,0x07,0x03,0x80,
    0x00,0xf0,0x07,0x83,0x80,0x00,0xe0,0x03,0x87,0x00,0x01,0xc0,0x01,0xfe,0x00,0x01,0xc0,0x00,0xfc,0x00,0x00,0xfc,0x00,0x00,
    0x03,0xff,0x00,0x00,0x07,0xff,0x80,0x00,0x0f,0x87,0x80,0x00,0x1e,0x01,0x80,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,
    0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x0f,0x00,0x00,0x00,0x0f,0x80,0x00,0x00,0x0f,0xc0,0x00,0x00,
    0x1f,0xe0,0x00,0x00,0x3d,0xf0,0x03,0xc0,0x78,0xf8,0x03,0x80,0x78,0x7c,0x03,0x80,0xf0,0x3e,0x07,0x80,0xf0,0x1f,0x07,0x80,
    0xe0,0x0f,0x87,0x00,0xe0,0x07,0xcf,0x00,0xe0,0x03,0xee,0x00,0xf0,0x01,0xfe,0x00,0xf0,0x00,0xfc,0x00,0xf8,0x00,0x7c,0x00,
    0x7c,0x00,0xfe,0x00,0x3f,0x03,0xff,0x00,0x1f,0xff,0xcf,0x80,0x0f,0xff,0x07,0xc0,0x01,0xfc,0x03,0xe0,0xe0,0xe0,0xe0,0xe0,
    0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0x03,0x80,0x07,0x80,0x07,0x00,0x0f,0x00,0x0e,0x00,0x1e,0x00,0x1c,0x00,0x3c,0x00,0x3c,
    0x00,0x38,0x00,0x78,0x00,0x78,0x00,0x78,0x00,0x78,0x00,0x70,0x00,0x70,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0x70,
    0x00,0x70,0x00,0x78,0x00,0x78,0x00,0x78,0x00,0x78,0x00,0x38,0x00,0x3c,0x00,0x3c,0x00,0x1c,0x00,0x1e,0x00,0x0e,0x00,0x0f,
    0x00,0x07,0x00,0x07,0x80,0x03,0x80,0xf0,0x00,0x70,0x00,0x38,0x00,0x38,0x00,0x3c,0x00,0x1c,0x00,0x1e,0x00,0x0e,0x00,0x0e,
    0x00,0x0f,0x00,0x0f,0x00,0x07,0x00,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,
    0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x00,0x0f,0x00,0x0f,0x00,0x0e,0x00,0x0e,0x00,0x1e,0x00,0x1c,0x00,0x3c,0x00,0x38,
    0x00,0x38,0x00,0x70,0x00,0xf0,0x00,0x00,0xc0,0x00,0x00,0xc0,0x00,0x00,0xc0,0x00,0x40,0xc0,0x80,0xf0,0xc3,0xc0,0x78,0xc7,
    0x80,0x1e,0xde,0x00,0x07,0xf8,0x00,0x03,0xf0,0x00,0x03,0xf0,0x00,0x07,0xf8,0x00,0x1e,0xde,0x00,0x78,0xc7,0x80,0xf0,0xc3,
    0xc0,0x40,0xc0,0x80,0x00,0xc0,0x00,0x00,0xc0,0x00,0x00,0xc0,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,
    0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,
    0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0xff,0xff,0xff,0x80,0xff,0xff,0xff,0x80,0xff,0xff,0xff,0x80,0x00,0x1c,0x00,
    0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,
    0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x3c,0x3c,0x3c,0x3c,0x78,0x78,0x70,
    0x70,0xe0,0xe0,0xff,0xc0,0xff,0xc0,0xff,0xc0,0xf0,0xf0,0xf0,0xf0,0xf0,0x00,0x38,0x00,0x38,0x00,0x78,0x00,0x70,0x00,0x70,
    0x00,0xf0,0x00,0xe0,0x00,0xe0,0x00,0xe0,0x01,0xe0,0x01,0xc0,0x01,0xc0,0x03,0xc0,0x03,0x80,0x03,0x80,0x07,0x80,0x07,0x00,
    0x07,0x00,0x0f,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x1e,0x00,0x1c,0x00,0x1c,0x00,0x3c,0x00,0x38,0x00,0x38,0x00,0x78,0x00,
    0x70,0x00,0x70,0x00,0xf0,0x00,0xe0,0x00,0x01,0xf8,0x00,0x07,0xfe,0x00,0x1f,0xff,0x00,0x1f,0x0f,0x80,0x3c,0x07,0xc0,0x78,
    0x03,0xc0,0x78,0x01,0xc0,0x78,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x00,0xe0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,
    0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xe0,0xf0,0x01,0xe0,0xf0,
    0x01,0xe0,0x78,0x01,0xe0,0x78,0x01,0xc0,0x78,0x03,0xc0,0x3c,0x07,0xc0,0x1f,0x0f,0x80,0x1f,0xff,0x00,0x07,0xfe,0x00,0x01,
    0xf8,0x00,0x0f,0xe0,0x00,0xff,0xe0,0x00,0xff,0xe0,0x00,0xf1,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,
    0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,
    0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,
    0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x7f,0xff,0xc0,0x7f,0xff,0xc0,0x7f,0xff,0xc0,0x07,0xf0,0x00,0x7f,0xfc,0x00,0xff,
    0xff,0x00,0xf8,0x1f,0x80,0xe0,0x07,0x80,0x80,0x07,0xc0,0x00,0x03,0xc0,0x00,0x03,0xc0,0x00,0x03,0xc0,0x00,0x03,0xc0,0x00,
    0x03,0xc0,0x00,0x03,0xc0,0x00,0x07,0x80,0x00,0x0f,0x80,0x00,0x0f,0x00,0x00,0x1e,0x00,0x00,0x3e,0x00,0x00,0x7c,0x00,0x00,
    0xf8,0x00,0x01,0xf0,0x00,0x03,0xe0,0x00,0x07,0xc0,0x00,0x0f,0x80,0x00,0x1f,0x00,0x00,0x3e,0x00,0x00,0x7c,0x00,0x00,0xf8,
    0x00,0x00,0xff,0xff,0xc0,0xff,0xff,0xc0,0xff,0xff,0xc0,0x0f,0xf8,0x00,0x7f,0xfe,0x00,0x7f,0xff,0x00,0x78,0x0f,0x80,0x40,
    0x07,0xc0,0x00,0x03,0xc0,0x00,0x03,0xc0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x03,0xc0,0x00,0x03,0xc0,0x00,0x07,0xc0,0x00,
    0x0f,0x80,0x07,0xfe,0x00,0x07,0xfc,0x00,0x07,0xff,0x00,0x00,0x0f,0x80,0x00,0x03,0xc0,0x00,0x03,0xe0,0x00,0x01,0xe0,0x00,
    0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x03,0xe0,0x80,0x07,0xc0,0xf0,0x1f,0xc0,0xff,0xff,0x80,0xff,
    0xfe,0x00,0x1f,0xf0,0x00,0x00,0x0f,0x80,0x00,0x1f,0x80,0x00,0x3f,0x80,0x00,0x3f,0x80,0x00,0x77,0x80,0x00,0xf7,0x80,0x00,
    0xe7,0x80,0x01,0xe7,0x80,0x03,0xc7,0x80,0x03,0x87,0x80,0x07,0x87,0x80,0x0f,0x07,0x80,0x0e,0x07,0x80,0x1e,0x07,0x80,0x3c,
    0x07,0x80,0x38,0x07,0x80,0x78,0x07,0x80,0xf0,0x07,0x80,0xe0,0x07,0x80,0xff,0xff,0xf8,0xff,0xff,0xf8,0xff,0xff,0xf8,0x00,
    0x07,0x80,0x00,0x07,0x80,0x00,0x07,0x80,0x00,0x07,0x80,0x00,0x07,0x80,0x00,0x07,0x80,0x00,0x07,0x80,0x7f,0xff,0x80,0x7f,
    0xff,0x80,0x7f,0xff,0x80,0x78,0x00,0x00,0x78,0x00,0x00,0x78,0x00,0x00,0x78,0x00,0x00,0x78,0x00,0x00,0x78,0x00,0x00,0x78,
    0x00,0x00,0x7f,0xf0,0x00,0x7f,0xfe,0x00,0x7f,0xff,0x00,0x60,0x1f,0x80,0x00,0x07,0xc0,0x00,0x03,0xc0,0x00,0x03,0xe0,0x00,
    0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x03,0xe0,0x00,0x03,0xc0,0x80,0x07,0xc0,0xf0,
    0x1f,0x80,0xff,0xff,0x00,0xff,0xfe,0x00,0x1f,0xf0,0x00,0x00,0xff,0x00,0x03,0xff,0xc0,0x07,0xff,0xc0,0x0f,0x81,0xc0,0x1e,
    0x00,0x40,0x3c,0x00,0x00,0x38,0x00,0x00,0x78,0x00,0x00,0x78,0x00,0x00,0xf0,0x00,0x00,0xf0,0xfc,0x00,0xf3,0xff,0x00,0xf7,
    0xff,0x80,0xff,0x07,0xc0,0xfc,0x03,0xe0,0xfc,0x01,0xe0,0xf8,0x01,0xe0,0xf8,0x00,0xf0,0xf8,0x00,0xf0,0xf0,0x00,0xf0,0xf0,
    0x00,0xf0,0xf8,0x00,0xf0,0x78,0x00,0xf0,0x78,0x01,0xe0,0x3c,0x01,0xe0,0x3c,0x03,0xe0,0x1f,0x07,0xc0,0x0f,0xff,0x80,0x07,
    0xff,0x00,0x01,0xfc,0x00,0xff,0xff,0xe0,0xff,0xff,0xe0,0xff,0xff,0xe0,0x00,0x03,0xc0,0x00,0x03,0xc0,0x00,0x07,0xc0,0x00,
    0x07,0x80,0x00,0x07,0x80,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x1f,0x00,0x00,0x1e,0x00,0x00,0x1e,0x00,0x00,0x3c,0x00,0x00,
    0x3c,0x00,0x00,0x7c,0x00,0x00,0x78,0x00,0x00,0x78,0x00,0x00,0xf8,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x01,0xe0,0x00,0x01,
    0xe0,0x00,0x03,0xe0,0x00,0x03,0xc0,0x00,0x03,0xc0,0x00,0x07,0x80,0x00,0x07,0x80,0x00,0x07,0x80,0x00,0x03,0xf8,0x00,0x0f,
    0xff,0x00,0x3f,0xff,0x80,0x3e,0x0f,0xc0,0x7c,0x03,0xc0,0x78,0x01,0xe0,0x78,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0x78,
    0x01,0xe0,0x78,0x01,0xc0,0x7c,0x03,0xc0,0x3e,0x0f,0x80,0x0f,0xff,0x00,0x07,0xfc,0x00,0x1f,0xff,0x00,0x3e,0x07,0xc0,0x78,
    0x03,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x01,0xf0,0xf0,0x01,0xe0,0x78,
    0x03,0xe0,0x7e,0x07,0xc0,0x3f,0xff,0x80,0x1f,0xff,0x00,0x03,0xfc,0x00,0x03,0xf0,0x00,0x0f,0xfe,0x00,0x3f,0xff,0x00,0x3e,
    0x0f,0x80,0x78,0x07,0x80,0xf8,0x03,0xc0,0xf0,0x03,0xc0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,
    0x01,0xe0,0xf0,0x01,0xf0,0xf0,0x03,0xf0,0xf8,0x03,0xf0,0x78,0x07,0xf0,0x7e,0x0f,0xf0,0x3f,0xfe,0xe0,0x0f,0xfc,0xe0,0x03,
    0xf1,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x03,0xc0,0x00,0x03,0xc0,0x00,0x07,0x80,0x40,0x0f,0x80,0x70,0x3f,0x00,0x7f,
    0xfe,0x00,0x7f,0xf8,0x00,0x1f,0xe0,0x00,0xf0,0xf0,0xf0,0xf0,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0xf0,0xf0,0xf0,0xf0,0xf0,0x3c,0x3c,0x3c,0x3c,0x3c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3c,0x3c,0x3c,
    0x3c,0x78,0x78,0x70,0x70,0xe0,0xe0,0x00,0x00,0x00,0x80,0x00,0x00,0x07,0x80,0x00,0x00,0x3f,0x80,0x00,0x01,0xff,0x80,0x00,
    0x07,0xfc,0x00,0x00,0x3f,0xf0,0x00,0x01,0xff,0x80,0x00,0x0f,0xfc,0x00,0x00,0x7f,0xe0,0x00,0x00,0xff,0x00,0x00,0x00,0xfc,
    0x00,0x00,0x00,0xff,0x00,0x00,0x00,0x7f,0xe0,0x00,0x00,0x0f,0xfc,0x00,0x00,0x01,0xff,0x80,0x00,0x00,0x3f,0xe0,0x00,0x00,
    0x07,0xfc,0x00,0x00,0x01,0xff,0x80,0x00,0x00,0x3f,0x80,0x00,0x00,0x07,0x80,0x00,0x00,0x00,0x80,0xff,0xff,0xff,0x80,0xff,
    0xff,0xff,0x80,0xff,0xff,0xff,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0xff,0xff,0xff,0x80,0xff,0xff,0xff,0x80,0xff,0xff,0xff,0x80,0xc0,0x00,0x00,0x00,0xf0,0x00,0x00,0x00,0xfe,
    0x00,0x00,0x00,0x7f,0xc0,0x00,0x00,0x1f,0xf8,0x00,0x00,0x03,0xff,0x00,0x00,0x00,0x7f,0xe0,0x00,0x00,0x0f,0xf8,0x00,0x00,
    0x01,0xff,0x00,0x00,0x00,0x7f,0x80,0x00,0x00,0x0f,0x80,0x00,0x00,0x3f,0x80,0x00,0x01,0xff,0x00,0x00,0x0f,0xf8,0x00,0x00,
    0x7f,0xe0,0x00,0x03,0xff,0x00,0x00,0x1f,0xf8,0x00,0x00,0x7f,0xc0,0x00,0x00,0xfe,0x00,0x00,0x00,0xf0,0x00,0x00,0x00,0xc0,
    0x00,0x00,0x00,0x0f,0xe0,0x7f,0xf8,0xff,0xfc,0xf0,0x7e,0xc0,0x1e,0x80,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,
    0x3c,0x00,0x7c,0x00,0xf8,0x01,0xf0,0x03,0xe0,0x07,0xc0,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x00,0x07,0x00,0x07,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x00,0x07,0xfc,0x00,0x00,0x00,0x3f,0xff,0x80,
    0x00,0x00,0xff,0xff,0xe0,0x00,0x01,0xfc,0x03,0xf0,0x00,0x07,0xe0,0x00,0xf8,0x00,0x0f,0x80,0x00,0x3c,0x00,0x0f,0x00,0x00,
    0x1e,0x00,0x1c,0x00,0x00,0x0f,0x00,0x3c,0x00,0x00,0x07,0x80,0x38,0x03,0xe1,0x83,0x80,0x70,0x0f,0xf9,0x83,0x80,0x70,0x1f,
    0xff,0x81,0xc0,0xe0,0x3e,0x1f,0x81,0xc0,0xe0,0x38,0x07,0x81,0xc0,0xe0,0x78,0x03,0x81,0xc0,0xe0,0x70,0x03,0x81,0xc0,0xc0,
    0x70,0x03,0x81,0xc0,0xc0,0x70,0x03,0x81,0xc0,0xc0,0x70,0x03,0x81,0xc0,0xe0,0x70,0x03,0x83,0x80,0xe0,0x78,0x03,0x83,0x80,
    0xe0,0x38,0x07,0x87,0x00,0xe0,0x3e,0x1f,0x9f,0x00,0x70,0x1f,0xff,0xfc,0x00,0x70,0x0f,0xf9,0xf8,0x00,0x78,0x03,0xe1,0xc0,
    0x00,0x3c,0x00,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x00,0x1f,0x00,0x00,0x00,0x00,0x0f,0x80,0x00,0x20,0x00,0x07,0xe0,0x00,
    0xf0,0x00,0x01,0xf8,0x07,0xf0,0x00,0x00,0xff,0xff,0xc0,0x00,0x00,0x3f,0xff,0x00,0x00,0x00,0x07,0xf8,0x00,0x00,0x00,0x3e,
    0x00,0x00,0x00,0x3e,0x00,0x00,0x00,0x7f,0x00,0x00,0x00,0x7f,0x00,0x00,0x00,0x77,0x80,0x00,0x00,0xf7,0x80,0x00,0x00,0xf3,
    0x80,0x00,0x00,0xe3,0xc0,0x00,0x01,0xe3,0xc0,0x00,0x01,0xe1,0xe0,0x00,0x03,0xc1,0xe0,0x00,0x03,0xc0,0xe0,0x00,0x03,0x80,
    0xf0,0x00,0x07,0x80,0xf0,0x00,0x07,0x80,0x70,0x00,0x0f,0x00,0x78,0x00,0x0f,0x00,0x78,0x00,0x0f,0x00,0x3c,0x00,0x1f,0xff,
    0xfc,0x00,0x1f,0xff,0xfc,0x00,0x1f,0xff,0xfe,0x00,0x3c,0x00,0x1e,0x00,0x3c,0x00,0x0f,0x00,0x78,0x00,0x0f,0x00,0x78,0x00,
    0x0f,0x00,0x78,0x00,0x07,0x80,0xf0,0x00,0x07,0x80,0xf0,0x00,0x07,0x80,0xf0,0x00,0x03,0xc0,0xff,0xfc,0x00,0xff,0xff,0x00,
    0xff,0xff,0xc0,0xf0,0x07,0xc0,0xf0,0x03,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,
    0xf0,0x03,0xe0,0xf0,0x07,0xc0,0xff,0xff,0x80,0xff,0xfe,0x00,0xff,0xff,0x80,0xf0,0x07,0xe0,0xf0,0x01,0xe0,0xf0,0x00,0xf0,
    0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf8,0xf0,0x00,0xf8,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x01,0xf0,0xf0,0x07,0xe0,
    0xff,0xff,0xc0,0xff,0xff,0x80,0xff,0xfe,0x00,0x00,0x3f,0xc0,0x00,0xff,0xf8,0x03,0xff,0xfe,0x07,0xe0,0x3f,0x0f,0x80,0x0f,
    0x1f,0x00,0x03,0x3e,0x00,0x00,0x3c,0x00,0x00,0x7c,0x00,0x00,0x78,0x00,0x00,0x78,0x00,0x00,0x78,0x00,0x00,0xf8,0x00,0x00,
    0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf8,0x00,0x00,0x78,0x00,0x00,0x78,0x00,0x00,0x78,0x00,0x00,
    0x7c,0x00,0x00,0x3c,0x00,0x00,0x3e,0x00,0x00,0x1f,0x00,0x03,0x0f,0x80,0x07,0x07,0xe0,0x3f,0x03,0xff,0xfe,0x00,0xff,0xf8,
    0x00,0x3f,0xc0,0xff,0xfc,0x00,0xff,0xff,0x80,0xff,0xff,0xe0,0xf0,0x07,0xf0,0xf0,0x00,0xf8,0xf0,0x00,0x7c,0xf0,0x00,0x3e,
    0xf0,0x00,0x1e,0xf0,0x00,0x1f,0xf0,0x00,0x0f,0xf0,0x00,0x0f,0xf0,0x00,0x0f,0xf0,0x00,0x0f,0xf0,0x00,0x0f,0xf0,0x00,0x0f,
    0xf0,0x00,0x0f,0xf0,0x00,0x0f,0xf0,0x00,0x0f,0xf0,0x00,0x0f,0xf0,0x00,0x0f,0xf0,0x00,0x1f,0xf0,0x00,0x1e,0xf0,0x00,0x3e,
    0xf0,0x00,0x7c,0xf0,0x00,0xf8,0xf0,0x07,0xf0,0xff,0xff,0xe0,0xff,0xff,0x80,0xff,0xfc,0x00,0xff,0xff,0xc0,0xff,0xff,0xc0,
    0xff,0xff,0xc0,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,
    0xf0,0x00,0x00,0xf0,0x00,0x00,0xff,0xff,0xc0,0xff,0xff,0xc0,0xff,0xff,0xc0,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,
    0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,
    0xff,0xff,0xe0,0xff,0xff,0xe0,0xff,0xff,0xe0,0xff,0xff,0x80,0xff,0xff,0x80,0xff,0xff,0x80,0xf0,0x00,0x00,0xf0,0x00,0x00,
    0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xff,0xfe,0x00,
    0xff,0xfe,0x00,0xff,0xfe,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,
    0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,
    0x00,0x1f,0xe0,0x00,0x00,0xff,0xfc,0x00,0x03,0xff,0xff,0x00,0x07,0xe0,0x1f,0x80,0x0f,0x80,0x07,0x80,0x1f,0x00,0x01,0x80,
    0x3e,0x00,0x00,0x80,0x3c,0x00,0x00,0x00,0x7c,0x00,0x00,0x00,0x78,0x00,0x00,0x00,0x78,0x00,0x00,0x00,0x78,0x00,0x00,0x00,
    0xf8,0x00,0x00,0x00,0xf0,0x00,0x00,0x00,0xf0,0x01,0xff,0xc0,0xf0,0x01,0xff,0xc0,0xf0,0x01,0xff,0xc0,0xf8,0x00,0x03,0xc0,
    0x78,0x00,0x03,0xc0,0x78,0x00,0x03,0xc0,0x78,0x00,0x03,0xc0,0x7c,0x00,0x03,0xc0,0x3c,0x00,0x03,0xc0,0x3e,0x00,0x03,0xc0,
    0x1f,0x00,0x03,0xc0,0x0f,0x80,0x07,0xc0,0x07,0xe0,0x1f,0xc0,0x03,0xff,0xff,0x80,0x00,0xff,0xfe,0x00,0x00,0x1f,0xe0,0x00,
    0xf0,0x00,0x3c,0xf0,0x00,0x3c,0xf0,0x00,0x3c,0xf0,0x00,0x3c,0xf0,0x00,0x3c,0xf0,0x00,0x3c,0xf0,0x00,0x3c,0xf0,0x00,0x3c,
    0xf0,0x00,0x3c,0xf0,0x00,0x3c,0xf0,0x00,0x3c,0xf0,0x00,0x3c,0xff,0xff,0xfc,0xff,0xff,0xfc,0xff,0xff,0xfc,0xf0,0x00,0x3c,
    0xf0,0x00,0x3c,0xf0,0x00,0x3c,0xf0,0x00,0x3c,0xf0,0x00,0x3c,0xf0,0x00,0x3c,0xf0,0x00,0x3c,0xf0,0x00,0x3c,0xf0,0x00,0x3c,
    0xf0,0x00,0x3c,0xf0,0x00,0x3c,0xf0,0x00,0x3c,0xf0,0x00,0x3c,0xf0,0x00,0x3c,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,
    0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0xf0,0x03,0xc0,0x03,0xc0,
    0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,
    0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,
    0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x07,0x80,0x07,0x80,0x0f,0x80,0xff,0x00,0xfe,0x00,0xf8,0x00,0xf0,0x00,
    0xf8,0xf0,0x01,0xf0,0xf0,0x03,0xe0,0xf0,0x07,0xc0,0xf0,0x0f,0x80,0xf0,0x1f,0x00,0xf0,0x3e,0x00,0xf0,0x7c,0x00,0xf0,0xf8,
    0x00,0xf1,0xf0,0x00,0xf3,0xe0,0x00,0xf7,0xc0,0x00,0xff,0x80,0x00,0xff,0x00,0x00,0xff,0x80,0x00,0xff,0xc0,0x00,0xf7,0xe0,
    0x00,0xf3,0xf0,0x00,0xf1,0xf8,0x00,0xf0,0xfc,0x00,0xf0,0x7e,0x00,0xf0,0x3f,0x00,0xf0,0x1f,0x80,0xf0,0x0f,0xc0,0xf0,0x07,
    0xe0,0xf0,0x03,0xf0,0xf0,0x01,0xf8,0xf0,0x00,0xfc,0xf0,0x00,0x7e,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,
    0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,
    0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,
    0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xff,0xff,0xc0,0xff,0xff,
    0xc0,0xff,0xff,0xc0,0xfc,0x00,0x07,0xe0,0xfc,0x00,0x0f,0xe0,0xfe,0x00,0x0f,0xe0,0xfe,0x00,0x1f,0xe0,0xff,0x00,0x1f,0xe0,
    0xf7,0x00,0x1d,0xe0,0xf7,0x00,0x3d,0xe0,0xf7,0x80,0x39,0xe0,0xf3,0x80,0x79,0xe0,0xf3,0x80,0x71,0xe0,0xf3,0xc0,0x71,0xe0,
    0xf1,0xc0,0xf1,0xe0,0xf1,0xe0,0xe1,0xe0,0xf0,0xe0,0xe1,0xe0,0xf0,0xe1,0xe1,0xe0,0xf0,0xf1,0xc1,0xe0,0xf0,0x73,0xc1,0xe0,
    0xf0,0x7b,0x81,0xe0,0xf0,0x3b,0x81,0xe0,0xf0,0x3f,0x81,0xe0,0xf0,0x3f,0x01,0xe0,0xf0,0x1f,0x01,0xe0,0xf0,0x1e,0x01,0xe0,
    0xf0,0x00,0x01,0xe0,0xf0,0x00,0x01,0xe0,0xf0,0x00,0x01,0xe0,0xf0,0x00,0x01,0xe0,0xf0,0x00,0x01,0xe0,0xf0,0x00,0x01,0xe0,
    0xf8,0x00,0x3c,0xfc,0x00,0x3c,0xfe,0x00,0x3c,0xfe,0x00,0x3c,0xff,0x00,0x3c,0xff,0x00,0x3c,0xf7,0x80,0x3c,0xf7,0x80,0x3c,
    0xf3,0xc0,0x3c,0xf3,0xc0,0x3c,0xf1,0xe0,0x3c,0xf1,0xe0,0x3c,0xf0,0xf0,0x3c,0xf0,0xf0,0x3c,0xf0,0x78,0x3c,0xf0,0x78,0x3c,
    0xf0,0x3c,0x3c,0xf0,0x1e,0x3c,0xf0,0x1e,0x3c,0xf0,0x0f,0x3c,0xf0,0x0f,0x3c,0xf0,0x07,0xbc,0xf0,0x07,0xbc,0xf0,0x03,0xfc,
    0xf0,0x03,0xfc,0xf0,0x01,0xfc,0xf0,0x01,0xfc,0xf0,0x00,0xfc,0xf0,0x00,0xfc,0x00,0x3f,0xc0,0x00,0x01,0xff,0xf0,0x00,0x03,
    0xff,0xfc,0x00,0x07,0xe0,0x7e,0x00,0x0f,0x80,0x1f,0x00,0x1f,0x00,0x0f,0x80,0x3e,0x00,0x07,0x80,0x3c,0x00,0x07,0xc0,0x7c,
    0x00,0x03,0xc0,0x78,0x00,0x03,0xc0,0x78,0x00,0x01,0xe0,0x78,0x00,0x01,0xe0,0xf8,0x00,0x01,0xe0,0xf0,0x00,0x01,0xe0,0xf0,
    0x00,0x01,0xe0,0xf0,0x00,0x01,0xe0,0xf0,0x00,0x01,0xe0,0xf8,0x00,0x01,0xe0,0x78,0x00,0x01,0xe0,0x78,0x00,0x01,0xe0,0x78,
    0x00,0x03,0xc0,0x7c,0x00,0x03,0xc0,0x3c,0x00,0x07,0xc0,0x3e,0x00,0x07,0x80,0x1f,0x00,0x0f,0x80,0x0f,0x80,0x1f,0x00,0x0f,
    0xe0,0x7e,0x00,0x03,0xff,0xfc,0x00,0x01,0xff,0xf0,0x00,0x00,0x3f,0xc0,0x00,0xff,0xf8,0x00,0xff,0xfe,0x00,0xff,0xff,0x80,
    0xf0,0x0f,0x80,0xf0,0x07,0xc0,0xf0,0x03,0xc0,0xf0,0x03,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x03,0xe0,
    0xf0,0x03,0xc0,0xf0,0x07,0xc0,0xf0,0x0f,0x80,0xff,0xff,0x80,0xff,0xfe,0x00,0xff,0xf8,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,
    0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,
    0xf0,0x00,0x00,0xf0,0x00,0x00,0x00,0x3f,0xc0,0x00,0x01,0xff,0xf0,0x00,0x03,0xff,0xfc,0x00,0x07,0xe0,0x7e,0x00,0x0f,0x80,
    0x1f,0x00,0x1f,0x00,0x0f,0x80,0x3e,0x00,0x07,0x80,0x3c,0x00,0x07,0xc0,0x7c,0x00,0x03,0xc0,0x78,0x00,0x03,0xc0,0x78,0x00,
    0x01,0xe0,0x78,0x00,0x01,0xe0,0xf8,0x00,0x01,0xe0,0xf0,0x00,0x01,0xe0,0xf0,0x00,0x01,0xe0,0xf0,0x00,0x01,0xe0,0xf0,0x00,
    0x01,0xe0,0xf8,0x00,0x01,0xe0,0x78,0x00,0x01,0xe0,0x78,0x00,0x01,0xe0,0x78,0x00,0x03,0xc0,0x7c,0x00,0x03,0xc0,0x3c,0x00,
    0x07,0xc0,0x3e,0x00,0x07,0x80,0x1f,0x00,0x0f,0x80,0x0f,0x80,0x1f,0x00,0x07,0xe0,0x7e,0x00,0x03,0xff,0xfc,0x00,0x01,0xff,
    0xf0,0x00,0x00,0x3f,0xf0,0x00,0x00,0x00,0xf8,0x00,0x00,0x00,0x78,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,0x3e,0x00,0x00,0x00,
    0x1f,0x00,0xff,0xf8,0x00,0xff,0xfe,0x00,0xff,0xff,0x80,0xf0,0x0f,0x80,0xf0,0x07,0xc0,0xf0,0x03,0xc0,0xf0,0x03,0xe0,0xf0,
    0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x03,0xe0,0xf0,0x03,0xc0,0xf0,0x07,0xc0,0xf0,0x0f,0x80,0xff,0xff,0x00,0xff,
    0xfc,0x00,0xff,0xfe,0x00,0xf0,0x1f,0x00,0xf0,0x0f,0x80,0xf0,0x07,0xc0,0xf0,0x03,0xc0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,
    0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0x78,0xf0,0x00,0x78,0xf0,0x00,0x3c,0xf0,0x00,0x3c,0x03,0xfc,0x00,0x0f,0xff,0x80,0x3f,
    0xff,0xc0,0x7e,0x07,0xc0,0x78,0x00,0xc0,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,
    0x00,0x00,0xf8,0x00,0x00,0x7f,0x00,0x00,0x3f,0xf8,0x00,0x1f,0xff,0x00,0x07,0xff,0x80,0x00,0x7f,0xc0,0x00,0x07,0xe0,0x00,
    0x01,0xf0,0x00,0x01,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x80,0x01,0xf0,0xe0,0x03,0xe0,0xf8,
    0x0f,0xe0,0xff,0xff,0xc0,0x7f,0xff,0x00,0x07,0xfc,0x00,0xff,0xff,0xff,0x80,0xff,0xff,0xff,0x80,0xff,0xff,0xff,0x80,0x00,
    0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,
    0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,
    0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,
    0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0x00,
    0x3c,0x00,0x00,0x00,0x3c,0x00,0x00,0xf0,0x00,0x1e,0xf0,0x00,0x1e,0xf0,0x00,0x1e,0xf0,0x00,0x1e,0xf0,0x00,0x1e,0xf0,0x00,
    0x1e,0xf0,0x00,0x1e,0xf0,0x00,0x1e,0xf0,0x00,0x1e,0xf0,0x00,0x1e,0xf0,0x00,0x1e,0xf0,0x00,0x1e,0xf0,0x00,0x1e,0xf0,0x00,
    0x1e,0xf0,0x00,0x1e,0xf0,0x00,0x1e,0xf0,0x00,0x1e,0xf0,0x00,0x1e,0x70,0x00,0x1e,0x78,0x00,0x1e,0x78,0x00,0x1e,0x78,0x00,
    0x3c,0x78,0x00,0x3c,0x3c,0x00,0x7c,0x3e,0x00,0x78,0x1f,0x01,0xf8,0x0f,0xff,0xf0,0x07,0xff,0xc0,0x00,0xff,0x00,0xf0,0x00,
    0x03,0xc0,0xf0,0x00,0x07,0x80,0xf0,0x00,0x07,0x80,0x78,0x00,0x07,0x80,0x78,0x00,0x0f,0x00,0x7c,0x00,0x0f,0x00,0x3c,0x00,
    0x1f,0x00,0x3c,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x3c,0x00,0x1e,0x00,0x3c,0x00,0x0f,0x00,0x3c,0x00,0x0f,0x00,
    0x78,0x00,0x0f,0x80,0x78,0x00,0x07,0x80,0xf0,0x00,0x07,0x80,0xf0,0x00,0x03,0xc0,0xf0,0x00,0x03,0xc1,0xe0,0x00,0x03,0xc1,
    0xe0,0x00,0x01,0xe1,0xe0,0x00,0x01,0xe3,0xc0,0x00,0x00,0xf3,0xc0,0x00,0x00,0xf7,0x80,0x00,0x00,0xf7,0x80,0x00,0x00,0x7f,
    0x80,0x00,0x00,0x7f,0x00,0x00,0x00,0x7f,0x00,0x00,0x00,0x3e,0x00,0x00,0x00,0x3e,0x00,0x00,0xf0,0x00,0xf8,0x00,0x78,0x78,
    0x00,0xf8,0x00,0x78,0x78,0x00,0xfc,0x00,0x78,0x78,0x00,0xfc,0x00,0xf0,0x78,0x01,0xfc,0x00,0xf0,0x3c,0x01,0xdc,0x00,0xf0,
    0x3c,0x01,0xde,0x00,0xf0,0x3c,0x01,0xce,0x01,0xe0,0x3c,0x03,0xce,0x01,0xe0,0x1e,0x03,0x8e,0x01,0xe0,0x1e,0x03,0x8f,0x01,
    0xe0,0x1e,0x03,0x87,0x03,0xc0,0x1e,0x07,0x87,0x03,0xc0,0x0f,0x07,0x07,0x03,0xc0,0x0f,0x07,0x07,0x83,0xc0,0x0f,0x07,0x03,
    0x87,0x80,0x0f,0x0f,0x03,0x87,0x80,0x07,0x8e,0x03,0x87,0x80,0x07,0x8e,0x03,0xc7,0x80,0x07,0x8e,0x01,0xcf,0x00,0x07,0x9e,
    0x01,0xcf,0x00,0x03,0xdc,0x01,0xcf,0x00,0x03,0xdc,0x01,0xef,0x00,0x03,0xdc,0x00,0xfe,0x00,0x01,0xfc,0x00,0xfe,0x00,0x01,
    0xf8,0x00,0xfe,0x00,0x01,0xf8,0x00,0xfe,0x00,0x01,0xf8,0x00,0x7c,0x00,0x00,0xf8,0x00,0x7c,0x00,0x78,0x00,0x1e,0x3c,0x00,
    0x3c,0x3c,0x00,0x3c,0x1e,0x00,0x78,0x0f,0x00,0xf0,0x0f,0x01,0xf0,0x07,0x81,0xe0,0x03,0xc3,0xc0,0x03,0xc7,0xc0,0x01,0xe7,
    0x80,0x00,0xff,0x00,0x00,0xff,0x00,0x00,0x7e,0x00,0x00,0x3c,0x00,0x00,0x7c,0x00,0x00,0x7e,0x00,0x00,0xff,0x00,0x01,0xef,
    0x00,0x03,0xe7,0x80,0x03,0xc3,0xc0,0x07,0x83,0xc0,0x0f,0x81,0xe0,0x0f,0x00,0xf0,0x1e,0x00,0xf0,0x3e,0x00,0x78,0x3c,0x00,
    0x3c,0x78,0x00,0x3c,0xf0,0x00,0x1e,0xf0,0x00,0x0f,0xf0,0x00,0x0f,0x78,0x00,0x1e,0x3c,0x00,0x1e,0x3e,0x00,0x3c,0x1e,0x00,
    0x78,0x0f,0x00,0x78,0x0f,0x80,0xf0,0x07,0x81,0xe0,0x03,0xc1,0xe0,0x03,0xe3,0xc0,0x01,0xe7,0x80,0x00,0xff,0x80,0x00,0xff,
    0x00,0x00,0x7e,0x00,0x00,0x3e,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,
    0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,
    0x00,0xff,0xff,0xfe,0xff,0xff,0xfe,0xff,0xff,0xfe,0x00,0x00,0x3e,0x00,0x00,0x7c,0x00,0x00,0xf8,0x00,0x01,0xf0,0x00,0x01,
    0xf0,0x00,0x03,0xe0,0x00,0x07,0xc0,0x00,0x0f,0x80,0x00,0x1f,0x00,0x00,0x1f,0x00,0x00,0x3e,0x00,0x00,0x7c,0x00,0x00,0xf8,
    0x00,0x01,0xf0,0x00,0x01,0xf0,0x00,0x03,0xe0,0x00,0x07,0xc0,0x00,0x0f,0x80,0x00,0x1f,0x00,0x00,0x1f,0x00,0x00,0x3e,0x00,
    0x00,0x7c,0x00,0x00,0xf8,0x00,0x00,0xff,0xff,0xff,0xff,0xff,0xff,0xff,0xff,0xff,0xff,0x80,0xff,0x80,0xff,0x80,0xf0,0x00,
    0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,
    0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,
    0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xff,0x80,0xff,0x80,0xff,0x80,0xe0,0x00,0xf0,0x00,0x70,0x00,0x70,0x00,
    0x78,0x00,0x38,0x00,0x38,0x00,0x3c,0x00,0x1c,0x00,0x1c,0x00,0x1e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0f,0x00,0x07,0x00,
    0x07,0x00,0x07,0x80,0x03,0x80,0x03,0x80,0x03,0xc0,0x01,0xc0,0x01,0xc0,0x01,0xe0,0x00,0xe0,0x00,0xe0,0x00,0xe0,0x00,0xf0,
    0x00,0x70,0x00,0x70,0x00,0x78,0x00,0x38,0x00,0x38,0xff,0xff,0xff,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,
    0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0xff,0xff,0xff,0x00,0x7c,
    0x00,0x00,0xfe,0x00,0x01,0xff,0x00,0x03,0xef,0x80,0x03,0xc7,0xc0,0x07,0x83,0xe0,0x0f,0x01,0xf0,0x1e,0x00,0xf8,0x3c,0x00,
    0x3c,0x78,0x00,0x1e,0xf0,0x00,0x0f,0xff,0xff,0xf0,0xff,0xff,0xf0,0xff,0xff,0xf0,0xf0,0x70,0x38,0x1c,0x1e,0x0e,0x07,0x03,
    0xf8,0x00,0x1f,0xfe,0x00,0x3f,0xff,0x00,0x38,0x0f,0x80,0x20,0x03,0xc0,0x00,0x03,0xc0,0x00,0x01,0xc0,0x00,0x01,0xe0,0x00,
    0x01,0xe0,0x03,0xff,0xe0,0x1f,0xff,0xe0,0x3f,0xff,0xe0,0x7e,0x01,0xe0,0x78,0x01,0xe0,0x70,0x01,0xe0,0xf0,0x01,0xe0,0xf0,
    0x03,0xe0,0x70,0x03,0xe0,0x78,0x07,0xe0,0x7c,0x1f,0xe0,0x3f,0xfd,0xe0,0x1f,0xf9,0xe0,0x07,0xe1,0xe0,0xe0,0x00,0x00,0xe0,
    0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,0x00,0xe1,0xf8,0x00,0xe7,0xfe,0x00,0xef,
    0xff,0x00,0xfe,0x0f,0x80,0xfc,0x07,0xc0,0xf8,0x03,0xc0,0xf0,0x01,0xc0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xe0,0x01,0xe0,0xe0,
    0x01,0xe0,0xe0,0x01,0xe0,0xe0,0x01,0xe0,0xe0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xc0,0xf8,0x03,0xc0,0xfc,
    0x07,0xc0,0xfe,0x0f,0x80,0xef,0xff,0x00,0xe7,0xfe,0x00,0xe1,0xf8,0x00,0x00,0xfc,0x00,0x07,0xff,0x80,0x0f,0xff,0xc0,0x1f,
    0x83,0xc0,0x3e,0x00,0x00,0x3c,0x00,0x00,0x78,0x00,0x00,0x78,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,
    0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0x70,0x00,0x00,0x78,0x00,0x00,0x78,0x00,0x00,0x3c,0x00,0x00,0x3e,0x00,0x00,0x1f,
    0x03,0xc0,0x0f,0xff,0xc0,0x07,0xff,0x80,0x00,0xfc,0x00,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,
    0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x03,0xf0,0xf0,0x0f,0xfc,0xf0,0x1f,0xfe,0xf0,0x3f,0x0f,0xf0,0x3c,0x03,0xf0,0x78,
    0x01,0xf0,0x78,0x01,0xf0,0x70,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,
    0x00,0xf0,0xf0,0x00,0xf0,0x70,0x00,0xf0,0x78,0x01,0xf0,0x78,0x01,0xf0,0x3c,0x03,0xf0,0x3f,0x0f,0xf0,0x1f,0xfe,0xf0,0x0f,
    0xfc,0xf0,0x03,0xf0,0xf0,0x00,0xfc,0x00,0x07,0xff,0x00,0x0f,0xff,0xc0,0x1f,0x03,0xc0,0x3c,0x01,0xe0,0x38,0x00,0xf0,0x78,
    0x00,0xf0,0x70,0x00,0x70,0x70,0x00,0x70,0xff,0xff,0xf0,0xff,0xff,0xf0,0xff,0xff,0xf0,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,
    0x00,0x00,0x78,0x00,0x00,0x78,0x00,0x00,0x3c,0x00,0x00,0x3e,0x00,0x10,0x1f,0x80,0xf0,0x0f,0xff,0xf0,0x07,0xff,0xe0,0x00,
    0xff,0x00,0x01,0xfc,0x07,0xfc,0x0f,0xfc,0x0f,0x00,0x0e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0xff,0xf8,0xff,0xf8,0xff,0xf8,
    0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,
    0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x03,0xf0,0x00,0x0f,0xfc,0xf0,0x1f,0xfe,0xf0,0x3f,
    0x0f,0xf0,0x3c,0x03,0xf0,0x78,0x01,0xf0,0x78,0x01,0xf0,0x70,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,
    0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0x70,0x00,0xf0,0x78,0x01,0xf0,0x78,0x01,0xf0,0x3c,0x03,0xf0,0x3f,
    0x0f,0xf0,0x1f,0xfe,0xf0,0x0f,0xfc,0xf0,0x03,0xf0,0xf0,0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,0x01,0xe0,0x10,0x03,0xe0,0x1c,
    0x0f,0xc0,0x1f,0xff,0x80,0x1f,0xff,0x00,0x07,0xf8,0x00,0xe0,0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,0x00,0xe0,
    0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,0x00,0xe0,0xf8,0x00,0xe3,0xfe,0x00,0xef,0xff,0x00,0xfe,0x0f,0x80,0xf8,0x07,0x80,0xf8,
    0x03,0x80,0xf0,0x03,0xc0,0xf0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,
    0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,
    0x03,0xc0,0xe0,0x03,0xc0,0xe0,0xe0,0xe0,0xe0,0xe0,0x00,0x00,0x00,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,
    0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0x07,0x07,0x07,0x07,0x07,0x00,0x00,0x00,0x07,0x07,0x07,0x07,0x07,
    0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x07,0x0f,0x1f,0xfe,0xfc,
    0xf8,0xe0,0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,
    0x00,0xe0,0x07,0xc0,0xe0,0x0f,0x80,0xe0,0x1f,0x00,0xe0,0x3e,0x00,0xe0,0x78,0x00,0xe0,0xf0,0x00,0xe1,0xe0,0x00,0xe7,0xc0,
    0x00,0xef,0x80,0x00,0xff,0x00,0x00,0xfe,0x00,0x00,0xff,0x00,0x00,0xe7,0x80,0x00,0xe3,0xc0,0x00,0xe1,0xe0,0x00,0xe0,0xf0,
    0x00,0xe0,0x78,0x00,0xe0,0x3c,0x00,0xe0,0x1e,0x00,0xe0,0x0f,0x00,0xe0,0x07,0x80,0xe0,0x03,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,
    0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,
    0xe0,0x01,0xf8,0x07,0xe0,0xe7,0xfe,0x0f,0xf8,0xef,0xff,0x3f,0xfc,0xfe,0x1f,0x38,0x3c,0xf8,0x07,0xf0,0x1e,0xf8,0x07,0xe0,
    0x1e,0xf0,0x07,0xc0,0x0e,0xf0,0x03,0xc0,0x0e,0xe0,0x03,0xc0,0x0f,0xe0,0x03,0x80,0x0f,0xe0,0x03,0x80,0x0f,0xe0,0x03,0x80,
    0x0f,0xe0,0x03,0x80,0x0f,0xe0,0x03,0x80,0x0f,0xe0,0x03,0x80,0x0f,0xe0,0x03,0x80,0x0f,0xe0,0x03,0x80,0x0f,0xe0,0x03,0x80,
    0x0f,0xe0,0x03,0x80,0x0f,0xe0,0x03,0x80,0x0f,0xe0,0x03,0x80,0x0f,0xe0,0x03,0x80,0x0f,0xe0,0x03,0x80,0x0f,0x00,0xf8,0x00,
    0xe3,0xfe,0x00,0xef,0xff,0x00,0xfe,0x0f,0x80,0xf8,0x07,0x80,0xf8,0x03,0x80,0xf0,0x03,0xc0,0xf0,0x03,0xc0,0xe0,0x03,0xc0,
    0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,
    0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,0xe0,0x03,0xc0,0x01,0xfc,0x00,0x07,0xff,0x00,
    0x1f,0xff,0x80,0x1f,0x07,0xc0,0x3c,0x03,0xe0,0x7c,0x01,0xe0,0x78,0x01,0xf0,0x78,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,
    0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0x78,0x00,0xf0,0x78,0x01,0xf0,0x7c,0x01,0xe0,
    0x3c,0x03,0xe0,0x1f,0x07,0xc0,0x1f,0xff,0x80,0x07,0xff,0x00,0x01,0xfc,0x00,0x01,0xf8,0x00,0xe7,0xfe,0x00,0xef,0xff,0x00,
    0xfe,0x0f,0x80,0xfc,0x07,0xc0,0xf8,0x03,0xc0,0xf0,0x01,0xc0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xe0,0x01,0xe0,0xe0,0x01,0xe0,
    0xe0,0x01,0xe0,0xe0,0x01,0xe0,0xe0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xc0,0xf8,0x03,0xc0,0xfc,0x07,0xc0,
    0xfe,0x0f,0x80,0xef,0xff,0x00,0xe7,0xfe,0x00,0xe1,0xf8,0x00,0xe0,0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,0x00,
    0xe0,0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,0x00,0x03,0xf0,0x00,0x0f,0xfc,0xf0,0x1f,0xfe,0xf0,0x3f,0x0f,0xf0,
    0x3c,0x03,0xf0,0x78,0x01,0xf0,0x78,0x01,0xf0,0x70,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,
    0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0x70,0x00,0xf0,0x78,0x01,0xf0,0x78,0x01,0xf0,0x3c,0x03,0xf0,0x3f,0x0f,0xf0,
    0x1f,0xfe,0xf0,0x0f,0xfc,0xf0,0x03,0xf0,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,
    0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0xf0,0xe7,0xf0,0xef,0xf0,0xfe,0x00,0xf8,0x00,0xf8,0x00,0xf0,0x00,0xf0,
    0x00,0xf0,0x00,0xe0,0x00,0xe0,0x00,0xe0,0x00,0xe0,0x00,0xe0,0x00,0xe0,0x00,0xe0,0x00,0xe0,0x00,0xe0,0x00,0xe0,0x00,0xe0,
    0x00,0xe0,0x00,0xe0,0x00,0xe0,0x00,0x07,0xf0,0x00,0x1f,0xfe,0x00,0x3f,0xff,0x00,0x7c,0x0f,0x00,0x70,0x01,0x00,0xf0,0x00,
    0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0x78,0x00,0x00,0x7e,0x00,0x00,0x3f,0xe0,0x00,0x1f,0xfc,0x00,0x07,0xfe,0x00,0x00,0x7f,
    0x00,0x00,0x0f,0x80,0x00,0x07,0x80,0x00,0x07,0x80,0x00,0x07,0x80,0x80,0x07,0x80,0xf0,0x1f,0x00,0xff,0xfe,0x00,0xff,0xfc,
    0x00,0x1f,0xf0,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0xff,0xfc,0xff,0xfc,0xff,0xfc,0x1c,0x00,
    0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,
    0x1c,0x00,0x1e,0x00,0x1e,0x00,0x0f,0xfc,0x0f,0xfc,0x03,0xfc,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,
    0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,
    0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0x70,0x03,0xe0,0x78,0x03,0xe0,0x78,0x07,0xe0,0x3e,0x1f,0xe0,0x3f,0xfd,0xe0,
    0x1f,0xf9,0xe0,0x07,0xe1,0xe0,0xf0,0x00,0x78,0x78,0x00,0x78,0x78,0x00,0x78,0x78,0x00,0xf0,0x3c,0x00,0xf0,0x3c,0x00,0xe0,
    0x1c,0x01,0xe0,0x1e,0x01,0xe0,0x1e,0x01,0xc0,0x0f,0x03,0xc0,0x0f,0x03,0xc0,0x0f,0x07,0x80,0x07,0x87,0x80,0x07,0x87,0x00,
    0x03,0x8f,0x00,0x03,0xcf,0x00,0x03,0xce,0x00,0x01,0xde,0x00,0x01,0xfe,0x00,0x01,0xfc,0x00,0x00,0xfc,0x00,0x00,0xf8,0x00,
    0xe0,0x0f,0x80,0x78,0xf0,0x0f,0x80,0x78,0xf0,0x0f,0x80,0x70,0x70,0x1f,0x80,0x70,0x70,0x1f,0xc0,0xf0,0x78,0x1d,0xc0,0xf0,
    0x78,0x1d,0xc0,0xe0,0x38,0x39,0xc1,0xe0,0x38,0x38,0xe1,0xe0,0x3c,0x38,0xe1,0xe0,0x3c,0x78,0xe1,0xc0,0x1c,0x70,0xe3,0xc0,
    0x1e,0x70,0x73,0xc0,0x1e,0x70,0x73,0xc0,0x1e,0xf0,0x73,0x80,0x0e,0xe0,0x7f,0x80,0x0f,0xe0,0x3f,0x80,0x0f,0xe0,0x3f,0x00,
    0x0f,0xe0,0x3f,0x00,0x07,0xc0,0x3f,0x00,0x07,0xc0,0x1f,0x00,0x07,0xc0,0x1e,0x00,0xf0,0x01,0xf0,0x78,0x01,0xe0,0x3c,0x03,
    0xc0,0x3e,0x07,0x80,0x1e,0x0f,0x80,0x0f,0x0f,0x00,0x07,0x9e,0x00,0x07,0xfc,0x00,0x03,0xfc,0x00,0x01,0xf8,0x00,0x01,0xf0,
    0x00,0x01,0xf8,0x00,0x03,0xf8,0x00,0x07,0xfc,0x00,0x07,0x9e,0x00,0x0f,0x1f,0x00,0x1e,0x0f,0x00,0x3e,0x07,0x80,0x3c,0x03,
    0xc0,0x78,0x03,0xe0,0xf0,0x01,0xe0,0xf0,0x00,0xf0,0xf0,0x00,0x78,0x78,0x00,0x78,0x78,0x00,0x70,0x38,0x00,0xf0,0x3c,0x00,
    0xf0,0x3c,0x01,0xe0,0x1e,0x01,0xe0,0x1e,0x01,0xc0,0x0e,0x03,0xc0,0x0f,0x03,0xc0,0x0f,0x03,0x80,0x07,0x87,0x80,0x07,0x87,
    0x00,0x03,0x8f,0x00,0x03,0xcf,0x00,0x01,0xce,0x00,0x01,0xfe,0x00,0x01,0xfc,0x00,0x00,0xfc,0x00,0x00,0xfc,0x00,0x00,0x78,
    0x00,0x00,0x78,0x00,0x00,0x70,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x01,0xe0,0x00,0x03,0xe0,0x00,0x3f,0xc0,0x00,0x3f,0x80,
    0x00,0x3f,0x00,0x00,0xff,0xff,0x80,0xff,0xff,0x80,0xff,0xff,0x80,0x00,0x07,0x80,0x00,0x0f,0x00,0x00,0x1e,0x00,0x00,0x3e,
    0x00,0x00,0x7c,0x00,0x00,0x78,0x00,0x00,0xf0,0x00,0x01,0xe0,0x00,0x03,0xc0,0x00,0x07,0x80,0x00,0x0f,0x00,0x00,0x1f,0x00,
    0x00,0x3e,0x00,0x00,0x3c,0x00,0x00,0x78,0x00,0x00,0xf0,0x00,0x00,0xff,0xff,0x80,0xff,0xff,0x80,0xff,0xff,0x80,0x00,0x3e,
    0x00,0xfe,0x01,0xfe,0x01,0xe0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,
    0x03,0xc0,0x03,0xc0,0x07,0x80,0x0f,0x80,0xff,0x00,0xfe,0x00,0xff,0x00,0x0f,0x80,0x07,0x80,0x03,0xc0,0x03,0xc0,0x03,0xc0,
    0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x01,0xe0,0x01,0xfe,0x00,0xfe,0x00,0x3e,
    0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,
    0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xfc,0x00,0xff,0x00,0xff,0x00,0x0f,0x80,
    0x07,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0xc0,0x03,0xc0,
    0x01,0xe0,0x01,0xfe,0x00,0x7e,0x00,0xfe,0x01,0xe0,0x03,0xc0,0x03,0xc0,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,
    0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x07,0x80,0x0f,0x80,0xff,0x00,0xff,0x00,0xfc,0x00,0x07,0xe0,0x00,0x80,0x3f,0xf8,
    0x01,0x80,0x7f,0xff,0x07,0x80,0xf8,0x3f,0xff,0x80,0xc0,0x0f,0xfe,0x00,0x80,0x01,0xf8,0x00,0xff,0xff,0xff,0xfe,0xff,0xff,
    0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,
    0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,
    0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,
    0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,
    0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,
    0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,
    0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,
    0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,
};

constexpr GlyphRecord k_sans_plain_glyphs[] = {
    {0x0020, 13, 0, 0, 0, 0, 0},
    {0x0021, 16, 6, 9, 4, 29, 0},
    {0x0022, 18, 4, 9, 11, 11, 29},
    {0x0023, 34, 3, 9, 27, 29, 51},
    {0x0024, 25, 3, 7, 19, 37, 167},
    {0x0025, 38, 2, 8, 34, 30, 278},
    {0x0026, 31, 3, 8, 27, 30, 428},
    {0x0027, 11, 4, 9, 3, 11, 548},
    {0x0028, 16, 3, 8, 9, 36, 559},
    {0x0029, 16, 3, 8, 9, 36, 631},
    {0x002a, 20, 1, 8, 18, 18, 703},
    {0x002b, 34, 4, 13, 25, 25, 757},
    {0x002c, 13, 3, 33, 6, 10, 857},
    {0x002d, 14, 2, 26, 10, 3, 867},
    {0x002e, 13, 4, 33, 4, 5, 873},
    {0x002f, 13, 0, 9, 13, 33, 878},
    {0x0030, 25, 3, 8, 20, 30, 944},
    {0x0031, 25, 4, 9, 18, 29, 1034},
    {0x0032, 25, 3, 8, 18, 30, 1121},
    {0x0033, 25, 3, 8, 19, 30, 1211},
    {0x0034, 25, 2, 9, 21, 29, 1301},
    {0x0035, 25, 3, 9, 19, 29, 1388},
    {0x0036, 25, 3, 8, 20, 30, 1475},
    {0x0037, 25, 3, 9, 19, 29, 1565},
    {0x0038, 25, 3, 8, 20, 30, 1652},
    {0x0039, 25, 3, 8, 20, 30, 1742},
    {0x003a, 13, 5, 17, 4, 21, 1832},
    {0x003b, 13, 3, 17, 6, 26, 1853},
    {0x003c, 34, 4, 15, 25, 21, 1879},
    {0x003d, 34, 4, 20, 25, 11, 1963},
    {0x003e, 34, 4, 15, 25, 21, 2007},
    {0x003f, 21, 3, 8, 15, 30, 2091},
    {0x0040, 40, 3, 10, 34, 35, 2151},
    {0x0041, 27, 1, 9, 26, 29, 2326},
    {0x0042, 27, 4, 9, 21, 29, 2442},
    {0x0043, 28, 2, 8, 24, 30, 2529},
    {0x0044, 31, 4, 9, 24, 29, 2619},
    {0x0045, 25, 4, 9, 19, 29, 2706},
    {0x0046, 23, 4, 9, 17, 29, 2793},
    {0x0047, 31, 2, 8, 26, 30, 2880},
    {0x0048, 30, 4, 9, 22, 29, 3000},
    {0x0049, 12, 4, 9, 4, 29, 3087},
    {0x004a, 12, -2, 9, 10, 37, 3116},
    {0x004b, 26, 4, 9, 23, 29, 3190},
    {0x004c, 22, 4, 9, 18, 29, 3277},
    {0x004d, 35, 4, 9, 27, 29, 3364},
    {0x004e, 30, 4, 9, 22, 29, 3480},
    {0x004f, 31, 2, 8, 27, 30, 3567},
    {0x0050, 24, 4, 9, 19, 29, 3687},
    {0x0051, 31, 2, 8, 27, 35, 3774},
    {0x0052, 28, 4, 9, 22, 29, 3914},
    {0x0053, 25, 3, 8, 20, 30, 4001},
    {0x0054, 24, 0, 9, 25, 29, 4091},
    {0x0055, 29, 3, 9, 23, 29, 4207},
    {0x0056, 27, 1, 9, 26, 29, 4294},
    {0x0057, 40, 1, 9, 37, 29, 4410},
    {0x0058, 27, 2, 9, 24, 29, 4555},
    {0x0059, 24, 0, 9, 24, 29, 4642},
    {0x005a, 27, 2, 9, 24, 29, 4729},
    {0x005b, 16, 3, 8, 9, 36, 4816},
    {0x005c, 13, 0, 9, 13, 33, 4888},
    {0x005d, 16, 4, 8, 8, 36, 4954},
    {0x005e, 34, 5, 9, 24, 11, 4990},
    {0x005f, 20, 0, 44, 20, 3, 5023},
    {0x0060, 20, 4, 6, 8, 7, 5032},
    {0x0061, 25, 2, 15, 19, 23, 5039},
    {0x0062, 25, 4, 8, 19, 30, 5108},
    {0x0063, 22, 2, 15, 18, 23, 5198},
    {0x0064, 25, 2, 8, 20, 30, 5267},
    {0x0065, 25, 2, 15, 20, 23, 5357},
    {0x0066, 14, 1, 8, 14, 30, 5426},
    {0x0067, 25, 2, 15, 20, 31, 5486},
    {0x0068, 25, 4, 8, 18, 30, 5579},
    {0x0069, 11, 4, 8, 3, 30, 5669},
    {0x006a, 11, -1, 8, 8, 38, 5699},
    {0x006b, 23, 4, 8, 19, 30, 5737},
    {0x006c, 11, 4, 8, 3, 30, 5827},
    {0x006d, 39, 4, 15, 32, 23, 5857},
    {0x006e, 25, 4, 15, 18, 23, 5949},
    {0x006f, 24, 2, 15, 20, 23, 6018},
    {0x0070, 25, 4, 15, 19, 31, 6087},
    {0x0071, 25, 2, 15, 20, 31, 6180},
    {0x0072, 16, 4, 15, 12, 23, 6273},
    {0x0073, 21, 2, 15, 17, 23, 6319},
    {0x0074, 16, 1, 10, 14, 28, 6388},
    {0x0075, 25, 3, 16, 19, 22, 6444},
    {0x0076, 24, 1, 16, 21, 22, 6510},
    {0x0077, 33, 2, 16, 29, 22, 6576},
    {0x0078, 24, 2, 16, 20, 22, 6664},
    {0x0079, 24, 1, 16, 21, 30, 6730},
    {0x007a, 21, 2, 16, 17, 22, 6820},
    {0x007b, 25, 5, 8, 15, 37, 6886},
    {0x007c, 13, 5, 8, 3, 40, 6960},
    {0x007d, 25, 5, 8, 15, 37, 7000},
    {0x007e, 34, 4, 23, 25, 6, 7074},
    {0x2588, 31, 0, 0, 31, 48, 7098},
};

constexpr unsigned char k_serif_display_bits[] = {
    0x7c,0x78,0x78,0x78,0x78,0x78,0x78,0x78,0x78,0x78,0x78,0x38,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x00,0x00,0x00,0x00,
    0x38,0x78,0xfc,0x78,0x38,0xe1,0xc0,0xe1,0xc0,0xe1,0xc0,0xe1,0xc0,0xe1,0xc0,0xe1,0xc0,0xe1,0xc0,0xe1,0xc0,0xe1,0xc0,0xe1,
    0xc0,0xe1,0xc0,0x00,0x1c,0x0e,0x00,0x00,0x1c,0x0e,0x00,0x00,0x1c,0x1e,0x00,0x00,0x3c,0x1e,0x00,0x00,0x38,0x1c,0x00,0x00,
    0x38,0x1c,0x00,0x00,0x38,0x3c,0x00,0x00,0x78,0x3c,0x00,0x3f,0xff,0xff,0xe0,0x3f,0xff,0xff,0xe0,0x3f,0xff,0xff,0xe0,0x00,
    0xf0,0x78,0x00,0x00,0xe0,0x70,0x00,0x00,0xe0,0x70,0x00,0x00,0xe0,0x70,0x00,0x01,0xe0,0xf0,0x00,0x01,0xe0,0xe0,0x00,0x01,
    0xc0,0xe0,0x00,0xff,0xff,0xff,0x80,0xff,0xff,0xff,0x80,0xff,0xff,0xff,0x80,0x03,0x81,0xc0,0x00,0x03,0x81,0xc0,0x00,0x07,
    0x83,0xc0,0x00,0x07,0x83,0x80,0x00,0x07,0x03,0x80,0x00,0x07,0x03,0x80,0x00,0x0f,0x07,0x80,0x00,0x0f,0x07,0x00,0x00,0x00,
    0x40,0x00,0x00,0x40,0x00,0x00,0x40,0x00,0x00,0x40,0x00,0x00,0x40,0x00,0x03,0xfc,0x00,0x1f,0xff,0x80,0x3e,0x67,0xc0,0x78,
    0x43,0xc0,0x78,0x41,0xc0,0x70,0x41,0xc0,0xf0,0x40,0xc0,0xf8,0x40,0x00,0x78,0x40,0x00,0x7e,0x40,0x00,0x3f,0xe0,0x00,0x1f,
    0xf8,0x00,0x0f,0xff,0x00,0x01,0xff,0x80,0x00,0x7f,0xc0,0x00,0x47,0xe0,0x00,0x43,0xe0,0x00,0x41,0xe0,0xe0,0x41,0xe0,0xe0,
    0x41,0xe0,0xe0,0x41,0xe0,0xf0,0x43,0xc0,0xfc,0x67,0x80,0x3f,0xff,0x00,0x07,0xf8,0x00,0x00,0x40,0x00,0x00,0x40,0x00,0x00,
    0x40,0x00,0x00,0x40,0x00,0x00,0x40,0x00,0x0f,0xc0,0x00,0xe0,0x00,0x1f,0xe0,0x00,0xe0,0x00,0x38,0x70,0x01,0xc0,0x00,0x70,
    0x78,0x01,0x80,0x00,0x70,0x38,0x03,0x80,0x00,0xf0,0x38,0x07,0x00,0x00,0xe0,0x3c,0x07,0x00,0x00,0xe0,0x1c,0x0e,0x00,0x00,
    0xe0,0x1c,0x1c,0x00,0x00,0xe0,0x3c,0x1c,0x00,0x00,0xf0,0x38,0x38,0x00,0x00,0x70,0x38,0x38,0x00,0x00,0x70,0x38,0x70,0x00,
    0x00,0x38,0x70,0xe0,0x00,0x00,0x1f,0xe0,0xe0,0xfc,0x00,0x0f,0xc1,0xc1,0xfe,0x00,0x00,0x01,0xc3,0x87,0x00,0x00,0x03,0x87,
    0x83,0x80,0x00,0x07,0x07,0x03,0x80,0x00,0x07,0x07,0x03,0xc0,0x00,0x0e,0x0f,0x01,0xc0,0x00,0x0e,0x0e,0x01,0xc0,0x00,0x1c,
    0x0e,0x01,0xc0,0x00,0x38,0x0f,0x01,0xc0,0x00,0x38,0x07,0x03,0xc0,0x00,0x70,0x07,0x03,0x80,0x00,0x70,0x07,0x83,0x80,0x00,
    0xe0,0x03,0x87,0x00,0x01,0xc0,0x01,0xfe,0x00,0x01,0xc0,0x00,0xfc,0x00,0x00,0x7e,0x00,0x00,0x01,0xff,0xc0,0x00,0x03,0xc3,
    0xe0,0x00,0x07,0x80,0xe0,0x00,0x0f,0x00,0xe0,0x00,0x0f,0x00,0x60,0x00,0x0f,0x00,0x60,0x00,0x0f,0x00,0x00,0x00,0x0f,0x00,
    0x00,0x00,0x07,0x80,0x00,0x00,0x07,0xc0,0x00,0x00,0x03,0xe0,0x00,0x00,0x07,0xf0,0x00,0x00,0x1e,0xf8,0x07,0xfc,0x3c,0x7c,
    0x07,0xfc,0x38,0x7e,0x00,0xe0,0x78,0x3e,0x00,0xc0,0xf0,0x1f,0x00,0xc0,0xf0,0x0f,0x81,0xc0,0xf0,0x07,0xc1,0xc0,0xf0,0x03,
    0xe1,0x80,0xf0,0x01,0xf3,0x80,0xf0,0x00,0xff,0x00,0xf8,0x00,0x7e,0x00,0x78,0x00,0x3e,0x00,0x7c,0x00,0x3f,0x00,0x3e,0x00,
    0x7f,0x80,0x1f,0x81,0xff,0xc0,0x0f,0xff,0xc7,0xfe,0x01,0xfe,0x03,0xfe,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,
    0xe0,0x00,0x40,0x01,0xc0,0x03,0x80,0x07,0x00,0x0e,0x00,0x1e,0x00,0x1c,0x00,0x3c,0x00,0x38,0x00,0x78,0x00,0x78,0x00,0x78,
    0x00,0x70,0x00,0x70,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0x70,
    0x00,0x70,0x00,0x78,0x00,0x78,0x00,0x78,0x00,0x38,0x00,0x3c,0x00,0x1c,0x00,0x1e,0x00,0x0e,0x00,0x07,0x00,0x03,0x80,0x01,
    0xc0,0x00,0x40,0x80,0x00,0xc0,0x00,0x70,0x00,0x38,0x00,0x3c,0x00,0x1c,0x00,0x0e,0x00,0x0e,0x00,0x0f,0x00,0x07,0x00,0x07,
    0x00,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,
    0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x00,0x07,0x00,0x0f,0x00,0x0e,0x00,0x0e,0x00,0x1c,0x00,0x3c,0x00,0x38,0x00,0x70,
    0x00,0xc0,0x00,0x80,0x00,0x00,0xc0,0x00,0x00,0xc0,0x00,0x00,0xc0,0x00,0x40,0xc0,0x80,0xe0,0xc1,0xc0,0xf8,0xc7,0xc0,0x3e,
    0xdf,0x00,0x0f,0xfc,0x00,0x03,0xf0,0x00,0x03,0xf0,0x00,0x0f,0xfc,0x00,0x3e,0xdf,0x00,0xf8,0xc7,0xc0,0xe0,0xc1,0xc0,0x40,
    0xc0,0x80,0x00,0xc0,0x00,0x00,0xc0,0x00,0x00,0xc0,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,
    0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,
    0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0xff,0xff,0xff,0x80,0xff,0xff,0xff,0x80,0xff,0xff,0xff,0x80,0x00,0x1c,0x00,0x00,0x00,
    0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,
    0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x1c,0x00,0x00,0x1e,0x1e,0x1e,0x1c,0x3c,0x38,0x78,0xf0,0xe0,
    0x40,0xff,0xc0,0xff,0xc0,0xff,0xc0,0x70,0xf8,0xf8,0xf8,0x70,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x70,0x00,0x70,0x00,0x70,
    0x00,0xe0,0x00,0xe0,0x00,0xe0,0x01,0xe0,0x01,0xc0,0x01,0xc0,0x03,0xc0,0x03,0x80,0x03,0x80,0x07,0x80,0x07,0x00,0x07,0x00,
    0x07,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x78,0x00,0x70,0x00,
    0x70,0x00,0xf0,0x00,0xe0,0x00,0x01,0xf8,0x00,0x07,0xfe,0x00,0x0f,0x0f,0x00,0x1c,0x07,0x80,0x3c,0x03,0x80,0x78,0x03,0xc0,
    0x78,0x01,0xc0,0x78,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,
    0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,
    0x78,0x01,0xe0,0x78,0x01,0xc0,0x78,0x03,0xc0,0x3c,0x03,0x80,0x1c,0x07,0x80,0x0f,0x0f,0x00,0x07,0xfe,0x00,0x01,0xf8,0x00,
    0x03,0xc0,0x07,0xc0,0x1f,0xc0,0x3f,0xc0,0x73,0xc0,0xe3,0xc0,0x83,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,
    0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,
    0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x7f,0xfe,0x7f,0xfe,0x0f,0xf0,0x00,0x7f,0xfc,0x00,0xf8,0x1f,0x00,0xf0,0x0f,0x80,
    0xe0,0x07,0x80,0xc0,0x03,0xc0,0xc0,0x03,0xc0,0x00,0x03,0xc0,0x00,0x03,0xc0,0x00,0x03,0xc0,0x00,0x03,0xc0,0x00,0x07,0x80,
    0x00,0x07,0x80,0x00,0x07,0x00,0x00,0x0f,0x00,0x00,0x1e,0x00,0x00,0x1c,0x00,0x00,0x38,0x00,0x00,0x70,0x00,0x00,0xe0,0x00,
    0x01,0xc0,0x00,0x03,0x80,0x00,0x07,0x00,0x00,0x0e,0x00,0xe0,0x1c,0x00,0xe0,0x38,0x00,0xe0,0x78,0x00,0xe0,0xff,0xff,0xe0,
    0xff,0xff,0xe0,0xff,0xff,0xe0,0x07,0xf8,0x00,0x3f,0xfe,0x00,0x7c,0x0f,0x80,0x78,0x07,0x80,0x70,0x03,0xc0,0x60,0x03,0xc0,
    0x60,0x03,0xc0,0x00,0x03,0xc0,0x00,0x03,0xc0,0x00,0x03,0xc0,0x00,0x03,0x80,0x00,0x07,0x80,0x00,0x1e,0x00,0x01,0xf8,0x00,
    0x01,0xfc,0x00,0x00,0x0f,0x00,0x00,0x07,0xc0,0x00,0x03,0xc0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,
    0xc0,0x01,0xe0,0xc0,0x01,0xe0,0xe0,0x01,0xe0,0xe0,0x03,0xe0,0xf0,0x07,0xc0,0xfc,0x0f,0x80,0x7f,0xff,0x00,0x0f,0xf8,0x00,
    0x00,0x07,0x80,0x00,0x0f,0x80,0x00,0x1f,0x80,0x00,0x1f,0x80,0x00,0x3f,0x80,0x00,0x77,0x80,0x00,0x77,0x80,0x00,0xe7,0x80,
    0x00,0xc7,0x80,0x01,0xc7,0x80,0x03,0x87,0x80,0x03,0x07,0x80,0x07,0x07,0x80,0x0e,0x07,0x80,0x0e,0x07,0x80,0x1c,0x07,0x80,
    0x38,0x07,0x80,0x38,0x07,0x80,0x70,0x07,0x80,0xe0,0x07,0x80,0xff,0xff,0xfc,0xff,0xff,0xfc,0x00,0x07,0x80,0x00,0x07,0x80,
    0x00,0x07,0x80,0x00,0x07,0x80,0x00,0x07,0x80,0x00,0x07,0x80,0x00,0xff,0xfc,0x00,0xff,0xfc,0x3f,0xff,0x80,0x3f,0xff,0x80,
    0x3f,0xff,0x80,0x30,0x00,0x00,0x30,0x00,0x00,0x30,0x00,0x00,0x30,0x00,0x00,0x30,0x00,0x00,0x30,0x00,0x00,0x33,0xf8,0x00,
    0x3f,0xfe,0x00,0x3c,0x1f,0x00,0x38,0x07,0x80,0x30,0x03,0xc0,0x00,0x03,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,
    0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0xe0,0x01,0xe0,0xe0,0x01,0xe0,0xe0,0x03,0xe0,0xf0,0x03,0xc0,0xf0,0x07,0x80,
    0xfc,0x1f,0x00,0x3f,0xfe,0x00,0x07,0xf8,0x00,0x00,0xff,0x00,0x03,0xff,0xc0,0x0f,0x83,0xc0,0x1e,0x01,0xc0,0x1c,0x00,0xc0,
    0x38,0x00,0xc0,0x78,0x00,0x00,0x70,0x00,0x00,0x70,0x00,0x00,0xf0,0x00,0x00,0xf0,0xfc,0x00,0xf7,0xff,0x00,0xff,0x0f,0x80,
    0xfc,0x03,0xc0,0xfc,0x01,0xe0,0xf8,0x01,0xe0,0xf8,0x01,0xe0,0xf8,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,
    0xf0,0x00,0xf0,0x78,0x00,0xf0,0x78,0x01,0xe0,0x78,0x01,0xe0,0x3c,0x01,0xe0,0x3c,0x03,0xc0,0x1f,0x0f,0x80,0x07,0xff,0x00,
    0x01,0xf8,0x00,0xff,0xff,0xf0,0xff,0xff,0xf0,0xff,0xff,0xe0,0xe0,0x00,0xe0,0xe0,0x01,0xe0,0xe0,0x01,0xc0,0x40,0x01,0xc0,
    0x00,0x03,0x80,0x00,0x03,0x80,0x00,0x07,0x00,0x00,0x07,0x00,0x00,0x07,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x1c,0x00,
    0x00,0x1c,0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x70,0x00,0x00,0x70,0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,
    0x00,0xc0,0x00,0x01,0xc0,0x00,0x01,0xc0,0x00,0x03,0x80,0x00,0x03,0x80,0x00,0x07,0x00,0x00,0x03,0xf8,0x00,0x0f,0xff,0x00,
    0x1e,0x0f,0x80,0x3c,0x07,0xc0,0x78,0x03,0xc0,0x78,0x01,0xe0,0x78,0x01,0xe0,0x78,0x01,0xe0,0x78,0x01,0xe0,0x78,0x01,0xc0,
    0x78,0x03,0xc0,0x3c,0x07,0x80,0x1e,0x0f,0x00,0x07,0xfc,0x00,0x07,0xfe,0x00,0x1e,0x0f,0x80,0x3c,0x03,0xc0,0x78,0x01,0xe0,
    0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x01,0xf0,0xf0,0x01,0xe0,0x78,0x01,0xe0,
    0x7c,0x03,0xc0,0x3e,0x0f,0x80,0x1f,0xff,0x00,0x03,0xfc,0x00,0x03,0xf8,0x00,0x0f,0xfe,0x00,0x1e,0x0f,0x00,0x3c,0x07,0x80,
    0x78,0x03,0xc0,0xf0,0x03,0xc0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xf0,0xf0,0x01,0xf0,
    0xf0,0x01,0xf0,0xf0,0x01,0xf0,0xf0,0x03,0xf0,0x78,0x03,0xf0,0x7c,0x07,0xf0,0x3e,0x0f,0xf0,0x1f,0xfc,0xe0,0x03,0xf0,0xe0,
    0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xc0,0x00,0x01,0xc0,0x60,0x03,0x80,0x70,0x03,0x80,0x70,0x07,0x00,0x7c,0x1e,0x00,
    0x7f,0xfc,0x00,0x1f,0xe0,0x00,0x70,0xf8,0xf8,0xf8,0x70,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x70,0xf8,0xf8,0xf8,0x70,0x1c,
    0x1e,0x3e,0x3e,0x1c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1e,0x1e,0x1e,0x1c,0x3c,0x38,0x78,0xf0,0xe0,0x40,0x00,0x00,
    0x00,0x80,0x00,0x00,0x07,0x80,0x00,0x00,0x3f,0x80,0x00,0x01,0xff,0x80,0x00,0x07,0xfc,0x00,0x00,0x3f,0xe0,0x00,0x01,0xff,
    0x00,0x00,0x0f,0xf8,0x00,0x00,0x7f,0xe0,0x00,0x00,0xff,0x00,0x00,0x00,0xfc,0x00,0x00,0x00,0xff,0x00,0x00,0x00,0x7f,0xe0,
    0x00,0x00,0x0f,0xf8,0x00,0x00,0x01,0xff,0x00,0x00,0x00,0x3f,0xe0,0x00,0x00,0x07,0xfc,0x00,0x00,0x01,0xff,0x80,0x00,0x00,
    0x3f,0x80,0x00,0x00,0x07,0x80,0x00,0x00,0x00,0x80,0xff,0xff,0xff,0x80,0xff,0xff,0xff,0x80,0xff,0xff,0xff,0x80,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xff,0xff,0xff,0x80,0xff,0xff,
    0xff,0x80,0xff,0xff,0xff,0x80,0xc0,0x00,0x00,0x00,0xf0,0x00,0x00,0x00,0xfe,0x00,0x00,0x00,0x7f,0xc0,0x00,0x00,0x0f,0xf8,
    0x00,0x00,0x01,0xff,0x00,0x00,0x00,0x7f,0xe0,0x00,0x00,0x0f,0xf8,0x00,0x00,0x01,0xff,0x00,0x00,0x00,0x3f,0x80,0x00,0x00,
    0x0f,0x80,0x00,0x00,0x3f,0x80,0x00,0x01,0xff,0x00,0x00,0x0f,0xf8,0x00,0x00,0x7f,0xe0,0x00,0x01,0xff,0x00,0x00,0x0f,0xf8,
    0x00,0x00,0x7f,0xc0,0x00,0x00,0xfe,0x00,0x00,0x00,0xf0,0x00,0x00,0x00,0xc0,0x00,0x00,0x00,0x0f,0xe0,0x7f,0xf8,0xf8,0x7c,
    0xe0,0x1e,0xc0,0x0f,0xc0,0x0f,0xc0,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x1e,0x00,0x3c,0x00,0x78,
    0x01,0xf0,0x07,0xc0,0x07,0x00,0x07,0x00,0x07,0x00,0x07,0x00,0x07,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0x00,0x0f,0x80,
    0x0f,0x80,0x0f,0x80,0x07,0x00,0x00,0x07,0xfc,0x00,0x00,0x00,0x3f,0xff,0x80,0x00,0x00,0xfc,0x03,0xe0,0x00,0x01,0xe0,0x00,
    0x70,0x00,0x07,0x80,0x00,0x1c,0x00,0x0f,0x00,0x00,0x0e,0x00,0x0e,0x00,0x00,0x06,0x00,0x1c,0x00,0x00,0x03,0x00,0x38,0x00,
    0x00,0x01,0x80,0x38,0x03,0xe3,0x81,0x80,0x70,0x0f,0xfb,0x81,0x80,0x70,0x1e,0x1f,0x80,0xc0,0xf0,0x3c,0x07,0x80,0xc0,0xe0,
    0x38,0x03,0x80,0xc0,0xe0,0x78,0x03,0x80,0xc0,0xe0,0x70,0x03,0x80,0xc0,0xe0,0x70,0x03,0x80,0xc0,0xe0,0x70,0x03,0x80,0xc0,
    0xe0,0x70,0x03,0x80,0xc0,0xe0,0x70,0x03,0x81,0x80,0xe0,0x78,0x03,0x81,0x80,0xe0,0x38,0x03,0x83,0x00,0xf0,0x3c,0x07,0x86,
    0x00,0x70,0x1e,0x1f,0x9c,0x00,0x70,0x0f,0xfb,0xf8,0x00,0x78,0x03,0xe3,0xc0,0x00,0x38,0x00,0x00,0x00,0x00,0x1c,0x00,0x00,
    0x00,0x00,0x1e,0x00,0x00,0x00,0x00,0x0f,0x00,0x00,0x00,0x00,0x07,0x80,0x00,0x20,0x00,0x01,0xe0,0x00,0x70,0x00,0x00,0xfc,
    0x03,0xc0,0x00,0x00,0x3f,0xff,0x00,0x00,0x00,0x07,0xf8,0x00,0x00,0x00,0x07,0x00,0x00,0x00,0x0f,0x80,0x00,0x00,0x0f,0x80,
    0x00,0x00,0x1f,0x80,0x00,0x00,0x1f,0xc0,0x00,0x00,0x1b,0xc0,0x00,0x00,0x3b,0xe0,0x00,0x00,0x31,0xe0,0x00,0x00,0x71,0xe0,
    0x00,0x00,0x61,0xf0,0x00,0x00,0x60,0xf0,0x00,0x00,0xe0,0xf0,0x00,0x00,0xc0,0x78,0x00,0x00,0xc0,0x78,0x00,0x01,0x80,0x7c,
    0x00,0x01,0x80,0x3c,0x00,0x03,0x80,0x3c,0x00,0x03,0x00,0x1e,0x00,0x03,0xff,0xfe,0x00,0x07,0xff,0xff,0x00,0x06,0x00,0x0f,
    0x00,0x0e,0x00,0x0f,0x00,0x0c,0x00,0x0f,0x80,0x0c,0x00,0x07,0x80,0x1c,0x00,0x07,0x80,0x18,0x00,0x07,0xc0,0x18,0x00,0x03,
    0xc0,0xff,0x00,0x1f,0xf8,0xff,0x00,0x1f,0xf8,0xff,0xff,0xe0,0x00,0xff,0xff,0xf8,0x00,0x0f,0x00,0xfc,0x00,0x0f,0x00,0x3e,
    0x00,0x0f,0x00,0x3e,0x00,0x0f,0x00,0x1e,0x00,0x0f,0x00,0x1e,0x00,0x0f,0x00,0x1e,0x00,0x0f,0x00,0x1e,0x00,0x0f,0x00,0x3e,
    0x00,0x0f,0x00,0x3c,0x00,0x0f,0x00,0xf8,0x00,0x0f,0xff,0xe0,0x00,0x0f,0xff,0xf0,0x00,0x0f,0x00,0x7c,0x00,0x0f,0x00,0x1e,
    0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x80,0x0f,0x00,0x0f,0x80,0x0f,0x00,0x0f,0x80,0x0f,0x00,0x0f,
    0x80,0x0f,0x00,0x0f,0x80,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x1f,0x00,0x0f,0x00,0x7e,0x00,0xff,0xff,0xf8,
    0x00,0xff,0xff,0xe0,0x00,0x00,0x3f,0xf0,0x00,0x00,0xff,0xff,0x00,0x03,0xe0,0x3f,0x80,0x07,0x80,0x0f,0x80,0x0f,0x00,0x07,
    0x80,0x1e,0x00,0x03,0x80,0x3c,0x00,0x03,0x80,0x3c,0x00,0x01,0x80,0x7c,0x00,0x01,0x80,0x78,0x00,0x00,0x00,0x78,0x00,0x00,
    0x00,0x78,0x00,0x00,0x00,0xf8,0x00,0x00,0x00,0xf8,0x00,0x00,0x00,0xf8,0x00,0x00,0x00,0xf8,0x00,0x00,0x00,0xf8,0x00,0x00,
    0x00,0xf8,0x00,0x00,0x00,0x78,0x00,0x00,0x00,0x78,0x00,0x00,0x00,0x78,0x00,0x00,0x00,0x7c,0x00,0x00,0x00,0x3c,0x00,0x03,
    0xc0,0x3c,0x00,0x03,0xc0,0x1e,0x00,0x07,0x80,0x0f,0x00,0x07,0x00,0x07,0x80,0x0f,0x00,0x03,0xe0,0x7c,0x00,0x00,0xff,0xf8,
    0x00,0x00,0x1f,0xc0,0x00,0xff,0xff,0x00,0x00,0xff,0xff,0xf0,0x00,0x0f,0x01,0xfc,0x00,0x0f,0x00,0x3e,0x00,0x0f,0x00,0x1f,
    0x00,0x0f,0x00,0x0f,0x80,0x0f,0x00,0x07,0xc0,0x0f,0x00,0x03,0xc0,0x0f,0x00,0x03,0xe0,0x0f,0x00,0x01,0xe0,0x0f,0x00,0x01,
    0xe0,0x0f,0x00,0x01,0xf0,0x0f,0x00,0x01,0xf0,0x0f,0x00,0x01,0xf0,0x0f,0x00,0x01,0xf0,0x0f,0x00,0x01,0xf0,0x0f,0x00,0x01,
    0xf0,0x0f,0x00,0x01,0xf0,0x0f,0x00,0x01,0xe0,0x0f,0x00,0x01,0xe0,0x0f,0x00,0x03,0xe0,0x0f,0x00,0x03,0xc0,0x0f,0x00,0x07,
    0xc0,0x0f,0x00,0x0f,0x80,0x0f,0x00,0x1f,0x00,0x0f,0x00,0x3e,0x00,0x0f,0x01,0xfc,0x00,0xff,0xff,0xf0,0x00,0xff,0xff,0x80,
    0x00,0xff,0xff,0xff,0xff,0xff,0xff,0x0f,0x00,0x07,0x0f,0x00,0x07,0x0f,0x00,0x07,0x0f,0x00,0x07,0x0f,0x00,0x00,0x0f,0x00,
    0x00,0x0f,0x00,0x70,0x0f,0x00,0x70,0x0f,0x00,0x70,0x0f,0x00,0x70,0x0f,0xff,0xf0,0x0f,0xff,0xf0,0x0f,0x00,0x70,0x0f,0x00,
    0x70,0x0f,0x00,0x70,0x0f,0x00,0x70,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,
    0x03,0x0f,0x00,0x03,0x0f,0x00,0x03,0x0f,0x00,0x03,0xff,0xff,0xff,0xff,0xff,0xff,0xff,0xff,0xff,0xff,0xff,0xff,0x0f,0x00,
    0x03,0x0f,0x00,0x03,0x0f,0x00,0x03,0x0f,0x00,0x03,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x30,0x0f,0x00,0x30,0x0f,0x00,
    0x30,0x0f,0x00,0x30,0x0f,0xff,0xf0,0x0f,0xff,0xf0,0x0f,0x00,0x30,0x0f,0x00,0x30,0x0f,0x00,0x30,0x0f,0x00,0x30,0x0f,0x00,
    0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,
    0x00,0xff,0xf8,0x00,0xff,0xf8,0x00,0x00,0x1f,0xf0,0x00,0x00,0xff,0xff,0x00,0x03,0xe0,0x3f,0xc0,0x07,0x80,0x0f,0xc0,0x0f,
    0x00,0x03,0xc0,0x1e,0x00,0x03,0xc0,0x3c,0x00,0x01,0xc0,0x3c,0x00,0x01,0xc0,0x7c,0x00,0x01,0xc0,0x78,0x00,0x00,0x00,0x78,
    0x00,0x00,0x00,0x78,0x00,0x00,0x00,0xf8,0x00,0x00,0x00,0xf8,0x00,0x00,0x00,0xf8,0x00,0x00,0x00,0xf8,0x00,0x00,0x00,0xf8,
    0x00,0x7f,0xe0,0xf8,0x00,0x7f,0xe0,0x78,0x00,0x01,0xe0,0x78,0x00,0x01,0xe0,0x78,0x00,0x01,0xe0,0x7c,0x00,0x01,0xe0,0x3c,
    0x00,0x01,0xe0,0x3e,0x00,0x01,0xe0,0x1e,0x00,0x01,0xe0,0x0f,0x00,0x01,0xe0,0x07,0x80,0x07,0xe0,0x03,0xe0,0x1f,0xc0,0x00,
    0xff,0xff,0x00,0x00,0x1f,0xf0,0x00,0xff,0xf0,0x1f,0xfe,0xff,0xf0,0x1f,0xfe,0x0f,0x00,0x01,0xe0,0x0f,0x00,0x01,0xe0,0x0f,
    0x00,0x01,0xe0,0x0f,0x00,0x01,0xe0,0x0f,0x00,0x01,0xe0,0x0f,0x00,0x01,0xe0,0x0f,0x00,0x01,0xe0,0x0f,0x00,0x01,0xe0,0x0f,
    0x00,0x01,0xe0,0x0f,0x00,0x01,0xe0,0x0f,0xff,0xff,0xe0,0x0f,0xff,0xff,0xe0,0x0f,0x00,0x01,0xe0,0x0f,0x00,0x01,0xe0,0x0f,
    0x00,0x01,0xe0,0x0f,0x00,0x01,0xe0,0x0f,0x00,0x01,0xe0,0x0f,0x00,0x01,0xe0,0x0f,0x00,0x01,0xe0,0x0f,0x00,0x01,0xe0,0x0f,
    0x00,0x01,0xe0,0x0f,0x00,0x01,0xe0,0x0f,0x00,0x01,0xe0,0x0f,0x00,0x01,0xe0,0x0f,0x00,0x01,0xe0,0xff,0xf0,0x1f,0xfe,0xff,
    0xf0,0x1f,0xfe,0xff,0xf0,0xff,0xf0,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,
    0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,
    0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0xff,0xf0,0xff,0xf0,0x07,0xff,0x80,0x07,0xff,0x80,0x00,0x38,0x00,0x00,0x38,
    0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x38,
    0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x38,
    0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x38,0x00,0x00,0x38,
    0x00,0x00,0x78,0x00,0x00,0x78,0x00,0xc0,0x78,0x00,0xc0,0x78,0x00,0xc0,0x78,0x00,0xe0,0xf0,0x00,0xf1,0xf0,0x00,0xff,0xe0,
    0x00,0x1f,0x80,0x00,0xff,0xf0,0x7f,0xe0,0xff,0xf0,0x7f,0xe0,0x0f,0x00,0x0e,0x00,0x0f,0x00,0x1c,0x00,0x0f,0x00,0x38,0x00,
    0x0f,0x00,0xf0,0x00,0x0f,0x01,0xe0,0x00,0x0f,0x03,0x80,0x00,0x0f,0x07,0x00,0x00,0x0f,0x0e,0x00,0x00,0x0f,0x1c,0x00,0x00,
    0x0f,0x38,0x00,0x00,0x0f,0xf0,0x00,0x00,0x0f,0xf0,0x00,0x00,0x0f,0xf8,0x00,0x00,0x0f,0xfc,0x00,0x00,0x0f,0x7e,0x00,0x00,
    0x0f,0x3f,0x00,0x00,0x0f,0x1f,0x80,0x00,0x0f,0x0f,0xc0,0x00,0x0f,0x07,0xe0,0x00,0x0f,0x03,0xf0,0x00,0x0f,0x01,0xf8,0x00,
    0x0f,0x00,0xfc,0x00,0x0f,0x00,0x7e,0x00,0x0f,0x00,0x3f,0x00,0x0f,0x00,0x1f,0x80,0xff,0xf0,0x0f,0xf0,0xff,0xf0,0x07,0xf0,
    0xff,0xf0,0x00,0xff,0xf0,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,
    0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,
    0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x07,0x0f,0x00,0x07,
    0x0f,0x00,0x07,0x0f,0x00,0x07,0x0f,0x00,0x07,0xff,0xff,0xff,0xff,0xff,0xff,0xff,0x80,0x00,0x07,0xf8,0xff,0x80,0x00,0x0f,
    0xf8,0x0f,0xc0,0x00,0x0f,0x80,0x0f,0xc0,0x00,0x1f,0x80,0x0f,0xe0,0x00,0x1f,0x80,0x0d,0xe0,0x00,0x3f,0x80,0x0d,0xf0,0x00,
    0x37,0x80,0x0c,0xf0,0x00,0x77,0x80,0x0c,0xf8,0x00,0x67,0x80,0x0c,0x78,0x00,0xe7,0x80,0x0c,0x7c,0x00,0xc7,0x80,0x0c,0x3c,
    0x01,0xc7,0x80,0x0c,0x3e,0x01,0x87,0x80,0x0c,0x1e,0x03,0x87,0x80,0x0c,0x1f,0x03,0x07,0x80,0x0c,0x0f,0x07,0x07,0x80,0x0c,
    0x0f,0x86,0x07,0x80,0x0c,0x07,0x8e,0x07,0x80,0x0c,0x07,0xcc,0x07,0x80,0x0c,0x03,0xdc,0x07,0x80,0x0c,0x03,0xf8,0x07,0x80,
    0x0c,0x01,0xf8,0x07,0x80,0x0c,0x01,0xf0,0x07,0x80,0x0c,0x00,0xf0,0x07,0x80,0x0c,0x00,0xe0,0x07,0x80,0x0c,0x00,0x00,0x07,
    0x80,0x0c,0x00,0x00,0x07,0x80,0xff,0xc0,0x00,0x7f,0xf8,0xff,0xc0,0x00,0x7f,0xf8,0xff,0x00,0x07,0xfe,0xff,0x80,0x07,0xfe,
    0x0f,0x80,0x00,0x60,0x0f,0xc0,0x00,0x60,0x0f,0xe0,0x00,0x60,0x0f,0xf0,0x00,0x60,0x0d,0xf0,0x00,0x60,0x0c,0xf8,0x00,0x60,
    0x0c,0x7c,0x00,0x60,0x0c,0x3e,0x00,0x60,0x0c,0x3e,0x00,0x60,0x0c,0x1f,0x00,0x60,0x0c,0x0f,0x80,0x60,0x0c,0x07,0xc0,0x60,
    0x0c,0x07,0xc0,0x60,0x0c,0x03,0xe0,0x60,0x0c,0x01,0xf0,0x60,0x0c,0x00,0xf8,0x60,0x0c,0x00,0xfc,0x60,0x0c,0x00,0x7c,0x60,
    0x0c,0x00,0x3e,0x60,0x0c,0x00,0x1f,0x60,0x0c,0x00,0x1f,0xe0,0x0c,0x00,0x0f,0xe0,0x0c,0x00,0x07,0xe0,0x0c,0x00,0x03,0xe0,
    0x0c,0x00,0x03,0xe0,0xff,0xc0,0x01,0xe0,0xff,0xc0,0x00,0xe0,0x00,0x00,0x00,0x60,0x00,0x1f,0xc0,0x00,0x00,0xff,0xf8,0x00,
    0x03,0xe0,0x3e,0x00,0x07,0x80,0x0f,0x00,0x0f,0x00,0x07,0x80,0x1e,0x00,0x03,0xc0,0x3c,0x00,0x03,0xc0,0x3c,0x00,0x01,0xe0,
    0x7c,0x00,0x01,0xe0,0x78,0x00,0x01,0xf0,0x78,0x00,0x00,0xf0,0x78,0x00,0x00,0xf0,0xf8,0x00,0x00,0xf0,0xf8,0x00,0x00,0xf0,
    0xf8,0x00,0x00,0xf8,0xf8,0x00,0x00,0xf8,0xf8,0x00,0x00,0xf0,0xf8,0x00,0x00,0xf0,0x78,0x00,0x00,0xf0,0x78,0x00,0x00,0xf0,
    0x78,0x00,0x01,0xf0,0x7c,0x00,0x01,0xe0,0x3c,0x00,0x01,0xe0,0x3c,0x00,0x03,0xc0,0x1e,0x00,0x03,0xc0,0x0f,0x00,0x07,0x80,
    0x07,0x80,0x0f,0x00,0x03,0xe0,0x3e,0x00,0x00,0xff,0xf8,0x00,0x00,0x1f,0xc0,0x00,0xff,0xff,0xc0,0xff,0xff,0xf0,0x0f,0x00,
    0xf8,0x0f,0x00,0x7c,0x0f,0x00,0x3e,0x0f,0x00,0x1e,0x0f,0x00,0x1e,0x0f,0x00,0x1e,0x0f,0x00,0x1e,0x0f,0x00,0x1e,0x0f,0x00,
    0x1e,0x0f,0x00,0x3e,0x0f,0x00,0x7c,0x0f,0x00,0xf8,0x0f,0xff,0xf0,0x0f,0xff,0xc0,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,
    0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,
    0x00,0xff,0xf0,0x00,0xff,0xf0,0x00,0x00,0x1f,0xc0,0x00,0x00,0xff,0xf8,0x00,0x03,0xe0,0x3e,0x00,0x07,0x80,0x0f,0x00,0x0f,
    0x00,0x07,0x80,0x1e,0x00,0x03,0xc0,0x3c,0x00,0x03,0xc0,0x3c,0x00,0x01,0xe0,0x7c,0x00,0x01,0xe0,0x78,0x00,0x01,0xf0,0x78,
    0x00,0x00,0xf0,0x78,0x00,0x00,0xf0,0xf8,0x00,0x00,0xf0,0xf8,0x00,0x00,0xf0,0xf8,0x00,0x00,0xf8,0xf8,0x00,0x00,0xf8,0xf8,
    0x00,0x00,0xf0,0xf8,0x00,0x00,0xf0,0x78,0x00,0x00,0xf0,0x78,0x00,0x00,0xf0,0x78,0x00,0x01,0xf0,0x7c,0x00,0x01,0xe0,0x3c,
    0x00,0x01,0xe0,0x3c,0x00,0x03,0xc0,0x1e,0x00,0x03,0xc0,0x0f,0x00,0x07,0x80,0x07,0x80,0x0f,0x00,0x03,0xe0,0x3e,0x00,0x00,
    0xff,0xf8,0x00,0x00,0x1f,0xc0,0x00,0x00,0x01,0xc0,0x00,0x00,0x00,0xf0,0x00,0x00,0x00,0x7f,0x00,0x00,0x00,0x3f,0x00,0x00,
    0x00,0x1f,0x00,0x00,0x00,0x07,0x00,0xff,0xff,0xe0,0x00,0xff,0xff,0xf8,0x00,0x0f,0x00,0xfc,0x00,0x0f,0x00,0x3e,0x00,0x0f,
    0x00,0x1e,0x00,0x0f,0x00,0x1f,0x00,0x0f,0x00,0x1f,0x00,0x0f,0x00,0x1f,0x00,0x0f,0x00,0x1f,0x00,0x0f,0x00,0x1f,0x00,0x0f,
    0x00,0x1f,0x00,0x0f,0x00,0x1e,0x00,0x0f,0x00,0x3c,0x00,0x0f,0x00,0xf8,0x00,0x0f,0xff,0xf0,0x00,0x0f,0xff,0xc0,0x00,0x0f,
    0x01,0xf0,0x00,0x0f,0x00,0xf8,0x00,0x0f,0x00,0x78,0x00,0x0f,0x00,0x7c,0x00,0x0f,0x00,0x3c,0x00,0x0f,0x00,0x3e,0x00,0x0f,
    0x00,0x1e,0x00,0x0f,0x00,0x1f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x00,0x0f,0x80,0x0f,0x00,0x07,0x80,0xff,0xf0,0x07,0xf8,0xff,
    0xf0,0x03,0xf8,0x03,0xfe,0x00,0x0f,0xff,0xc0,0x3e,0x03,0xf0,0x3c,0x00,0xf0,0x78,0x00,0x70,0x70,0x00,0x70,0xf0,0x00,0x30,
    0xf0,0x00,0x30,0xf0,0x00,0x00,0x78,0x00,0x00,0x7c,0x00,0x00,0x7f,0x00,0x00,0x3f,0xe0,0x00,0x1f,0xfc,0x00,0x07,0xff,0x80,
    0x01,0xff,0xe0,0x00,0x3f,0xf0,0x00,0x03,0xf0,0x00,0x00,0xf8,0x00,0x00,0x78,0x00,0x00,0x78,0x60,0x00,0x78,0x60,0x00,0x38,
    0x60,0x00,0x78,0x70,0x00,0x78,0x70,0x00,0x78,0x78,0x00,0xf0,0x7e,0x03,0xe0,0x3f,0xff,0xc0,0x03,0xfe,0x00,0xff,0xff,0xff,
    0xc0,0xff,0xff,0xff,0xc0,0xe0,0x1e,0x00,0xc0,0xe0,0x1e,0x00,0xc0,0xe0,0x1e,0x00,0xc0,0xe0,0x1e,0x00,0xc0,0xe0,0x1e,0x00,
    0xc0,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,
    0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,
    0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,
    0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0xff,0xe0,0x00,0x00,0xff,0xe0,0x00,0xff,0xe0,0x0f,0xfc,0xff,0xe0,0x0f,
    0xfc,0x0f,0x00,0x00,0xc0,0x0f,0x00,0x00,0xc0,0x0f,0x00,0x00,0xc0,0x0f,0x00,0x00,0xc0,0x0f,0x00,0x00,0xc0,0x0f,0x00,0x00,
    0xc0,0x0f,0x00,0x00,0xc0,0x0f,0x00,0x00,0xc0,0x0f,0x00,0x00,0xc0,0x0f,0x00,0x00,0xc0,0x0f,0x00,0x00,0xc0,0x0f,0x00,0x00,
    0xc0,0x0f,0x00,0x00,0xc0,0x0f,0x00,0x00,0xc0,0x0f,0x00,0x00,0xc0,0x0f,0x00,0x00,0xc0,0x0f,0x00,0x00,0xc0,0x0f,0x00,0x00,
    0xc0,0x0f,0x00,0x00,0xc0,0x0f,0x00,0x01,0xc0,0x0f,0x00,0x01,0xc0,0x07,0x80,0x01,0x80,0x07,0x80,0x03,0x80,0x03,0xc0,0x07,
    0x00,0x03,0xf0,0x1e,0x00,0x00,0xff,0xfc,0x00,0x00,0x3f,0xe0,0x00,0xff,0xc0,0x07,0xf8,0xff,0xc0,0x07,0xf8,0x1e,0x00,0x00,
    0xc0,0x1f,0x00,0x00,0xc0,0x1f,0x00,0x01,0xc0,0x0f,0x00,0x01,0x80,0x0f,0x80,0x03,0x80,0x07,0x80,0x03,0x80,0x07,0xc0,0x03,
    0x00,0x07,0xc0,0x07,0x00,0x03,0xc0,0x06,0x00,0x03,0xe0,0x06,0x00,0x01,0xe0,0x0e,0x00,0x01,0xe0,0x0c,0x00,0x01,0xf0,0x1c,
    0x00,0x00,0xf0,0x18,0x00,0x00,0xf8,0x18,0x00,0x00,0xf8,0x38,0x00,0x00,0x78,0x30,0x00,0x00,0x7c,0x70,0x00,0x00,0x3c,0x70,
    0x00,0x00,0x3e,0x60,0x00,0x00,0x3e,0xe0,0x00,0x00,0x1e,0xc0,0x00,0x00,0x1f,0xc0,0x00,0x00,0x0f,0xc0,0x00,0x00,0x0f,0x80,
    0x00,0x00,0x0f,0x80,0x00,0x00,0x07,0x00,0x00,0xff,0xe0,0x0e,0x00,0x7f,0x80,0xff,0xe0,0x1f,0x00,0x7f,0x80,0x1e,0x00,0x1f,
    0x00,0x0c,0x00,0x0f,0x00,0x1f,0x00,0x0c,0x00,0x0f,0x00,0x1f,0x00,0x18,0x00,0x0f,0x00,0x3f,0x80,0x18,0x00,0x0f,0x00,0x37,
    0x80,0x18,0x00,0x07,0x80,0x37,0x80,0x38,0x00,0x07,0x80,0x37,0xc0,0x30,0x00,0x07,0x80,0x63,0xc0,0x30,0x00,0x07,0xc0,0x63,
    0xc0,0x30,0x00,0x03,0xc0,0x63,0xc0,0x60,0x00,0x03,0xc0,0xe1,0xe0,0x60,0x00,0x03,0xc0,0xc1,0xe0,0x60,0x00,0x01,0xe0,0xc1,
    0xe0,0xe0,0x00,0x01,0xe0,0xc1,0xf0,0xc0,0x00,0x01,0xe1,0x80,0xf0,0xc0,0x00,0x01,0xf1,0x80,0xf0,0xc0,0x00,0x00,0xf1,0x80,
    0xf1,0x80,0x00,0x00,0xf3,0x80,0x79,0x80,0x00,0x00,0xf3,0x00,0x79,0x80,0x00,0x00,0x7b,0x00,0x7b,0x80,0x00,0x00,0x7b,0x00,
    0x7b,0x00,0x00,0x00,0x7e,0x00,0x3f,0x00,0x00,0x00,0x7e,0x00,0x3f,0x00,0x00,0x00,0x3e,0x00,0x3e,0x00,0x00,0x00,0x3e,0x00,
    0x1e,0x00,0x00,0x00,0x3c,0x00,0x1e,0x00,0x00,0x00,0x1c,0x00,0x1e,0x00,0x00,0xff,0xf0,0x7f,0xe0,0xff,0xf0,0x7f,0xe0,0x0f,
    0x80,0x06,0x00,0x0f,0x80,0x0e,0x00,0x07,0xc0,0x1c,0x00,0x03,0xe0,0x18,0x00,0x03,0xe0,0x38,0x00,0x01,0xf0,0x70,0x00,0x00,
    0xf8,0x60,0x00,0x00,0xf8,0xe0,0x00,0x00,0x7d,0xc0,0x00,0x00,0x3f,0x80,0x00,0x00,0x3f,0x00,0x00,0x00,0x1f,0x00,0x00,0x00,
    0x0f,0x80,0x00,0x00,0x1f,0x80,0x00,0x00,0x1f,0xc0,0x00,0x00,0x3b,0xe0,0x00,0x00,0x71,0xe0,0x00,0x00,0x61,0xf0,0x00,0x00,
    0xe0,0xf8,0x00,0x01,0xc0,0x78,0x00,0x01,0x80,0x7c,0x00,0x03,0x80,0x3e,0x00,0x07,0x00,0x1e,0x00,0x06,0x00,0x1f,0x00,0x0c,
    0x00,0x0f,0x80,0xff,0xc0,0x7f,0xf0,0xff,0xc0,0x7f,0xf0,0xff,0xc0,0x3f,0xe0,0xff,0xc0,0x3f,0xe0,0x1e,0x00,0x07,0x00,0x1f,
    0x00,0x06,0x00,0x0f,0x80,0x0c,0x00,0x0f,0x80,0x1c,0x00,0x07,0xc0,0x18,0x00,0x03,0xc0,0x38,0x00,0x03,0xe0,0x30,0x00,0x01,
    0xf0,0x60,0x00,0x00,0xf0,0xe0,0x00,0x00,0xf8,0xc0,0x00,0x00,0x79,0x80,0x00,0x00,0x7f,0x80,0x00,0x00,0x3f,0x00,0x00,0x00,
    0x1f,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,
    0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,
    0xff,0xe0,0x00,0x00,0xff,0xe0,0x00,0xff,0xff,0xff,0xff,0xff,0xfe,0xe0,0x00,0x3e,0xe0,0x00,0x7c,0xe0,0x00,0xf8,0xe0,0x01,
    0xf8,0x00,0x01,0xf0,0x00,0x03,0xe0,0x00,0x07,0xe0,0x00,0x07,0xc0,0x00,0x0f,0x80,0x00,0x1f,0x00,0x00,0x1f,0x00,0x00,0x3e,
    0x00,0x00,0x7c,0x00,0x00,0xfc,0x00,0x00,0xf8,0x00,0x01,0xf0,0x00,0x03,0xe0,0x00,0x03,0xe0,0x00,0x07,0xc0,0x00,0x0f,0x80,
    0x00,0x1f,0x80,0x00,0x1f,0x00,0x03,0x3e,0x00,0x03,0x7c,0x00,0x03,0x7c,0x00,0x03,0xff,0xff,0xff,0xff,0xff,0xff,0xff,0xc0,
    0xff,0xc0,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,
    0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,
    0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xf0,0x00,0xff,0xc0,0xff,0xc0,0xe0,0x00,
    0xf0,0x00,0x70,0x00,0x70,0x00,0x78,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x0e,0x00,0x0e,0x00,
    0x0e,0x00,0x07,0x00,0x07,0x00,0x07,0x00,0x07,0x80,0x03,0x80,0x03,0x80,0x03,0xc0,0x01,0xc0,0x01,0xc0,0x01,0xe0,0x00,0xe0,
    0x00,0xe0,0x00,0xe0,0x00,0x70,0x00,0x70,0x00,0x70,0x00,0x38,0x00,0x38,0x00,0x38,0xff,0x80,0xff,0x80,0x07,0x80,0x07,0x80,
    0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,
    0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,
    0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0xff,0x80,0xff,0x80,0x00,0x7c,0x00,0x00,0xfe,0x00,0x01,0xff,
    0x00,0x03,0xff,0x80,0x03,0xc7,0xc0,0x07,0x83,0xe0,0x0f,0x00,0xf0,0x1e,0x00,0x78,0x38,0x00,0x3c,0x70,0x00,0x1e,0xe0,0x00,
    0x07,0xff,0xff,0xf0,0xff,0xff,0xf0,0xf0,0x70,0x38,0x1c,0x0c,0x06,0x07,0x07,0xf0,0x00,0x1f,0xfc,0x00,0x3c,0x1f,0x00,0x38,
    0x07,0x00,0x30,0x07,0x80,0x30,0x03,0x80,0x00,0x03,0x80,0x00,0x03,0x80,0x07,0xff,0xc0,0x1f,0xff,0xc0,0x3e,0x03,0xc0,0x78,
    0x03,0xc0,0xf0,0x03,0xc0,0xf0,0x03,0xc0,0xf0,0x03,0xc0,0xf0,0x03,0xc0,0xf0,0x03,0xc0,0xf8,0x07,0xc0,0x78,0x07,0xc0,0x3e,
    0x1f,0xc0,0x1f,0xfb,0xf8,0x0f,0xe3,0xf8,0xfe,0x00,0x00,0xfe,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,
    0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,0x1f,0x80,0x0e,0x7f,0xe0,0x0e,0xe1,0xf0,0x0f,0x80,0xf0,0x0f,0x00,0x78,0x0f,
    0x00,0x3c,0x0f,0x00,0x3c,0x0e,0x00,0x3c,0x0e,0x00,0x3c,0x0e,0x00,0x3c,0x0e,0x00,0x3e,0x0e,0x00,0x3e,0x0e,0x00,0x3c,0x0e,
    0x00,0x3c,0x0e,0x00,0x3c,0x0f,0x00,0x3c,0x0f,0x00,0x3c,0x0f,0x00,0x78,0x0f,0x80,0xf0,0x0e,0xc1,0xf0,0xfe,0x7f,0xe0,0xfe,
    0x1f,0x80,0x01,0xfc,0x00,0x07,0xff,0x80,0x1f,0x07,0xc0,0x3c,0x03,0xc0,0x3c,0x01,0xc0,0x78,0x01,0xc0,0x78,0x00,0xc0,0xf0,
    0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0x78,
    0x00,0xc0,0x78,0x01,0xc0,0x3c,0x01,0xc0,0x3c,0x03,0x80,0x1f,0x07,0x00,0x07,0xfe,0x00,0x01,0xf8,0x00,0x00,0x0f,0xe0,0x00,
    0x0f,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x03,0xf1,0xe0,0x0f,
    0xfd,0xe0,0x1f,0x0f,0xe0,0x3c,0x07,0xe0,0x78,0x03,0xe0,0x78,0x01,0xe0,0x78,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,
    0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0x78,0x01,0xe0,0x78,0x01,0xe0,0x78,
    0x03,0xe0,0x3c,0x03,0xe0,0x1f,0x0f,0xe0,0x0f,0xfd,0xfc,0x03,0xf1,0xfc,0x01,0xf8,0x00,0x07,0xfe,0x00,0x1f,0x0f,0x80,0x3c,
    0x03,0xc0,0x38,0x03,0xc0,0x78,0x01,0xe0,0x78,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xff,0xff,0xf0,0xff,0xff,0xf0,0xf0,
    0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0xf0,0x00,0x00,0x78,0x00,0xe0,0x78,0x00,0xe0,0x3c,0x01,0xc0,0x3c,0x01,0xc0,0x1f,
    0x07,0x80,0x07,0xff,0x00,0x01,0xfc,0x00,0x00,0xfe,0x03,0xff,0x07,0x87,0x07,0x03,0x0f,0x03,0x0f,0x00,0x0e,0x00,0x0e,0x00,
    0x0e,0x00,0xff,0xf8,0xff,0xf8,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,
    0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0xff,0xf0,0xff,0xf0,0x03,0xf0,0x00,0x0f,
    0xf9,0xfc,0x1f,0x0d,0xfc,0x3c,0x07,0xe0,0x78,0x03,0xe0,0x78,0x01,0xe0,0x78,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,
    0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0x78,0x01,0xe0,0x78,0x01,0xe0,0x78,
    0x03,0xe0,0x3c,0x03,0xe0,0x1f,0x0f,0xe0,0x0f,0xfd,0xe0,0x03,0xf1,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xc0,0x30,
    0x03,0xc0,0x38,0x03,0x80,0x3c,0x0f,0x80,0x3f,0xfe,0x00,0x0f,0xf8,0x00,0xfe,0x00,0x00,0xfe,0x00,0x00,0x0e,0x00,0x00,0x0e,
    0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,0x1f,0x80,0x0e,0x7f,0xc0,0x0e,0xc1,0xe0,0x0f,
    0x80,0xf0,0x0f,0x80,0xf0,0x0f,0x00,0x70,0x0f,0x00,0x70,0x0f,0x00,0x70,0x0f,0x00,0x70,0x0e,0x00,0x70,0x0e,0x00,0x70,0x0e,
    0x00,0x70,0x0e,0x00,0x70,0x0e,0x00,0x70,0x0e,0x00,0x70,0x0e,0x00,0x70,0x0e,0x00,0x70,0x0e,0x00,0x70,0x0e,0x00,0x70,0x0e,
    0x00,0x70,0x7f,0xe3,0xff,0x7f,0xe3,0xff,0x0c,0x00,0x1e,0x00,0x1e,0x00,0x0c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0xfe,0x00,0xfe,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,
    0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0xff,0xe0,0xff,0xe0,0x00,0x70,0x00,0xf0,0x00,0xf0,
    0x00,0x70,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xf0,0x07,0xf0,0x00,0x70,0x00,0x70,0x00,0x70,0x00,0x70,0x00,0x70,
    0x00,0x70,0x00,0x70,0x00,0x70,0x00,0x70,0x00,0x70,0x00,0x70,0x00,0x70,0x00,0x70,0x00,0x70,0x00,0x70,0x00,0x70,0x00,0x70,
    0x00,0x70,0x00,0x70,0x00,0x70,0x00,0x70,0x00,0x70,0xc0,0x70,0xc0,0xf0,0xe1,0xe0,0xff,0xc0,0x3f,0x00,0xfe,0x00,0x00,0xfe,
    0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,
    0x07,0xfc,0x0e,0x07,0xfc,0x0e,0x01,0xc0,0x0e,0x03,0x80,0x0e,0x07,0x00,0x0e,0x0e,0x00,0x0e,0x1c,0x00,0x0e,0x38,0x00,0x0e,
    0x78,0x00,0x0e,0xfc,0x00,0x0f,0xfe,0x00,0x0f,0x9e,0x00,0x0f,0x0f,0x00,0x0e,0x0f,0x80,0x0e,0x07,0x80,0x0e,0x03,0xc0,0x0e,
    0x03,0xe0,0x0e,0x01,0xe0,0x0e,0x00,0xf0,0xff,0xc7,0xff,0xff,0xc7,0xff,0xfe,0x00,0xfe,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,
    0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,
    0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0xff,0xe0,
    0xff,0xe0,0x00,0x1f,0x01,0xf8,0x00,0xfe,0x7f,0xc3,0xfc,0x00,0xfe,0xc3,0xe6,0x1e,0x00,0x0f,0x81,0xfc,0x0f,0x00,0x0f,0x00,
    0xf8,0x07,0x00,0x0f,0x00,0xf8,0x07,0x00,0x0f,0x00,0xf0,0x07,0x80,0x0f,0x00,0xf0,0x07,0x80,0x0f,0x00,0xf0,0x07,0x80,0x0e,
    0x00,0xf0,0x07,0x80,0x0e,0x00,0xf0,0x07,0x80,0x0e,0x00,0xf0,0x07,0x80,0x0e,0x00,0xf0,0x07,0x80,0x0e,0x00,0xf0,0x07,0x80,
    0x0e,0x00,0xf0,0x07,0x80,0x0e,0x00,0xf0,0x07,0x80,0x0e,0x00,0xf0,0x07,0x80,0x0e,0x00,0xf0,0x07,0x80,0x0e,0x00,0xf0,0x07,
    0x80,0x0e,0x00,0xf0,0x07,0x80,0x7f,0xe7,0xfe,0x3f,0xf0,0x7f,0xe7,0xfe,0x3f,0xf0,0x00,0x1f,0x80,0xfe,0x3f,0xc0,0xfe,0x61,
    0xe0,0x0f,0x80,0xf0,0x0f,0x80,0xf0,0x0f,0x00,0xf0,0x0f,0x00,0x70,0x0f,0x00,0x70,0x0f,0x00,0x70,0x0f,0x00,0x70,0x0e,0x00,
    0x70,0x0e,0x00,0x70,0x0e,0x00,0x70,0x0e,0x00,0x70,0x0e,0x00,0x70,0x0e,0x00,0x70,0x0e,0x00,0x70,0x0e,0x00,0x70,0x0e,0x00,
    0x70,0x0e,0x00,0x70,0x7f,0xe3,0xff,0x7f,0xe3,0xff,0x01,0xf8,0x00,0x07,0xfe,0x00,0x1f,0x0f,0x80,0x3c,0x03,0xc0,0x3c,0x03,
    0xc0,0x78,0x01,0xe0,0x78,0x01,0xe0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0xf0,0x00,
    0xf0,0xf0,0x00,0xf0,0xf0,0x00,0xf0,0x78,0x01,0xe0,0x78,0x01,0xe0,0x3c,0x03,0xc0,0x3c,0x03,0xc0,0x1f,0x0f,0x80,0x07,0xfe,
    0x00,0x01,0xf8,0x00,0x00,0x1f,0x80,0xfe,0x7f,0xe0,0xfe,0xe1,0xf0,0x0f,0x80,0xf0,0x0f,0x00,0x78,0x0f,0x00,0x3c,0x0f,0x00,
    0x3c,0x0e,0x00,0x3c,0x0e,0x00,0x3c,0x0e,0x00,0x3c,0x0e,0x00,0x3e,0x0e,0x00,0x3e,0x0e,0x00,0x3c,0x0e,0x00,0x3c,0x0e,0x00,
    0x3c,0x0f,0x00,0x3c,0x0f,0x00,0x3c,0x0f,0x00,0x78,0x0f,0x80,0xf0,0x0e,0xc1,0xf0,0x0e,0x7f,0xe0,0x0e,0x1f,0x80,0x0e,0x00,
    0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0xff,0xe0,0x00,0xff,0xe0,0x00,0x03,0xf0,
    0x00,0x0f,0xf9,0xfc,0x1f,0x0d,0xfc,0x3c,0x07,0xe0,0x78,0x03,0xe0,0x78,0x01,0xe0,0x78,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,
    0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0xf0,0x01,0xe0,0x78,0x01,0xe0,0x78,0x01,
    0xe0,0x78,0x03,0xe0,0x3c,0x03,0xe0,0x1f,0x0f,0xe0,0x0f,0xfd,0xe0,0x03,0xf1,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,
    0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x0f,0xfc,0x00,0x0f,0xfc,0x00,0x1f,0x80,0xfe,0x3f,0xc0,0xfe,0x7f,
    0xc0,0x0f,0xe1,0xc0,0x0f,0x80,0xc0,0x0f,0x80,0xc0,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0f,0x00,0x00,0x0e,0x00,
    0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,
    0x00,0x0e,0x00,0x00,0x7f,0xf0,0x00,0x7f,0xf0,0x00,0x07,0xe0,0x1f,0xfc,0x3c,0x1e,0x70,0x0e,0x70,0x06,0xf0,0x06,0xf0,0x06,
    0xf8,0x00,0x7c,0x00,0x3f,0x80,0x1f,0xf0,0x07,0xfc,0x00,0xfe,0x00,0x1f,0x00,0x0f,0xc0,0x07,0xe0,0x07,0xe0,0x07,0xf0,0x0f,
    0xf8,0x1e,0x7f,0xfc,0x0f,0xf0,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0xff,0xfc,0xff,0xfc,0x1e,0x00,
    0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,
    0x1e,0x0e,0x1e,0x0e,0x0e,0x0c,0x0f,0x1c,0x07,0xf8,0x03,0xf0,0xfe,0x07,0xf0,0xfe,0x07,0xf0,0x1e,0x00,0xf0,0x1e,0x00,0xf0,
    0x1e,0x00,0xf0,0x1e,0x00,0xf0,0x1e,0x00,0xf0,0x1e,0x00,0xf0,0x1e,0x00,0xf0,0x1e,0x00,0xf0,0x1e,0x00,0xf0,0x1e,0x00,0xf0,
    0x1e,0x00,0xf0,0x1e,0x00,0xf0,0x1e,0x00,0xf0,0x1e,0x00,0xf0,0x0e,0x01,0xf0,0x0f,0x01,0xf0,0x0f,0x86,0xf0,0x07,0xfc,0xfe,
    0x01,0xf8,0xfe,0xff,0x81,0xfc,0xff,0x81,0xfc,0x3c,0x00,0x30,0x1e,0x00,0x70,0x1e,0x00,0x60,0x0f,0x00,0xe0,0x0f,0x00,0xc0,
    0x0f,0x00,0xc0,0x07,0x81,0xc0,0x07,0x81,0x80,0x03,0xc3,0x80,0x03,0xc3,0x00,0x03,0xc3,0x00,0x01,0xe7,0x00,0x01,0xe6,0x00,
    0x00,0xfe,0x00,0x00,0xfc,0x00,0x00,0xfc,0x00,0x00,0x7c,0x00,0x00,0x78,0x00,0x00,0x38,0x00,0xff,0x80,0xc0,0x7f,0x80,0xff,
    0x81,0xe0,0x7f,0x80,0x3c,0x01,0xe0,0x0c,0x00,0x3c,0x01,0xe0,0x0c,0x00,0x1c,0x03,0xf0,0x1c,0x00,0x1e,0x03,0xf0,0x18,0x00,
    0x1e,0x03,0x70,0x18,0x00,0x0e,0x06,0x78,0x38,0x00,0x0f,0x06,0x78,0x30,0x00,0x0f,0x06,0x38,0x30,0x00,0x07,0x0c,0x3c,0x70,
    0x00,0x07,0x8c,0x3c,0x60,0x00,0x07,0x8c,0x3c,0x60,0x00,0x03,0x98,0x1e,0xe0,0x00,0x03,0xd8,0x1e,0xc0,0x00,0x03,0xd8,0x1e,
    0xc0,0x00,0x01,0xf0,0x0f,0xc0,0x00,0x01,0xf0,0x0f,0x80,0x00,0x01,0xf0,0x0f,0x80,0x00,0x00,0xe0,0x07,0x80,0x00,0x00,0xe0,
    0x07,0x00,0x00,0xff,0xc7,0xf8,0xff,0xc7,0xf8,0x1f,0x00,0xc0,0x0f,0x01,0x80,0x07,0x83,0x80,0x03,0xc3,0x00,0x03,0xc6,0x00,
    0x01,0xee,0x00,0x00,0xfc,0x00,0x00,0xf8,0x00,0x00,0x78,0x00,0x00,0x7c,0x00,0x00,0xfe,0x00,0x00,0xde,0x00,0x01,0x8f,0x00,
    0x03,0x87,0x80,0x07,0x07,0xc0,0x06,0x03,0xc0,0x0c,0x01,0xe0,0x7f,0x8f,0xfc,0x7f,0x8f,0xfc,0xff,0x81,0xfc,0xff,0x81,0xfc,
    0x3c,0x00,0x30,0x1e,0x00,0x70,0x1e,0x00,0x60,0x0f,0x00,0xe0,0x0f,0x00,0xc0,0x07,0x00,0xc0,0x07,0x81,0x80,0x07,0x81,0x80,
    0x03,0xc3,0x80,0x03,0xc3,0x00,0x01,0xc3,0x00,0x01,0xe6,0x00,0x00,0xe6,0x00,0x00,0xfc,0x00,0x00,0xfc,0x00,0x00,0x7c,0x00,
    0x00,0x78,0x00,0x00,0x38,0x00,0x00,0x30,0x00,0x00,0x70,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x60,0xe0,0x00,0x60,0xc0,0x00,
    0x71,0xc0,0x00,0x7f,0x80,0x00,0x1f,0x00,0x00,0xff,0xff,0x80,0xff,0xff,0x80,0xc0,0x0f,0x80,0xc0,0x1f,0x00,0xc0,0x1e,0x00,
    0xc0,0x3c,0x00,0x00,0x7c,0x00,0x00,0xf8,0x00,0x00,0xf0,0x00,0x01,0xe0,0x00,0x03,0xe0,0x00,0x07,0xc0,0x00,0x07,0x80,0x00,
    0x0f,0x00,0x00,0x1f,0x00,0x00,0x3e,0x00,0xc0,0x3c,0x00,0xc0,0x78,0x00,0xc0,0xf8,0x00,0xc0,0xff,0xff,0xc0,0xff,0xff,0xc0,
    0x00,0x3e,0x00,0xfe,0x01,0xe0,0x01,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,
    0x03,0xc0,0x03,0xc0,0x03,0x80,0x07,0x80,0x0f,0x00,0xfe,0x00,0xfe,0x00,0x0f,0x00,0x07,0x80,0x03,0x80,0x03,0xc0,0x03,0xc0,
    0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x01,0xc0,0x01,0xe0,0x00,0xfe,
    0x00,0x3e,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,
    0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xe0,0xfc,0x00,0xff,0x00,0x0f,0x80,
    0x07,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0xc0,
    0x03,0xc0,0x01,0xe0,0x00,0x7e,0x00,0x7e,0x01,0xe0,0x03,0xc0,0x03,0xc0,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,
    0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x07,0x80,0x0f,0x00,0xff,0x00,0xfc,0x00,0x07,0xc0,0x00,0x80,
    0x3f,0xf8,0x01,0x80,0x7f,0xff,0x07,0x80,0xf0,0x3f,0xff,0x80,0xc0,0x07,0xfe,0x00,0x00,0x01,0xf8,0x00,0xff,0xff,0xff,0xfe,
    0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,
    0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,
    0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,
    0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,
    0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,
    0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,
    0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,
    0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,
};

constexpr GlyphRecord k_serif_display_glyphs[] = {
    {0x0020, 13, 0, 0, 0, 0, 0},
    {0x0021, 16, 5, 9, 6, 29, 0},
    {0x0022, 18, 4, 9, 10, 11, 29},
    {0x0023, 34, 3, 9, 27, 29, 51},
    {0x0024, 25, 3, 8, 19, 35, 167},
    {0x0025, 38, 2, 8, 34, 30, 272},
    {0x0026, 36, 3, 8, 31, 30, 422},
    {0x0027, 11, 4, 9, 3, 11, 542},
    {0x0028, 16, 3, 8, 10, 37, 553},
    {0x0029, 16, 3, 8, 9, 37, 627},
    {0x002a, 20, 1, 8, 18, 18, 701},
    {0x002b, 34, 4, 13, 25, 25, 755},
    {0x002c, 13, 2, 34, 7, 10, 855},
    {0x002d, 14, 2, 26, 10, 3, 865},
    {0x002e, 13, 4, 33, 5, 5, 871},
    {0x002f, 13, 0, 8, 13, 33, 876},
    {0x0030, 25, 3, 8, 20, 30, 942},
    {0x0031, 25, 5, 8, 15, 30, 1032},
    {0x0032, 25, 3, 8, 19, 30, 1092},
    {0x0033, 25, 3, 8, 19, 30, 1182},
    {0x0034, 25, 1, 8, 22, 30, 1272},
    {0x0035, 25, 3, 9, 19, 29, 1362},
    {0x0036, 25, 3, 8, 20, 30, 1449},
    {0x0037, 25, 3, 9, 20, 29, 1539},
    {0x0038, 25, 3, 8, 20, 30, 1626},
    {0x0039, 25, 3, 8, 20, 30, 1716},
    {0x003a, 13, 4, 21, 5, 17, 1806},
    {0x003b, 13, 2, 21, 7, 23, 1823},
    {0x003c, 34, 4, 15, 25, 21, 1846},
    {0x003d, 34, 4, 20, 25, 11, 1930},
    {0x003e, 34, 4, 15, 25, 21, 1974},
    {0x003f, 21, 3, 8, 16, 30, 2058},
    {0x0040, 40, 3, 10, 34, 35, 2118},
    {0x0041, 29, 0, 9, 29, 29, 2293},
    {0x0042, 29, 2, 9, 25, 29, 2409},
    {0x0043, 31, 2, 8, 26, 30, 2525},
    {0x0044, 32, 2, 9, 28, 29, 2645},
    {0x0045, 29, 2, 9, 24, 29, 2761},
    {0x0046, 28, 2, 9, 24, 29, 2848},
    {0x0047, 32, 2, 8, 27, 30, 2935},
    {0x0048, 35, 2, 9, 31, 29, 3055},
    {0x0049, 16, 2, 9, 12, 29, 3171},
    {0x004a, 16, -3, 9, 17, 37, 3229},
    {0x004b, 30, 2, 9, 28, 29, 3340},
    {0x004c, 27, 2, 9, 24, 29, 3456},
    {0x004d, 41, 2, 9, 37, 29, 3543},
    {0x004e, 35, 2, 9, 31, 30, 3688},
    {0x004f, 33, 2, 8, 29, 30, 3808},
    {0x0050, 27, 2, 9, 23, 29, 3928},
    {0x0051, 33, 2, 8, 29, 36, 4015},
    {0x0052, 30, 2, 9, 29, 29, 4159},
    {0x0053, 27, 3, 8, 21, 30, 4275},
    {0x0054, 27, 0, 9, 26, 29, 4365},
    {0x0055, 34, 2, 9, 30, 29, 4481},
    {0x0056, 29, 0, 9, 29, 29, 4597},
    {0x0057, 41, 0, 9, 41, 29, 4713},
    {0x0058, 28, 0, 9, 28, 29, 4887},
    {0x0059, 26, 0, 9, 27, 29, 5003},
    {0x005a, 28, 2, 9, 24, 29, 5119},
    {0x005b, 16, 3, 8, 10, 36, 5206},
    {0x005c, 13, 0, 9, 13, 33, 5278},
    {0x005d, 16, 3, 8, 9, 36, 5344},
    {0x005e, 34, 5, 9, 24, 11, 5416},
    {0x005f, 20, 0, 45, 20, 2, 5449},
    {0x0060, 20, 4, 6, 8, 7, 5455},
    {0x0061, 24, 2, 16, 21, 22, 5462},
    {0x0062, 26, 1, 8, 23, 30, 5528},
    {0x0063, 22, 2, 16, 18, 22, 5618},
    {0x0064, 26, 2, 8, 22, 30, 5684},
    {0x0065, 24, 2, 16, 20, 22, 5774},
    {0x0066, 15, 1, 8, 16, 30, 5840},
    {0x0067, 26, 2, 16, 22, 30, 5900},
    {0x0068, 26, 1, 8, 24, 30, 5990},
    {0x0069, 13, 1, 9, 11, 29, 6080},
    {0x006a, 12, -4, 9, 12, 37, 6138},
    {0x006b, 24, 1, 8, 24, 30, 6212},
    {0x006c, 13, 1, 8, 11, 30, 6302},
    {0x006d, 38, 1, 16, 36, 22, 6362},
    {0x006e, 26, 1, 16, 24, 22, 6472},
    {0x006f, 24, 2, 16, 20, 22, 6538},
    {0x0070, 26, 1, 16, 23, 30, 6604},
    {0x0071, 26, 2, 16, 22, 30, 6694},
    {0x0072, 19, 1, 16, 18, 22, 6784},
    {0x0073, 21, 2, 16, 16, 22, 6850},
    {0x0074, 16, 1, 11, 15, 27, 6894},
    {0x0075, 26, 1, 17, 23, 21, 6948},
    {0x0076, 23, 0, 17, 22, 21, 7011},
    {0x0077, 34, 1, 17, 33, 21, 7074},
    {0x0078, 23, 0, 17, 22, 21, 7179},
    {0x0079, 23, 0, 17, 22, 29, 7242},
    {0x007a, 21, 2, 17, 18, 21, 7329},
    {0x007b, 25, 5, 8, 15, 37, 7392},
    {0x007c, 13, 5, 7, 3, 40, 7466},
    {0x007d, 25, 5, 8, 15, 37, 7506},
    {0x007e, 34, 4, 22, 25, 6, 7580},
    {0x2588, 31, 0, 0, 31, 48, 7604},
};

constexpr unsigned char k_ornate_bits[] = {
    0xfe,0x00,0xfe,0x00,0xee,0x00,0x76,0xc0,0x66,0xc0,0x6e,0xc0,0x6e,0xc0,0x7c,0xc0,0x7d,0xc0,0x7d,0xc0,0x3d,0x80,0x3d,0x80,
    0x3d,0x80,0x3d,0x80,0x39,0x80,0x3b,0x80,0x3b,0x80,0x3b,0x00,0x3b,0x00,0x3b,0x00,0x03,0x00,0x01,0x00,0x3c,0x00,0x7e,0x00,
    0xfe,0x00,0xe6,0x80,0xfe,0xc0,0x7e,0xc0,0x3c,0xc0,0x01,0xc0,0x0f,0xc0,0x07,0x80,0xf0,0xf8,0xf0,0xf8,0xf0,0xd8,0xf6,0xdb,
    0xf6,0xdb,0xf6,0xfb,0xf6,0xdb,0xf6,0xdb,0xf6,0xdb,0xf6,0xfb,0xf6,0xfb,0x06,0x03,0x1e,0x1f,0x1e,0x1f,0x00,0x3e,0x0f,0x00,
    0x00,0x3c,0x0f,0x00,0x00,0x3c,0x1f,0x00,0x00,0x3d,0xde,0x60,0x00,0x7d,0x9e,0xe0,0x00,0x7d,0x9e,0xe0,0x00,0x79,0xbe,0xc0,
    0x00,0x78,0x3e,0x00,0x3f,0xff,0xff,0xf0,0x3f,0xff,0xf7,0xf0,0x3f,0xbf,0xff,0xf0,0x3f,0xff,0xff,0xf6,0x01,0xf0,0x78,0x06,
    0x05,0xe6,0x7b,0xfe,0x05,0xee,0xfb,0xfe,0x01,0xee,0xf3,0x00,0x03,0xe0,0xf0,0x00,0xff,0xff,0xff,0xc0,0xff,0x7f,0xff,0xc0,
    0xff,0xff,0xff,0xc0,0xff,0xff,0xff,0xd8,0x07,0x81,0xe0,0x18,0x17,0xbb,0xef,0xf8,0x07,0xbb,0xcf,0xf8,0x0f,0xb3,0xdc,0x00,
    0x0f,0x33,0xdc,0x00,0x0f,0x77,0xd8,0x00,0x0f,0x77,0x98,0x00,0x1f,0x67,0xb8,0x00,0x00,0x60,0x38,0x00,0x01,0xe0,0xf0,0x00,
    0x03,0xe0,0xf0,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x6c,0x00,0x00,0x60,0x00,0x07,0xfe,0x00,0x1f,0xff,
    0xc0,0x3e,0x67,0xe0,0x7c,0x61,0xe0,0xf9,0x6c,0xe8,0xfb,0x6c,0xec,0xd9,0x6c,0x6c,0xdc,0x6c,0x0c,0xdf,0xe4,0x1c,0xef,0xf0,
    0x0c,0xf4,0x7e,0x00,0x78,0xbf,0x80,0x3f,0x17,0xc0,0x1f,0xe3,0xe0,0x03,0xfc,0xf0,0x00,0xff,0xf0,0x02,0x6f,0xb4,0x00,0x63,
    0xb6,0xc0,0x69,0xf6,0xe0,0x6d,0xf6,0xe0,0x69,0xf6,0xf0,0x63,0xe6,0xf8,0x67,0xee,0x7f,0xff,0x8e,0x07,0xfe,0x3c,0x10,0x60,
    0xfc,0x0f,0x6f,0xf0,0x00,0x6f,0xc0,0x00,0x6c,0x00,0x00,0x6c,0x00,0x00,0x0c,0x00,0x00,0x0c,0x00,0x00,0x0c,0x00,0x0f,0xe0,
    0x00,0x78,0x00,0x1f,0xf8,0x00,0x70,0x00,0x3c,0x7c,0x00,0xe0,0x00,0x7d,0x7c,0x01,0xef,0x00,0xfd,0x3e,0x01,0xce,0x00,0xf9,
    0xbe,0x83,0x9c,0x00,0xdb,0xb6,0x87,0xbc,0x00,0xdb,0xbe,0xc7,0x38,0x00,0xdb,0x36,0xcf,0x70,0x00,0xfb,0x36,0xce,0x70,0x00,
    0xf9,0x3e,0x9c,0xe0,0x00,0x7d,0x3e,0xbd,0xe0,0x00,0x7d,0x7c,0x39,0xc0,0x00,0x3c,0x7d,0x7b,0x00,0x00,0x1f,0xf8,0x70,0x7f,
    0x00,0x0f,0xe0,0xe1,0xff,0x80,0x00,0x0d,0xeb,0xe3,0xc0,0x03,0xf9,0xc3,0xeb,0xe0,0x01,0xfb,0xd7,0xcb,0xe0,0x00,0x03,0x97,
    0xd9,0xf0,0x00,0x07,0x37,0xdd,0xf4,0x00,0x0f,0x76,0xd9,0xb4,0x00,0x0e,0x76,0xd9,0xf6,0x00,0x1e,0xe6,0xd9,0xf6,0x00,0x1c,
    0xe7,0xd9,0xf6,0x00,0x39,0xc7,0xcb,0xe6,0x00,0x7b,0xc3,0xeb,0xee,0x00,0x73,0x83,0xe3,0xce,0x00,0xe7,0x01,0xff,0x9c,0x00,
    0xef,0x00,0x7f,0x3c,0x00,0x0e,0x00,0x00,0x78,0x00,0x1c,0x00,0x3f,0xf0,0x00,0x1c,0x00,0x0f,0xe0,0x00,0x3f,0xf0,0x00,0x00,
    0x00,0xff,0xfe,0x00,0x00,0x03,0xf8,0x3e,0x00,0x00,0x03,0xf3,0x9e,0x00,0x00,0x07,0x67,0xde,0xc0,0x00,0x07,0x6f,0x0e,0xc0,
    0x00,0x06,0xe6,0x0e,0xc0,0x00,0x07,0x74,0x00,0xc0,0x00,0x07,0x70,0x01,0xc0,0x00,0x07,0x78,0x01,0xc0,0x00,0x03,0xbc,0x00,
    0x00,0x00,0x03,0x1e,0x00,0x00,0x00,0x07,0xff,0x01,0xff,0x80,0x1f,0xf7,0x81,0xff,0x80,0x3f,0x3b,0xc0,0x1c,0x00,0x7e,0x3d,
    0xe0,0x19,0xf0,0x76,0x9e,0xf0,0x3b,0xf0,0xe6,0xcf,0x78,0x3b,0x80,0xee,0xc7,0xbc,0x3b,0x00,0xd6,0xc3,0xde,0x73,0x00,0xe6,
    0xc1,0xef,0x77,0x00,0xc6,0xc0,0xf7,0xe7,0x00,0xce,0x40,0x7b,0xce,0x00,0xf7,0x40,0x39,0xce,0x00,0xf7,0x00,0x1a,0xe4,0x00,
    0x7f,0x80,0x1f,0xf0,0x00,0x3f,0xe0,0x7f,0xf8,0x00,0x1f,0xff,0xfb,0xfc,0x00,0x07,0xff,0xe1,0xff,0x80,0x01,0xff,0x0c,0xff,
    0x80,0x00,0x00,0x7e,0x00,0x00,0x00,0xff,0xfc,0x3f,0xf0,0x00,0x3f,0xe0,0x1f,0xf0,0xf0,0xf0,0xf0,0xf6,0xf6,0xf6,0xf6,0xf6,
    0xf6,0xf6,0xf6,0x06,0x1e,0x1e,0x00,0x08,0x00,0x38,0x00,0xf0,0x01,0xe1,0x07,0xc7,0x0f,0x9e,0x0f,0xbc,0x1f,0xb8,0x3f,0x30,
    0x3b,0x70,0x77,0x70,0x77,0x60,0x6e,0x60,0xf6,0xe0,0xe6,0xe0,0xc6,0xc0,0xce,0xc0,0xd6,0xc0,0xe6,0xc0,0xc6,0xc0,0xce,0xc0,
    0xd6,0xc0,0xe6,0xc0,0xe6,0xc0,0x6e,0x40,0x77,0x40,0x77,0x40,0x3f,0x40,0x3b,0x60,0x1f,0x20,0x1f,0xa0,0x0f,0x80,0x07,0xc0,
    0x03,0xe0,0x00,0xf0,0x00,0x38,0x00,0x08,0x00,0x02,0x00,0x07,0x00,0x01,0x80,0x00,0xe0,0x00,0x78,0x00,0x3c,0x00,0x1e,0x00,
    0x1f,0x80,0x0f,0x80,0x0f,0xc0,0x07,0xe0,0x06,0xe0,0x06,0xf0,0x07,0x74,0x07,0x30,0x03,0x7a,0x03,0xba,0x03,0x1a,0x03,0x3b,
    0x03,0x5b,0x03,0x9b,0x03,0x1b,0x03,0x3b,0x03,0x5b,0x03,0xbb,0x03,0x3b,0x07,0x33,0x07,0x77,0x06,0xf7,0x07,0xe6,0x07,0xee,
    0x0f,0xce,0x0f,0x9c,0x1f,0xbc,0x1f,0x38,0x3c,0x70,0x79,0xf0,0xe3,0xe0,0x87,0x80,0x0f,0x00,0x1c,0x00,0x10,0x00,0x00,0xe0,
    0x00,0x00,0xe0,0x00,0x00,0xe0,0x00,0x60,0xec,0x80,0x70,0xe9,0xc0,0xf8,0xe3,0xe0,0x7e,0xef,0xc0,0x0f,0xfe,0x18,0x03,0xf8,
    0x7c,0x03,0xf8,0xf8,0x0f,0xfe,0x00,0x7e,0xef,0xc0,0xf8,0xe7,0xe0,0x70,0xe1,0xc0,0x66,0xec,0x98,0x0e,0xec,0x3c,0x0e,0xec,
    0x38,0x0c,0xec,0x10,0x00,0x0c,0x00,0x00,0x1c,0x00,0x00,0x1c,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,0x00,0x00,0x1e,0x00,
    0x00,0x00,0x1e,0xc0,0x00,0x00,0x1e,0xc0,0x00,0x00,0x1e,0xc0,0x00,0x00,0x1e,0xc0,0x00,0x00,0x1e,0xc0,0x00,0x00,0x1e,0xc0,
    0x00,0x00,0x1e,0x00,0x00,0xff,0xff,0xff,0x80,0xff,0xff,0xff,0x80,0xd1,0x11,0x11,0x80,0xff,0xff,0xff,0xb0,0xff,0xff,0xff,
    0xb0,0x00,0x1e,0x00,0x30,0x1f,0xde,0xff,0xf0,0x1f,0xde,0xff,0xf0,0x00,0x1e,0xc0,0x00,0x00,0x1e,0xc0,0x00,0x00,0x1e,0xc0,
    0x00,0x00,0x1e,0xc0,0x00,0x00,0x1e,0xc0,0x00,0x00,0x1e,0xc0,0x00,0x00,0x1e,0xc0,0x00,0x00,0x00,0xc0,0x00,0x00,0x03,0xc0,
    0x00,0x00,0x03,0xc0,0x00,0x1f,0x80,0x1f,0x80,0x1d,0x80,0x1b,0xb0,0x1b,0xb0,0x1f,0x30,0x3f,0x70,0x3e,0x70,0x7e,0xe0,0xfc,
    0xe0,0xf9,0xc0,0x73,0xc0,0x47,0x80,0x1f,0x00,0x0e,0x00,0x08,0x00,0xff,0xf0,0xff,0xf0,0xd1,0x30,0xff,0xf6,0xff,0xf6,0x00,
    0x06,0x1f,0xfe,0x1f,0xfe,0x3c,0x00,0x7e,0x00,0xff,0x00,0xf7,0x00,0xff,0x40,0x7e,0x60,0x3c,0xe0,0x01,0xe0,0x0f,0xc0,0x07,
    0x80,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x7c,0x00,0x00,0x7d,0x80,0x00,0x79,0x80,0x00,0x7b,0x80,0x00,0xfb,0x80,0x00,0xf3,
    0x00,0x00,0xf7,0x00,0x01,0xf7,0x00,0x01,0xe6,0x00,0x01,0xee,0x00,0x03,0xee,0x00,0x03,0xcc,0x00,0x03,0xdc,0x00,0x07,0xdc,
    0x00,0x07,0x98,0x00,0x07,0xb8,0x00,0x07,0xb8,0x00,0x0f,0xb0,0x00,0x0f,0x30,0x00,0x0f,0x70,0x00,0x1f,0x70,0x00,0x1e,0x60,
    0x00,0x1e,0xe0,0x00,0x3e,0xe0,0x00,0x3c,0xc0,0x00,0x3d,0xc0,0x00,0x7d,0xc0,0x00,0x79,0x80,0x00,0x7b,0x80,0x00,0xfb,0x80,
    0x00,0xf3,0x00,0x00,0x07,0x00,0x00,0x1f,0x00,0x00,0x1e,0x00,0x00,0x00,0xff,0x00,0x00,0x03,0xff,0xc0,0x00,0x0f,0xc3,0xe0,
    0x00,0x1f,0x99,0xf0,0x00,0x1f,0xbd,0xf8,0x00,0x3f,0x39,0xfc,0x00,0x7b,0x70,0xdc,0x00,0x73,0x70,0xde,0x00,0x63,0x60,0xee,
    0x80,0xe7,0x60,0xc6,0x00,0xeb,0x60,0xcf,0x40,0xd3,0x60,0xd7,0x40,0xe3,0x60,0xe3,0x40,0xc7,0x60,0xc7,0x60,0xcb,0x60,0xcb,
    0x60,0xd3,0x60,0xd3,0x60,0xe3,0x60,0xe3,0x60,0xc7,0x60,0xc7,0x60,0xcb,0x60,0xcf,0x60,0xf3,0x60,0xd7,0x60,0xe3,0x60,0xe6,
    0x60,0x67,0x60,0xce,0xe0,0x7b,0x60,0xce,0xe0,0x7b,0x60,0xdc,0xc0,0x3b,0x21,0xfd,0xc0,0x1f,0xa1,0xf9,0xc0,0x1f,0x81,0xf3,
    0x80,0x0f,0xc3,0xe7,0x80,0x03,0xff,0xcf,0x00,0x00,0xff,0x1e,0x00,0x00,0x00,0x7c,0x00,0x00,0x7f,0xf8,0x00,0x00,0x1f,0xe0,
    0x00,0x03,0xf8,0x00,0x07,0xf8,0x00,0x1f,0x58,0x00,0x3f,0x9b,0x00,0xfb,0x1b,0x00,0xe3,0x3b,0x00,0xc3,0x5b,0x00,0x1b,0x9b,
    0x00,0x1b,0x1b,0x00,0x1b,0x3b,0x00,0x03,0x5b,0x00,0x03,0x9b,0x00,0x03,0x1b,0x00,0x03,0x3b,0x00,0x03,0x5b,0x00,0x03,0x9b,
    0x00,0x03,0x1b,0x00,0x03,0x3b,0x00,0x03,0x5b,0x00,0x03,0x9b,0x00,0x03,0x1b,0x00,0x03,0x3b,0x00,0x03,0x5b,0x00,0x03,0x9b,
    0x00,0x03,0x1b,0x00,0x03,0x3b,0x00,0x03,0x5b,0x00,0x03,0x98,0x00,0xff,0xff,0xe0,0xff,0xff,0xe0,0x00,0x00,0x00,0x1f,0xff,
    0xfc,0x1f,0xff,0xfc,0x1f,0xfc,0x00,0xff,0xff,0x80,0xf8,0x3f,0xc0,0xf3,0x9f,0xe0,0xe7,0xce,0xf0,0xef,0x06,0xf0,0xce,0x07,
    0x38,0x1c,0x06,0x3a,0x1c,0x06,0x5a,0x18,0x06,0x9b,0x00,0x07,0x3b,0x00,0x06,0x3b,0x00,0x06,0x73,0x00,0x0e,0xf7,0x00,0x0f,
    0xe7,0x00,0x0f,0xce,0x00,0x1f,0x9e,0x00,0x3f,0x3c,0x00,0x7e,0x78,0x00,0xf8,0xf0,0x01,0xf3,0xe0,0x03,0xc7,0xc0,0x0f,0x9f,
    0x18,0x1e,0x3e,0x18,0x7c,0x00,0x18,0xff,0xff,0xfb,0xff,0xff,0xfb,0xe2,0x22,0x3b,0xff,0xff,0xfb,0xff,0xff,0xfb,0x00,0x00,
    0x03,0x1f,0xff,0xff,0x1f,0xff,0xff,0x0f,0xfe,0x00,0x00,0xff,0xff,0x80,0x00,0xfc,0x1f,0xe0,0x00,0xf1,0xcf,0xf0,0x00,0xf7,
    0xe6,0x70,0x00,0xe7,0x86,0xb8,0x00,0xee,0x07,0x3a,0x00,0x0e,0x06,0x3a,0x00,0x1c,0x06,0x7b,0x00,0x1c,0x06,0xbb,0x00,0x00,
    0x07,0xf3,0x00,0x00,0x0f,0xf7,0x00,0x00,0x3f,0xc7,0x00,0x01,0xff,0x1e,0x00,0x01,0xff,0x8e,0x00,0x00,0x1f,0xe0,0x00,0x00,
    0x0f,0xf0,0x00,0x00,0x27,0xf8,0x00,0x00,0x03,0x3c,0x00,0x00,0x03,0x3c,0x00,0x00,0x03,0x4d,0x00,0x00,0x03,0x8d,0x80,0xc0,
    0x03,0x1d,0x80,0xc0,0x03,0x3d,0x80,0xe0,0x03,0x5d,0x80,0xe0,0x07,0xf9,0x80,0xf0,0x0f,0xfb,0x80,0xf8,0x1f,0xe3,0x80,0x7f,
    0xff,0xcf,0x00,0x07,0xfe,0x1f,0x00,0x10,0x00,0xfc,0x00,0x0f,0xff,0xf8,0x00,0x00,0xff,0xc0,0x00,0x00,0x0f,0xe0,0x00,0x00,
    0x1f,0xe0,0x00,0x00,0x3c,0xe0,0x00,0x00,0x39,0x6c,0x00,0x00,0x7e,0x6c,0x00,0x00,0xfc,0x6c,0x00,0x00,0xec,0xec,0x00,0x01,
    0xed,0x6c,0x00,0x01,0xce,0x6c,0x00,0x03,0x8c,0x6c,0x00,0x07,0xac,0xec,0x00,0x07,0x2d,0x6c,0x00,0x0f,0x6e,0x6c,0x00,0x1e,
    0x6c,0x6c,0x00,0x1c,0xec,0xec,0x00,0x3d,0xed,0x6c,0x00,0x39,0xce,0x6c,0x00,0x7b,0x8c,0x6c,0x00,0xf3,0x8c,0xec,0x00,0xe0,
    0x0d,0x60,0x00,0xff,0xfe,0x7f,0x00,0xff,0xfc,0x7f,0x00,0x00,0x0c,0xe0,0x00,0x1f,0xed,0x6f,0xe0,0x1f,0xee,0x6f,0xe0,0x00,
    0x0c,0x6c,0x00,0x00,0x0c,0xec,0x00,0x00,0x0d,0x60,0x00,0x01,0xff,0xff,0x00,0x01,0xff,0xff,0x00,0x00,0x00,0x00,0x00,0x00,
    0x3f,0xff,0xe0,0x00,0x3f,0xff,0xe0,0x3f,0xff,0xf0,0x00,0x3f,0xff,0xf0,0x00,0x32,0x22,0x30,0x00,0x3f,0xff,0xf6,0x00,0x3f,
    0xff,0xf6,0x00,0x30,0x00,0x06,0x00,0x37,0xff,0xfe,0x00,0x37,0xff,0xfe,0x00,0x34,0x00,0x00,0x00,0x31,0xfc,0x00,0x00,0x3f,
    0xff,0x80,0x00,0x3c,0x1f,0xc0,0x00,0x38,0x0f,0xe0,0x00,0x23,0xe7,0xf0,0x00,0x07,0x87,0x78,0x00,0x07,0x07,0x78,0x00,0x04,
    0x03,0x9c,0x00,0x00,0x03,0x1d,0x00,0x00,0x03,0x2d,0x00,0x00,0x03,0x4d,0x80,0x00,0x03,0x9d,0x80,0xe0,0x03,0x1d,0x80,0xe0,
    0x07,0x39,0x80,0xe0,0x07,0x7b,0x80,0xe4,0x06,0xf3,0x80,0xf0,0x0f,0xf7,0x00,0xfc,0x1f,0xc7,0x00,0x3f,0xff,0x9e,0x00,0x07,
    0xfc,0x3e,0x00,0x10,0x01,0xf8,0x00,0x07,0xff,0xf0,0x00,0x00,0xff,0x80,0x00,0x00,0x7f,0xe0,0x00,0x03,0xff,0xf8,0x00,0x07,
    0xe0,0xf8,0x00,0x0f,0x8e,0x78,0x00,0x1f,0x3f,0x3b,0x00,0x3f,0x7c,0x1b,0x00,0x7e,0x70,0x03,0x00,0x76,0xe0,0x07,0x00,0x66,
    0xe0,0x03,0x00,0xee,0x80,0x00,0x00,0xf6,0x3f,0x00,0x00,0xe7,0xff,0xe0,0x00,0xc7,0x87,0xf0,0x00,0xcb,0x83,0xf8,0x00,0xd3,
    0x3b,0xb8,0x00,0xe3,0x71,0xbc,0x00,0xc7,0x71,0xdd,0x00,0xcf,0x61,0x8c,0x00,0xd7,0x61,0x9e,0x80,0xe6,0x61,0xae,0x80,0xc6,
    0x61,0xce,0x80,0xef,0x61,0x8e,0xc0,0xf7,0x41,0x9c,0xc0,0x73,0x41,0xbd,0xc0,0x7f,0x61,0xdd,0xc0,0x3f,0x23,0xb9,0x80,0x1f,
    0xa3,0xfb,0x80,0x0f,0x87,0xf3,0x80,0x07,0xff,0xc7,0x00,0x00,0xff,0x1f,0x00,0x00,0x00,0x7e,0x00,0x00,0xff,0xf8,0x00,0x00,
    0x1f,0xe0,0x00,0xff,0xff,0xfc,0x00,0xff,0xff,0xfc,0x00,0xe2,0x22,0x2c,0x00,0xc4,0x44,0x5d,0x80,0xff,0xff,0xfd,0x80,0xff,
    0xff,0xf9,0x80,0xe0,0x00,0x7b,0x80,0xef,0xfe,0xf3,0x80,0xef,0xfc,0xf7,0x00,0xec,0x01,0xe7,0x00,0x0c,0x01,0xee,0x00,0x1c,
    0x03,0xce,0x00,0x1c,0x03,0xdc,0x00,0x00,0x07,0x9c,0x00,0x00,0x07,0xb8,0x00,0x00,0x0f,0x38,0x00,0x00,0x0f,0x70,0x00,0x00,
    0x1e,0x70,0x00,0x00,0x1e,0xe0,0x00,0x00,0x3c,0xe0,0x00,0x00,0x3d,0xc0,0x00,0x00,0x79,0xc0,0x00,0x00,0x7b,0x80,0x00,0x00,
    0xf3,0x80,0x00,0x00,0xf7,0x00,0x00,0x01,0xe7,0x00,0x00,0x01,0xee,0x00,0x00,0x03,0xce,0x00,0x00,0x03,0xdc,0x00,0x00,0x00,
    0x1c,0x00,0x00,0x00,0x78,0x00,0x00,0x00,0x78,0x00,0x00,0x01,0xff,0x80,0x00,0x07,0xff,0xe0,0x00,0x1f,0xc3,0xf8,0x00,0x3f,
    0x99,0xfc,0x00,0x3b,0xbd,0xbc,0x00,0x75,0xb9,0xcc,0x00,0x79,0xb1,0x8e,0x80,0x71,0xb1,0x9e,0x80,0x73,0xb1,0xae,0x80,0x75,
    0xb1,0xdc,0xc0,0x3d,0xb1,0xbd,0xc0,0x3f,0x91,0xf9,0xc0,0x0f,0xc3,0xf3,0x80,0x03,0xff,0xc7,0x80,0x07,0xff,0xe3,0x00,0x1f,
    0xc3,0xf8,0x00,0x3f,0x99,0xfc,0x00,0x7f,0x3d,0xde,0x00,0x7b,0x78,0xce,0x00,0xf3,0x70,0xd6,0x00,0xe3,0x60,0xe7,0x40,0xc7,
    0x60,0xc7,0x40,0xeb,0x60,0xcf,0x40,0xf3,0x60,0xd6,0x60,0x73,0x60,0xee,0xe0,0x7f,0x21,0xde,0xe0,0x3f,0x81,0xfc,0xc0,0x1f,
    0xc3,0xf9,0xc0,0x0f,0xff,0xe3,0xc0,0x01,0xff,0x8f,0x80,0x00,0x00,0x3f,0x00,0x01,0xff,0xfc,0x00,0x00,0x3f,0xf0,0x00,0x01,
    0xfe,0x00,0x00,0x07,0xff,0xc0,0x00,0x1f,0xc7,0xe0,0x00,0x3f,0x93,0xf0,0x00,0x3b,0xb9,0xf8,0x00,0x77,0x39,0xf8,0x00,0x7b,
    0x71,0x9c,0x00,0xf3,0x71,0x9c,0x00,0xe3,0x61,0xae,0x00,0xc7,0x61,0xce,0x80,0xcb,0x61,0x8e,0x80,0xf3,0x61,0x96,0xc0,0xe3,
    0x61,0xa6,0xc0,0x67,0x61,0xc6,0xc0,0x7b,0x21,0x8e,0xc0,0x7b,0xa1,0x96,0xc0,0x3f,0x83,0xa6,0xc0,0x1f,0xc7,0xc6,0xc0,0x0f,
    0xff,0xce,0xc0,0x03,0xf8,0xde,0xc0,0x00,0x00,0xee,0xc0,0x01,0xfe,0xdc,0xc0,0x00,0x7c,0xdd,0xc0,0x00,0x01,0xf9,0xc0,0x30,
    0x01,0xfb,0x80,0x38,0x03,0xf3,0x80,0x38,0x03,0xe7,0x00,0x3e,0x0f,0xcf,0x00,0x3f,0xff,0x9e,0x00,0x0f,0xfc,0x3c,0x00,0x00,
    0x01,0xf8,0x00,0x07,0xff,0xf0,0x00,0x01,0xff,0x80,0x00,0x38,0x00,0xfc,0x00,0xfe,0x00,0xde,0x00,0xfe,0x80,0xfc,0xc0,0x79,
    0xc0,0x03,0xc0,0x1f,0x80,0x0f,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x38,0x00,0xfc,0x00,0xfe,0x00,0xee,0x00,0xfe,0x80,0xfc,
    0xc0,0x39,0xc0,0x03,0xc0,0x1f,0x80,0x07,0x00,0x07,0x00,0x1f,0x80,0x1f,0xc0,0x1b,0xc0,0x1f,0xd0,0x1f,0x98,0x0f,0x38,0x00,
    0x78,0x03,0xf0,0x01,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0xc0,0x0f,0x80,0x0d,0x80,0x0d,0xb8,0x0f,0xb0,0x1f,
    0xb0,0x1f,0x30,0x3f,0x70,0x3e,0x70,0x7c,0xe0,0xfd,0xe0,0x71,0xc0,0x27,0x80,0x0f,0x80,0x0e,0x00,0x04,0x00,0x00,0x00,0x00,
    0x80,0x00,0x00,0x07,0x80,0x00,0x00,0x1f,0x80,0x00,0x00,0xff,0x90,0x00,0x07,0xff,0xb0,0x00,0x3f,0xfe,0x30,0x00,0xff,0xf0,
    0xf0,0x07,0xff,0xc7,0xf0,0x3f,0xfe,0x1f,0xc0,0xff,0xf0,0xfe,0x00,0xff,0x87,0xf8,0x00,0xd6,0x3f,0xc0,0x00,0xf7,0x86,0x00,
    0x00,0xff,0xf0,0x00,0x00,0x3f,0xfe,0x00,0x00,0x07,0xff,0x80,0x00,0x10,0xff,0xf0,0x00,0x06,0x3f,0xfe,0x00,0x00,0x87,0xff,
    0x80,0x00,0x10,0xff,0x80,0x00,0x06,0x1f,0x80,0x00,0x00,0xc7,0xb0,0x00,0x00,0x10,0xb0,0x00,0x00,0x02,0x30,0x00,0x00,0x00,
    0xf0,0x00,0x00,0x00,0x10,0xff,0xff,0xff,0x80,0xff,0xff,0xff,0x80,0xff,0xff,0xff,0x80,0xff,0xff,0xff,0xb0,0x00,0x00,0x00,
    0x30,0x1f,0xff,0xff,0xf0,0x1f,0xff,0xff,0xf0,0x00,0x00,0x00,0x00,0xff,0xff,0xff,0x80,0xff,0xff,0xff,0x80,0xff,0xff,0xff,
    0x80,0xff,0xff,0xff,0xb0,0x00,0x00,0x00,0x30,0x1f,0xff,0xff,0xf0,0x1f,0xff,0xff,0xf0,0xc0,0x00,0x00,0x00,0xf0,0x00,0x00,
    0x00,0xfe,0x00,0x00,0x00,0xff,0xc0,0x00,0x00,0xff,0xf0,0x00,0x00,0x3f,0xfe,0x00,0x00,0x07,0xff,0xc0,0x00,0x10,0xff,0xf8,
    0x00,0x06,0x1f,0xfe,0x00,0x00,0xc3,0xff,0x80,0x00,0x18,0xff,0x80,0x00,0x02,0x19,0x80,0x00,0x00,0x7f,0xb0,0x00,0x03,0xff,
    0xb0,0x00,0x1f,0xfe,0x30,0x00,0xff,0xf8,0xf0,0x07,0xff,0xc3,0xf0,0x3f,0xfe,0x1f,0xc0,0xff,0xf0,0xff,0x00,0xff,0xc7,0xf8,
    0x00,0xfe,0x1f,0xc0,0x00,0xf0,0xfe,0x00,0x00,0xc7,0xf8,0x00,0x00,0x1f,0xc0,0x00,0x00,0x1e,0x00,0x00,0x00,0x18,0x00,0x00,
    0x00,0x1f,0xf8,0x00,0xff,0xfe,0x00,0xf0,0x7f,0x00,0xe3,0x3f,0x80,0xef,0x9f,0xc0,0xce,0x19,0xc0,0xdc,0x19,0xc0,0x1c,0x1a,
    0xe8,0x18,0x1c,0xe8,0x18,0x18,0xe8,0x00,0x19,0xcc,0x00,0x1b,0xdc,0x00,0x3f,0xdc,0x00,0x7f,0x98,0x01,0xff,0x38,0x03,0xfc,
    0x78,0x03,0xf1,0xf0,0x03,0x87,0xe0,0x03,0xbf,0x80,0x03,0xbe,0x00,0x03,0xb0,0x00,0x00,0x30,0x00,0x00,0x30,0x00,0x03,0x90,
    0x00,0x0f,0xc0,0x00,0x0f,0xe0,0x00,0x0d,0xe0,0x00,0x0f,0xe8,0x00,0x0f,0xcc,0x00,0x03,0x9c,0x00,0x00,0x3c,0x00,0x01,0xf8,
    0x00,0x00,0x70,0x00,0x00,0x07,0xfc,0x00,0x00,0x00,0x3f,0xff,0x80,0x00,0x00,0xfc,0x03,0xe0,0x00,0x03,0xf0,0xf8,0x70,0x00,
    0x07,0xc7,0xff,0x1c,0x00,0x0f,0x9f,0x80,0x4e,0x00,0x1f,0x3e,0x00,0x06,0x00,0x1e,0x78,0x00,0x03,0x00,0x3c,0xe3,0xe3,0xc3,
    0x80,0x7d,0xcf,0xfb,0xc1,0x80,0x79,0x9f,0x1f,0xc1,0x80,0x7b,0x3e,0x4f,0xd8,0xd0,0xf3,0x7c,0xe7,0xd8,0xd0,0xf7,0x7d,0xe7,
    0xd8,0xd0,0xf7,0x79,0xc3,0xd8,0xd8,0xf6,0x7b,0x83,0xd8,0xd8,0xf6,0x7b,0x83,0xd8,0xd8,0xf6,0xfb,0x03,0xd8,0xd8,0xf6,0x7b,
    0x03,0xd9,0xd8,0xf6,0x7b,0x03,0xd9,0xd8,0xf6,0x79,0x03,0xd9,0x98,0xf6,0x7d,0x07,0xd3,0xb8,0xf2,0x7c,0x07,0xc7,0x38,0x7a,
    0x3e,0x0f,0xde,0x30,0x78,0x1f,0x1b,0xfc,0x70,0x7c,0x0f,0xf3,0xf8,0xe0,0x3c,0x03,0xe3,0xc3,0xc0,0x1e,0x00,0x00,0x1f,0x80,
    0x1f,0x01,0xfe,0x7f,0x00,0x0f,0x80,0x7c,0x08,0x00,0x07,0xc0,0x00,0x20,0x00,0x03,0xf0,0x00,0xf0,0x00,0x00,0xfc,0x03,0xe0,
    0x00,0x00,0x3f,0xff,0x84,0x00,0x00,0x07,0xfc,0x1e,0x00,0x00,0x10,0x00,0x7c,0x00,0x00,0x07,0xff,0xf0,0x00,0x00,0x00,0xff,
    0x80,0x00,0x00,0x07,0xc0,0x00,0x00,0x00,0x0f,0xc0,0x00,0x00,0x00,0x0e,0xe0,0x00,0x00,0x00,0x0c,0xe0,0x00,0x00,0x00,0x1d,
    0x70,0x00,0x00,0x00,0x1e,0x74,0x00,0x00,0x00,0x3e,0x70,0x00,0x00,0x00,0x3f,0xba,0x00,0x00,0x00,0x37,0x38,0x00,0x00,0x00,
    0x73,0xbc,0x00,0x00,0x00,0x63,0xdd,0x00,0x00,0x00,0xe1,0x8c,0x00,0x00,0x00,0xed,0xde,0x80,0x00,0x00,0xcd,0xee,0x00,0x00,
    0x01,0xdc,0xe7,0x00,0x00,0x01,0x9c,0xef,0x40,0x00,0x03,0x98,0x73,0x00,0x00,0x03,0x00,0x63,0xa0,0x00,0x03,0xff,0xf7,0x80,
    0x00,0x07,0xff,0xf9,0xc0,0x00,0x06,0x00,0x39,0xd0,0x00,0x0e,0x7f,0x9a,0xc0,0x00,0x0c,0xff,0xdc,0xe8,0x00,0x1c,0xc0,0x1c,
    0xe0,0x00,0x1d,0xc0,0x0f,0x70,0x00,0x19,0x80,0x0e,0x70,0x00,0x38,0x00,0x06,0x78,0x00,0xff,0x00,0x3f,0xfe,0x00,0xff,0x00,
    0x3f,0xfe,0x00,0x00,0x00,0x00,0x00,0x00,0x1f,0xe0,0x07,0xff,0xc0,0x1f,0xe0,0x07,0xff,0xc0,0xff,0xff,0xfc,0x00,0x00,0xff,
    0xff,0xff,0x00,0x00,0x0d,0x60,0x7f,0xc0,0x00,0x0e,0x6f,0x1f,0xe0,0x00,0x0c,0x6f,0xcc,0xe0,0x00,0x0c,0xec,0x0c,0xf0,0x00,
    0x0d,0x6c,0x0d,0x74,0x00,0x0e,0x6c,0x0e,0x34,0x00,0x0c,0x6c,0x0c,0x76,0x00,0x0c,0xec,0x0c,0xf6,0x00,0x0d,0x6c,0x0d,0xe6,
    0x00,0x0e,0x6c,0x1f,0xce,0x00,0x0c,0x60,0x7f,0x9e,0x00,0x0c,0xff,0xfe,0x3c,0x00,0x0d,0x7f,0xff,0x18,0x00,0x0e,0x60,0x7f,
    0xc0,0x00,0x0c,0x6f,0x1f,0xf0,0x00,0x0c,0xef,0xce,0xf8,0x00,0x0d,0x6c,0x07,0x38,0x00,0x0e,0x6c,0x06,0x38,0x00,0x0c,0x6c,
    0x06,0x5d,0x00,0x0c,0xec,0x06,0x9d,0x00,0x0d,0x6c,0x07,0x19,0x00,0x0e,0x6c,0x06,0x3b,0x80,0x0c,0x6c,0x0e,0x7b,0x80,0x0c,
    0xec,0x1f,0xf3,0x00,0x0d,0x60,0x3f,0xe7,0x00,0xff,0xff,0xff,0x8f,0x00,0xff,0xff,0xfc,0x3e,0x00,0x00,0x00,0x01,0xfc,0x00,
    0x1f,0xff,0xff,0xf0,0x00,0x1f,0xff,0xff,0x80,0x00,0x00,0x1f,0xf0,0x00,0x00,0xff,0xfe,0x00,0x03,0xfc,0x0f,0xc0,0x07,0xf1,
    0xe7,0xe0,0x0f,0xe7,0xf3,0xe0,0x1f,0xcf,0x81,0xe8,0x3d,0x9e,0x00,0xec,0x79,0xbc,0x00,0xec,0x73,0xb8,0x00,0xec,0x67,0xb0,
    0x00,0x0c,0xeb,0x30,0x00,0x1c,0xf3,0x70,0x00,0x1c,0xe3,0x70,0x00,0x00,0xc7,0x60,0x00,0x00,0xcb,0x60,0x00,0x00,0xd3,0x60,
    0x00,0x00,0xe3,0x60,0x00,0x00,0xc7,0x60,0x00,0x00,0xeb,0x60,0x00,0x00,0xf3,0x20,0x00,0x00,0x63,0xa0,0x00,0x00,0x77,0xa0,
    0x00,0xf0,0x79,0xa0,0x01,0xe0,0x3d,0x90,0x01,0xe0,0x1f,0xc0,0x01,0xce,0x0f,0xe0,0x03,0xdc,0x07,0xf0,0x07,0x9c,0x03,0xfc,
    0x1f,0x38,0x00,0xff,0xfc,0x78,0x00,0x1f,0xf0,0xf0,0x00,0x40,0x03,0xe0,0x00,0x1f,0xff,0x80,0x00,0x03,0xfe,0x00,0xff,0xff,
    0xf0,0x00,0x00,0xff,0xff,0xfe,0x00,0x00,0x0d,0x60,0x7f,0x80,0x00,0x0e,0x6f,0x1f,0xe0,0x00,0x0c,0x6f,0xcf,0xf0,0x00,0x0c,
    0xec,0x07,0xf0,0x00,0x0d,0x6c,0x07,0x38,0x00,0x0e,0x6c,0x03,0x3c,0x00,0x0c,0x6c,0x03,0x5c,0x00,0x0c,0xec,0x03,0x8c,0x00,
    0x0d,0x6c,0x03,0x9e,0x80,0x0e,0x6c,0x01,0xae,0x80,0x0c,0x6c,0x01,0xc6,0x80,0x0c,0xec,0x01,0x8e,0xc0,0x0d,0x6c,0x01,0x96,
    0xc0,0x0e,0x6c,0x01,0xa6,0xc0,0x0c,0x6c,0x01,0xc6,0xc0,0x0c,0xec,0x01,0x8e,0xc0,0x0d,0x6c,0x03,0x9e,0xc0,0x0e,0x6c,0x03,
    0xac,0xc0,0x0c,0x6c,0x03,0x5d,0xc0,0x0c,0xec,0x03,0xbd,0xc0,0x0d,0x6c,0x07,0x39,0x80,0x0e,0x6c,0x07,0x73,0x80,0x0c,0x6c,
    0x0f,0xf7,0x80,0x0c,0xec,0x1f,0xe7,0x00,0x0d,0x60,0x7f,0x8e,0x00,0xff,0xff,0xfe,0x3e,0x00,0xff,0xff,0xf0,0xfc,0x00,0x00,
    0x00,0x07,0xf0,0x00,0x1f,0xff,0xff,0xc0,0x00,0x1f,0xff,0xfe,0x00,0x00,0xff,0xff,0xff,0xc0,0xff,0xff,0xff,0xc0,0x0d,0x60,
    0x01,0xc0,0x0e,0x6f,0xfd,0xd8,0x0c,0x6f,0xfd,0xd8,0x0c,0xec,0x01,0xd8,0x0d,0x6c,0x00,0x18,0x0e,0x6c,0x00,0x38,0x0c,0x6c,
    0x00,0x38,0x0c,0xec,0x18,0x00,0x0d,0x6c,0x18,0x00,0x0e,0x6c,0x18,0x00,0x0c,0x60,0x1b,0x00,0x0c,0xff,0xfb,0x00,0x0d,0x7f,
    0xfb,0x00,0x0e,0x60,0x1b,0x00,0x0c,0x6f,0xdb,0x00,0x0c,0xef,0xdb,0x00,0x0d,0x6c,0x1b,0x00,0x0e,0x6c,0x03,0x00,0x0c,0x6c,
    0x03,0x00,0x0c,0xec,0x03,0x00,0x0d,0x6c,0x00,0x00,0x0e,0x6c,0x00,0xc0,0x0c,0x6c,0x00,0xc0,0x0c,0xec,0x00,0xc0,0x0d,0x60,
    0x00,0xd8,0xff,0xff,0xff,0xd8,0xff,0xff,0xff,0xd8,0x00,0x00,0x00,0x18,0x1f,0xff,0xff,0xf8,0x1f,0xff,0xff,0xf8,0xff,0xff,
    0xff,0xc0,0xff,0xff,0xff,0xc0,0x0d,0x60,0x01,0xc0,0x0e,0x6f,0xfd,0xd8,0x0c,0x6f,0xfd,0xd8,0x0c,0xec,0x01,0xd8,0x0d,0x6c,
    0x00,0x18,0x0e,0x6c,0x00,0x38,0x0c,0x6c,0x00,0x38,0x0c,0xec,0x18,0x00,0x0d,0x6c,0x18,0x00,0x0e,0x6c,0x18,0x00,0x0c,0x60,
    0x1b,0x00,0x0c,0xff,0xfb,0x00,0x0d,0x7f,0xfb,0x00,0x0e,0x60,0x1b,0x00,0x0c,0x6f,0xdb,0x00,0x0c,0xef,0xdb,0x00,0x0d,0x6c,
    0x1b,0x00,0x0e,0x6c,0x03,0x00,0x0c,0x6c,0x03,0x00,0x0c,0xec,0x03,0x00,0x0d,0x6c,0x00,0x00,0x0e,0x6c,0x00,0x00,0x0c,0x6c,
    0x00,0x00,0x0c,0xec,0x00,0x00,0x0d,0x60,0x00,0x00,0xff,0xff,0x00,0x00,0xff,0xff,0x00,0x00,0x00,0x00,0x00,0x00,0x1f,0xff,
    0xe0,0x00,0x1f,0xff,0xe0,0x00,0x00,0x1f,0xf8,0x00,0x00,0xff,0xff,0x00,0x03,0xfc,0x0f,0xe0,0x07,0xf1,0xe3,0xf0,0x0f,0xe7,
    0xf9,0xf0,0x1f,0xcf,0x80,0xf4,0x3d,0x9e,0x00,0x76,0x79,0xbc,0x00,0x76,0x73,0xb8,0x00,0x76,0x67,0xb0,0x00,0x06,0xeb,0x30,
    0x00,0x0e,0xf3,0x70,0x00,0x0e,0xe3,0x70,0x00,0x00,0xc7,0x60,0x00,0x00,0xcb,0x60,0x00,0x00,0xd3,0x60,0x00,0x00,0xe3,0x60,
    0x3f,0xf8,0xc7,0x60,0x3f,0xf8,0xeb,0x60,0x03,0x98,0xf3,0x20,0x03,0x1b,0x63,0xa0,0x03,0x3b,0x77,0xa0,0x03,0x5b,0x79,0xa0,
    0x03,0x9b,0x39,0x90,0x03,0x1b,0x1f,0xc0,0x03,0x3b,0x1f,0xe0,0x03,0x7b,0x07,0xf0,0x07,0xfb,0x03,0xfc,0x1f,0xf3,0x00,0xff,
    0xff,0x87,0x00,0x1f,0xf8,0x3f,0x00,0x40,0x03,0xfe,0x00,0x1f,0xff,0xf0,0x00,0x03,0xff,0x00,0xff,0xfe,0x1f,0xff,0xc0,0xff,
    0xfe,0x1f,0xff,0xc0,0x0d,0x60,0x01,0x9c,0x00,0x0e,0x6f,0xc1,0xad,0xf8,0x0c,0x6f,0xc1,0xcd,0xf8,0x0c,0xec,0x01,0x8d,0x80,
    0x0d,0x6c,0x01,0x9d,0x80,0x0e,0x6c,0x01,0xad,0x80,0x0c,0x6c,0x01,0xcd,0x80,0x0c,0xec,0x01,0x8d,0x80,0x0d,0x6c,0x01,0x9d,
    0x80,0x0e,0x6c,0x01,0xad,0x80,0x0c,0x60,0x01,0xcd,0x80,0x0c,0xff,0xff,0x8d,0x80,0x0d,0x7f,0xff,0x9d,0x80,0x0e,0x60,0x01,
    0xad,0x80,0x0c,0x6f,0xfd,0xcd,0x80,0x0c,0xef,0xfd,0x8d,0x80,0x0d,0x6c,0x01,0x9d,0x80,0x0e,0x6c,0x01,0xad,0x80,0x0c,0x6c,
    0x01,0xcd,0x80,0x0c,0xec,0x01,0x8d,0x80,0x0d,0x6c,0x01,0x9d,0x80,0x0e,0x6c,0x01,0xad,0x80,0x0c,0x6c,0x01,0xcd,0x80,0x0c,
    0xec,0x01,0x8d,0x80,0x0d,0x60,0x01,0x9c,0x00,0xff,0xfe,0x1f,0xff,0xc0,0xff,0xfe,0x1f,0xff,0xc0,0x00,0x00,0x00,0x00,0x00,
    0x1f,0xff,0xc3,0xff,0xf8,0x1f,0xff,0xc3,0xff,0xf8,0xff,0xfe,0x00,0xff,0xfe,0x00,0x0d,0x60,0x00,0x0e,0x6f,0xc0,0x0c,0x6f,
    0xc0,0x0c,0xec,0x00,0x0d,0x6c,0x00,0x0e,0x6c,0x00,0x0c,0x6c,0x00,0x0c,0xec,0x00,0x0d,0x6c,0x00,0x0e,0x6c,0x00,0x0c,0x6c,
    0x00,0x0c,0xec,0x00,0x0d,0x6c,0x00,0x0e,0x6c,0x00,0x0c,0x6c,0x00,0x0c,0xec,0x00,0x0d,0x6c,0x00,0x0e,0x6c,0x00,0x0c,0x6c,
    0x00,0x0c,0xec,0x00,0x0d,0x6c,0x00,0x0e,0x6c,0x00,0x0c,0x6c,0x00,0x0c,0xec,0x00,0x0d,0x60,0x00,0xff,0xfe,0x00,0xff,0xfe,
    0x00,0x00,0x00,0x00,0x1f,0xff,0xc0,0x1f,0xff,0xc0,0x07,0xff,0xf0,0x07,0xff,0xf0,0x00,0x69,0x80,0x00,0x71,0xbe,0x00,0x63,
    0xbe,0x00,0x65,0xb0,0x00,0x69,0xb0,0x00,0x71,0xb0,0x00,0x63,0xb0,0x00,0x65,0xb0,0x00,0x69,0xb0,0x00,0x71,0xb0,0x00,0x63,
    0xb0,0x00,0x65,0xb0,0x00,0x69,0xb0,0x00,0x71,0xb0,0x00,0x63,0xb0,0x00,0x65,0xb0,0x00,0x69,0xb0,0x00,0x71,0xb0,0x00,0x63,
    0xb0,0x00,0x65,0xb0,0x00,0x69,0xb0,0x00,0x71,0xb0,0x00,0x63,0xb0,0x00,0x65,0xb0,0x00,0x69,0xb0,0x00,0x71,0xb0,0x00,0x63,
    0xb0,0x00,0x67,0xb0,0x00,0x6b,0x30,0xe0,0x77,0x70,0xe0,0x67,0x70,0xe0,0xfe,0x60,0xf1,0xfe,0xe0,0xff,0xf8,0xe0,0x3f,0xe3,
    0xc0,0x00,0x0f,0xc0,0x1f,0xff,0x00,0xff,0xfe,0x0f,0xfe,0x00,0xff,0xfe,0x0f,0xfe,0x00,0x0d,0x60,0x01,0xe0,0x00,0x0e,0x6f,
    0xc3,0xcf,0xc0,0x0c,0x6f,0xc7,0x9f,0xc0,0x0c,0xec,0x0e,0x3c,0x00,0x0d,0x6c,0x3c,0x78,0x00,0x0e,0x6c,0x78,0xf0,0x00,0x0c,
    0x6c,0xf1,0xc0,0x00,0x0c,0xe9,0xe7,0x80,0x00,0x0d,0x63,0xcf,0x00,0x00,0x0e,0x67,0x9e,0x00,0x00,0x0c,0x7f,0xcc,0x00,0x00,
    0x0c,0xff,0xe0,0x00,0x00,0x0d,0x7f,0xf0,0x00,0x00,0x0e,0x6e,0x78,0x00,0x00,0x0c,0x67,0x7c,0x00,0x00,0x0c,0xe7,0x9e,0x00,
    0x00,0x0d,0x63,0xde,0x00,0x00,0x0e,0x69,0xe7,0x00,0x00,0x0c,0x6c,0xf7,0x80,0x00,0x0c,0xec,0x7b,0xc0,0x00,0x0d,0x6c,0x3d,
    0xe0,0x00,0x0e,0x6c,0x1e,0xf0,0x00,0x0c,0x6c,0x0f,0x78,0x00,0x0c,0xec,0x07,0xbc,0x00,0x0d,0x60,0x03,0xde,0x00,0xff,0xfe,
    0x01,0xff,0xc0,0xff,0xfe,0x00,0xff,0xc0,0x00,0x00,0x00,0x00,0x00,0x1f,0xff,0xc0,0x3f,0xf8,0x1f,0xff,0xc0,0x1f,0xf8,0xff,
    0xfe,0x00,0x00,0xff,0xfe,0x00,0x00,0x0d,0x60,0x00,0x00,0x0e,0x6f,0xc0,0x00,0x0c,0x6f,0xc0,0x00,0x0c,0xec,0x00,0x00,0x0d,
    0x6c,0x00,0x00,0x0e,0x6c,0x00,0x00,0x0c,0x6c,0x00,0x00,0x0c,0xec,0x00,0x00,0x0d,0x6c,0x00,0x00,0x0e,0x6c,0x00,0x00,0x0c,
    0x6c,0x00,0x00,0x0c,0xec,0x00,0x00,0x0d,0x6c,0x00,0x00,0x0e,0x6c,0x00,0x00,0x0c,0x6c,0x00,0x00,0x0c,0xec,0x00,0x00,0x0d,
    0x6c,0x00,0x00,0x0e,0x6c,0x00,0x00,0x0c,0x6c,0x00,0x00,0x0c,0xec,0x00,0x00,0x0d,0x6c,0x01,0x80,0x0e,0x6c,0x01,0x80,0x0c,
    0x6c,0x01,0x80,0x0c,0xec,0x01,0xb0,0x0d,0x60,0x01,0xb0,0xff,0xff,0xff,0xb0,0xff,0xff,0xff,0xb0,0x00,0x00,0x00,0x30,0x1f,
    0xff,0xff,0xf0,0x1f,0xff,0xff,0xf0,0xff,0xf0,0x00,0x0f,0xff,0x00,0xff,0xf0,0x00,0x0f,0xff,0x00,0x19,0x38,0x00,0x1d,0x18,
    0x00,0x1f,0xb8,0x00,0x1e,0x3b,0xe0,0x1f,0xdc,0x00,0x3e,0x5b,0xe0,0x1d,0xdc,0x00,0x3e,0x9b,0x00,0x1d,0xde,0x00,0x77,0x1b,
    0x00,0x1c,0xee,0x80,0x76,0x3b,0x00,0x1c,0xe6,0x00,0x66,0x5b,0x00,0x1c,0xef,0x40,0xe6,0x9b,0x00,0x1c,0x77,0x00,0xc7,0x1b,
    0x00,0x1d,0x73,0x81,0xc6,0x3b,0x00,0x1d,0x3f,0x81,0xd6,0x5b,0x00,0x1d,0xb9,0xc3,0x96,0x9b,0x00,0x1d,0x99,0xc3,0xb7,0x1b,
    0x00,0x1d,0x9e,0xe7,0x36,0x3b,0x00,0x1d,0x9c,0xe7,0x76,0x5b,0x00,0x1d,0x8e,0xe6,0x76,0x9b,0x00,0x1d,0x8f,0x7e,0xe7,0x1b,
    0x00,0x1d,0x87,0x7c,0xe6,0x3b,0x00,0x1d,0x87,0x5c,0xc6,0x5b,0x00,0x1d,0x83,0x9d,0xc6,0x9b,0x00,0x1d,0x83,0xb9,0x87,0x1b,
    0x00,0x1d,0x83,0xfb,0x86,0x3b,0x00,0x1d,0x81,0xf3,0x86,0x5b,0x00,0x1d,0x80,0x07,0x06,0x9b,0x00,0x1c,0x00,0x7f,0x07,0x18,
    0x00,0xff,0xc0,0x3e,0x7f,0xff,0x00,0xff,0xc0,0x00,0x7f,0xff,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1f,0xf8,0x00,0x0f,0xff,
    0xe0,0x1f,0xf8,0x00,0x0f,0xff,0xe0,0xff,0x80,0x01,0xff,0x80,0xff,0xc0,0x01,0xff,0x80,0x19,0xe0,0x00,0x38,0x00,0x1a,0xf0,
    0x00,0x3b,0xf0,0x1c,0x78,0x00,0x3b,0xf0,0x18,0xbc,0x00,0x3b,0x00,0x1f,0x9c,0x00,0x3b,0x00,0x1f,0xee,0x00,0x3b,0x00,0x1d,
    0xcf,0x00,0x3b,0x00,0x1c,0xef,0x80,0x3b,0x00,0x1c,0xf3,0xc0,0x3b,0x00,0x1c,0x7b,0xe0,0x3b,0x00,0x1d,0x3c,0xf0,0x3b,0x00,
    0x1d,0x9e,0xf0,0x3b,0x00,0x1d,0x8f,0x38,0x3b,0x00,0x1d,0x87,0x3c,0x3b,0x00,0x1d,0x83,0xde,0x3b,0x00,0x1d,0x83,0xcf,0x3b,
    0x00,0x1d,0x81,0xf7,0xbb,0x00,0x1d,0x80,0xf3,0xbb,0x00,0x1d,0x80,0x7d,0xfb,0x00,0x1d,0x80,0x39,0xfb,0x00,0x1d,0x80,0x1d,
    0x1b,0x00,0x1d,0x80,0x1e,0x3b,0x00,0x1d,0x80,0x0f,0x5b,0x00,0x1d,0x80,0x07,0x9b,0x00,0x1c,0x00,0x03,0xdb,0x00,0xff,0xc0,
    0x01,0xfb,0x00,0xff,0xc0,0x00,0xfb,0x00,0x00,0x00,0x00,0x03,0x00,0x1f,0xf8,0x00,0x3f,0x00,0x1f,0xf8,0x00,0x1f,0x00,0x00,
    0x1f,0xf0,0x00,0x00,0x00,0xff,0xfe,0x00,0x00,0x03,0xf8,0x3f,0x80,0x00,0x07,0xe3,0x8f,0xc0,0x00,0x1f,0xcf,0xef,0xe0,0x00,
    0x1f,0xdf,0x07,0xf0,0x00,0x39,0x9c,0x03,0xf8,0x00,0x7b,0xb8,0x03,0x3c,0x00,0x73,0xb8,0x03,0x3c,0x00,0xe7,0x30,0x03,0xcc,
    0x00,0xeb,0x70,0x03,0x8e,0x80,0xd3,0x70,0x01,0x9e,0x80,0xe3,0x60,0x01,0xa6,0x80,0xc7,0x60,0x01,0xc6,0xc0,0xcb,0x60,0x01,
    0x8e,0xc0,0xd3,0x60,0x01,0x96,0xc0,0xe3,0x60,0x01,0xa6,0xc0,0xc7,0x60,0x01,0xc6,0xc0,0xcb,0x60,0x01,0x8e,0xc0,0xf3,0x60,
    0x03,0x9e,0xc0,0xe3,0x20,0x03,0xac,0xc0,0x77,0xa0,0x03,0x5d,0xc0,0x7b,0xa0,0x03,0xbd,0xc0,0x39,0x80,0x03,0x79,0x80,0x1f,
    0xd0,0x07,0xf3,0x80,0x1f,0xc0,0x0f,0xe7,0x80,0x0f,0xe0,0x0f,0xcf,0x00,0x03,0xf8,0x3f,0x9e,0x00,0x00,0xff,0xfe,0x3c,0x00,
    0x00,0x1f,0xf0,0xf8,0x00,0x00,0x40,0x07,0xf0,0x00,0x00,0x1f,0xff,0xc0,0x00,0x00,0x03,0xfe,0x00,0x00,0xff,0xff,0xf0,0x00,
    0xff,0xff,0xfe,0x00,0x0d,0x60,0xff,0x00,0x0e,0x6e,0x77,0x80,0x0c,0x6f,0x3f,0xc0,0x0c,0xec,0x39,0xe0,0x0d,0x6c,0x19,0xe0,
    0x0e,0x6c,0x1a,0x68,0x0c,0x6c,0x1c,0x6c,0x0c,0xec,0x18,0xec,0x0d,0x6c,0x19,0xec,0x0e,0x6c,0x3b,0xec,0x0c,0x6c,0x3f,0xcc,
    0x0c,0xec,0x7f,0x9c,0x0d,0x60,0xff,0x3c,0x0e,0x7f,0xfe,0x78,0x0c,0x7f,0xf0,0xf0,0x0c,0xe0,0x07,0xe0,0x0d,0x6f,0xff,0xc0,
    0x0e,0x6f,0xfe,0x00,0x0c,0x6c,0x00,0x00,0x0c,0xec,0x00,0x00,0x0d,0x6c,0x00,0x00,0x0e,0x6c,0x00,0x00,0x0c,0x6c,0x00,0x00,
    0x0c,0xec,0x00,0x00,0x0d,0x60,0x00,0x00,0xff,0xff,0x00,0x00,0xff,0xff,0x00,0x00,0x00,0x00,0x00,0x00,0x1f,0xff,0xe0,0x00,
    0x1f,0xff,0xe0,0x00,0x00,0x1f,0xf0,0x00,0x00,0x00,0xff,0xfe,0x00,0x00,0x03,0xf8,0x3f,0x80,0x00,0x07,0xe3,0x8f,0xc0,0x00,
    0x1f,0xcf,0xef,0xe0,0x00,0x1f,0xdf,0x07,0xf0,0x00,0x39,0x9c,0x03,0xf8,0x00,0x7b,0xb8,0x03,0x3c,0x00,0x73,0xb8,0x03,0x3c,
    0x00,0xe7,0x30,0x03,0xcc,0x00,0xeb,0x70,0x03,0x8e,0x80,0xd3,0x70,0x01,0x9e,0x80,0xe3,0x60,0x01,0xa6,0x80,0xc7,0x60,0x01,
    0xc6,0xc0,0xcb,0x60,0x01,0x8e,0xc0,0xd3,0x60,0x01,0x96,0xc0,0xe3,0x60,0x01,0xa6,0xc0,0xc7,0x60,0x01,0xc6,0xc0,0xcb,0x60,
    0x01,0x8e,0xc0,0xf3,0x60,0x03,0x9e,0xc0,0xe3,0x20,0x03,0xac,0xc0,0x77,0xa0,0x03,0x5d,0xc0,0x7b,0xa0,0x03,0xbd,0xc0,0x39,
    0x80,0x03,0x79,0x80,0x1f,0xd0,0x07,0xf3,0x80,0x1f,0xc0,0x0f,0xe7,0x80,0x07,0xe0,0x0f,0xcf,0x00,0x03,0xf8,0x3f,0x9e,0x00,
    0x00,0xff,0xfe,0x3c,0x00,0x00,0x1f,0xf0,0xf8,0x00,0x00,0x40,0xf3,0xf0,0x00,0x00,0x1e,0xf8,0x00,0x00,0x00,0x02,0x7f,0xc0,
    0x00,0x00,0x00,0x7f,0xc0,0x00,0x00,0x00,0x3f,0xc0,0x00,0x00,0x00,0x0f,0xd8,0x00,0x00,0x00,0x03,0xd8,0x00,0x00,0x00,0x00,
    0x18,0x00,0x00,0x00,0x01,0xf8,0x00,0x00,0x00,0x00,0x78,0x00,0xff,0xff,0xf8,0x00,0x00,0xff,0xff,0xfe,0x00,0x00,0x0d,0x60,
    0xff,0x80,0x00,0x0e,0x6e,0x3f,0xc0,0x00,0x0c,0x6f,0x9d,0xc0,0x00,0x0c,0xec,0x18,0xe0,0x00,0x0d,0x6c,0x19,0xe8,0x00,0x0e,
    0x6c,0x1a,0x68,0x00,0x0c,0x6c,0x1c,0x6c,0x00,0x0c,0xec,0x18,0xec,0x00,0x0d,0x6c,0x19,0xec,0x00,0x0e,0x6c,0x1b,0xcc,0x00,
    0x0c,0x6c,0x3f,0x9c,0x00,0x0c,0xe0,0xff,0x3c,0x00,0x0d,0x7f,0xfc,0x78,0x00,0x0e,0x7f,0xf8,0xf0,0x00,0x0c,0x63,0xde,0xe0,
    0x00,0x0c,0xe8,0xfe,0x00,0x00,0x0d,0x6e,0xf7,0x00,0x00,0x0e,0x6c,0x77,0x80,0x00,0x0c,0x6c,0x77,0x80,0x00,0x0c,0xec,0x39,
    0xc0,0x00,0x0d,0x6c,0x39,0xc0,0x00,0x0e,0x6c,0x1e,0xe0,0x00,0x0c,0x6c,0x1e,0xe0,0x00,0x0c,0xec,0x0e,0xf0,0x00,0x0d,0x60,
    0x07,0x70,0x00,0xff,0xfe,0x07,0xfe,0x00,0xff,0xfe,0x03,0xfe,0x00,0x00,0x00,0x00,0x00,0x00,0x1f,0xff,0xc0,0xff,0xc0,0x1f,
    0xff,0xc0,0x7f,0xc0,0x03,0xff,0x00,0x00,0x0f,0xff,0xf0,0x00,0x3f,0x01,0xfc,0x00,0x7c,0x7c,0x7c,0x00,0x7d,0xff,0x3c,0x00,
    0xf9,0xe0,0x3d,0x80,0xf9,0x80,0x1d,0x80,0xfd,0x80,0x1d,0x80,0xdc,0x00,0x01,0x80,0xce,0x00,0x03,0x80,0xdf,0xc0,0x03,0x80,
    0xe7,0xfc,0x00,0x00,0xe4,0xff,0xc0,0x00,0x78,0x8f,0xf0,0x00,0x7f,0x11,0xf8,0x00,0x1f,0xe2,0x3c,0x00,0x07,0xfc,0x5e,0x00,
    0x00,0xff,0x8e,0x00,0x02,0x0f,0xd6,0x80,0x00,0xe1,0xe6,0xc0,0x00,0x1c,0xe6,0xc0,0xe0,0x00,0x6e,0xc0,0xe0,0x00,0x76,0xc0,
    0xe0,0x00,0x6e,0xc0,0xf4,0x00,0x6e,0xc0,0xf0,0x00,0x7c,0xc0,0xfc,0x00,0xfd,0xc0,0xff,0x03,0xf9,0xc0,0x3f,0xff,0xe3,0x80,
    0x03,0xff,0x0f,0x80,0x18,0x00,0x7f,0x00,0x07,0xff,0xfc,0x00,0x00,0x7f,0xe0,0x00,0xff,0xff,0xff,0xf8,0xff,0xff,0xff,0xf8,
    0xe0,0x1c,0x60,0x18,0xef,0xd8,0xef,0xdb,0xef,0xd9,0x6f,0xdb,0xec,0x1a,0x6c,0x1b,0x6c,0x1c,0x6c,0x1b,0x0c,0x18,0xec,0x03,
    0x1c,0x19,0x6c,0x03,0x0c,0x1a,0x6c,0x03,0x00,0x1c,0x6c,0x00,0x00,0x18,0xec,0x00,0x00,0x19,0x6c,0x00,0x00,0x1a,0x6c,0x00,
    0x00,0x1c,0x6c,0x00,0x00,0x18,0xec,0x00,0x00,0x19,0x6c,0x00,0x00,0x1a,0x6c,0x00,0x00,0x1c,0x6c,0x00,0x00,0x18,0xec,0x00,
    0x00,0x19,0x6c,0x00,0x00,0x1a,0x6c,0x00,0x00,0x1c,0x6c,0x00,0x00,0x18,0xec,0x00,0x00,0x19,0x6c,0x00,0x00,0x1a,0x6c,0x00,
    0x00,0x1c,0x60,0x00,0x01,0xff,0xfe,0x00,0x01,0xff,0xfe,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xff,0xc0,0x00,0x3f,0xff,0xc0,
    0xff,0xfe,0x01,0xff,0x80,0xff,0xfe,0x01,0xff,0x80,0x0c,0xb0,0x00,0x18,0x00,0x0d,0x37,0xc0,0x1b,0xf0,0x0e,0x37,0xc0,0x1b,
    0xf0,0x0c,0x76,0x00,0x1b,0x00,0x0c,0xb6,0x00,0x1b,0x00,0x0d,0x36,0x00,0x1b,0x00,0x0e,0x36,0x00,0x1b,0x00,0x0c,0x76,0x00,
    0x1b,0x00,0x0c,0xb6,0x00,0x1b,0x00,0x0d,0x36,0x00,0x1b,0x00,0x0e,0x36,0x00,0x1b,0x00,0x0c,0x76,0x00,0x1b,0x00,0x0c,0xb6,
    0x00,0x1b,0x00,0x0d,0x36,0x00,0x1b,0x00,0x0e,0x36,0x00,0x1b,0x00,0x0c,0x76,0x00,0x1b,0x00,0x0c,0xb6,0x00,0x3b,0x00,0x0f,
    0x36,0x00,0x3b,0x00,0x0e,0x36,0x00,0x3b,0x00,0x06,0x72,0x00,0x3b,0x00,0x07,0xba,0x00,0x3b,0x00,0x07,0x38,0x00,0x73,0x00,
    0x03,0xbc,0x00,0xf7,0x00,0x03,0xff,0x03,0xe7,0x00,0x01,0xff,0xff,0xce,0x00,0x00,0x7f,0xff,0x1e,0x00,0x00,0x0f,0xfc,0x7c,
    0x00,0x00,0x20,0x01,0xf8,0x00,0x00,0x0f,0xff,0xe0,0x00,0x00,0x01,0xff,0x80,0x00,0xff,0xf8,0x01,0xff,0x00,0xff,0xf8,0x01,
    0xff,0x00,0x1c,0x60,0x00,0x38,0x00,0x1c,0xe7,0x00,0x3b,0xe0,0x0d,0x77,0x00,0x73,0xe0,0x0e,0x74,0x00,0x77,0x00,0x0e,0x70,
    0x00,0x67,0x00,0x07,0xba,0x00,0xee,0x00,0x07,0x38,0x00,0xee,0x00,0x03,0x3c,0x01,0xcc,0x00,0x03,0xdd,0x01,0xdc,0x00,0x03,
    0x8c,0x01,0x9c,0x00,0x01,0xde,0x83,0xb8,0x00,0x01,0xee,0x03,0x38,0x00,0x00,0xc7,0x07,0x30,0x00,0x00,0xef,0x47,0x70,0x00,
    0x00,0xf3,0x06,0x60,0x00,0x00,0x73,0xae,0xe0,0x00,0x00,0x77,0x8c,0xe0,0x00,0x00,0x39,0xdc,0xc0,0x00,0x00,0x39,0xdd,0xc0,
    0x00,0x00,0x3a,0xf9,0x80,0x00,0x00,0x1c,0xfb,0x80,0x00,0x00,0x1c,0xb3,0x80,0x00,0x00,0x0d,0x77,0x00,0x00,0x00,0x0e,0x77,
    0x00,0x00,0x00,0x0e,0xe6,0x00,0x00,0x00,0x07,0xee,0x00,0x00,0x00,0x07,0xce,0x00,0x00,0x00,0x00,0x1c,0x00,0x00,0x00,0x00,
    0xfc,0x00,0x00,0x00,0x00,0xf8,0x00,0x00,0xff,0xf8,0x03,0xf0,0x0f,0xf8,0xff,0xf8,0x03,0xf0,0x0f,0xf8,0x1c,0x60,0x07,0x78,
    0x00,0xc0,0x1c,0xef,0x07,0xba,0x01,0xdf,0x1d,0x6f,0x07,0x1a,0x01,0xdf,0x0e,0x64,0x0e,0x39,0x01,0x98,0x0c,0x74,0x0f,0xdd,
    0x03,0xb8,0x0e,0xf4,0x0f,0x9d,0x03,0xb8,0x0f,0x30,0x0d,0x9c,0x03,0x30,0x06,0x3a,0x1d,0xee,0x83,0x70,0x07,0x7a,0x1d,0xce,
    0x87,0x70,0x07,0x98,0x18,0xce,0x06,0x60,0x03,0x1d,0x3a,0xf7,0x46,0x60,0x03,0xbd,0x3a,0xe7,0x4e,0xe0,0x03,0xcc,0x32,0x67,
    0x0e,0xc0,0x01,0x8e,0x77,0x6b,0x8c,0xc0,0x01,0xde,0x77,0x73,0x9d,0xc0,0x01,0xe6,0x66,0x73,0x9d,0xc0,0x00,0xc6,0xee,0x35,
    0xd9,0x80,0x00,0xcf,0xee,0x39,0xfb,0x80,0x00,0xf7,0xcc,0x39,0xfb,0x80,0x00,0xe2,0xdc,0x1a,0x33,0x00,0x00,0x65,0xdc,0x1c,
    0x77,0x00,0x00,0x79,0xd8,0x1c,0xf7,0x00,0x00,0x71,0x98,0x0d,0x66,0x00,0x00,0x33,0xb8,0x0e,0x6e,0x00,0x00,0x3f,0xb8,0x0e,
    0xee,0x00,0x00,0x3f,0x30,0x07,0xec,0x00,0x00,0x1f,0x70,0x07,0xcc,0x00,0x00,0x00,0x70,0x00,0x1c,0x00,0x00,0x07,0xe0,0x00,
    0xfc,0x00,0x00,0x03,0xe0,0x00,0xf8,0x00,0xff,0xfe,0x1f,0xf8,0x00,0xff,0xfe,0x1f,0xf8,0x00,0x1e,0x70,0x03,0xc0,0x00,0x0e,
    0xb3,0xc3,0x9f,0x00,0x07,0x39,0xc7,0x3f,0x00,0x07,0xbc,0x0f,0x78,0x00,0x03,0xde,0x0e,0x70,0x00,0x01,0xce,0x1c,0xe0,0x00,
    0x01,0xf7,0x3d,0xe0,0x00,0x00,0xe7,0xb9,0xc0,0x00,0x00,0x77,0xf3,0x80,0x00,0x00,0x79,0xe7,0x80,0x00,0x00,0x39,0x67,0x00,
    0x00,0x00,0x1e,0x66,0x00,0x00,0x00,0x1c,0x70,0x00,0x00,0x00,0x0c,0xf8,0x00,0x00,0x00,0x1f,0x38,0x00,0x00,0x00,0x1f,0xbc,
    0x00,0x00,0x00,0x3b,0xde,0x00,0x00,0x00,0x79,0xce,0x00,0x00,0x00,0x71,0xf7,0x00,0x00,0x00,0xe4,0xe7,0x80,0x00,0x01,0xce,
    0x77,0x80,0x00,0x01,0xce,0x79,0xc0,0x00,0x03,0x9c,0x39,0xe0,0x00,0x07,0x38,0x1a,0xe0,0x00,0x07,0x08,0x1c,0x70,0x00,0x7f,
    0xe0,0xff,0xfe,0x00,0x7f,0xe0,0xff,0xfe,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0xfc,0x1f,0xff,0xc0,0x0f,0xfc,0x1f,0xff,0xc0,
    0xff,0xfc,0x07,0xf8,0xff,0xfc,0x07,0xf8,0x3c,0x60,0x01,0xc0,0x1c,0xe7,0x81,0xdf,0x0f,0x77,0x83,0x9f,0x0e,0x70,0x07,0x38,
    0x07,0x78,0x07,0x38,0x07,0xbc,0x0e,0x70,0x03,0x9c,0x0e,0xe0,0x03,0xee,0x1c,0xe0,0x01,0xce,0x1d,0xc0,0x00,0xef,0x39,0xc0,
    0x00,0xf7,0x73,0x80,0x00,0x73,0xf3,0x80,0x00,0x77,0xe7,0x00,0x00,0x38,0xee,0x00,0x00,0x39,0xce,0x00,0x00,0x1a,0xdc,0x00,
    0x00,0x1c,0xdc,0x00,0x00,0x18,0xd8,0x00,0x00,0x19,0xd8,0x00,0x00,0x1a,0xd8,0x00,0x00,0x1c,0xd8,0x00,0x00,0x18,0xd8,0x00,
    0x00,0x19,0xd8,0x00,0x00,0x1a,0xd8,0x00,0x00,0x1c,0xc0,0x00,0x01,0xff,0xfc,0x00,0x01,0xff,0xfc,0x00,0x00,0x00,0x00,0x00,
    0x00,0x3f,0xff,0x80,0x00,0x3f,0xff,0x80,0x7f,0xff,0xff,0xe0,0x7f,0xff,0xff,0xe0,0x70,0x00,0x39,0xe0,0x77,0xfe,0x71,0xcc,
    0x77,0xfc,0xf3,0x9c,0x76,0x01,0xe7,0xbc,0x06,0x01,0xcf,0x38,0x0e,0x03,0x9e,0x70,0x0e,0x07,0xbe,0xf0,0x00,0x0f,0x7c,0xe0,
    0x00,0x0e,0xb9,0xc0,0x00,0x1d,0x73,0xc0,0x00,0x3e,0xf7,0x80,0x00,0x3c,0xe7,0x00,0x00,0x79,0xce,0x00,0x00,0xf3,0xde,0x00,
    0x01,0xe7,0x9c,0x00,0x01,0xc7,0x38,0x00,0x03,0x8e,0x78,0x00,0x07,0x9e,0xf0,0x00,0x07,0x3c,0xe0,0x00,0x0e,0x79,0xc0,0x00,
    0x1e,0xfb,0xc0,0x00,0x3d,0xf3,0x80,0xe0,0x3a,0xe7,0x00,0xe0,0x74,0xcf,0x00,0xe0,0xf8,0xc0,0x00,0xec,0xff,0xff,0xff,0xec,
    0xff,0xff,0xff,0xec,0x00,0x00,0x00,0x0c,0x1f,0xff,0xff,0xfc,0x1f,0xff,0xff,0xfc,0xff,0xe0,0xff,0xe0,0xc6,0x00,0xce,0xfc,
    0xd6,0xfc,0xe6,0xc0,0xc6,0xc0,0xce,0xc0,0xd6,0xc0,0xe6,0xc0,0xc6,0xc0,0xce,0xc0,0xd6,0xc0,0xe6,0xc0,0xc6,0xc0,0xce,0xc0,
    0xd6,0xc0,0xe6,0xc0,0xc6,0xc0,0xce,0xc0,0xd6,0xc0,0xe6,0xc0,0xc6,0xc0,0xce,0xc0,0xd6,0xc0,0xe6,0xc0,0xc6,0xc0,0xce,0xc0,
    0xd6,0xc0,0xe6,0xc0,0xc6,0xc0,0xce,0xc0,0xd6,0xc0,0xe6,0x00,0xff,0xe0,0xff,0xe0,0x00,0x00,0x1f,0xfc,0x1f,0xfc,0xf0,0x00,
    0x00,0xf8,0x00,0x00,0x78,0x00,0x00,0x78,0x00,0x00,0x7d,0x00,0x00,0x3d,0x00,0x00,0x3c,0x00,0x00,0x3e,0x80,0x00,0x1e,0x80,
    0x00,0x1e,0x00,0x00,0x1f,0x40,0x00,0x0f,0x40,0x00,0x0f,0x00,0x00,0x0f,0xa0,0x00,0x07,0xa0,0x00,0x07,0xa0,0x00,0x07,0x90,
    0x00,0x07,0xd0,0x00,0x03,0xd0,0x00,0x03,0xc0,0x00,0x03,0xe8,0x00,0x01,0xe8,0x00,0x01,0xe0,0x00,0x01,0xf4,0x00,0x00,0xf4,
    0x00,0x00,0xf0,0x00,0x00,0xfa,0x00,0x00,0x7a,0x00,0x00,0x78,0x00,0x00,0x7d,0x00,0x00,0x7d,0x00,0x00,0x3d,0x00,0x00,0x3d,
    0x80,0x00,0x01,0x80,0x00,0x07,0x80,0x00,0x07,0x80,0xff,0xe0,0xff,0xe0,0x0d,0x60,0x0e,0x6c,0x0c,0x6c,0x0c,0xec,0x0d,0x6c,
    0x0e,0x6c,0x0c,0x6c,0x0c,0xec,0x0d,0x6c,0x0e,0x6c,0x0c,0x6c,0x0c,0xec,0x0d,0x6c,0x0e,0x6c,0x0c,0x6c,0x0c,0xec,0x0d,0x6c,
    0x0e,0x6c,0x0c,0x6c,0x0c,0xec,0x0d,0x6c,0x0e,0x6c,0x0c,0x6c,0x0c,0xec,0x0d,0x6c,0x0e,0x6c,0x0c,0x6c,0x0c,0xec,0x0d,0x6c,
    0x0e,0x6c,0x0c,0x6c,0x0c,0xec,0xff,0xec,0xff,0xec,0x00,0x0c,0x1f,0xfc,0x1f,0xfc,0x00,0x7c,0x00,0x00,0x00,0xfe,0x00,0x00,
    0x01,0xef,0x00,0x00,0x03,0xff,0x80,0x00,0x07,0xff,0xc0,0x00,0x0f,0xe7,0xe0,0x00,0x1f,0x83,0xf0,0x00,0x3f,0x39,0xf8,0x00,
    0x7e,0x7c,0x7c,0x00,0xf8,0xf0,0x3e,0x00,0xf3,0xe0,0x0f,0x00,0x07,0xc0,0x00,0x00,0x1f,0x00,0x07,0xc0,0x1e,0x00,0x01,0xe0,
    0xff,0xff,0xf0,0xff,0xff,0xf0,0xff,0xff,0xf0,0xff,0xff,0xf6,0x00,0x00,0x06,0xfc,0x00,0x7c,0x00,0x3e,0x00,0x1f,0x00,0x0f,
    0x00,0x07,0x80,0x01,0xc0,0x00,0x00,0x00,0xf0,0x00,0x38,0x0f,0xfc,0x00,0x00,0x7f,0xff,0x00,0x00,0x7c,0x1f,0xc0,0x00,0x79,
    0xcf,0xe0,0x00,0x73,0xe6,0xe0,0x00,0x77,0x86,0x60,0x00,0x07,0x06,0xf4,0x00,0x0e,0x07,0x74,0x00,0x00,0x06,0x34,0x00,0x07,
    0xfe,0x76,0x00,0x3f,0xfe,0xb6,0x00,0x7f,0x07,0x36,0x00,0xf6,0x76,0x36,0x00,0xe6,0xf6,0x76,0x00,0xce,0xe6,0xb6,0x00,0xd6,
    0xc7,0x36,0x00,0xe6,0xc6,0x36,0x00,0xe6,0x4e,0x76,0x00,0xff,0x1e,0xb6,0x00,0x7f,0xff,0x30,0x00,0x3f,0xe7,0xfe,0x00,0x1f,
    0x87,0xfe,0x00,0x00,0x30,0x00,0x00,0x07,0xfc,0xff,0xc0,0x03,0xf0,0xff,0xc0,0xff,0xc0,0x00,0x00,0xff,0xc0,0x00,0x00,0x1c,
    0xc0,0x00,0x00,0x18,0xd8,0x00,0x00,0x19,0xd8,0x00,0x00,0x1a,0xd8,0x00,0x00,0x1c,0xd8,0x00,0x00,0x18,0xc0,0x00,0x00,0x19,
    0xcf,0xe0,0x00,0x1a,0xdf,0xf8,0x00,0x1c,0xf1,0xfc,0x00,0x18,0xe0,0xfe,0x00,0x19,0xca,0x7f,0x00,0x1a,0xde,0x67,0x00,0x1c,
    0xdc,0x77,0x80,0x18,0xd8,0x7b,0xa0,0x19,0xd8,0x31,0xa0,0x1a,0xd8,0x33,0xb0,0x1c,0xd8,0x35,0xb0,0x18,0xd8,0x39,0xb0,0x19,
    0xd8,0x31,0xb0,0x1a,0xd8,0x33,0xb0,0x1c,0xd8,0x77,0xb0,0x18,0xd8,0x7b,0xb0,0x19,0xd8,0x77,0x30,0x1a,0xc8,0x6f,0x70,0x1c,
    0xe0,0xfe,0x70,0x18,0xf1,0xfc,0xe0,0xff,0xdf,0xf9,0xe0,0xff,0xcf,0xe3,0xc0,0x00,0x00,0x0f,0x80,0x1f,0xfb,0xff,0x00,0x1f,
    0xf9,0xfc,0x00,0x01,0xfe,0x00,0x07,0xff,0xe0,0x1f,0xc1,0xf0,0x3f,0x9c,0xf0,0x7b,0x3e,0x74,0x77,0x78,0x76,0xef,0x70,0x36,
    0xf7,0x60,0x06,0xe6,0x60,0x0e,0xc6,0xe0,0x06,0xce,0xe0,0x00,0xd6,0xc0,0x00,0xe6,0xc0,0x00,0xc6,0x40,0x00,0xef,0x40,0x00,
    0xf7,0x40,0x70,0x73,0x40,0x70,0x7f,0x20,0x70,0x3f,0x80,0xe6,0x1f,0xc1,0xce,0x07,0xff,0x8e,0x01,0xfe,0x1c,0x00,0x00,0x38,
    0x00,0xff,0xf0,0x00,0x3f,0xc0,0x00,0x0f,0xfc,0x00,0x00,0x0f,0xfc,0x00,0x00,0x01,0x8c,0x00,0x00,0x01,0x9d,0x80,0x00,0x01,
    0xad,0x80,0x00,0x01,0xcd,0x80,0x00,0x01,0x8d,0x80,0x00,0x01,0x9d,0x80,0x03,0xf9,0xad,0x80,0x0f,0xfd,0xcd,0x80,0x1f,0x87,
    0x8d,0x80,0x3f,0x33,0x9d,0x80,0x7b,0x7b,0xad,0x80,0x77,0x71,0xcd,0x80,0xef,0x61,0x8d,0x80,0xf7,0x61,0x9d,0x80,0xe6,0x61,
    0xad,0x80,0xc6,0xe1,0xcd,0x80,0xce,0xe1,0x8d,0x80,0xd6,0xc1,0x9d,0x80,0xe6,0xc1,0xad,0x80,0xc6,0x41,0xcd,0x80,0xef,0x41,
    0x8d,0x80,0xf7,0x41,0x9d,0x80,0x73,0x41,0xad,0x80,0x7f,0x23,0xcd,0x80,0x3f,0x83,0x8d,0x80,0x1f,0xc7,0x9c,0x00,0x0f,0xfd,
    0xff,0x80,0x03,0xf9,0xff,0x80,0x00,0x00,0x00,0x00,0x01,0xff,0xbf,0xf0,0x00,0x7f,0x3f,0xf0,0x01,0xfc,0x00,0x00,0x07,0xff,
    0x80,0x00,0x1f,0x8f,0xc0,0x00,0x3f,0x27,0xe0,0x00,0x7b,0x77,0xf0,0x00,0x77,0x73,0x70,0x00,0xef,0x63,0xb8,0x00,0xf6,0x63,
    0x3a,0x00,0xe6,0xe3,0x3a,0x00,0xc6,0x03,0x59,0x00,0xcf,0xff,0xfd,0x00,0xd7,0xff,0xfd,0x00,0xe6,0x00,0x01,0x00,0xc6,0xff,
    0xff,0x80,0xee,0x7f,0x83,0x80,0xf7,0x40,0x38,0x00,0x77,0x40,0x78,0x00,0x7f,0x00,0x70,0x00,0x3f,0x80,0xf7,0x00,0x1f,0xc1,
    0xe7,0x00,0x0f,0xff,0x8e,0x00,0x01,0xfe,0x1e,0x00,0x00,0x00,0x3c,0x00,0x01,0xff,0xf0,0x00,0x00,0x3f,0xc0,0x00,0x00,0xff,
    0x00,0x03,0xff,0xc0,0x07,0xf1,0xc0,0x0f,0xe4,0xc0,0x0f,0xce,0xd8,0x1e,0xde,0x18,0x1c,0xdc,0x18,0x18,0xd8,0x18,0x19,0xc0,
    0x00,0xfa,0xfe,0x00,0xfc,0xfe,0x00,0x18,0xc0,0x00,0x19,0xdf,0xc0,0x1a,0xdf,0xc0,0x1c,0xd8,0x00,0x18,0xd8,0x00,0x19,0xd8,
    0x00,0x1a,0xd8,0x00,0x1c,0xd8,0x00,0x18,0xd8,0x00,0x19,0xd8,0x00,0x1a,0xd8,0x00,0x1c,0xd8,0x00,0x18,0xd8,0x00,0x19,0xd8,
    0x00,0x1a,0xd8,0x00,0x1c,0xd8,0x00,0x18,0xc0,0x00,0xff,0xfc,0x00,0xff,0xfc,0x00,0x00,0x00,0x00,0x1f,0xff,0x80,0x1f,0xff,
    0x80,0x03,0xf8,0x00,0x00,0x0f,0xfd,0xff,0x80,0x1f,0x87,0xff,0x80,0x3f,0x33,0x9c,0x00,0x7b,0x7b,0xad,0xf0,0x77,0x71,0xcd,
    0xf0,0xef,0x61,0x8d,0x80,0xf7,0x61,0x9d,0x80,0xe6,0x61,0xad,0x80,0xc6,0xe1,0xcd,0x80,0xce,0xe1,0x8d,0x80,0xd6,0xc1,0x9d,
    0x80,0xe6,0xc1,0xad,0x80,0xc6,0x41,0xcd,0x80,0xef,0x41,0x8d,0x80,0xf7,0x41,0x9d,0x80,0x73,0x41,0xad,0x80,0x7f,0x23,0xcd,
    0x80,0x3f,0x83,0x8d,0x80,0x1f,0xc7,0x9d,0x80,0x0f,0xfd,0xad,0x80,0x03,0xf9,0xcd,0x80,0x00,0x01,0x9d,0x80,0x01,0xfd,0x9d,
    0x80,0x30,0x79,0xb9,0x80,0x30,0x03,0xfb,0x80,0x38,0x03,0xf3,0x80,0x3c,0x0f,0xe7,0x00,0x3f,0xff,0xcf,0x00,0x0f,0xfe,0x1e,
    0x00,0x00,0x00,0xfc,0x00,0x07,0xff,0xf8,0x00,0xff,0xc0,0x00,0x00,0xff,0xc0,0x00,0x00,0x1c,0xc0,0x00,0x00,0x18,0xd8,0x00,
    0x00,0x19,0xd8,0x00,0x00,0x1a,0xd8,0x00,0x00,0x1c,0xd8,0x00,0x00,0x18,0xd8,0x00,0x00,0x19,0xc3,0xf0,0x00,0x1a,0xcf,0xfc,
    0x00,0x1c,0xdf,0xfe,0x00,0x18,0xf0,0xee,0x00,0x19,0xe0,0x77,0x00,0x1a,0xeb,0x67,0x40,0x1c,0xee,0x67,0x40,0x18,0xcc,0x6b,
    0x60,0x19,0xdc,0x73,0x60,0x1a,0xdc,0x63,0x60,0x1c,0xd8,0x67,0x60,0x18,0xd8,0x6b,0x60,0x19,0xd8,0x73,0x60,0x1a,0xd8,0x63,
    0x60,0x1c,0xd8,0x67,0x60,0x18,0xd8,0x6b,0x60,0x19,0xd8,0x73,0x60,0x1a,0xd8,0x63,0x60,0x1c,0xd8,0x67,0x60,0x18,0xc0,0x6b,
    0x00,0xff,0xf9,0xff,0xe0,0xff,0xf9,0xff,0xe0,0x00,0x00,0x00,0x00,0x1f,0xff,0x3f,0xfc,0x1f,0xff,0x3f,0xfc,0x07,0x00,0x1f,
    0x80,0x1f,0xc0,0x19,0xc0,0x1f,0xd0,0x1f,0x98,0x07,0x38,0x00,0x78,0x00,0x10,0xff,0xc0,0xff,0xc0,0x18,0xc0,0x19,0xd8,0x1a,
    0xd8,0x1c,0xd8,0x18,0xd8,0x19,0xd8,0x1a,0xd8,0x1c,0xd8,0x18,0xd8,0x19,0xd8,0x1a,0xd8,0x1c,0xd8,0x18,0xd8,0x19,0xd8,0x1a,
    0xd8,0x1c,0xd8,0x18,0xc0,0xff,0xf8,0xff,0xf8,0x00,0x00,0x1f,0xff,0x1f,0xff,0x00,0xf0,0x00,0x01,0xf8,0x00,0x01,0xfc,0x00,
    0x01,0x9c,0x00,0x01,0xfd,0x00,0x01,0xf9,0x80,0x00,0xf3,0x80,0x00,0x07,0x80,0x00,0x01,0x00,0x0f,0xfc,0x00,0x0f,0xfc,0x00,
    0x01,0x8c,0x00,0x01,0x9d,0x80,0x01,0xad,0x80,0x01,0xcd,0x80,0x01,0x8d,0x80,0x01,0x9d,0x80,0x01,0xad,0x80,0x01,0xcd,0x80,
    0x01,0x8d,0x80,0x01,0x9d,0x80,0x01,0xad,0x80,0x01,0xcd,0x80,0x01,0x8d,0x80,0x01,0x9d,0x80,0x01,0xad,0x80,0x01,0xcd,0x80,
    0x01,0x8d,0x80,0x01,0x9d,0x80,0x01,0xad,0x80,0x01,0xcd,0x80,0x01,0x8d,0x80,0x01,0x9d,0x80,0xc1,0xbd,0x80,0xc1,0xfd,0x80,
    0xe3,0xf9,0x80,0xff,0xf3,0x80,0x7f,0x87,0x80,0x00,0x3f,0x00,0x1f,0xfe,0x00,0xff,0xc0,0x00,0x00,0xff,0xc0,0x00,0x00,0x1c,
    0xc0,0x00,0x00,0x18,0xd8,0x00,0x00,0x19,0xd8,0x00,0x00,0x1a,0xd8,0x00,0x00,0x1c,0xd8,0x00,0x00,0x18,0xd8,0x00,0x00,0x19,
    0xd8,0x00,0x00,0x1a,0xd8,0xff,0xc0,0x1c,0xd8,0xff,0xc0,0x18,0xd8,0x38,0x00,0x19,0xd8,0x73,0xf8,0x1a,0xd8,0xe7,0xf8,0x1c,
    0xd9,0xc7,0x00,0x18,0xd3,0x8e,0x00,0x19,0xc7,0x9c,0x00,0x1a,0xcf,0x98,0x00,0x1c,0xff,0xc0,0x00,0x18,0xff,0xe0,0x00,0x19,
    0xff,0xf0,0x00,0x1a,0xe7,0xf0,0x00,0x1c,0xc3,0xf8,0x00,0x18,0xd9,0xfc,0x00,0x19,0xdd,0xfe,0x00,0x1a,0xd8,0xfe,0x00,0x1c,
    0xd8,0x77,0x00,0x18,0xc0,0x3f,0x80,0xff,0xf9,0xff,0xe0,0xff,0xf9,0xff,0xe0,0x00,0x00,0x00,0x00,0x1f,0xff,0x3f,0xfc,0x1f,
    0xff,0x3f,0xfc,0xff,0xc0,0xff,0xc0,0x1c,0xc0,0x18,0xd8,0x19,0xd8,0x1a,0xd8,0x1c,0xd8,0x18,0xd8,0x19,0xd8,0x1a,0xd8,0x1c,
    0xd8,0x18,0xd8,0x19,0xd8,0x1a,0xd8,0x1c,0xd8,0x18,0xd8,0x19,0xd8,0x1a,0xd8,0x1c,0xd8,0x18,0xd8,0x19,0xd8,0x1a,0xd8,0x1c,
    0xd8,0x18,0xd8,0x19,0xd8,0x1a,0xd8,0x1c,0xd8,0x18,0xc0,0xff,0xf8,0xff,0xf8,0x00,0x00,0x1f,0xff,0x1f,0xff,0x00,0x03,0xf0,
    0x1f,0x80,0x00,0xff,0xcf,0xfc,0x3f,0xe0,0x00,0xff,0xdf,0xfe,0xff,0xf0,0x00,0x18,0xf0,0xef,0xc7,0xf8,0x00,0x19,0xe0,0xf7,
    0x83,0x38,0x00,0x1a,0xea,0x63,0x1b,0x3a,0x00,0x1c,0xce,0x67,0x7b,0xdb,0x00,0x18,0xdc,0x6b,0x73,0x9b,0x00,0x19,0xdc,0x73,
    0x61,0x9b,0x00,0x1a,0xd8,0x63,0x61,0xbb,0x00,0x1c,0xd8,0x67,0x61,0xdb,0x00,0x18,0xd8,0x6b,0x61,0x9b,0x00,0x19,0xd8,0x73,
    0x61,0x9b,0x00,0x1a,0xd8,0x63,0x61,0xbb,0x00,0x1c,0xd8,0x67,0x61,0xdb,0x00,0x18,0xd8,0x6b,0x61,0x9b,0x00,0x19,0xd8,0x73,
    0x61,0x9b,0x00,0x1a,0xd8,0x63,0x61,0xbb,0x00,0x1c,0xd8,0x67,0x61,0xdb,0x00,0x18,0xc0,0x6b,0x01,0x98,0x00,0xff,0xfb,0xff,
    0xcf,0xff,0x00,0xff,0xfb,0xff,0xcf,0xff,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1f,0xff,0x7f,0xf9,0xff,0xe0,0x1f,0xff,0x7f,
    0xf9,0xff,0xe0,0x00,0x03,0xf0,0x00,0xff,0xcf,0xfc,0x00,0xff,0xdf,0xfe,0x00,0x18,0xf0,0xee,0x00,0x19,0xe0,0x77,0x00,0x1a,
    0xeb,0x67,0x40,0x1c,0xee,0x67,0x40,0x18,0xcc,0x6b,0x60,0x19,0xdc,0x73,0x60,0x1a,0xdc,0x63,0x60,0x1c,0xd8,0x67,0x60,0x18,
    0xd8,0x6b,0x60,0x19,0xd8,0x73,0x60,0x1a,0xd8,0x63,0x60,0x1c,0xd8,0x67,0x60,0x18,0xd8,0x6b,0x60,0x19,0xd8,0x73,0x60,0x1a,
    0xd8,0x63,0x60,0x1c,0xd8,0x67,0x60,0x18,0xc0,0x6b,0x00,0xff,0xf9,0xff,0xe0,0xff,0xf9,0xff,0xe0,0x00,0x00,0x00,0x00,0x1f,
    0xff,0x3f,0xfc,0x1f,0xff,0x3f,0xfc,0x01,0xfe,0x00,0x00,0x07,0xff,0xc0,0x00,0x1f,0xc7,0xe0,0x00,0x3f,0x93,0xf0,0x00,0x7b,
    0x39,0xf8,0x00,0x77,0x79,0xfc,0x00,0xef,0x71,0x9c,0x00,0xf7,0x61,0x9e,0x00,0xe6,0x61,0xae,0x80,0xc6,0xe1,0xc6,0x80,0xce,
    0xe1,0x8e,0xc0,0xd6,0xc1,0x96,0xc0,0xe6,0xc1,0xa6,0xc0,0xc6,0x41,0xce,0xc0,0xef,0x41,0x8e,0xc0,0xf7,0x41,0x9c,0xc0,0x73,
    0x41,0xbd,0xc0,0x7f,0x21,0xf9,0xc0,0x3f,0x83,0xf3,0x80,0x1f,0xc7,0xe7,0x80,0x07,0xff,0xcf,0x00,0x01,0xfe,0x1e,0x00,0x00,
    0x00,0xfc,0x00,0x00,0xff,0xf8,0x00,0x00,0x3f,0xc0,0x00,0x00,0x0f,0xe0,0x00,0xff,0xdf,0xf8,0x00,0xff,0xf1,0xfc,0x00,0x18,
    0xe0,0xfe,0x00,0x19,0xca,0x7f,0x00,0x1a,0xde,0x67,0x00,0x1c,0xdc,0x77,0x80,0x18,0xd8,0x7b,0xa0,0x19,0xd8,0x31,0xa0,0x1a,
    0xd8,0x33,0xb0,0x1c,0xd8,0x35,0xb0,0x18,0xd8,0x39,0xb0,0x19,0xd8,0x31,0xb0,0x1a,0xd8,0x33,0xb0,0x1c,0xd8,0x77,0xb0,0x18,
    0xd8,0x7b,0xb0,0x19,0xd8,0x77,0x30,0x1a,0xc8,0x6f,0x70,0x1c,0xe0,0xfe,0x70,0x18,0xf1,0xfc,0xe0,0x19,0xdf,0xf9,0xe0,0x1a,
    0xcf,0xe3,0xc0,0x1c,0xc0,0x0f,0x80,0x18,0xdb,0xff,0x00,0x19,0xd9,0xfc,0x00,0x1a,0xd8,0x00,0x00,0x1c,0xd8,0x00,0x00,0x18,
    0xc0,0x00,0x00,0xff,0xf8,0x00,0x00,0xff,0xf8,0x00,0x00,0x00,0x00,0x00,0x00,0x1f,0xff,0x00,0x00,0x03,0xf8,0x00,0x00,0x0f,
    0xfd,0xff,0x80,0x1f,0x87,0xff,0x80,0x3f,0x33,0x9c,0x00,0x7b,0x7b,0xad,0xf0,0x77,0x71,0xcd,0xf0,0xef,0x61,0x8d,0x80,0xf7,
    0x61,0x9d,0x80,0xe6,0x61,0xad,0x80,0xc6,0xe1,0xcd,0x80,0xce,0xe1,0x8d,0x80,0xd6,0xc1,0x9d,0x80,0xe6,0xc1,0xad,0x80,0xc6,
    0x41,0xcd,0x80,0xef,0x41,0x8d,0x80,0xf7,0x41,0x9d,0x80,0x73,0x41,0xad,0x80,0x7f,0x23,0xcd,0x80,0x3f,0x83,0x8d,0x80,0x1f,
    0xc7,0x9d,0x80,0x0f,0xfd,0xad,0x80,0x03,0xf9,0xcd,0x80,0x00,0x01,0x8d,0x80,0x01,0xfd,0x9d,0x80,0x00,0x7d,0xad,0x80,0x00,
    0x01,0xcd,0x80,0x00,0x01,0x8d,0x80,0x00,0x01,0x9c,0x00,0x00,0x0f,0xff,0x80,0x00,0x0f,0xff,0x80,0x00,0x00,0x00,0x00,0x00,
    0x01,0xff,0xf0,0x00,0x03,0xf0,0xff,0xcf,0xf0,0xff,0xdf,0xf0,0x18,0xf8,0x76,0x19,0xf1,0x36,0x1a,0x63,0xb6,0x1c,0xef,0x06,
    0x18,0xee,0x06,0x19,0xcc,0x06,0x1a,0xdc,0x00,0x1c,0xdc,0x00,0x18,0xd8,0x00,0x19,0xd8,0x00,0x1a,0xd8,0x00,0x1c,0xd8,0x00,
    0x18,0xd8,0x00,0x19,0xd8,0x00,0x1a,0xd8,0x00,0x1c,0xd8,0x00,0x18,0xc0,0x00,0xff,0xfc,0x00,0xff,0xfc,0x00,0x00,0x00,0x00,
    0x1f,0xff,0x80,0x1f,0xff,0x80,0x07,0xfe,0x00,0x3f,0xff,0xc0,0x7e,0x07,0xc0,0xfc,0xf1,0xc0,0xed,0xfd,0xd8,0xcc,0xc0,0xd8,
    0xce,0x00,0x18,0xdf,0xc0,0x38,0xe7,0xfc,0x18,0xf4,0xff,0x00,0x7c,0x8f,0x80,0x3f,0xd3,0xc0,0x0f,0xfb,0xc0,0x00,0xfc,0xe0,
    0x06,0x1c,0xe8,0xc1,0xcd,0xe8,0xc0,0x0e,0xec,0xe0,0x0d,0xcc,0xf0,0x0f,0xdc,0xf8,0x3f,0x9c,0xff,0xff,0x38,0x1f,0xf8,0x78,
    0x00,0x03,0xf0,0x1f,0xff,0xe0,0x03,0xff,0x00,0x1f,0xc0,0x00,0x1f,0xc0,0x00,0x1a,0xc0,0x00,0x1c,0xd8,0x00,0x18,0xd8,0x00,
    0x19,0xc0,0x00,0xfa,0xff,0x00,0xfc,0xff,0x00,0x18,0xc0,0x00,0x19,0xdf,0xe0,0x1a,0xdf,0xe0,0x1c,0xd8,0x00,0x18,0xd8,0x00,
    0x19,0xd8,0x00,0x1a,0xd8,0x00,0x1c,0xd8,0x00,0x18,0xd8,0x00,0x19,0xd8,0x00,0x1a,0xd8,0x00,0x1c,0xd8,0x00,0x18,0xd8,0x00,
    0x19,0xd8,0x00,0x1e,0xdb,0x80,0x1c,0xd3,0x80,0x0f,0xc7,0x80,0x0f,0xff,0x30,0x03,0xfc,0x70,0x00,0x00,0xf0,0x01,0xff,0xe0,
    0x00,0x7f,0x80,0xff,0xc3,0xff,0x00,0xff,0xc3,0xff,0x00,0x18,0xc0,0x6b,0x00,0x19,0xd8,0x73,0x60,0x1a,0xd8,0x63,0x60,0x1c,
    0xd8,0x67,0x60,0x18,0xd8,0x6b,0x60,0x19,0xd8,0x73,0x60,0x1a,0xd8,0x63,0x60,0x1c,0xd8,0x67,0x60,0x18,0xd8,0x6b,0x60,0x19,
    0xd8,0x73,0x60,0x1a,0xd8,0x63,0x60,0x1c,0xd8,0x67,0x60,0x18,0xd8,0x6b,0x60,0x1d,0xd8,0xf3,0x60,0x1e,0xc8,0xe3,0x60,0x0e,
    0xe1,0xe7,0x60,0x0f,0xff,0x6b,0x00,0x07,0xfe,0x7f,0xe0,0x01,0xf8,0x7f,0xe0,0x00,0x03,0x00,0x00,0x00,0xff,0xcf,0xfc,0x00,
    0x3f,0x0f,0xfc,0xff,0xf0,0x7f,0x80,0xff,0xf0,0x7f,0x80,0x1e,0xc0,0x0e,0x00,0x1c,0xce,0x0c,0xf0,0x0c,0xee,0x1d,0xf0,0x0f,
    0xe8,0x19,0xc0,0x0e,0x60,0x39,0x80,0x06,0x74,0x3b,0x80,0x07,0xf0,0x33,0x00,0x07,0x38,0x77,0x00,0x03,0xba,0x77,0x00,0x03,
    0xd8,0xe6,0x00,0x01,0x9c,0xee,0x00,0x01,0xdc,0xce,0x00,0x01,0xef,0xdc,0x00,0x00,0xef,0xdc,0x00,0x00,0xeb,0x98,0x00,0x00,
    0x73,0xb8,0x00,0x00,0x73,0x38,0x00,0x00,0x7f,0x70,0x00,0x00,0x3f,0x70,0x00,0x00,0x00,0x60,0x00,0x00,0x0f,0xe0,0x00,0x00,
    0x07,0xe0,0x00,0xff,0xe0,0x7c,0x1f,0xe0,0xff,0xe0,0x7c,0x1f,0xe0,0x3d,0x80,0x6c,0x03,0x80,0x39,0x9c,0xee,0x83,0x3c,0x19,
    0xdc,0xfe,0x87,0x7c,0x1f,0xd0,0xe6,0x07,0x70,0x1c,0xc1,0xf7,0x46,0x60,0x0c,0xe9,0xff,0x4e,0xe0,0x0f,0xe9,0xb3,0x0e,0xe0,
    0x0e,0x63,0xbb,0x8c,0xc0,0x06,0x73,0x3f,0x9d,0xc0,0x07,0xf3,0x19,0x9d,0xc0,0x07,0x37,0x5d,0xd9,0x80,0x03,0x3e,0x5f,0xfb,
    0x80,0x03,0xfe,0x4c,0xfb,0x80,0x03,0x8e,0xee,0xb3,0x00,0x01,0x9c,0xcf,0x77,0x00,0x01,0xfd,0xc6,0x77,0x00,0x01,0xdd,0xc7,
    0x66,0x00,0x00,0xf9,0x87,0xee,0x00,0x00,0xfb,0x83,0xee,0x00,0x00,0x03,0x80,0x0c,0x00,0x00,0x1f,0x00,0xfc,0x00,0x00,0x1f,
    0x00,0x7c,0x00,0xff,0xf9,0xfe,0x00,0xff,0xf9,0xfe,0x00,0x1c,0x60,0x70,0x00,0x0e,0xe6,0x67,0xc0,0x0f,0x70,0xef,0xc0,0x07,
    0x79,0xce,0x00,0x03,0xf9,0x8c,0x00,0x03,0xdf,0x9c,0x00,0x01,0xdf,0x38,0x00,0x00,0xe6,0x30,0x00,0x00,0xc7,0x70,0x00,0x00,
    0xcf,0x20,0x00,0x01,0xfb,0x80,0x00,0x01,0xfb,0xc0,0x00,0x03,0x9d,0xc0,0x00,0x07,0x1e,0xe0,0x00,0x06,0x0f,0xf0,0x00,0x0e,
    0x66,0x70,0x00,0x1c,0x06,0x78,0x00,0xff,0x9f,0xff,0x00,0xff,0x9f,0xff,0x00,0x00,0x00,0x00,0x00,0x1f,0xf3,0xff,0xe0,0x1f,
    0xf3,0xff,0xe0,0xff,0xf0,0x7f,0x80,0xff,0xf0,0x7f,0x80,0x1e,0xc0,0x0c,0x00,0x1c,0xee,0x0d,0xf0,0x0e,0xee,0x1d,0xf0,0x0f,
    0x60,0x19,0x80,0x07,0x74,0x39,0x80,0x07,0x70,0x33,0x80,0x03,0xb8,0x33,0x00,0x03,0xba,0x77,0x00,0x03,0xb8,0x66,0x00,0x01,
    0xdc,0xe6,0x00,0x01,0xdc,0xce,0x00,0x00,0xfe,0xcc,0x00,0x00,0xef,0xdc,0x00,0x00,0x67,0x98,0x00,0x00,0x7b,0x98,0x00,0x00,
    0x73,0x38,0x00,0x00,0x3f,0x70,0x00,0x00,0x3f,0x70,0x00,0x00,0x1e,0x60,0x00,0x00,0x1e,0xe0,0x00,0x00,0x0c,0xe0,0x00,0x00,
    0x0d,0xc0,0x00,0x18,0x1d,0xc0,0x00,0x18,0x19,0x80,0x00,0x1c,0x39,0x80,0x00,0x1f,0xf3,0x80,0x00,0x0f,0xc3,0x00,0x00,0x00,
    0x07,0x00,0x00,0x03,0xfe,0x00,0x00,0x7f,0xff,0xf0,0x7f,0xff,0xf0,0x60,0x0c,0xf0,0x6f,0xdd,0xf6,0x6f,0x9f,0xe6,0x6c,0x3d,
    0xce,0x0c,0x7b,0x9e,0x0c,0xf7,0xbc,0x0c,0xe7,0x38,0x01,0xce,0x70,0x03,0xde,0xf0,0x07,0xbc,0xe0,0x07,0x39,0xc0,0x0e,0x73,
    0xc0,0x1e,0xf7,0x80,0x1d,0xe7,0x30,0x3b,0xce,0x30,0x7d,0xde,0x30,0x79,0x80,0x36,0xff,0xff,0xf6,0xff,0xff,0xf6,0x00,0x00,
    0x06,0x1f,0xff,0xfe,0x1f,0xff,0xfe,0x00,0x3f,0xe0,0x00,0xff,0xe0,0x01,0xfe,0x00,0x01,0xfc,0xfc,0x01,0xdd,0xfc,0x03,0x99,
    0xc0,0x03,0x9b,0x80,0x03,0x3b,0x80,0x03,0x5b,0x00,0x03,0x9b,0x00,0x03,0x1b,0x00,0x03,0x3b,0x00,0x03,0x5b,0x00,0x03,0x9b,
    0x00,0x03,0x3b,0x00,0x03,0xfb,0x00,0x0f,0xf3,0x00,0xff,0xc7,0x00,0xff,0xc7,0x00,0x0f,0xf2,0x00,0x03,0xf8,0x00,0x1b,0xb8,
    0x00,0x03,0x1a,0x00,0x03,0x3b,0x00,0x03,0x5b,0x00,0x03,0x9b,0x00,0x03,0x1b,0x00,0x03,0x3b,0x00,0x03,0x5b,0x00,0x03,0x9b,
    0x00,0x03,0x9b,0x00,0x01,0xb9,0x00,0x01,0xdc,0x00,0x01,0xfe,0x00,0x00,0xff,0xe0,0x00,0x3f,0xe0,0x00,0x00,0x00,0x00,0x1f,
    0xfc,0x00,0x07,0xfc,0xf0,0xf0,0xf0,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,
    0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0xf6,0x06,0xff,0x80,0x00,
    0xff,0xe0,0x00,0x0f,0xf0,0x00,0x06,0x70,0x00,0x16,0xb4,0x00,0x07,0x36,0x00,0x06,0x36,0x00,0x06,0x76,0x00,0x06,0xb6,0x00,
    0x07,0x36,0x00,0x06,0x36,0x00,0x06,0x76,0x00,0x07,0xb6,0x00,0x07,0x32,0x00,0x03,0xba,0x00,0x03,0xf8,0x00,0x01,0xdc,0x00,
    0x00,0xdf,0xc0,0x00,0xff,0xc0,0x01,0xdc,0x00,0x03,0xf9,0xf8,0x03,0xbb,0xf8,0x07,0x33,0x80,0x07,0x77,0x00,0x06,0xb7,0x00,
    0x07,0x36,0x00,0x06,0x36,0x00,0x06,0x76,0x00,0x06,0xb6,0x00,0x07,0x36,0x00,0x06,0x36,0x00,0x06,0x76,0x00,0x06,0xf6,0x00,
    0x0f,0xf6,0x00,0xff,0xe6,0x00,0xff,0x8e,0x00,0x00,0x3e,0x00,0x1f,0xfc,0x00,0x1f,0xf0,0x00,0x07,0xc0,0x00,0x00,0x1f,0xf8,
    0x01,0x80,0x7f,0xff,0x07,0x80,0xff,0xff,0xff,0x80,0xf0,0x3f,0xff,0x30,0xc7,0x8f,0xfe,0x70,0x1f,0xe1,0xf8,0xf0,0x1e,0x04,
    0x03,0xe0,0x18,0x01,0xff,0xc0,0x00,0x00,0x3f,0x00,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,
    0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,
    0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,
    0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,
    0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,
    0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,
    0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,
    0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,
    0xff,0xfe,0xff,0xff,0xff,0xfe,0xff,0xff,0xff,0xfe,
};

constexpr GlyphRecord k_ornate_glyphs[] = {
    {0x0020, 14, 0, 0, 0, 0, 0},
    {0x0021, 18, 5, 9, 10, 32, 0},
    {0x0022, 21, 4, 9, 16, 14, 64},
    {0x0023, 34, 3, 9, 31, 32, 92},
    {0x0024, 28, 4, 8, 23, 38, 220},
    {0x0025, 38, 1, 8, 39, 33, 334},
    {0x0026, 36, 2, 8, 36, 33, 499},
    {0x0027, 12, 4, 9, 7, 14, 664},
    {0x0028, 19, 4, 8, 16, 40, 678},
    {0x0029, 19, 2, 8, 16, 40, 758},
    {0x002a, 21, 1, 8, 22, 21, 838},
    {0x002b, 34, 4, 13, 28, 28, 901},
    {0x002c, 14, 1, 32, 12, 16, 1013},
    {0x002d, 17, 2, 25, 15, 8, 1045},
    {0x002e, 14, 3, 31, 11, 10, 1061},
    {0x002f, 15, 0, 9, 17, 36, 1081},
    {0x0030, 28, 2, 8, 27, 33, 1189},
    {0x0031, 28, 5, 8, 22, 33, 1321},
    {0x0032, 28, 3, 8, 24, 33, 1420},
    {0x0033, 28, 3, 8, 25, 33, 1519},
    {0x0034, 28, 2, 8, 27, 33, 1651},
    {0x0035, 28, 3, 9, 25, 32, 1783},
    {0x0036, 28, 3, 8, 26, 33, 1911},
    {0x0037, 28, 3, 9, 25, 32, 2043},
    {0x0038, 28, 2, 8, 27, 33, 2171},
    {0x0039, 28, 2, 8, 26, 33, 2303},
    {0x003a, 15, 4, 18, 10, 23, 2435},
    {0x003b, 15, 1, 18, 13, 30, 2481},
    {0x003c, 34, 4, 14, 28, 26, 2541},
    {0x003d, 34, 4, 19, 28, 15, 2645},
    {0x003e, 34, 4, 14, 28, 26, 2705},
    {0x003f, 23, 3, 8, 22, 33, 2809},
    {0x0040, 40, 3, 10, 37, 38, 2908},
    {0x0041, 31, 0, 9, 34, 32, 3098},
    {0x0042, 34, 2, 9, 33, 32, 3258},
    {0x0043, 32, 2, 8, 31, 33, 3418},
    {0x0044, 35, 2, 9, 34, 32, 3550},
    {0x0045, 30, 2, 9, 29, 32, 3710},
    {0x0046, 28, 2, 9, 29, 32, 3838},
    {0x0047, 34, 2, 8, 32, 33, 3966},
    {0x0048, 38, 2, 9, 37, 32, 4098},
    {0x0049, 19, 2, 9, 18, 32, 4258},
    {0x004a, 19, -3, 9, 23, 39, 4354},
    {0x004b, 35, 2, 9, 37, 32, 4471},
    {0x004c, 28, 2, 9, 28, 32, 4631},
    {0x004d, 44, 2, 9, 43, 32, 4759},
    {0x004e, 37, 2, 9, 36, 32, 4951},
    {0x004f, 35, 2, 8, 34, 33, 5111},
    {0x0050, 30, 2, 9, 30, 32, 5276},
    {0x0051, 35, 2, 8, 34, 40, 5404},
    {0x0052, 33, 2, 9, 34, 32, 5604},
    {0x0053, 29, 3, 8, 26, 33, 5764},
    {0x0054, 30, 0, 9, 32, 32, 5896},
    {0x0055, 35, 1, 9, 36, 32, 6024},
    {0x0056, 31, 0, 9, 35, 32, 6184},
    {0x0057, 45, 0, 9, 48, 32, 6344},
    {0x0058, 31, 0, 9, 34, 32, 6536},
    {0x0059, 29, 0, 9, 32, 32, 6696},
    {0x005a, 29, 1, 9, 30, 32, 6824},
    {0x005b, 19, 5, 8, 14, 39, 6952},
    {0x005c, 15, 0, 9, 17, 36, 7030},
    {0x005d, 19, 3, 8, 14, 39, 7138},
    {0x005e, 34, 5, 9, 27, 14, 7216},
    {0x005f, 20, 0, 43, 23, 5, 7272},
    {0x0060, 20, 3, 6, 13, 10, 7287},
    {0x0061, 26, 2, 16, 26, 25, 7307},
    {0x0062, 28, 1, 8, 28, 33, 7407},
    {0x0063, 24, 2, 16, 23, 25, 7539},
    {0x0064, 28, 2, 8, 28, 33, 7614},
    {0x0065, 25, 2, 16, 25, 25, 7746},
    {0x0066, 17, 1, 8, 21, 33, 7846},
    {0x0067, 28, 2, 16, 28, 32, 7945},
    {0x0068, 29, 1, 8, 30, 33, 8073},
    {0x0069, 15, 1, 8, 16, 33, 8205},
    {0x006a, 14, -3, 8, 17, 40, 8271},
    {0x006b, 28, 1, 8, 30, 33, 8391},
    {0x006c, 15, 1, 8, 16, 33, 8523},
    {0x006d, 42, 1, 16, 43, 25, 8589},
    {0x006e, 29, 1, 16, 30, 25, 8739},
    {0x006f, 27, 2, 16, 26, 25, 8839},
    {0x0070, 28, 1, 16, 28, 32, 8939},
    {0x0071, 28, 2, 16, 28, 32, 9067},
    {0x0072, 21, 1, 16, 23, 25, 9195},
    {0x0073, 23, 2, 16, 22, 25, 9270},
    {0x0074, 18, 1, 11, 20, 30, 9345},
    {0x0075, 29, 1, 17, 30, 24, 9435},
    {0x0076, 23, -1, 17, 28, 24, 9531},
    {0x0077, 34, 0, 17, 38, 24, 9627},
    {0x0078, 24, 0, 17, 27, 24, 9747},
    {0x0079, 23, -1, 17, 28, 31, 9843},
    {0x007a, 23, 1, 17, 23, 24, 9967},
    {0x007b, 26, 3, 8, 22, 39, 10039},
    {0x007c, 15, 5, 7, 7, 41, 10156},
    {0x007d, 26, 4, 8, 21, 39, 10197},
    {0x007e, 34, 4, 22, 28, 10, 10314},
    {0x2588, 31, 0, 0, 31, 48, 10354},
};

}  // namespace

const FaceRecord kFaces[] = {
    {"sans-plain", k_sans_plain_glyphs, sizeof(k_sans_plain_glyphs) / sizeof(GlyphRecord), k_sans_plain_bits},
    {"serif-display", k_serif_display_glyphs, sizeof(k_serif_display_glyphs) / sizeof(GlyphRecord), k_serif_display_bits},
    {"ornate", k_ornate_glyphs, sizeof(k_ornate_glyphs) / sizeof(GlyphRecord), k_ornate_bits},
};

const std::size_t kFaceCount = sizeof(kFaces) / sizeof(FaceRecord);

}  // namespace glyphclash::compositor::font_data
