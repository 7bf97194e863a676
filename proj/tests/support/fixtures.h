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


// Generators, oracles and on-disk fixtures shared by the unit tests and the
// acceptance binary.

#ifndef GLYPHCLASH_TESTS_SUPPORT_FIXTURES_H_
#define GLYPHCLASH_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "glyphclash/attack_dsl.h"
#include "glyphclash/compositor.h"
#include "glyphclash/harness.h"
#include "glyphclash/image.h"

namespace glyphclash::testing {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);
double uniform_real(Rng& rng, double lo, double hi);

// A spec that parse_spec accepts (intrinsic rules only; not fitted to any
// canvas). Covers every layer op and every variant.
dsl::AttackSpec random_spec(Rng& rng);

// Source-over with exact rational arithmetic and round-half-up, written
// independently of the library's integer formula.
ImageBuffer::Pixel oracle_over(ImageBuffer::Pixel src, ImageBuffer::Pixel dst);

// Twenty small 0/1 bitmaps: degenerate shapes, lines, blobs, glyph masks.
std::vector<compositor::Bitmap> bitmap_fixtures();

// Deterministic RGBA noise with full alpha.
ImageBuffer noise_image(int width, int height, std::uint64_t seed);

// Procedural "apple" on an off-white background.
ImageBuffer apple_image(int width, int height);

// Writes base images, a texture and an icon under `dir` plus a manifest
// with `entries` entries cycling through all layer ops, and returns the
// manifest path. Outputs go to dir/out/. One mock model, "mock".
std::filesystem::path write_fixture_corpus(const std::filesystem::path& dir,
                                           int entries);

// A fresh empty directory under the system temp dir.
std::filesystem::path make_temp_dir(const std::string& tag);

// Number of canvas pixels a single unrotated TextOverlay touches, computed
// from the font layout alone.
std::uint64_t text_ink_oracle(const dsl::TextOverlay& layer, int canvas_w,
                              int canvas_h);

// Path of the glyphclash CLI built alongside the tests.
std::filesystem::path cli_path();

// Contents of tests/golden/<name> in the source tree.
std::string golden_file(const std::string& name);

}  // namespace glyphclash::testing

#endif  // GLYPHCLASH_TESTS_SUPPORT_FIXTURES_H_
