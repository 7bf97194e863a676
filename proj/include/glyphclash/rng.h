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

#ifndef GLYPHCLASH_RNG_H_
#define GLYPHCLASH_RNG_H_

#include <cstdint>

namespace glyphclash {

// SplitMix64 (Steele, Lea, Flood 2014). Layouts derived from it must
// replicate across implementations, so the constants and the bounded-draw
// rule below are part of the file format.
class RngState {
 public:
  explicit RngState(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish integer in [0, bound) by plain modulo. bound must be >= 1.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace glyphclash

#endif  // GLYPHCLASH_RNG_H_
