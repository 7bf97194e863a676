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


#include "support/fixtures.h"

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <string>
#include <utility>

#include "glyphclash/font.h"
#include "json.hpp"

namespace glyphclash::testing {
namespace {

using dsl::Rgba;

const std::vector<std::string> kWords = {"bee",   "apple", "iPod", "web",   "zebra",
                                         "café",  "→ok",   "A B",  "spider", "x"};
const std::vector<std::string> kPaths = {"tex/a.png", "icons/b.png", "c.png",
                                         "deep/dir/d.png"};
const std::vector<std::string> kNotes = {"plain", "quote \" and \\ slash", "tab\there",
                                         "ünïcödé", "line\nbreak"};

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(v.size()) - 1))];
}

bool coin(Rng& rng) { return uniform_int(rng, 0, 1) == 1; }

Rgba random_rgba(Rng& rng) {
  return {static_cast<std::uint8_t>(uniform_int(rng, 0, 255)),
          static_cast<std::uint8_t>(uniform_int(rng, 0, 255)),
          static_cast<std::uint8_t>(uniform_int(rng, 0, 255)),
          static_cast<std::uint8_t>(uniform_int(rng, 0, 255))};
}

dsl::Point random_point(Rng& rng) {
  return {uniform_int(rng, 0, 2000), uniform_int(rng, 0, 2000)};
}

const std::string& random_font(Rng& rng) { return pick(rng, font::font_ids()); }

std::size_t visible_glyphs(const std::string& text) {
  std::u32string cps;
  font::decode_utf8(text, &cps);
  std::size_t n = 0;
  for (char32_t c : cps) n += (c == U' ' || c == U'\t' || c == U'\n' || c == U'\r') ? 0 : 1;
  return n;
}

dsl::LayerOp random_layer(Rng& rng) {
  switch (uniform_int(rng, 0, 8)) {
    case 0: {
      dsl::TextOverlay l;
      l.text = pick(rng, kWords);
      l.font_id = random_font(rng);
      l.size_px = uniform_int(rng, 1, 300);
      l.color = random_rgba(rng);
      if (coin(rng)) l.outline = random_rgba(rng);
      l.anchor = random_point(rng);
      l.rotation_deg = coin(rng) ? 90.0 * uniform_int(rng, 0, 3) : uniform_real(rng, 0, 360);
      if (coin(rng)) l.warp = dsl::Warp{uniform_real(rng, 0, 20), uniform_real(rng, 0.5, 200)};
      return l;
    }
    case 1: {
      dsl::ImageFontText l;
      l.text = pick(rng, kWords);
      l.texture = pick(rng, kPaths);
      if (coin(rng)) {
        std::vector<std::string> t;
        for (std::size_t i = 0; i < visible_glyphs(l.text); ++i) t.push_back(pick(rng, kPaths));
        l.per_glyph_textures = std::move(t);
      }
      l.font_id = random_font(rng);
      l.size_px = uniform_int(rng, 1, 300);
      l.anchor = random_point(rng);
      l.mode = coin(rng) ? dsl::ImageFontMode::kFill : dsl::ImageFontMode::kDecorate;
      return l;
    }
    case 2: {
      dsl::FloodText l;
      const int n = uniform_int(rng, 1, 5);
      for (int i = 0; i < n; ++i) l.words.push_back(pick(rng, kWords));
      l.count = uniform_int(rng, 1, 200);
      const int lo = uniform_int(rng, 1, 60);
      l.size_px_range = {lo, lo + uniform_int(rng, 0, 60)};
      l.color = random_rgba(rng);
      l.collision_free = coin(rng);
      l.font_id = random_font(rng);
      return l;
    }
    case 3: {
      dsl::IconOverlay l;
      l.icon = pick(rng, kPaths);
      l.anchor = random_point(rng);
      l.scale = uniform_real(rng, 0.01, 64);
      if (coin(rng)) l.tint = random_rgba(rng);
      return l;
    }
    case 4: {
      dsl::Rotation l;
      l.degrees = coin(rng) ? 90.0 * uniform_int(rng, 0, 3) : uniform_real(rng, 0, 360);
      l.resample = coin(rng) ? dsl::Resample::kNearest : dsl::Resample::kBilinear;
      return l;
    }
    case 5: {
      dsl::PositionedGlyphs l;
      const int n = uniform_int(rng, 0, 4);
      for (int i = 0; i < n; ++i) {
        dsl::PlacedGlyph g;
        g.character = pick(rng, std::vector<std::string>{"a", "Z", "é", "→", "?"});
        g.x = uniform_int(rng, 0, 1000);
        g.y = uniform_int(rng, 0, 1000);
        g.size_px = uniform_int(rng, 1, 200);
        g.color = random_rgba(rng);
        l.glyphs.push_back(std::move(g));
      }
      l.font_id = random_font(rng);
      return l;
    }
    case 6: {
      dsl::MaskPatch l;
      l.shape = coin(rng) ? dsl::PatchShape::kRect : dsl::PatchShape::kEllipse;
      l.bounds = {uniform_int(rng, 0, 500), uniform_int(rng, 0, 500), uniform_int(rng, 0, 500),
                  uniform_int(rng, 0, 500)};
      l.fill = random_rgba(rng);
      return l;
    }
    case 7: {
      dsl::ColorRemap l;
      const int n = uniform_int(rng, 0, 4);
      for (int i = 0; i < n; ++i) l.palette.push_back({random_rgba(rng), random_rgba(rng)});
      l.tolerance = coin(rng) ? uniform_int(rng, 0, 50) : uniform_real(rng, 0, 442);
      return l;
    }
    default: {
      dsl::Figurative l;
      switch (uniform_int(rng, 0, 3)) {
        case 0:
          l.params = dsl::AsciiArtParams{uniform_int(rng, 2, 32),
                                         pick(rng, std::vector<std::string>{"@%#*+=-:. ", "#.", "█▓▒░ "}),
                                         random_font(rng)};
          break;
        case 1:
          l.params = dsl::DotArtParams{uniform_int(rng, 2, 32), uniform_int(rng, 0, 255)};
          break;
        case 2:
          l.params = dsl::SkeletonParams{uniform_int(rng, 0, 255)};
          break;
        default:
          l.params = dsl::PaintByNumbersParams{uniform_int(rng, 2, 16), uniform_int(rng, 1, 64)};
          break;
      }
      return l;
    }
  }
}

void put_png(const std::filesystem::path& path, const ImageBuffer& image) {
  save_image(image, path);
}

}  // namespace

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

dsl::AttackSpec random_spec(Rng& rng) {
  dsl::AttackSpec spec;
  spec.id = "spec-" + std::to_string(rng() % 100000);
  const auto variants = dsl::all_variants();
  spec.category.variant =
      variants[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(variants.size()) - 1))];
  spec.category.category = dsl::category_of(spec.category.variant);
  spec.base_image = pick(rng, kPaths);
  const int n = uniform_int(rng, 1, 4);
  for (int i = 0; i < n; ++i) spec.layers.push_back(random_layer(rng));
  spec.seed = rng();
  if (coin(rng)) spec.target_label = pick(rng, kWords);
  if (coin(rng)) spec.notes = pick(rng, kNotes);
  return spec;
}

ImageBuffer::Pixel oracle_over(ImageBuffer::Pixel src, ImageBuffer::Pixel dst) {
  // Fractions in units of 1/255: alpha_o = as + ad * (1 - as).
  struct Frac {
    long long num;
    long long den;
  };
  auto round_half_up = [](Frac f) {
    long long q = f.num / f.den;
    if (2 * (f.num - q * f.den) >= f.den) ++q;
    return static_cast<std::uint8_t>(q);
  };
  const long long as = src[3];
  const long long ad = dst[3];
  const Frac alpha_o{as * 255 + ad * (255 - as), 255 * 255};  // fraction of 1
  if (alpha_o.num == 0) return {0, 0, 0, 0};
  ImageBuffer::Pixel out{};
  for (int c = 0; c < 3; ++c) {
    // (Cs as + Cd ad (1 - as)) / alpha_o, all over 255^2.
    const Frac premul{src[c] * as * 255 + dst[c] * ad * (255 - as), 255 * 255};
    out[c] = round_half_up({premul.num, alpha_o.num});
  }
  out[3] = round_half_up({alpha_o.num * 255, alpha_o.den});
  return out;
}

std::vector<compositor::Bitmap> bitmap_fixtures() {
  using compositor::Bitmap;
  std::vector<Bitmap> out;
  auto make = [](int w, int h, auto&& inside) {
    Bitmap b{w, h, std::vector<std::uint8_t>(static_cast<std::size_t>(w) * h, 0)};
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) b.bits[static_cast<std::size_t>(y) * w + x] = inside(x, y) ? 1 : 0;
    }
    return b;
  };
  out.push_back(make(1, 1, [](int, int) { return false; }));
  out.push_back(make(1, 1, [](int, int) { return true; }));
  out.push_back(make(7, 7, [](int x, int y) { return x == 3 && y == 3; }));
  out.push_back(make(12, 12, [](int, int) { return true; }));
  out.push_back(make(15, 9, [](int x, int y) { return y >= 3 && y <= 5 && x >= 1 && x <= 13; }));
  out.push_back(make(9, 15, [](int x, int y) { return x >= 3 && x <= 5 && y >= 1 && y <= 13; }));
  out.push_back(make(17, 17, [](int x, int y) {
    return (std::abs(x - 8) <= 2 && y >= 1 && y <= 15) || (std::abs(y - 8) <= 2 && x >= 1 && x <= 15);
  }));
  out.push_back(make(21, 21, [](int x, int y) {
    const int d2 = (x - 10) * (x - 10) + (y - 10) * (y - 10);
    return d2 <= 81 && d2 >= 25;
  }));
  out.push_back(make(21, 21, [](int x, int y) { return (x - 10) * (x - 10) + (y - 10) * (y - 10) <= 64; }));
  out.push_back(make(14, 8, [](int x, int y) { return x >= 2 && x < 12 && y >= 2 && y < 6; }));
  out.push_back(make(14, 14, [](int x, int y) {
    return (x >= 2 && x <= 5 && y >= 2 && y <= 11) || (y >= 8 && y <= 11 && x >= 2 && x <= 11);
  }));
  out.push_back(make(16, 16, [](int x, int y) { return std::abs(x - y) <= 2 && x > 0 && x < 15; }));
  out.push_back(make(10, 10, [](int x, int y) { return (x + y) % 2 == 0; }));
  out.push_back(make(16, 12, [](int x, int y) { return x <= 1 || y <= 1 || x >= 14 || y >= 10; }));
  out.push_back(make(2, 2, [](int, int) { return true; }));
  // Seeded blobs.
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    Rng rng(seed);
    Bitmap b = make(24, 18, [](int, int) { return false; });
    for (int k = 0; k < 5; ++k) {
      const int cx = uniform_int(rng, 3, 20);
      const int cy = uniform_int(rng, 3, 14);
      const int r = uniform_int(rng, 2, 5);
      for (int y = 0; y < b.height; ++y) {
        for (int x = 0; x < b.width; ++x) {
          if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r) {
            b.bits[static_cast<std::size_t>(y) * b.width + x] = 1;
          }
        }
      }
    }
    out.push_back(std::move(b));
  }
  // Glyph masks.
  for (char32_t c : {U'A', U'g'}) {
    const font::TextLayout t = font::layout_text("sans-plain", std::u32string(1, c), 40);
    out.push_back(make(t.width, t.height, [&t](int x, int y) { return t.at(x, y) >= 128; }));
  }
  return out;
}

ImageBuffer noise_image(int width, int height, std::uint64_t seed) {
  Rng rng(seed);
  ImageBuffer img(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      img.set(x, y, {static_cast<std::uint8_t>(rng() & 0xff), static_cast<std::uint8_t>(rng() & 0xff),
                     static_cast<std::uint8_t>(rng() & 0xff), 255});
    }
  }
  return img;
}

ImageBuffer apple_image(int width, int height) {
  ImageBuffer img(width, height, ImageBuffer::Pixel{245, 245, 240, 255});
  const double cx = width / 2.0;
  const double cy = height * 0.55;
  const double r = std::min(width, height) * 0.36;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double d = std::hypot(x + 0.5 - cx, y + 0.5 - cy);
      if (d < r) {
        const int shade = static_cast<int>(40 * d / r);
        img.set(x, y, {static_cast<std::uint8_t>(150 - shade), static_cast<std::uint8_t>(200 - shade),
                       60, 255});
      }
    }
  }
  return img;
}

std::filesystem::path write_fixture_corpus(const std::filesystem::path& dir, int entries) {
  namespace fs = std::filesystem;
  fs::create_directories(dir / "img");
  put_png(dir / "img" / "apple.png", apple_image(96, 96));
  put_png(dir / "img" / "noise.png", noise_image(80, 64, 7));
  ImageBuffer checker(4, 4);
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 4; ++x) {
      checker.set(x, y, ((x / 2 + y / 2) % 2) ? ImageBuffer::Pixel{255, 255, 255, 255}
                                              : ImageBuffer::Pixel{200, 0, 0, 255});
    }
  }
  put_png(dir / "img" / "checker.png", checker);
  ImageBuffer icon(12, 12);
  for (int y = 2; y < 10; ++y) {
    for (int x = 2; x < 10; ++x) icon.set(x, y, {250, 200, 20, 200});
  }
  put_png(dir / "img" / "icon.png", icon);

  using nlohmann::json;
  const std::vector<json> layer_kinds = {
      json::parse(R"([{"op":"TextOverlay","text":"bee","size_px":24,"color":[0,0,0,255],"anchor":[10,30]}])"),
      json::parse(R"([{"op":"TextOverlay","text":"iPod","size_px":18,"color":[255,255,255,220],"outline":[0,0,0,255],"anchor":[5,5],"warp":{"amplitude_px":2.5,"wavelength_px":13}}])"),
      json::parse(R"([{"op":"TextOverlay","text":"up","size_px":20,"color":[30,30,200,255],"anchor":[40,40],"rotation_deg":30}])"),
      json::parse(R"([{"op":"FloodText","words":["pear","plum","fig"],"count":12,"size_px_range":[8,14],"color":[90,90,200,255],"collision_free":true}])"),
      json::parse(R"([{"op":"FloodText","words":["lime","kiwi"],"count":9,"size_px_range":[6,12],"color":[10,120,10,180],"collision_free":false},{"op":"TextOverlay","text":"bee","size_px":20,"color":[0,0,0,255],"anchor":[20,60]}])"),
      json::parse(R"([{"op":"ImageFontText","text":"web","texture":"img/checker.png","size_px":30,"anchor":[10,20],"mode":"fill"}])"),
      json::parse(R"([{"op":"ImageFontText","text":"web","texture":"img/checker.png","size_px":26,"anchor":[12,24],"mode":"decorate"}])"),
      json::parse(R"([{"op":"ImageFontText","text":"a b","texture":"img/checker.png","per_glyph_textures":["img/noise.png","img/checker.png"],"size_px":28,"anchor":[8,8],"mode":"fill"}])"),
      json::parse(R"([{"op":"IconOverlay","icon":"img/icon.png","anchor":[30,30],"scale":2.5}])"),
      json::parse(R"([{"op":"IconOverlay","icon":"img/icon.png","anchor":[5,50],"scale":0.7,"tint":[255,128,128,255]}])"),
      json::parse(R"([{"op":"TextOverlay","text":"bee","size_px":16,"color":[0,0,0,255],"anchor":[4,4]},{"op":"Rotation","degrees":30,"resample":"bilinear"}])"),
      json::parse(R"([{"op":"TextOverlay","text":"bee","size_px":16,"color":[0,0,0,255],"anchor":[4,4]},{"op":"Rotation","degrees":270,"resample":"nearest"}])"),
      json::parse(R"([{"op":"PositionedGlyphs","glyphs":[{"char":"b","x":10,"y":10,"size_px":20,"color":[0,0,0,255]},{"char":"e","x":30,"y":25,"size_px":28,"color":[200,0,0,255]}]}])"),
      json::parse(R"([{"op":"MaskPatch","shape":"ellipse","bounds":[20,20,40,30],"fill":[255,255,255,255]},{"op":"TextOverlay","text":"ok","size_px":14,"color":[0,0,0,255],"anchor":[28,28]}])"),
      json::parse(R"([{"op":"ColorRemap","palette":[{"from":[245,245,240,255],"to":[0,0,0,255]}],"tolerance":12}])"),
      json::parse(R"([{"op":"Figurative","kind":"ascii_art","params":{"cell_px":6,"charset":"@%#*+=-:. "}}])"),
      json::parse(R"([{"op":"Figurative","kind":"dot_art","params":{"spacing":5,"threshold":200}}])"),
      json::parse(R"([{"op":"Figurative","kind":"skeletonized","params":{"threshold":180}}])"),
      json::parse(R"([{"op":"Figurative","kind":"paint_by_numbers","params":{"k":4,"digit_px":8}}])"),
      json::parse(R"([{"op":"TextOverlay","text":"bee","size_px":30,"color":[0,0,0,128],"anchor":[15,35],"rotation_deg":90}])"),
  };
  const std::vector<std::pair<std::string, std::string>> categories = {
      {"typography", "oov"},         {"conceptual", "captcha_warp"}, {"typography", "orientation"},
      {"typography", "text_flood"},  {"typography", "text_flood"},   {"conceptual", "image_font"},
      {"conceptual", "image_font"},  {"conceptual", "image_font"},   {"imagery", "logo"},
      {"imagery", "word_image"},     {"typography", "orientation"},  {"typography", "orientation"},
      {"typography", "spelling"},    {"imagery", "masked"},          {"imagery", "masked"},
      {"conceptual", "ascii_art"},   {"figurative", "dot_art"},      {"figurative", "skeletonized"},
      {"imagery", "paint_by_numbers"}, {"typography", "size"}};

  json manifest;
  manifest["models"] = json::array(
      {{{"model_id", "mock"}, {"kind", "mock"}, {"mock", {{"baseline_label", "granny smith"}}}}});
  manifest["entries"] = json::array();
  for (int i = 0; i < entries; ++i) {
    const std::size_t k = static_cast<std::size_t>(i) % layer_kinds.size();
    const bool noise_base = (i / static_cast<int>(layer_kinds.size())) % 2 == 1;
    json spec;
    spec["id"] = "fixture-" + std::to_string(i);
    spec["category"] = {{"category", categories[k].first}, {"variant", categories[k].second}};
    spec["base_image"] = noise_base ? "img/noise.png" : "img/apple.png";
    spec["layers"] = layer_kinds[k];
    spec["seed"] = 1000 + i;
    spec["target_label"] = "bee";
    json entry;
    entry["spec"] = spec;
    entry["baseline_image"] = spec["base_image"];
    entry["output_path"] = "out/fixture-" + std::to_string(i) + ".png";
    manifest["entries"].push_back(std::move(entry));
  }
  const fs::path path = dir / "manifest.json";
  write_file(path, manifest.dump(2));
  return path;
}

std::filesystem::path make_temp_dir(const std::string& tag) {
  namespace fs = std::filesystem;
  static std::atomic<int> counter{0};
  const fs::path dir = fs::temp_directory_path() /
                       ("glyphclash-" + tag + "-" + std::to_string(::getpid()) + "-" +
                        std::to_string(counter++));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::uint64_t text_ink_oracle(const dsl::TextOverlay& layer, int canvas_w, int canvas_h) {
  const font::TextLayout t = font::layout_text(layer.font_id, layer.text, layer.size_px);
  std::uint64_t n = 0;
  for (int y = 0; y < t.height; ++y) {
    for (int x = 0; x < t.width; ++x) {
      const int cx = layer.anchor.x + x;
      const int cy = layer.anchor.y + y;
      // A pixel gets ink once the scaled alpha rounds to at least 1.
      if (cx < canvas_w && cy < canvas_h && 2 * layer.color.a * t.at(x, y) > 255) ++n;
    }
  }
  return n;
}

std::filesystem::path cli_path() { return GLYPHCLASH_CLI; }

std::string golden_file(const std::string& name) {
  return read_file(std::filesystem::path(GLYPHCLASH_SOURCE_DIR) / "tests" /
                   "golden" / name);
}

}  // namespace glyphclash::testing
