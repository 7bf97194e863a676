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


// Acceptance checks for the core library. Prints one PASS/FAIL line per
// criterion and exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "glyphclash/adapters.h"
#include "glyphclash/attack_dsl.h"
#include "glyphclash/compositor.h"
#include "glyphclash/font.h"
#include "glyphclash/harness.h"
#include "glyphclash/image.h"
#include "glyphclash/metrics.h"
#include "glyphclash/protocol.h"
#include "support/fixtures.h"

namespace glyphclash {
namespace {

namespace fs = std::filesystem;
using compositor::Pixel;
using Failure = std::optional<std::string>;

std::string describe(Pixel p) {
  return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," +
         std::to_string(p[2]) + "," + std::to_string(p[3]) + ")";
}

// Exact round(a * c / 255), half up, in integers.
std::uint8_t scaled_alpha(std::uint8_t a, std::uint8_t c) {
  return static_cast<std::uint8_t>((2 * a * c + 255) / 510);
}

// Full-block glyph at size 8 on an 8x8 canvas. Fully covered pixels must be
// the plain source-over of the text color; partly covered ones the same with
// alpha scaled by coverage; the rest must not change.
Failure compositing_oracle() {
  testing::Rng rng(20260501);
  auto byte = [&rng] { return static_cast<std::uint8_t>(testing::uniform_int(rng, 0, 255)); };
  const font::TextLayout block = font::layout_text(dsl::kDefaultFontId, "\xe2\x96\x88", 8);
  int full = 0;
  for (std::uint8_t c : block.coverage) full += c == 255 ? 1 : 0;
  if (full < 32) return "full block covers only " + std::to_string(full) + " pixels";
  for (int i = 0; i < 1000; ++i) {
    const Pixel dst{byte(), byte(), byte(), 255};
    const std::uint8_t r = byte(), g = byte(), b = byte();
    for (const std::uint8_t a : {byte(), std::uint8_t{0}, std::uint8_t{255}}) {
      dsl::TextOverlay layer;
      layer.text = "\xe2\x96\x88";
      layer.size_px = 8;
      layer.color = {r, g, b, a};
      const ImageBuffer out = compositor::overlay_text(ImageBuffer(8, 8, dst), layer);
      for (int y = 0; y < 8; ++y) {
        for (int x = 0; x < 8; ++x) {
          const std::uint8_t cov =
              x < block.width && y < block.height ? block.at(x, y) : 0;
          const Pixel want = testing::oracle_over({r, g, b, scaled_alpha(a, cov)}, dst);
          if (out.at(x, y) != want) {
            return "src " + describe({r, g, b, a}) + " coverage " + std::to_string(cov) +
                   " over " + describe(dst) + " gave " + describe(out.at(x, y)) +
                   ", oracle " + describe(want);
          }
        }
      }
      const Pixel plain = testing::oracle_over({r, g, b, a}, dst);
      if (compositor::blend_over({r, g, b, a}, dst) != plain) {
        return "blend_over disagrees with the oracle for " + describe({r, g, b, a});
      }
    }
  }
  return std::nullopt;
}

Failure corpus_determinism() {
  const fs::path dir = testing::make_temp_dir("acceptance-corpus");
  const harness::CorpusManifest m =
      harness::load_manifest(testing::write_fixture_corpus(dir, 20));
  auto run = [&m](int parallelism) {
    std::vector<std::string> out;
    for (const harness::CorpusIndexRow& row : harness::generate_corpus(m, parallelism).rows) {
      out.push_back(row.ok ? row.sha256 : "error: " + row.error_message.value_or(""));
    }
    return out;
  };
  const std::vector<std::string> a = run(1);
  const std::vector<std::string> b = run(1);
  const std::vector<std::string> c = run(4);
  const std::vector<std::string> d = run(4);
  fs::remove_all(dir);
  if (a.size() != 20) return "expected 20 rows, got " + std::to_string(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].rfind("error", 0) == 0) return "entry " + std::to_string(i) + " " + a[i];
    if (a[i] != b[i] || a[i] != c[i] || a[i] != d[i]) {
      return "entry " + std::to_string(i) + " hashes differ between runs";
    }
  }
  return std::nullopt;
}

ImageBuffer bitmap_image(const compositor::Bitmap& b) {
  ImageBuffer img(b.width, b.height, Pixel{255, 255, 255, 255});
  for (int y = 0; y < b.height; ++y) {
    for (int x = 0; x < b.width; ++x) {
      if (b.at(x, y)) img.set(x, y, {static_cast<std::uint8_t>(x * 7), static_cast<std::uint8_t>(y * 5), 0, 255});
    }
  }
  return img;
}

Failure identity_and_rotation() {
  const std::vector<compositor::Bitmap> fixtures = testing::bitmap_fixtures();
  if (fixtures.size() != 20) return "expected 20 bitmap fixtures";
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const std::string tag = "fixture " + std::to_string(i) + ": ";
    const ImageBuffer img = bitmap_image(fixtures[i]);

    dsl::TextOverlay clear;
    clear.text = "Ag";
    clear.size_px = std::max(1, img.height() / 2);
    clear.color = {200, 10, 10, 0};
    if (compositor::overlay_text(img, clear) != img) return tag + "transparent overlay changed pixels";

    if (compositor::rotate_canvas(img, {0, dsl::Resample::kBilinear}) != img) {
      return tag + "0 degree rotation changed pixels";
    }
    ImageBuffer turned = img;
    for (int k = 0; k < 4; ++k) {
      turned = compositor::rotate_canvas(turned, {90, dsl::Resample::kNearest});
    }
    if (turned != img) return tag + "four quarter turns changed pixels";

    const compositor::Bitmap& b = fixtures[i];
    const compositor::Bitmap thin = compositor::zhang_suen_thin(b);
    if (compositor::zhang_suen_thin(thin) != thin) return tag + "thinning is not idempotent";
    if (thin.width != b.width || thin.height != b.height) return tag + "thinning changed size";
    for (int y = 0; y < b.height; ++y) {
      for (int x = 0; x < b.width; ++x) {
        if (thin.at(x, y) && !b.at(x, y)) return tag + "skeleton leaves the input";
      }
    }
  }
  return std::nullopt;
}

Failure dsl_round_trip() {
  testing::Rng rng(500);
  for (int i = 0; i < 500; ++i) {
    const dsl::AttackSpec spec = testing::random_spec(rng);
    const std::string doc = dsl::serialize_spec(spec);
    const dsl::AttackSpec back = dsl::parse_spec(doc);
    if (!(back == spec)) return "spec " + std::to_string(i) + " changed on parse:\n" + doc;
    if (dsl::serialize_spec(back) != doc) return "spec " + std::to_string(i) + " bytes unstable";
  }
  return std::nullopt;
}

Failure flood_sweep() {
  const ImageBuffer base = testing::apple_image(160, 160);
  dsl::AttackSpec spec;
  spec.id = "size-sweep";
  spec.category = {dsl::Category::kTypography, dsl::Variant::kSize};
  spec.base_image = "apple.png";
  spec.target_label = "bee";
  dsl::TextOverlay t;
  t.text = "bee";
  t.size_px = 8;
  t.color = {20, 20, 20, 255};
  t.anchor = {8, 30};
  spec.layers.push_back(t);
  const std::vector<double> sizes = {8, 16, 24, 32, 48, 64, 96};
  const dsl::SweepSpec plain{spec, "layer[0].size_px", sizes};

  dsl::SweepSpec flooded = plain;
  dsl::FloodText f;
  f.words = {"pear", "plum", "fig", "kiwi", "lime", "date", "yam", "okra", "leek", "corn",
             "bean", "pea", "rye", "oat", "nut", "soy", "taro", "kale", "chard", "sage"};
  f.count = 20;
  f.size_px_range = {6, 10};
  f.color = {40, 40, 140, 255};
  f.collision_free = true;
  flooded.base.layers.insert(flooded.base.layers.begin(), f);
  flooded.param_path = "layer[1].size_px";

  harness::MockClassifierConfig cfg;
  cfg.baseline_label = "granny smith";
  auto classifier = harness::make_classifier({"mock", harness::AdapterKind::kMock, "", false, cfg});
  const std::string baseline_png = encode_png(base);
  const harness::SweepReport a =
      harness::sweep_flip_threshold(plain, base, *classifier, "mock", baseline_png, {});
  const harness::SweepReport b =
      harness::sweep_flip_threshold(flooded, base, *classifier, "mock", baseline_png, {});

  for (const harness::SweepReport* r : {&a, &b}) {
    bool seen = false;
    for (const harness::SweepPoint& p : r->points) {
      if (p.outcome.status != metrics::OutcomeStatus::kOk) {
        return "point " + std::to_string(p.value) + " failed: " + p.outcome.error_message.value_or("");
      }
      if (!seen && p.outcome.flipped) {
        if (r->first_flip != p.value) return "first_flip is not the first flipped point";
        seen = true;
      }
    }
    if (!seen && r->first_flip) return "first_flip reported without a flipped point";
  }
  if (!a.first_flip) return "no flip without flood";
  if (b.points.empty() || b.points[0].metadata.flood_ink_px == 0) return "flood left no ink";
  const double inf = std::numeric_limits<double>::infinity();
  if (b.first_flip.value_or(inf) < *a.first_flip) {
    return "flood lowered first_flip from " + std::to_string(*a.first_flip) + " to " +
           std::to_string(*b.first_flip);
  }
  std::printf("    first_flip %g px without flood, %s with flood\n", *a.first_flip,
              b.first_flip ? (std::to_string(static_cast<int>(*b.first_flip)) + " px").c_str()
                           : "none");
  return std::nullopt;
}

metrics::ClassificationResult result(const std::string& model, const std::string& label,
                                     double score) {
  return {model, {{label, score}}, 0};
}

bool near(double a, double b) { return std::abs(a - b) <= 1e-12; }

Failure metrics_fixtures() {
  using metrics::cross_model_disagreement;
  if (!cross_model_disagreement(result("resnext", "tusker", 0.473893),
                                result("clip", "Madagascar cat", 0.412109)) ||
      !cross_model_disagreement(result("resnext", "tiger cat", 0.774911),
                                result("clip", "Indian elephant", 0.158325)) ||
      !cross_model_disagreement(result("resnext", "Indian elephant", 0.791426),
                                result("clip", "Madagascar cat", 0.089905))) {
    return "an elephant panel did not register as a disagreement";
  }
  const metrics::AttackOutcome bee =
      metrics::compute_outcome(result("clip", "granny smith", 0.97), result("clip", "bee", 0.98),
                               "bee", "apple-bee", "clip");
  if (!bee.flipped || !bee.target_hit) return "apple/bee fixture did not flip to target";

  // Same six rows as the unit test; expectations worked out by hand.
  std::vector<dsl::AttackSpec> specs(3);
  specs[0].id = "t1";
  specs[0].category = {dsl::Category::kTypography, dsl::Variant::kTextFlood};
  specs[1].id = "t2";
  specs[1].category = specs[0].category;
  specs[2].id = "i1";
  specs[2].category = {dsl::Category::kImagery, dsl::Variant::kLogo};
  auto row = [](std::string spec, std::string model, std::string b, double bs, std::string a,
                double as, std::optional<std::string> target) {
    return metrics::compute_outcome(result(model, b, bs), result(model, a, as), target, spec,
                                    model);
  };
  const std::vector<metrics::AttackOutcome> rows = {
      row("t1", "a", "apple", 0.9, "bee", 0.6, "bee"),
      row("t2", "a", "apple", 0.8, "apple", 0.5, "bee"),
      metrics::error_outcome("t1", "a", "TimeoutError", "slow"),
      row("i1", "a", "ipod", 0.7, "ipod", 0.75, std::nullopt),
      row("t1", "b", "apple", 0.5, "ipod", 0.25, "bee"),
      metrics::error_outcome("t2", "b", "TransportError", "gone")};
  const metrics::ReportSummary s = metrics::aggregate(rows, metrics::make_spec_index(specs));
  if (s.total_ok != 4 || s.total_errors != 2 || s.cells.size() != 3) return "wrong totals";
  const metrics::SummaryCell& ta = s.cells[0];
  const metrics::SummaryCell& tb = s.cells[1];
  const metrics::SummaryCell& ia = s.cells[2];
  const bool ok =
      ta.n == 2 && ta.errors == 1 && near(ta.flip_rate, 0.5) && near(ta.target_hit_rate, 0.5) &&
      near(ta.success_rate, 0.5) && near(ta.mean_top1_score_delta, -0.3) &&
      near(ta.mean_baseline_label_score_delta, -0.6) && tb.n == 1 && tb.errors == 1 &&
      near(tb.flip_rate, 1) && near(tb.target_hit_rate, 0) &&
      near(tb.mean_top1_score_delta, -0.25) && near(tb.mean_baseline_label_score_delta, -0.5) &&
      ia.n == 1 && near(ia.flip_rate, 0) && near(ia.mean_top1_score_delta, 0.05) &&
      s.model_pairs.size() == 1 && s.model_pairs[0].n == 1 &&
      near(s.model_pairs[0].disagreement_rate, 1);
  if (!ok) return "aggregate differs from the hand-computed fixture";
  return std::nullopt;
}

std::string golden_line(const std::string& name) {
  std::string s = testing::golden_file(name);
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

Failure protocol_golden() {
  harness::MockClassifierConfig golden_cfg;
  golden_cfg.baseline_label = "granny smith";
  golden_cfg.ink_threshold = 0.25;

  for (const auto& [req_name, resp_name] :
       {std::pair<std::string, std::string>{"request_plain.jsonl", "response_plain.jsonl"},
        {"request_attacked.jsonl", "response_attacked.jsonl"}}) {
    const std::string req_line = golden_line(req_name);
    const protocol::ClassifyRequest req = protocol::parse_request(req_line);
    if (protocol::serialize_request(req) != req_line) return req_name + " does not re-serialize";
    const protocol::ClassifyResponse resp = harness::mock_respond(req, golden_cfg);
    if (protocol::serialize_response(resp) != golden_line(resp_name)) {
      return resp_name + " differs from the mock's reply";
    }
    if (!(protocol::parse_response(golden_line(resp_name), req.id) == resp)) {
      return resp_name + " parses differently";
    }
  }
  const protocol::ClassifyResponse ext =
      protocol::parse_response(golden_line("response_external.jsonl"), "clip-17");
  if (ext.predictions.size() != 3 || ext.predictions[0].label != "granny smith" ||
      ext.predictions[1].label != "ipod") {
    return "response_external.jsonl parsed wrongly";
  }

  // The same images through the adapter subprocess and in-process.
  harness::MockClassifierConfig cfg;
  cfg.baseline_label = "granny smith";
  const std::string command = "'" + testing::cli_path().string() +
                              "' mock-adapter --baseline-label 'granny smith' --tau 0.05";
  auto sub = harness::make_classifier({"mock", harness::AdapterKind::kSubprocess, command, false, std::nullopt});
  const std::vector<CompositionMetadata> metas = {
      {}, {100, 0, "bee"}, {900, 0, "bee"}, {900, 1200, "bee"}, {5000, 10, "ipod"}};
  const ImageBuffer img(96, 96, Pixel{240, 240, 230, 255});
  for (const CompositionMetadata& md : metas) {
    for (int top_k : {1, 3}) {
      metrics::ClassificationResult direct = harness::mock_classify(
          img, md == CompositionMetadata{} ? std::nullopt : std::optional(md), cfg);
      if (direct.predictions.size() > static_cast<std::size_t>(top_k)) {
        direct.predictions.resize(top_k);
      }
      const metrics::ClassificationResult wire =
          sub->classify(encode_png(img, &md), std::nullopt, top_k);
      if (!metrics::same_classification(wire, direct)) {
        return "subprocess mock differs from in-process mock at ink " +
               std::to_string(md.text_ink_px);
      }
    }
  }
  return std::nullopt;
}

struct Criterion {
  const char* name;
  double limit_s;  // 0: untimed
  std::function<Failure()> check;
};

}  // namespace
}  // namespace glyphclash

int main() {
  using namespace glyphclash;
  const std::vector<Criterion> criteria = {
      {"compositing oracle equivalence", 1, compositing_oracle},
      {"corpus determinism", 30, corpus_determinism},
      {"identity and rotation suite", 5, identity_and_rotation},
      {"dsl round trip", 5, dsl_round_trip},
      {"font size sweep with and without flood", 10, flood_sweep},
      {"metrics fixtures", 1, metrics_fixtures},
      {"protocol golden files", 0, protocol_golden},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Failure failure;
    try {
      failure = c.check();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!failure && c.limit_s > 0 && secs > c.limit_s) {
      std::ostringstream os;
      os << "took " << secs << " s, limit " << c.limit_s << " s";
      failure = os.str();
    }
    if (failure) {
      ++failed;
      std::printf("FAIL %s (%.3f s): %s\n", c.name, secs, failure->c_str());
    } else {
      std::printf("PASS %s (%.3f s)\n", c.name, secs);
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
