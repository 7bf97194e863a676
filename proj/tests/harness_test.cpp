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
#include <json.hpp>

#include <filesystem>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "glyphclash/errors.h"
#include "glyphclash/harness.h"
#include "support/fixtures.h"

namespace glyphclash::harness {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override { dir_ = testing::make_temp_dir("harness"); }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path put(const std::string& rel, const std::string& text) {
    const fs::path p = dir_ / rel;
    fs::create_directories(p.parent_path());
    write_file(p, text);
    return p;
  }
  void put_png(const std::string& rel, const ImageBuffer& img) {
    put(rel, encode_png(img));
  }

  fs::path dir_;
};

json mock_model(const std::string& id, double tau = 0.05) {
  return {{"model_id", id},
          {"kind", "mock"},
          {"mock", {{"baseline_label", "granny smith"}, {"ink_threshold", tau}}}};
}

json text_spec(const std::string& id, const std::string& text, int size,
               std::optional<std::string> target = std::nullopt) {
  json s = {{"id", id},
            {"category", {{"category", "typography"}, {"variant", "oov"}}},
            {"base_image", "apple.png"},
            {"layers", json::array()},
            {"seed", 0}};
  if (text.empty()) {
    s["layers"].push_back({{"op", "Rotation"}, {"degrees", 0}, {"resample", "nearest"}});
  } else {
    s["layers"].push_back({{"op", "TextOverlay"},
                           {"text", text},
                           {"size_px", size},
                           {"color", {0, 0, 0, 255}},
                           {"anchor", {8, 40}}});
  }
  if (target) s["target_label"] = *target;
  return s;
}

json entry(const json& spec, const std::string& out) {
  return {{"spec", spec}, {"baseline_image", "apple.png"}, {"output_path", out}};
}

TEST_F(TempDir, LabelsetKeepsOrderAndSkipsBlanks) {
  const fs::path p = put("labels.txt", "granny smith\r\n\n  \nbee\nipod\n");
  EXPECT_EQ(load_labelset(p),
            (std::vector<std::string>{"granny smith", "bee", "ipod"}));
  EXPECT_THROW(load_labelset(put("empty.txt", "\n \n")), ConfigError);
  EXPECT_THROW(load_labelset(dir_ / "missing.txt"), IoError);
}

TEST_F(TempDir, ManifestErrors) {
  const json spec_a = text_spec("a", "bee", 20);
  const json spec_b = text_spec("b", "bee", 20);
  auto manifest = [&](json entries, json models) {
    return json{{"models", std::move(models)}, {"entries", std::move(entries)}};
  };
  const json one_model = json::array({mock_model("m")});
  struct Case {
    json doc;
    ErrorKind kind;
  };
  const std::vector<Case> cases = {
      {manifest({entry(spec_a, "o/a.png"), entry(spec_a, "o/b.png")}, one_model),
       ErrorKind::kConfig},
      {manifest({entry(spec_a, "o/a.png"), entry(spec_b, "./o/a.png")}, one_model),
       ErrorKind::kConfig},
      {manifest({entry(spec_a, "o/a.png")},
                json::array({mock_model("m"), mock_model("m")})),
       ErrorKind::kConfig},
      {manifest({entry(spec_a, "o/a.png")},
                json::array({{{"model_id", "clip"},
                              {"kind", "http"},
                              {"address", "http://127.0.0.1:9/classify"},
                              {"needs_candidate_labels", true}}})),
       ErrorKind::kConfig},
      {manifest({entry(spec_a, "o/a.png")},
                json::array({{{"model_id", "clip"}, {"kind", "http"}}})),
       ErrorKind::kConfig},
      {manifest({entry(spec_a, "o/a.png")},
                json::array({{{"model_id", "m"}, {"kind", "mock"}}})),
       ErrorKind::kConfig},
      {manifest({entry(spec_a, "o/a.png")},
                json::array({{{"model_id", "m"}, {"kind", "grpc"}}})),
       ErrorKind::kSchema},
      {manifest({entry(spec_a, "o/a.png")},
                json::array({{{"model_id", "m"},
                              {"kind", "mock"},
                              {"mock", {{"baseline_label", "x"}, {"ink_threshold", 1.5}}}}})),
       ErrorKind::kConfig},
      {json{{"entries", json::array()}, {"colour", 1}}, ErrorKind::kSchema},
      {json{{"models", one_model}}, ErrorKind::kSchema},
      {json{{"entries", json::array()}, {"parallelism", 0}}, ErrorKind::kBounds},
      {json{{"entries", json::array()}, {"top_k", 0}}, ErrorKind::kBounds},
      {json{{"entries", json::array({{{"spec", spec_a}, {"output_path", "x.png"}}})}},
       ErrorKind::kSchema},
  };
  for (const Case& c : cases) {
    try {
      parse_manifest(c.doc.dump(), dir_);
      ADD_FAILURE() << "accepted " << c.doc.dump();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), c.kind) << e.what() << " for " << c.doc.dump();
    }
  }
  EXPECT_THROW(parse_manifest("{\"entries\": [", dir_), SyntaxError);
  EXPECT_THROW(load_manifest(dir_ / "nope.json"), IoError);
}

TEST_F(TempDir, CandidateLabels) {
  put("labels.txt", "granny smith\nbee\n");
  json with_override = entry(text_spec("b", "bee", 20), "o/b.png");
  with_override["candidate_labels"] = {"bee", "beetle"};
  with_override["target_label"] = "Beetle";
  const json doc = {
      {"labelset_path", "labels.txt"},
      {"models",
       json::array({mock_model("m"),
                    {{"model_id", "clip"},
                     {"kind", "http"},
                     {"address", "http://127.0.0.1:9/classify"},
                     {"needs_candidate_labels", true}}})},
      {"entries",
       json::array({entry(text_spec("a", "bee", 20, "bee"), "o/a.png"), with_override})}};
  const CorpusManifest m = parse_manifest(doc.dump(), dir_);
  ASSERT_EQ(m.entries.size(), 2u);
  EXPECT_EQ(m.labels, (std::vector<std::string>{"granny smith", "bee"}));
  EXPECT_FALSE(m.candidates_for(m.entries[0], m.models[0]).has_value());
  EXPECT_EQ(m.candidates_for(m.entries[0], m.models[1]), m.labels);
  EXPECT_EQ(m.candidates_for(m.entries[1], m.models[1]),
            (std::vector<std::string>{"bee", "beetle"}));
  EXPECT_EQ(m.entries[0].effective_target(), "bee");
  EXPECT_EQ(m.entries[1].effective_target(), "Beetle");
  EXPECT_EQ(m.parallelism, 4);
  EXPECT_EQ(m.timeout_s, 30);
  EXPECT_EQ(m.resolve("x.png"), dir_ / "x.png");
  EXPECT_EQ(m.resolve("/abs.png"), fs::path("/abs.png"));
}

TEST_F(TempDir, SpecByPath) {
  put("specs/a.json", text_spec("from-file", "bee", 20).dump());
  const json doc = {{"entries", json::array({{{"spec", "specs/a.json"},
                                              {"baseline_image", "apple.png"},
                                              {"output_path", "o/a.png"}}})}};
  const CorpusManifest m = parse_manifest(doc.dump(), dir_);
  EXPECT_EQ(m.entries[0].spec.id, "from-file");
  EXPECT_TRUE(m.models.empty());
}

TEST_F(TempDir, EmptyManifestGivesEmptyIndex) {
  const CorpusManifest m = parse_manifest(R"({"entries": []})", dir_);
  const CorpusIndex index = generate_corpus(m);
  EXPECT_TRUE(index.rows.empty());
  EXPECT_EQ(corpus_index_to_json(index), "{\n  \"entries\": []\n}\n");
  EXPECT_TRUE(run_experiment(m).empty());
}

// No text, "bee" and "beetle" over the same apple.
json apple_variants_manifest() {
  return {{"models", json::array({mock_model("mock")})},
          {"entries", json::array({entry(text_spec("plain", "", 0), "out/plain.png"),
                                   entry(text_spec("bee", "bee", 72, "bee"), "out/bee.png"),
                                   entry(text_spec("beetle", "beetle", 72, "bee"),
                                         "out/beetle.png")})}};
}

TEST_F(TempDir, AppleVariantsCorpus) {
  put_png("apple.png", testing::apple_image(160, 160));
  const fs::path mp = put("manifest.json", apple_variants_manifest().dump());
  const CorpusIndex index = generate_corpus(load_manifest(mp));
  ASSERT_EQ(index.rows.size(), 3u);
  for (const CorpusIndexRow& row : index.rows) {
    EXPECT_TRUE(row.ok) << row.error_message.value_or("");
    const std::string bytes = read_file(dir_ / row.output_path);
    EXPECT_EQ(sha256_hex(bytes), row.sha256);
  }
  EXPECT_EQ(index.rows[0].spec_id, "plain");
  // The untouched composition is the base file itself.
  EXPECT_EQ(read_file(dir_ / "out/plain.png"), read_file(dir_ / "apple.png"));
  EXPECT_EQ(index.rows[0].metadata, CompositionMetadata{});
  EXPECT_GT(index.rows[2].metadata.text_ink_px, index.rows[1].metadata.text_ink_px);
  EXPECT_EQ(index.rows[1].metadata.target_label, "bee");

  const json j = json::parse(corpus_index_to_json(index));
  ASSERT_EQ(j["entries"].size(), 3u);
  EXPECT_EQ(j["entries"][1]["status"], "ok");
  EXPECT_EQ(j["entries"][1]["sha256"], index.rows[1].sha256);
  EXPECT_EQ(j["entries"][1]["output_path"], "out/bee.png");
}

TEST_F(TempDir, EntryErrorsAreCollected) {
  put_png("apple.png", testing::apple_image(64, 64));
  json bad_base = text_spec("missing", "bee", 12);
  bad_base["base_image"] = "nowhere.png";
  json off_canvas = text_spec("outside", "bee", 12);
  off_canvas["layers"][0]["anchor"] = {500, 8};
  const json doc = {{"models", json::array({mock_model("mock")})},
                    {"entries", json::array({entry(bad_base, "o/1.png"),
                                             entry(text_spec("fine", "bee", 12), "o/2.png"),
                                             entry(off_canvas, "o/3.png")})}};
  const CorpusManifest m = parse_manifest(doc.dump(), dir_);
  const CorpusIndex index = generate_corpus(m);
  ASSERT_EQ(index.rows.size(), 3u);
  EXPECT_FALSE(index.rows[0].ok);
  EXPECT_EQ(index.rows[0].error_kind, "IoError");
  EXPECT_TRUE(index.rows[1].ok);
  EXPECT_FALSE(index.rows[2].ok);
  EXPECT_EQ(index.rows[2].error_kind, "BoundsError");
  EXPECT_FALSE(fs::exists(dir_ / "o/1.png"));
  EXPECT_TRUE(fs::exists(dir_ / "o/2.png"));

  const auto rows = run_experiment(m, {1, false});
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].status, metrics::OutcomeStatus::kError);
  EXPECT_EQ(rows[0].error_kind, "IoError");
  EXPECT_EQ(rows[1].status, metrics::OutcomeStatus::kOk);
  EXPECT_EQ(rows[2].error_kind, "BoundsError");
}

std::map<std::string, std::string> hashes(const CorpusIndex& index) {
  std::map<std::string, std::string> out;
  for (const CorpusIndexRow& row : index.rows) {
    EXPECT_TRUE(row.ok) << row.spec_id << ": " << row.error_message.value_or("");
    out[row.spec_id] = row.sha256;
  }
  return out;
}

TEST(Corpus, DeterministicAcrossRunsAndParallelism) {
  const fs::path dir = testing::make_temp_dir("corpus");
  const CorpusManifest m = load_manifest(testing::write_fixture_corpus(dir, 20));
  const auto first = hashes(generate_corpus(m, 1));
  EXPECT_EQ(first.size(), 20u);
  EXPECT_EQ(hashes(generate_corpus(m, 1)), first);
  EXPECT_EQ(hashes(generate_corpus(m, 4)), first);
  fs::remove_all(dir);
}

TEST(Corpus, EntriesAreIndependent) {
  const fs::path dir = testing::make_temp_dir("subset");
  const CorpusManifest full = load_manifest(testing::write_fixture_corpus(dir, 20));
  const auto all = hashes(generate_corpus(full, 4));
  testing::Rng rng(11);
  for (int trial = 0; trial < 3; ++trial) {
    CorpusManifest part = full;
    part.entries.clear();
    for (const ManifestEntry& e : full.entries) {
      if (testing::uniform_int(rng, 0, 2) == 0) part.entries.push_back(e);
    }
    std::shuffle(part.entries.begin(), part.entries.end(), rng);
    for (const auto& [id, sha] : hashes(generate_corpus(part, 2))) {
      EXPECT_EQ(sha, all.at(id)) << id;
    }
  }
  fs::remove_all(dir);
}

TEST_F(TempDir, ExperimentOneModel) {
  put_png("apple.png", testing::apple_image(160, 160));
  const CorpusManifest m =
      parse_manifest(apple_variants_manifest().dump(), dir_);
  const auto rows = run_experiment(m);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.status, metrics::OutcomeStatus::kOk);
    EXPECT_EQ(r.model_id, "mock");
    EXPECT_EQ(r.baseline_top1.label, "granny smith");
    EXPECT_FALSE(r.cross_model_disagreement.has_value());
  }
  EXPECT_FALSE(rows[0].flipped);
  EXPECT_TRUE(rows[1].flipped);
  EXPECT_TRUE(rows[1].target_hit);
  EXPECT_EQ(rows[1].attacked_top1.label, "bee");
  EXPECT_TRUE(fs::exists(dir_ / "out/bee.png"));
}

TEST_F(TempDir, ExperimentTwoModels) {
  put_png("apple.png", testing::apple_image(160, 160));
  json doc = apple_variants_manifest();
  doc["models"].push_back(mock_model("strict", 0.5));
  const auto rows = run_experiment(parse_manifest(doc.dump(), dir_), {2, false});
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_FALSE(fs::exists(dir_ / "out"));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].model_id, i % 2 == 0 ? "mock" : "strict");
    ASSERT_TRUE(rows[i].cross_model_disagreement.has_value());
  }
  EXPECT_FALSE(*rows[0].cross_model_disagreement);
  EXPECT_TRUE(rows[2].flipped);
  EXPECT_FALSE(rows[3].flipped);
  EXPECT_TRUE(*rows[2].cross_model_disagreement);
  EXPECT_TRUE(*rows[3].cross_model_disagreement);
}

TEST_F(TempDir, ExperimentOverSubprocessMatchesMock) {
  put_png("apple.png", testing::apple_image(160, 160));
  json doc = apple_variants_manifest();
  doc["models"].push_back(
      {{"model_id", "wire"},
       {"kind", "subprocess"},
       {"address", "'" + testing::cli_path().string() +
                       "' mock-adapter --baseline-label 'granny smith' --tau 0.05"}});
  const auto rows = run_experiment(parse_manifest(doc.dump(), dir_), {3, false});
  ASSERT_EQ(rows.size(), 6u);
  for (std::size_t i = 0; i < rows.size(); i += 2) {
    metrics::AttackOutcome wire = rows[i + 1];
    ASSERT_EQ(wire.status, metrics::OutcomeStatus::kOk) << *wire.error_message;
    EXPECT_EQ(wire.model_id, "wire");
    wire.model_id = "mock";
    EXPECT_EQ(wire, rows[i]);
  }
}

TEST_F(TempDir, ResultsFileRoundTrip) {
  put_png("apple.png", testing::apple_image(96, 96));
  const CorpusManifest m = parse_manifest(apple_variants_manifest().dump(), dir_);
  const auto rows = run_experiment(m, {1, false});
  EXPECT_EQ(metrics::read_results_jsonl(metrics::write_results_jsonl(rows)), rows);
}

// Sizes for the flip sweep and the ink each one leaves on the canvas,
// measured from the font layout without compositing.
struct SizeSweep {
  dsl::SweepSpec sweep;
  ImageBuffer base;
  std::vector<double> ink_fraction;
};

SizeSweep size_sweep(std::vector<double> sizes, int canvas = 224) {
  SizeSweep s;
  s.base = testing::apple_image(canvas, canvas);
  dsl::AttackSpec spec;
  spec.id = "bee-size";
  spec.category = {dsl::Category::kTypography, dsl::Variant::kSize};
  spec.base_image = "apple.png";
  spec.target_label = "bee";
  dsl::TextOverlay t;
  t.text = "bee";
  t.size_px = 8;
  t.color = {20, 20, 20, 255};
  t.anchor = {20, 20};
  spec.layers.push_back(t);
  s.sweep = {spec, "layer[0].size_px", sizes};
  for (double v : sizes) {
    t.size_px = static_cast<int>(v);
    s.ink_fraction.push_back(
        static_cast<double>(testing::text_ink_oracle(t, canvas, canvas)) /
        (static_cast<double>(canvas) * canvas));
  }
  return s;
}

SweepReport run_sweep(const SizeSweep& s, double tau) {
  MockClassifierConfig c;
  c.baseline_label = "granny smith";
  c.ink_threshold = tau;
  auto classifier = make_classifier({"mock", AdapterKind::kMock, "", false, c});
  return sweep_flip_threshold(s.sweep, s.base, *classifier, "mock",
                              encode_png(s.base), SweepTarget{});
}

void expect_first_flip_invariant(const SweepReport& r) {
  bool seen = false;
  for (const SweepPoint& p : r.points) {
    if (!seen && p.outcome.flipped) {
      ASSERT_TRUE(r.first_flip.has_value());
      EXPECT_EQ(*r.first_flip, p.value);
      seen = true;
    }
  }
  if (!seen) {
    EXPECT_FALSE(r.first_flip.has_value());
  }
}

TEST(Sweep, FirstFlipMatchesInkOracle) {
  const SizeSweep s = size_sweep({8, 16, 32, 64});
  ASSERT_LT(s.ink_fraction[1], s.ink_fraction[2]);
  const double tau = (s.ink_fraction[1] + s.ink_fraction[2]) / 2;
  const SweepReport r = run_sweep(s, tau);
  ASSERT_EQ(r.points.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(r.points[i].value, s.sweep.values[i]);
    EXPECT_EQ(static_cast<double>(r.points[i].metadata.text_ink_px) / (224.0 * 224.0),
              s.ink_fraction[i]);
    EXPECT_EQ(r.points[i].outcome.flipped, i >= 2);
  }
  ASSERT_TRUE(r.first_flip.has_value());
  EXPECT_EQ(*r.first_flip, 32);
  EXPECT_EQ(r.param_path, "layer[0].size_px");
  expect_first_flip_invariant(r);
}

TEST(Sweep, NoFlip) {
  const SizeSweep s = size_sweep({8, 16, 32, 64});
  const SweepReport r = run_sweep(s, 0.9);
  EXPECT_FALSE(r.first_flip.has_value());
  for (const SweepPoint& p : r.points) EXPECT_FALSE(p.outcome.flipped);
  const json j = json::parse(sweep_report_to_json(r));
  EXPECT_TRUE(j["first_flip"].is_null());
  EXPECT_EQ(j["points"].size(), 4u);
}

TEST(Sweep, FloodNeverLowersFirstFlip) {
  testing::Rng rng(21);
  const std::vector<std::string> words = {"pear", "plum", "fig", "kiwi", "lime"};
  for (int trial = 0; trial < 6; ++trial) {
    SizeSweep plain = size_sweep({8, 16, 24, 32, 48, 64, 96}, 160);
    SizeSweep flooded = plain;
    dsl::FloodText f;
    f.words = words;
    f.count = testing::uniform_int(rng, 5, 25);
    f.size_px_range = {8, testing::uniform_int(rng, 10, 20)};
    f.color = {60, 60, 160, 255};
    f.collision_free = trial % 2 == 0;
    flooded.sweep.base.layers.insert(flooded.sweep.base.layers.begin(), f);
    flooded.sweep.param_path = "layer[1].size_px";
    flooded.sweep.base.seed = static_cast<std::uint64_t>(trial);

    const double tau = testing::uniform_real(rng, 0.005, 0.2);
    const SweepReport a = run_sweep(plain, tau);
    const SweepReport b = run_sweep(flooded, tau);
    expect_first_flip_invariant(a);
    expect_first_flip_invariant(b);
    const double inf = std::numeric_limits<double>::infinity();
    EXPECT_GE(b.first_flip.value_or(inf), a.first_flip.value_or(inf))
        << "tau " << tau;
  }
}

TEST_F(TempDir, SweepFromFiles) {
  put_png("apple.png", testing::apple_image(224, 224));
  const SizeSweep s = size_sweep({8, 16, 32, 64});
  MockClassifierConfig c;
  c.baseline_label = "granny smith";
  c.ink_threshold = (s.ink_fraction[1] + s.ink_fraction[2]) / 2;
  SweepTarget target;
  target.root = dir_;
  const SweepReport r =
      sweep_flip_threshold(s.sweep, {"mock", AdapterKind::kMock, "", false, c}, target);
  EXPECT_EQ(r.first_flip, 32);
  target.baseline_image = "nowhere.png";
  EXPECT_THROW(
      sweep_flip_threshold(s.sweep, {"mock", AdapterKind::kMock, "", false, c}, target),
      IoError);
}

TEST(Sweep, PointErrorsBecomeRows) {
  // The last two anchors fall off a 64 px canvas.
  SizeSweep s = size_sweep({8, 16}, 64);
  s.sweep.param_path = "layer[0].anchor[0]";
  s.sweep.values = {8, 16, 100, 200};
  const SweepReport r = run_sweep(s, 0.05);
  ASSERT_EQ(r.points.size(), 4u);
  EXPECT_EQ(r.points[0].outcome.status, metrics::OutcomeStatus::kOk);
  EXPECT_EQ(r.points[3].outcome.status, metrics::OutcomeStatus::kError);
  EXPECT_EQ(r.points[3].outcome.error_kind, "BoundsError");
}

}  // namespace
}  // namespace glyphclash::harness
