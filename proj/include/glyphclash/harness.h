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


// Corpus generation, experiment runs and flip-threshold sweeps.

#ifndef GLYPHCLASH_HARNESS_H_
#define GLYPHCLASH_HARNESS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glyphclash/adapters.h"
#include "glyphclash/attack_dsl.h"
#include "glyphclash/compositor.h"
#include "glyphclash/image.h"
#include "glyphclash/metrics.h"

namespace glyphclash::harness {

struct ManifestEntry {
  dsl::AttackSpec spec;
  std::filesystem::path baseline_image;  // classified as the "before" image
  std::filesystem::path output_path;
  std::optional<std::string> target_label;  // overrides spec.target_label
  std::optional<std::string> expected_baseline_label;
  // Overrides the manifest labelset for zero-shot models.
  std::optional<std::vector<std::string>> candidate_labels;

  // The target used for outcomes and composition metadata.
  std::optional<std::string> effective_target() const {
    return target_label ? target_label : spec.target_label;
  }
};

struct CorpusManifest {
  // Relative paths in the manifest (and in its specs) resolve against root.
  std::filesystem::path root;
  std::optional<std::filesystem::path> labelset_path;
  std::vector<std::string> labels;  // loaded from labelset_path
  std::vector<AdapterEndpoint> models;
  std::vector<ManifestEntry> entries;
  int parallelism = 4;
  int top_k = 5;
  double timeout_s = 30;

  std::filesystem::path resolve(const std::filesystem::path& p) const;

  // What a model is asked to choose from for this entry: the entry's own
  // candidate_labels, else the labelset; nullopt for models that do not
  // need candidates.
  std::optional<std::vector<std::string>> candidates_for(
      const ManifestEntry& entry, const AdapterEndpoint& model) const;
};

// Throws SyntaxError/SchemaError/BoundsError for malformed documents and
// ConfigError when manifest-level invariants fail (duplicate spec ids,
// output paths or model ids; a zero-shot model with no labelset).
CorpusManifest parse_manifest(std::string_view doc,
                              const std::filesystem::path& root);
CorpusManifest load_manifest(const std::filesystem::path& path);

// One label per line, order preserved; blank lines skipped. Throws IoError
// or ConfigError (no labels).
std::vector<std::string> load_labelset(const std::filesystem::path& path);

struct CorpusIndexRow {
  std::string spec_id;
  std::filesystem::path output_path;
  bool ok = false;
  std::string sha256;  // of the written file
  CompositionMetadata metadata;
  std::optional<std::string> error_kind;
  std::optional<std::string> error_message;
};

struct CorpusIndex {
  std::vector<CorpusIndexRow> rows;  // manifest order
};

// Composes one entry: loads the attack spec's base image, composes with the
// manifest root as asset root and the entry's effective target.
compositor::Composition compose_entry(const CorpusManifest& manifest,
                                      const ManifestEntry& entry);

// Composes and saves every entry (PNG with composition metadata) using up
// to `parallelism` threads (0 means manifest.parallelism). Per-entry errors
// land in the index.
CorpusIndex generate_corpus(const CorpusManifest& manifest, int parallelism = 0);

std::string corpus_index_to_json(const CorpusIndex& index);

struct ExperimentOptions {
  int parallelism = 0;  // 0 means manifest.parallelism
  // Write composed images to their output paths while running.
  bool write_images = true;
};

// For every entry and model: classify the baseline and the attacked image
// and compare. Rows come back in entry-major, model-minor order; failures
// become status=error rows. With several models each ok row carries
// cross_model_disagreement.
std::vector<metrics::AttackOutcome> run_experiment(
    const CorpusManifest& manifest, const ExperimentOptions& options = {});

struct SweepPoint {
  double value = 0;
  std::string spec_id;
  metrics::AttackOutcome outcome;
  CompositionMetadata metadata;
};

struct SweepReport {
  std::string param_path;
  std::string model_id;
  std::vector<SweepPoint> points;  // in sweep value order
  // First value whose outcome flipped, by linear scan.
  std::optional<double> first_flip;
};

struct SweepTarget {
  std::filesystem::path root;  // resolves base images and assets
  std::filesystem::path baseline_image;  // empty: the sweep's base image
  std::optional<std::vector<std::string>> candidate_labels;
  int top_k = 5;
  double timeout_s = 30;
};

// Expands the sweep, composes each spec in memory and classifies it with
// `endpoint` against one baseline classification. Per-point classify errors
// become error rows.
SweepReport sweep_flip_threshold(const dsl::SweepSpec& sweep,
                                 const AdapterEndpoint& endpoint,
                                 const SweepTarget& target);

// Same, with the base image already decoded and an existing classifier.
// target.baseline_image is ignored; baseline_png is classified instead.
SweepReport sweep_flip_threshold(const dsl::SweepSpec& sweep,
                                 const ImageBuffer& base,
                                 Classifier& classifier,
                                 const std::string& model_id,
                                 std::string_view baseline_png,
                                 const SweepTarget& target);

std::string sweep_report_to_json(const SweepReport& report);

}  // namespace glyphclash::harness

#endif  // GLYPHCLASH_HARNESS_H_
