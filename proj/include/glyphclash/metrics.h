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


// Classification results, per-attack outcomes and aggregate reports.

#ifndef GLYPHCLASH_METRICS_H_
#define GLYPHCLASH_METRICS_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "glyphclash/attack_dsl.h"

namespace glyphclash::metrics {

struct Prediction {
  std::string label;
  double score = 0;

  bool operator==(const Prediction&) const = default;
};

struct ClassificationResult {
  std::string model_id;
  std::vector<Prediction> predictions;  // descending by score
  double latency_ms = 0;

  bool operator==(const ClassificationResult&) const = default;
};

// Same model and predictions; latency is ignored.
bool same_classification(const ClassificationResult& a,
                         const ClassificationResult& b);

// ASCII lowercase, trim, collapse internal whitespace runs to one space.
std::string normalize_label(std::string_view label);

enum class OutcomeStatus { kOk, kError };

struct AttackOutcome {
  std::string spec_id;
  std::string model_id;
  OutcomeStatus status = OutcomeStatus::kOk;
  Prediction baseline_top1;
  Prediction attacked_top1;
  std::optional<std::string> target_label;  // normalized
  bool flipped = false;
  bool target_hit = false;
  double top1_score_delta = 0;  // attacked top-1 score - baseline top-1 score
  // Attacked score of the baseline's top-1 label (0 if not returned) minus
  // its baseline score.
  double baseline_label_score_delta = 0;
  // Set by run_experiment when an entry ran against several models: whether
  // this model's attacked top-1 differs from another model's.
  std::optional<bool> cross_model_disagreement;
  std::optional<std::string> error_kind;
  std::optional<std::string> error_message;

  bool operator==(const AttackOutcome&) const = default;
};

// Success is target_hit when a target is declared, else flipped.
bool attack_succeeded(const AttackOutcome& outcome);

// Throws ModelMismatchError if the results (or model_id, when non-empty)
// name different models, ProtocolError if either has no predictions.
AttackOutcome compute_outcome(const ClassificationResult& baseline,
                              const ClassificationResult& attacked,
                              const std::optional<std::string>& target_label,
                              std::string_view spec_id,
                              std::string_view model_id);

// An error row for a cell that could not be evaluated.
AttackOutcome error_outcome(std::string_view spec_id, std::string_view model_id,
                            std::string_view error_kind,
                            std::string_view message);

// True iff the normalized top-1 labels differ.
bool cross_model_disagreement(const ClassificationResult& a,
                              const ClassificationResult& b);

struct SummaryCell {
  dsl::Category category = dsl::Category::kTypography;
  dsl::Variant variant = dsl::Variant::kOov;
  std::string model_id;
  std::uint64_t n = 0;       // ok rows
  std::uint64_t errors = 0;  // error rows
  std::uint64_t flips = 0;
  std::uint64_t target_hits = 0;
  std::uint64_t successes = 0;
  double flip_rate = 0;
  double target_hit_rate = 0;
  double success_rate = 0;
  double mean_top1_score_delta = 0;
  double mean_baseline_label_score_delta = 0;

  bool operator==(const SummaryCell&) const = default;
};

// Disagreement between two models' attacked top-1 labels over the specs
// both evaluated successfully.
struct ModelPairSummary {
  std::string model_a;  // model_a < model_b
  std::string model_b;
  std::uint64_t n = 0;
  std::uint64_t disagreements = 0;
  double disagreement_rate = 0;

  bool operator==(const ModelPairSummary&) const = default;
};

struct ReportSummary {
  std::uint64_t total_ok = 0;
  std::uint64_t total_errors = 0;
  std::vector<SummaryCell> cells;  // ordered by category, variant, model
  std::vector<ModelPairSummary> model_pairs;

  bool operator==(const ReportSummary&) const = default;
};

using SpecIndex = std::map<std::string, dsl::AttackCategory, std::less<>>;

SpecIndex make_spec_index(std::span<const dsl::AttackSpec> specs);

// Pure fold over the rows; their order does not matter. Throws
// UnknownSpecError for a row whose spec_id is not in `specs`.
ReportSummary aggregate(std::span<const AttackOutcome> outcomes,
                        const SpecIndex& specs);

enum class ReportFormat { kJson, kCsv, kMarkdown };

std::optional<ReportFormat> report_format_from_name(std::string_view name);

std::string emit_report(const ReportSummary& summary, ReportFormat format);

// Inverse of emit_report(..., kJson). Throws SyntaxError or SchemaError.
ReportSummary parse_report(std::string_view json);

// One JSON object per line in results files.
std::string outcome_to_json(const AttackOutcome& outcome);
AttackOutcome outcome_from_json(std::string_view line);

std::string write_results_jsonl(std::span<const AttackOutcome> outcomes);
std::vector<AttackOutcome> read_results_jsonl(std::string_view text);

}  // namespace glyphclash::metrics

#endif  // GLYPHCLASH_METRICS_H_
