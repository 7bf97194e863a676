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


#include "glyphclash/metrics.h"

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "common/json_reader.h"
#include "glyphclash/errors.h"

namespace glyphclash::metrics {
namespace {

using json_reader::Json;
using json_reader::ObjectReader;

const Prediction& top1(const ClassificationResult& r, std::string_view role) {
  if (r.predictions.empty()) {
    throw ProtocolError(std::string(role) + " result from '" + r.model_id +
                        "' has no predictions");
  }
  return r.predictions.front();
}

// Sums in ascending order so the result does not depend on row order.
double stable_mean(std::vector<double> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  double sum = 0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double rate(std::uint64_t k, std::uint64_t n) {
  return n == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(n);
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string md_cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::vector<std::string> cell_fields(const SummaryCell& c) {
  return {std::string(dsl::category_name(c.category)),
          std::string(dsl::variant_name(c.variant)),
          c.model_id,
          std::to_string(c.n),
          std::to_string(c.errors),
          std::to_string(c.flips),
          std::to_string(c.target_hits),
          std::to_string(c.successes),
          format_number(c.flip_rate),
          format_number(c.target_hit_rate),
          format_number(c.success_rate),
          format_number(c.mean_top1_score_delta),
          format_number(c.mean_baseline_label_score_delta)};
}

const std::vector<std::string>& cell_header() {
  static const std::vector<std::string> h = {
      "category",      "variant",
      "model_id",      "n",
      "errors",        "flips",
      "target_hits",   "successes",
      "flip_rate",     "target_hit_rate",
      "success_rate",  "mean_top1_score_delta",
      "mean_baseline_label_score_delta"};
  return h;
}

Json prediction_json(const Prediction& p) {
  Json j;
  j["label"] = p.label;
  j["score"] = p.score;
  return j;
}

Prediction prediction_from(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  Prediction p;
  p.label = json_reader::as_string(r.required("label"), r.field_path("label"));
  p.score = json_reader::as_double(r.required("score"), r.field_path("score"));
  r.finish();
  return p;
}

}  // namespace

bool same_classification(const ClassificationResult& a,
                         const ClassificationResult& b) {
  return a.model_id == b.model_id && a.predictions == b.predictions;
}

std::string normalize_label(std::string_view label) {
  std::string out;
  bool pending_space = false;
  for (char c : label) {
    const bool space = c == ' ' || c == '\t' || c == '\n' || c == '\r' ||
                       c == '\f' || c == '\v';
    if (space) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
  }
  return out;
}

bool attack_succeeded(const AttackOutcome& o) {
  return o.target_label ? o.target_hit : o.flipped;
}

AttackOutcome compute_outcome(const ClassificationResult& baseline,
                              const ClassificationResult& attacked,
                              const std::optional<std::string>& target_label,
                              std::string_view spec_id,
                              std::string_view model_id) {
  if (baseline.model_id != attacked.model_id ||
      (!model_id.empty() && model_id != baseline.model_id)) {
    throw ModelMismatchError("baseline from '" + baseline.model_id +
                             "', attacked from '" + attacked.model_id +
                             "', expected '" + std::string(model_id) + "'");
  }
  const Prediction& b = top1(baseline, "baseline");
  const Prediction& a = top1(attacked, "attacked");

  AttackOutcome o;
  o.spec_id = std::string(spec_id);
  o.model_id = baseline.model_id;
  o.baseline_top1 = {normalize_label(b.label), b.score};
  o.attacked_top1 = {normalize_label(a.label), a.score};
  o.flipped = o.baseline_top1.label != o.attacked_top1.label;
  if (target_label) {
    o.target_label = normalize_label(*target_label);
    o.target_hit = *o.target_label == o.attacked_top1.label;
  }
  o.top1_score_delta = a.score - b.score;
  double kept = 0;
  for (const Prediction& p : attacked.predictions) {
    if (normalize_label(p.label) == o.baseline_top1.label) {
      kept = p.score;
      break;
    }
  }
  o.baseline_label_score_delta = kept - b.score;
  return o;
}

AttackOutcome error_outcome(std::string_view spec_id, std::string_view model_id,
                            std::string_view error_kind,
                            std::string_view message) {
  AttackOutcome o;
  o.spec_id = std::string(spec_id);
  o.model_id = std::string(model_id);
  o.status = OutcomeStatus::kError;
  o.error_kind = std::string(error_kind);
  o.error_message = std::string(message);
  return o;
}

bool cross_model_disagreement(const ClassificationResult& a,
                              const ClassificationResult& b) {
  return normalize_label(top1(a, "first").label) !=
         normalize_label(top1(b, "second").label);
}

SpecIndex make_spec_index(std::span<const dsl::AttackSpec> specs) {
  SpecIndex index;
  for (const dsl::AttackSpec& s : specs) index.emplace(s.id, s.category);
  return index;
}

ReportSummary aggregate(std::span<const AttackOutcome> outcomes,
                        const SpecIndex& specs) {
  struct Acc {
    SummaryCell cell;
    std::vector<double> top1_deltas;
    std::vector<double> label_deltas;
  };
  using Key = std::tuple<dsl::Category, dsl::Variant, std::string>;
  std::map<Key, Acc> cells;
  // spec_id -> model_id -> attacked top-1 labels, ok rows only. A rerun
  // spec contributes every cross-model pairing of its rows.
  std::map<std::string, std::map<std::string, std::vector<std::string>>>
      attacked;

  ReportSummary summary;
  for (const AttackOutcome& o : outcomes) {
    auto it = specs.find(o.spec_id);
    if (it == specs.end()) {
      throw UnknownSpecError("outcome references unknown spec '" + o.spec_id +
                             "'");
    }
    const dsl::AttackCategory& cat = it->second;
    Acc& acc = cells[Key{cat.category, cat.variant, o.model_id}];
    acc.cell.category = cat.category;
    acc.cell.variant = cat.variant;
    acc.cell.model_id = o.model_id;
    if (o.status == OutcomeStatus::kError) {
      ++acc.cell.errors;
      ++summary.total_errors;
      continue;
    }
    ++summary.total_ok;
    ++acc.cell.n;
    acc.cell.flips += o.flipped ? 1 : 0;
    acc.cell.target_hits += o.target_hit ? 1 : 0;
    acc.cell.successes += attack_succeeded(o) ? 1 : 0;
    acc.top1_deltas.push_back(o.top1_score_delta);
    acc.label_deltas.push_back(o.baseline_label_score_delta);
    attacked[o.spec_id][o.model_id].push_back(
        normalize_label(o.attacked_top1.label));
  }

  for (auto& [key, acc] : cells) {
    SummaryCell c = acc.cell;
    c.flip_rate = rate(c.flips, c.n);
    c.target_hit_rate = rate(c.target_hits, c.n);
    c.success_rate = rate(c.successes, c.n);
    c.mean_top1_score_delta = stable_mean(std::move(acc.top1_deltas));
    c.mean_baseline_label_score_delta = stable_mean(std::move(acc.label_deltas));
    summary.cells.push_back(std::move(c));
  }

  std::map<std::pair<std::string, std::string>, ModelPairSummary> pairs;
  for (const auto& [spec_id, by_model] : attacked) {
    for (auto a = by_model.begin(); a != by_model.end(); ++a) {
      for (auto b = std::next(a); b != by_model.end(); ++b) {
        ModelPairSummary& p = pairs[{a->first, b->first}];
        p.model_a = a->first;
        p.model_b = b->first;
        for (const std::string& la : a->second) {
          for (const std::string& lb : b->second) {
            ++p.n;
            p.disagreements += la != lb ? 1 : 0;
          }
        }
      }
    }
  }
  for (auto& [key, p] : pairs) {
    p.disagreement_rate = rate(p.disagreements, p.n);
    summary.model_pairs.push_back(p);
  }
  return summary;
}

std::optional<ReportFormat> report_format_from_name(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  return std::nullopt;
}

std::string emit_report(const ReportSummary& summary, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: {
      Json j;
      j["totals"]["ok"] = summary.total_ok;
      j["totals"]["errors"] = summary.total_errors;
      j["cells"] = Json::array();
      for (const SummaryCell& c : summary.cells) {
        Json cj;
        cj["category"] = dsl::category_name(c.category);
        cj["variant"] = dsl::variant_name(c.variant);
        cj["model_id"] = c.model_id;
        cj["n"] = c.n;
        cj["errors"] = c.errors;
        cj["flips"] = c.flips;
        cj["target_hits"] = c.target_hits;
        cj["successes"] = c.successes;
        cj["flip_rate"] = c.flip_rate;
        cj["target_hit_rate"] = c.target_hit_rate;
        cj["success_rate"] = c.success_rate;
        cj["mean_top1_score_delta"] = c.mean_top1_score_delta;
        cj["mean_baseline_label_score_delta"] = c.mean_baseline_label_score_delta;
        j["cells"].push_back(std::move(cj));
      }
      j["model_pairs"] = Json::array();
      for (const ModelPairSummary& p : summary.model_pairs) {
        Json pj;
        pj["model_a"] = p.model_a;
        pj["model_b"] = p.model_b;
        pj["n"] = p.n;
        pj["disagreements"] = p.disagreements;
        pj["disagreement_rate"] = p.disagreement_rate;
        j["model_pairs"].push_back(std::move(pj));
      }
      return j.dump(2) + "\n";
    }
    case ReportFormat::kCsv: {
      std::string out;
      auto row = [&out](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
          if (i) out += ',';
          out += csv_field(fields[i]);
        }
        out += "\r\n";
      };
      row(cell_header());
      for (const SummaryCell& c : summary.cells) row(cell_fields(c));
      return out;
    }
    case ReportFormat::kMarkdown: {
      std::string out;
      auto row = [&out](const std::vector<std::string>& fields) {
        out += "|";
        for (const std::string& f : fields) out += " " + md_cell(f) + " |";
        out += "\n";
      };
      out += "## Attack outcomes\n\n";
      out += "ok rows: " + std::to_string(summary.total_ok) +
             ", error rows: " + std::to_string(summary.total_errors) + "\n\n";
      row(cell_header());
      row(std::vector<std::string>(cell_header().size(), "---"));
      for (const SummaryCell& c : summary.cells) row(cell_fields(c));
      if (!summary.model_pairs.empty()) {
        out += "\n## Cross-model disagreement\n\n";
        row({"model_a", "model_b", "n", "disagreements", "disagreement_rate"});
        row({"---", "---", "---", "---", "---"});
        for (const ModelPairSummary& p : summary.model_pairs) {
          row({p.model_a, p.model_b, std::to_string(p.n),
               std::to_string(p.disagreements),
               format_number(p.disagreement_rate)});
        }
      }
      return out;
    }
  }
  return {};
}

ReportSummary parse_report(std::string_view json) {
  using json_reader::as_double;
  using json_reader::as_string;
  using json_reader::as_u64;
  using json_reader::index_path;
  const Json doc = json_reader::parse_document(json);
  ObjectReader r(doc, "");
  ReportSummary s;
  {
    ObjectReader t(r.required("totals"), "totals");
    s.total_ok = as_u64(t.required("ok"), t.field_path("ok"));
    s.total_errors = as_u64(t.required("errors"), t.field_path("errors"));
    t.finish();
  }
  const Json& cells = r.required("cells");
  if (!cells.is_array()) json_reader::schema("cells", "expected array");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    ObjectReader c(cells[i], index_path("cells", i));
    SummaryCell cell;
    const std::string cat = as_string(c.required("category"), c.field_path("category"));
    const std::string var = as_string(c.required("variant"), c.field_path("variant"));
    const auto category = dsl::category_from_name(cat);
    const auto variant = dsl::variant_from_name(var);
    if (!category || !variant || dsl::category_of(*variant) != *category) {
      json_reader::schema(c.path(), "bad category/variant '" + cat + "/" + var + "'");
    }
    cell.category = *category;
    cell.variant = *variant;
    cell.model_id = as_string(c.required("model_id"), c.field_path("model_id"));
    cell.n = as_u64(c.required("n"), c.field_path("n"));
    cell.errors = as_u64(c.required("errors"), c.field_path("errors"));
    cell.flips = as_u64(c.required("flips"), c.field_path("flips"));
    cell.target_hits = as_u64(c.required("target_hits"), c.field_path("target_hits"));
    cell.successes = as_u64(c.required("successes"), c.field_path("successes"));
    cell.flip_rate = as_double(c.required("flip_rate"), c.field_path("flip_rate"));
    cell.target_hit_rate =
        as_double(c.required("target_hit_rate"), c.field_path("target_hit_rate"));
    cell.success_rate = as_double(c.required("success_rate"), c.field_path("success_rate"));
    cell.mean_top1_score_delta = as_double(c.required("mean_top1_score_delta"),
                                           c.field_path("mean_top1_score_delta"));
    cell.mean_baseline_label_score_delta =
        as_double(c.required("mean_baseline_label_score_delta"),
                  c.field_path("mean_baseline_label_score_delta"));
    c.finish();
    s.cells.push_back(std::move(cell));
  }
  const Json& pairs = r.required("model_pairs");
  if (!pairs.is_array()) json_reader::schema("model_pairs", "expected array");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    ObjectReader p(pairs[i], index_path("model_pairs", i));
    ModelPairSummary m;
    m.model_a = as_string(p.required("model_a"), p.field_path("model_a"));
    m.model_b = as_string(p.required("model_b"), p.field_path("model_b"));
    m.n = as_u64(p.required("n"), p.field_path("n"));
    m.disagreements = as_u64(p.required("disagreements"), p.field_path("disagreements"));
    m.disagreement_rate =
        as_double(p.required("disagreement_rate"), p.field_path("disagreement_rate"));
    p.finish();
    s.model_pairs.push_back(std::move(m));
  }
  r.finish();
  return s;
}

std::string outcome_to_json(const AttackOutcome& o) {
  const bool ok = o.status == OutcomeStatus::kOk;
  Json j;
  j["spec_id"] = o.spec_id;
  j["model_id"] = o.model_id;
  j["status"] = ok ? "ok" : "error";
  j["baseline_top1"] = ok ? prediction_json(o.baseline_top1) : Json();
  j["attacked_top1"] = ok ? prediction_json(o.attacked_top1) : Json();
  j["target_label"] = o.target_label ? Json(*o.target_label) : Json();
  j["flipped"] = o.flipped;
  j["target_hit"] = o.target_hit;
  j["top1_score_delta"] = o.top1_score_delta;
  j["baseline_label_score_delta"] = o.baseline_label_score_delta;
  j["cross_model_disagreement"] =
      o.cross_model_disagreement ? Json(*o.cross_model_disagreement) : Json();
  if (o.error_kind || o.error_message) {
    j["error"]["kind"] = o.error_kind.value_or("");
    j["error"]["message"] = o.error_message.value_or("");
  } else {
    j["error"] = Json();
  }
  return j.dump();
}

AttackOutcome outcome_from_json(std::string_view line) {
  using json_reader::as_bool;
  using json_reader::as_double;
  using json_reader::as_string;
  const Json doc = json_reader::parse_document(line);
  ObjectReader r(doc, "");
  AttackOutcome o;
  o.spec_id = as_string(r.required("spec_id"), "spec_id");
  o.model_id = as_string(r.required("model_id"), "model_id");
  const std::string status = as_string(r.required("status"), "status");
  if (status == "ok") {
    o.status = OutcomeStatus::kOk;
  } else if (status == "error") {
    o.status = OutcomeStatus::kError;
  } else {
    json_reader::schema("status", "expected \"ok\" or \"error\"");
  }
  if (const Json* v = r.optional("baseline_top1")) o.baseline_top1 = prediction_from(*v, "baseline_top1");
  if (const Json* v = r.optional("attacked_top1")) o.attacked_top1 = prediction_from(*v, "attacked_top1");
  if (const Json* v = r.optional("target_label")) o.target_label = as_string(*v, "target_label");
  o.flipped = as_bool(r.required("flipped"), "flipped");
  o.target_hit = as_bool(r.required("target_hit"), "target_hit");
  o.top1_score_delta = as_double(r.required("top1_score_delta"), "top1_score_delta");
  o.baseline_label_score_delta =
      as_double(r.required("baseline_label_score_delta"), "baseline_label_score_delta");
  if (const Json* v = r.optional("cross_model_disagreement")) {
    o.cross_model_disagreement = as_bool(*v, "cross_model_disagreement");
  }
  if (const Json* v = r.optional("error")) {
    ObjectReader e(*v, "error");
    o.error_kind = as_string(e.required("kind"), "error.kind");
    o.error_message = as_string(e.required("message"), "error.message");
    e.finish();
  }
  r.finish();
  return o;
}

std::string write_results_jsonl(std::span<const AttackOutcome> outcomes) {
  std::string out;
  for (const AttackOutcome& o : outcomes) out += outcome_to_json(o) + "\n";
  return out;
}

std::vector<AttackOutcome> read_results_jsonl(std::string_view text) {
  std::vector<AttackOutcome> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(outcome_from_json(line));
    start = end + 1;
  }
  return out;
}

}  // namespace glyphclash::metrics
