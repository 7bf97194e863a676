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


#include "glyphclash/harness.h"

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "common/json_reader.h"
#include "glyphclash/errors.h"
#include "harness/parallel.h"

namespace glyphclash::harness {
namespace {

using json_reader::as_bool;
using json_reader::as_double;
using json_reader::as_int;
using json_reader::as_string;
using json_reader::as_string_array;
using json_reader::index_path;
using json_reader::Json;
using json_reader::ObjectReader;

MockClassifierConfig mock_config_from(const Json& j, const std::string& path,
                                      const std::string& endpoint_id) {
  ObjectReader r(j, path);
  MockClassifierConfig c;
  c.model_id = endpoint_id;
  c.baseline_label = as_string(r.required("baseline_label"), r.field_path("baseline_label"));
  if (const Json* v = r.optional("ink_threshold")) {
    c.ink_threshold = as_double(*v, r.field_path("ink_threshold"));
  }
  if (const Json* v = r.optional("model_id")) c.model_id = as_string(*v, r.field_path("model_id"));
  r.finish();
  return c;
}

AdapterEndpoint endpoint_from(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  AdapterEndpoint e;
  e.model_id = as_string(r.required("model_id"), r.field_path("model_id"));
  if (e.model_id.empty()) json_reader::schema(r.field_path("model_id"), "must be non-empty");
  const std::string kind = as_string(r.required("kind"), r.field_path("kind"));
  const auto k = adapter_kind_from_name(kind);
  if (!k) json_reader::schema(r.field_path("kind"), "unknown adapter kind '" + kind + "'");
  e.kind = *k;
  if (const Json* v = r.optional("address")) e.address = as_string(*v, r.field_path("address"));
  if (const Json* v = r.optional("needs_candidate_labels")) {
    e.needs_candidate_labels = as_bool(*v, r.field_path("needs_candidate_labels"));
  }
  if (const Json* v = r.optional("mock")) {
    e.mock = mock_config_from(*v, r.field_path("mock"), e.model_id);
  }
  r.finish();
  if (e.kind == AdapterKind::kMock) {
    if (!e.mock) throw ConfigError(path + ": mock endpoint needs a \"mock\" object");
    check_mock_config(*e.mock);
  } else if (e.address.empty()) {
    throw ConfigError(path + ": " + kind + " endpoint needs an address");
  }
  return e;
}

ManifestEntry entry_from(const Json& j, const std::string& path,
                         const std::filesystem::path& root) {
  ObjectReader r(j, path);
  ManifestEntry e;
  const Json& spec = r.required("spec");
  if (spec.is_string()) {
    const std::filesystem::path p = spec.get<std::string>();
    e.spec = dsl::parse_spec(read_file(p.is_absolute() ? p : root / p));
  } else {
    e.spec = dsl::parse_spec(spec.dump());
  }
  e.baseline_image = as_string(r.required("baseline_image"), r.field_path("baseline_image"));
  e.output_path = as_string(r.required("output_path"), r.field_path("output_path"));
  if (const Json* v = r.optional("target_label")) {
    e.target_label = as_string(*v, r.field_path("target_label"));
  }
  if (const Json* v = r.optional("expected_baseline_label")) {
    e.expected_baseline_label = as_string(*v, r.field_path("expected_baseline_label"));
  }
  if (const Json* v = r.optional("candidate_labels")) {
    e.candidate_labels = as_string_array(*v, r.field_path("candidate_labels"));
    if (e.candidate_labels->empty()) {
      json_reader::schema(r.field_path("candidate_labels"), "must be non-empty");
    }
  }
  r.finish();
  return e;
}

std::string error_kind_of(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    return std::string(err->kind_name());
  }
  return "InternalError";
}

void write_output(const std::filesystem::path& path, std::string_view png) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  write_file(path, png);
}

}  // namespace

std::filesystem::path CorpusManifest::resolve(const std::filesystem::path& p) const {
  if (p.is_absolute() || root.empty()) return p;
  return root / p;
}

std::optional<std::vector<std::string>> CorpusManifest::candidates_for(
    const ManifestEntry& entry, const AdapterEndpoint& model) const {
  if (!model.needs_candidate_labels) return std::nullopt;
  if (entry.candidate_labels) return entry.candidate_labels;
  return labels;
}

std::vector<std::string> load_labelset(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> labels;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (metrics::normalize_label(line).empty()) continue;
    labels.push_back(line);
  }
  if (labels.empty()) throw ConfigError("labelset " + path.string() + " is empty");
  return labels;
}

CorpusManifest parse_manifest(std::string_view doc,
                              const std::filesystem::path& root) {
  const Json j = json_reader::parse_document(doc);
  ObjectReader r(j, "");
  CorpusManifest m;
  m.root = root;
  if (const Json* v = r.optional("labelset_path")) {
    m.labelset_path = as_string(*v, "labelset_path");
  }
  if (const Json* v = r.optional("models")) {
    if (!v->is_array()) json_reader::schema("models", "expected array");
    for (std::size_t i = 0; i < v->size(); ++i) {
      m.models.push_back(endpoint_from((*v)[i], index_path("models", i)));
    }
  }
  const Json& entries = r.required("entries");
  if (!entries.is_array()) json_reader::schema("entries", "expected array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    m.entries.push_back(entry_from(entries[i], index_path("entries", i), root));
  }
  if (const Json* v = r.optional("parallelism")) m.parallelism = as_int(*v, "parallelism");
  if (const Json* v = r.optional("top_k")) m.top_k = as_int(*v, "top_k");
  if (const Json* v = r.optional("timeout_s")) m.timeout_s = as_double(*v, "timeout_s");
  r.finish();

  if (m.parallelism < 1) throw BoundsError("parallelism: must be >= 1");
  if (m.top_k < 1) throw BoundsError("top_k: must be >= 1");
  if (!(m.timeout_s > 0)) throw BoundsError("timeout_s: must be > 0");

  std::set<std::string> model_ids;
  for (const AdapterEndpoint& e : m.models) {
    if (!model_ids.insert(e.model_id).second) {
      throw ConfigError("duplicate model_id '" + e.model_id + "'");
    }
  }
  std::set<std::string> spec_ids;
  std::set<std::filesystem::path> outputs;
  for (const ManifestEntry& e : m.entries) {
    if (!spec_ids.insert(e.spec.id).second) {
      throw ConfigError("duplicate spec id '" + e.spec.id + "'");
    }
    if (!outputs.insert(m.resolve(e.output_path).lexically_normal()).second) {
      throw ConfigError("duplicate output_path '" + e.output_path.string() + "'");
    }
  }
  if (m.labelset_path) m.labels = load_labelset(m.resolve(*m.labelset_path));
  for (const AdapterEndpoint& model : m.models) {
    if (!model.needs_candidate_labels || !m.labels.empty()) continue;
    for (const ManifestEntry& e : m.entries) {
      if (!e.candidate_labels) {
        throw ConfigError("model '" + model.model_id +
                          "' needs candidate labels but the manifest has no "
                          "labelset and entry '" + e.spec.id + "' lists none");
      }
    }
  }
  return m;
}

CorpusManifest load_manifest(const std::filesystem::path& path) {
  return parse_manifest(read_file(path), path.parent_path());
}

compositor::Composition compose_entry(const CorpusManifest& manifest,
                                      const ManifestEntry& entry) {
  const ImageBuffer base = load_image(manifest.resolve(entry.spec.base_image));
  dsl::AttackSpec spec = entry.spec;
  spec.target_label = entry.effective_target();
  return compositor::compose(base, spec, {manifest.root});
}

CorpusIndex generate_corpus(const CorpusManifest& manifest, int parallelism) {
  CorpusIndex index;
  index.rows.resize(manifest.entries.size());
  parallel_for(manifest.entries.size(),
               parallelism > 0 ? parallelism : manifest.parallelism,
               [&](std::size_t i) {
                 const ManifestEntry& entry = manifest.entries[i];
                 CorpusIndexRow& row = index.rows[i];
                 row.spec_id = entry.spec.id;
                 row.output_path = entry.output_path;
                 try {
                   const compositor::Composition c = compose_entry(manifest, entry);
                   const std::string png = encode_png(c.image, &c.metadata);
                   write_output(manifest.resolve(entry.output_path), png);
                   row.sha256 = sha256_hex(png);
                   row.metadata = c.metadata;
                   row.ok = true;
                 } catch (const std::exception& e) {
                   row.error_kind = error_kind_of(e);
                   row.error_message = e.what();
                 }
               });
  return index;
}

std::string corpus_index_to_json(const CorpusIndex& index) {
  Json j;
  j["entries"] = Json::array();
  for (const CorpusIndexRow& row : index.rows) {
    Json r;
    r["spec_id"] = row.spec_id;
    r["output_path"] = row.output_path.generic_string();
    r["status"] = row.ok ? "ok" : "error";
    r["sha256"] = row.ok ? Json(row.sha256) : Json();
    r["text_ink_px"] = row.metadata.text_ink_px;
    r["flood_ink_px"] = row.metadata.flood_ink_px;
    if (row.error_kind) {
      r["error"]["kind"] = *row.error_kind;
      r["error"]["message"] = row.error_message.value_or("");
    } else {
      r["error"] = Json();
    }
    j["entries"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

std::vector<metrics::AttackOutcome> run_experiment(
    const CorpusManifest& manifest, const ExperimentOptions& options) {
  const std::size_t n_models = manifest.models.size();
  std::vector<std::unique_ptr<Classifier>> classifiers;
  for (const AdapterEndpoint& e : manifest.models) {
    classifiers.push_back(make_classifier(e, {manifest.timeout_s}));
  }
  std::vector<metrics::AttackOutcome> rows(manifest.entries.size() * n_models);
  parallel_for(
      manifest.entries.size(),
      options.parallelism > 0 ? options.parallelism : manifest.parallelism,
      [&](std::size_t i) {
        const ManifestEntry& entry = manifest.entries[i];
        metrics::AttackOutcome* out = &rows[i * n_models];
        std::string attacked_png;
        std::string baseline_png;
        try {
          const compositor::Composition c = compose_entry(manifest, entry);
          attacked_png = encode_png(c.image, &c.metadata);
          if (options.write_images) {
            write_output(manifest.resolve(entry.output_path), attacked_png);
          }
          baseline_png = read_file(manifest.resolve(entry.baseline_image));
        } catch (const std::exception& e) {
          for (std::size_t m = 0; m < n_models; ++m) {
            out[m] = metrics::error_outcome(entry.spec.id,
                                            manifest.models[m].model_id,
                                            error_kind_of(e), e.what());
          }
          return;
        }
        for (std::size_t m = 0; m < n_models; ++m) {
          const AdapterEndpoint& model = manifest.models[m];
          try {
            const auto candidates = manifest.candidates_for(entry, model);
            const metrics::ClassificationResult before = classifiers[m]->classify(
                baseline_png, candidates, manifest.top_k);
            const metrics::ClassificationResult after = classifiers[m]->classify(
                attacked_png, candidates, manifest.top_k);
            out[m] = metrics::compute_outcome(before, after, entry.effective_target(),
                                              entry.spec.id, model.model_id);
          } catch (const std::exception& e) {
            out[m] = metrics::error_outcome(entry.spec.id, model.model_id,
                                            error_kind_of(e), e.what());
          }
        }
        if (n_models < 2) return;
        for (std::size_t m = 0; m < n_models; ++m) {
          if (out[m].status != metrics::OutcomeStatus::kOk) continue;
          bool differs = false;
          for (std::size_t o = 0; o < n_models; ++o) {
            if (o != m && out[o].status == metrics::OutcomeStatus::kOk &&
                out[o].attacked_top1.label != out[m].attacked_top1.label) {
              differs = true;
            }
          }
          out[m].cross_model_disagreement = differs;
        }
      });
  return rows;
}

SweepReport sweep_flip_threshold(const dsl::SweepSpec& sweep,
                                 const AdapterEndpoint& endpoint,
                                 const SweepTarget& target) {
  const auto resolve = [&](const std::filesystem::path& p) {
    return p.is_absolute() || target.root.empty() ? p : target.root / p;
  };
  const std::filesystem::path baseline = target.baseline_image.empty()
                                             ? std::filesystem::path(sweep.base.base_image)
                                             : target.baseline_image;
  const std::string baseline_png = read_file(resolve(baseline));
  const ImageBuffer base = load_image(resolve(sweep.base.base_image));
  std::unique_ptr<Classifier> classifier =
      make_classifier(endpoint, {target.timeout_s});
  return sweep_flip_threshold(sweep, base, *classifier, endpoint.model_id,
                              baseline_png, target);
}

SweepReport sweep_flip_threshold(const dsl::SweepSpec& sweep,
                                 const ImageBuffer& base,
                                 Classifier& classifier,
                                 const std::string& model_id,
                                 std::string_view baseline_png,
                                 const SweepTarget& target) {
  const std::vector<dsl::AttackSpec> specs = dsl::expand_sweep(sweep);
  const metrics::ClassificationResult before =
      classifier.classify(baseline_png, target.candidate_labels, target.top_k);

  SweepReport report;
  report.param_path = sweep.param_path;
  report.model_id = model_id;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    SweepPoint point;
    point.value = sweep.values[i];
    point.spec_id = specs[i].id;
    try {
      const compositor::Composition c =
          compositor::compose(base, specs[i], {target.root});
      point.metadata = c.metadata;
      const metrics::ClassificationResult after = classifier.classify(
          encode_png(c.image, &c.metadata), target.candidate_labels, target.top_k);
      point.outcome = metrics::compute_outcome(before, after, specs[i].target_label,
                                               specs[i].id, model_id);
    } catch (const std::exception& e) {
      point.outcome =
          metrics::error_outcome(specs[i].id, model_id, error_kind_of(e), e.what());
    }
    if (!report.first_flip && point.outcome.status == metrics::OutcomeStatus::kOk &&
        point.outcome.flipped) {
      report.first_flip = point.value;
    }
    report.points.push_back(std::move(point));
  }
  return report;
}

std::string sweep_report_to_json(const SweepReport& report) {
  Json j;
  j["param_path"] = report.param_path;
  j["model_id"] = report.model_id;
  j["first_flip"] = report.first_flip ? Json(*report.first_flip) : Json();
  j["points"] = Json::array();
  for (const SweepPoint& p : report.points) {
    Json pj;
    pj["value"] = p.value;
    pj["spec_id"] = p.spec_id;
    pj["text_ink_px"] = p.metadata.text_ink_px;
    pj["flood_ink_px"] = p.metadata.flood_ink_px;
    pj["outcome"] = Json::parse(metrics::outcome_to_json(p.outcome));
    j["points"].push_back(std::move(pj));
  }
  return j.dump(2) + "\n";
}

}  // namespace glyphclash::harness
