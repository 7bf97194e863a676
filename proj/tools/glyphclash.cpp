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


// glyphclash command-line front end.

#include <csignal>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "glyphclash/adapters.h"
#include "glyphclash/api_server.h"
#include "glyphclash/attack_dsl.h"
#include "glyphclash/compositor.h"
#include "glyphclash/errors.h"
#include "glyphclash/harness.h"
#include "glyphclash/image.h"
#include "glyphclash/metrics.h"

namespace fs = std::filesystem;
using namespace glyphclash;  // NOLINT

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailedRows = 1;  // the command ran but some entries failed
constexpr int kError = 2;

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
  } else {
    write_file(path, text);
  }
}

fs::path parent_or_cwd(const fs::path& p) {
  return p.has_parent_path() ? p.parent_path() : fs::path(".");
}

harness::MockClassifierConfig mock_config(const std::string& baseline,
                                          double tau, const std::string& id) {
  harness::MockClassifierConfig cfg;
  cfg.baseline_label = baseline;
  cfg.ink_threshold = tau;
  cfg.model_id = id;
  harness::check_mock_config(cfg);
  return cfg;
}

const harness::AdapterEndpoint& find_model(const harness::CorpusManifest& m,
                                           const std::string& id) {
  if (id.empty()) {
    if (m.models.size() == 1) return m.models.front();
    throw ConfigError("manifest lists several models; pick one with --model");
  }
  for (const harness::AdapterEndpoint& e : m.models) {
    if (e.model_id == id) return e;
  }
  throw ConfigError("model '" + id + "' is not in the manifest");
}

struct ComposeArgs {
  std::string spec;
  std::string base;
  std::string out;
  std::string asset_root;
};

int cmd_compose(const ComposeArgs& a) {
  const dsl::AttackSpec spec = dsl::parse_spec(read_file(a.spec));
  const ImageBuffer base = load_image(a.base);
  compositor::ComposeOptions options;
  options.asset_root = a.asset_root.empty() ? parent_or_cwd(a.spec) : fs::path(a.asset_root);
  const compositor::Composition c = compositor::compose(base, spec, options);
  const std::string png = encode_png(c.image, &c.metadata);
  write_file(a.out, png);
  std::cout << a.out << " " << sha256_hex(png) << " text_ink_px=" << c.metadata.text_ink_px
            << " flood_ink_px=" << c.metadata.flood_ink_px << "\n";
  for (std::size_t i = 0; i < c.floods.size(); ++i) {
    for (const compositor::SkippedWord& w : c.floods[i].skipped) {
      std::cerr << "flood " << i << ": skipped word " << w.index << " '" << w.word
                << "' (no free spot)\n";
    }
  }
  return kOk;
}

struct ValidateArgs {
  std::string spec;
  std::string base;
  int width = 0;
  int height = 0;
};

int cmd_validate(const ValidateArgs& a) {
  const dsl::AttackSpec spec = dsl::parse_spec(read_file(a.spec));
  int w = a.width;
  int h = a.height;
  if (!a.base.empty()) {
    const ImageBuffer base = load_image(a.base);
    w = base.width();
    h = base.height();
  }
  std::vector<dsl::Violation> errors;
  if (w > 0 && h > 0) errors = dsl::validate_spec(spec, w, h);
  for (const dsl::Violation& v : errors) std::cout << "error: " << dsl::to_string(v) << "\n";
  for (const dsl::Violation& v : dsl::lint_spec(spec)) {
    std::cout << "warning: " << dsl::to_string(v) << "\n";
  }
  return errors.empty() ? kOk : kFailedRows;
}

struct CorpusArgs {
  std::string manifest;
  std::string index;
  int parallelism = 0;
};

int cmd_corpus(const CorpusArgs& a) {
  const harness::CorpusManifest m = harness::load_manifest(a.manifest);
  const harness::CorpusIndex index = harness::generate_corpus(m, a.parallelism);
  emit(harness::corpus_index_to_json(index), a.index);
  int failed = 0;
  for (const harness::CorpusIndexRow& row : index.rows) {
    if (!row.ok) {
      ++failed;
      std::cerr << row.spec_id << ": " << row.error_kind.value_or("") << ": "
                << row.error_message.value_or("") << "\n";
    }
  }
  return failed == 0 ? kOk : kFailedRows;
}

struct RunArgs {
  std::string manifest;
  std::string out;
  std::string report;
  std::string format = "json";
  int parallelism = 0;
  bool no_images = false;
};

int cmd_run(const RunArgs& a) {
  const harness::CorpusManifest m = harness::load_manifest(a.manifest);
  harness::ExperimentOptions options;
  options.parallelism = a.parallelism;
  options.write_images = !a.no_images;
  const std::vector<metrics::AttackOutcome> rows = harness::run_experiment(m, options);
  emit(metrics::write_results_jsonl(rows), a.out);
  if (!a.report.empty()) {
    const auto format = metrics::report_format_from_name(a.format);
    if (!format) throw ConfigError("unknown report format '" + a.format + "'");
    std::vector<dsl::AttackSpec> specs;
    for (const harness::ManifestEntry& e : m.entries) specs.push_back(e.spec);
    emit(metrics::emit_report(metrics::aggregate(rows, metrics::make_spec_index(specs)),
                              *format),
         a.report);
  }
  int failed = 0;
  for (const metrics::AttackOutcome& row : rows) {
    if (row.status != metrics::OutcomeStatus::kOk) {
      ++failed;
      std::cerr << row.spec_id << " [" << row.model_id << "]: "
                << row.error_kind.value_or("") << ": " << row.error_message.value_or("")
                << "\n";
    }
  }
  return failed == 0 ? kOk : kFailedRows;
}

struct ReportArgs {
  std::string results;
  std::string manifest;
  std::string format = "json";
  std::string out;
};

int cmd_report(const ReportArgs& a) {
  const auto format = metrics::report_format_from_name(a.format);
  if (!format) throw ConfigError("unknown report format '" + a.format + "'");
  const harness::CorpusManifest m = harness::load_manifest(a.manifest);
  std::vector<dsl::AttackSpec> specs;
  for (const harness::ManifestEntry& e : m.entries) specs.push_back(e.spec);
  const std::vector<metrics::AttackOutcome> rows =
      metrics::read_results_jsonl(read_file(a.results));
  emit(metrics::emit_report(metrics::aggregate(rows, metrics::make_spec_index(specs)),
                            *format),
       a.out);
  return kOk;
}

struct SweepArgs {
  std::string sweep;
  std::string manifest;
  std::string model;
  std::string baseline_label;
  double tau = 0.05;
  std::string model_id = "mock";
  std::string baseline;
  std::string asset_root;
  int top_k = 5;
  std::string out;
};

int cmd_sweep(const SweepArgs& a) {
  const dsl::SweepSpec sweep = dsl::parse_sweep(read_file(a.sweep));
  harness::SweepTarget target;
  harness::AdapterEndpoint endpoint;
  if (!a.manifest.empty()) {
    const harness::CorpusManifest m = harness::load_manifest(a.manifest);
    endpoint = find_model(m, a.model);
    target.root = m.root;
    target.top_k = m.top_k;
    target.timeout_s = m.timeout_s;
    if (endpoint.needs_candidate_labels) target.candidate_labels = m.labels;
  } else {
    if (a.baseline_label.empty()) {
      throw ConfigError("sweep needs --manifest or --baseline-label for the mock");
    }
    endpoint.model_id = a.model_id;
    endpoint.kind = harness::AdapterKind::kMock;
    endpoint.mock = mock_config(a.baseline_label, a.tau, a.model_id);
    target.root = parent_or_cwd(a.sweep);
    target.top_k = a.top_k;
  }
  if (!a.asset_root.empty()) target.root = a.asset_root;
  if (!a.baseline.empty()) target.baseline_image = a.baseline;
  const harness::SweepReport report = harness::sweep_flip_threshold(sweep, endpoint, target);
  emit(harness::sweep_report_to_json(report), a.out);
  if (report.first_flip) {
    std::cerr << "first flip at " << *report.first_flip << "\n";
  } else {
    std::cerr << "no flip\n";
  }
  return kOk;
}

struct ServeArgs {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string manifest;
  std::string asset_root;
  std::string labelset;
};

int cmd_serve(const ServeArgs& a) {
  harness::ServeConfig config;
  config.host = a.host;
  config.port = a.port;
  if (!a.manifest.empty()) {
    const harness::CorpusManifest m = harness::load_manifest(a.manifest);
    config.models = m.models;
    config.labels = m.labels;
    config.asset_root = m.root;
    config.top_k = m.top_k;
    config.timeout_s = m.timeout_s;
  }
  if (!a.asset_root.empty()) config.asset_root = a.asset_root;
  if (!a.labelset.empty()) config.labels = harness::load_labelset(a.labelset);
  harness::ApiServer server(std::move(config));
  std::cout << "listening on http://" << a.host << ":" << server.port() << std::endl;
  server.listen();
  return kOk;
}

struct MockArgs {
  bool http = false;
  std::string host = "127.0.0.1";
  int port = 0;
  std::string baseline_label;
  double tau = 0.05;
  std::string model_id = "mock";
};

int cmd_mock_adapter(const MockArgs& a) {
  const harness::MockClassifierConfig cfg =
      mock_config(a.baseline_label, a.tau, a.model_id);
  if (!a.http) {
    harness::run_mock_stdio(std::cin, std::cout, cfg);
    return kOk;
  }
  harness::MockAdapterServer server(cfg, a.host, a.port);
  // Scripts read the bound port from the first stdout line.
  std::cout << server.port() << std::endl;
  server.listen();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGPIPE, SIG_IGN);
  CLI::App app{"Typographic attack composer and classifier harness"};
  app.require_subcommand(1);

  ComposeArgs compose;
  CLI::App* c = app.add_subcommand("compose", "Compose one attack spec onto a base image");
  c->add_option("spec", compose.spec, "Attack spec JSON")->required();
  c->add_option("base", compose.base, "Base image (PNG)")->required();
  c->add_option("-o,--output", compose.out, "Output PNG")->required();
  c->add_option("--asset-root", compose.asset_root,
                "Directory for relative asset paths (default: the attack spec's directory)");

  ValidateArgs validate;
  CLI::App* v = app.add_subcommand("validate", "Check a spec against a canvas and lint it");
  v->add_option("spec", validate.spec, "Attack spec JSON")->required();
  v->add_option("--base", validate.base, "Base image whose size to check against");
  v->add_option("--width", validate.width, "Canvas width");
  v->add_option("--height", validate.height, "Canvas height");

  CorpusArgs corpus;
  CLI::App* co = app.add_subcommand("corpus", "Compose every entry of a manifest");
  co->add_option("manifest", corpus.manifest, "Corpus manifest JSON")->required();
  co->add_option("--index", corpus.index, "Write the corpus index here (default stdout)");
  co->add_option("-j,--parallelism", corpus.parallelism, "Worker threads (0: manifest)")
      ->check(CLI::NonNegativeNumber);

  RunArgs run;
  CLI::App* r = app.add_subcommand("run", "Classify baseline and attacked images");
  r->add_option("manifest", run.manifest, "Corpus manifest JSON")->required();
  r->add_option("-o,--output", run.out, "Results JSON-lines file")->required();
  r->add_option("--report", run.report, "Also write an aggregate report");
  r->add_option("--format", run.format, "Report format: json, csv or markdown");
  r->add_option("-j,--parallelism", run.parallelism, "Worker threads (0: manifest)")
      ->check(CLI::NonNegativeNumber);
  r->add_flag("--no-images", run.no_images, "Do not write composed images");

  ReportArgs report;
  CLI::App* re = app.add_subcommand("report", "Aggregate a results file");
  re->add_option("results", report.results, "Results JSON-lines file")->required();
  re->add_option("--manifest", report.manifest, "Manifest the results came from")
      ->required();
  re->add_option("--format", report.format, "json, csv or markdown");
  re->add_option("-o,--output", report.out, "Output file (default stdout)");

  SweepArgs sweep;
  CLI::App* s = app.add_subcommand("sweep", "Find the first value of a parameter that flips");
  s->add_option("sweep", sweep.sweep, "Sweep spec JSON")->required();
  s->add_option("--manifest", sweep.manifest, "Take models and labels from this manifest");
  s->add_option("--model", sweep.model, "Model id from the manifest");
  s->add_option("--baseline-label", sweep.baseline_label,
                "Without --manifest: use the mock classifier with this label");
  s->add_option("--tau", sweep.tau, "Mock ink threshold");
  s->add_option("--model-id", sweep.model_id, "Mock model id");
  s->add_option("--baseline", sweep.baseline,
                "Baseline image (default: the sweep's base image)");
  s->add_option("--asset-root", sweep.asset_root, "Directory for relative paths");
  s->add_option("--top-k", sweep.top_k, "Predictions per request")
      ->check(CLI::PositiveNumber);
  s->add_option("-o,--output", sweep.out, "Report file (default stdout)");

  ServeArgs serve;
  CLI::App* sv = app.add_subcommand("serve", "Serve the workbench HTTP API");
  sv->add_option("--host", serve.host, "Bind address");
  sv->add_option("--port", serve.port, "Port (0 picks one)")->check(CLI::Range(0, 65535));
  sv->add_option("--manifest", serve.manifest, "Models, labels and asset root");
  sv->add_option("--asset-root", serve.asset_root, "Directory for relative paths");
  sv->add_option("--labelset", serve.labelset, "Default candidate labels");

  MockArgs mock;
  CLI::App* m = app.add_subcommand(
      "mock-adapter", "Mock classifier speaking the wire protocol (stdio by default)");
  m->add_flag("--http", mock.http, "Serve HTTP instead of stdio JSON lines");
  m->add_option("--host", mock.host, "Bind address");
  m->add_option("--port", mock.port, "Port (0 picks one)")->check(CLI::Range(0, 65535));
  m->add_option("--baseline-label", mock.baseline_label, "Label below threshold")
      ->required();
  m->add_option("--tau", mock.tau, "Ink threshold");
  m->add_option("--model-id", mock.model_id, "Reported model id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; usage errors share the error exit code.
    return app.exit(e) == 0 ? kOk : kError;
  }

  try {
    if (c->parsed()) return cmd_compose(compose);
    if (v->parsed()) return cmd_validate(validate);
    if (co->parsed()) return cmd_corpus(corpus);
    if (r->parsed()) return cmd_run(run);
    if (re->parsed()) return cmd_report(report);
    if (s->parsed()) return cmd_sweep(sweep);
    if (sv->parsed()) return cmd_serve(serve);
    if (m->parsed()) return cmd_mock_adapter(mock);
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind_name();
    if (e.layer_index()) std::cerr << " (layer " << *e.layer_index() << ")";
    std::cerr << ": " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
