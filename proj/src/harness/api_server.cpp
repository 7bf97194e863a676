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


#include "glyphclash/api_server.h"

#include <map>
#include <memory>
#include <string>
#include <thread>
#include <utility>

#include "common/json_reader.h"
#include "glyphclash/compositor.h"
#include "glyphclash/errors.h"
#include "glyphclash/harness.h"
#include "httplib.h"

namespace glyphclash::harness {
namespace {

using json_reader::as_int;
using json_reader::as_string;
using json_reader::as_string_array;
using json_reader::Json;
using json_reader::ObjectReader;

constexpr char kJson[] = "application/json";

int status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kTransport:
      return 502;
    case ErrorKind::kTimeout:
      return 504;
    case ErrorKind::kConfig:
      return 500;
    default:
      return 400;
  }
}

void send_error(httplib::Response& res, int status, std::string_view kind,
                std::string_view message) {
  Json j;
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  res.status = status;
  res.set_content(j.dump(), kJson);
}

// Runs a handler body, turning exceptions into structured error replies.
template <typename F>
void guarded(httplib::Response& res, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    send_error(res, status_for(e.kind()), e.kind_name(), e.what());
  } catch (const std::exception& e) {
    send_error(res, 500, "InternalError", e.what());
  }
}

dsl::AttackSpec spec_field(const Json& j) {
  return dsl::parse_spec(j.is_string() ? j.get<std::string>() : j.dump());
}

Json predictions_json(const std::vector<metrics::Prediction>& preds) {
  Json out = Json::array();
  for (const metrics::Prediction& p : preds) {
    Json pj;
    pj["label"] = p.label;
    pj["score"] = p.score;
    out.push_back(std::move(pj));
  }
  return out;
}

}  // namespace

struct HttpService::Impl {
  httplib::Server server;
  int port = -1;
  std::thread thread;
};

HttpService::HttpService() : impl_(std::make_unique<Impl>()) {}

HttpService::~HttpService() { stop(); }

void HttpService::bind(const std::string& host, int port) {
  // httplib's default also sets SO_REUSEPORT, which would let a second
  // server share a port that is already serving.
  impl_->server.set_socket_options([](socket_t sock) {
    int yes = 1;
    ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  if (port == 0) {
    impl_->port = impl_->server.bind_to_any_port(host);
  } else if (impl_->server.bind_to_port(host, port)) {
    impl_->port = port;
  }
  if (impl_->port <= 0) {
    throw IoError("cannot bind " + host + ":" + std::to_string(port));
  }
}

int HttpService::port() const { return impl_->port; }

void HttpService::listen() { impl_->server.listen_after_bind(); }

void HttpService::start() {
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

void HttpService::stop() {
  if (!impl_) return;
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

struct ApiServer::State {
  ServeConfig config;
  std::map<std::string, std::pair<AdapterEndpoint, std::unique_ptr<Classifier>>>
      models;

  // nullptr when unknown.
  std::pair<AdapterEndpoint, std::unique_ptr<Classifier>>* find(
      const std::string& id) {
    auto it = models.find(id);
    return it == models.end() ? nullptr : &it->second;
  }

  std::optional<std::vector<std::string>> candidates(
      const AdapterEndpoint& model,
      std::optional<std::vector<std::string>> requested) const {
    if (requested) return requested;
    if (!model.needs_candidate_labels) return std::nullopt;
    if (config.labels.empty()) {
      throw SchemaError("model '" + model.model_id +
                        "' needs candidate_labels and the server has no labelset");
    }
    return config.labels;
  }

  ImageBuffer base_image(const ObjectReader&, const Json* b64,
                         const std::string& spec_base, std::string* raw) {
    if (b64 != nullptr) {
      *raw = base64_decode(as_string(*b64, "base_image_png_b64"));
      return decode_png(*raw).image;
    }
    std::filesystem::path p(spec_base);
    if (!p.is_absolute() && !config.asset_root.empty()) p = config.asset_root / p;
    return load_image(p);
  }
};

ApiServer::ApiServer(ServeConfig config) : state_(std::make_unique<State>()) {
  state_->config = std::move(config);
  for (const AdapterEndpoint& e : state_->config.models) {
    if (state_->models.contains(e.model_id)) {
      throw ConfigError("duplicate model_id '" + e.model_id + "'");
    }
    state_->models.emplace(
        e.model_id,
        std::make_pair(e, make_classifier(e, {state_->config.timeout_s})));
  }
  State* st = state_.get();
  httplib::Server& server = impl_->server;

  // The workbench runs in a browser on another origin.
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Options(R"(/v1/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });

  server.Get("/v1/health", [st](const httplib::Request&, httplib::Response& res) {
    Json j;
    j["status"] = "ok";
    j["models"] = Json::array();
    for (const auto& [id, model] : st->models) j["models"].push_back(id);
    res.set_content(j.dump(), kJson);
  });

  server.Post("/v1/compose", [st](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const Json body = json_reader::parse_document(req.body);
      ObjectReader r(body, "");
      const dsl::AttackSpec spec = spec_field(r.required("spec"));
      std::string raw;
      const ImageBuffer base =
          st->base_image(r, r.optional("base_image_png_b64"), spec.base_image, &raw);
      r.finish();
      const compositor::Composition c =
          compositor::compose(base, spec, {st->config.asset_root});
      res.set_header("X-Glyphclash-Text-Ink-Px", std::to_string(c.metadata.text_ink_px));
      res.set_header("X-Glyphclash-Flood-Ink-Px", std::to_string(c.metadata.flood_ink_px));
      if (!raw.empty() && c.image == base && c.metadata == CompositionMetadata{}) {
        res.set_content(raw, "image/png");  // nothing changed: echo the input
      } else {
        res.set_content(encode_png(c.image, &c.metadata), "image/png");
      }
    });
  });

  server.Post("/v1/classify", [st](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const Json body = json_reader::parse_document(req.body);
      ObjectReader r(body, "");
      const std::string model_id = as_string(r.required("model_id"), "model_id");
      const std::string png =
          base64_decode(as_string(r.required("image_png_b64"), "image_png_b64"));
      std::optional<std::vector<std::string>> labels;
      if (const Json* v = r.optional("candidate_labels")) {
        labels = as_string_array(*v, "candidate_labels");
      }
      int top_k = st->config.top_k;
      if (const Json* v = r.optional("top_k")) top_k = as_int(*v, "top_k");
      r.finish();
      if (top_k < 1) throw BoundsError("top_k: must be >= 1");
      auto* model = st->find(model_id);
      if (model == nullptr) {
        send_error(res, 404, "UnknownModel", "no model '" + model_id + "'");
        return;
      }
      const metrics::ClassificationResult result = model->second->classify(
          png, st->candidates(model->first, std::move(labels)), top_k);
      Json j;
      j["model_id"] = result.model_id;
      j["predictions"] = predictions_json(result.predictions);
      j["latency_ms"] = result.latency_ms;
      res.set_content(j.dump(), kJson);
    });
  });

  server.Post("/v1/sweep", [st](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const Json body = json_reader::parse_document(req.body);
      ObjectReader r(body, "");
      const Json& sweep_json = r.required("sweep");
      const dsl::SweepSpec sweep = dsl::parse_sweep(
          sweep_json.is_string() ? sweep_json.get<std::string>() : sweep_json.dump());
      const std::string model_id = as_string(r.required("model_id"), "model_id");
      std::string raw;
      const ImageBuffer base = st->base_image(r, r.optional("base_image_png_b64"),
                                              sweep.base.base_image, &raw);
      std::string baseline_png;
      if (const Json* v = r.optional("baseline_image_png_b64")) {
        baseline_png = base64_decode(as_string(*v, "baseline_image_png_b64"));
      } else {
        baseline_png = raw.empty() ? encode_png(base) : raw;
      }
      std::optional<std::vector<std::string>> labels;
      if (const Json* v = r.optional("candidate_labels")) {
        labels = as_string_array(*v, "candidate_labels");
      }
      SweepTarget target;
      target.root = st->config.asset_root;
      target.top_k = st->config.top_k;
      target.timeout_s = st->config.timeout_s;
      if (const Json* v = r.optional("top_k")) target.top_k = as_int(*v, "top_k");
      r.finish();
      if (target.top_k < 1) throw BoundsError("top_k: must be >= 1");
      auto* model = st->find(model_id);
      if (model == nullptr) {
        send_error(res, 404, "UnknownModel", "no model '" + model_id + "'");
        return;
      }
      target.candidate_labels = st->candidates(model->first, std::move(labels));
      const SweepReport report = sweep_flip_threshold(
          sweep, base, *model->second, model_id, baseline_png, target);
      res.set_content(sweep_report_to_json(report), kJson);
    });
  });

  bind(state_->config.host, state_->config.port);
}

ApiServer::~ApiServer() { stop(); }

MockAdapterServer::MockAdapterServer(MockClassifierConfig config,
                                     const std::string& host, int port) {
  check_mock_config(config);
  httplib::Server& server = impl_->server;
  server.Get("/health", [config](const httplib::Request&, httplib::Response& res) {
    Json j;
    j["model_ids"] = Json::array({config.model_id});
    j["ready"] = true;
    res.set_content(j.dump(), kJson);
  });
  server.Post("/classify", [config](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const protocol::ClassifyRequest request = protocol::parse_request(req.body);
      res.set_content(protocol::serialize_response(mock_respond(request, config)),
                      kJson);
    });
  });
  bind(host, port);
}

}  // namespace glyphclash::harness
