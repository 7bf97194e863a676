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


// HTTP services: the workbench API and a mock classifier adapter that
// speaks the wire protocol.
//
// Workbench API (all bodies JSON unless noted):
//   GET  /v1/health
//   POST /v1/compose   {"spec", "base_image_png_b64"?}        -> image/png
//   POST /v1/classify  {"model_id", "image_png_b64", "candidate_labels"?,
//                       "top_k"?}                              -> result
//   POST /v1/sweep     {"sweep", "model_id", "base_image_png_b64"?,
//                       "baseline_image_png_b64"?, "candidate_labels"?,
//                       "top_k"?}                              -> report
// Failures answer {"error": {"kind", "message"}} with 400 for bad input,
// 404 for an unknown model, 502 for adapter transport failures and 504 for
// adapter timeouts. Responses allow any origin (CORS).

#ifndef GLYPHCLASH_API_SERVER_H_
#define GLYPHCLASH_API_SERVER_H_

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "glyphclash/adapters.h"

namespace glyphclash::harness {

struct ServeConfig {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::vector<AdapterEndpoint> models;
  // Resolves spec base images and textures when the request carries none.
  std::filesystem::path asset_root;
  std::vector<std::string> labels;  // default candidates for zero-shot models
  int top_k = 5;
  double timeout_s = 30;
};

// Owns an HTTP server bound at construction. Throws IoError when the
// address cannot be bound.
class HttpService {
 public:
  virtual ~HttpService();

  int port() const;
  // Serves until stop(). listen() blocks; start() serves on a background
  // thread.
  void listen();
  void start();
  void stop();

 protected:
  HttpService();
  void bind(const std::string& host, int port);

  struct Impl;
  std::unique_ptr<Impl> impl_;
};

class ApiServer : public HttpService {
 public:
  explicit ApiServer(ServeConfig config);
  ~ApiServer() override;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

// Wire-protocol mock adapter: POST /classify and GET /health.
class MockAdapterServer : public HttpService {
 public:
  MockAdapterServer(MockClassifierConfig config, const std::string& host,
                    int port);
};

}  // namespace glyphclash::harness

#endif  // GLYPHCLASH_API_SERVER_H_
