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


#include "glyphclash/protocol.h"

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "common/json_reader.h"
#include "glyphclash/errors.h"

namespace glyphclash::protocol {
namespace {

using json_reader::Json;

// The protocol reports every schema problem as a ProtocolError.
template <typename F>
auto as_protocol_error(std::string_view what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ProtocolError&) {
    throw;
  } catch (const Error& e) {
    throw ProtocolError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string serialize_request(const ClassifyRequest& request) {
  Json j;
  j["id"] = request.id;
  j["image_png_b64"] = request.image_png_b64;
  if (request.candidate_labels) j["candidate_labels"] = *request.candidate_labels;
  j["top_k"] = request.top_k;
  return j.dump();
}

std::string serialize_response(const ClassifyResponse& response) {
  Json j;
  j["id"] = response.id;
  j["model_id"] = response.model_id;
  j["predictions"] = Json::array();
  for (const metrics::Prediction& p : response.predictions) {
    Json pj;
    pj["label"] = p.label;
    pj["score"] = p.score;
    j["predictions"].push_back(std::move(pj));
  }
  return j.dump();
}

ClassifyRequest parse_request(std::string_view doc) {
  return as_protocol_error("bad classify request", [&] {
    const Json j = json_reader::parse_document(doc);
    json_reader::ObjectReader r(j, "");
    ClassifyRequest req;
    req.id = json_reader::as_string(r.required("id"), "id");
    req.image_png_b64 =
        json_reader::as_string(r.required("image_png_b64"), "image_png_b64");
    if (const Json* v = r.optional("candidate_labels")) {
      req.candidate_labels = json_reader::as_string_array(*v, "candidate_labels");
      if (req.candidate_labels->empty()) {
        throw ProtocolError("candidate_labels must be non-empty when present");
      }
    }
    req.top_k = json_reader::as_int(r.required("top_k"), "top_k");
    if (req.top_k < 1) throw ProtocolError("top_k must be >= 1");
    r.finish();
    return req;
  });
}

ClassifyResponse parse_response(std::string_view doc,
                                std::string_view expected_id) {
  ClassifyResponse resp = as_protocol_error("bad classify response", [&] {
    const Json j = json_reader::parse_document(doc);
    if (!j.is_object()) throw ProtocolError("response is not a JSON object");
    if (auto err = j.find("error"); err != j.end() && !err->is_null()) {
      std::string detail = err->dump();
      if (err->is_object() && err->contains("message") && (*err)["message"].is_string()) {
        detail = (*err)["message"].get<std::string>();
      }
      throw ProtocolError("adapter reported an error: " + detail);
    }
    auto field = [&](const char* key) -> const Json& {
      auto it = j.find(key);
      if (it == j.end()) {
        throw ProtocolError(std::string("response lacks '") + key + "'");
      }
      return *it;
    };
    ClassifyResponse r;
    r.id = json_reader::as_string(field("id"), "id");
    r.model_id = json_reader::as_string(field("model_id"), "model_id");
    const Json& preds = field("predictions");
    if (!preds.is_array()) throw ProtocolError("predictions must be an array");
    for (std::size_t i = 0; i < preds.size(); ++i) {
      const std::string path = json_reader::index_path("predictions", i);
      if (!preds[i].is_object()) throw ProtocolError(path + " is not an object");
      auto label = preds[i].find("label");
      auto score = preds[i].find("score");
      if (label == preds[i].end() || score == preds[i].end()) {
        throw ProtocolError(path + " needs label and score");
      }
      r.predictions.push_back(
          {metrics::normalize_label(json_reader::as_string(*label, path + ".label")),
           json_reader::as_double(*score, path + ".score")});
    }
    return r;
  });

  if (!expected_id.empty() && resp.id != expected_id) {
    throw ProtocolError("response id '" + resp.id + "' does not match request '" +
                        std::string(expected_id) + "'");
  }
  if (resp.model_id.empty()) throw ProtocolError("empty model_id");
  if (resp.predictions.empty()) throw ProtocolError("no predictions");
  for (std::size_t i = 0; i < resp.predictions.size(); ++i) {
    const double s = resp.predictions[i].score;
    if (!(s >= 0.0 && s <= 1.0)) {
      throw ProtocolError("score " + std::to_string(s) + " outside [0, 1]");
    }
    if (i > 0 && s > resp.predictions[i - 1].score) {
      throw ProtocolError("predictions are not in descending score order");
    }
  }
  return resp;
}

metrics::ClassificationResult to_result(const ClassifyResponse& response,
                                        const std::string& model_id, int top_k,
                                        double latency_ms) {
  metrics::ClassificationResult r;
  r.model_id = model_id;
  const std::size_t n = std::min(response.predictions.size(),
                                 static_cast<std::size_t>(std::max(top_k, 1)));
  r.predictions.assign(response.predictions.begin(),
                       response.predictions.begin() + static_cast<std::ptrdiff_t>(n));
  r.latency_ms = latency_ms;
  return r;
}

}  // namespace glyphclash::protocol
