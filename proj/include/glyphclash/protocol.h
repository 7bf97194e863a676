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


// Classifier wire protocol. The same JSON documents travel as HTTP bodies
// and, one per line, over a subprocess's stdin/stdout:
//
//   request  {"id": str, "image_png_b64": str, "candidate_labels": [str]?,
//             "top_k": int}
//   response {"id": str, "model_id": str,
//             "predictions": [{"label": str, "score": number}]}

#ifndef GLYPHCLASH_PROTOCOL_H_
#define GLYPHCLASH_PROTOCOL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glyphclash/metrics.h"

namespace glyphclash::protocol {

struct ClassifyRequest {
  std::string id;
  std::string image_png_b64;
  std::optional<std::vector<std::string>> candidate_labels;
  int top_k = 5;

  bool operator==(const ClassifyRequest&) const = default;
};

struct ClassifyResponse {
  std::string id;
  std::string model_id;
  std::vector<metrics::Prediction> predictions;

  bool operator==(const ClassifyResponse&) const = default;
};

// Compact single-line JSON, no trailing newline. candidate_labels is
// omitted when absent.
std::string serialize_request(const ClassifyRequest& request);
std::string serialize_response(const ClassifyResponse& response);

// Strict: unknown fields, a missing id or image, top_k < 1 or an empty
// candidate list are ProtocolErrors.
ClassifyRequest parse_request(std::string_view doc);

// Lenient about extra fields, strict about content: throws ProtocolError
// for malformed JSON, an id other than expected_id (when non-empty), an
// empty model_id, no predictions, scores outside [0, 1], ascending scores,
// or an "error" member reported by the adapter.
// Labels come back normalized.
ClassifyResponse parse_response(std::string_view doc,
                                std::string_view expected_id = {});

// First top_k predictions of the response as a result for `model_id`.
metrics::ClassificationResult to_result(const ClassifyResponse& response,
                                        const std::string& model_id, int top_k,
                                        double latency_ms);

}  // namespace glyphclash::protocol

#endif  // GLYPHCLASH_PROTOCOL_H_
