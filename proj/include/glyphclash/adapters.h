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


// Classifier endpoints: the deterministic mock classifier and the clients
// that reach a model over HTTP, over a subprocess's stdio, or in-process.

#ifndef GLYPHCLASH_ADAPTERS_H_
#define GLYPHCLASH_ADAPTERS_H_

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glyphclash/image.h"
#include "glyphclash/metrics.h"
#include "glyphclash/protocol.h"

namespace glyphclash::harness {

// Ink-fraction model of a classifier that reads before it looks. With
//   ink   = target-text pixels / canvas pixels
//   noise = flood-text pixels / canvas pixels
//   adj   = ink - 0.5 * noise
// it predicts the target label with score min(0.99, 0.5 + 5 * (adj - tau))
// when adj >= tau and the image declares a target, and the baseline label
// with score 0.9 otherwise. The runner-up gets the remaining mass (or 0.1).
struct MockClassifierConfig {
  double ink_threshold = 0.05;  // tau, in (0, 1)
  std::string baseline_label;
  std::string model_id = "mock";

  bool operator==(const MockClassifierConfig&) const = default;
};

// Throws ConfigError for an empty baseline label or tau outside (0, 1).
void check_mock_config(const MockClassifierConfig& config);

// `metadata` is what compose() recorded for the image; nullopt means an
// image without attack text.
metrics::ClassificationResult mock_classify(
    const ImageBuffer& image, const std::optional<CompositionMetadata>& metadata,
    const MockClassifierConfig& config);

// Serves one wire request: decodes the PNG (reading its composition
// metadata) and answers with mock_classify's predictions, limited to top_k.
// candidate_labels are ignored. Throws ProtocolError or DecodeError.
protocol::ClassifyResponse mock_respond(const protocol::ClassifyRequest& request,
                                        const MockClassifierConfig& config);

// JSON-lines loop: one request per input line, one response per output
// line. Malformed requests get {"id": ..., "error": {"kind", "message"}}.
// Returns at end of input.
void run_mock_stdio(std::istream& in, std::ostream& out,
                    const MockClassifierConfig& config);

enum class AdapterKind { kHttp, kSubprocess, kMock };

std::string_view adapter_kind_name(AdapterKind kind);
std::optional<AdapterKind> adapter_kind_from_name(std::string_view name);

struct AdapterEndpoint {
  std::string model_id;
  AdapterKind kind = AdapterKind::kMock;
  // http: full URL of the classify endpoint, e.g.
  // "http://127.0.0.1:8123/classify". subprocess: a shell command line.
  std::string address;
  bool needs_candidate_labels = false;
  std::optional<MockClassifierConfig> mock;  // kind == kMock only

  bool operator==(const AdapterEndpoint&) const = default;
};

struct ClientOptions {
  double timeout_s = 30;
};

class Classifier {
 public:
  virtual ~Classifier() = default;

  // Classifies a PNG. The result's model_id is the endpoint's. Throws
  // TransportError, ProtocolError or TimeoutError; never returns a partial
  // result. Safe to call from several threads.
  virtual metrics::ClassificationResult classify(
      std::string_view png_bytes,
      const std::optional<std::vector<std::string>>& candidate_labels,
      int top_k) = 0;
};

std::unique_ptr<Classifier> make_classifier(const AdapterEndpoint& endpoint,
                                            const ClientOptions& options = {});

// One-shot convenience over make_classifier. The image is PNG-encoded with
// `metadata` attached.
metrics::ClassificationResult classify(
    const ImageBuffer& image, const AdapterEndpoint& endpoint,
    const std::optional<std::vector<std::string>>& candidate_labels, int top_k,
    const CompositionMetadata* metadata = nullptr,
    const ClientOptions& options = {});

}  // namespace glyphclash::harness

#endif  // GLYPHCLASH_ADAPTERS_H_
