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


#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "glyphclash/adapters.h"
#include "glyphclash/errors.h"
#include "glyphclash/protocol.h"
#include "support/fixtures.h"

namespace glyphclash::protocol {
namespace {

constexpr char kRedRgb[] =
    "iVBORw0KGgoAAAANSUhEUgAAAAEAAAABCAIAAACQd1PeAAAADElEQVR4nGP4z8AAAAMBAQDJ/pLvAAAAAElFTkSuQmCC";

// Golden files hold one line each, newline-terminated.
std::string golden_line(const std::string& name) {
  std::string s = testing::golden_file(name);
  EXPECT_FALSE(s.empty());
  EXPECT_EQ(s.back(), '\n');
  EXPECT_EQ(s.find('\n'), s.size() - 1);
  s.pop_back();
  return s;
}

harness::MockClassifierConfig golden_mock() {
  harness::MockClassifierConfig c;
  c.baseline_label = "granny smith";
  c.ink_threshold = 0.25;
  return c;
}

TEST(Golden, PlainRequestBytes) {
  ClassifyRequest req;
  req.id = "golden-1";
  req.image_png_b64 = kRedRgb;
  req.top_k = 5;
  EXPECT_EQ(serialize_request(req), golden_line("request_plain.jsonl"));
  EXPECT_EQ(parse_request(golden_line("request_plain.jsonl")), req);
}

TEST(Golden, AttackedRequestBytes) {
  const std::string line = golden_line("request_attacked.jsonl");
  const ClassifyRequest req = parse_request(line);
  EXPECT_EQ(req.id, "golden-2");
  ASSERT_TRUE(req.candidate_labels.has_value());
  EXPECT_EQ(*req.candidate_labels,
            (std::vector<std::string>{"granny smith", "bee", "Caf\xc3\xa9 au lait"}));
  EXPECT_EQ(req.top_k, 2);
  EXPECT_EQ(serialize_request(req), line);

  // The image is a real PNG carrying composition metadata.
  const DecodedPng png = decode_png(base64_decode(req.image_png_b64));
  EXPECT_EQ(png.image.width(), 4);
  ASSERT_TRUE(png.metadata.has_value());
  EXPECT_EQ(png.metadata->text_ink_px, 5u);
  EXPECT_EQ(png.metadata->target_label, "bee");
}

TEST(Golden, MockResponseBytes) {
  for (const auto& [req, resp] :
       {std::pair{"request_plain.jsonl", "response_plain.jsonl"},
        std::pair{"request_attacked.jsonl", "response_attacked.jsonl"}}) {
    const ClassifyResponse r =
        harness::mock_respond(parse_request(golden_line(req)), golden_mock());
    EXPECT_EQ(serialize_response(r), golden_line(resp)) << resp;
    EXPECT_EQ(parse_response(golden_line(resp), r.id), r);
  }
}

TEST(Golden, MockStdioStream) {
  std::istringstream in(testing::golden_file("request_plain.jsonl") +
                        testing::golden_file("request_attacked.jsonl"));
  std::ostringstream out;
  harness::run_mock_stdio(in, out, golden_mock());
  EXPECT_EQ(out.str(), testing::golden_file("response_plain.jsonl") +
                           testing::golden_file("response_attacked.jsonl"));
}

TEST(Golden, ExternalResponseIsNormalized) {
  const ClassifyResponse r =
      parse_response(golden_line("response_external.jsonl"), "clip-17");
  EXPECT_EQ(r.model_id, "clip-vit-b32");
  ASSERT_EQ(r.predictions.size(), 3u);
  EXPECT_EQ(r.predictions[0], (metrics::Prediction{"granny smith", 0.474}));
  EXPECT_EQ(r.predictions[1], (metrics::Prediction{"ipod", 0.3125}));
  EXPECT_EQ(r.predictions[2], (metrics::Prediction{"library", 0}));

  const metrics::ClassificationResult top2 = to_result(r, "clip", 2, 7.5);
  EXPECT_EQ(top2.model_id, "clip");
  EXPECT_EQ(top2.predictions.size(), 2u);
  EXPECT_EQ(top2.latency_ms, 7.5);
  EXPECT_EQ(to_result(r, "clip", 10, 0).predictions.size(), 3u);
}

TEST(Request, OmitsAbsentLabels) {
  ClassifyRequest req{"x", "AAAA", std::nullopt, 1};
  EXPECT_EQ(serialize_request(req),
            R"({"id":"x","image_png_b64":"AAAA","top_k":1})");
  req.candidate_labels = std::vector<std::string>{"a\"b"};
  EXPECT_EQ(serialize_request(req),
            R"({"id":"x","image_png_b64":"AAAA","candidate_labels":["a\"b"],"top_k":1})");
}

TEST(Request, Strict) {
  const char* bad[] = {
      "",
      "[]",
      "{",
      R"({"image_png_b64":"AA","top_k":1})",
      R"({"id":"x","top_k":1})",
      R"({"id":"x","image_png_b64":"AA"})",
      R"({"id":"x","image_png_b64":"AA","top_k":0})",
      R"({"id":"x","image_png_b64":"AA","top_k":1.5})",
      R"({"id":"x","image_png_b64":"AA","top_k":"3"})",
      R"({"id":7,"image_png_b64":"AA","top_k":1})",
      R"({"id":"x","image_png_b64":"AA","top_k":1,"candidate_labels":[]})",
      R"({"id":"x","image_png_b64":"AA","top_k":1,"candidate_labels":[1]})",
      R"({"id":"x","image_png_b64":"AA","top_k":1,"extra":true})",
  };
  for (const char* doc : bad) {
    EXPECT_THROW(parse_request(doc), ProtocolError) << doc;
  }
}

TEST(Response, Strict) {
  const char* bad[] = {
      "",
      "not json",
      "[1]",
      R"({"model_id":"m","predictions":[{"label":"a","score":1}]})",
      R"({"id":"q","predictions":[{"label":"a","score":1}]})",
      R"({"id":"q","model_id":"","predictions":[{"label":"a","score":1}]})",
      R"({"id":"q","model_id":"m"})",
      R"({"id":"q","model_id":"m","predictions":[]})",
      R"({"id":"q","model_id":"m","predictions":{}})",
      R"({"id":"q","model_id":"m","predictions":[{"label":"a"}]})",
      R"({"id":"q","model_id":"m","predictions":[{"label":"a","score":1.5}]})",
      R"({"id":"q","model_id":"m","predictions":[{"label":"a","score":-0.1}]})",
      R"({"id":"q","model_id":"m","predictions":[{"label":"a","score":"0.5"}]})",
      R"({"id":"q","model_id":"m","predictions":[{"label":"a","score":0.2},{"label":"b","score":0.3}]})",
      R"({"id":"q","error":{"kind":"DecodeError","message":"bad png"}})",
      R"({"id":"other","model_id":"m","predictions":[{"label":"a","score":1}]})",
  };
  for (const char* doc : bad) {
    EXPECT_THROW(parse_response(doc, "q"), ProtocolError) << doc;
  }
  try {
    parse_response(R"({"id":"q","error":{"kind":"DecodeError","message":"bad png"}})");
    FAIL();
  } catch (const ProtocolError& e) {
    EXPECT_NE(std::string(e.what()).find("bad png"), std::string::npos);
  }
  // Without an expected id any id is accepted; ties are not ascending.
  EXPECT_NO_THROW(parse_response(
      R"({"id":"z","model_id":"m","predictions":[{"label":"a","score":0.5},{"label":"b","score":0.5}],"error":null})"));
}

TEST(Response, SerializeRoundTrip) {
  testing::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    ClassifyResponse r{"id-" + std::to_string(i), "m", {}};
    double s = 1.0;
    const int n = testing::uniform_int(rng, 1, 6);
    for (int k = 0; k < n; ++k) {
      s *= testing::uniform_real(rng, 0, 1);
      r.predictions.push_back({"label " + std::to_string(k), s});
    }
    EXPECT_EQ(parse_response(serialize_response(r), r.id), r);
  }
}

TEST(MockStdio, ErrorsKeepTheStreamAlive) {
  std::istringstream in(
      "{\"id\":\"a\",\"top_k\":1}\n"
      "\n"
      "{\"id\":\"b\",\"image_png_b64\":\"!!\",\"top_k\":1}\n" +
      testing::golden_file("request_plain.jsonl"));
  std::ostringstream out;
  harness::run_mock_stdio(in, out, golden_mock());
  std::istringstream lines(out.str());
  std::string l1, l2, l3, extra;
  ASSERT_TRUE(std::getline(lines, l1));
  ASSERT_TRUE(std::getline(lines, l2));
  ASSERT_TRUE(std::getline(lines, l3));
  EXPECT_FALSE(std::getline(lines, extra));
  EXPECT_EQ(l1.rfind(R"({"id":"a","error":{"kind":"ProtocolError")", 0), 0u) << l1;
  EXPECT_EQ(l2.rfind(R"({"id":"b","error":{"kind":"DecodeError")", 0), 0u) << l2;
  EXPECT_EQ(l3 + "\n", testing::golden_file("response_plain.jsonl"));
  EXPECT_THROW(parse_response(l1, "a"), ProtocolError);
}

}  // namespace
}  // namespace glyphclash::protocol
