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
#include <httplib.h>
#include <json.hpp>
#include <signal.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "glyphclash/compositor.h"
#include "glyphclash/harness.h"
#include "glyphclash/metrics.h"
#include "support/fixtures.h"

namespace glyphclash {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliRun {
  int status = -1;
  std::string out;
};

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

CliRun cli(const std::string& args, const std::string& input = {}) {
  std::string cmd = q(testing::cli_path()) + " " + args + " 2>/dev/null";
  if (!input.empty()) cmd = "printf '%s' " + q(input) + " | " + cmd;
  CliRun r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof(buf), p)) > 0) r.out.append(buf, n);
  const int raw = ::pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = testing::make_temp_dir("cli");
    manifest_ = testing::write_fixture_corpus(dir_, 6);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
  fs::path manifest_;
};

TEST_F(Cli, ComposeMatchesLibrary) {
  const harness::CorpusManifest m = harness::load_manifest(manifest_);
  const harness::ManifestEntry& e = m.entries[0];
  write_file(dir_ / "spec.json", dsl::serialize_spec(e.spec));
  const CliRun r = cli("compose " + q(dir_ / "spec.json") + " " +
                    q(dir_ / e.spec.base_image) + " -o " + q(dir_ / "c.png"));
  ASSERT_EQ(r.status, 0);
  const compositor::Composition c = harness::compose_entry(m, e);
  const std::string want = encode_png(c.image, &c.metadata);
  EXPECT_EQ(read_file(dir_ / "c.png"), want);
  EXPECT_NE(r.out.find(sha256_hex(want)), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("text_ink_px=" + std::to_string(c.metadata.text_ink_px)),
            std::string::npos);
}

TEST_F(Cli, ValidateExitCodes) {
  const harness::CorpusManifest m = harness::load_manifest(manifest_);
  write_file(dir_ / "spec.json", dsl::serialize_spec(m.entries[0].spec));
  EXPECT_EQ(cli("validate " + q(dir_ / "spec.json") + " --width 200 --height 200").status, 0);
  const CliRun tiny = cli("validate " + q(dir_ / "spec.json") + " --width 4 --height 4");
  EXPECT_EQ(tiny.status, 1);
  EXPECT_NE(tiny.out.find("error: layer 0"), std::string::npos) << tiny.out;
  write_file(dir_ / "bad.json", "{\"id\": 3}");
  EXPECT_EQ(cli("validate " + q(dir_ / "bad.json")).status, 2);
  EXPECT_EQ(cli("no-such-command").status, 2);
  EXPECT_EQ(cli("--help").status, 0);
}

TEST_F(Cli, CorpusRunReport) {
  const CliRun corpus = cli("corpus " + q(manifest_) + " -j 2");
  ASSERT_EQ(corpus.status, 0);
  const json index = json::parse(corpus.out);
  ASSERT_EQ(index["entries"].size(), 6u);
  const harness::CorpusIndex lib =
      harness::generate_corpus(harness::load_manifest(manifest_), 1);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(index["entries"][i]["sha256"], lib.rows[i].sha256);
  }

  const fs::path results = dir_ / "results.jsonl";
  ASSERT_EQ(cli("run " + q(manifest_) + " -o " + q(results) + " --no-images").status, 0);
  const auto rows = metrics::read_results_jsonl(read_file(results));
  EXPECT_EQ(rows, harness::run_experiment(harness::load_manifest(manifest_), {1, false}));

  const CliRun md = cli("report " + q(results) + " --manifest " + q(manifest_) +
                     " --format md");
  EXPECT_EQ(md.status, 0);
  EXPECT_NE(md.out.find("| category |"), std::string::npos);
  const CliRun js = cli("report " + q(results) + " --manifest " + q(manifest_));
  ASSERT_EQ(js.status, 0);
  EXPECT_EQ(metrics::parse_report(js.out).total_ok, 6u);
}

TEST_F(Cli, RunWithFailingEntryExitsOne) {
  json doc = json::parse(read_file(manifest_));
  doc["entries"][0]["baseline_image"] = "img/missing.png";
  write_file(dir_ / "broken.json", doc.dump());
  const CliRun r = cli("run " + q(dir_ / "broken.json") + " -o " + q(dir_ / "r.jsonl") +
                    " --no-images");
  EXPECT_EQ(r.status, 1);
  const auto rows = metrics::read_results_jsonl(read_file(dir_ / "r.jsonl"));
  EXPECT_EQ(rows[0].status, metrics::OutcomeStatus::kError);
}

TEST_F(Cli, MockAdapterStdio) {
  const CliRun r = cli("mock-adapter --baseline-label 'granny smith' --tau 0.25",
                    testing::golden_file("request_plain.jsonl") +
                        testing::golden_file("request_attacked.jsonl"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, testing::golden_file("response_plain.jsonl") +
                       testing::golden_file("response_attacked.jsonl"));
  EXPECT_EQ(cli("mock-adapter").status, 2);
}

// Starts a long-running subcommand, returns its pid and first stdout line.
struct Background {
  FILE* pipe = nullptr;
  pid_t pid = 0;
  std::string first_line;

  explicit Background(const std::string& args) {
    const std::string cmd = "echo $$; exec " + q(testing::cli_path()) + " " + args;
    pipe = ::popen(cmd.c_str(), "r");
    pid = static_cast<pid_t>(std::stol(line()));
    first_line = line();
  }
  ~Background() {
    ::kill(pid, SIGTERM);
    ::pclose(pipe);
  }
  std::string line() {
    std::string s;
    for (int c; (c = std::fgetc(pipe)) != EOF && c != '\n';) s += static_cast<char>(c);
    return s;
  }
};

TEST_F(Cli, ServeAnswersCompose) {
  Background serve("serve --port 0 --manifest " + q(manifest_));
  const std::string prefix = "listening on http://127.0.0.1:";
  ASSERT_EQ(serve.first_line.rfind(prefix, 0), 0u) << serve.first_line;
  httplib::Client client("127.0.0.1", std::stoi(serve.first_line.substr(prefix.size())));
  const auto health = client.Get("/v1/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(json::parse(health->body)["models"], json::array({"mock"}));

  const harness::CorpusManifest m = harness::load_manifest(manifest_);
  const json body = {{"spec", json::parse(dsl::serialize_spec(m.entries[0].spec))}};
  const auto res = client.Post("/v1/compose", body.dump(), "application/json");
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 200) << res->body;
  const compositor::Composition c = harness::compose_entry(m, m.entries[0]);
  EXPECT_EQ(res->body, encode_png(c.image, &c.metadata));
}

TEST_F(Cli, MockAdapterHttp) {
  Background mock("mock-adapter --http --port 0 --baseline-label apple --model-id m2");
  httplib::Client client("127.0.0.1", std::stoi(mock.first_line));
  const auto res = client.Get("/health");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->body, R"({"model_ids":["m2"],"ready":true})");
}

}  // namespace
}  // namespace glyphclash
