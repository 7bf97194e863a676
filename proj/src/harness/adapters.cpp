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


#include "glyphclash/adapters.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <istream>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <utility>

#include "common/json_reader.h"
#include "glyphclash/errors.h"
#include "httplib.h"

extern char** environ;

namespace glyphclash::harness {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

metrics::ClassificationResult truncated(metrics::ClassificationResult r,
                                        int top_k) {
  const auto n = static_cast<std::size_t>(std::max(top_k, 1));
  if (r.predictions.size() > n) r.predictions.resize(n);
  return r;
}

std::string next_request_id(std::string_view model_id) {
  static std::atomic<std::uint64_t> counter{0};
  return std::string(model_id) + "-" + std::to_string(++counter);
}

class MockClassifier : public Classifier {
 public:
  MockClassifier(std::string model_id, MockClassifierConfig config)
      : model_id_(std::move(model_id)), config_(std::move(config)) {
    check_mock_config(config_);
  }

  metrics::ClassificationResult classify(
      std::string_view png_bytes, const std::optional<std::vector<std::string>>&,
      int top_k) override {
    const auto start = Clock::now();
    DecodedPng decoded = decode_png(png_bytes);
    metrics::ClassificationResult r =
        truncated(mock_classify(decoded.image, decoded.metadata, config_), top_k);
    r.model_id = model_id_;
    r.latency_ms = elapsed_ms(start);
    return r;
  }

 private:
  std::string model_id_;
  MockClassifierConfig config_;
};

class HttpClassifier : public Classifier {
 public:
  HttpClassifier(std::string model_id, const std::string& url,
                 ClientOptions options)
      : model_id_(std::move(model_id)), options_(options) {
    static constexpr std::string_view kScheme = "http://";
    if (url.rfind(kScheme, 0) != 0) {
      throw ConfigError("http endpoint '" + model_id_ +
                        "' needs an http:// URL, got '" + url + "'");
    }
    const std::size_t slash = url.find('/', kScheme.size());
    host_ = url.substr(0, slash);
    path_ = slash == std::string::npos ? "/" : url.substr(slash);
  }

  metrics::ClassificationResult classify(
      std::string_view png_bytes,
      const std::optional<std::vector<std::string>>& candidate_labels,
      int top_k) override {
    protocol::ClassifyRequest req;
    req.id = next_request_id(model_id_);
    req.image_png_b64 = base64_encode(png_bytes);
    req.candidate_labels = candidate_labels;
    req.top_k = top_k;

    httplib::Client client(host_);
    const auto secs = static_cast<time_t>(options_.timeout_s);
    const auto usecs = static_cast<time_t>((options_.timeout_s - secs) * 1e6);
    client.set_connection_timeout(secs, usecs);
    client.set_read_timeout(secs, usecs);
    client.set_write_timeout(secs, usecs);

    const auto start = Clock::now();
    httplib::Result res =
        client.Post(path_, protocol::serialize_request(req), "application/json");
    const double ms = elapsed_ms(start);
    if (!res) {
      const httplib::Error err = res.error();
      if (err == httplib::Error::ConnectionTimeout ||
          ((err == httplib::Error::Read || err == httplib::Error::Write) &&
           ms >= options_.timeout_s * 1000.0 * 0.95)) {
        throw TimeoutError("'" + model_id_ + "' did not answer within " +
                           std::to_string(options_.timeout_s) + " s");
      }
      throw TransportError("'" + model_id_ + "' at " + host_ + path_ + ": " +
                           httplib::to_string(err));
    }
    if (res->status != 200) {
      throw TransportError("'" + model_id_ + "' returned HTTP " +
                           std::to_string(res->status) + ": " +
                           res->body.substr(0, 200));
    }
    return protocol::to_result(protocol::parse_response(res->body, req.id),
                               model_id_, top_k, ms);
  }

 private:
  std::string model_id_;
  ClientOptions options_;
  std::string host_;
  std::string path_;
};

// Keeps one adapter process alive across requests and talks JSON lines to
// it. Requests are serialized; a timeout kills the process and the next
// request starts a fresh one.
class SubprocessClassifier : public Classifier {
 public:
  SubprocessClassifier(std::string model_id, std::string command,
                       ClientOptions options)
      : model_id_(std::move(model_id)),
        command_(std::move(command)),
        options_(options) {
    // A dead adapter must surface as a TransportError, not kill us.
    ::signal(SIGPIPE, SIG_IGN);
  }

  ~SubprocessClassifier() override { stop(/*graceful=*/true); }

  metrics::ClassificationResult classify(
      std::string_view png_bytes,
      const std::optional<std::vector<std::string>>& candidate_labels,
      int top_k) override {
    protocol::ClassifyRequest req;
    req.id = next_request_id(model_id_);
    req.image_png_b64 = base64_encode(png_bytes);
    req.candidate_labels = candidate_labels;
    req.top_k = top_k;
    const std::string line = protocol::serialize_request(req) + "\n";

    std::lock_guard<std::mutex> lock(mu_);
    if (pid_ <= 0) start();
    const auto start_time = Clock::now();
    const auto deadline =
        start_time + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(options_.timeout_s));
    write_all(line, deadline);
    const std::string reply = read_line(deadline);
    return protocol::to_result(protocol::parse_response(reply, req.id), model_id_,
                               top_k, elapsed_ms(start_time));
  }

 private:
  void start() {
    int in_pipe[2];
    int out_pipe[2];
    if (::pipe2(in_pipe, O_CLOEXEC) != 0) throw_errno("pipe");
    if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
      ::close(in_pipe[0]);
      ::close(in_pipe[1]);
      throw_errno("pipe");
    }
    posix_spawn_file_actions_t actions;
    posix_spawn_file_actions_init(&actions);
    posix_spawn_file_actions_adddup2(&actions, in_pipe[0], STDIN_FILENO);
    posix_spawn_file_actions_adddup2(&actions, out_pipe[1], STDOUT_FILENO);
    // Own process group, so stop() also reaches whatever the shell starts.
    posix_spawnattr_t attr;
    posix_spawnattr_init(&attr);
    posix_spawnattr_setflags(&attr, POSIX_SPAWN_SETPGROUP);
    posix_spawnattr_setpgroup(&attr, 0);
    const char* argv[] = {"sh", "-c", command_.c_str(), nullptr};
    pid_t pid = 0;
    const int rc = ::posix_spawn(&pid, "/bin/sh", &actions, &attr,
                                 const_cast<char* const*>(argv), environ);
    posix_spawnattr_destroy(&attr);
    posix_spawn_file_actions_destroy(&actions);
    ::close(in_pipe[0]);
    ::close(out_pipe[1]);
    if (rc != 0) {
      ::close(in_pipe[1]);
      ::close(out_pipe[0]);
      throw TransportError("cannot start '" + command_ + "': " + std::strerror(rc));
    }
    pid_ = pid;
    to_child_ = in_pipe[1];
    from_child_ = out_pipe[0];
    buffer_.clear();
  }

  void stop(bool graceful) {
    if (pid_ <= 0) return;
    if (to_child_ >= 0) ::close(to_child_);
    to_child_ = -1;
    bool reaped = false;
    if (graceful) {
      for (int i = 0; i < 100 && !reaped; ++i) {
        reaped = ::waitpid(pid_, nullptr, WNOHANG) == pid_;
        if (!reaped) std::this_thread::sleep_for(std::chrono::milliseconds(10));
      }
    }
    ::kill(-pid_, SIGKILL);
    if (!reaped) ::waitpid(pid_, nullptr, 0);
    if (from_child_ >= 0) ::close(from_child_);
    from_child_ = -1;
    pid_ = -1;
  }

  [[noreturn]] void throw_errno(const char* what) {
    throw TransportError(std::string(what) + ": " + std::strerror(errno));
  }

  int remaining_ms(Clock::time_point deadline) const {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - Clock::now());
    return static_cast<int>(std::max<std::int64_t>(0, left.count()));
  }

  [[noreturn]] void timed_out() {
    stop(/*graceful=*/false);
    throw TimeoutError("'" + model_id_ + "' did not answer within " +
                       std::to_string(options_.timeout_s) + " s");
  }

  [[noreturn]] void died(const std::string& why) {
    stop(/*graceful=*/false);
    throw TransportError("adapter '" + model_id_ + "' (" + command_ + "): " + why);
  }

  void write_all(std::string_view data, Clock::time_point deadline) {
    while (!data.empty()) {
      pollfd pfd{to_child_, POLLOUT, 0};
      const int ready = ::poll(&pfd, 1, remaining_ms(deadline));
      if (ready == 0) timed_out();
      if (ready < 0) {
        if (errno == EINTR) continue;
        died(std::strerror(errno));
      }
      const ssize_t n = ::write(to_child_, data.data(), data.size());
      if (n < 0) {
        if (errno == EINTR || errno == EAGAIN) continue;
        died(std::string("write failed: ") + std::strerror(errno));
      }
      data.remove_prefix(static_cast<std::size_t>(n));
    }
  }

  std::string read_line(Clock::time_point deadline) {
    for (;;) {
      const std::size_t nl = buffer_.find('\n');
      if (nl != std::string::npos) {
        std::string line = buffer_.substr(0, nl);
        buffer_.erase(0, nl + 1);
        return line;
      }
      pollfd pfd{from_child_, POLLIN, 0};
      const int ready = ::poll(&pfd, 1, remaining_ms(deadline));
      if (ready == 0) timed_out();
      if (ready < 0) {
        if (errno == EINTR) continue;
        died(std::strerror(errno));
      }
      char chunk[65536];
      const ssize_t n = ::read(from_child_, chunk, sizeof(chunk));
      if (n < 0) {
        if (errno == EINTR || errno == EAGAIN) continue;
        died(std::string("read failed: ") + std::strerror(errno));
      }
      if (n == 0) died("exited before answering");
      buffer_.append(chunk, static_cast<std::size_t>(n));
    }
  }

  std::string model_id_;
  std::string command_;
  ClientOptions options_;
  std::mutex mu_;
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
};

}  // namespace

void check_mock_config(const MockClassifierConfig& config) {
  if (metrics::normalize_label(config.baseline_label).empty()) {
    throw ConfigError("mock classifier needs a baseline_label");
  }
  if (!(config.ink_threshold > 0 && config.ink_threshold < 1)) {
    throw ConfigError("mock ink_threshold must be in (0, 1)");
  }
  if (config.model_id.empty()) throw ConfigError("mock model_id is empty");
}

metrics::ClassificationResult mock_classify(
    const ImageBuffer& image, const std::optional<CompositionMetadata>& metadata,
    const MockClassifierConfig& config) {
  check_mock_config(config);
  const std::string baseline = metrics::normalize_label(config.baseline_label);
  std::optional<std::string> target;
  double adjusted = 0;
  if (metadata) {
    if (metadata->target_label) {
      std::string t = metrics::normalize_label(*metadata->target_label);
      if (!t.empty()) target = std::move(t);
    }
    const double pixels = static_cast<double>(image.pixel_count());
    if (pixels > 0) {
      const double ink = static_cast<double>(metadata->text_ink_px) / pixels;
      const double noise = static_cast<double>(metadata->flood_ink_px) / pixels;
      adjusted = ink - 0.5 * noise;
    }
  }

  metrics::ClassificationResult r;
  r.model_id = config.model_id;
  if (target && adjusted >= config.ink_threshold) {
    const double score =
        std::min(0.99, 0.5 + 5.0 * (adjusted - config.ink_threshold));
    r.predictions.push_back({*target, score});
    if (*target != baseline) r.predictions.push_back({baseline, 1.0 - score});
  } else {
    r.predictions.push_back({baseline, 0.9});
    if (target && *target != baseline) r.predictions.push_back({*target, 0.1});
  }
  return r;
}

protocol::ClassifyResponse mock_respond(const protocol::ClassifyRequest& request,
                                        const MockClassifierConfig& config) {
  const DecodedPng decoded = decode_png(base64_decode(request.image_png_b64));
  const metrics::ClassificationResult r = truncated(
      mock_classify(decoded.image, decoded.metadata, config), request.top_k);
  return {request.id, config.model_id, r.predictions};
}

void run_mock_stdio(std::istream& in, std::ostream& out,
                    const MockClassifierConfig& config) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      const protocol::ClassifyRequest req = protocol::parse_request(line);
      out << protocol::serialize_response(mock_respond(req, config)) << '\n';
    } catch (const Error& e) {
      json_reader::Json j;
      std::string id;
      try {
        const auto parsed = json_reader::Json::parse(line);
        if (parsed.is_object() && parsed.contains("id") && parsed["id"].is_string()) {
          id = parsed["id"].get<std::string>();
        }
      } catch (const std::exception&) {
      }
      j["id"] = id;
      j["error"]["kind"] = e.kind_name();
      j["error"]["message"] = e.what();
      out << j.dump() << '\n';
    }
    out.flush();
  }
}

std::string_view adapter_kind_name(AdapterKind kind) {
  switch (kind) {
    case AdapterKind::kHttp:
      return "http";
    case AdapterKind::kSubprocess:
      return "subprocess";
    case AdapterKind::kMock:
      return "mock";
  }
  return "mock";
}

std::optional<AdapterKind> adapter_kind_from_name(std::string_view name) {
  if (name == "http") return AdapterKind::kHttp;
  if (name == "subprocess") return AdapterKind::kSubprocess;
  if (name == "mock") return AdapterKind::kMock;
  return std::nullopt;
}

std::unique_ptr<Classifier> make_classifier(const AdapterEndpoint& endpoint,
                                            const ClientOptions& options) {
  if (!(options.timeout_s > 0)) throw ConfigError("timeout must be > 0");
  switch (endpoint.kind) {
    case AdapterKind::kMock:
      if (!endpoint.mock) {
        throw ConfigError("mock endpoint '" + endpoint.model_id +
                          "' has no mock configuration");
      }
      return std::make_unique<MockClassifier>(endpoint.model_id, *endpoint.mock);
    case AdapterKind::kHttp:
      return std::make_unique<HttpClassifier>(endpoint.model_id, endpoint.address,
                                              options);
    case AdapterKind::kSubprocess:
      if (endpoint.address.empty()) {
        throw ConfigError("subprocess endpoint '" + endpoint.model_id +
                          "' has no command");
      }
      return std::make_unique<SubprocessClassifier>(endpoint.model_id,
                                                    endpoint.address, options);
  }
  throw ConfigError("unknown adapter kind");
}

metrics::ClassificationResult classify(
    const ImageBuffer& image, const AdapterEndpoint& endpoint,
    const std::optional<std::vector<std::string>>& candidate_labels, int top_k,
    const CompositionMetadata* metadata, const ClientOptions& options) {
  return make_classifier(endpoint, options)
      ->classify(encode_png(image, metadata), candidate_labels, top_k);
}

}  // namespace glyphclash::harness
