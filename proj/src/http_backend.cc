// Copyright 2026 The readlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "readlab/http_backend.h"

#include <unicode/utf8.h>

#include <httplib.h>

#include <algorithm>
#include <mutex>
#include <nlohmann/json.hpp>
#include <semaphore>

#include "readlab/error.h"

namespace readlab {
namespace {

using nlohmann::json;

struct Endpoint {
  std::string host;
  int port = 80;
  std::string prefix;  // path prefix without trailing slash
};

Endpoint parse_url(const std::string& url) {
  constexpr std::string_view kScheme = "http://";
  if (url.rfind(kScheme, 0) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "backend URL must start with http://: " + url);
  }
  std::string rest = url.substr(kScheme.size());
  Endpoint ep;
  if (const auto slash = rest.find('/'); slash != std::string::npos) {
    ep.prefix = rest.substr(slash);
    rest.resize(slash);
    while (!ep.prefix.empty() && ep.prefix.back() == '/') ep.prefix.pop_back();
  }
  if (const auto colon = rest.rfind(':'); colon != std::string::npos) {
    try {
      ep.port = std::stoi(rest.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "bad port in backend URL: " + url);
    }
    rest.resize(colon);
  }
  if (rest.empty()) throw Error(ErrorCode::kInvalidArgument, "missing host in backend URL: " + url);
  ep.host = rest;
  return ep;
}

std::string error_message(const httplib::Response& res) {
  try {
    const json body = json::parse(res.body);
    if (body.contains("error")) return body.at("error").get<std::string>();
  } catch (const json::exception&) {
  }
  return res.body.empty() ? "HTTP " + std::to_string(res.status) : res.body;
}

using InFlightLimit = std::counting_semaphore<4096>;

class InFlightSlot {
 public:
  explicit InFlightSlot(InFlightLimit& limit) : limit_(limit) { limit_.acquire(); }
  ~InFlightSlot() { limit_.release(); }
  InFlightSlot(const InFlightSlot&) = delete;
  InFlightSlot& operator=(const InFlightSlot&) = delete;

 private:
  InFlightLimit& limit_;
};

}  // namespace

struct HttpBackend::Impl {
  explicit Impl(HttpBackendOptions opts)
      : options(std::move(opts)),
        endpoint(parse_url(options.url)),
        in_flight(std::clamp(options.max_in_flight, 1, 4096)) {}

  httplib::Client client() const {
    httplib::Client cli(endpoint.host, endpoint.port);
    const auto secs = static_cast<time_t>(options.timeout.count());
    cli.set_connection_timeout(10, 0);
    cli.set_read_timeout(secs, 0);
    cli.set_write_timeout(secs, 0);
    return cli;
  }

  HttpBackendOptions options;
  Endpoint endpoint;
  mutable InFlightLimit in_flight;
  mutable std::mutex model_mu;
  mutable std::string model;
};

HttpBackend::HttpBackend(HttpBackendOptions options)
    : impl_(std::make_unique<Impl>(std::move(options))) {}

HttpBackend::~HttpBackend() = default;

std::string HttpBackend::last_model() const {
  std::lock_guard<std::mutex> lock(impl_->model_mu);
  return impl_->model;
}

BackendInfo HttpBackend::health() const {
  httplib::Client cli = impl_->client();
  const auto res = cli.Get(impl_->endpoint.prefix + "/v1/health");
  if (!res) {
    throw Error(ErrorCode::kBackendUnavailable,
                "backend unreachable at " + impl_->options.url + ": " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw Error(ErrorCode::kBackendUnavailable, "backend unhealthy: " + error_message(*res));
  }
  try {
    const json body = json::parse(res->body);
    if (body.value("status", "") != "ok") {
      throw Error(ErrorCode::kBackendUnavailable, "backend status is not ok");
    }
    BackendInfo info{body.value("model", ""), body.value("max_context", std::size_t{0})};
    std::lock_guard<std::mutex> lock(impl_->model_mu);
    impl_->model = info.model;
    return info;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kBackendUnavailable, std::string("malformed health response: ") + e.what());
  }
}

ProbeResult HttpBackend::score(const MaskProbe& probe) const {
  validate_probe(probe);
  json spans = json::array();
  for (const CharSpan& s : to_codepoint_spans(probe.text, probe.mask_spans)) {
    spans.push_back({s.start, s.end});
  }
  const json request = {{"text", probe.text}, {"spans", std::move(spans)}};
  const std::string body = request.dump(-1, ' ', false, json::error_handler_t::replace);

  httplib::Result res = [&] {
    const InFlightSlot slot(impl_->in_flight);
    httplib::Client cli = impl_->client();
    return cli.Post(impl_->endpoint.prefix + "/v1/score", body, "application/json");
  }();

  if (!res) {
    throw Error(ErrorCode::kBackendUnavailable,
                "backend request failed: " + httplib::to_string(res.error()));
  }
  if (res->status >= 500) {
    throw Error(ErrorCode::kBackendUnavailable,
                "backend error " + std::to_string(res->status) + ": " + error_message(*res));
  }
  if (res->status != 200) {
    throw Error(ErrorCode::kBackendRequest,
                "backend rejected probe (" + std::to_string(res->status) + "): " + error_message(*res));
  }

  ProbeResult result;
  try {
    const json reply = json::parse(res->body);
    for (const json& span : reply.at("spans")) {
      result.span_probs.push_back(span.at("subtoken_probs").get<std::vector<double>>());
    }
    result.truncated = reply.value("truncated", false);
    if (reply.contains("model")) {
      std::lock_guard<std::mutex> lock(impl_->model_mu);
      impl_->model = reply.at("model").get<std::string>();
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kBackendRequest, std::string("malformed score response: ") + e.what());
  }
  validate_result(probe, result);
  return result;
}

std::vector<CharSpan> to_codepoint_spans(std::string_view text, const std::vector<CharSpan>& spans) {
  // Spans are sorted, so one forward pass suffices.
  std::vector<CharSpan> out;
  out.reserve(spans.size());
  const auto n = static_cast<int32_t>(text.size());
  int32_t byte = 0;
  std::size_t cp = 0;
  auto advance_to = [&](std::size_t target) {
    while (static_cast<std::size_t>(byte) < target && byte < n) {
      UChar32 c = 0;
      U8_NEXT(text.data(), byte, n, c);
      ++cp;
    }
    return cp;
  };
  for (const CharSpan& s : spans) {
    const std::size_t start = advance_to(s.start);
    const std::size_t end = advance_to(s.end);
    out.push_back({start, end});
  }
  return out;
}

}  // namespace readlab
