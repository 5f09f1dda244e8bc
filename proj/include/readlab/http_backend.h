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

// Client for the masked-LM scoring sidecar.
//
// Wire protocol (HTTP/1.1, UTF-8 JSON):
//   GET  /v1/health -> 200 {"status": "ok", "model": str, "max_context": int}
//   POST /v1/score  {"text": str, "spans": [[start, end], ...]}
//                -> 200 {"spans": [{"subtoken_probs": [real, ...]}, ...],
//                        "model": str, "truncated": bool}
//   errors         -> 4xx/5xx {"error": str}
// Span offsets on the wire count Unicode code points, not bytes.

#ifndef READLAB_HTTP_BACKEND_H_
#define READLAB_HTTP_BACKEND_H_

#include <chrono>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "readlab/mask_backend.h"

namespace readlab {

struct HttpBackendOptions {
  std::string url;  // e.g. "http://localhost:8000"
  int max_in_flight = 8;
  std::chrono::seconds timeout{300};
};

class HttpBackend : public MaskBackend {
 public:
  explicit HttpBackend(HttpBackendOptions options);
  ~HttpBackend() override;

  HttpBackend(const HttpBackend&) = delete;
  HttpBackend& operator=(const HttpBackend&) = delete;

  ProbeResult score(const MaskProbe& probe) const override;
  BackendInfo health() const override;

  // Model identity echoed by the most recent successful response.
  std::string last_model() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Converts byte spans over UTF-8 `text` to code-point spans.
std::vector<CharSpan> to_codepoint_spans(std::string_view text, const std::vector<CharSpan>& spans);

}  // namespace readlab

#endif  // READLAB_HTTP_BACKEND_H_
