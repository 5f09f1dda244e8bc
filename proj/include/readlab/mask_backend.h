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

// Contract for obtaining the probability a masked language model assigns to
// the original subtokens at masked positions.

#ifndef READLAB_MASK_BACKEND_H_
#define READLAB_MASK_BACKEND_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace readlab {

struct CharSpan {
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive

  friend bool operator==(const CharSpan&, const CharSpan&) = default;
};

// Byte offsets into `text`. Spans are non-empty, sorted and non-overlapping;
// all of them are masked in the same forward pass.
struct MaskProbe {
  std::string text;
  std::vector<CharSpan> mask_spans;
};

struct ProbeResult {
  // Aligned with MaskProbe::mask_spans; each inner list holds the
  // probability of every original subtoken covered by the span.
  std::vector<std::vector<double>> span_probs;
  // The backend had to shrink the context window to fit the model.
  bool truncated = false;
};

struct BackendInfo {
  std::string model;
  std::size_t max_context = 0;
};

// Implementations must be safe to call concurrently.
class MaskBackend {
 public:
  virtual ~MaskBackend() = default;

  virtual ProbeResult score(const MaskProbe& probe) const = 0;

  // Throws Error(kBackendUnavailable) when the backend cannot serve requests.
  virtual BackendInfo health() const = 0;
};

// Throws Error(kInvalidArgument) on out-of-bounds, empty, unsorted or
// overlapping spans.
void validate_probe(const MaskProbe& probe);

// Throws Error(kBackendRequest) unless the result is aligned with the probe
// and every probability is in (0, 1].
void validate_result(const MaskProbe& probe, const ProbeResult& result);

// Deterministic table-driven backend. Each masked span is split on
// whitespace; every piece is one subtoken whose probability is looked up
// verbatim, then lowercased, then falls back to `default_prob`.
class StubBackend : public MaskBackend {
 public:
  explicit StubBackend(std::map<std::string, double> table = {}, double default_prob = 0.5);

  // {"default": real, "table": {subtoken: real, ...}}; both keys optional.
  static StubBackend from_json_file(const std::filesystem::path& path);

  ProbeResult score(const MaskProbe& probe) const override;
  BackendInfo health() const override { return {"stub", 0}; }

  double probability(const std::string& subtoken) const;

 private:
  std::map<std::string, double> table_;
  double default_prob_;
};

}  // namespace readlab

#endif  // READLAB_MASK_BACKEND_H_
