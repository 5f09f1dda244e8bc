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

#include "readlab/mask_backend.h"

#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "readlab/error.h"
#include "readlab/text.h"

namespace readlab {
namespace {

bool valid_probability(double p) { return std::isfinite(p) && p > 0.0 && p <= 1.0; }

}  // namespace

void validate_probe(const MaskProbe& probe) {
  std::size_t prev_end = 0;
  for (std::size_t i = 0; i < probe.mask_spans.size(); ++i) {
    const CharSpan& s = probe.mask_spans[i];
    if (s.start >= s.end) {
      throw Error(ErrorCode::kInvalidArgument, "empty mask span " + std::to_string(i));
    }
    if (s.end > probe.text.size()) {
      throw Error(ErrorCode::kInvalidArgument, "mask span " + std::to_string(i) + " out of bounds");
    }
    if (i > 0 && s.start < prev_end) {
      throw Error(ErrorCode::kInvalidArgument,
                  "mask spans must be sorted and non-overlapping (span " + std::to_string(i) + ")");
    }
    prev_end = s.end;
  }
}

void validate_result(const MaskProbe& probe, const ProbeResult& result) {
  if (result.span_probs.size() != probe.mask_spans.size()) {
    throw Error(ErrorCode::kBackendRequest,
                "backend returned " + std::to_string(result.span_probs.size()) +
                    " spans for " + std::to_string(probe.mask_spans.size()) + " requested");
  }
  for (std::size_t i = 0; i < result.span_probs.size(); ++i) {
    const auto& probs = result.span_probs[i];
    if (probs.empty()) {
      throw Error(ErrorCode::kBackendRequest,
                  "backend returned no subtoken probabilities for span " + std::to_string(i));
    }
    for (double p : probs) {
      if (!valid_probability(p)) {
        throw Error(ErrorCode::kBackendRequest, "backend probability outside (0, 1]");
      }
    }
  }
}

StubBackend::StubBackend(std::map<std::string, double> table, double default_prob)
    : table_(std::move(table)), default_prob_(default_prob) {
  if (!valid_probability(default_prob_)) {
    throw Error(ErrorCode::kInvalidArgument, "stub default probability must be in (0, 1]");
  }
  for (const auto& [token, p] : table_) {
    if (!valid_probability(p)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "stub probability for '" + token + "' must be in (0, 1]");
    }
  }
}

StubBackend StubBackend::from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open stub table: " + path.string());
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    std::map<std::string, double> table;
    if (j.contains("table")) table = j.at("table").get<std::map<std::string, double>>();
    return StubBackend(std::move(table), j.value("default", 0.5));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, path.string() + ": " + e.what());
  }
}

double StubBackend::probability(const std::string& subtoken) const {
  if (const auto it = table_.find(subtoken); it != table_.end()) return it->second;
  if (const auto it = table_.find(to_lower(subtoken)); it != table_.end()) return it->second;
  return default_prob_;
}

ProbeResult StubBackend::score(const MaskProbe& probe) const {
  validate_probe(probe);
  ProbeResult result;
  result.span_probs.reserve(probe.mask_spans.size());
  for (const CharSpan& span : probe.mask_spans) {
    std::istringstream pieces(probe.text.substr(span.start, span.end - span.start));
    std::vector<double> probs;
    std::string piece;
    while (pieces >> piece) probs.push_back(probability(piece));
    // A whitespace-only span still occupies one masked position.
    if (probs.empty()) probs.push_back(default_prob_);
    result.span_probs.push_back(std::move(probs));
  }
  return result;
}

}  // namespace readlab
