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

#include "readlab/rouge.h"

#include <algorithm>

#include "readlab/error.h"
#include "readlab/text.h"

namespace readlab {
namespace {

RougeScore make_score(std::size_t matches, std::size_t candidate_total, std::size_t reference_total) {
  RougeScore s;
  if (candidate_total > 0) s.precision = static_cast<double>(matches) / static_cast<double>(candidate_total);
  if (reference_total > 0) s.recall = static_cast<double>(matches) / static_cast<double>(reference_total);
  if (s.precision + s.recall > 0.0) s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

void check_order(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n-gram order must be >= 1");
}

}  // namespace

NgramProfile ngram_profile(TokenSeq tokens, int n) {
  check_order(n);
  NgramProfile profile;
  profile.n = n;
  const auto order = static_cast<std::size_t>(n);
  if (tokens.size() < order) return profile;
  for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (std::size_t k = 1; k < order; ++k) {
      key.push_back('\x01');
      key += tokens[i + k];
    }
    ++profile.grams[key];
    ++profile.total;
  }
  return profile;
}

RougeScore rouge_n(TokenSeq candidate, TokenSeq reference, int n) {
  const NgramProfile cand = ngram_profile(candidate, n);
  const NgramProfile ref = ngram_profile(reference, n);
  std::size_t matches = 0;
  for (const auto& [gram, count] : ref.grams) {
    if (const auto it = cand.grams.find(gram); it != cand.grams.end()) {
      matches += std::min(count, it->second);
    }
  }
  return make_score(matches, cand.total, ref.total);
}

std::size_t lcs_length(TokenSeq a, TokenSeq b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

RougeScore rouge_l(TokenSeq candidate, TokenSeq reference) {
  return make_score(lcs_length(candidate, reference), candidate.size(), reference.size());
}

double ngram_overlap_fraction(TokenSeq plain, TokenSeq technical, int n) {
  check_order(n);
  const NgramProfile pls = ngram_profile(plain, n);
  if (pls.total == 0) throw Error(ErrorCode::kDegenerateInput, "no n-grams");
  const NgramProfile tech = ngram_profile(technical, n);
  std::size_t shared = 0;
  for (const auto& [gram, count] : pls.grams) {
    if (tech.grams.contains(gram)) shared += count;
  }
  return static_cast<double>(shared) / static_cast<double>(pls.total);
}

std::vector<std::string> rouge_tokens(std::string_view text, bool lowercase) {
  const TokenizedText tt = tokenize(text);
  if (lowercase) return lowercase_terms(tt);
  std::vector<std::string> terms;
  for (const Token& t : tt.tokens) {
    if (t.is_word_or_number()) terms.push_back(t.text);
  }
  return terms;
}

}  // namespace readlab
