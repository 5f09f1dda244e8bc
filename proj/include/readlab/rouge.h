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

// ROUGE-N, ROUGE-L and the plain-vs-technical n-gram overlap fraction.
// Inputs are already-normalized token sequences (see rouge_tokens); no
// stemming and no stop-word removal is applied here.

#ifndef READLAB_ROUGE_H_
#define READLAB_ROUGE_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace readlab {

using TokenSeq = std::span<const std::string>;

// Multiset of the n-grams of a token sequence; keys join tokens with U+0001.
struct NgramProfile {
  int n = 1;
  std::map<std::string, std::size_t> grams;
  std::size_t total = 0;  // max(0, len - n + 1)
};

NgramProfile ngram_profile(TokenSeq tokens, int n);

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Clipped n-gram matches. Empty sides score 0.
RougeScore rouge_n(TokenSeq candidate, TokenSeq reference, int n);

// Longest common subsequence based.
RougeScore rouge_l(TokenSeq candidate, TokenSeq reference);

std::size_t lcs_length(TokenSeq a, TokenSeq b);

// Share of the plain summary's n-gram occurrences whose n-gram type occurs
// in the technical summary. Throws Error(kDegenerateInput, "no n-grams")
// when the plain side has fewer than n tokens.
double ngram_overlap_fraction(TokenSeq plain, TokenSeq technical, int n);

// Word and number tokens of `text`, lowercased unless `lowercase` is false.
std::vector<std::string> rouge_tokens(std::string_view text, bool lowercase = true);

}  // namespace readlab

#endif  // READLAB_ROUGE_H_
