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

// Extractive oracle labels and budgeted top-k sentence selection.

#ifndef READLAB_ORACLE_H_
#define READLAB_ORACLE_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "readlab/rouge.h"

namespace readlab {

using SentenceTokens = std::vector<std::vector<std::string>>;

// ROUGE-1 recall + ROUGE-2 recall of the selected sentences concatenated in
// document order. `selected` need not be sorted.
double oracle_gain(const SentenceTokens& sentences, std::span<const std::size_t> selected,
                   TokenSeq reference);

struct OracleSelection {
  std::vector<std::size_t> selected;  // ascending document order
  std::vector<double> step_scores;    // score after each greedy step
};

inline constexpr std::size_t kUnlimitedSentences = 0;

// Greedy forward selection: each step adds the sentence with the highest
// oracle_gain of the enlarged selection (lowest index on ties) and stops when
// no sentence strictly improves the score or `max_sentences` is reached
// (kUnlimitedSentences = no cap). Throws Error(kInvalidArgument) for an empty
// reference or no sentences.
OracleSelection greedy_oracle(const SentenceTokens& sentences, TokenSeq reference,
                              std::size_t max_sentences = kUnlimitedSentences);

// Sentences in descending score order (lower index on ties) until the next
// one would push the total length past `token_budget`; at least one is always
// taken. Returns ascending indices.
std::vector<std::size_t> topk_select(std::span<const double> sentence_scores,
                                     std::span<const std::size_t> sentence_lengths,
                                     std::size_t token_budget);

}  // namespace readlab

#endif  // READLAB_ORACLE_H_
