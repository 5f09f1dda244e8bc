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

#include "readlab/oracle.h"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "readlab/error.h"

namespace readlab {
namespace {

// Recall-only ROUGE-1 + ROUGE-2 against a fixed reference. Candidate n-grams
// absent from the reference can never match, so only reference n-grams are
// counted.
class GainScorer {
 public:
  explicit GainScorer(TokenSeq reference) {
    for (int n = 1; n <= 2; ++n) {
      Order& order = orders_[n - 1];
      const NgramProfile profile = ngram_profile(reference, n);
      order.total = profile.total;
      for (const auto& [gram, count] : profile.grams) {
        order.index.emplace(gram, order.ref_counts.size());
        order.ref_counts.push_back(count);
      }
    }
  }

  double score(const SentenceTokens& sentences, std::vector<std::size_t> selected) const {
    std::sort(selected.begin(), selected.end());
    std::vector<std::string> joined;
    for (std::size_t s : selected) {
      joined.insert(joined.end(), sentences[s].begin(), sentences[s].end());
    }
    double total = 0.0;
    for (int n = 1; n <= 2; ++n) total += recall(joined, orders_[n - 1], n);
    return total;
  }

 private:
  struct Order {
    std::unordered_map<std::string, std::size_t> index;
    std::vector<std::size_t> ref_counts;
    std::size_t total = 0;
  };

  static double recall(const std::vector<std::string>& tokens, const Order& order, int n) {
    if (order.total == 0) return 0.0;
    std::vector<std::size_t> counts(order.ref_counts.size(), 0);
    const auto len = static_cast<std::size_t>(n);
    std::string key;
    for (std::size_t i = 0; i + len <= tokens.size(); ++i) {
      key = tokens[i];
      for (std::size_t k = 1; k < len; ++k) {
        key.push_back('\x01');
        key += tokens[i + k];
      }
      if (const auto it = order.index.find(key); it != order.index.end()) ++counts[it->second];
    }
    std::size_t matches = 0;
    for (std::size_t g = 0; g < counts.size(); ++g) matches += std::min(counts[g], order.ref_counts[g]);
    return static_cast<double>(matches) / static_cast<double>(order.total);
  }

  Order orders_[2];
};

}  // namespace

double oracle_gain(const SentenceTokens& sentences, std::span<const std::size_t> selected,
                   TokenSeq reference) {
  return GainScorer(reference).score(sentences, {selected.begin(), selected.end()});
}

OracleSelection greedy_oracle(const SentenceTokens& sentences, TokenSeq reference,
                              std::size_t max_sentences) {
  if (reference.empty()) throw Error(ErrorCode::kInvalidArgument, "empty reference");
  if (sentences.empty()) throw Error(ErrorCode::kInvalidArgument, "no sentences to select from");
  const std::size_t cap = max_sentences == kUnlimitedSentences ? sentences.size()
                                                                : std::min(max_sentences, sentences.size());
  const GainScorer scorer(reference);
  OracleSelection out;
  std::vector<bool> taken(sentences.size(), false);
  double current = 0.0;
  while (out.selected.size() < cap) {
    std::size_t best = sentences.size();
    double best_score = current;
    for (std::size_t s = 0; s < sentences.size(); ++s) {
      if (taken[s]) continue;
      std::vector<std::size_t> trial = out.selected;
      trial.push_back(s);
      const double score = scorer.score(sentences, std::move(trial));
      if (score > best_score) {
        best_score = score;
        best = s;
      }
    }
    if (best == sentences.size()) break;
    taken[best] = true;
    out.selected.push_back(best);
    out.step_scores.push_back(best_score);
    current = best_score;
  }
  std::sort(out.selected.begin(), out.selected.end());
  return out;
}

std::vector<std::size_t> topk_select(std::span<const double> sentence_scores,
                                     std::span<const std::size_t> sentence_lengths,
                                     std::size_t token_budget) {
  if (sentence_scores.empty()) throw Error(ErrorCode::kInvalidArgument, "no sentences to select from");
  if (sentence_scores.size() != sentence_lengths.size()) {
    throw Error(ErrorCode::kInvalidArgument, "scores and lengths differ in size");
  }
  if (token_budget == 0) throw Error(ErrorCode::kInvalidArgument, "token budget must be positive");
  std::vector<std::size_t> order(sentence_scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sentence_scores[a] > sentence_scores[b];
  });
  std::vector<std::size_t> picked;
  std::size_t used = 0;
  for (std::size_t idx : order) {
    if (!picked.empty() && used + sentence_lengths[idx] > token_budget) break;
    picked.push_back(idx);
    used += sentence_lengths[idx];
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace readlab
