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

#include "readlab/complexity.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "readlab/error.h"

namespace readlab {
namespace {

double mean(std::span<const double> values) {
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

// Unbiased draw from [0, bound) using raw engine output; std distributions
// are implementation-defined and would break cross-platform reproducibility.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % bound;
}

}  // namespace

std::vector<NpSpan> scoreable_noun_phrases(const TokenizedText& tt, const NpChunkerConfig& config) {
  static const LexiconTagger kDefaultTagger;
  const Tagger& tagger = config.tagger != nullptr ? *config.tagger : kDefaultTagger;
  const StopwordSet& stopwords =
      config.stopwords != nullptr ? *config.stopwords : default_stopwords();
  const std::vector<NpSpan> nps = extract_noun_phrases(tt, tagger);
  return filter_stopword_nps(nps, tt, stopwords);
}

std::vector<NpProbability> score_noun_phrases(const TokenizedText& tt,
                                              std::span<const NpSpan> nps,
                                              const MaskBackend& backend,
                                              std::size_t* truncated_probes) {
  std::vector<NpProbability> scored;
  scored.reserve(nps.size());
  std::size_t truncated = 0;
  for (const NpSpan& np : nps) {
    MaskProbe probe{tt.source, {{np.char_start, np.char_end}}};
    const ProbeResult result = backend.score(probe);
    validate_result(probe, result);
    if (result.truncated) ++truncated;
    scored.push_back({np, mean(result.span_probs.front()), 0});
  }
  std::vector<std::size_t> order(scored.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scored[a].prob > scored[b].prob;
  });
  for (std::size_t r = 0; r < order.size(); ++r) scored[order[r]].rank = static_cast<int>(r + 1);
  if (truncated_probes != nullptr) *truncated_probes = truncated;
  return scored;
}

double nptc_from_probabilities(std::span<const double> probs) {
  if (probs.empty()) throw Error(ErrorCode::kDegenerateInput, "no scoreable noun phrases");
  return -std::log(mean(probs));
}

double rnptc_from_probabilities(std::span<const double> probs) {
  if (probs.empty()) throw Error(ErrorCode::kDegenerateInput, "no scoreable noun phrases");
  std::vector<double> sorted(probs.begin(), probs.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double weighted = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    weighted += sorted[i] / std::sqrt(static_cast<double>(i + 1));
  }
  return -std::log(weighted / static_cast<double>(sorted.size()));
}

NpComplexity np_complexity(std::string_view text, const MaskBackend& backend,
                           const NpChunkerConfig& config) {
  const TokenizedText tt = tokenize(text);
  const std::vector<NpSpan> nps = scoreable_noun_phrases(tt, config);
  if (nps.empty()) throw Error(ErrorCode::kDegenerateInput, "no scoreable noun phrases");
  std::size_t truncated = 0;
  const std::vector<NpProbability> scored = score_noun_phrases(tt, nps, backend, &truncated);
  std::vector<double> probs;
  probs.reserve(scored.size());
  for (const NpProbability& s : scored) probs.push_back(s.prob);
  return {{nptc_from_probabilities(probs), probs.size(), truncated},
          {rnptc_from_probabilities(probs), probs.size(), truncated}};
}

ComplexityScore nptc(std::string_view text, const MaskBackend& backend,
                     const NpChunkerConfig& config) {
  return np_complexity(text, backend, config).nptc;
}

ComplexityScore rnptc(std::string_view text, const MaskBackend& backend,
                      const NpChunkerConfig& config) {
  return np_complexity(text, backend, config).rnptc;
}

std::vector<std::vector<std::size_t>> select_mask_positions(const TokenizedText& tt,
                                                            double mask_ratio,
                                                            std::uint64_t seed) {
  if (!(mask_ratio > 0.0 && mask_ratio < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "mask ratio must be in (0, 1)");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> selections;
  selections.reserve(tt.sentences.size());
  for (const SentenceRange& s : tt.sentences) {
    std::vector<std::size_t> words;
    for (std::size_t i = s.token_begin; i < s.token_end; ++i) {
      if (tt.tokens[i].is_word()) words.push_back(i);
    }
    if (words.empty()) {
      selections.emplace_back();
      continue;
    }
    const auto wanted = static_cast<std::size_t>(
        std::max(1L, std::lround(mask_ratio * static_cast<double>(words.size()))));
    const std::size_t k = std::min(wanted, words.size());
    // Partial Fisher-Yates: the first k slots become a uniform k-subset.
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + bounded(rng, words.size() - i);
      std::swap(words[i], words[j]);
    }
    words.resize(k);
    std::sort(words.begin(), words.end());
    selections.push_back(std::move(words));
  }
  return selections;
}

ComplexityScore mrttc(std::string_view text, const MaskBackend& backend,
                      double mask_ratio, std::uint64_t seed) {
  const TokenizedText tt = tokenize(text);
  const auto selections = select_mask_positions(tt, mask_ratio, seed);

  double prob_sum = 0.0;
  std::size_t prob_count = 0;
  std::size_t masked = 0;
  std::size_t truncated = 0;
  for (std::size_t si = 0; si < tt.sentences.size(); ++si) {
    const auto& picks = selections[si];
    if (picks.empty()) continue;
    // The sentence alone is the model context for its probe.
    const SentenceRange& s = tt.sentences[si];
    const std::size_t offset = tt.tokens[s.token_begin].char_start;
    const std::size_t end = tt.tokens[s.token_end - 1].char_end;
    MaskProbe probe{tt.source.substr(offset, end - offset), {}};
    for (std::size_t t : picks) {
      probe.mask_spans.push_back({tt.tokens[t].char_start - offset, tt.tokens[t].char_end - offset});
    }
    const ProbeResult result = backend.score(probe);
    validate_result(probe, result);
    if (result.truncated) ++truncated;
    for (const auto& probs : result.span_probs) {
      for (double p : probs) {
        prob_sum += p;
        ++prob_count;
      }
    }
    masked += picks.size();
  }
  if (prob_count == 0) throw Error(ErrorCode::kDegenerateInput, "no scoreable tokens");
  return {-std::log(prob_sum / static_cast<double>(prob_count)), masked, truncated};
}

}  // namespace readlab
