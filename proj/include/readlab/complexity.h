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

// Masked-language-model text complexity scores. All scores are negative
// natural logarithms of (weighted) mean probabilities, so 0 means "fully
// predictable" and larger values mean harder text.
//
//   MRTTC  random word tokens, a fixed share per sentence, masked together
//          in one probe per sentence; -ln(mean subtoken probability).
//   NPTC   every noun phrase (after stop-word filtering) masked on its own
//          against the full text; NP probability = mean of its subtoken
//          probabilities; -ln(mean NP probability).
//   RNPTC  NP probabilities sorted in descending order p_1 >= ... >= p_n;
//          -ln( (sum_i p_i / sqrt(i)) / n ). The divisor is n, not the sum
//          of the weights.

#ifndef READLAB_COMPLEXITY_H_
#define READLAB_COMPLEXITY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "readlab/mask_backend.h"
#include "readlab/noun_phrases.h"
#include "readlab/stopwords.h"
#include "readlab/text.h"

namespace readlab {

// Null members select LexiconTagger and default_stopwords().
struct NpChunkerConfig {
  const Tagger* tagger = nullptr;
  const StopwordSet* stopwords = nullptr;
};

struct NpProbability {
  NpSpan np;
  double prob = 0.0;
  int rank = 0;  // 1 = most probable
};

struct ComplexityScore {
  double value = 0.0;
  std::size_t units = 0;             // masked tokens (MRTTC) or noun phrases
  std::size_t truncated_probes = 0;  // probes the backend had to window
};

// Filtered noun phrases of `tt` in text order.
std::vector<NpSpan> scoreable_noun_phrases(const TokenizedText& tt, const NpChunkerConfig& config);

// One probe per NP; ranks assigned by descending probability, ties by text
// order. `truncated_probes` may be null.
std::vector<NpProbability> score_noun_phrases(const TokenizedText& tt,
                                              std::span<const NpSpan> nps,
                                              const MaskBackend& backend,
                                              std::size_t* truncated_probes);

// Pure reductions over NP probabilities. Both throw Error(kDegenerateInput)
// on an empty list.
double nptc_from_probabilities(std::span<const double> probs);
double rnptc_from_probabilities(std::span<const double> probs);

// Both throw Error(kDegenerateInput, "no scoreable noun phrases") when
// filtering leaves no NP.
ComplexityScore nptc(std::string_view text, const MaskBackend& backend,
                     const NpChunkerConfig& config = {});
ComplexityScore rnptc(std::string_view text, const MaskBackend& backend,
                      const NpChunkerConfig& config = {});

// NPTC and RNPTC from a single round of probes.
struct NpComplexity {
  ComplexityScore nptc;
  ComplexityScore rnptc;
};
NpComplexity np_complexity(std::string_view text, const MaskBackend& backend,
                           const NpChunkerConfig& config = {});

inline constexpr double kDefaultMaskRatio = 0.15;

// Token indices to mask, one list per sentence (empty for sentences without
// word tokens). Each sentence with k word tokens gets
// max(1, round(mask_ratio * k)) of them, drawn uniformly without
// replacement from a 64-bit Mersenne Twister seeded with `seed`; each list
// is sorted ascending.
std::vector<std::vector<std::size_t>> select_mask_positions(const TokenizedText& tt,
                                                            double mask_ratio,
                                                            std::uint64_t seed);

// Throws Error(kDegenerateInput, "no scoreable tokens") for text without
// word tokens.
ComplexityScore mrttc(std::string_view text, const MaskBackend& backend,
                      double mask_ratio, std::uint64_t seed);

}  // namespace readlab

#endif  // READLAB_COMPLEXITY_H_
