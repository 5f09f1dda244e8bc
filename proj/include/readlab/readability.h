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

// Flesch-Kincaid Grade, Coleman-Liau Index and Automated Readability Index.

#ifndef READLAB_READABILITY_H_
#define READLAB_READABILITY_H_

#include <cstddef>

#include "readlab/text.h"

namespace readlab {

struct TextStats {
  std::size_t words = 0;
  std::size_t sentences = 0;
  std::size_t syllables = 0;
  std::size_t letters = 0;  // alphabetic code points in word tokens
};

// Number tokens count as words with one syllable and no letters.
TextStats compute_text_stats(const TokenizedText& tt);

struct ClassicScores {
  double fkg = 0.0;
  double cli = 0.0;
  double ari = 0.0;
};

// Throws Error(kDegenerateInput) when words or sentences is zero.
ClassicScores classic_scores(const TextStats& stats);

}  // namespace readlab

#endif  // READLAB_READABILITY_H_
