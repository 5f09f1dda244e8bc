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

#include "readlab/readability.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "readlab/error.h"

namespace readlab {
namespace {

std::size_t count_letters(std::string_view word) {
  std::size_t letters = 0;
  int32_t i = 0;
  const auto n = static_cast<int32_t>(word.size());
  while (i < n) {
    UChar32 c = 0;
    U8_NEXT(word.data(), i, n, c);
    if (c >= 0 && u_isalpha(c)) ++letters;
  }
  return letters;
}

}  // namespace

TextStats compute_text_stats(const TokenizedText& tt) {
  TextStats stats;
  stats.sentences = tt.sentences.size();
  for (const Token& t : tt.tokens) {
    switch (t.kind) {
      case TokenKind::kWord:
        ++stats.words;
        stats.letters += count_letters(t.text);
        stats.syllables += static_cast<std::size_t>(count_syllables(t.text));
        break;
      case TokenKind::kNumber:
        ++stats.words;
        ++stats.syllables;
        break;
      case TokenKind::kPunct:
        break;
    }
  }
  return stats;
}

ClassicScores classic_scores(const TextStats& stats) {
  if (stats.words == 0 || stats.sentences == 0) {
    throw Error(ErrorCode::kDegenerateInput, "degenerate text");
  }
  const double words = static_cast<double>(stats.words);
  const double words_per_sentence = words / static_cast<double>(stats.sentences);
  const double letters_per_word = static_cast<double>(stats.letters) / words;
  const double syllables_per_word = static_cast<double>(stats.syllables) / words;

  ClassicScores scores;
  scores.fkg = 0.39 * words_per_sentence + 11.8 * syllables_per_word - 15.59;
  // Coleman-Liau works per 100 words.
  const double l = 100.0 * letters_per_word;
  const double s = 100.0 / words_per_sentence;
  scores.cli = 0.0588 * l - 0.296 * s - 15.8;
  scores.ari = 4.71 * letters_per_word + 0.5 * words_per_sentence - 21.43;
  return scores;
}

}  // namespace readlab
