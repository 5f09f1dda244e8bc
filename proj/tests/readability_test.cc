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

#include <gtest/gtest.h>

#include "readlab/error.h"
#include "readlab/text.h"

namespace readlab {
namespace {

TEST(TextStatsTest, Examples) {
  const TextStats one = compute_text_stats(tokenize("WNV is transmitted."));
  EXPECT_EQ(one.words, 3u);
  EXPECT_EQ(one.sentences, 1u);
  EXPECT_EQ(one.syllables, 1u + 1u + 3u);
  EXPECT_EQ(one.letters, 3u + 2u + 11u);

  const TextStats empty = compute_text_stats(tokenize(""));
  EXPECT_EQ(empty.words, 0u);
  EXPECT_EQ(empty.sentences, 0u);
  EXPECT_EQ(empty.syllables, 0u);
  EXPECT_EQ(empty.letters, 0u);

  const TextStats two = compute_text_stats(tokenize("It works. Really."));
  EXPECT_EQ(two.sentences, 2u);
  EXPECT_EQ(two.words, 3u);
}

TEST(TextStatsTest, NumbersAreWordsWithoutLetters) {
  const TextStats s = compute_text_stats(tokenize("About 3.5 cats."));
  EXPECT_EQ(s.words, 3u);
  EXPECT_EQ(s.letters, 5u + 4u);
  EXPECT_EQ(s.syllables, 2u + 1u + 1u);
}

TEST(ClassicScoresTest, HandComputedCases) {
  EXPECT_NEAR(classic_scores({10, 1, 15, 45}).fkg, 6.01, 1e-6);
  EXPECT_NEAR(classic_scores({10, 1, 15, 45}).ari, 4.765, 1e-6);
  EXPECT_NEAR(classic_scores({10, 1, 15, 45}).cli, 7.70, 1e-6);
}

TEST(ClassicScoresTest, DegenerateTextThrows) {
  EXPECT_THROW(classic_scores({0, 0, 0, 0}), Error);
  EXPECT_THROW(classic_scores({5, 0, 5, 20}), Error);
  try {
    classic_scores({0, 1, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateInput);
    EXPECT_STREQ(e.what(), "degenerate text");
  }
}

TEST(ClassicScoresProperty, DuplicationInvariance) {
  for (std::size_t w = 1; w < 40; w += 3) {
    for (std::size_t s = 1; s <= w; s += 2) {
      const TextStats base{w, s, w + s * 2, w * 4 + s};
      const TextStats doubled{2 * w, 2 * s, 2 * (w + s * 2), 2 * (w * 4 + s)};
      const ClassicScores a = classic_scores(base);
      const ClassicScores b = classic_scores(doubled);
      ASSERT_NEAR(a.fkg, b.fkg, 1e-9);
      ASSERT_NEAR(a.cli, b.cli, 1e-9);
      ASSERT_NEAR(a.ari, b.ari, 1e-9);
    }
  }
}

TEST(ClassicScoresProperty, StrictlyIncreasingInWordLength) {
  for (std::size_t extra = 0; extra < 30; ++extra) {
    const ClassicScores a = classic_scores({20, 2, 25 + extra, 90 + extra});
    const ClassicScores b = classic_scores({20, 2, 26 + extra, 91 + extra});
    ASSERT_LT(a.fkg, b.fkg);
    ASSERT_LT(a.cli, b.cli);
    ASSERT_LT(a.ari, b.ari);
  }
}

TEST(ClassicScoresTest, LongerTechnicalTextScoresHigher) {
  const ClassicScores plain =
      classic_scores(compute_text_stats(tokenize("The bug bites birds. Then it bites us.")));
  const ClassicScores technical = classic_scores(compute_text_stats(tokenize(
      "Flaviviral encephalitis manifests predominantly through neuroinvasive pathophysiology.")));
  EXPECT_LT(plain.fkg, technical.fkg);
  EXPECT_LT(plain.cli, technical.cli);
  EXPECT_LT(plain.ari, technical.ari);
}

}  // namespace
}  // namespace readlab
