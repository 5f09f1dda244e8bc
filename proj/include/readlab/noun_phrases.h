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

// Shallow noun-phrase chunking over a coarse POS sequence.

#ifndef READLAB_NOUN_PHRASES_H_
#define READLAB_NOUN_PHRASES_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "readlab/stopwords.h"
#include "readlab/text.h"

namespace readlab {

enum class Pos { kDet, kAdj, kNoun, kVerb, kAdp, kPron, kNum, kOther };

std::string_view pos_name(Pos pos);

// Accepts the coarse labels above and maps the remaining Universal
// Dependencies tags onto them (PROPN -> NOUN, AUX -> VERB, anything else
// unknown -> OTHER).
Pos parse_pos(std::string_view label);

class Tagger {
 public:
  virtual ~Tagger() = default;

  // One label per token of `tt`; deterministic.
  virtual std::vector<Pos> tag(const TokenizedText& tt) const = 0;
};

// Closed-class lexicon plus suffix heuristics. Unknown capitalized,
// acronym-like and technical tokens default to NOUN.
class LexiconTagger : public Tagger {
 public:
  std::vector<Pos> tag(const TokenizedText& tt) const override;

  // Tag of a single word token. `sentence_initial` disables the
  // capitalized-means-proper-noun rule.
  static Pos tag_word(std::string_view word, bool sentence_initial);
};

struct TaggedWord {
  std::string token;
  Pos pos = Pos::kOther;
};

// Tags supplied externally for the whitespace-separated chunks of one text.
// Every token inherits the tag of the chunk containing it, except punctuation
// which is always OTHER.
class PretaggedTagger : public Tagger {
 public:
  explicit PretaggedTagger(std::vector<TaggedWord> words) : words_(std::move(words)) {}

  // Lines of {"token": string, "pos": string}.
  static PretaggedTagger from_jsonl(const std::filesystem::path& path);

  // Throws Error(kInvalidArgument) when the chunks of `tt.source` do not
  // match the supplied tokens one-to-one.
  std::vector<Pos> tag(const TokenizedText& tt) const override;

 private:
  std::vector<TaggedWord> words_;
};

struct NpSpan {
  std::size_t token_begin = 0;
  std::size_t token_end = 0;  // exclusive
  std::size_t char_start = 0;
  std::size_t char_end = 0;  // exclusive

  friend bool operator==(const NpSpan&, const NpSpan&) = default;
};

// Leftmost-longest, non-overlapping matches of DET? (ADJ|NOUN|NUM)* NOUN+
// inside each sentence. Matches without a word-kind token are dropped.
std::vector<NpSpan> extract_noun_phrases(const TokenizedText& tt, std::span<const Pos> tags);
std::vector<NpSpan> extract_noun_phrases(const TokenizedText& tt, const Tagger& tagger);

// Keeps an NP iff one of its word tokens, lowercased, is not a stop-word.
std::vector<NpSpan> filter_stopword_nps(std::span<const NpSpan> nps, const TokenizedText& tt,
                                        const StopwordSet& stopwords);

}  // namespace readlab

#endif  // READLAB_NOUN_PHRASES_H_
