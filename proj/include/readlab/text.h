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

// Deterministic segmentation of UTF-8 text into word tokens and sentences.
//
// All offsets are byte offsets into TokenizedText::source, which holds the
// NFC-normalized input. Tokens are:
//   * word   - a maximal run of letters/digits containing at least one letter;
//              a single '-' or apostrophe between two alphanumerics stays
//              inside the token ("West-Nile", "don't").
//   * number - the same kind of run made of digits only; a '.' or ','
//              between two digits stays inside ("3.5", "28,124").
//   * punct  - any other non-space code point, one token each.
// Sentences end at '.', '!' or '?' when followed by whitespace and an
// uppercase letter (optionally after opening brackets/quotes) or by the end
// of the text. A period directly after a single-letter word or a known
// abbreviation never ends a sentence, which keeps "e.g." and "Fig." intact.

#ifndef READLAB_TEXT_H_
#define READLAB_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace readlab {

enum class TokenKind { kWord, kNumber, kPunct };

struct Token {
  std::string text;
  std::size_t char_start = 0;
  std::size_t char_end = 0;  // exclusive
  TokenKind kind = TokenKind::kWord;

  bool is_word() const { return kind == TokenKind::kWord; }
  bool is_word_or_number() const { return kind != TokenKind::kPunct; }

  friend bool operator==(const Token&, const Token&) = default;
};

// Half-open range of token indices.
struct SentenceRange {
  std::size_t token_begin = 0;
  std::size_t token_end = 0;

  std::size_t size() const { return token_end - token_begin; }

  friend bool operator==(const SentenceRange&, const SentenceRange&) = default;
};

struct TokenizedText {
  std::string source;
  std::vector<Token> tokens;
  std::vector<SentenceRange> sentences;

  friend bool operator==(const TokenizedText&, const TokenizedText&) = default;
};

// NFC normalization. Ill-formed UTF-8 sequences become U+FFFD.
std::string normalize_nfc(std::string_view text);

TokenizedText tokenize(std::string_view text);

// Vowel-group syllable estimate: runs of [aeiouy], minus one for a final "e"
// preceded by a consonant, clamped to at least 1. Input without any letter
// yields 1.
int count_syllables(std::string_view word);

// Lowercased text of every word and number token, in order.
std::vector<std::string> lowercase_terms(const TokenizedText& tt);
std::vector<std::string> lowercase_terms(const TokenizedText& tt,
                                         const SentenceRange& sentence);

// Unicode-aware lowercase.
std::string to_lower(std::string_view text);

// Number of word/number tokens; the word-count convention used for corpus
// statistics.
std::size_t count_words(const TokenizedText& tt);

}  // namespace readlab

#endif  // READLAB_TEXT_H_
