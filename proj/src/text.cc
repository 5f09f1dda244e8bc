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

#include "readlab/text.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

namespace readlab {
namespace {

struct CodePoint {
  UChar32 value = 0;
  std::size_t next = 0;  // byte offset just past this code point
};

CodePoint decode_at(std::string_view s, std::size_t pos) {
  int32_t i = static_cast<int32_t>(pos);
  UChar32 c = 0;
  U8_NEXT(s.data(), i, static_cast<int32_t>(s.size()), c);
  return {c < 0 ? 0xFFFD : c, static_cast<std::size_t>(i)};
}

bool is_letter(UChar32 c) { return u_isalpha(c); }
bool is_digit(UChar32 c) { return u_isdigit(c); }

bool is_mark(UChar32 c) {
  const int8_t type = u_charType(c);
  return type == U_NON_SPACING_MARK || type == U_COMBINING_SPACING_MARK ||
         type == U_ENCLOSING_MARK;
}

bool is_word_char(UChar32 c) { return is_letter(c) || is_digit(c) || is_mark(c); }

bool is_space(UChar32 c) {
  return u_isUWhiteSpace(c) || u_iscntrl(c) || c == 0x200B || c == 0xFEFF;
}

bool is_intra_word_joiner(UChar32 c) {
  return c == '-' || c == '\'' || c == 0x2019 || c == 0x2010 || c == 0x2011;
}

bool is_terminator(std::string_view t) { return t == "." || t == "!" || t == "?"; }

bool is_closer(std::string_view t) {
  return t == ")" || t == "]" || t == "\"" || t == "'" || t == "”" ||
         t == "’";
}

bool is_opener(std::string_view t) {
  return t == "(" || t == "[" || t == "\"" || t == "'" || t == "“" ||
         t == "‘";
}

// Lowercase forms; compared against the token preceding a period.
constexpr std::array<std::string_view, 24> kAbbreviations = {
    "al",   "approx", "ca",   "cf",  "co",   "dr",  "eq",  "eqs",
    "fig",  "figs",   "inc",  "jr",  "ltd",  "mr",  "mrs", "ms",
    "prof", "ref",    "refs", "resp", "sr",  "st",  "viz", "vs"};

std::size_t code_point_count(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t pos = 0; pos < s.size(); pos = decode_at(s, pos).next) ++n;
  return n;
}

bool is_abbreviation(const Token& t) {
  if (!t.is_word()) return false;
  if (code_point_count(t.text) == 1) return true;
  const std::string lower = to_lower(t.text);
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), lower) !=
         kAbbreviations.end();
}

bool starts_uppercase(const Token& t) {
  if (t.text.empty()) return false;
  const UChar32 c = decode_at(t.text, 0).value;
  return u_isupper(c) || u_istitle(c);
}

std::vector<Token> split_tokens(const std::string& s) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const CodePoint cp = decode_at(s, pos);
    if (is_space(cp.value)) {
      pos = cp.next;
      continue;
    }
    if (!is_letter(cp.value) && !is_digit(cp.value)) {
      tokens.push_back({s.substr(pos, cp.next - pos), pos, cp.next, TokenKind::kPunct});
      pos = cp.next;
      continue;
    }

    const std::size_t start = pos;
    bool has_letter = false;
    UChar32 last = 0;
    std::size_t cur = pos;
    while (true) {
      while (cur < s.size()) {
        const CodePoint c = decode_at(s, cur);
        if (!is_word_char(c.value)) break;
        has_letter = has_letter || is_letter(c.value);
        last = c.value;
        cur = c.next;
      }
      if (cur >= s.size()) break;
      const CodePoint joiner = decode_at(s, cur);
      if (joiner.next >= s.size()) break;
      const CodePoint after = decode_at(s, joiner.next);
      const bool joins_word =
          is_intra_word_joiner(joiner.value) && is_word_char(after.value) &&
          !is_mark(after.value);
      const bool joins_number = (joiner.value == '.' || joiner.value == ',') &&
                                !has_letter && is_digit(last) &&
                                is_digit(after.value);
      if (!joins_word && !joins_number) break;
      cur = joiner.next;
    }
    tokens.push_back({s.substr(start, cur - start), start, cur,
                      has_letter ? TokenKind::kWord : TokenKind::kNumber});
    pos = cur;
  }
  return tokens;
}

std::vector<SentenceRange> split_sentences(const std::vector<Token>& tokens) {
  std::vector<SentenceRange> sentences;
  const std::size_t n = tokens.size();
  std::size_t begin = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (tokens[i].kind != TokenKind::kPunct || !is_terminator(tokens[i].text)) continue;
    if (tokens[i].text == "." && i > 0 &&
        tokens[i - 1].char_end == tokens[i].char_start &&
        is_abbreviation(tokens[i - 1])) {
      continue;
    }
    // Absorb adjacent terminators ("?!", "...") and closing brackets/quotes.
    std::size_t end = i + 1;
    while (end < n && tokens[end].char_start == tokens[end - 1].char_end &&
           tokens[end].kind == TokenKind::kPunct &&
           (is_terminator(tokens[end].text) || is_closer(tokens[end].text))) {
      ++end;
    }
    bool boundary = end == n;
    if (!boundary && tokens[end].char_start > tokens[end - 1].char_end) {
      std::size_t next = end;
      while (next < n && tokens[next].kind == TokenKind::kPunct &&
             is_opener(tokens[next].text)) {
        ++next;
      }
      boundary = next < n && starts_uppercase(tokens[next]);
    }
    if (!boundary) {
      i = end - 1;
      continue;
    }
    sentences.push_back({begin, end});
    begin = end;
    i = end - 1;
  }
  if (begin < n) sentences.push_back({begin, n});
  return sentences;
}

}  // namespace

std::string normalize_nfc(std::string_view text) {
  const bool ascii = std::all_of(text.begin(), text.end(), [](char c) {
    return static_cast<unsigned char>(c) < 0x80;
  });
  if (ascii) return std::string(text);

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC normalizer unavailable");
  const icu::UnicodeString input = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  const icu::UnicodeString normalized = nfc->normalize(input, status);
  if (U_FAILURE(status)) throw std::runtime_error("NFC normalization failed");
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

std::string to_lower(std::string_view text) {
  const bool ascii = std::all_of(text.begin(), text.end(), [](char c) {
    return static_cast<unsigned char>(c) < 0x80;
  });
  if (ascii) {
    std::string out(text);
    for (char& c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
  }
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  u.toLower(icu::Locale::getRoot());
  std::string out;
  u.toUTF8String(out);
  return out;
}

TokenizedText tokenize(std::string_view text) {
  TokenizedText tt;
  tt.source = normalize_nfc(text);
  tt.tokens = split_tokens(tt.source);
  tt.sentences = split_sentences(tt.tokens);
  return tt;
}

int count_syllables(std::string_view word) {
  auto lower = [](char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
  };
  auto is_vowel = [](char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
  };
  auto is_ascii_letter = [](char c) { return c >= 'a' && c <= 'z'; };

  int groups = 0;
  bool in_group = false;
  bool any_letter = false;
  for (char raw : word) {
    const char c = lower(raw);
    if (is_ascii_letter(c)) any_letter = true;
    if (is_vowel(c)) {
      if (!in_group) ++groups;
      in_group = true;
    } else {
      in_group = false;
    }
  }
  if (!any_letter) return 1;
  if (word.size() >= 2) {
    const char last = lower(word[word.size() - 1]);
    const char prev = lower(word[word.size() - 2]);
    if (last == 'e' && is_ascii_letter(prev) && !is_vowel(prev)) --groups;
  }
  return std::max(groups, 1);
}

std::vector<std::string> lowercase_terms(const TokenizedText& tt) {
  return lowercase_terms(tt, SentenceRange{0, tt.tokens.size()});
}

std::vector<std::string> lowercase_terms(const TokenizedText& tt,
                                         const SentenceRange& sentence) {
  std::vector<std::string> terms;
  terms.reserve(sentence.size());
  for (std::size_t i = sentence.token_begin; i < sentence.token_end; ++i) {
    if (tt.tokens[i].is_word_or_number()) terms.push_back(to_lower(tt.tokens[i].text));
  }
  return terms;
}

std::size_t count_words(const TokenizedText& tt) {
  return static_cast<std::size_t>(std::count_if(
      tt.tokens.begin(), tt.tokens.end(),
      [](const Token& t) { return t.is_word_or_number(); }));
}

}  // namespace readlab
