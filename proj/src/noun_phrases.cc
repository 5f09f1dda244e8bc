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

#include "readlab/noun_phrases.h"

#include <fstream>
#include <initializer_list>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <unordered_map>

#include "readlab/error.h"

namespace readlab {
namespace {

using Lexicon = std::unordered_map<std::string, Pos>;

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_consonant(char c) {
  return c >= 'a' && c <= 'z' && c != 'a' && c != 'e' && c != 'i' && c != 'o' && c != 'u';
}

// Regular inflections of an English verb: -s, -ed, -ing.
std::vector<std::string> inflect(const std::string& base) {
  std::vector<std::string> forms{base};
  const char last = base.back();
  const char prev = base.size() > 1 ? base[base.size() - 2] : '\0';
  if (last == 'y' && is_consonant(prev)) {
    const std::string stem = base.substr(0, base.size() - 1);
    forms.push_back(stem + "ies");
    forms.push_back(stem + "ied");
    forms.push_back(base + "ing");
  } else if (last == 'e') {
    forms.push_back(base + "s");
    forms.push_back(base + "d");
    forms.push_back(base.substr(0, base.size() - 1) + "ing");
  } else {
    const bool sibilant = last == 's' || last == 'x' || last == 'z' ||
                          ends_with(base, "ch") || ends_with(base, "sh");
    forms.push_back(base + (sibilant ? "es" : "s"));
    forms.push_back(base + "ed");
    forms.push_back(base + "ing");
  }
  return forms;
}

const Lexicon& lexicon() {
  static const Lexicon* const kLexicon = [] {
    auto* lex = new Lexicon();
    auto add = [lex](Pos pos, std::initializer_list<const char*> words) {
      for (const char* w : words) lex->emplace(w, pos);
    };
    add(Pos::kDet, {"a", "an", "the", "this", "these", "those", "each", "every",
                    "either", "neither", "some", "any", "no", "all", "both",
                    "another", "such", "my", "your", "his", "her", "its", "our",
                    "their", "whose", "several", "many", "much", "few", "most"});
    add(Pos::kPron, {"i", "me", "you", "he", "him", "she", "it", "we", "us",
                     "they", "them", "myself", "yourself", "himself", "herself",
                     "itself", "ourselves", "themselves", "who", "whom", "which",
                     "what", "whoever", "something", "anything", "nothing",
                     "everything", "someone", "anyone", "everyone", "mine",
                     "yours", "hers", "ours", "theirs"});
    add(Pos::kAdp, {"of", "in", "on", "at", "by", "for", "with", "from", "to",
                    "into", "onto", "upon", "about", "above", "across", "after",
                    "against", "along", "among", "amongst", "around", "before",
                    "behind", "below", "beneath", "beside", "besides", "between",
                    "beyond", "during", "except", "inside", "near", "off", "out",
                    "outside", "over", "through", "throughout", "toward",
                    "towards", "under", "underneath", "unlike", "until", "up",
                    "via", "within", "without", "per", "versus", "despite",
                    "than", "like", "since", "down"});
    add(Pos::kNum, {"zero", "one", "two", "three", "four", "five", "six", "seven",
                    "eight", "nine", "ten", "eleven", "twelve", "twenty",
                    "thirty", "forty", "fifty", "hundred", "thousand", "million",
                    "billion"});
    add(Pos::kOther, {"and", "or", "but", "nor", "so", "yet", "if", "because",
                      "although", "though", "while", "whereas", "whether", "not",
                      "also", "very", "however", "therefore", "thus", "hence",
                      "moreover", "furthermore", "here", "there", "then", "when",
                      "where", "why", "how", "only", "just", "even", "still",
                      "already", "often", "always", "never", "sometimes", "more",
                      "less", "least", "rather", "quite", "too", "well", "again",
                      "further", "once", "as", "that", "whereby", "yes", "instead",
                      "now", "together", "either", "otherwise", "almost", "ever",
                      "to"});
    add(Pos::kAdj, {"new", "old", "high", "higher", "highest", "low", "lower",
                    "lowest", "large", "larger", "largest", "small", "smaller",
                    "smallest", "big", "little", "long", "short", "important",
                    "different", "similar", "significant", "major", "minor",
                    "good", "bad", "better", "best", "worse", "worst", "great",
                    "greater", "common", "rare", "main", "key", "early", "late",
                    "recent", "current", "various", "specific", "certain",
                    "possible", "likely", "unlikely", "able", "due", "other",
                    "same", "own", "whole", "entire", "additional", "novel",
                    "known", "unknown", "severe", "mild", "normal", "healthy",
                    "free", "full", "first", "second", "third", "last", "next",
                    "previous", "following", "human", "strong", "weak", "wide",
                    "broad", "poor", "rich", "young", "single", "multiple",
                    "further", "difficult", "easy", "true", "false", "real",
                    "general", "overall", "potential", "distinct", "complex",
                    "simple", "natural", "total", "average", "available"});
    // Nouns that would otherwise hit a suffix rule, plus noun/verb homographs
    // ("study", "result", "need") whose noun reading should win. Inserted
    // before the verbs since emplace keeps the first entry.
    add(Pos::kNoun, {"trial", "trials", "signal", "signals", "animal", "animals",
                     "hospital", "hospitals", "individual", "individuals",
                     "material", "materials", "interval", "intervals", "journal",
                     "protocol", "protocols", "manual", "approval", "survival",
                     "removal", "arrival", "proposal", "rival", "clinic",
                     "clinics", "topic", "topics", "epidemic", "epidemics",
                     "pandemic", "logic", "music", "antibiotic", "antibiotics",
                     "mechanic", "family", "supply", "assembly", "anomaly",
                     "rally", "ally", "fly", "belly", "jelly", "capital",
                     "chemical", "chemicals", "professional", "professionals",
                     "criminal", "terminal", "vessel", "vessels", "model",
                     "models", "level", "levels", "fuel", "need", "seed",
                     "seeds", "bed", "feed", "speed", "red", "child", "children",
                     "analysis", "analyses", "data", "basis", "process",
                     "access", "success", "stress", "virus", "viruses",
                     "disease", "diseases", "response", "responses", "people",
                     "patients", "patient", "cell", "cells", "gene", "genes",
                     "protein", "proteins", "risk", "risks", "time", "times",
                     "effect", "effects", "result", "results", "study"});
    // Auxiliaries and frequent lexical verbs of scientific prose.
    add(Pos::kVerb, {"be", "am", "is", "are", "was", "were", "been", "being",
                     "have", "has", "had", "having", "do", "does", "did", "doing",
                     "done", "can", "could", "will", "would", "shall", "should",
                     "may", "might", "must", "found", "made", "took", "taken",
                     "gave", "given", "led", "became", "knew", "known", "thought",
                     "grew", "grown", "understood", "spread", "spreads",
                     "spreading", "died", "dying", "showed", "shown", "seen",
                     "saw", "got", "held", "kept", "left", "lost", "meant",
                     "built", "brought", "began", "begun", "chose", "chosen",
                     "fell", "felt", "controlled", "controlling", "controls",
                     "control", "occurred", "occurring", "referred", "referring",
                     "binds", "bound"});
    for (const char* base :
         {"show", "reveal", "indicate", "suggest", "demonstrate", "find",
          "identify", "increase", "decrease", "reduce", "cause", "affect",
          "infect", "use", "examine", "investigate", "study", "analyze",
          "analyse", "determine", "describe", "report", "observe", "measure",
          "compare", "provide", "include", "require", "remain", "become",
          "make", "take", "give", "help", "allow", "lead", "develop", "produce",
          "contain", "involve", "associate", "relate", "depend", "play", "seem",
          "appear", "occur", "result", "regulate", "express", "bind", "encode",
          "activate", "inhibit", "promote", "prevent", "induce", "mediate",
          "enhance", "improve", "treat", "test", "confirm", "propose",
          "understand", "know", "think", "believe", "need", "want", "explain",
          "predict", "estimate", "evaluate", "assess", "detect", "obtain",
          "perform", "conduct", "collect", "transmit", "live", "die", "kill",
          "grow", "change", "form", "exist", "support", "apply", "enable",
          "focus", "consider", "represent", "exhibit", "display", "lack",
          "carry", "suffer", "survive", "respond", "interact", "modulate",
          "characterize", "characterise", "highlight", "establish", "explore",
          "address", "aim", "work", "call", "get", "keep", "hold", "begin",
          "see", "look", "tend", "fail", "try", "vary", "differ", "emerge",
          "arise", "contribute", "underlie", "recruit", "trigger", "block",
          "target", "limit", "drive", "facilitate", "impair", "reflect"}) {
      for (std::string& form : inflect(base)) lex->emplace(std::move(form), Pos::kVerb);
    }
    return lex;
  }();
  return *kLexicon;
}

bool has_internal_upper_or_digit(std::string_view word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    const char c = word[i];
    if (c >= '0' && c <= '9') return true;
    if (i > 0 && c >= 'A' && c <= 'Z') return true;
  }
  return false;
}

bool starts_upper(std::string_view word) {
  return !word.empty() && word[0] >= 'A' && word[0] <= 'Z';
}

Pos suffix_tag(std::string_view lower) {
  if (lower.size() <= 4) return Pos::kNoun;
  for (std::string_view s : {"tion", "sion", "ness", "ity", "osis", "itis", "ment", "ism",
                             "ogy", "ance", "ence", "ship"}) {
    if (ends_with(lower, s)) return Pos::kNoun;
  }
  for (std::string_view s : {"ous", "ive", "al", "ic", "able", "ible", "ful", "less"}) {
    if (ends_with(lower, s)) return Pos::kAdj;
  }
  if (ends_with(lower, "ly")) return Pos::kOther;
  if (ends_with(lower, "ed")) return Pos::kVerb;
  return Pos::kNoun;
}

// Whitespace-delimited chunks of `source` as [start, end) byte ranges.
std::vector<std::pair<std::size_t, std::size_t>> whitespace_chunks(const std::string& source) {
  std::vector<std::pair<std::size_t, std::size_t>> chunks;
  const std::string_view ws = " \t\r\n\f\v";
  std::size_t pos = source.find_first_not_of(ws);
  while (pos != std::string::npos) {
    const std::size_t end = std::min(source.find_first_of(ws, pos), source.size());
    chunks.emplace_back(pos, end);
    pos = source.find_first_not_of(ws, end);
  }
  return chunks;
}

}  // namespace

std::string_view pos_name(Pos pos) {
  switch (pos) {
    case Pos::kDet: return "DET";
    case Pos::kAdj: return "ADJ";
    case Pos::kNoun: return "NOUN";
    case Pos::kVerb: return "VERB";
    case Pos::kAdp: return "ADP";
    case Pos::kPron: return "PRON";
    case Pos::kNum: return "NUM";
    case Pos::kOther: return "OTHER";
  }
  return "OTHER";
}

Pos parse_pos(std::string_view label) {
  static const std::map<std::string_view, Pos> kLabels = {
      {"DET", Pos::kDet},   {"ADJ", Pos::kAdj},   {"NOUN", Pos::kNoun},
      {"PROPN", Pos::kNoun}, {"VERB", Pos::kVerb}, {"AUX", Pos::kVerb},
      {"ADP", Pos::kAdp},   {"PRON", Pos::kPron}, {"NUM", Pos::kNum},
      {"OTHER", Pos::kOther}};
  const auto it = kLabels.find(label);
  return it == kLabels.end() ? Pos::kOther : it->second;
}

Pos LexiconTagger::tag_word(std::string_view word, bool sentence_initial) {
  const std::string lower = to_lower(word);
  const Lexicon& lex = lexicon();
  if (const auto it = lex.find(lower); it != lex.end()) return it->second;
  if (has_internal_upper_or_digit(word)) return Pos::kNoun;
  if (!sentence_initial && starts_upper(word)) return Pos::kNoun;
  return suffix_tag(lower);
}

std::vector<Pos> LexiconTagger::tag(const TokenizedText& tt) const {
  std::vector<Pos> tags(tt.tokens.size(), Pos::kOther);
  for (const SentenceRange& s : tt.sentences) {
    for (std::size_t i = s.token_begin; i < s.token_end; ++i) {
      const Token& t = tt.tokens[i];
      switch (t.kind) {
        case TokenKind::kPunct: tags[i] = Pos::kOther; break;
        case TokenKind::kNumber: tags[i] = Pos::kNum; break;
        case TokenKind::kWord: tags[i] = tag_word(t.text, i == s.token_begin); break;
      }
    }
  }
  return tags;
}

PretaggedTagger PretaggedTagger::from_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open pre-tagged file: " + path.string());
  std::vector<TaggedWord> words;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const nlohmann::json j = nlohmann::json::parse(line);
      words.push_back({j.at("token").get<std::string>(), parse_pos(j.at("pos").get<std::string>())});
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kInvalidArgument,
                  path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return PretaggedTagger(std::move(words));
}

std::vector<Pos> PretaggedTagger::tag(const TokenizedText& tt) const {
  const auto chunks = whitespace_chunks(tt.source);
  if (chunks.size() != words_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "pre-tagged token count " + std::to_string(words_.size()) +
                    " does not match " + std::to_string(chunks.size()) +
                    " whitespace tokens");
  }
  for (std::size_t c = 0; c < chunks.size(); ++c) {
    const auto [start, end] = chunks[c];
    if (tt.source.compare(start, end - start, normalize_nfc(words_[c].token)) != 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "pre-tagged token '" + words_[c].token + "' does not match text at chunk " +
                      std::to_string(c));
    }
  }
  std::vector<Pos> tags(tt.tokens.size(), Pos::kOther);
  std::size_t c = 0;
  for (std::size_t i = 0; i < tt.tokens.size(); ++i) {
    const Token& t = tt.tokens[i];
    while (chunks[c].second <= t.char_start) ++c;
    tags[i] = t.kind == TokenKind::kPunct ? Pos::kOther : words_[c].pos;
  }
  return tags;
}

std::vector<NpSpan> extract_noun_phrases(const TokenizedText& tt, std::span<const Pos> tags) {
  if (tags.size() != tt.tokens.size()) {
    throw Error(ErrorCode::kInvalidArgument, "tag count does not match token count");
  }
  std::vector<NpSpan> nps;
  for (const SentenceRange& s : tt.sentences) {
    std::size_t i = s.token_begin;
    while (i < s.token_end) {
      std::size_t j = i;
      if (tags[j] == Pos::kDet) ++j;
      // Any run over {ADJ, NOUN, NUM} ending in NOUN matches
      // (ADJ|NOUN|NUM)* NOUN+, so the longest match ends at the run's last NOUN.
      std::size_t match_end = 0;
      while (j < s.token_end &&
             (tags[j] == Pos::kAdj || tags[j] == Pos::kNoun || tags[j] == Pos::kNum)) {
        if (tags[j] == Pos::kNoun) match_end = j + 1;
        ++j;
      }
      if (match_end == 0) {
        ++i;
        continue;
      }
      bool has_word = false;
      for (std::size_t k = i; k < match_end; ++k) has_word = has_word || tt.tokens[k].is_word();
      if (has_word) {
        nps.push_back({i, match_end, tt.tokens[i].char_start, tt.tokens[match_end - 1].char_end});
      }
      i = match_end;
    }
  }
  return nps;
}

std::vector<NpSpan> extract_noun_phrases(const TokenizedText& tt, const Tagger& tagger) {
  const std::vector<Pos> tags = tagger.tag(tt);
  return extract_noun_phrases(tt, tags);
}

std::vector<NpSpan> filter_stopword_nps(std::span<const NpSpan> nps, const TokenizedText& tt,
                                        const StopwordSet& stopwords) {
  std::vector<NpSpan> kept;
  for (const NpSpan& np : nps) {
    for (std::size_t i = np.token_begin; i < np.token_end; ++i) {
      const Token& t = tt.tokens[i];
      if (t.is_word() && !stopwords.contains(to_lower(t.text))) {
        kept.push_back(np);
        break;
      }
    }
  }
  return kept;
}

}  // namespace readlab
