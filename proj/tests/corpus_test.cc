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

#include "readlab/corpus.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>
#include <sstream>

#include "readlab/error.h"

namespace readlab {
namespace {

Corpus parse(const std::string& text) {
  std::istringstream in(text);
  return read_corpus(in, "mem");
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    return e.what();
  }
  return "";
}

Corpus numbered(std::size_t n) {
  Corpus c;
  for (std::size_t i = 0; i < n; ++i) {
    c.push_back({"t" + std::to_string(i), "doc " + std::to_string(i), "tech", std::nullopt});
  }
  return c;
}

TEST(ReadCorpusTest, OneTriplet) {
  const Corpus c = parse(
      R"({"id":"x1","document":"Full text.","technical_summary":"Tech.","plain_summary":"Plain."})"
      "\n");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], (Triplet{"x1", "Full text.", "Tech.", "Plain."}));
  EXPECT_EQ(*c[0].summary(Readability::kPlain), "Plain.");
}

TEST(ReadCorpusTest, PairRecordsAndNulls) {
  const Corpus c = parse(
      "{\"id\":\"c1\",\"abstract\":\"A.\",\"pls\":\"P.\"}\n"
      "\n"
      "{\"id\":\"c2\",\"document\":\"D.\",\"technical_summary\":null,\"plain_summary\":\"P2.\"}\n");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], (Triplet{"c1", "", "A.", "P."}));
  EXPECT_FALSE(c[1].technical_summary.has_value());
}

TEST(ReadCorpusTest, ErrorsCarryLineNumbers) {
  EXPECT_NE(error_of("{\"document\":\"d\",\"plain_summary\":\"p\"}\n").find("mem:1:"), std::string::npos);
  EXPECT_NE(error_of("{\"id\":\"a\",\"plain_summary\":\"p\"}\n{\"id\":\"a\",\"plain_summary\":\"q\"}\n")
                .find("mem:2: duplicate id 'a'"),
            std::string::npos);
  EXPECT_NE(error_of("{\"id\":\"a\",\"document\":\"d\"}\n").find("has no summary"), std::string::npos);
  EXPECT_NE(error_of("{\"id\":\"a\",\"plain_summary\":\"p\"}\n{oops\n").find("mem:2: malformed JSON"),
            std::string::npos);
  EXPECT_NE(error_of("{\"id\":\"\",\"plain_summary\":\"p\"}\n").find("empty 'id'"), std::string::npos);
  EXPECT_NE(error_of("[1,2]\n").find("not a JSON object"), std::string::npos);
  EXPECT_NE(error_of("{\"id\":\"a\",\"plain_summary\":3}\n").find("must be a string"), std::string::npos);
}

TEST(LoadJsonlTest, MissingFileIsIoError) {
  try {
    load_jsonl("/nonexistent/readlab/corpus.jsonl");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(WriteJsonlTest, RoundTrip) {
  const Corpus original = {
      {"a", "Document \"quoted\" \xC3\xA9.", "Tech\nline.", std::nullopt},
      {"b", "", std::nullopt, "Plain."},
      {"c", "Doc.", "T.", "P."},
  };
  std::stringstream buf;
  write_jsonl(buf, original);
  EXPECT_EQ(read_corpus(buf), original);

  const auto path = std::filesystem::temp_directory_path() / "readlab_roundtrip_test.jsonl";
  write_jsonl(path, original);
  EXPECT_EQ(load_jsonl(path), original);
  std::filesystem::remove(path);
}

TEST(SystemOutputsTest, ParseAndValidate) {
  std::istringstream ok(
      "{\"id\":\"a\",\"readability\":\"tech\",\"summary\":\"S.\"}\n"
      "{\"id\":\"a\",\"readability\":\"plain\",\"summary\":\"P.\"}\n");
  const auto outputs = read_system_outputs(ok);
  ASSERT_EQ(outputs.size(), 2u);
  EXPECT_EQ(outputs[1].readability, Readability::kPlain);

  std::istringstream dup(
      "{\"id\":\"a\",\"readability\":\"tech\",\"summary\":\"S.\"}\n"
      "{\"id\":\"a\",\"readability\":\"tech\",\"summary\":\"T.\"}\n");
  EXPECT_THROW(read_system_outputs(dup), Error);
  std::istringstream bad_level("{\"id\":\"a\",\"readability\":\"expert\",\"summary\":\"S.\"}\n");
  EXPECT_THROW(read_system_outputs(bad_level), Error);
  std::istringstream no_summary("{\"id\":\"a\",\"readability\":\"tech\"}\n");
  EXPECT_THROW(read_system_outputs(no_summary), Error);
}

TEST(ReadabilityNameTest, RoundTrip) {
  EXPECT_EQ(parse_readability(readability_name(Readability::kTechnical)), Readability::kTechnical);
  EXPECT_EQ(parse_readability(readability_name(Readability::kPlain)), Readability::kPlain);
  EXPECT_THROW(parse_readability("pls"), Error);
}

TEST(SplitCorpusTest, SizesAndDisjointness) {
  const Corpus c = numbered(10);
  const CorpusSplit s = split_corpus(c, {7, 2, 2});
  EXPECT_EQ(s.train.size(), 6u);
  EXPECT_EQ(s.validation.size(), 2u);
  EXPECT_EQ(s.test.size(), 2u);
  EXPECT_THROW(split_corpus(c, {7, 6, 6}), Error);
}

TEST(SplitCorpusTest, Deterministic) {
  const Corpus c = numbered(50);
  const CorpusSplit a = split_corpus(c, {7, 5, 5});
  const CorpusSplit b = split_corpus(c, {7, 5, 5});
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.validation, b.validation);
  EXPECT_EQ(a.test, b.test);
  const CorpusSplit other = split_corpus(c, {8, 5, 5});
  EXPECT_NE(a.test, other.test);
}

TEST(SplitCorpusProperty, Partition) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 1 + seed % 23;
    const Corpus c = numbered(n);
    const std::size_t v = seed % (n + 1);
    const std::size_t t = (n - v) / 2;
    const CorpusSplit s = split_corpus(c, {seed, v, t});
    std::multiset<std::string> ids;
    for (const Corpus* part : {&s.train, &s.validation, &s.test}) {
      for (const Triplet& x : *part) ids.insert(x.id);
      // Each part keeps corpus order.
      ASSERT_TRUE(std::is_sorted(part->begin(), part->end(), [](const Triplet& a, const Triplet& b) {
        return std::stoi(a.id.substr(1)) < std::stoi(b.id.substr(1));
      }));
    }
    ASSERT_EQ(ids.size(), n);
    std::set<std::string> unique(ids.begin(), ids.end());
    ASSERT_EQ(unique.size(), n);
    ASSERT_EQ(s.validation.size(), v);
    ASSERT_EQ(s.test.size(), t);
  }
}

TEST(CorpusStatsTest, Averages) {
  Corpus c = {
      {"a", std::string(), "one two three", "one"},
      {"b", std::string(), std::nullopt, "one two three four five"},
  };
  std::string hundred, two_hundred;
  for (int i = 0; i < 100; ++i) hundred += "word ";
  for (int i = 0; i < 200; ++i) two_hundred += "word ";
  c[0].document = hundred;
  c[1].document = two_hundred;
  const CorpusStats s = corpus_stats(c);
  EXPECT_EQ(s.doc_count, 2u);
  EXPECT_DOUBLE_EQ(s.avg_doc_words, 150.0);
  EXPECT_DOUBLE_EQ(s.avg_tech_words, 3.0);
  EXPECT_DOUBLE_EQ(s.avg_pls_words, 3.0);
  EXPECT_EQ(s.n_technical, 1u);
  EXPECT_EQ(s.n_plain, 2u);
  EXPECT_THROW(corpus_stats({}), Error);
}

TEST(CorpusStatsProperty, PermutationInvariant) {
  Corpus c;
  std::mt19937 rng(1);
  for (int i = 0; i < 30; ++i) {
    std::string doc;
    for (int k = 0, n = static_cast<int>(rng() % 40); k < n; ++k) doc += "w ";
    c.push_back({"id" + std::to_string(i), doc, "a b " + std::to_string(i), std::nullopt});
  }
  const CorpusStats before = corpus_stats(c);
  std::shuffle(c.begin(), c.end(), rng);
  const CorpusStats after = corpus_stats(c);
  EXPECT_EQ(before.avg_doc_words, after.avg_doc_words);
  EXPECT_EQ(before.avg_tech_words, after.avg_tech_words);
  EXPECT_EQ(before.n_documents, after.n_documents);
}

}  // namespace
}  // namespace readlab
