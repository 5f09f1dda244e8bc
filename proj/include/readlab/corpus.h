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

// Document / technical summary / plain-language summary triplets.
//
// Corpus JSONL, one object per line:
//   {"id": str, "document": str, "technical_summary": str|null,
//    "plain_summary": str|null}
// Abstract/PLS pair corpora use the same schema with an empty or missing
// "document"; the aliases "abstract" (technical) and "pls" (plain) are also
// accepted on input.
//
// System-output JSONL:
//   {"id": str, "readability": "tech"|"plain", "summary": str}

#ifndef READLAB_CORPUS_H_
#define READLAB_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace readlab {

// The readability demand selecting which target a document pairs with.
enum class Readability { kTechnical, kPlain };

std::string_view readability_name(Readability r);  // "tech" / "plain"
Readability parse_readability(std::string_view name);

struct Triplet {
  std::string id;
  std::string document;
  std::optional<std::string> technical_summary;
  std::optional<std::string> plain_summary;

  const std::optional<std::string>& summary(Readability r) const {
    return r == Readability::kTechnical ? technical_summary : plain_summary;
  }

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

using Corpus = std::vector<Triplet>;

// Validates ids (present, non-empty, unique) and that each triplet carries at
// least one summary. Errors name the 1-based line number.
Corpus read_corpus(std::istream& in, std::string_view source_name = "<stream>");
Corpus load_jsonl(const std::filesystem::path& path);

void write_jsonl(std::ostream& out, const Corpus& corpus);
void write_jsonl(const std::filesystem::path& path, const Corpus& corpus);

struct SystemOutput {
  std::string id;
  Readability readability = Readability::kTechnical;
  std::string summary;
};

// Rejects duplicate (id, readability) pairs.
std::vector<SystemOutput> read_system_outputs(std::istream& in, std::string_view source_name = "<stream>");
std::vector<SystemOutput> load_system_outputs(const std::filesystem::path& path);

struct SplitSpec {
  std::uint64_t seed = 0;
  std::size_t n_validation = 0;
  std::size_t n_test = 0;
};

struct CorpusSplit {
  Corpus train;
  Corpus validation;
  Corpus test;
};

// Seeded uniform sampling without replacement: validation first, test from
// the remainder, train keeps the rest. Each part preserves corpus order.
CorpusSplit split_corpus(const Corpus& corpus, const SplitSpec& spec);

struct CorpusStats {
  std::size_t doc_count = 0;
  double avg_doc_words = 0.0;
  double avg_tech_words = 0.0;
  double avg_pls_words = 0.0;
  // Number of triplets contributing to each average.
  std::size_t n_documents = 0;
  std::size_t n_technical = 0;
  std::size_t n_plain = 0;
};

// Averages run over present (non-empty) fields only. Throws on an empty corpus.
CorpusStats corpus_stats(const Corpus& corpus);

}  // namespace readlab

#endif  // READLAB_CORPUS_H_
