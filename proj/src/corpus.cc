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

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <numeric>
#include <random>
#include <set>

#include "readlab/error.h"
#include "readlab/text.h"

namespace readlab {
namespace {

using nlohmann::json;

Error line_error(std::string_view source, std::size_t line_no, const std::string& what) {
  return Error(ErrorCode::kInvalidArgument,
               std::string(source) + ":" + std::to_string(line_no) + ": " + what);
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

// First present, non-null string among `keys`.
std::optional<std::string> optional_string(const json& j, std::initializer_list<const char*> keys) {
  for (const char* key : keys) {
    const auto it = j.find(key);
    if (it == j.end() || it->is_null()) continue;
    if (!it->is_string()) throw std::invalid_argument(std::string("field '") + key + "' must be a string");
    return it->get<std::string>();
  }
  return std::nullopt;
}

std::string required_id(const json& j) {
  const auto it = j.find("id");
  if (it == j.end() || !it->is_string()) throw std::invalid_argument("missing string field 'id'");
  std::string id = it->get<std::string>();
  if (id.empty()) throw std::invalid_argument("empty 'id'");
  return id;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return in;
}

// Index permutation driven by raw 64-bit Mersenne Twister output.
std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::uint64_t bound = n - i;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw = rng();
    while (draw >= limit) draw = rng();
    std::swap(idx[i], idx[i + draw % bound]);
  }
  return idx;
}

Corpus gather(const Corpus& corpus, std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end());
  Corpus part;
  part.reserve(idx.size());
  for (std::size_t i : idx) part.push_back(corpus[i]);
  return part;
}

}  // namespace

std::string_view readability_name(Readability r) {
  return r == Readability::kTechnical ? "tech" : "plain";
}

Readability parse_readability(std::string_view name) {
  if (name == "tech") return Readability::kTechnical;
  if (name == "plain") return Readability::kPlain;
  throw Error(ErrorCode::kInvalidArgument,
              "readability must be \"tech\" or \"plain\", got \"" + std::string(name) + "\"");
}

Corpus read_corpus(std::istream& in, std::string_view source_name) {
  Corpus corpus;
  std::set<std::string, std::less<>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    Triplet t;
    try {
      const json j = json::parse(line);
      if (!j.is_object()) throw std::invalid_argument("line is not a JSON object");
      t.id = required_id(j);
      t.document = optional_string(j, {"document"}).value_or("");
      t.technical_summary = optional_string(j, {"technical_summary", "abstract"});
      t.plain_summary = optional_string(j, {"plain_summary", "pls"});
    } catch (const json::exception& e) {
      throw line_error(source_name, line_no, std::string("malformed JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw line_error(source_name, line_no, e.what());
    }
    if (!t.technical_summary && !t.plain_summary) {
      throw line_error(source_name, line_no, "triplet '" + t.id + "' has no summary");
    }
    if (!seen.insert(t.id).second) {
      throw line_error(source_name, line_no, "duplicate id '" + t.id + "'");
    }
    corpus.push_back(std::move(t));
  }
  return corpus;
}

Corpus load_jsonl(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return read_corpus(in, path.string());
}

void write_jsonl(std::ostream& out, const Corpus& corpus) {
  for (const Triplet& t : corpus) {
    json j = json::object();
    j["id"] = t.id;
    j["document"] = t.document;
    j["technical_summary"] = t.technical_summary ? json(*t.technical_summary) : json(nullptr);
    j["plain_summary"] = t.plain_summary ? json(*t.plain_summary) : json(nullptr);
    out << j.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
  }
}

void write_jsonl(const std::filesystem::path& path, const Corpus& corpus) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  write_jsonl(out, corpus);
}

std::vector<SystemOutput> read_system_outputs(std::istream& in, std::string_view source_name) {
  std::vector<SystemOutput> outputs;
  std::set<std::pair<std::string, int>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    SystemOutput o;
    try {
      const json j = json::parse(line);
      if (!j.is_object()) throw std::invalid_argument("line is not a JSON object");
      o.id = required_id(j);
      const auto level = optional_string(j, {"readability"});
      if (!level) throw std::invalid_argument("missing string field 'readability'");
      o.readability = parse_readability(*level);
      const auto summary = optional_string(j, {"summary"});
      if (!summary) throw std::invalid_argument("missing string field 'summary'");
      o.summary = *summary;
    } catch (const json::exception& e) {
      throw line_error(source_name, line_no, std::string("malformed JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw line_error(source_name, line_no, e.what());
    } catch (const Error& e) {
      throw line_error(source_name, line_no, e.what());
    }
    if (!seen.emplace(o.id, static_cast<int>(o.readability)).second) {
      throw line_error(source_name, line_no,
                       "duplicate output for id '" + o.id + "' (" +
                           std::string(readability_name(o.readability)) + ")");
    }
    outputs.push_back(std::move(o));
  }
  return outputs;
}

std::vector<SystemOutput> load_system_outputs(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return read_system_outputs(in, path.string());
}

CorpusSplit split_corpus(const Corpus& corpus, const SplitSpec& spec) {
  if (spec.n_validation + spec.n_test > corpus.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "split sizes " + std::to_string(spec.n_validation) + " + " +
                    std::to_string(spec.n_test) + " exceed corpus size " +
                    std::to_string(corpus.size()));
  }
  const std::vector<std::size_t> perm = seeded_permutation(corpus.size(), spec.seed);
  const auto val_end = perm.begin() + static_cast<std::ptrdiff_t>(spec.n_validation);
  const auto test_end = val_end + static_cast<std::ptrdiff_t>(spec.n_test);
  CorpusSplit split;
  split.validation = gather(corpus, {perm.begin(), val_end});
  split.test = gather(corpus, {val_end, test_end});
  split.train = gather(corpus, {test_end, perm.end()});
  return split;
}

CorpusStats corpus_stats(const Corpus& corpus) {
  if (corpus.empty()) throw Error(ErrorCode::kInvalidArgument, "empty corpus");
  CorpusStats stats;
  stats.doc_count = corpus.size();
  double doc_words = 0.0;
  double tech_words = 0.0;
  double pls_words = 0.0;
  for (const Triplet& t : corpus) {
    if (!t.document.empty()) {
      doc_words += static_cast<double>(count_words(tokenize(t.document)));
      ++stats.n_documents;
    }
    if (t.technical_summary && !t.technical_summary->empty()) {
      tech_words += static_cast<double>(count_words(tokenize(*t.technical_summary)));
      ++stats.n_technical;
    }
    if (t.plain_summary && !t.plain_summary->empty()) {
      pls_words += static_cast<double>(count_words(tokenize(*t.plain_summary)));
      ++stats.n_plain;
    }
  }
  auto avg = [](double total, std::size_t n) { return n == 0 ? 0.0 : total / static_cast<double>(n); };
  stats.avg_doc_words = avg(doc_words, stats.n_documents);
  stats.avg_tech_words = avg(tech_words, stats.n_technical);
  stats.avg_pls_words = avg(pls_words, stats.n_plain);
  return stats;
}

}  // namespace readlab
