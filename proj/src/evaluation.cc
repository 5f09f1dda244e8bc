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

#include "readlab/evaluation.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <nlohmann/json.hpp>
#include <thread>
#include <unordered_map>

#include "readlab/complexity.h"
#include "readlab/error.h"
#include "readlab/http_backend.h"
#include "readlab/oracle.h"
#include "readlab/readability.h"
#include "readlab/rouge.h"
#include "readlab/stats.h"
#include "readlab/stopwords.h"
#include "readlab/text.h"

namespace readlab {
namespace {

using nlohmann::json;

constexpr int kMaxOverlapOrder = 4;

// Runs fn(0..n-1) on up to `workers` threads. The first exception stops the
// remaining work and is rethrown.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn&& fn) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> threads;
  const std::size_t count = std::min(workers, n);
  threads.reserve(count);
  for (std::size_t w = 0; w < count; ++w) {
    threads.emplace_back([&] {
      while (!stop.load()) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) break;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!failure) failure = std::current_exception();
          stop = true;
        }
      }
    });
  }
  for (std::thread& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Records `body`'s Error as a cell-level failure unless the backend is gone.
template <typename Fn, typename OnError>
void guarded(Fn&& body, OnError&& on_error) {
  try {
    body();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kBackendUnavailable) throw;
    on_error(std::string(e.what()));
  }
}

struct SummaryScores {
  std::map<std::string, MetricCell> cells;
  std::size_t truncated = 0;
};

struct Scorer {
  const EvalConfig& config;
  const MaskBackend* backend;
  NpChunkerConfig chunker;

  bool wants(const std::string& metric) const { return config.metrics.contains(metric); }

  SummaryScores score(const std::string& text) const {
    SummaryScores out;
    auto fail = [&](std::vector<std::string> metrics) {
      return [&out, metrics = std::move(metrics), this](const std::string& reason) {
        for (const std::string& m : metrics) {
          if (wants(m)) out.cells[m] = MetricCell::failed(reason);
        }
      };
    };
    if (wants("fkg") || wants("cli") || wants("ari")) {
      guarded(
          [&] {
            const ClassicScores s = classic_scores(compute_text_stats(tokenize(text)));
            if (wants("fkg")) out.cells["fkg"] = MetricCell::ok(s.fkg);
            if (wants("cli")) out.cells["cli"] = MetricCell::ok(s.cli);
            if (wants("ari")) out.cells["ari"] = MetricCell::ok(s.ari);
          },
          fail({"fkg", "cli", "ari"}));
    }
    if (wants("nptc") || wants("rnptc")) {
      guarded(
          [&] {
            const NpComplexity c = np_complexity(text, *backend, chunker);
            if (wants("nptc")) out.cells["nptc"] = MetricCell::ok(c.nptc.value);
            if (wants("rnptc")) out.cells["rnptc"] = MetricCell::ok(c.rnptc.value);
            out.truncated += c.nptc.truncated_probes;
          },
          fail({"nptc", "rnptc"}));
    }
    if (wants("mrttc")) {
      guarded(
          [&] {
            const ComplexityScore c = mrttc(text, *backend, config.mask_ratio, config.seed);
            out.cells["mrttc"] = MetricCell::ok(c.value);
            out.truncated += c.truncated_probes;
          },
          fail({"mrttc"}));
    }
    return out;
  }
};

std::string join(const std::set<std::string>& items) {
  std::string out;
  for (const std::string& s : items) out += (out.empty() ? "" : ",") + s;
  return out;
}

std::string describe_backend(const BackendSpec& spec) {
  switch (spec.kind) {
    case BackendSpec::Kind::kNone: return "none";
    case BackendSpec::Kind::kStub: return "stub:" + spec.location;
    case BackendSpec::Kind::kHttp: return "http:" + spec.location;
  }
  return "none";
}

std::optional<StopwordSet> load_configured_stopwords(const EvalConfig& config) {
  if (!config.stopword_path) return std::nullopt;
  return load_stopwords(*config.stopword_path);
}

// Validates the config, checks the backend and fills the info section.
void prepare_run(const EvalConfig& config, const MaskBackend* backend, const StopwordSet& stopwords,
                 MetricReport& report) {
  config.validate();
  const bool mlm = needs_backend(config.metrics);
  if (mlm && backend == nullptr) {
    throw Error(ErrorCode::kInvalidArgument,
                "metrics " + join(config.metrics) + " need a backend (--backend-url or --stub-table)");
  }
  report.info["backend"] = mlm ? describe_backend(config.backend) : "none";
  if (mlm) report.info["backend_model"] = backend->health().model;
  report.info["float_format"] = "fixed5";
  report.info["log_base"] = "e";
  report.info["mask_ratio"] = format_fixed5(config.mask_ratio);
  report.info["metrics"] = join(config.metrics);
  report.info["rouge_lowercase"] = config.rouge_lowercase ? "true" : "false";
  report.info["seed"] = std::to_string(config.seed);
  report.info["stopwords"] = stopwords.version();
  report.info["tagger"] = "lexicon";
}

void finish_report(MetricReport& report) {
  report.aggregates = group_means(report);
  report.correlations = readability_correlations(report);
  for (const auto& [metric, levels] : report.aggregates) {
    for (const auto& [level, g] : levels) {
      if (g.excluded > 0) {
        report.notes.push_back(metric + "/" + level + ": " + std::to_string(g.excluded) +
                               " document(s) excluded after metric errors");
      }
    }
  }
}

class ProgressReporter {
 public:
  ProgressReporter(const ProgressSink& sink, std::size_t total) : sink_(sink), total_(total) {}

  void done(const std::string& id, const std::string& level,
            std::chrono::steady_clock::duration elapsed) {
    if (!sink_) return;
    const double ms = std::chrono::duration<double, std::milli>(elapsed).count();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1f ms", ms);
    std::lock_guard<std::mutex> lock(mu_);
    ++finished_;
    sink_("[" + std::to_string(finished_) + "/" + std::to_string(total_) + "] " + id + " " +
          level + " " + buf);
  }

 private:
  const ProgressSink& sink_;
  std::size_t total_;
  std::size_t finished_ = 0;
  std::mutex mu_;
};

void add_overlap_cells(DocumentReport& doc, const std::string& prefix, const std::string& plain,
                       const std::string& tech, bool lowercase) {
  const std::vector<std::string> p = rouge_tokens(plain, lowercase);
  const std::vector<std::string> t = rouge_tokens(tech, lowercase);
  for (int n = 1; n <= kMaxOverlapOrder; ++n) {
    MetricCell& cell = doc.cells[{kLevelPair, prefix + std::to_string(n)}];
    guarded([&] { cell = MetricCell::ok(ngram_overlap_fraction(p, t, n)); },
            [&](const std::string& reason) { cell = MetricCell::failed(reason); });
  }
}

void add_rouge_cells(std::map<std::string, MetricCell>& cells, const std::string& candidate,
                     const std::string& reference, bool lowercase) {
  const std::vector<std::string> c = rouge_tokens(candidate, lowercase);
  const std::vector<std::string> r = rouge_tokens(reference, lowercase);
  auto put = [&](const std::string& name, const RougeScore& s) {
    cells[name + "_f"] = MetricCell::ok(s.f1);
    cells[name + "_p"] = MetricCell::ok(s.precision);
    cells[name + "_r"] = MetricCell::ok(s.recall);
  };
  put("rouge1", rouge_n(c, r, 1));
  put("rouge2", rouge_n(c, r, 2));
  put("rougeL", rouge_l(c, r));
}

}  // namespace

const std::set<std::string>& known_metrics() {
  static const std::set<std::string> kMetrics = {"rnptc", "nptc", "mrttc", "fkg",
                                                 "cli",   "ari",  "rouge", "overlap"};
  return kMetrics;
}

bool needs_backend(const std::set<std::string>& metrics) {
  return metrics.contains("rnptc") || metrics.contains("nptc") || metrics.contains("mrttc");
}

void EvalConfig::validate() const {
  if (metrics.empty()) throw Error(ErrorCode::kInvalidArgument, "metric set is empty");
  for (const std::string& m : metrics) {
    if (!known_metrics().contains(m)) throw Error(ErrorCode::kInvalidArgument, "unknown metric: " + m);
  }
  if (!(mask_ratio > 0.0 && mask_ratio < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "mask_ratio must be in (0, 1)");
  }
  if (output_format != "json" && output_format != "csv") {
    throw Error(ErrorCode::kInvalidArgument, "output_format must be json or csv");
  }
  if (workers == 0) throw Error(ErrorCode::kInvalidArgument, "workers must be >= 1");
  if (max_in_flight < 1) throw Error(ErrorCode::kInvalidArgument, "max_in_flight must be >= 1");
}

EvalConfig parse_eval_config(const json& j) {
  EvalConfig config;
  try {
    if (!j.is_object()) throw Error(ErrorCode::kInvalidArgument, "config must be a JSON object");
    if (j.contains("backend") && !j.at("backend").is_null()) {
      const json& b = j.at("backend");
      if (b.contains("stub")) {
        config.backend = {BackendSpec::Kind::kStub, b.at("stub").get<std::string>()};
      } else if (b.contains("http")) {
        config.backend = {BackendSpec::Kind::kHttp, b.at("http").get<std::string>()};
      } else {
        throw Error(ErrorCode::kInvalidArgument, "backend must be {\"stub\": path} or {\"http\": url}");
      }
    }
    if (j.contains("metrics")) config.metrics = j.at("metrics").get<std::set<std::string>>();
    config.seed = j.value("seed", config.seed);
    config.mask_ratio = j.value("mask_ratio", config.mask_ratio);
    if (j.contains("stopword_path") && !j.at("stopword_path").is_null()) {
      config.stopword_path = j.at("stopword_path").get<std::string>();
    }
    config.output_format = j.value("output_format", config.output_format);
    config.workers = j.value("workers", config.workers);
    config.max_in_flight = j.value("max_in_flight", config.max_in_flight);
    config.rouge_lowercase = j.value("rouge_lowercase", config.rouge_lowercase);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("bad config: ") + e.what());
  }
  return config;
}

EvalConfig load_eval_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, path.string() + ": " + e.what());
  }
  EvalConfig config = parse_eval_config(j);
  // Relative paths inside the config resolve against the config's directory.
  const auto base = path.parent_path();
  if (config.backend.kind == BackendSpec::Kind::kStub &&
      std::filesystem::path(config.backend.location).is_relative()) {
    config.backend.location = (base / config.backend.location).lexically_normal().string();
  }
  if (config.stopword_path && config.stopword_path->is_relative()) {
    config.stopword_path = (base / *config.stopword_path).lexically_normal();
  }
  return config;
}

std::unique_ptr<MaskBackend> make_backend(const BackendSpec& spec, int max_in_flight) {
  switch (spec.kind) {
    case BackendSpec::Kind::kNone: return nullptr;
    case BackendSpec::Kind::kStub:
      return std::make_unique<StubBackend>(StubBackend::from_json_file(spec.location));
    case BackendSpec::Kind::kHttp:
      return std::make_unique<HttpBackend>(HttpBackendOptions{spec.location, max_in_flight});
  }
  return nullptr;
}

MetricReport readability_report(const Corpus& corpus, const EvalConfig& config,
                                const MaskBackend* backend, const ProgressSink& progress) {
  const std::optional<StopwordSet> custom = load_configured_stopwords(config);
  const StopwordSet& stopwords = custom ? *custom : default_stopwords();
  MetricReport report;
  prepare_run(config, backend, stopwords, report);
  const Scorer scorer{config, backend, NpChunkerConfig{nullptr, &stopwords}};

  struct Item {
    const Triplet* triplet;
    Readability level;
  };
  std::vector<Item> items;
  for (const Triplet& t : corpus) {
    for (Readability r : {Readability::kTechnical, Readability::kPlain}) {
      if (t.summary(r)) items.push_back({&t, r});
    }
  }

  std::vector<SummaryScores> results(items.size());
  const bool per_summary = std::any_of(config.metrics.begin(), config.metrics.end(),
                                       [](const std::string& m) { return m != "overlap" && m != "rouge"; });
  if (per_summary) {
    ProgressReporter reporter(progress, items.size());
    parallel_for(items.size(), config.workers, [&](std::size_t i) {
      const auto start = std::chrono::steady_clock::now();
      results[i] = scorer.score(*items[i].triplet->summary(items[i].level));
      reporter.done(items[i].triplet->id, std::string(readability_name(items[i].level)),
                    std::chrono::steady_clock::now() - start);
    });
  }

  for (const Triplet& t : corpus) report.per_document[t.id];
  for (std::size_t i = 0; i < items.size(); ++i) {
    DocumentReport& doc = report.per_document[items[i].triplet->id];
    const std::string level(readability_name(items[i].level));
    for (auto& [metric, cell] : results[i].cells) doc.cells[{level, metric}] = std::move(cell);
    if (results[i].truncated > 0) doc.truncated_probes[level] = results[i].truncated;
  }
  if (config.metrics.contains("overlap")) {
    std::size_t unpaired = 0;
    for (const Triplet& t : corpus) {
      if (t.technical_summary && t.plain_summary) {
        add_overlap_cells(report.per_document[t.id], "overlap_", *t.plain_summary,
                          *t.technical_summary, config.rouge_lowercase);
      } else {
        ++unpaired;
      }
    }
    if (unpaired > 0) {
      report.notes.push_back("overlap skipped for " + std::to_string(unpaired) +
                             " triplet(s) with a single summary");
    }
  }
  if (config.metrics.contains("rouge")) {
    report.notes.push_back("rouge needs system outputs; use the evaluate command");
  }
  finish_report(report);
  return report;
}

MetricReport system_eval(const Corpus& targets, const std::vector<SystemOutput>& outputs,
                         const EvalConfig& config, const MaskBackend* backend,
                         const ProgressSink& progress) {
  std::unordered_map<std::string, const Triplet*> by_id;
  for (const Triplet& t : targets) by_id.emplace(t.id, &t);
  std::vector<std::string> orphans;
  for (const SystemOutput& o : outputs) {
    const auto it = by_id.find(o.id);
    if (it == by_id.end() || !it->second->summary(o.readability)) {
      orphans.push_back(o.id + " (" + std::string(readability_name(o.readability)) + ")");
    }
  }
  if (!orphans.empty()) {
    std::string list;
    for (const std::string& id : orphans) list += (list.empty() ? "" : ", ") + id;
    throw Error(ErrorCode::kInvalidArgument, "outputs without a matching target: " + list);
  }

  const std::optional<StopwordSet> custom = load_configured_stopwords(config);
  const StopwordSet& stopwords = custom ? *custom : default_stopwords();
  MetricReport report;
  prepare_run(config, backend, stopwords, report);
  const Scorer scorer{config, backend, NpChunkerConfig{nullptr, &stopwords}};

  std::vector<SummaryScores> results(outputs.size());
  ProgressReporter reporter(progress, outputs.size());
  parallel_for(outputs.size(), config.workers, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    const SystemOutput& o = outputs[i];
    results[i] = scorer.score(o.summary);
    if (config.metrics.contains("rouge")) {
      add_rouge_cells(results[i].cells, o.summary, *by_id.at(o.id)->summary(o.readability),
                      config.rouge_lowercase);
    }
    reporter.done(o.id, std::string(readability_name(o.readability)),
                  std::chrono::steady_clock::now() - start);
  });

  std::map<std::string, std::pair<const SystemOutput*, const SystemOutput*>> pairs;
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    const SystemOutput& o = outputs[i];
    DocumentReport& doc = report.per_document[o.id];
    const std::string level(readability_name(o.readability));
    for (auto& [metric, cell] : results[i].cells) doc.cells[{level, metric}] = std::move(cell);
    if (results[i].truncated > 0) doc.truncated_probes[level] = results[i].truncated;
    auto& slot = pairs[o.id];
    (o.readability == Readability::kTechnical ? slot.first : slot.second) = &o;
  }

  if (config.metrics.contains("overlap")) {
    std::size_t skipped = 0;
    for (const auto& [id, pair] : pairs) {
      const auto [tech, plain] = pair;
      if (tech == nullptr || plain == nullptr) {
        ++skipped;
        continue;
      }
      DocumentReport& doc = report.per_document[id];
      add_overlap_cells(doc, "overlap_", plain->summary, tech->summary, config.rouge_lowercase);
      const Triplet& target = *by_id.at(id);
      add_overlap_cells(doc, "target_overlap_", *target.plain_summary, *target.technical_summary,
                        config.rouge_lowercase);
    }
    if (skipped > 0) {
      report.notes.push_back("overlap skipped for " + std::to_string(skipped) +
                             " id(s) lacking a counterpart output");
    }
  }
  finish_report(report);
  return report;
}

OracleRun run_oracle(const Corpus& corpus, Readability readability,
                     std::optional<std::size_t> token_budget, std::size_t workers) {
  std::vector<std::optional<OracleRecord>> slots(corpus.size());
  parallel_for(corpus.size(), std::max<std::size_t>(workers, 1), [&](std::size_t i) {
    const Triplet& t = corpus[i];
    const auto& target = t.summary(readability);
    if (t.document.empty() || !target) return;
    const std::vector<std::string> reference = rouge_tokens(*target);
    const TokenizedText doc = tokenize(t.document);
    if (reference.empty() || doc.sentences.empty()) return;

    SentenceTokens sentences;
    sentences.reserve(doc.sentences.size());
    for (const SentenceRange& s : doc.sentences) sentences.push_back(lowercase_terms(doc, s));

    OracleRecord record{t.id, readability, {}, {}, {}};
    if (token_budget) {
      std::vector<double> scores;
      std::vector<std::size_t> lengths;
      for (std::size_t s = 0; s < sentences.size(); ++s) {
        const std::size_t only[] = {s};
        scores.push_back(oracle_gain(sentences, only, reference));
        lengths.push_back(sentences[s].size());
      }
      record.selected = topk_select(scores, lengths, *token_budget);
    } else {
      OracleSelection sel = greedy_oracle(sentences, reference);
      record.selected = std::move(sel.selected);
      record.step_scores = std::move(sel.step_scores);
    }
    for (std::size_t s : record.selected) {
      const SentenceRange& range = doc.sentences[s];
      const std::size_t start = doc.tokens[range.token_begin].char_start;
      const std::size_t end = doc.tokens[range.token_end - 1].char_end;
      if (!record.summary.empty()) record.summary += ' ';
      record.summary += doc.source.substr(start, end - start);
    }
    slots[i] = std::move(record);
  });
  OracleRun run;
  for (auto& slot : slots) {
    if (slot) {
      run.records.push_back(std::move(*slot));
    } else {
      ++run.skipped;
    }
  }
  return run;
}

void write_oracle_jsonl(std::ostream& out, const OracleRun& run) {
  for (const OracleRecord& r : run.records) {
    json steps = json::array();
    for (double s : r.step_scores) steps.push_back(std::stod(format_fixed5(s)));
    const json line = {{"id", r.id},
                       {"readability", readability_name(r.readability)},
                       {"selected", r.selected},
                       {"step_scores", std::move(steps)},
                       {"summary", r.summary}};
    out << line.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
  }
}

}  // namespace readlab
