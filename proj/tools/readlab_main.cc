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

// readlab: readability and summary-evaluation reports over triplet corpora.
//
// Exit codes: 0 success, 1 validation error, 2 backend failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "readlab/corpus.h"
#include "readlab/error.h"
#include "readlab/evaluation.h"
#include "readlab/report.h"

namespace {

using namespace readlab;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitBackend = 2;

struct EvalFlags {
  std::string config_path;
  std::string backend_url;
  std::string stub_table;
  std::optional<std::uint64_t> seed;
  std::optional<double> mask_ratio;
  std::string metrics;
  std::string format;
  std::optional<std::size_t> workers;
  std::string stopwords;
  std::string output;
  bool quiet = false;
};

void add_eval_flags(CLI::App* cmd, EvalFlags& f) {
  cmd->add_option("--config", f.config_path, "Evaluation config JSON")->check(CLI::ExistingFile);
  cmd->add_option("--backend-url", f.backend_url, "Masked-LM scoring server (env READLAB_BACKEND_URL)");
  cmd->add_option("--stub-table", f.stub_table, "Stub backend probability table JSON")
      ->check(CLI::ExistingFile);
  cmd->add_option("--seed", f.seed, "Seed for random token masking");
  cmd->add_option("--mask-ratio", f.mask_ratio, "Share of word tokens masked per sentence");
  cmd->add_option("--metrics", f.metrics,
                  "Comma-separated subset of rnptc,nptc,mrttc,fkg,cli,ari,rouge,overlap");
  cmd->add_option("--format", f.format, "json or csv");
  cmd->add_option("--workers", f.workers, "Parallel scoring workers");
  cmd->add_option("--stopwords", f.stopwords, "Stop-word list, one word per line")
      ->check(CLI::ExistingFile);
  cmd->add_option("-o,--output", f.output, "Write the report here instead of stdout");
  cmd->add_flag("-q,--quiet", f.quiet, "No progress on stderr");
}

EvalConfig resolve_config(const EvalFlags& f) {
  EvalConfig config = f.config_path.empty() ? EvalConfig{} : load_eval_config(f.config_path);
  if (!f.backend_url.empty() && !f.stub_table.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "--backend-url and --stub-table are exclusive");
  }
  if (!f.backend_url.empty()) config.backend = {BackendSpec::Kind::kHttp, f.backend_url};
  if (!f.stub_table.empty()) config.backend = {BackendSpec::Kind::kStub, f.stub_table};
  if (config.backend.kind == BackendSpec::Kind::kNone) {
    if (const char* env = std::getenv("READLAB_BACKEND_URL"); env != nullptr && *env != '\0') {
      config.backend = {BackendSpec::Kind::kHttp, env};
    }
  }
  if (f.seed) config.seed = *f.seed;
  if (f.mask_ratio) config.mask_ratio = *f.mask_ratio;
  if (f.workers) config.workers = *f.workers;
  if (!f.format.empty()) config.output_format = f.format;
  if (!f.stopwords.empty()) config.stopword_path = f.stopwords;
  if (!f.metrics.empty()) {
    config.metrics.clear();
    std::stringstream list(f.metrics);
    std::string item;
    while (std::getline(list, item, ',')) {
      if (!item.empty()) config.metrics.insert(item);
    }
  }
  config.validate();
  return config;
}

ProgressSink stderr_progress(bool quiet) {
  if (quiet) return {};
  return [](const std::string& line) { std::cerr << line << '\n'; };
}

void emit_report(const MetricReport& report, const EvalConfig& config, const std::string& output) {
  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) throw Error(ErrorCode::kIo, "cannot write " + output);
  }
  std::ostream& out = output.empty() ? std::cout : file;
  if (config.output_format == "csv") {
    write_report_csv(out, report);
  } else {
    write_report_json(out, report);
  }
}

std::unique_ptr<MaskBackend> backend_for(const EvalConfig& config) {
  if (!needs_backend(config.metrics)) return nullptr;
  return make_backend(config.backend, config.max_in_flight);
}

int run_stats(const std::string& path, const std::string& format) {
  const CorpusStats s = corpus_stats(load_jsonl(path));
  if (format == "csv") {
    std::cout << "doc_count,avg_doc_words,avg_tech_words,avg_pls_words,n_documents,n_technical,n_plain\n"
              << s.doc_count << ',' << format_fixed5(s.avg_doc_words) << ','
              << format_fixed5(s.avg_tech_words) << ',' << format_fixed5(s.avg_pls_words) << ','
              << s.n_documents << ',' << s.n_technical << ',' << s.n_plain << '\n';
  } else {
    std::cout << "{\n"
              << "  \"avg_doc_words\": " << format_fixed5(s.avg_doc_words) << ",\n"
              << "  \"avg_pls_words\": " << format_fixed5(s.avg_pls_words) << ",\n"
              << "  \"avg_tech_words\": " << format_fixed5(s.avg_tech_words) << ",\n"
              << "  \"doc_count\": " << s.doc_count << ",\n"
              << "  \"n_documents\": " << s.n_documents << ",\n"
              << "  \"n_plain\": " << s.n_plain << ",\n"
              << "  \"n_technical\": " << s.n_technical << "\n"
              << "}\n";
  }
  return kExitOk;
}

int run_split(const std::string& path, const SplitSpec& spec, const std::string& out_dir) {
  const CorpusSplit split = split_corpus(load_jsonl(path), spec);
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);
  write_jsonl(dir / "train.jsonl", split.train);
  write_jsonl(dir / "validation.jsonl", split.validation);
  write_jsonl(dir / "test.jsonl", split.test);
  std::cerr << "train " << split.train.size() << ", validation " << split.validation.size()
            << ", test " << split.test.size() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Readability and summary-evaluation toolkit for technical/plain-language corpora"};
  app.require_subcommand(1);

  std::string corpus_path;
  std::string format = "json";
  auto* stats_cmd = app.add_subcommand("stats", "Corpus size and average word counts");
  stats_cmd->add_option("corpus", corpus_path, "Corpus JSONL")->required()->check(CLI::ExistingFile);
  stats_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  SplitSpec split_spec;
  std::string out_dir;
  auto* split_cmd = app.add_subcommand("split", "Seeded train/validation/test split");
  split_cmd->add_option("corpus", corpus_path, "Corpus JSONL")->required()->check(CLI::ExistingFile);
  split_cmd->add_option("--seed", split_spec.seed, "Sampling seed")->required();
  split_cmd->add_option("--val", split_spec.n_validation, "Validation size")->required();
  split_cmd->add_option("--test", split_spec.n_test, "Test size")->required();
  split_cmd->add_option("--out-dir", out_dir, "Output directory")->required();

  EvalFlags readability_flags;
  auto* readability_cmd = app.add_subcommand("readability", "Readability metrics of target summaries");
  readability_cmd->add_option("corpus", corpus_path, "Corpus JSONL")->required()->check(CLI::ExistingFile);
  add_eval_flags(readability_cmd, readability_flags);

  EvalFlags evaluate_flags;
  std::string outputs_path;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score system outputs against targets");
  evaluate_cmd->add_option("targets", corpus_path, "Target corpus JSONL")->required()->check(CLI::ExistingFile);
  evaluate_cmd->add_option("outputs", outputs_path, "System-output JSONL")->required()->check(CLI::ExistingFile);
  add_eval_flags(evaluate_cmd, evaluate_flags);

  std::string oracle_level = "tech";
  std::optional<std::size_t> budget;
  bool use_budget = false;
  std::size_t oracle_workers = 1;
  auto* oracle_cmd = app.add_subcommand("oracle", "Greedy extractive oracle selections as JSONL");
  oracle_cmd->add_option("corpus", corpus_path, "Corpus JSONL")->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--readability", oracle_level, "tech or plain")
      ->check(CLI::IsMember({"tech", "plain"}));
  auto* budget_opt = oracle_cmd->add_option(
      "--budget", budget,
      "Top-k mode with a token budget; without a value uses 287 (tech) or 204 (plain)");
  budget_opt->expected(0, 1);
  oracle_cmd->add_option("--workers", oracle_workers, "Parallel workers")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }
  use_budget = budget_opt->count() > 0;

  try {
    if (*stats_cmd) return run_stats(corpus_path, format);
    if (*split_cmd) return run_split(corpus_path, split_spec, out_dir);
    if (*readability_cmd) {
      const EvalConfig config = resolve_config(readability_flags);
      const Corpus corpus = load_jsonl(corpus_path);
      const auto backend = backend_for(config);
      const MetricReport report =
          readability_report(corpus, config, backend.get(), stderr_progress(readability_flags.quiet));
      emit_report(report, config, readability_flags.output);
      return kExitOk;
    }
    if (*evaluate_cmd) {
      const EvalConfig config = resolve_config(evaluate_flags);
      const Corpus targets = load_jsonl(corpus_path);
      const auto outputs = load_system_outputs(outputs_path);
      const auto backend = backend_for(config);
      const MetricReport report =
          system_eval(targets, outputs, config, backend.get(), stderr_progress(evaluate_flags.quiet));
      emit_report(report, config, evaluate_flags.output);
      return kExitOk;
    }
    if (*oracle_cmd) {
      const Readability level = parse_readability(oracle_level);
      std::optional<std::size_t> token_budget;
      if (use_budget) {
        token_budget = budget.value_or(level == Readability::kTechnical ? kDefaultTechBudget
                                                                        : kDefaultPlainBudget);
        if (*token_budget == 0) throw Error(ErrorCode::kInvalidArgument, "--budget must be positive");
      }
      const OracleRun run = run_oracle(load_jsonl(corpus_path), level, token_budget, oracle_workers);
      write_oracle_jsonl(std::cout, run);
      std::cerr << run.records.size() << " selections, " << run.skipped
                << " triplet(s) skipped (no document or target)\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_backend() ? kExitBackend : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}
