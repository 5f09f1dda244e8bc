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

// Corpus-level runs: readability reports over target summaries, evaluation
// of system outputs against targets, and extractive oracle labeling.

#ifndef READLAB_EVALUATION_H_
#define READLAB_EVALUATION_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "readlab/corpus.h"
#include "readlab/mask_backend.h"
#include "readlab/report.h"

namespace readlab {

struct BackendSpec {
  enum class Kind { kNone, kStub, kHttp };
  Kind kind = Kind::kNone;
  std::string location;  // stub table path or base URL
};

// Metric names: rnptc nptc mrttc fkg cli ari rouge overlap.
const std::set<std::string>& known_metrics();
bool needs_backend(const std::set<std::string>& metrics);

struct EvalConfig {
  BackendSpec backend;
  std::set<std::string> metrics = {"rnptc", "nptc", "mrttc", "fkg", "cli", "ari"};
  std::uint64_t seed = 0;
  double mask_ratio = 0.15;
  std::optional<std::filesystem::path> stopword_path;
  std::string output_format = "json";
  std::size_t workers = 1;
  int max_in_flight = 8;
  bool rouge_lowercase = true;

  // Throws Error(kInvalidArgument) on an empty or unknown metric set, a
  // mask ratio outside (0, 1), an unknown output format or zero workers.
  void validate() const;
};

// {"backend": {"stub": path} | {"http": url}, "metrics": [...], "seed": int,
//  "mask_ratio": real, "stopword_path": str|null, "output_format":
//  "json"|"csv", "workers": int, "max_in_flight": int,
//  "rouge_lowercase": bool}; every key optional.
EvalConfig parse_eval_config(const nlohmann::json& j);
EvalConfig load_eval_config(const std::filesystem::path& path);

// Null for BackendSpec::Kind::kNone.
std::unique_ptr<MaskBackend> make_backend(const BackendSpec& spec, int max_in_flight);

// Receives human-oriented progress lines; never report data.
using ProgressSink = std::function<void(const std::string&)>;

// Scores every present summary under every configured metric, then fills
// group means and Spearman correlations against tech=1 / plain=0 labels.
// "overlap" adds overlap_1..overlap_4 between the two targets of each
// triplet at level "pair". Per-document metric failures become error cells;
// an unreachable backend aborts with Error(kBackendUnavailable) before any
// scoring starts.
MetricReport readability_report(const Corpus& corpus, const EvalConfig& config,
                                const MaskBackend* backend, const ProgressSink& progress = {});

// ROUGE (rouge{1,2,L}_{p,r,f}) of each output against the same-readability
// target, the readability metrics of the outputs, overlap_n between the two
// outputs of an id and target_overlap_n between its two targets. Throws
// Error(kInvalidArgument) listing orphan outputs; ids lacking a counterpart
// output are skipped for overlap and counted in the notes.
MetricReport system_eval(const Corpus& targets, const std::vector<SystemOutput>& outputs,
                         const EvalConfig& config, const MaskBackend* backend,
                         const ProgressSink& progress = {});

struct OracleRecord {
  std::string id;
  Readability readability = Readability::kTechnical;
  std::vector<std::size_t> selected;
  std::vector<double> step_scores;  // greedy mode only
  std::string summary;              // selected sentences joined by spaces
};

// Default budgets: average technical / plain summary length in words of the
// PLOS corpus.
inline constexpr std::size_t kDefaultTechBudget = 287;
inline constexpr std::size_t kDefaultPlainBudget = 204;

struct OracleRun {
  std::vector<OracleRecord> records;
  std::size_t skipped = 0;  // triplets without document or target
};

// Greedy oracle per triplet with a document and the requested target. With a
// budget, sentences are instead ranked by their standalone oracle gain and
// picked by topk_select.
OracleRun run_oracle(const Corpus& corpus, Readability readability,
                     std::optional<std::size_t> token_budget, std::size_t workers = 1);

// One JSON object per line, compatible with the system-output schema.
void write_oracle_jsonl(std::ostream& out, const OracleRun& run);

}  // namespace readlab

#endif  // READLAB_EVALUATION_H_
