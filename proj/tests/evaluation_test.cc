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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "naive_oracles.h"
#include "readlab/complexity.h"
#include "readlab/error.h"
#include "readlab/report.h"

namespace readlab {
namespace {

using nlohmann::json;

const StubBackend& fixture_backend() {
  static const StubBackend kStub({{"the", 0.9},
                                  {"virus", 0.5},
                                  {"cells", 0.2},
                                  {"disease", 0.4},
                                  {"protein", 0.3},
                                  {"genes", 0.6}},
                                 0.5);
  return kStub;
}

// Two triplets; the second has no plain summary.
Corpus fixture_corpus() {
  return {
      {"t1", "Document one.", "The virus infects cells.", "The virus causes disease."},
      {"t2", "Document two.", "Protein binds genes.", std::nullopt},
  };
}

double value(const MetricReport& r, const std::string& id, const std::string& level,
             const std::string& metric) {
  const MetricCell& cell = r.per_document.at(id).cells.at({level, metric});
  EXPECT_TRUE(cell.has_value()) << id << " " << level << " " << metric << ": " << cell.error;
  return cell.value.value_or(NAN);
}

double fkg(double w, double s, double syl) { return 0.39 * w / s + 11.8 * syl / w - 15.59; }
double cli(double w, double s, double letters) {
  return 0.0588 * (100.0 * letters / w) - 0.296 * (100.0 * s / w) - 15.8;
}
double ari(double w, double s, double letters) { return 4.71 * letters / w + 0.5 * w / s - 21.43; }

TEST(ReadabilityReportTest, CellsEqualComposedHandComputation) {
  EvalConfig config;
  config.metrics = {"rnptc", "nptc", "mrttc", "fkg", "cli", "ari", "overlap"};
  config.seed = 3;
  const MetricReport r = readability_report(fixture_corpus(), config, &fixture_backend());

  // "The virus infects cells.": 4 words, 1 sentence, 1+2+2+1 syllables, 20 letters.
  EXPECT_NEAR(value(r, "t1", "tech", "fkg"), fkg(4, 1, 6), 1e-12);
  EXPECT_NEAR(value(r, "t1", "tech", "cli"), cli(4, 1, 20), 1e-12);
  EXPECT_NEAR(value(r, "t1", "tech", "ari"), ari(4, 1, 20), 1e-12);
  // "The virus causes disease.": syllables 1+2+2+2, 21 letters.
  EXPECT_NEAR(value(r, "t1", "plain", "fkg"), fkg(4, 1, 7), 1e-12);
  EXPECT_NEAR(value(r, "t1", "plain", "ari"), ari(4, 1, 21), 1e-12);
  // "Protein binds genes.": syllables 2+1+1, 17 letters.
  EXPECT_NEAR(value(r, "t2", "tech", "cli"), cli(3, 1, 17), 1e-12);

  // Noun phrases: "The virus" averages 0.9 and 0.5; "cells" 0.2.
  EXPECT_NEAR(value(r, "t1", "tech", "nptc"), naive::plain_mean({0.7, 0.2}), 1e-12);
  EXPECT_NEAR(value(r, "t1", "tech", "rnptc"), naive::rank_weighted({0.7, 0.2}), 1e-12);
  EXPECT_NEAR(value(r, "t1", "plain", "rnptc"), naive::rank_weighted({0.7, 0.4}), 1e-12);
  EXPECT_NEAR(value(r, "t2", "tech", "nptc"), naive::plain_mean({0.3, 0.6}), 1e-12);

  EXPECT_EQ(value(r, "t1", "tech", "mrttc"),
            mrttc("The virus infects cells.", fixture_backend(), 0.15, 3).value);

  // Unigrams {the, virus, causes, disease}: 2 of 4 shared; bigram "the virus"
  // is 1 of 3; no shared trigrams or 4-grams.
  EXPECT_DOUBLE_EQ(value(r, "t1", "pair", "overlap_1"), 0.5);
  EXPECT_DOUBLE_EQ(value(r, "t1", "pair", "overlap_2"), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(value(r, "t1", "pair", "overlap_3"), 0.0);
  EXPECT_DOUBLE_EQ(value(r, "t1", "pair", "overlap_4"), 0.0);
  EXPECT_FALSE(r.per_document.at("t2").cells.contains({"pair", "overlap_1"}));

  // Group means and the pooled correlation over three summaries.
  const double t1 = value(r, "t1", "tech", "rnptc");
  const double t2 = value(r, "t2", "tech", "rnptc");
  const double p1 = value(r, "t1", "plain", "rnptc");
  EXPECT_NEAR(*r.aggregates.at("rnptc").at("tech").mean, (t1 + t2) / 2.0, 1e-12);
  EXPECT_EQ(r.aggregates.at("rnptc").at("plain").count, 1u);
  EXPECT_NEAR(*r.correlations.at("rnptc").value, naive::spearman({t1, p1, t2}, {1, 0, 1}), 1e-12);

  EXPECT_EQ(r.info.at("log_base"), "e");
  EXPECT_EQ(r.info.at("backend_model"), "stub");
  EXPECT_EQ(r.info.at("seed"), "3");
  ASSERT_EQ(r.notes.size(), 1u);
  EXPECT_NE(r.notes[0].find("overlap skipped for 1"), std::string::npos);
}

TEST(ReadabilityReportTest, MetricFilter) {
  EvalConfig config;
  config.metrics = {"fkg"};
  const MetricReport r = readability_report(fixture_corpus(), config, nullptr);
  for (const auto& [id, doc] : r.per_document) {
    for (const auto& [key, cell] : doc.cells) EXPECT_EQ(key.metric, "fkg");
  }
  EXPECT_EQ(r.per_document.at("t1").cells.size(), 2u);
  EXPECT_EQ(r.per_document.at("t2").cells.size(), 1u);
  EXPECT_EQ(r.info.at("backend"), "none");
}

TEST(ReadabilityReportTest, MissingBackendIsAValidationError) {
  EvalConfig config;
  config.metrics = {"rnptc"};
  try {
    readability_report(fixture_corpus(), config, nullptr);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

class DownBackend : public MaskBackend {
 public:
  ProbeResult score(const MaskProbe&) const override {
    ++calls;
    throw Error(ErrorCode::kBackendUnavailable, "down");
  }
  BackendInfo health() const override { throw Error(ErrorCode::kBackendUnavailable, "down"); }
  mutable int calls = 0;
};

TEST(ReadabilityReportTest, FailsFastWhenBackendIsDown) {
  EvalConfig config;
  config.metrics = {"nptc"};
  const DownBackend down;
  try {
    readability_report(fixture_corpus(), config, &down);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBackendUnavailable);
  }
  EXPECT_EQ(down.calls, 0);
}

TEST(ReadabilityReportTest, DegenerateSummariesBecomeErrorCells) {
  EvalConfig config;
  config.metrics = {"nptc", "fkg"};
  const Corpus corpus = {{"x", "", "It is.", "12 34"}};
  const MetricReport r = readability_report(corpus, config, &fixture_backend());
  const auto& cells = r.per_document.at("x").cells;
  EXPECT_EQ(cells.at({"tech", "nptc"}).error, "no scoreable noun phrases");
  EXPECT_TRUE(cells.at({"tech", "fkg"}).has_value());
  EXPECT_EQ(r.aggregates.at("nptc").at("tech").excluded, 1u);

  std::ostringstream out;
  write_report_json(out, r);
  const json j = json::parse(out.str());
  EXPECT_EQ(j["documents"][0]["cells"]["tech"]["nptc"]["error"], "no scoreable noun phrases");
}

TEST(ReadabilityReportTest, ByteIdenticalAcrossRunsAndWorkerCounts) {
  Corpus corpus;
  for (int i = 0; i < 12; ++i) {
    const std::string n = std::to_string(i);
    corpus.push_back({"d" + n, "", "The virus infects cells in trial " + n + ". Protein binds genes.",
                      "The virus causes disease " + n + " times."});
  }
  EvalConfig config;
  config.metrics = {"rnptc", "nptc", "mrttc", "fkg", "cli", "ari", "overlap"};
  std::ostringstream a, b, c;
  write_report_json(a, readability_report(corpus, config, &fixture_backend()));
  write_report_json(b, readability_report(corpus, config, &fixture_backend()));
  config.workers = 4;
  write_report_json(c, readability_report(corpus, config, &fixture_backend()));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str(), c.str());
  EXPECT_NO_THROW(json::parse(a.str()));
}

TEST(SystemEvalTest, IdenticalOutputsScorePerfectRouge) {
  EvalConfig config;
  config.metrics = {"rouge", "overlap"};
  const Corpus targets = fixture_corpus();
  const std::vector<SystemOutput> outputs = {
      {"t1", Readability::kTechnical, *targets[0].technical_summary},
      {"t1", Readability::kPlain, *targets[0].plain_summary},
      {"t2", Readability::kTechnical, *targets[1].technical_summary},
  };
  const MetricReport r = system_eval(targets, outputs, config, nullptr);
  for (const auto& [id, doc] : r.per_document) {
    for (const auto& [key, cell] : doc.cells) {
      if (key.metric.rfind("rouge", 0) == 0) {
        EXPECT_DOUBLE_EQ(*cell.value, 1.0) << id << key.metric;
      }
    }
  }
  EXPECT_EQ(r.per_document.at("t1").cells.count({"tech", "rougeL_f"}), 1u);
  // Outputs equal targets, so both overlap families agree with the hand count.
  EXPECT_DOUBLE_EQ(value(r, "t1", "pair", "overlap_1"), 0.5);
  EXPECT_DOUBLE_EQ(value(r, "t1", "pair", "target_overlap_2"), 1.0 / 3.0);
  ASSERT_EQ(r.notes.size(), 1u);
  EXPECT_NE(r.notes[0].find("1 id(s) lacking a counterpart"), std::string::npos);
}

TEST(SystemEvalTest, OverlapBetweenOutputsMatchesHandEnumeration) {
  EvalConfig config;
  config.metrics = {"overlap"};
  const std::vector<SystemOutput> outputs = {
      {"t1", Readability::kTechnical, "a b c d"},
      {"t1", Readability::kPlain, "a b x a b"},
  };
  const MetricReport r = system_eval(fixture_corpus(), outputs, config, nullptr);
  // Plain unigrams a,b,x,a,b: 4 of 5 appear in the technical output.
  EXPECT_DOUBLE_EQ(value(r, "t1", "pair", "overlap_1"), 4.0 / 5.0);
  // Bigrams ab, bx, xa, ab: the two "a b" occurrences match.
  EXPECT_DOUBLE_EQ(value(r, "t1", "pair", "overlap_2"), 2.0 / 4.0);
  EXPECT_DOUBLE_EQ(value(r, "t1", "pair", "overlap_3"), 0.0);
  EXPECT_DOUBLE_EQ(value(r, "t1", "pair", "overlap_4"), 0.0);
}

TEST(SystemEvalTest, OrphanOutputsAreListed) {
  EvalConfig config;
  config.metrics = {"rouge"};
  const std::vector<SystemOutput> outputs = {
      {"t9", Readability::kTechnical, "x"},
      {"t2", Readability::kPlain, "y"},
      {"t1", Readability::kPlain, "z"},
  };
  try {
    system_eval(fixture_corpus(), outputs, config, nullptr);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    EXPECT_EQ(std::string(e.what()), "outputs without a matching target: t9 (tech), t2 (plain)");
  }
}

TEST(EvalConfigTest, ParseValidateAndResolvePaths) {
  const auto dir = std::filesystem::temp_directory_path() / "readlab_config_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "cfg.json") << R"({"backend": {"stub": "table.json"}, "metrics": ["fkg", "rnptc"],
                                          "seed": 11, "mask_ratio": 0.2, "stopword_path": "stop.txt"})";
  }
  const EvalConfig c = load_eval_config(dir / "cfg.json");
  std::filesystem::remove_all(dir);
  EXPECT_EQ(c.backend.kind, BackendSpec::Kind::kStub);
  EXPECT_EQ(c.backend.location, (dir / "table.json").string());
  EXPECT_EQ(*c.stopword_path, dir / "stop.txt");
  EXPECT_EQ(c.metrics, (std::set<std::string>{"fkg", "rnptc"}));
  EXPECT_EQ(c.seed, 11u);
  EXPECT_DOUBLE_EQ(c.mask_ratio, 0.2);

  EvalConfig bad;
  bad.metrics = {"bleu"};
  EXPECT_THROW(bad.validate(), Error);
  bad.metrics = {};
  EXPECT_THROW(bad.validate(), Error);
  EvalConfig ratio;
  ratio.mask_ratio = 1.0;
  EXPECT_THROW(ratio.validate(), Error);
  EXPECT_THROW(parse_eval_config(json::parse(R"({"backend": {"ftp": "x"}})")), Error);
  EXPECT_THROW(parse_eval_config(json::parse(R"({"seed": "nine"})")), Error);
}

TEST(ReportFormatTest, FixedFiveDecimals) {
  EXPECT_EQ(format_fixed5(0.524243), "0.52424");
  EXPECT_EQ(format_fixed5(2.0), "2.00000");
  EXPECT_EQ(format_fixed5(-0.000001), "0.00000");
  EXPECT_EQ(format_fixed5(-1.5), "-1.50000");
}

TEST(ReportFormatTest, JsonShapeAndCsv) {
  MetricReport r;
  r.info["seed"] = "0";
  r.per_document["b"].cells[{"tech", "fkg"}] = MetricCell::ok(1.0 / 3.0);
  r.per_document["a"].cells[{"plain", "fkg"}] = MetricCell::failed("degenerate text");
  r.aggregates["fkg"]["tech"] = {1.0 / 3.0, 1, 0};
  r.aggregates["fkg"]["plain"] = {std::nullopt, 0, 1};
  r.correlations["fkg"] = MetricCell::failed("undefined correlation");
  std::ostringstream out;
  write_report_json(out, r);
  const json j = json::parse(out.str());
  EXPECT_EQ(j["documents"][0]["id"], "a");
  EXPECT_EQ(j["documents"][1]["cells"]["tech"]["fkg"], 0.33333);
  EXPECT_EQ(j["correlations"]["fkg"]["error"], "undefined correlation");
  EXPECT_TRUE(j["aggregates"]["fkg"]["plain"]["mean"].is_null());
  EXPECT_NE(out.str().find("0.33333"), std::string::npos);
  // Top-level keys are emitted in sorted order.
  EXPECT_LT(out.str().find("\"aggregates\""), out.str().find("\"correlations\""));
  EXPECT_LT(out.str().find("\"correlations\""), out.str().find("\"documents\""));
  EXPECT_LT(out.str().find("\"info\""), out.str().find("\"notes\""));

  std::ostringstream csv;
  write_report_csv(csv, r);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "section,id,level,metric,value,count,excluded,error");
  EXPECT_NE(csv.str().find("document,b,tech,fkg,0.33333"), std::string::npos);
}

TEST(RunOracleTest, GreedyAndBudgetModes) {
  const Corpus corpus = {
      {"p1", "Birds carry the virus. Mosquitoes bite birds. The weather was cold.",
       "Mosquitoes bite birds that carry the virus.", std::nullopt},
      {"p2", "", "No document here.", std::nullopt},
  };
  const OracleRun greedy = run_oracle(corpus, Readability::kTechnical, std::nullopt);
  ASSERT_EQ(greedy.records.size(), 1u);
  EXPECT_EQ(greedy.skipped, 1u);
  EXPECT_EQ(greedy.records[0].selected, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(greedy.records[0].summary, "Birds carry the virus. Mosquitoes bite birds.");
  EXPECT_EQ(greedy.records[0].step_scores.size(), 2u);

  const OracleRun budget = run_oracle(corpus, Readability::kTechnical, 4);
  ASSERT_EQ(budget.records.size(), 1u);
  EXPECT_EQ(budget.records[0].selected.size(), 1u);
  EXPECT_TRUE(budget.records[0].step_scores.empty());

  EXPECT_EQ(run_oracle(corpus, Readability::kPlain, std::nullopt).skipped, 2u);

  std::ostringstream out;
  write_oracle_jsonl(out, greedy);
  const json line = json::parse(out.str());
  EXPECT_EQ(line["readability"], "tech");
  EXPECT_EQ(line["selected"], json::array({0, 1}));
}

}  // namespace
}  // namespace readlab
