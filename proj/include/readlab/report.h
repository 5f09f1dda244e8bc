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

#ifndef READLAB_REPORT_H_
#define READLAB_REPORT_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace readlab {

// Levels used as report keys. "pair" holds metrics of a (plain, technical)
// summary pair rather than of one summary.
inline constexpr const char* kLevelTech = "tech";
inline constexpr const char* kLevelPlain = "plain";
inline constexpr const char* kLevelPair = "pair";

// A metric value or the reason it could not be computed. Never both.
struct MetricCell {
  std::optional<double> value;
  std::string error;

  static MetricCell ok(double v) { return {v, {}}; }
  static MetricCell failed(std::string reason) { return {std::nullopt, std::move(reason)}; }
  bool has_value() const { return value.has_value(); }
};

struct CellKey {
  std::string level;
  std::string metric;

  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

struct DocumentReport {
  std::map<CellKey, MetricCell> cells;
  std::map<std::string, std::size_t> truncated_probes;  // by level, non-zero only
};

struct GroupMean {
  std::optional<double> mean;  // absent when no document has a value
  std::size_t count = 0;
  std::size_t excluded = 0;  // documents whose cell is an error
};

struct MetricReport {
  std::map<std::string, std::string> info;  // configuration echo
  std::map<std::string, DocumentReport> per_document;  // keyed by id
  std::map<std::string, std::map<std::string, GroupMean>> aggregates;  // metric -> level
  std::map<std::string, MetricCell> correlations;  // metric -> Spearman rho
  std::vector<std::string> notes;
};

// Fixed 5-decimal rendering; the exact binary value is rounded to nearest
// with ties to even, and "-0.00000" is printed as "0.00000".
std::string format_fixed5(double value);

// Deterministic JSON: keys sorted, documents by id, floats via format_fixed5.
void write_report_json(std::ostream& out, const MetricReport& report);

// Long format with header
// section,id,level,metric,value,count,excluded,error
void write_report_csv(std::ostream& out, const MetricReport& report);

}  // namespace readlab

#endif  // READLAB_REPORT_H_
