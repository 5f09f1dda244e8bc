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

#include "readlab/report.h"

#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <ostream>

#include "readlab/error.h"

namespace readlab {
namespace {

std::string quote(const std::string& s) {
  return nlohmann::json(s).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

// Minimal pretty-printing JSON emitter; callers emit keys in sorted order.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& out) : out_(out) {}

  void begin_object() { open('{'); }
  void end_object() { close('}'); }
  void begin_array() { open('['); }
  void end_array() { close(']'); }

  void key(const std::string& k) {
    separator();
    out_ << quote(k) << ": ";
    after_key_ = true;
  }

  void string(const std::string& s) { scalar(quote(s)); }
  void number(double v) { scalar(format_fixed5(v)); }
  void integer(std::size_t v) { scalar(std::to_string(v)); }
  void null() { scalar("null"); }

 private:
  void separator() {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    if (!first_.empty()) {
      if (!first_.back()) out_ << ',';
      first_.back() = false;
      out_ << '\n' << std::string(2 * first_.size(), ' ');
    }
  }
  void scalar(const std::string& text) {
    separator();
    out_ << text;
  }
  void open(char c) {
    separator();
    out_ << c;
    first_.push_back(true);
  }
  void close(char c) {
    const bool empty = first_.back();
    first_.pop_back();
    if (!empty) out_ << '\n' << std::string(2 * first_.size(), ' ');
    out_ << c;
  }

  std::ostream& out_;
  std::vector<bool> first_;
  bool after_key_ = false;
};

void write_cell(JsonWriter& w, const MetricCell& cell) {
  if (cell.has_value()) {
    w.number(*cell.value);
    return;
  }
  w.begin_object();
  w.key("error");
  w.string(cell.error);
  w.end_object();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_fixed5(double value) {
  if (!std::isfinite(value)) throw Error(ErrorCode::kInvalidArgument, "non-finite value in report");
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.5f", value);
  std::string s(buf);
  if (s == "-0.00000") s = "0.00000";
  return s;
}

void write_report_json(std::ostream& out, const MetricReport& report) {
  JsonWriter w(out);
  w.begin_object();

  w.key("aggregates");
  w.begin_object();
  for (const auto& [metric, levels] : report.aggregates) {
    w.key(metric);
    w.begin_object();
    for (const auto& [level, g] : levels) {
      w.key(level);
      w.begin_object();
      w.key("count");
      w.integer(g.count);
      w.key("excluded");
      w.integer(g.excluded);
      w.key("mean");
      if (g.mean) {
        w.number(*g.mean);
      } else {
        w.null();
      }
      w.end_object();
    }
    w.end_object();
  }
  w.end_object();

  w.key("correlations");
  w.begin_object();
  for (const auto& [metric, cell] : report.correlations) {
    w.key(metric);
    write_cell(w, cell);
  }
  w.end_object();

  w.key("documents");
  w.begin_array();
  for (const auto& [id, doc] : report.per_document) {
    w.begin_object();
    w.key("cells");
    w.begin_object();
    std::string open_level;
    for (const auto& [key, cell] : doc.cells) {
      if (key.level != open_level) {
        if (!open_level.empty()) w.end_object();
        w.key(key.level);
        w.begin_object();
        open_level = key.level;
      }
      w.key(key.metric);
      write_cell(w, cell);
    }
    if (!open_level.empty()) w.end_object();
    w.end_object();
    w.key("id");
    w.string(id);
    if (!doc.truncated_probes.empty()) {
      w.key("truncated_probes");
      w.begin_object();
      for (const auto& [level, n] : doc.truncated_probes) {
        w.key(level);
        w.integer(n);
      }
      w.end_object();
    }
    w.end_object();
  }
  w.end_array();

  w.key("info");
  w.begin_object();
  for (const auto& [k, v] : report.info) {
    w.key(k);
    w.string(v);
  }
  w.end_object();

  w.key("notes");
  w.begin_array();
  for (const std::string& note : report.notes) w.string(note);
  w.end_array();

  w.end_object();
  out << '\n';
}

void write_report_csv(std::ostream& out, const MetricReport& report) {
  out << "section,id,level,metric,value,count,excluded,error\n";
  for (const auto& [id, doc] : report.per_document) {
    for (const auto& [key, cell] : doc.cells) {
      out << "document," << csv_field(id) << ',' << key.level << ',' << csv_field(key.metric) << ','
          << (cell.has_value() ? format_fixed5(*cell.value) : "") << ",,," << csv_field(cell.error)
          << '\n';
    }
  }
  for (const auto& [metric, levels] : report.aggregates) {
    for (const auto& [level, g] : levels) {
      out << "aggregate,," << level << ',' << csv_field(metric) << ','
          << (g.mean ? format_fixed5(*g.mean) : "") << ',' << g.count << ',' << g.excluded << ",\n";
    }
  }
  for (const auto& [metric, cell] : report.correlations) {
    out << "correlation,,," << csv_field(metric) << ','
        << (cell.has_value() ? format_fixed5(*cell.value) : "") << ",,," << csv_field(cell.error)
        << '\n';
  }
}

}  // namespace readlab
