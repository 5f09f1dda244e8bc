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

#include "readlab/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "readlab/error.h"

namespace readlab {
namespace {

bool constant(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

}  // namespace

std::vector<double> fractional_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    // Positions i..j-1 hold ties; their 1-based ranks average to (i+1+j)/2.
    const double rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw Error(ErrorCode::kInvalidArgument, "spearman: length mismatch");
  if (xs.size() < 2) throw Error(ErrorCode::kInvalidArgument, "spearman: need at least two points");
  auto finite = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
  };
  if (!finite(xs) || !finite(ys) || constant(xs) || constant(ys)) {
    throw Error(ErrorCode::kDegenerateInput, "undefined correlation");
  }
  const std::vector<double> rx = fractional_ranks(xs);
  const std::vector<double> ry = fractional_ranks(ys);
  const double n = static_cast<double>(rx.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    const double dx = rx[i] - mx;
    const double dy = ry[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  const double rho = (sxy / n) / std::sqrt((sxx / n) * (syy / n));
  return std::clamp(rho, -1.0, 1.0);
}

std::map<std::string, std::map<std::string, GroupMean>> group_means(const MetricReport& report) {
  std::map<std::string, std::map<std::string, GroupMean>> groups;
  std::map<std::string, std::map<std::string, double>> sums;
  for (const auto& [id, doc] : report.per_document) {
    for (const auto& [key, cell] : doc.cells) {
      GroupMean& g = groups[key.metric][key.level];
      if (cell.has_value()) {
        ++g.count;
        sums[key.metric][key.level] += *cell.value;
      } else {
        ++g.excluded;
      }
    }
  }
  for (auto& [metric, levels] : groups) {
    if (levels.contains(kLevelTech) || levels.contains(kLevelPlain)) {
      levels.try_emplace(kLevelTech);
      levels.try_emplace(kLevelPlain);
    }
    for (auto& [level, g] : levels) {
      if (g.count > 0) g.mean = sums[metric][level] / static_cast<double>(g.count);
    }
  }
  return groups;
}

std::map<std::string, MetricCell> readability_correlations(const MetricReport& report) {
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> series;
  std::set<std::string> metrics;
  for (const auto& [id, doc] : report.per_document) {
    for (const auto& [key, cell] : doc.cells) {
      const bool tech = key.level == kLevelTech;
      if (!tech && key.level != kLevelPlain) continue;
      metrics.insert(key.metric);
      if (!cell.has_value()) continue;
      auto& [scores, labels] = series[key.metric];
      scores.push_back(*cell.value);
      labels.push_back(tech ? 1.0 : 0.0);
    }
  }
  std::map<std::string, MetricCell> out;
  for (const std::string& metric : metrics) {
    const auto& [scores, labels] = series[metric];
    try {
      out[metric] = MetricCell::ok(spearman(scores, labels));
    } catch (const Error& e) {
      out[metric] = MetricCell::failed(e.what());
    }
  }
  return out;
}

}  // namespace readlab
