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

#ifndef READLAB_STATS_H_
#define READLAB_STATS_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "readlab/report.h"

namespace readlab {

// 1-based ranks; tied values share the mean of the ranks they span.
std::vector<double> fractional_ranks(std::span<const double> values);

// Pearson correlation of the fractional ranks (population moments).
// Throws Error(kInvalidArgument) for mismatched lengths or fewer than two
// points, and Error(kDegenerateInput, "undefined correlation") when either
// side is constant or not finite.
double spearman(std::span<const double> xs, std::span<const double> ys);

// Per (metric, level) mean over the cells of `report`. For metrics scored
// on tech/plain summaries both levels are always listed, so an empty group
// shows up with an absent mean instead of being dropped.
std::map<std::string, std::map<std::string, GroupMean>> group_means(const MetricReport& report);

// Spearman rho of every tech/plain metric against binary labels
// (tech = 1, plain = 0), pooling both levels. Metrics without enough data
// get an error cell.
std::map<std::string, MetricCell> readability_correlations(const MetricReport& report);

}  // namespace readlab

#endif  // READLAB_STATS_H_
