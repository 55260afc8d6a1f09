// Copyright 2026 The motifwalk Authors
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


#include "motifwalk/estimators.hpp"

#include <cmath>
#include <numeric>

#include <fmt/format.h>

namespace motifwalk {

WeightedTally::WeightedTally(int k, GraphMode mode, std::size_t class_count)
    : k_(k), mode_(mode), mass_(class_count, 0.0), seen_(class_count, false) {}

void WeightedTally::add(ClassId id, double weight) {
  if (id == 0) throw EstimatorError("class id 0 is not valid");
  if (id > mass_.size()) {
    mass_.resize(id, 0.0);
    seen_.resize(id, false);
  }
  mass_[id - 1] += weight;
  seen_[id - 1] = true;
}

ConcentrationVector WeightedTally::result() const {
  const double total = std::accumulate(mass_.begin(), mass_.end(), 0.0);
  if (!(total > 0.0)) throw EstimatorError("no samples to estimate from");
  ConcentrationVector out;
  out.k = k_;
  out.mode = mode_;
  out.values.resize(mass_.size());
  for (std::size_t i = 0; i < mass_.size(); ++i) out.values[i] = mass_[i] / total;
  out.observed = seen_;
  out.total_samples_used = samples_;
  return out;
}

ConcentrationVector ht_node_estimate(const WalkTrace& trace, const ClassRegistry& registry) {
  WeightedTally tally(registry.k(), registry.mode(), registry.size());
  for (const WalkSample& s : trace.samples) {
    if (s.cis.size() != registry.k()) continue;
    if (s.degree == 0) throw EstimatorError("sample with degree 0");
    tally.add(s.class_id, 1.0 / s.degree);
    tally.count_sample();
  }
  return tally.result();
}

ConcentrationVector ht_edge_estimate(const PairTrace& trace, const ClassRegistry& registry) {
  WeightedTally tally(registry.k(), registry.mode(), registry.size());
  for (const PairSample& s : trace.samples) {
    if (s.i_count < 2) {
      throw EstimatorError(fmt::format("pair sample {} has I={} < 2", to_string(s.union_cis), s.i_count));
    }
    tally.add(s.class_id, 1.0 / (static_cast<double>(s.i_count) * (s.i_count - 1)));
    tally.count_sample();
  }
  return tally.result();
}

ConcentrationVector ht_reduce_estimate(const ReduceTrace& trace, const ClassRegistry& registry) {
  WeightedTally tally(registry.k(), registry.mode(), registry.size());
  for (const ReduceSample& s : trace.samples) {
    if (s.degree == 0) throw EstimatorError("sample with degree 0");
    for (const ContainedSample& c : s.contained()) {
      if (c.containing == 0) throw EstimatorError("contained subgraph with |O| = 0");
      tally.add(c.class_id, 1.0 / (static_cast<double>(s.degree) * c.containing));
    }
    tally.count_sample();
  }
  return tally.result();
}

ConcentrationVector plain_average(const WalkTrace& trace, const ClassRegistry& registry) {
  WeightedTally tally(registry.k(), registry.mode(), registry.size());
  for (const WalkSample& s : trace.samples) {
    if (s.cis.size() != registry.k()) continue;
    tally.add(s.class_id, 1.0);
    tally.count_sample();
  }
  return tally.result();
}

ConcentrationVector concentrations_from_counts(int k, GraphMode mode,
                                               std::span<const std::uint64_t> counts) {
  WeightedTally tally(k, mode, counts.size());
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) tally.add(static_cast<ClassId>(i + 1), static_cast<double>(counts[i]));
    total += counts[i];
  }
  ConcentrationVector out = tally.result();
  out.total_samples_used = total;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out.values[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  return out;
}

ErrorReport nrmse(std::span<const ConcentrationVector> runs, const ConcentrationVector& truth) {
  if (runs.size() < 2) throw EstimatorError("NRMSE needs at least two runs");
  ErrorReport report;
  report.runs = runs.size();
  const std::size_t classes = truth.size();
  std::vector<double> sq(classes, 0.0);
  std::vector<double> sum(classes, 0.0);
  double vector_sq = 0.0;
  for (const ConcentrationVector& run : runs) {
    if (run.k != truth.k || run.mode != truth.mode) {
      throw EstimatorError("estimate and truth use different registries");
    }
    for (std::size_t i = 0; i < classes; ++i) {
      const double est = i < run.size() ? run.values[i] : 0.0;
      const double diff = est - truth.values[i];
      sq[i] += diff * diff;
      sum[i] += est;
      vector_sq += diff * diff;
    }
  }
  const auto n = static_cast<double>(runs.size());
  for (std::size_t i = 0; i < classes; ++i) {
    ClassError e;
    e.id = static_cast<ClassId>(i + 1);
    e.truth = truth.values[i];
    e.mean = sum[i] / n;
    if (e.truth > 0.0) {
      e.nrmse = std::sqrt(sq[i] / n) / e.truth;
    } else {
      report.notes.push_back(fmt::format("class {} has zero truth; NRMSE undefined", e.id));
    }
    report.per_class.push_back(e);
  }
  report.rmse = std::sqrt(vector_sq / n);
  return report;
}

}  // namespace motifwalk
