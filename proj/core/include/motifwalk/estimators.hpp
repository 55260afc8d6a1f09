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


#ifndef MOTIFWALK_ESTIMATORS_HPP_
#define MOTIFWALK_ESTIMATORS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "motifwalk/class_registry.hpp"
#include "motifwalk/walkers.hpp"

namespace motifwalk {

/// Concentrations ω_i for i = 1..T; values[i - 1] belongs to class i.
struct ConcentrationVector {
  int k = 0;
  GraphMode mode = GraphMode::kUndirected;
  std::vector<double> values;
  /// False for classes absent from the samples (value 0 but not estimated).
  std::vector<bool> observed;
  std::uint64_t total_samples_used = 0;

  double at(ClassId id) const { return id >= 1 && id <= values.size() ? values[id - 1] : 0.0; }
  std::size_t size() const { return values.size(); }
};

class EstimatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Streaming self-normalized weighted class frequencies.
class WeightedTally {
 public:
  WeightedTally(int k, GraphMode mode, std::size_t class_count);

  void add(ClassId id, double weight);
  /// Counts one sample towards total_samples_used without adding mass.
  void count_sample() { ++samples_; }
  std::uint64_t samples() const { return samples_; }
  /// Throws EstimatorError when no mass was added.
  ConcentrationVector result() const;

 private:
  int k_;
  GraphMode mode_;
  std::vector<double> mass_;
  std::vector<bool> seen_;
  std::uint64_t samples_ = 0;
};

/// ω̂_i = Σ 1{class=i}/d_j / Σ 1/d_j.
ConcentrationVector ht_node_estimate(const WalkTrace& trace, const ClassRegistry& registry);
/// ω̃_i with weights 1/(I_j (I_j - 1)).
ConcentrationVector ht_edge_estimate(const PairTrace& trace, const ClassRegistry& registry);
/// Size k-1 estimate from a k-node walk: weights 1/(d_j |O(s')|).
ConcentrationVector ht_reduce_estimate(const ReduceTrace& trace, const ClassRegistry& registry);
/// Unweighted class frequencies over the samples of size registry.k().
ConcentrationVector plain_average(const WalkTrace& trace, const ClassRegistry& registry);

/// Exact concentrations from class counts (index = class id - 1).
ConcentrationVector concentrations_from_counts(int k, GraphMode mode,
                                               std::span<const std::uint64_t> counts);

struct ClassError {
  ClassId id = 0;
  double truth = 0.0;
  double mean = 0.0;
  /// Absent when truth is zero.
  std::optional<double> nrmse;
};

struct ErrorReport {
  std::vector<ClassError> per_class;
  /// sqrt(mean over runs of Σ_i (ω̂_i - ω_i)^2).
  double rmse = 0.0;
  std::size_t runs = 0;
  std::vector<std::string> notes;
};

/// Requires at least two runs; vectors are compared over the truth's classes.
ErrorReport nrmse(std::span<const ConcentrationVector> runs, const ConcentrationVector& truth);

}  // namespace motifwalk

#endif  // MOTIFWALK_ESTIMATORS_HPP_
