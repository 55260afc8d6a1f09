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



#include <vector>

#include <benchmark/benchmark.h>

#include "motifwalk/canonical.hpp"
#include "motifwalk/class_registry.hpp"
#include "motifwalk/enumeration.hpp"
#include "motifwalk/fixtures.hpp"

namespace {

using namespace motifwalk;

std::vector<Cis> sample_cises(int k) {
  const LabeledGraph g = fixtures::random_connected(14, 0.35, 5);
  std::vector<Cis> all = enumerate_all(g, k);
  if (all.size() > 2000) all.resize(2000);
  return all;
}

void BM_CanonicalCode(benchmark::State& state) {
  const auto cises = sample_cises(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const Cis& s : cises) benchmark::DoNotOptimize(canonical_code(s));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cises.size()));
}
BENCHMARK(BM_CanonicalCode)->DenseRange(3, 6);

void BM_Classify(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto cises = sample_cises(k);
  const auto registry = ClassRegistry::built_in(k, GraphMode::kUndirected);
  for (auto _ : state) {
    for (const Cis& s : cises) benchmark::DoNotOptimize(registry->classify(s));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cises.size()));
}
BENCHMARK(BM_Classify)->DenseRange(3, 6);

}  // namespace
