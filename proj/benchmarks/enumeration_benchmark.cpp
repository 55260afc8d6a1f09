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



#include <benchmark/benchmark.h>

#include "motifwalk/class_registry.hpp"
#include "motifwalk/enumeration.hpp"
#include "motifwalk/fixtures.hpp"

namespace {

using namespace motifwalk;

const LabeledGraph& graph() {
  static const LabeledGraph g = fixtures::gnutella_surrogate();
  return g;
}

void BM_EsuCount(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::uint64_t total = 0;
  for (auto _ : state) {
    total = count_cises(graph(), k);
    benchmark::DoNotOptimize(total);
  }
  state.counters["cises"] = static_cast<double>(total);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(total));
}
BENCHMARK(BM_EsuCount)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EsuClassify(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto registry = ClassRegistry::built_in(k, GraphMode::kUndirected);
  std::uint64_t total = 0;
  for (auto _ : state) {
    total = count_classes(graph(), k, *registry).total;
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(total));
}
BENCHMARK(BM_EsuClassify)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
