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
#include "motifwalk/fixtures.hpp"
#include "motifwalk/query_oracle.hpp"
#include "motifwalk/walkers.hpp"

namespace {

using namespace motifwalk;

const LabeledGraph& graph() {
  static const LabeledGraph g = fixtures::gnutella_surrogate();
  return g;
}

void run_walk(benchmark::State& state, Method method) {
  const int k = static_cast<int>(state.range(0));
  const RegistrySet regs(GraphMode::kUndirected, {k - 1, k, k + 1});
  constexpr std::uint64_t kSteps = 20000;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    QueryOracle oracle(graph());
    WalkConfig cfg;
    cfg.method = method;
    cfg.k = k;
    cfg.steps = kSteps;
    cfg.seed = seed++;
    if (method == Method::kSrw) {
      benchmark::DoNotOptimize(run_srw(oracle, cfg, regs));
    } else if (method == Method::kPsrw) {
      benchmark::DoNotOptimize(run_psrw(oracle, cfg, regs));
    } else {
      benchmark::DoNotOptimize(run_mss(oracle, cfg, regs));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kSteps));
}

void BM_SrwSteps(benchmark::State& state) { run_walk(state, Method::kSrw); }
void BM_PsrwSteps(benchmark::State& state) { run_walk(state, Method::kPsrw); }
void BM_MssSteps(benchmark::State& state) { run_walk(state, Method::kMss); }

BENCHMARK(BM_SrwSteps)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PsrwSteps)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MssSteps)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
