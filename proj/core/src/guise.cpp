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


#include <bit>

#include "motifwalk/walkers.hpp"

namespace motifwalk {
namespace {

constexpr int kMixMin = 3;
constexpr int kMixMax = 5;

std::size_t contained_part(const NeighborMoves& m) {
  return m.center().size() > kMixMin ? static_cast<std::size_t>(std::popcount(m.non_cut_mask())) : 0;
}

std::size_t extension_part(const NeighborMoves& m) {
  return m.center().size() < kMixMax ? m.groups().size() : 0;
}

/// The i-th G_mix neighbor: smaller CISes first, then same size, then larger.
Cis mix_neighbor(const NeighborMoves& m, std::size_t i) {
  const std::size_t smaller = contained_part(m);
  if (i < smaller) {
    std::uint8_t rest = m.non_cut_mask();
    for (std::size_t skip = i; skip > 0; --skip) rest &= static_cast<std::uint8_t>(rest - 1);
    return remove_node(m.center(), std::countr_zero(rest));
  }
  i -= smaller;
  if (i < m.degree()) return m.neighbor(i);
  i -= m.degree();
  return m.extension(static_cast<std::uint32_t>(i));
}

}  // namespace

std::size_t guise_degree(const NeighborMoves& moves) {
  return contained_part(moves) + moves.degree() + extension_part(moves);
}

WalkTrace run_guise(QueryOracle& oracle, const WalkConfig& cfg, const RegistrySet& registries) {
  if (cfg.steps < 1) throw std::invalid_argument("steps must be at least 1");
  if (oracle.node_count() < 6) throw std::invalid_argument("guise needs at least 6 nodes");
  WalkTrace trace;
  trace.info.method = Method::kGuise;
  trace.info.k = kMixMax;
  std::array<const ClassRegistry*, kMixMax + 1> registry{};
  for (int k = kMixMin; k <= kMixMax; ++k) registry[static_cast<std::size_t>(k)] = &registries.at(k);

  NeighborMoves current;
  NeighborMoves proposal;
  auto record = [&] {
    if (++trace.info.states <= cfg.burn_in) return;
    const Cis& s = current.center();
    trace.samples.push_back({s, registry[static_cast<std::size_t>(s.size())]->classify(s),
                             static_cast<std::uint32_t>(guise_degree(current))});
  };
  try {
    Rng rng(cfg.seed);
    current.build(oracle, seed_cis(oracle, kMixMin, cfg.start, rng));
    record();
    while (trace.info.states < cfg.steps) {
      oracle.charge_step();
      const std::size_t dx = guise_degree(current);
      const std::size_t i = std::uniform_int_distribution<std::size_t>(0, dx - 1)(rng);
      proposal.build(oracle, mix_neighbor(current, i));
      const std::size_t dy = guise_degree(proposal);
      ++trace.info.proposals;
      const bool accept =
          dy <= dx || std::uniform_real_distribution<double>(0.0, 1.0)(rng) <
                          static_cast<double>(dx) / static_cast<double>(dy);
      if (accept) {
        current.swap(proposal);
        ++trace.info.accepted;
      }
      record();
    }
  } catch (const BudgetExhausted&) {
    trace.info.truncated = true;
  }
  trace.info.stats = oracle.stats();
  return trace;
}

}  // namespace motifwalk
