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


#include "motifwalk/enumeration.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "motifwalk/canonical.hpp"
#include "motifwalk/parallel.hpp"

namespace motifwalk {
namespace {

constexpr std::uint64_t kFlushEvery = 4096;
constexpr std::uint64_t kDenseCountLimit = std::uint64_t{1} << 16;

void check_k(int k) {
  if (k < 2 || k > kMaxCisSize) {
    throw std::invalid_argument(fmt::format("subgraph size k={} outside 2..{}", k, kMaxCisSize));
  }
}

/// One worker's ESU state. `Leaf` receives the members in insertion order
/// and, when a registry is attached, the mixed-radix pattern of that order.
class Esu {
 public:
  Esu(const LabeledGraph& g, int k, const ClassRegistry* registry)
      : g_(g), k_(k), registry_(registry), block_(g.node_count(), 0) {
    symbol_.fill(0);
    if (registry_ != nullptr) {
      for (int d = 0; d < 4; ++d) {
        for (int sg = 0; sg < 3; ++sg) {
          const EdgeLabel label{static_cast<Direction>(d), static_cast<Sign>(sg)};
          if (!label_matches_mode(label, g.mode())) continue;
          const std::uint8_t c = label_code(label);
          symbol_[c] = registry_->symbol_of(c);
        }
      }
      for (int j = 1; j < k; ++j) {
        for (int i = 0; i < j; ++i) {
          weight_[static_cast<std::size_t>(pair_slot(i, j))] = registry_->slot_weight(pair_slot(i, j));
        }
      }
    }
  }

  template <class Leaf>
  void run_root(NodeId v, Leaf& leaf) {
    root_ = v;
    sub_[0] = v;
    pattern_[0] = 0;
    block(v);
    auto& ext = ext_[1];
    ext.clear();
    for (const Neighbor& nb : g_.neighbors(v)) {
      if (nb.node > v) ext.push_back(nb.node);
    }
    if (k_ == 1) {
      leaf(std::span<const NodeId>(sub_.data(), 1), std::uint64_t{0});
    } else {
      extend(1, leaf);
    }
    unblock(v);
  }

 private:
  void block(NodeId w) {
    ++block_[w];
    for (const Neighbor& nb : g_.neighbors(w)) ++block_[nb.node];
  }
  void unblock(NodeId w) {
    --block_[w];
    for (const Neighbor& nb : g_.neighbors(w)) --block_[nb.node];
  }

  std::uint64_t pattern_with(int size, NodeId w) const {
    std::uint64_t p = pattern_[static_cast<std::size_t>(size - 1)];
    if (registry_ == nullptr) return p;
    for (int i = 0; i < size; ++i) {
      if (const auto l = g_.has_edge(sub_[static_cast<std::size_t>(i)], w)) {
        p += symbol_[label_code(*l)] * weight_[static_cast<std::size_t>(pair_slot(i, size))];
      }
    }
    return p;
  }

  template <class Leaf>
  void extend(int size, Leaf& leaf) {
    auto& ext = ext_[static_cast<std::size_t>(size)];
    while (!ext.empty()) {
      const NodeId w = ext.back();
      ext.pop_back();
      sub_[static_cast<std::size_t>(size)] = w;
      const std::uint64_t pattern = pattern_with(size, w);
      if (size + 1 == k_) {
        leaf(std::span<const NodeId>(sub_.data(), static_cast<std::size_t>(k_)), pattern);
        continue;
      }
      pattern_[static_cast<std::size_t>(size)] = pattern;
      auto& next = ext_[static_cast<std::size_t>(size + 1)];
      next = ext;
      for (const Neighbor& nb : g_.neighbors(w)) {
        if (nb.node > root_ && block_[nb.node] == 0) next.push_back(nb.node);
      }
      block(w);
      extend(size + 1, leaf);
      unblock(w);
    }
  }

  const LabeledGraph& g_;
  int k_;
  const ClassRegistry* registry_;
  std::vector<std::uint32_t> block_;
  std::array<std::vector<NodeId>, kMaxCisSize + 1> ext_;
  std::array<NodeId, kMaxCisSize> sub_{};
  std::array<std::uint64_t, kMaxCisSize> pattern_{};
  std::array<std::uint32_t, 16> symbol_{};
  std::array<std::uint64_t, kMaxCisPairs> weight_{};
  NodeId root_ = 0;
};

void check_cancel(const EnumerationOptions& options) {
  if (options.cancel != nullptr && options.cancel->load(std::memory_order_relaxed)) {
    throw EnumerationCancelled("enumeration cancelled");
  }
}

/// Shared leaf budget for the max_cises guard.
class GuardCounter {
 public:
  explicit GuardCounter(const EnumerationOptions& options) : options_(options) {}

  void flush(std::uint64_t& local) {
    const std::uint64_t total = seen_.fetch_add(local, std::memory_order_relaxed) + local;
    local = 0;
    if (options_.max_cises && total > *options_.max_cises) {
      throw EnumerationGuardExceeded(
          fmt::format("more than {} CISes; enumeration guard exceeded", *options_.max_cises));
    }
    check_cancel(options_);
  }

 private:
  const EnumerationOptions& options_;
  std::atomic<std::uint64_t> seen_{0};
};

}  // namespace

void enumerate_cises(const LabeledGraph& g, int k, const std::function<void(const Cis&)>& visit,
                     const EnumerationOptions& options) {
  check_k(k);
  Esu esu(g, k, nullptr);
  GuardCounter guard(options);
  std::uint64_t local = 0;
  auto leaf = [&](std::span<const NodeId> members, std::uint64_t) {
    visit(induced_cis(g, members));
    if (++local == kFlushEvery) guard.flush(local);
  };
  for (NodeId v = 0; v < g.node_count(); ++v) {
    esu.run_root(v, leaf);
    guard.flush(local);
  }
}

std::vector<Cis> enumerate_all(const LabeledGraph& g, int k, const EnumerationOptions& options) {
  std::vector<Cis> out;
  enumerate_cises(g, k, [&](const Cis& s) { out.push_back(s); }, options);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_cises(const LabeledGraph& g, int k, const EnumerationOptions& options) {
  check_k(k);
  const std::size_t workers = resolve_threads(options.threads);
  GuardCounter guard(options);
  std::vector<std::unique_ptr<Esu>> engines(workers);
  std::vector<std::uint64_t> totals(workers, 0);
  parallel_for(g.node_count(), workers, [&](std::size_t w, std::size_t root) {
    if (!engines[w]) engines[w] = std::make_unique<Esu>(g, k, nullptr);
    std::uint64_t local = 0;
    auto leaf = [&](std::span<const NodeId>, std::uint64_t) {
      ++totals[w];
      if (++local == kFlushEvery) guard.flush(local);
    };
    engines[w]->run_root(static_cast<NodeId>(root), leaf);
    guard.flush(local);
  });
  std::uint64_t total = 0;
  for (const std::uint64_t t : totals) total += t;
  return total;
}

ClassCounts count_classes(const LabeledGraph& g, int k, const ClassRegistry& registry,
                          const EnumerationOptions& options) {
  check_k(k);
  if (registry.k() != k || registry.mode() != g.mode()) {
    throw std::invalid_argument(fmt::format("registry is for k={} {}, graph needs k={} {}",
                                            registry.k(), to_string(registry.mode()), k,
                                            to_string(g.mode())));
  }
  std::uint64_t pattern_space = 1;
  bool dense = true;
  for (int s = 0; s < k * (k - 1) / 2; ++s) {
    pattern_space *= registry.radix();
    if (pattern_space > kDenseCountLimit) {
      dense = false;
      break;
    }
  }

  struct Worker {
    std::unique_ptr<Esu> esu;
    std::vector<std::uint64_t> dense;
    std::unordered_map<std::uint64_t, std::uint64_t> sparse;
  };
  const std::size_t workers = resolve_threads(options.threads);
  std::vector<Worker> state(workers);
  GuardCounter guard(options);
  parallel_for(g.node_count(), workers, [&](std::size_t w, std::size_t root) {
    Worker& me = state[w];
    if (!me.esu) {
      me.esu = std::make_unique<Esu>(g, k, &registry);
      if (dense) me.dense.assign(pattern_space, 0);
    }
    std::uint64_t local = 0;
    auto leaf = [&](std::span<const NodeId>, std::uint64_t pattern) {
      if (dense) {
        ++me.dense[pattern];
      } else {
        ++me.sparse[pattern];
      }
      if (++local == kFlushEvery) guard.flush(local);
    };
    me.esu->run_root(static_cast<NodeId>(root), leaf);
    guard.flush(local);
  });

  std::map<std::uint64_t, std::uint64_t> merged;
  for (const Worker& me : state) {
    for (std::size_t p = 0; p < me.dense.size(); ++p) {
      if (me.dense[p] != 0) merged[p] += me.dense[p];
    }
    for (const auto& [p, c] : me.sparse) merged[p] += c;
  }
  ClassCounts out;
  out.k = k;
  out.mode = g.mode();
  for (const auto& [pattern, count] : merged) {
    const ClassId id = registry.classify_pattern(pattern);
    if (out.counts.size() < id) out.counts.resize(id, 0);
    out.counts[id - 1] += count;
    out.total += count;
  }
  out.counts.resize(std::max(out.counts.size(), registry.size()), 0);
  return out;
}

ConcentrationVector to_concentrations(const ClassCounts& counts) {
  return concentrations_from_counts(counts.k, counts.mode, counts.counts);
}

ConcentrationVector exact_concentrations(const LabeledGraph& g, int k,
                                         const ClassRegistry& registry,
                                         const EnumerationOptions& options) {
  return to_concentrations(count_classes(g, k, registry, options));
}

std::size_t RelationshipGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adjacency) twice += a.size();
  return twice / 2;
}

std::optional<std::size_t> RelationshipGraph::index_of(const Cis& s) const {
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), s);
  if (it == nodes.end() || it->size() != s.size() ||
      !std::equal(it->nodes().begin(), it->nodes().end(), s.nodes().begin())) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - nodes.begin());
}

bool RelationshipGraph::connected() const {
  if (nodes.empty()) return true;
  std::vector<bool> seen(nodes.size(), false);
  std::deque<std::uint32_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::uint32_t x = queue.front();
    queue.pop_front();
    for (const std::uint32_t y : adjacency[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        queue.push_back(y);
      }
    }
  }
  return reached == nodes.size();
}

bool RelationshipGraph::bipartite() const {
  std::vector<int> color(nodes.size(), -1);
  for (std::uint32_t start = 0; start < nodes.size(); ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::deque<std::uint32_t> queue{start};
    while (!queue.empty()) {
      const std::uint32_t x = queue.front();
      queue.pop_front();
      for (const std::uint32_t y : adjacency[x]) {
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          queue.push_back(y);
        } else if (color[y] == color[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

using SubsetKey = std::array<NodeId, kMaxCisSize>;

struct SubsetKeyHash {
  std::size_t operator()(const SubsetKey& key) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (const NodeId v : key) h = (h ^ v) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

SubsetKey without(const Cis& s, int index) {
  SubsetKey key;
  key.fill(0xFFFFFFFFU);
  for (int i = 0, o = 0; i < s.size(); ++i) {
    if (i != index) key[static_cast<std::size_t>(o++)] = s.node(i);
  }
  return key;
}

SubsetKey key_of(const Cis& s) {
  SubsetKey key;
  key.fill(0xFFFFFFFFU);
  std::copy(s.nodes().begin(), s.nodes().end(), key.begin());
  return key;
}

void add_edge(RelationshipGraph& r, std::size_t a, std::size_t b) {
  r.adjacency[a].push_back(static_cast<std::uint32_t>(b));
  r.adjacency[b].push_back(static_cast<std::uint32_t>(a));
}

/// Same-size edges among nodes[first, last).
void link_same_size(RelationshipGraph& r, std::size_t first, std::size_t last) {
  std::unordered_map<SubsetKey, std::vector<std::uint32_t>, SubsetKeyHash> buckets;
  for (std::size_t x = first; x < last; ++x) {
    for (int i = 0; i < r.nodes[x].size(); ++i) {
      buckets[without(r.nodes[x], i)].push_back(static_cast<std::uint32_t>(x));
    }
  }
  for (const auto& [key, members] : buckets) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) add_edge(r, members[a], members[b]);
    }
  }
}

void collect(const LabeledGraph& g, int k, std::size_t guard, std::vector<Cis>& out) {
  EnumerationOptions options;
  options.max_cises = guard - std::min(guard, out.size());
  try {
    std::vector<Cis> found = enumerate_all(g, k, options);
    out.insert(out.end(), found.begin(), found.end());
  } catch (const EnumerationGuardExceeded&) {
    throw EnumerationGuardExceeded(
        fmt::format("relationship graph would exceed {} nodes", guard));
  }
  if (out.size() > guard) {
    throw EnumerationGuardExceeded(fmt::format("relationship graph would exceed {} nodes", guard));
  }
}

void sort_adjacency(RelationshipGraph& r) {
  for (auto& a : r.adjacency) std::sort(a.begin(), a.end());
}

}  // namespace

RelationshipGraph build_relationship_graph(const LabeledGraph& g, int k, std::size_t guard) {
  check_k(k);
  RelationshipGraph r;
  collect(g, k, guard, r.nodes);
  r.adjacency.resize(r.nodes.size());
  link_same_size(r, 0, r.nodes.size());
  sort_adjacency(r);
  return r;
}

RelationshipGraph build_mix_graph(const LabeledGraph& g, std::size_t guard) {
  RelationshipGraph r;
  std::array<std::size_t, 4> start{};
  for (int k = 3; k <= 5; ++k) {
    start[static_cast<std::size_t>(k - 3)] = r.nodes.size();
    collect(g, k, guard, r.nodes);
  }
  start[3] = r.nodes.size();
  r.adjacency.resize(r.nodes.size());
  for (std::size_t s = 0; s < 3; ++s) link_same_size(r, start[s], start[s + 1]);

  std::unordered_map<SubsetKey, std::uint32_t, SubsetKeyHash> index;
  for (std::size_t x = 0; x < r.nodes.size(); ++x) index.emplace(key_of(r.nodes[x]), static_cast<std::uint32_t>(x));
  for (std::size_t x = start[1]; x < start[3]; ++x) {
    const Cis& big = r.nodes[x];
    for (int i = 0; i < big.size(); ++i) {
      if (!mask_connected(big, static_cast<std::uint8_t>(big.full_mask() & ~(1U << i)))) continue;
      add_edge(r, x, index.at(without(big, i)));
    }
  }
  sort_adjacency(r);
  return r;
}

void write_ground_truth(std::ostream& out, const ClassCounts& counts,
                        const ClassRegistry& registry, std::uint64_t fingerprint) {
  fmt::print(out, "# motifwalk ground truth\n");
  fmt::print(out, "# fingerprint={:016x} k={} mode={} total={}\n", fingerprint, counts.k,
             to_string(counts.mode), counts.total);
  fmt::print(out, "class_id\tcanonical_code\tcount\tconcentration\n");
  for (std::size_t i = 0; i < counts.counts.size(); ++i) {
    const ClassInfo info = registry.info(static_cast<ClassId>(i + 1));
    const double omega = counts.total == 0 ? 0.0
                                           : static_cast<double>(counts.counts[i]) /
                                                 static_cast<double>(counts.total);
    fmt::print(out, "{}\t{}\t{}\t{:.17g}\n", info.id, info.code.hex(), counts.counts[i], omega);
  }
}

ClassCounts read_ground_truth(std::istream& in, const ClassRegistry& registry,
                              std::uint64_t* fingerprint) {
  ClassCounts out;
  out.k = registry.k();
  out.mode = registry.mode();
  std::optional<std::uint64_t> declared_total;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream fields(line.substr(1));
      std::string field;
      while (fields >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        try {
          if (key == "fingerprint" && fingerprint != nullptr) {
            *fingerprint = std::stoull(value, nullptr, 16);
          } else if (key == "k" && std::stoi(value) != registry.k()) {
            throw ParseError(line_no, fmt::format("file is for k={}, expected {}", value, registry.k()));
          } else if (key == "mode" && parse_graph_mode(value) != registry.mode()) {
            throw ParseError(line_no, fmt::format("file is for mode {}", value));
          } else if (key == "total") {
            declared_total = std::stoull(value);
          }
        } catch (const std::logic_error&) {
          throw ParseError(line_no, fmt::format("bad header field '{}'", field));
        }
      }
      continue;
    }
    if (!header_seen) {
      header_seen = true;
      if (line.starts_with("class_id")) continue;
    }
    std::istringstream fields(line);
    ClassId id = 0;
    std::string hex;
    std::uint64_t count = 0;
    if (!(fields >> id >> hex >> count) || id == 0) {
      throw ParseError(line_no, "expected class_id, canonical_code, count");
    }
    ClassId resolved = 0;
    try {
      resolved = registry.classify(CanonicalCode::from_hex(registry.k(), hex).to_cis());
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
    if (!registry.is_dynamic() && resolved != id) {
      throw ParseError(line_no, fmt::format("code {} is class {}, file says {}", hex, resolved, id));
    }
    if (out.counts.size() < resolved) out.counts.resize(resolved, 0);
    out.counts[resolved - 1] += count;
    out.total += count;
  }
  if (declared_total && *declared_total != out.total) {
    throw ParseError(line_no, fmt::format("counts sum to {}, header says {}", out.total, *declared_total));
  }
  if (out.total == 0) throw ParseError(line_no, "ground truth has no counts");
  out.counts.resize(std::max(out.counts.size(), registry.size()), 0);
  return out;
}

}  // namespace motifwalk
