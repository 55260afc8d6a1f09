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


#include "motifwalk/class_registry.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <fmt/format.h>

#include "motifwalk/log.hpp"

namespace motifwalk {
namespace {

constexpr std::uint32_t kUnknown = 0;
constexpr std::uint32_t kDisconnected = 0xFFFFFFFFU;
constexpr std::uint64_t kMaxTableSize = std::uint64_t{1} << 22;

std::vector<std::uint8_t> symbol_codes(GraphMode mode) {
  switch (mode) {
    case GraphMode::kUndirected:
      return {0, label_code({})};
    case GraphMode::kDirected:
      return {0, label_code({Direction::kForward, Sign::kNone}),
              label_code({Direction::kBackward, Sign::kNone}),
              label_code({Direction::kBoth, Sign::kNone})};
    case GraphMode::kSigned:
      return {0, label_code({Direction::kNone, Sign::kPositive}),
              label_code({Direction::kNone, Sign::kNegative})};
  }
  return {};
}

Cis make_graph(int k, std::initializer_list<std::array<int, 2>> arcs, GraphMode mode,
               std::initializer_list<Sign> signs = {}) {
  std::array<NodeId, kMaxCisSize> ids{};
  std::iota(ids.begin(), ids.end(), NodeId{0});
  Cis s = Cis::with_nodes({ids.data(), static_cast<std::size_t>(k)});
  auto sign_it = signs.begin();
  for (const auto& [a, b] : arcs) {
    EdgeLabel label;
    if (mode == GraphMode::kDirected) {
      label.direction = Direction::kForward;
      if (const auto existing = s.label(a, b)) {
        label.direction = existing->direction == Direction::kBackward ? Direction::kBoth
                                                                      : existing->direction;
      }
    }
    if (mode == GraphMode::kSigned) label.sign = *sign_it++;
    s.set_edge(a, b, label);
  }
  return s;
}

// Holland-Leinhardt names for the connected directed triads.
const std::map<CanonicalCode, std::string>& triad_names() {
  static const auto* names = [] {
    auto* m = new std::map<CanonicalCode, std::string>();
    const GraphMode d = GraphMode::kDirected;
    auto add = [&](std::initializer_list<std::array<int, 2>> arcs, const char* name) {
      (*m)[canonical_code(make_graph(3, arcs, d))] = name;
    };
    add({{1, 0}, {1, 2}}, "021D");
    add({{0, 1}, {2, 1}}, "021U");
    add({{0, 1}, {1, 2}}, "021C");
    add({{0, 1}, {1, 0}, {2, 1}}, "111D");
    add({{0, 1}, {1, 0}, {1, 2}}, "111U");
    add({{0, 1}, {2, 1}, {0, 2}}, "030T");
    add({{0, 1}, {1, 2}, {2, 0}}, "030C");
    add({{0, 1}, {1, 0}, {1, 2}, {2, 1}}, "201");
    add({{1, 0}, {1, 2}, {0, 2}, {2, 0}}, "120D");
    add({{0, 1}, {2, 1}, {0, 2}, {2, 0}}, "120U");
    add({{0, 1}, {1, 2}, {0, 2}, {2, 0}}, "120C");
    add({{0, 1}, {1, 2}, {2, 1}, {0, 2}, {2, 0}}, "210");
    add({{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}}, "300");
    return m;
  }();
  return *names;
}

std::string undirected_name(const Cis& g, int ordinal_in_edge_count) {
  const int k = g.size();
  const int m = g.edge_count();
  int max_degree = 0;
  for (int i = 0; i < k; ++i) max_degree = std::max(max_degree, std::popcount(g.adjacency_mask(i)));
  if (k == 2) return "edge";
  if (m == k * (k - 1) / 2) return k == 3 ? "triangle" : fmt::format("clique-{}", k);
  if (k == 3) return "path";
  if (m == k - 1 && max_degree == k - 1) return fmt::format("star-{}", k);
  if (m == k - 1 && max_degree == 2) return fmt::format("path-{}", k);
  if (m == k && max_degree == 2) return fmt::format("cycle-{}", k);
  if (k == 4 && m == 4) return "tailed-triangle";
  if (k == 4 && m == 5) return "diamond";
  return fmt::format("{}n{}e-{}", k, m, ordinal_in_edge_count);
}

std::string signed_name(const Cis& g) {
  std::string signs;
  for (const CisEdge& e : g.edges()) signs += e.label.sign == Sign::kNegative ? '-' : '+';
  std::sort(signs.begin(), signs.end());  // '+' < '-'
  const int k = g.size();
  std::string shape = k == 2   ? "edge"
                      : k == 3 ? (g.edge_count() == 3 ? "triangle" : "path")
                               : fmt::format("{}n{}e", k, g.edge_count());
  return fmt::format("{}({})", shape, signs);
}

std::string class_name(const CanonicalCode& code, GraphMode mode, int ordinal_in_edge_count) {
  const Cis g = code.to_cis();
  switch (mode) {
    case GraphMode::kUndirected:
      return undirected_name(g, ordinal_in_edge_count);
    case GraphMode::kDirected: {
      if (g.size() == 3) {
        const auto& names = triad_names();
        if (const auto it = names.find(code); it != names.end()) return it->second;
      }
      if (g.size() == 2) {
        return g.label(0, 1)->direction == Direction::kBoth ? "mutual" : "single-arc";
      }
      return fmt::format("d{}n{}e-{}", g.size(), g.edge_count(), ordinal_in_edge_count);
    }
    case GraphMode::kSigned:
      return signed_name(g);
  }
  return "?";
}

}  // namespace

struct ClassRegistry::Impl {
  int k = 0;
  GraphMode mode = GraphMode::kUndirected;
  bool dynamic = false;
  std::uint32_t radix = 2;
  std::vector<std::uint8_t> symbol_to_code;
  std::array<int, 16> code_to_symbol{};
  std::vector<std::uint64_t> weights;  // radix^slot
  std::uint64_t pattern_count = 0;     // radix^pairs, saturated

  std::unique_ptr<std::atomic<std::uint32_t>[]> table;  // size pattern_count when small
  mutable std::mutex mutex;
  std::vector<ClassInfo> classes;
  std::unordered_map<CanonicalCode, ClassId, CanonicalCodeHash> by_code;
  std::unordered_map<std::uint64_t, ClassId> overflow;  // used when no table

  Impl(int k_in, GraphMode mode_in, bool dynamic_in) : k(k_in), mode(mode_in), dynamic(dynamic_in) {
    if (k < 2 || k > kMaxCisSize) {
      throw std::invalid_argument(fmt::format("subgraph size k={} outside 2..{}", k, kMaxCisSize));
    }
    symbol_to_code = symbol_codes(mode);
    radix = static_cast<std::uint32_t>(symbol_to_code.size());
    code_to_symbol.fill(-1);
    for (std::size_t s = 0; s < symbol_to_code.size(); ++s) {
      code_to_symbol[symbol_to_code[s]] = static_cast<int>(s);
    }
    const int pairs = k * (k - 1) / 2;
    weights.resize(static_cast<std::size_t>(pairs));
    std::uint64_t w = 1;
    bool saturated = false;
    for (int slot = 0; slot < pairs; ++slot) {
      weights[static_cast<std::size_t>(slot)] = w;
      if (w > (std::uint64_t{1} << 40)) saturated = true;
      w *= radix;
    }
    pattern_count = saturated ? ~std::uint64_t{0} : w;
    if (pattern_count <= kMaxTableSize) {
      table = std::make_unique<std::atomic<std::uint32_t>[]>(pattern_count);
      for (std::uint64_t p = 0; p < pattern_count; ++p) table[p].store(kUnknown, std::memory_order_relaxed);
    }
  }

  Cis decode(std::uint64_t pattern) const {
    std::array<NodeId, kMaxCisSize> ids{};
    std::iota(ids.begin(), ids.end(), NodeId{0});
    Cis s = Cis::with_nodes({ids.data(), static_cast<std::size_t>(k)});
    for (int j = 1; j < k; ++j) {
      for (int i = 0; i < j; ++i) {
        const auto symbol = static_cast<std::size_t>(pattern % radix);
        pattern /= radix;
        if (symbol != 0) s.set_code(i, j, symbol_to_code[symbol]);
      }
    }
    return s;
  }

  // Caller holds `mutex` (or is single-threaded during construction).
  ClassId resolve_locked(std::uint64_t pattern) {
    const Cis s = decode(pattern);
    if (!is_connected(s)) return kDisconnected;
    const CanonicalCode code = canonical_code(s);
    if (const auto it = by_code.find(code); it != by_code.end()) return it->second;
    if (!dynamic) {
      throw UnknownClassError(fmt::format("code {} missing from built-in registry", code.hex()));
    }
    const auto id = static_cast<ClassId>(classes.size() + 1);
    classes.push_back({id, code, fmt::format("dyn-{}", id), s.edge_count()});
    by_code.emplace(code, id);
    return id;
  }

  void build_all() {
    std::vector<std::pair<int, CanonicalCode>> found;
    std::unordered_map<CanonicalCode, int, CanonicalCodeHash> seen;
    std::vector<std::uint32_t> slot_of_pattern(pattern_count, kDisconnected);
    std::vector<CanonicalCode> distinct;
    for (std::uint64_t p = 0; p < pattern_count; ++p) {
      const Cis s = decode(p);
      if (!is_connected(s)) continue;
      const CanonicalCode code = canonical_code(s);
      auto [it, inserted] = seen.emplace(code, static_cast<int>(distinct.size()));
      if (inserted) {
        distinct.push_back(code);
        found.emplace_back(s.edge_count(), code);
      }
      slot_of_pattern[p] = static_cast<std::uint32_t>(it->second);
    }
    std::sort(found.begin(), found.end());
    if (mode == GraphMode::kDirected && k == 3) {
      // Fixed permutation: the 3-cycle (030C) takes the first closed-triad ID.
      const auto& names = triad_names();
      const auto cycle = std::find_if(found.begin(), found.end(), [&](const auto& entry) {
        const auto it = names.find(entry.second);
        return it != names.end() && it->second == "030C";
      });
      const auto first_closed = std::find_if(found.begin(), found.end(),
                                             [](const auto& entry) { return entry.first == 3; });
      std::rotate(first_closed, cycle, cycle + 1);
    }
    int ordinal = 0;
    int last_edges = -1;
    for (const auto& [edges, code] : found) {
      ordinal = edges == last_edges ? ordinal + 1 : 1;
      last_edges = edges;
      const auto id = static_cast<ClassId>(classes.size() + 1);
      classes.push_back({id, code, class_name(code, mode, ordinal), edges});
      by_code.emplace(code, id);
    }
    for (std::uint64_t p = 0; p < pattern_count; ++p) {
      const std::uint32_t d = slot_of_pattern[p];
      table[p].store(d == kDisconnected ? kDisconnected : by_code.at(distinct[d]),
                     std::memory_order_relaxed);
    }
  }
};

ClassRegistry::ClassRegistry(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
ClassRegistry::~ClassRegistry() = default;

bool ClassRegistry::has_built_in(int k, GraphMode mode) {
  if (mode == GraphMode::kUndirected) return k >= 2 && k <= 6;
  return k >= 2 && k <= 3;
}

std::shared_ptr<const ClassRegistry> ClassRegistry::built_in(int k, GraphMode mode) {
  if (!has_built_in(k, mode)) {
    throw std::invalid_argument(
        fmt::format("no built-in registry for k={} in {} mode", k, to_string(mode)));
  }
  static std::mutex cache_mutex;
  static std::map<std::pair<int, GraphMode>, std::shared_ptr<const ClassRegistry>> cache;
  std::lock_guard lock(cache_mutex);
  auto& slot = cache[{k, mode}];
  if (!slot) {
    auto impl = std::make_unique<Impl>(k, mode, false);
    impl->build_all();
    slot.reset(new ClassRegistry(std::move(impl)));
  }
  return slot;
}

std::shared_ptr<const ClassRegistry> ClassRegistry::make_dynamic(int k, GraphMode mode) {
  return std::shared_ptr<const ClassRegistry>(
      new ClassRegistry(std::make_unique<Impl>(k, mode, true)));
}

int ClassRegistry::k() const { return impl_->k; }
GraphMode ClassRegistry::mode() const { return impl_->mode; }
bool ClassRegistry::is_dynamic() const { return impl_->dynamic; }
std::uint32_t ClassRegistry::radix() const { return impl_->radix; }

std::uint64_t ClassRegistry::slot_weight(int slot) const {
  return impl_->weights.at(static_cast<std::size_t>(slot));
}

std::size_t ClassRegistry::size() const {
  std::lock_guard lock(impl_->mutex);
  return impl_->classes.size();
}

std::uint32_t ClassRegistry::symbol_of(std::uint8_t code) const {
  const int symbol = code < impl_->code_to_symbol.size() ? impl_->code_to_symbol[code] : -1;
  if (symbol < 0) {
    throw UnknownClassError(fmt::format("edge label {} does not fit {} mode", code,
                                        to_string(impl_->mode)));
  }
  return static_cast<std::uint32_t>(symbol);
}

std::uint64_t ClassRegistry::pattern_of(const Cis& s) const {
  if (s.size() != impl_->k) {
    throw UnknownClassError(
        fmt::format("{}-node subgraph given to a k={} registry", s.size(), impl_->k));
  }
  std::uint64_t pattern = 0;
  for (int j = 1; j < s.size(); ++j) {
    for (int i = 0; i < j; ++i) {
      const std::uint8_t c = s.code(i, j);
      if (c != 0) pattern += symbol_of(c) * impl_->weights[static_cast<std::size_t>(pair_slot(i, j))];
    }
  }
  return pattern;
}

ClassId ClassRegistry::classify_pattern(std::uint64_t pattern) const {
  Impl& impl = *impl_;
  if (pattern >= impl.pattern_count) {
    throw UnknownClassError(fmt::format("pattern {} out of range", pattern));
  }
  ClassId id = kUnknown;
  if (impl.table) {
    id = impl.table[pattern].load(std::memory_order_relaxed);
    if (id == kUnknown) {
      std::lock_guard lock(impl.mutex);
      id = impl.resolve_locked(pattern);
      impl.table[pattern].store(id, std::memory_order_relaxed);
    }
  } else {
    std::lock_guard lock(impl.mutex);
    if (const auto it = impl.overflow.find(pattern); it != impl.overflow.end()) {
      id = it->second;
    } else {
      id = impl.resolve_locked(pattern);
      impl.overflow.emplace(pattern, id);
    }
  }
  if (id == kDisconnected) throw UnknownClassError("subgraph is not connected");
  return id;
}

ClassId ClassRegistry::classify(const Cis& s) const { return classify_pattern(pattern_of(s)); }

std::optional<ClassId> ClassRegistry::find(const CanonicalCode& code) const {
  std::lock_guard lock(impl_->mutex);
  const auto it = impl_->by_code.find(code);
  if (it == impl_->by_code.end()) return std::nullopt;
  return it->second;
}

ClassInfo ClassRegistry::info(ClassId id) const {
  std::lock_guard lock(impl_->mutex);
  if (id == 0 || id > impl_->classes.size()) {
    throw std::out_of_range(fmt::format("class id {} not in registry", id));
  }
  return impl_->classes[id - 1];
}

std::vector<ClassInfo> ClassRegistry::classes() const {
  std::lock_guard lock(impl_->mutex);
  return impl_->classes;
}

std::shared_ptr<const ClassRegistry> build_registry(int k, GraphMode mode) {
  if (ClassRegistry::has_built_in(k, mode)) return ClassRegistry::built_in(k, mode);
  warn(fmt::format("no built-in registry for k={} in {} mode; using a dynamic registry "
                   "(class ids are assigned in first-seen order and are not portable)",
                   k, to_string(mode)));
  return ClassRegistry::make_dynamic(k, mode);
}

std::string describe_edges(const Cis& s, GraphMode mode) {
  std::string out;
  for (const CisEdge& e : s.edges()) {
    if (!out.empty()) out += ' ';
    switch (mode) {
      case GraphMode::kUndirected:
        out += fmt::format("{}-{}", e.a, e.b);
        break;
      case GraphMode::kDirected: {
        const char* arrow = e.label.direction == Direction::kForward    ? "->"
                            : e.label.direction == Direction::kBackward ? "<-"
                                                                        : "<->";
        out += fmt::format("{}{}{}", e.a, arrow, e.b);
        break;
      }
      case GraphMode::kSigned:
        out += fmt::format("{}-{}:{}", e.a, e.b, e.label.sign == Sign::kNegative ? '-' : '+');
        break;
    }
  }
  return out;
}

std::string ascii_drawing(const Cis& s, GraphMode mode) {
  std::ostringstream out;
  out << "   ";
  for (int j = 0; j < s.size(); ++j) out << ' ' << j;
  out << '\n';
  for (int i = 0; i < s.size(); ++i) {
    out << ' ' << i << ' ';
    for (int j = 0; j < s.size(); ++j) {
      char c = '.';
      if (i == j) {
        c = '\\';
      } else if (const auto l = s.label(i, j)) {
        switch (mode) {
          case GraphMode::kUndirected:
            c = '#';
            break;
          case GraphMode::kDirected:
            c = l->direction == Direction::kForward    ? '>'
                : l->direction == Direction::kBackward ? '<'
                                                       : '=';
            break;
          case GraphMode::kSigned:
            c = l->sign == Sign::kNegative ? '-' : '+';
            break;
        }
      }
      out << ' ' << c;
    }
    out << '\n';
  }
  return out.str();
}

std::string export_registry_table(const ClassRegistry& registry) {
  std::string out = "class_id\tk\tmode\tcanonical_code\tedges\tname\n";
  for (const ClassInfo& c : registry.classes()) {
    out += fmt::format("{}\t{}\t{}\t{}\t{}\t{}\n", c.id, registry.k(), to_string(registry.mode()),
                       c.code.hex(), describe_edges(c.code.to_cis(), registry.mode()), c.name);
  }
  return out;
}

}  // namespace motifwalk
