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


#ifndef MOTIFWALK_CLASS_REGISTRY_HPP_
#define MOTIFWALK_CLASS_REGISTRY_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "motifwalk/canonical.hpp"
#include "motifwalk/cis.hpp"
#include "motifwalk/graph.hpp"

namespace motifwalk {

/// 1-based, stable within a registry.
using ClassId = std::uint32_t;

struct ClassInfo {
  ClassId id = 0;
  CanonicalCode code;
  std::string name;
  int edge_count = 0;
};

class UnknownClassError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Isomorphism classes of connected k-node subgraphs for one graph mode.
///
/// Built-in registries enumerate every class up front (undirected k <= 6,
/// directed and signed k <= 3) and are immutable. Their IDs sort classes by
/// (edge count, canonical code); for directed k = 3 the 3-cycle is moved to
/// ID 7 so that IDs 1-6 are the open triads and 7 is the cycle.
///
/// Dynamic registries start empty and assign IDs in first-seen order; they
/// are internally synchronized and their IDs are not portable across runs.
///
/// Classification goes through a table indexed by the subgraph's labeled
/// adjacency pattern, so the permutation search runs once per pattern.
class ClassRegistry {
 public:
  static bool has_built_in(int k, GraphMode mode);
  /// Cached per (k, mode); throws std::invalid_argument if unsupported.
  static std::shared_ptr<const ClassRegistry> built_in(int k, GraphMode mode);
  static std::shared_ptr<const ClassRegistry> make_dynamic(int k, GraphMode mode);

  ~ClassRegistry();
  ClassRegistry(const ClassRegistry&) = delete;
  ClassRegistry& operator=(const ClassRegistry&) = delete;

  int k() const;
  GraphMode mode() const;
  bool is_dynamic() const;
  /// T_k for built-in registries; the number of classes seen so far otherwise.
  std::size_t size() const;

  /// Throws UnknownClassError for disconnected subgraphs, labels that do not
  /// fit the mode, or (built-in only) codes missing from the registry.
  ClassId classify(const Cis& s) const;

  /// Mixed-radix encoding of the pair symbols in pair_slot order.
  std::uint64_t pattern_of(const Cis& s) const;
  ClassId classify_pattern(std::uint64_t pattern) const;
  /// Number of distinct pair symbols (2 undirected, 4 directed, 3 signed).
  std::uint32_t radix() const;
  /// Pair symbol for a label code; throws UnknownClassError on mode mismatch.
  std::uint32_t symbol_of(std::uint8_t code) const;
  /// radix^slot, for incremental pattern construction.
  std::uint64_t slot_weight(int slot) const;

  std::optional<ClassId> find(const CanonicalCode& code) const;
  ClassInfo info(ClassId id) const;
  std::vector<ClassInfo> classes() const;

 private:
  struct Impl;
  explicit ClassRegistry(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

/// Built-in registry when available; otherwise a dynamic registry and a
/// warning through motifwalk::warn.
std::shared_ptr<const ClassRegistry> build_registry(int k, GraphMode mode);

/// Tab-separated table: class_id, k, mode, canonical code hex, edge list, name.
std::string export_registry_table(const ClassRegistry& registry);

/// Edge list of a class representative on local nodes 0..k-1, e.g. "0-1 1->2".
std::string describe_edges(const Cis& s, GraphMode mode);

/// Small adjacency-matrix drawing of a class representative.
std::string ascii_drawing(const Cis& s, GraphMode mode);

}  // namespace motifwalk

#endif  // MOTIFWALK_CLASS_REGISTRY_HPP_
