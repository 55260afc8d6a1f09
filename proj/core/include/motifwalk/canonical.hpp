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


#ifndef MOTIFWALK_CANONICAL_HPP_
#define MOTIFWALK_CANONICAL_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>

#include "motifwalk/cis.hpp"

namespace motifwalk {

/// Lexicographically minimal labeled adjacency matrix of a subgraph over all
/// node permutations: the upper triangle, row-major, one label code byte per
/// pair (0 = no edge). Equal codes <=> label-respecting isomorphism.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  static CanonicalCode from_bytes(int k, std::span<const std::uint8_t> bytes);
  static CanonicalCode from_hex(int k, const std::string& hex);

  int k() const { return k_; }
  std::span<const std::uint8_t> bytes() const {
    return {bytes_.data(), static_cast<std::size_t>(k_ * (k_ - 1) / 2)};
  }
  std::string hex() const;
  /// Graph on nodes 0..k-1 whose adjacency matrix is this code.
  Cis to_cis() const;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::uint8_t k_ = 0;
  std::array<std::uint8_t, kMaxCisPairs> bytes_{};
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const;
};

/// Exhaustive over k! permutations; direction labels are reversed whenever a
/// permutation swaps the order of a pair.
CanonicalCode canonical_code(const Cis& s);

}  // namespace motifwalk

#endif  // MOTIFWALK_CANONICAL_HPP_
