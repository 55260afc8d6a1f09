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


#include "motifwalk/canonical.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

namespace motifwalk {

CanonicalCode CanonicalCode::from_bytes(int k, std::span<const std::uint8_t> bytes) {
  if (k < 1 || k > kMaxCisSize || bytes.size() != static_cast<std::size_t>(k * (k - 1) / 2)) {
    throw std::invalid_argument(fmt::format("code of {} bytes does not fit k={}", bytes.size(), k));
  }
  CanonicalCode c;
  c.k_ = static_cast<std::uint8_t>(k);
  std::copy(bytes.begin(), bytes.end(), c.bytes_.begin());
  return c;
}

CanonicalCode CanonicalCode::from_hex(int k, const std::string& hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex code");
  std::array<std::uint8_t, kMaxCisPairs> raw{};
  const std::size_t n = hex.size() / 2;
  if (n > raw.size()) throw std::invalid_argument("hex code too long");
  for (std::size_t i = 0; i < n; ++i) {
    raw[i] = static_cast<std::uint8_t>(std::stoi(hex.substr(2 * i, 2), nullptr, 16));
  }
  return from_bytes(k, {raw.data(), n});
}

std::string CanonicalCode::hex() const {
  std::string out;
  for (const std::uint8_t b : bytes()) out += fmt::format("{:02x}", b);
  return out;
}

Cis CanonicalCode::to_cis() const {
  std::array<NodeId, kMaxCisSize> ids{};
  std::iota(ids.begin(), ids.end(), NodeId{0});
  Cis s = Cis::with_nodes({ids.data(), static_cast<std::size_t>(k_)});
  std::size_t pos = 0;
  for (int i = 0; i < k_; ++i) {
    for (int j = i + 1; j < k_; ++j) {
      if (bytes_[pos] != 0) s.set_code(i, j, bytes_[pos]);
      ++pos;
    }
  }
  return s;
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(c.k());
  for (const std::uint8_t b : c.bytes()) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

CanonicalCode canonical_code(const Cis& s) {
  const int k = s.size();
  const int pairs = k * (k - 1) / 2;
  std::array<int, kMaxCisSize> perm{};
  std::iota(perm.begin(), perm.begin() + k, 0);
  std::array<std::uint8_t, kMaxCisPairs> best{};
  std::array<std::uint8_t, kMaxCisPairs> current{};
  bool have_best = false;
  do {
    // Build row-major, abandoning the permutation once it exceeds the best.
    int pos = 0;
    bool smaller = !have_best;
    bool abandoned = false;
    for (int i = 0; i < k && !abandoned; ++i) {
      for (int j = i + 1; j < k; ++j) {
        const std::uint8_t c = s.code(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
        current[static_cast<std::size_t>(pos)] = c;
        if (!smaller) {
          if (c < best[static_cast<std::size_t>(pos)]) {
            smaller = true;
          } else if (c > best[static_cast<std::size_t>(pos)]) {
            abandoned = true;
            break;
          }
        }
        ++pos;
      }
    }
    if (!abandoned && smaller) {
      std::copy(current.begin(), current.begin() + pairs, best.begin());
      have_best = true;
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + k));
  return CanonicalCode::from_bytes(k, {best.data(), static_cast<std::size_t>(pairs)});
}

}  // namespace motifwalk
