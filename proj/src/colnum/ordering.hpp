// Copyright 2026 The colnum Authors
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

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colnum/graph.hpp"

namespace colnum {

/// Total order on [0, n). Rank 0 is the earliest (sigma-smallest) vertex.
class Ordering {
 public:
  Ordering() = default;

  /// `sequence` lists vertices earliest first; must be a permutation of
  /// [0, sequence.size()).
  explicit Ordering(std::vector<Vertex> sequence);

  static Ordering identity(std::size_t n);

  std::size_t size() const noexcept { return sequence_.size(); }
  Vertex at(std::size_t rank) const { return sequence_[rank]; }
  std::size_t rank(Vertex v) const { return rank_[v]; }
  const std::vector<Vertex>& sequence() const noexcept { return sequence_; }
  const std::vector<std::size_t>& ranks() const noexcept { return rank_; }

  bool before(Vertex a, Vertex b) const { return rank_[a] < rank_[b]; }

  /// Earliest vertex of a nonempty set.
  Vertex min_of(std::span<const Vertex> vs) const;

  friend bool operator==(const Ordering& a, const Ordering& b) {
    return a.sequence_ == b.sequence_;
  }

 private:
  std::vector<Vertex> sequence_;
  std::vector<std::size_t> rank_;
};

/// Restriction of an ordering to a vertex subset. Subset members are
/// relabeled 0..|S|-1 in increasing id order; `to_original` records the
/// bijection.
struct InducedOrdering {
  Ordering order;
  std::vector<Vertex> to_original;

  /// The restricted order expressed in the original vertex ids.
  std::vector<Vertex> original_sequence() const;
};

InducedOrdering induced_ordering(const Ordering& sigma, std::span<const Vertex> subset);

/// Whitespace-separated permutation of [0, n), earliest first.
Ordering parse_ordering(std::string_view text, std::size_t n);
std::string serialize_ordering(const Ordering& sigma);
Ordering read_ordering_file(const std::string& path, std::size_t n);

}  // namespace colnum
