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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace colnum {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on the dense vertex range [0, n).
///
/// Neighbor lists are sorted; the edge list holds each edge once with
/// `first < second`, sorted lexicographically. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Throws `Error(kInvalidInput)` on self-loops, duplicate edges or ids >= n.
  Graph(std::size_t n, std::span<const Edge> edges);

  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph star(std::size_t leaves);  // center is vertex 0

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v < adjacency_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Copy with one edge removed; the edge must exist.
  Graph without_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

/// Distance radius: a positive integer or infinity.
class Radius {
 public:
  constexpr explicit Radius(unsigned value) : value_(value) {}
  static constexpr Radius infinity() { return Radius(); }

  constexpr bool is_infinite() const noexcept { return value_ == 0; }
  constexpr unsigned value() const noexcept { return value_; }

  /// Length bound to use on a graph with n vertices. Simple paths have at
  /// most n-1 edges, so infinity becomes n.
  constexpr std::size_t bound(std::size_t n) const noexcept {
    return is_infinite() ? (n == 0 ? 1 : n) : value_;
  }

  std::string to_string() const {
    return is_infinite() ? "inf" : std::to_string(value_);
  }

  friend constexpr bool operator==(Radius, Radius) = default;

 private:
  constexpr Radius() : value_(0) {}
  unsigned value_;
};

/// Parses the edge-list format: a header line "n m", then m lines "u v".
/// Lines starting with '#' and blank lines are skipped. Errors carry the
/// 1-based line number.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph; edges are written in sorted order.
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);

/// Breadth-first distance, or nullopt when x and y lie in different
/// components.
std::optional<std::size_t> distance(const Graph& g, Vertex x, Vertex y);

/// Distances from `source` to every vertex; unreachable vertices hold
/// kUnreachable.
inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

/// Multi-source BFS that never enters vertices with `blocked[v]` set.
std::vector<std::size_t> bfs_distances(const Graph& g,
                                       std::span<const Vertex> sources,
                                       const std::vector<bool>& blocked);

}  // namespace colnum
