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

#include "colnum/reach.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "colnum/error.hpp"

namespace colnum {

std::string_view to_string(ReachKind kind) {
  switch (kind) {
    case ReachKind::kWeak: return "weak";
    case ReachKind::kStrong: return "strong";
    case ReachKind::kAdm: return "adm";
  }
  return "?";
}

std::optional<ReachKind> parse_reach_kind(std::string_view s) {
  if (s == "weak" || s == "wcol") return ReachKind::kWeak;
  if (s == "strong" || s == "scol") return ReachKind::kStrong;
  if (s == "adm") return ReachKind::kAdm;
  return std::nullopt;
}

namespace {

void check_inputs(const Graph& g, const Ordering& sigma) {
  if (sigma.size() != g.vertex_count()) {
    throw_invalid("ordering has " + std::to_string(sigma.size()) + " entries, graph has " +
                  std::to_string(g.vertex_count()) + " vertices");
  }
}

void check_vertex(const Graph& g, Vertex x) {
  if (!g.contains(x)) throw_invalid("invalid vertex id " + std::to_string(x));
}

// BFS from `source` over vertices ranked >= min_rank, at most `depth` steps.
// Returns the distance array (kUnreachable outside the explored ball).
std::vector<std::size_t> bounded_bfs(const Graph& g, const Ordering& sigma, Vertex source,
                                     std::size_t min_rank, std::size_t depth) {
  std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (dist[u] == depth) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] != kUnreachable || sigma.rank(w) < min_rank) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::vector<Vertex> strong_set(const Graph& g, const Ordering& sigma, Vertex x, std::size_t len) {
  // Vertices reachable from x through vertices >=_sigma x in <= len-1 steps;
  // their earlier neighbors are exactly the strongly reachable ones.
  const std::size_t rx = sigma.rank(x);
  auto dist = bounded_bfs(g, sigma, x, rx, len - 1);
  std::vector<Vertex> out{x};
  std::vector<bool> taken(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (dist[u] == kUnreachable) continue;
    for (Vertex y : g.neighbors(u)) {
      if (sigma.rank(y) < rx && !taken[y]) {
        taken[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Vertex> weakly_reachable_set(const Graph& g, const Ordering& sigma, Vertex x, Radius r) {
  check_inputs(g, sigma);
  check_vertex(g, x);
  const std::size_t len = r.bound(g.vertex_count());
  std::vector<Vertex> out;
  for (std::size_t ry = 0; ry <= sigma.rank(x); ++ry) {
    Vertex y = sigma.at(ry);
    // distance from x to y inside G[{v : v >=_sigma y}]
    auto dist = bounded_bfs(g, sigma, x, ry, len);
    if (dist[y] != kUnreachable) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> strongly_reachable_set(const Graph& g, const Ordering& sigma, Vertex x, Radius r) {
  check_inputs(g, sigma);
  check_vertex(g, x);
  return strong_set(g, sigma, x, r.bound(g.vertex_count()));
}

std::vector<std::vector<Vertex>> weakly_reachable_sets(const Graph& g, const Ordering& sigma, Radius r) {
  check_inputs(g, sigma);
  const std::size_t n = g.vertex_count();
  const std::size_t len = r.bound(n);
  std::vector<std::vector<Vertex>> sets(n);
  // y lands in W[x] for every x in the radius-len ball of y inside G[{v >=_sigma y}].
  for (Vertex y = 0; y < n; ++y) {
    auto dist = bounded_bfs(g, sigma, y, sigma.rank(y), len);
    for (Vertex x = 0; x < n; ++x)
      if (dist[x] != kUnreachable) sets[x].push_back(y);
  }
  return sets;  // y ascending, so already sorted
}

std::vector<std::vector<Vertex>> strongly_reachable_sets(const Graph& g, const Ordering& sigma, Radius r) {
  check_inputs(g, sigma);
  const std::size_t len = r.bound(g.vertex_count());
  std::vector<std::vector<Vertex>> sets;
  sets.reserve(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) sets.push_back(strong_set(g, sigma, x, len));
  return sets;
}

namespace {

using Mask = std::vector<std::uint64_t>;

struct MaskHash {
  std::size_t operator()(const Mask& m) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : m) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

bool disjoint(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return false;
  return true;
}

bool subset_of(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

class BackPathPacker {
 public:
  BackPathPacker(const Graph& g, Vertex x, std::span<const Side> side, std::size_t max_len,
                 std::size_t budget)
      : g_(g), x_(x), side_(side), max_len_(max_len), budget_(budget) {}

  std::size_t solve() {
    index_vertices();
    enumerate();
    prune_dominated();
    std::size_t groups = groups_.size();
    if (groups <= 1) return groups;
    Mask used(words_, 0);
    // group index is stored in the first word slot of the memo key
    return search(0, used);
  }

 private:
  void index_vertices() {
    local_.assign(g_.vertex_count(), -1);
    // Later vertices within max_len-1 steps of x, plus their earlier neighbors.
    std::vector<std::size_t> dist(g_.vertex_count(), kUnreachable);
    std::deque<Vertex> queue{x_};
    dist[x_] = 0;
    std::size_t count = 0;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g_.neighbors(u)) {
        if (side_[w] == Side::kEarlier) {
          if (local_[w] < 0) local_[w] = static_cast<int>(count++);
        } else if (side_[w] == Side::kLater && dist[w] == kUnreachable && dist[u] + 1 < max_len_) {
          dist[w] = dist[u] + 1;
          local_[w] = static_cast<int>(count++);
          queue.push_back(w);
        }
      }
    }
    words_ = std::max<std::size_t>(1, (count + 63) / 64);
  }

  void enumerate() {
    std::vector<bool> on_path(g_.vertex_count());
    on_path[x_] = true;
    Mask mask(words_, 0);
    std::unordered_map<Vertex, std::size_t> group_of;
    for (Vertex first : g_.neighbors(x_)) {
      if (side_[first] == Side::kAnchor) continue;
      if (side_[first] == Side::kLater && max_len_ < 2) continue;
      current_group_ = groups_.size();
      groups_.emplace_back();
      set_bit(mask, first);
      if (side_[first] == Side::kEarlier) {
        add_candidate(mask);
      } else {
        on_path[first] = true;
        extend(first, 1, mask, on_path);
        on_path[first] = false;
      }
      clear_bit(mask, first);
      if (groups_.back().empty()) groups_.pop_back();
    }
  }

  void extend(Vertex c, std::size_t len, Mask& mask, std::vector<bool>& on_path) {
    for (Vertex w : g_.neighbors(c)) {
      if (on_path[w] || local_[w] < 0) continue;
      if (side_[w] == Side::kEarlier) {
        set_bit(mask, w);
        add_candidate(mask);
        clear_bit(mask, w);
      } else if (side_[w] == Side::kLater && len + 2 <= max_len_) {
        on_path[w] = true;
        set_bit(mask, w);
        extend(w, len + 1, mask, on_path);
        clear_bit(mask, w);
        on_path[w] = false;
      }
    }
  }

  void add_candidate(const Mask& mask) {
    if (++candidates_ > budget_) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "path-packing candidate budget (" + std::to_string(budget_) + ") exceeded at vertex " +
                      std::to_string(x_));
    }
    groups_[current_group_].push_back(mask);
  }

  // Within a group, a path whose vertex set contains another's is never needed.
  void prune_dominated() {
    for (auto& paths : groups_) {
      std::sort(paths.begin(), paths.end());
      paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
      if (paths.size() > 4096) continue;
      auto popcount = [](const Mask& m) {
        std::size_t c = 0;
        for (auto w : m) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
      };
      std::stable_sort(paths.begin(), paths.end(),
                       [&](const Mask& a, const Mask& b) { return popcount(a) < popcount(b); });
      std::vector<Mask> kept;
      for (auto& p : paths) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Mask& q) { return subset_of(q, p); });
        if (!dominated) kept.push_back(std::move(p));
      }
      paths = std::move(kept);
    }
  }

  std::size_t search(std::size_t gi, Mask& used) {
    if (gi == groups_.size()) return 0;
    if (++nodes_ > budget_ * 8) {
      throw Error(ErrorCode::kBudgetExceeded, "path-packing search budget exceeded at vertex " +
                                                  std::to_string(x_));
    }
    Mask key = used;
    key.push_back(gi);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const std::size_t cap = groups_.size() - gi;
    std::size_t best = 0;
    for (const auto& p : groups_[gi]) {
      if (!disjoint(p, used)) continue;
      for (std::size_t i = 0; i < words_; ++i) used[i] |= p[i];
      best = std::max(best, 1 + search(gi + 1, used));
      for (std::size_t i = 0; i < words_; ++i) used[i] &= ~p[i];
      if (best == cap) break;
    }
    if (best < cap) best = std::max(best, search(gi + 1, used));
    memo_.emplace(std::move(key), best);
    return best;
  }

  void set_bit(Mask& m, Vertex v) const {
    auto i = static_cast<std::size_t>(local_[v]);
    m[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  void clear_bit(Mask& m, Vertex v) const {
    auto i = static_cast<std::size_t>(local_[v]);
    m[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  const Graph& g_;
  Vertex x_;
  std::span<const Side> side_;
  std::size_t max_len_;
  std::size_t budget_;
  std::vector<int> local_;
  std::size_t words_ = 1;
  std::vector<std::vector<Mask>> groups_;  // candidate paths grouped by first vertex
  std::size_t current_group_ = 0;
  std::size_t candidates_ = 0;
  std::size_t nodes_ = 0;
  std::unordered_map<Mask, std::size_t, MaskHash> memo_;
};

}  // namespace

std::size_t max_disjoint_back_paths(const Graph& g, Vertex x, std::span<const Side> side,
                                    std::size_t max_len, std::size_t budget) {
  check_vertex(g, x);
  if (side.size() != g.vertex_count()) throw_invalid("side array does not match the graph");
  if (max_len == 0) return 0;
  return BackPathPacker(g, x, side, max_len, budget).solve();
}

std::size_t back_connectivity(const Graph& g, const Ordering& sigma, Vertex x, Radius r,
                              std::size_t budget) {
  check_inputs(g, sigma);
  check_vertex(g, x);
  std::vector<Side> side(g.vertex_count());
  const std::size_t rx = sigma.rank(x);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto rv = sigma.rank(v);
    side[v] = rv < rx ? Side::kEarlier : (rv == rx ? Side::kAnchor : Side::kLater);
  }
  return max_disjoint_back_paths(g, x, side, r.bound(g.vertex_count()), budget);
}

namespace {

ReachReport make_report(ReachKind kind, Radius r, std::vector<std::size_t> sizes) {
  ReachReport rep;
  rep.kind = kind;
  rep.radius = r;
  rep.value = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
  rep.per_vertex = std::move(sizes);
  return rep;
}

}  // namespace

ReachReport wcol_of_ordering(const Graph& g, const Ordering& sigma, Radius r) {
  std::vector<std::size_t> sizes;
  for (const auto& s : weakly_reachable_sets(g, sigma, r)) sizes.push_back(s.size());
  return make_report(ReachKind::kWeak, r, std::move(sizes));
}

ReachReport scol_of_ordering(const Graph& g, const Ordering& sigma, Radius r) {
  std::vector<std::size_t> sizes;
  for (const auto& s : strongly_reachable_sets(g, sigma, r)) sizes.push_back(s.size());
  return make_report(ReachKind::kStrong, r, std::move(sizes));
}

ReachReport adm_of_ordering(const Graph& g, const Ordering& sigma, Radius r, std::size_t budget) {
  check_inputs(g, sigma);
  std::vector<std::size_t> sizes(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) sizes[x] = back_connectivity(g, sigma, x, r, budget) + 1;
  return make_report(ReachKind::kAdm, r, std::move(sizes));
}

ReachReport evaluate_ordering(const Graph& g, const Ordering& sigma, Radius r, ReachKind kind,
                              std::size_t budget) {
  switch (kind) {
    case ReachKind::kWeak: return wcol_of_ordering(g, sigma, r);
    case ReachKind::kStrong: return scol_of_ordering(g, sigma, r);
    case ReachKind::kAdm: return adm_of_ordering(g, sigma, r, budget);
  }
  throw_invalid("unknown kind");
}

}  // namespace colnum
