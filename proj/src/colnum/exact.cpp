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

#include "colnum/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <set>
#include <string>
#include <unordered_map>

#include "colnum/error.hpp"

namespace colnum {

namespace {

using Bits = std::uint64_t;

constexpr Bits bit(std::size_t v) { return Bits{1} << v; }

// Subset tables for the oracles are 2^n bytes.
constexpr std::size_t kMaxOracleVertices = 26;

void check_cap(const Graph& g, std::size_t cap, std::size_t hard_limit, const char* what) {
  std::size_t n = g.vertex_count();
  if (n > cap || n > hard_limit) {
    throw Error(ErrorCode::kCapExceeded,
                std::string(what) + ": graph has " + std::to_string(n) + " vertices, cap is " +
                    std::to_string(std::min(cap, hard_limit)) +
                    " (raise the cap or use a heuristic ordering such as degeneracy)");
  }
}

struct BitGraph {
  explicit BitGraph(const Graph& g) : n(g.vertex_count()), adj(n, 0) {
    for (auto [u, v] : g.edges()) {
      adj[u] |= bit(v);
      adj[v] |= bit(u);
    }
    all = n == 64 ? ~Bits{0} : bit(n) - 1;
  }

  Bits neighborhood(Bits s) const {
    Bits out = 0;
    while (s) {
      out |= adj[static_cast<std::size_t>(std::countr_zero(s))];
      s &= s - 1;
    }
    return out;
  }

  // Vertices within `depth` steps of src, moving only through `allowed`.
  Bits ball(std::size_t src, Bits allowed, std::size_t depth) const {
    Bits reach = bit(src), frontier = reach;
    for (std::size_t d = 0; d < depth && frontier; ++d) {
      frontier = neighborhood(frontier) & allowed & ~reach;
      reach |= frontier;
    }
    return reach;
  }

  std::size_t n;
  std::vector<Bits> adj;
  Bits all = 0;
};

class OrderingSearch {
 public:
  OrderingSearch(const Graph& g, Radius r, ReachKind kind, const ExactOptions& options)
      : g_(g), bg_(g), n_(g.vertex_count()), len_(r.bound(g.vertex_count())), kind_(kind),
        options_(options), prefix_(n_) {}

  ExactResult run(Radius r) {
    ExactResult res;
    res.kind = kind_;
    res.radius = r;
    if (n_ == 0) return res;

    if (options_.prune) {
      Ordering degen = degeneracy_ordering(g_);
      lower_bound_ = coloring_number(degen);
      for (const auto& seq : {degen.sequence(), Ordering::identity(n_).sequence()}) {
        std::size_t v = evaluate_sequence(seq);
        ++explored_;
        if (v < best_) {
          best_ = v;
          best_seq_ = seq;
        }
      }
    }
    if (best_ > lower_bound_) {
      if (kind_ == ReachKind::kWeak) {
        std::array<std::uint8_t, kMaxExactVertices> counters{};
        search_weak(0, 0, counters, 0);
      } else {
        search_set_determined(0, 0, 0);
      }
    }
    res.value = best_;
    res.witness = Ordering(best_seq_);
    res.explored = explored_;
    return res;
  }

 private:
  std::size_t coloring_number(const Ordering& sigma) const {
    std::size_t best = 0;
    for (Vertex v = 0; v < n_; ++v) {
      std::size_t back = 0;
      for (Vertex w : g_.neighbors(v)) back += sigma.before(w, v);
      best = std::max(best, back + 1);
    }
    return best;
  }

  // |S_r[x]| or b_r[x]+1 when x is placed right after the set `placed`.
  std::size_t placement_value(std::size_t x, Bits placed) const {
    if (kind_ == ReachKind::kStrong) {
      Bits inner = bg_.ball(x, ~placed, len_ - 1);
      return 1 + static_cast<std::size_t>(std::popcount(bg_.neighborhood(inner) & placed));
    }
    std::vector<Side> side(n_, Side::kLater);
    for (std::size_t v = 0; v < n_; ++v)
      if (placed & bit(v)) side[v] = Side::kEarlier;
    side[x] = Side::kAnchor;
    return 1 + max_disjoint_back_paths(g_, static_cast<Vertex>(x), side, len_, options_.path_budget);
  }

  std::size_t evaluate_sequence(const std::vector<Vertex>& seq) const {
    std::size_t m = 0;
    Bits placed = 0;
    std::array<std::uint8_t, kMaxExactVertices> counters{};
    for (Vertex x : seq) {
      if (kind_ == ReachKind::kWeak) {
        Bits b = bg_.ball(x, ~placed, len_);
        for (Bits s = b; s; s &= s - 1) ++counters[static_cast<std::size_t>(std::countr_zero(s))];
        m = std::max<std::size_t>(m, counters[x]);
      } else {
        m = std::max(m, placement_value(x, placed));
      }
      placed |= bit(x);
    }
    return m;
  }

  void record_leaf(std::size_t m) {
    ++explored_;
    if (m < best_) {
      best_ = m;
      best_seq_.assign(prefix_.begin(), prefix_.end());
    }
  }

  bool finished() const { return options_.prune && best_ <= lower_bound_; }

  // Strong and adm values depend only on the set of earlier vertices, so the
  // best partial maximum seen per placed set is a sound transposition table.
  void search_set_determined(Bits placed, std::size_t depth, std::size_t m) {
    if (depth == n_) return record_leaf(m);
    if (options_.prune) {
      auto [it, inserted] = set_memo_.try_emplace(placed, m);
      if (!inserted) {
        if (it->second <= m) return;
        it->second = m;
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> children;
    for (std::size_t v = 0; v < n_; ++v) {
      if (placed & bit(v)) continue;
      std::size_t val = std::max(m, placement_value(v, placed));
      if (options_.prune && val >= best_) continue;
      children.emplace_back(val, v);
    }
    if (options_.prune) std::sort(children.begin(), children.end());
    for (auto [val, v] : children) {
      if (options_.prune && val >= best_) break;
      prefix_[depth] = static_cast<Vertex>(v);
      search_set_determined(placed | bit(v), depth + 1, val);
      if (finished()) return;
    }
  }

  using Counters = std::array<std::uint8_t, kMaxExactVertices>;

  // counters[v] = number of placed y with v in the weak ball of y. For placed
  // v this is final |W_r[v]|; for unplaced v it is a lower bound.
  void search_weak(Bits placed, std::size_t depth, const Counters& counters, std::size_t m) {
    if (depth == n_) return record_leaf(m);
    if (options_.prune && weak_memo_.size() < kWeakMemoLimit) {
      std::string key(reinterpret_cast<const char*>(&placed), sizeof placed);
      for (std::size_t v = 0; v < n_; ++v)
        if (!(placed & bit(v))) key.push_back(static_cast<char>(counters[v]));
      auto [it, inserted] = weak_memo_.try_emplace(std::move(key), m);
      if (!inserted) {
        if (it->second <= m) return;
        it->second = m;
      }
    }
    struct Child {
      std::size_t val;
      std::size_t v;
      Bits ball;
    };
    std::vector<Child> children;
    for (std::size_t y = 0; y < n_; ++y) {
      if (placed & bit(y)) continue;
      Bits b = bg_.ball(y, ~placed, len_);
      std::size_t val = m;
      for (Bits s = b; s; s &= s - 1)
        val = std::max<std::size_t>(val, counters[static_cast<std::size_t>(std::countr_zero(s))] + 1u);
      if (options_.prune && val >= best_) continue;
      children.push_back({val, y, b});
    }
    if (options_.prune) {
      std::sort(children.begin(), children.end(),
                [](const Child& a, const Child& b) { return a.val != b.val ? a.val < b.val : a.v < b.v; });
    }
    for (const auto& c : children) {
      if (options_.prune && c.val >= best_) break;
      Counters next = counters;
      for (Bits s = c.ball; s; s &= s - 1) ++next[static_cast<std::size_t>(std::countr_zero(s))];
      prefix_[depth] = static_cast<Vertex>(c.v);
      search_weak(placed | bit(c.v), depth + 1, next, c.val);
      if (finished()) return;
    }
  }

  static constexpr std::size_t kWeakMemoLimit = 2'000'000;

  const Graph& g_;
  BitGraph bg_;
  std::size_t n_;
  std::size_t len_;
  ReachKind kind_;
  ExactOptions options_;
  std::vector<Vertex> prefix_;
  std::vector<Vertex> best_seq_;
  std::size_t best_ = std::numeric_limits<std::size_t>::max();
  std::size_t lower_bound_ = 0;
  std::uint64_t explored_ = 0;
  std::unordered_map<Bits, std::size_t> set_memo_;
  std::unordered_map<std::string, std::size_t> weak_memo_;
};

}  // namespace

ExactResult exact_min(const Graph& g, Radius r, ReachKind kind, const ExactOptions& options) {
  check_cap(g, options.cap, kMaxExactVertices, "exact search");
  return OrderingSearch(g, r, kind, options).run(r);
}

std::size_t treewidth_oracle(const Graph& g, std::size_t cap) {
  check_cap(g, cap, kMaxOracleVertices, "treewidth oracle");
  const BitGraph bg(g);
  const std::size_t n = bg.n;
  if (n == 0) return 0;
  // width[S] = best max elimination degree when exactly S is eliminated first
  std::vector<std::uint8_t> width(std::size_t{1} << n, 0);
  for (Bits s = 1; s <= bg.all; ++s) {
    std::uint8_t best = std::numeric_limits<std::uint8_t>::max();
    for (Bits rest = s; rest; rest &= rest - 1) {
      auto v = static_cast<std::size_t>(std::countr_zero(rest));
      Bits before = s & ~bit(v);
      // v's neighbours after eliminating `before`: vertices outside s joined
      // to v through eliminated vertices (the fill-in edges)
      Bits comp = bg.ball(v, s, n);
      auto degree = static_cast<std::uint8_t>(std::popcount(bg.neighborhood(comp) & ~s));
      best = std::min(best, std::max(width[before], degree));
    }
    width[s] = best;
    if (s == bg.all) break;
  }
  return width[bg.all];
}

std::size_t treedepth_oracle(const Graph& g, std::size_t cap) {
  check_cap(g, cap, kMaxOracleVertices, "treedepth oracle");
  const BitGraph bg(g);
  const std::size_t n = bg.n;
  if (n == 0) return 0;
  std::vector<std::uint8_t> depth(std::size_t{1} << n, 0);
  for (Bits s = 1; s <= bg.all; ++s) {
    auto first = static_cast<std::size_t>(std::countr_zero(s));
    Bits comp = bg.ball(first, s, n);
    if (comp != s) {
      // disconnected: max over components; each component is < s numerically
      std::uint8_t best = depth[comp];
      for (Bits rest = s & ~comp; rest;) {
        Bits c = bg.ball(static_cast<std::size_t>(std::countr_zero(rest)), s, n);
        best = std::max(best, depth[c]);
        rest &= ~c;
      }
      depth[s] = best;
    } else if (std::popcount(s) == 1) {
      depth[s] = 1;
    } else {
      std::uint8_t best = std::numeric_limits<std::uint8_t>::max();
      for (Bits rest = s; rest; rest &= rest - 1)
        best = std::min(best, depth[s & ~bit(static_cast<std::size_t>(std::countr_zero(rest)))]);
      depth[s] = static_cast<std::uint8_t>(best + 1);
    }
    if (s == bg.all) break;
  }
  return depth[bg.all];
}

Ordering degeneracy_ordering(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<bool> removed(n);
  std::vector<Vertex> seq(n);
  for (std::size_t slot = n; slot-- > 0;) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    seq[slot] = v;
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  return Ordering(std::move(seq));
}

}  // namespace colnum
