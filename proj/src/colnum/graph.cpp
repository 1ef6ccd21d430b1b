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

#include "colnum/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <sstream>

#include "colnum/error.hpp"

namespace colnum {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw_invalid("edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") has a vertex id >= " + std::to_string(n));
    }
    if (u == v) throw_invalid("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw_invalid("duplicate edge (" + std::to_string(dup->first) + "," +
                  std::to_string(dup->second) + ")");
  }
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph Graph::path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Graph(n, e);
}

Graph Graph::cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  if (n >= 3) e.emplace_back(static_cast<Vertex>(n - 1), 0);
  return Graph(n, e);
}

Graph Graph::star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  Edge target{std::min(u, v), std::max(u, v)};
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const auto& e : edges_)
    if (e != target) kept.push_back(e);
  if (kept.size() == edges_.size()) throw_invalid("edge not present");
  return Graph(vertex_count(), kept);
}

namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Parses exactly two non-negative integers from a line.
bool parse_pair(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
  std::istringstream in{std::string(line)};
  std::string x, y, extra;
  if (!(in >> x >> y) || (in >> extra)) return false;
  auto conv = [](const std::string& s, std::uint64_t& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
  };
  return conv(x, a) && conv(y, b);
}

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
  throw_invalid("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    std::uint64_t a = 0, b = 0;
    if (!parse_pair(line, a, b)) {
      fail_at(line_no, have_header ? "expected \"u v\"" : "malformed header, expected \"n m\"");
    }
    if (!have_header) {
      if (a > UINT32_MAX) fail_at(line_no, "vertex count too large");
      n = a;
      m = b;
      have_header = true;
      if (m > n * (n - (n > 0 ? 1 : 0)) / 2) fail_at(line_no, "more edges than a simple graph allows");
      edges.reserve(m);
    } else {
      if (edges.size() == m) fail_at(line_no, "more edge lines than declared");
      if (a >= n || b >= n) fail_at(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
      if (a == b) fail_at(line_no, "self-loop at vertex " + std::to_string(a));
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
      edge_line.push_back(line_no);
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw_invalid("line 1: missing header \"n m\"");
  if (edges.size() != m) {
    throw_invalid("line " + std::to_string(line_no) + ": expected " + std::to_string(m) +
                  " edges, found " + std::to_string(edges.size()));
  }

  // Report the line of the second occurrence of a duplicate.
  std::vector<std::size_t> idx(edges.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto key = [&](std::size_t i) {
    auto [u, v] = edges[i];
    return Edge{std::min(u, v), std::max(u, v)};
  };
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return key(i) < key(j); });
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (key(idx[i]) == key(idx[i - 1])) {
      auto [u, v] = key(idx[i]);
      fail_at(edge_line[idx[i]], "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
  }
  return Graph(n, edges);
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_invalid("cannot open graph file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::vector<std::size_t> bfs_distances(const Graph& g, std::span<const Vertex> sources,
                                       const std::vector<bool>& blocked) {
  std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (!g.contains(s)) throw_invalid("invalid vertex id " + std::to_string(s));
    if ((blocked.empty() || !blocked[s]) && dist[s] == kUnreachable) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] != kUnreachable || (!blocked.empty() && blocked[w])) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  Vertex s[] = {source};
  return bfs_distances(g, s, {});
}

std::optional<std::size_t> distance(const Graph& g, Vertex x, Vertex y) {
  if (!g.contains(x) || !g.contains(y)) throw_invalid("invalid vertex id");
  auto d = bfs_distances(g, x)[y];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

}  // namespace colnum
