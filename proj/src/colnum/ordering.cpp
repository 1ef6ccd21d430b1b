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

#include "colnum/ordering.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "colnum/error.hpp"

namespace colnum {

Ordering::Ordering(std::vector<Vertex> sequence)
    : sequence_(std::move(sequence)), rank_(sequence_.size(), kUnreachable) {
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    Vertex v = sequence_[i];
    if (v >= sequence_.size()) {
      throw_invalid("ordering entry " + std::to_string(v) + " out of range [0, " +
                    std::to_string(sequence_.size()) + ")");
    }
    if (rank_[v] != kUnreachable) throw_invalid("ordering repeats vertex " + std::to_string(v));
    rank_[v] = i;
  }
}

Ordering Ordering::identity(std::size_t n) {
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), Vertex{0});
  return Ordering(std::move(seq));
}

Vertex Ordering::min_of(std::span<const Vertex> vs) const {
  return *std::min_element(vs.begin(), vs.end(),
                           [&](Vertex a, Vertex b) { return rank_[a] < rank_[b]; });
}

std::vector<Vertex> InducedOrdering::original_sequence() const {
  std::vector<Vertex> out;
  out.reserve(order.size());
  for (Vertex local : order.sequence()) out.push_back(to_original[local]);
  return out;
}

InducedOrdering induced_ordering(const Ordering& sigma, std::span<const Vertex> subset) {
  if (subset.empty()) throw_invalid("induced ordering of an empty set");
  std::vector<Vertex> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw_invalid("subset repeats a vertex");
  if (members.back() >= sigma.size())
    throw_invalid("subset contains unknown vertex " + std::to_string(members.back()));

  std::vector<Vertex> local(members.size());
  std::iota(local.begin(), local.end(), Vertex{0});
  std::sort(local.begin(), local.end(),
            [&](Vertex a, Vertex b) { return sigma.before(members[a], members[b]); });
  return InducedOrdering{Ordering(std::move(local)), std::move(members)};
}

Ordering parse_ordering(std::string_view text, std::size_t n) {
  std::vector<Vertex> seq;
  seq.reserve(n);
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw_invalid("ordering: \"" + tok + "\" is not a vertex id");
    if (v >= n) throw_invalid("ordering: id " + tok + " out of range [0, " + std::to_string(n) + ")");
    seq.push_back(static_cast<Vertex>(v));
  }
  if (seq.size() != n) {
    // Distinguish a short list from a repeated id for a clearer message.
    std::vector<bool> seen(n);
    for (Vertex v : seq) {
      if (seen[v]) throw_invalid("ordering: repeated id " + std::to_string(v));
      seen[v] = true;
    }
    throw_invalid("ordering: expected " + std::to_string(n) + " ids, found " +
                  std::to_string(seq.size()));
  }
  return Ordering(std::move(seq));
}

std::string serialize_ordering(const Ordering& sigma) {
  std::string out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(sigma.at(i));
  }
  out += '\n';
  return out;
}

Ordering read_ordering_file(const std::string& path, std::size_t n) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_invalid("cannot open ordering file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_ordering(buf.str(), n);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

}  // namespace colnum
