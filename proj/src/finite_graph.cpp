// Copyright 2026 The Endmatch Authors.
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

#include "endmatch/finite_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "endmatch/error.hpp"

namespace endmatch {

FiniteGraph::FiniteGraph(std::size_t vertex_count,
                         std::span<const Edge> edges)
    : adjacency_(vertex_count) {
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) {
      throw InvalidArgument("edge (" + std::to_string(a) + ", " +
                            std::to_string(b) + ") out of range for " +
                            std::to_string(vertex_count) + " vertices");
    }
    if (a == b) {
      throw InvalidArgument("loop at vertex " + std::to_string(a));
    }
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::span<const Vertex> FiniteGraph::neighbors(Vertex v) const {
  if (v >= adjacency_.size()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  }
  return adjacency_[v];
}

bool FiniteGraph::has_edge(Vertex a, Vertex b) const {
  if (a >= adjacency_.size() || b >= adjacency_.size()) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

FiniteGraph FiniteGraph::induced(std::span<const Vertex> keep) const {
  std::vector<std::size_t> index(vertex_count(), vertex_count());
  for (std::size_t i = 0; i < keep.size(); ++i) index.at(keep[i]) = i;
  std::vector<Edge> kept;
  for (auto [a, b] : edges_) {
    if (index[a] != vertex_count() && index[b] != vertex_count()) {
      kept.emplace_back(index[a], index[b]);
    }
  }
  return FiniteGraph(keep.size(), kept);
}

FiniteGraph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return FiniteGraph(n, e);
}

FiniteGraph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return FiniteGraph(n, e);
}

FiniteGraph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return FiniteGraph(leaves + 1, e);
}

std::vector<std::vector<Vertex>> components(const FiniteGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> cls;
    std::queue<Vertex> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      cls.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

bool is_acyclic(const FiniteGraph& g) {
  // A graph is a forest iff |E| = |V| - #components.
  return g.edge_count() + components(g).size() == g.vertex_count();
}

bool is_bipartite(const FiniteGraph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Matching::Matching(std::vector<Edge> pairs) : pairs_(std::move(pairs)) {
  for (auto& [a, b] : pairs_) {
    if (a == b) throw InvalidArgument("matching pair with equal endpoints");
    if (a > b) std::swap(a, b);
  }
  std::sort(pairs_.begin(), pairs_.end());
  std::vector<Vertex> ends;
  ends.reserve(2 * pairs_.size());
  for (auto [a, b] : pairs_) {
    ends.push_back(a);
    ends.push_back(b);
  }
  std::sort(ends.begin(), ends.end());
  if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) {
    throw InvalidArgument("matching pairs are not disjoint");
  }
}

bool Matching::contains(const Edge& e) const {
  Edge c{std::min(e.first, e.second), std::max(e.first, e.second)};
  return std::binary_search(pairs_.begin(), pairs_.end(), c);
}

std::optional<Vertex> Matching::partner(Vertex v) const {
  for (auto [a, b] : pairs_) {
    if (a == v) return b;
    if (b == v) return a;
  }
  return std::nullopt;
}

bool is_matching_of(const Matching& m, const FiniteGraph& g) {
  return std::all_of(m.pairs().begin(), m.pairs().end(),
                     [&](const Edge& e) { return g.has_edge(e.first, e.second); });
}

bool is_perfect_matching_of(const Matching& m, const FiniteGraph& g) {
  return is_matching_of(m, g) && 2 * m.size() == g.vertex_count();
}

}  // namespace endmatch
