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

#ifndef ENDMATCH_FINITE_GRAPH_HPP_
#define ENDMATCH_FINITE_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace endmatch {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// A simple undirected graph on vertices 0..vertex_count-1. Edges are stored
// canonically as (a, b) with a < b, sorted and unique; adjacency lists are
// sorted ascending.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  // Throws InvalidArgument on loops or out-of-range endpoints. Duplicate and
  // reversed pairs are normalized.
  FiniteGraph(std::size_t vertex_count, std::span<const Edge> edges);
  FiniteGraph(std::size_t vertex_count, std::initializer_list<Edge> edges)
      : FiniteGraph(vertex_count, std::span<const Edge>(edges.begin(),
                                                        edges.size())) {}

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex a, Vertex b) const;

  // Induced subgraph on `keep` (sorted ascending). Vertex i of the result is
  // keep[i].
  FiniteGraph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const FiniteGraph&, const FiniteGraph&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Named small graphs used throughout tests and examples.
FiniteGraph path_graph(std::size_t n);
FiniteGraph cycle_graph(std::size_t n);
FiniteGraph star_graph(std::size_t leaves);

// Equivalence classes of the relation generated by the edges. Classes are
// sorted internally and ordered by least element.
std::vector<std::vector<Vertex>> components(const FiniteGraph& g);

bool is_acyclic(const FiniteGraph& g);
bool is_bipartite(const FiniteGraph& g);

// A set of pairwise disjoint vertex pairs, canonical (a < b) and sorted.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Edge> pairs);

  const std::vector<Edge>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(const Edge& e) const;
  // Partner of v, if v is covered.
  std::optional<Vertex> partner(Vertex v) const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> pairs_;
};

// True iff the pairs are disjoint and every pair is an edge of g.
bool is_matching_of(const Matching& m, const FiniteGraph& g);
bool is_perfect_matching_of(const Matching& m, const FiniteGraph& g);

}  // namespace endmatch

#endif  // ENDMATCH_FINITE_GRAPH_HPP_
