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

// Brute-force ground truth for matchings on finite graphs.

#ifndef ENDMATCH_ORACLE_HPP_
#define ENDMATCH_ORACLE_HPP_

#include <cstddef>
#include <variant>
#include <vector>

#include "endmatch/finite_graph.hpp"

namespace endmatch::oracle {

// Largest graph handled by exhaustive search.
inline constexpr std::size_t kExhaustiveLimit = 20;

// Maximum-cardinality matching. Bipartite inputs (forests included) use
// augmenting paths; other inputs fall back to exhaustive search and throw
// InvalidArgument above kExhaustiveLimit vertices.
Matching max_matching(const FiniteGraph& g);

bool has_perfect_matching(const FiniteGraph& g);

// Every perfect matching, in lexicographic order of their sorted pair lists.
// Throws InvalidArgument above `vertex_limit` vertices.
std::vector<Matching> enumerate_perfect_matchings(
    const FiniteGraph& g, std::size_t vertex_limit = kExhaustiveLimit);

struct GreedyFailure {
  Vertex isolated;  // left with no partner
};

// Leaf forcing on a forest: repeatedly match the least degree-one vertex to
// its neighbor and delete both. Fails at the least isolated vertex. Throws
// InvalidArgument on graphs with a cycle.
std::variant<Matching, GreedyFailure> greedy_forest_matching(
    const FiniteGraph& g);

}  // namespace endmatch::oracle

#endif  // ENDMATCH_ORACLE_HPP_
