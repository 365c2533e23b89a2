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

// Closure sets, buffer sets and the sweep step that removes finitely many
// perfectly matched pieces from an automatic tree while keeping degree >= 2
// and the absence of bad rays on what remains.
//
// All operations act on the region X = T \ removed, where `removed` is a
// finite set of tree vertices (empty for the first sweep). A bad path is an
// injective path whose vertices at even positions have degree exactly two in
// the graph under consideration.

#ifndef ENDMATCH_BAIRE_HPP_
#define ENDMATCH_BAIRE_HPP_

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "endmatch/automatic_tree.hpp"

namespace endmatch {

using VertexSet = std::set<TreeVertex>;
using TreePairs = std::vector<std::pair<TreeVertex, TreeVertex>>;

inline constexpr std::size_t kDefaultBaireBudget = 4096;

struct Closure {
  VertexSet s;
  TreePairs matching;  // perfect on s; each pair (smaller, larger)
};

// Starts from x and its first neighbor in X, then repeatedly matches every
// vertex of X \ S adjacent to S whose degree in X is two with its other
// neighbor. Throws BudgetExceeded, reporting the vertices still being added,
// once |S| exceeds budget.
Closure closure(const AutomaticTree& t, const TreeVertex& x,
                const VertexSet& removed = {},
                std::size_t budget = kDefaultBaireBudget);

struct Buffer {
  VertexSet t;
  // Vertices of X \ S within this distance of the boundary belong to t.
  std::size_t radius = 0;
};

// T = S together with the ball of `radius` around the boundary of X \ S,
// where `radius` exceeds the number of vertices of every bad path of
// X \ S starting at a boundary vertex or one of its neighbors. Throws
// BudgetExceeded once the path search visits more than budget vertices.
Buffer buffer(const AutomaticTree& t, const VertexSet& s,
              const VertexSet& removed = {},
              std::size_t budget = kDefaultBaireBudget);

struct ClosurePair {
  TreeVertex seed;
  VertexSet s;
  VertexSet t;
  TreePairs matching;
  std::size_t radius = 0;
};

struct SweepResult {
  std::vector<ClosurePair> kept;       // pairwise disjoint t
  std::vector<TreeVertex> passed_over;  // seeds whose pair was not kept
  TreePairs matching;                  // union of the kept matchings
  VertexSet removed;                   // removed plus every kept s
};

// Computes a closure pair for each seed of X (in path order, duplicates
// dropped) and keeps each whose t misses the t of every pair kept before.
SweepResult sweep_step(const AutomaticTree& t,
                       std::span<const TreeVertex> seeds,
                       const VertexSet& removed = {},
                       std::size_t budget = kDefaultBaireBudget);

struct SweepCheck {
  bool degree_ok = true;
  bool paths_ok = true;
  bool matching_ok = true;
  std::string failure;

  bool ok() const { return degree_ok && paths_ok && matching_ok; }
};

// On the window of the given depth: every vertex left in X has two
// neighbors left; each kept matching is a perfect matching of its s by tree
// edges; and no bad path of X \ s with at most max_points vertices passes
// through both the boundary of X \ s and the boundary of t.
SweepCheck verify_sweep(const AutomaticTree& t, const VertexSet& removed,
                        const SweepResult& result, std::size_t depth,
                        std::size_t max_points = 12);

}  // namespace endmatch

#endif  // ENDMATCH_BAIRE_HPP_
