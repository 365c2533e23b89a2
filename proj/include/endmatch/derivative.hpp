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

// The degree derivative: peel off vertices of degree at most one together
// with their forced partners until the remaining core has degree >= 2.
//
// Stage sets follow X^0 = V,
//   X^{2n+1} = { x in X^{2n} : deg in G|X^{2n} >= 2 },
//   X^{2n+2} = X^{2n+1} minus the vertices adjacent to X^{2n} \ X^{2n+1},
// and every x in X^{2n} \ X^{2n+1} is forced onto its unique neighbor in
// X^{2n}. Any matching covering V \ core agrees with the forced pairs there.

#ifndef ENDMATCH_DERIVATIVE_HPP_
#define ENDMATCH_DERIVATIVE_HPP_

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "endmatch/automatic_tree.hpp"
#include "endmatch/finite_graph.hpp"

namespace endmatch {

struct DerivativeResult {
  std::vector<Vertex> core;  // sorted
  Matching forced;           // covers exactly V \ core
  // X^0, X^1, X^2, ... as sorted vertex lists, ending at the fixed point.
  std::vector<std::vector<Vertex>> trace;
  bool stabilized = true;
};

struct DerivativeConflict {
  enum class Kind {
    kIsolated,   // `vertex` has degree 0 in G|X^{2n}
    kContested,  // `claimants` all have `vertex` as their unique neighbor
  };
  Kind kind = Kind::kIsolated;
  Vertex vertex = 0;
  std::vector<Vertex> claimants;  // sorted; empty for kIsolated
  std::size_t stage = 0;          // index into trace of the set X^{2n}
  std::vector<std::vector<Vertex>> trace;
};

using DerivativeOutcome = std::variant<DerivativeResult, DerivativeConflict>;

DerivativeOutcome derive(const FiniteGraph& g);

// Re-checks a conflict against g and its own trace.
bool conflict_is_witnessed(const FiniteGraph& g, const DerivativeConflict& c);

// The same iteration on window(t, depth), with vertices at the window's
// bottom level keeping their children outside the window as neighbors that
// are never removed. A bottom vertex whose only remaining neighbor lies
// outside is forced onto that child, so `forced` may reach depth + 1.
struct WindowDerivative {
  TreeWindow window;
  std::vector<TreeVertex> core;  // path order
  std::vector<std::pair<TreeVertex, TreeVertex>> forced;
  std::optional<DerivativeConflict> conflict;  // in window vertex ids
  std::size_t rounds = 0;
  bool stabilized = true;
};

inline constexpr std::size_t kDefaultDerivativeRounds = 1024;

WindowDerivative derive_window(const AutomaticTree& t, std::size_t depth,
                               std::size_t max_rounds = kDefaultDerivativeRounds,
                               std::size_t vertex_budget = kDefaultWindowBudget);

}  // namespace endmatch

#endif  // ENDMATCH_DERIVATIVE_HPP_
