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

// Rooted, locally finite, possibly infinite trees presented by a finite-state
// branching machine, together with their vertices, end descriptors and the
// decidable structural queries on them.

#ifndef ENDMATCH_AUTOMATIC_TREE_HPP_
#define ENDMATCH_AUTOMATIC_TREE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "endmatch/finite_graph.hpp"

namespace endmatch {

using ChildIndex = std::uint32_t;
using State = std::size_t;

// A vertex of an automatic tree: the sequence of child indices leading to it
// from the root. Ordered by depth first, then lexicographically ("path
// order"), which is breadth-first order.
class TreeVertex {
 public:
  TreeVertex() = default;
  explicit TreeVertex(std::vector<ChildIndex> path) : path_(std::move(path)) {}
  TreeVertex(std::initializer_list<ChildIndex> path) : path_(path) {}

  const std::vector<ChildIndex>& path() const { return path_; }
  std::size_t depth() const { return path_.size(); }
  bool is_root() const { return path_.empty(); }
  ChildIndex operator[](std::size_t i) const { return path_[i]; }
  ChildIndex last() const { return path_.back(); }

  TreeVertex parent() const;
  TreeVertex child(ChildIndex i) const;
  TreeVertex prefix(std::size_t length) const;
  bool is_prefix_of(const TreeVertex& other) const;

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
  friend std::strong_ordering operator<=>(const TreeVertex& a,
                                          const TreeVertex& b);

 private:
  std::vector<ChildIndex> path_;
};

// Length of the longest common prefix.
std::size_t common_prefix_length(const TreeVertex& a, const TreeVertex& b);

// "/" for the root, "/0/1" for <0,1>.
std::string to_string(const TreeVertex& v);

struct TreeVertexHash {
  std::size_t operator()(const TreeVertex& v) const noexcept;
};

class AutomaticTree {
 public:
  struct StateSpec {
    std::string name;
    std::size_t branch = 0;
    std::vector<State> step;  // step[i] is the state of child i
  };

  // Validates that every step table has exactly `branch` entries pointing to
  // declared states and that every state is reachable from `root`.
  AutomaticTree(std::vector<StateSpec> states, State root);

  std::size_t state_count() const { return states_.size(); }
  State root_state() const { return root_; }
  const std::string& state_name(State q) const { return states_.at(q).name; }
  std::size_t branch(State q) const { return states_.at(q).branch; }
  State step(State q, ChildIndex i) const;
  const std::vector<StateSpec>& states() const { return states_; }

  bool is_valid(const TreeVertex& v) const;
  // Throws InvalidArgument for invalid vertices.
  State state_of(const TreeVertex& v) const;
  // States met along the path, one per prefix (size depth+1).
  std::vector<State> states_along(const TreeVertex& v) const;

  std::size_t degree(const TreeVertex& v) const;
  std::size_t state_degree(State q, bool at_root) const {
    return branch(q) + (at_root ? 0 : 1);
  }
  std::size_t child_count(const TreeVertex& v) const {
    return branch(state_of(v));
  }
  // Children by ascending index, then the parent (if any).
  std::vector<TreeVertex> neighbors(const TreeVertex& v) const;
  bool adjacent(const TreeVertex& a, const TreeVertex& b) const;

  // States carried by some non-root vertex, in breadth-first discovery order,
  // each with the shortest (path-order least) vertex carrying it.
  std::vector<std::pair<State, TreeVertex>> non_root_states() const;

  // Least degree over all vertices.
  std::size_t min_degree() const;
  // Least branch over all reachable states.
  std::size_t min_branch() const;

 private:
  std::vector<StateSpec> states_;
  State root_ = 0;
};

std::size_t degree(const FiniteGraph& g, Vertex v);
std::size_t degree(const AutomaticTree& t, const TreeVertex& v);

// |u| + |v| - 2 * |longest common prefix|.
std::size_t tree_distance(const AutomaticTree& t, const TreeVertex& u,
                          const TreeVertex& v);

inline constexpr std::size_t kDefaultWindowBudget = std::size_t{1} << 21;

// The induced subgraph on all vertices of depth <= depth. Vertex i of `graph`
// is labels[i]; labels are in path order.
struct TreeWindow {
  std::size_t depth = 0;
  FiniteGraph graph;
  std::vector<TreeVertex> labels;
  std::map<TreeVertex, Vertex> index;

  std::optional<Vertex> find(const TreeVertex& v) const;
};

TreeWindow window(const AutomaticTree& t, std::size_t depth,
                  std::size_t vertex_budget = kDefaultWindowBudget);

// All vertices of depth <= depth in path order, without building a graph.
std::vector<TreeVertex> vertices_up_to(const AutomaticTree& t,
                                       std::size_t depth,
                                       std::size_t vertex_budget =
                                           kDefaultWindowBudget);

// The infinite child-index word preperiod . period^omega, naming the end of
// the ray from the root that follows it.
class EndDescriptor {
 public:
  EndDescriptor(std::vector<ChildIndex> preperiod,
                std::vector<ChildIndex> period);

  const std::vector<ChildIndex>& preperiod() const { return preperiod_; }
  const std::vector<ChildIndex>& period() const { return period_; }
  ChildIndex at(std::size_t i) const;
  TreeVertex prefix(std::size_t length) const;
  // True iff v is a vertex of the ray.
  bool on_ray(const TreeVertex& v) const;

  friend bool operator==(const EndDescriptor&, const EndDescriptor&) = default;

 private:
  std::vector<ChildIndex> preperiod_;
  std::vector<ChildIndex> period_;
};

// "0,1|2" for preperiod <0,1>, period <2>; "|0" for an empty preperiod.
std::string to_string(const EndDescriptor& e);

// Number of indices after which two words are known to agree forever if they
// agree up to it.
std::size_t comparison_horizon(const EndDescriptor& a, const EndDescriptor& b);

// Throws InvalidArgument unless every prefix of the word is a valid vertex.
void validate_end(const AutomaticTree& t, const EndDescriptor& e);

bool ends_equivalent(const AutomaticTree& t, const EndDescriptor& a,
                     const EndDescriptor& b);

// Lexicographic order of the infinite words.
std::strong_ordering compare_ends(const EndDescriptor& a,
                                  const EndDescriptor& b);

// First index where the words differ. Throws InvalidArgument if equal.
std::size_t divergence_index(const EndDescriptor& a, const EndDescriptor& b);

// A bad ray: starting at `start` (never the root), follow `stem` and then
// `cycle` forever. Its vertices at even positions all have degree two.
struct BadRayWitness {
  TreeVertex start;
  std::vector<ChildIndex> stem;
  std::vector<ChildIndex> cycle;

  // The first `count` vertices of the ray.
  std::vector<TreeVertex> vertices(std::size_t count) const;
};

std::optional<BadRayWitness> find_bad_ray(const AutomaticTree& t);
inline bool has_bad_ray(const AutomaticTree& t) {
  return find_bad_ray(t).has_value();
}

}  // namespace endmatch

#endif  // ENDMATCH_AUTOMATIC_TREE_HPP_
