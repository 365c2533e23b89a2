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

// A bi-infinite line in an automatic tree: the union of two root rays beyond
// the vertex where they diverge. Positions are signed integers, 0 at the
// divergence vertex, positive toward the first end.

#ifndef ENDMATCH_TREE_LINE_HPP_
#define ENDMATCH_TREE_LINE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "endmatch/automatic_tree.hpp"

namespace endmatch {

using LinePos = std::int64_t;

class TreeLine {
 public:
  // Throws InvalidArgument if the ends are invalid or equivalent, and
  // BudgetExceeded if the periodic state table of either side is larger than
  // `budget`.
  TreeLine(std::shared_ptr<const AutomaticTree> tree, EndDescriptor positive,
           EndDescriptor negative, std::size_t budget);

  const AutomaticTree& tree() const { return *tree_; }
  const EndDescriptor& positive_end() const { return sides_[0].end; }
  const EndDescriptor& negative_end() const { return sides_[1].end; }
  const TreeVertex& divergence_vertex() const { return center_; }

  TreeVertex vertex_at(LinePos pos) const;
  std::optional<LinePos> position_of(const TreeVertex& v) const;
  bool contains(const TreeVertex& v) const {
    return position_of(v).has_value();
  }
  std::size_t degree_at(LinePos pos) const;
  bool branches_at(LinePos pos) const { return degree_at(pos) >= 3; }

  // Past periodic_start(dir) (a position magnitude >= 1) the degrees on that
  // side repeat with period(dir). dir is +1 or -1.
  LinePos periodic_start(int dir) const;
  LinePos period(int dir) const;

  // Nearest branching position strictly beyond pos in direction dir.
  std::optional<LinePos> next_branching(LinePos pos, int dir) const;
  // Nearest position strictly beyond pos in direction dir satisfying pred,
  // where pred only depends on the degrees within one period of its argument.
  template <typename Pred>
  std::optional<LinePos> scan(LinePos pos, int dir, Pred pred) const {
    const LinePos limit = scan_limit(pos, dir);
    for (LinePos q = pos + dir; q * dir <= limit; q += dir) {
      if (pred(q)) return q;
    }
    return std::nullopt;
  }
  // True iff branching positions are unbounded in direction dir.
  bool branching_unbounded(int dir) const;

  // The first neighbor of the line vertex at pos that is not on the line
  // (children by index, then the parent).
  std::optional<TreeVertex> first_off_line(LinePos pos) const;

  // For v off the line: the nearest line vertex and the neighbor of it on
  // the way to v.
  std::pair<TreeVertex, TreeVertex> attachment(const TreeVertex& v) const;

 private:
  struct Side {
    EndDescriptor end;
    std::vector<State> states;  // state at depth k along the ray
    std::size_t cycle_start = 0;
    std::size_t cycle_length = 0;

    State state_at(std::size_t depth) const;
  };

  static Side make_side(const AutomaticTree& t, EndDescriptor e,
                        std::size_t budget);
  const Side& side(int dir) const { return sides_[dir > 0 ? 0 : 1]; }
  LinePos scan_limit(LinePos pos, int dir) const;

  std::shared_ptr<const AutomaticTree> tree_;
  std::vector<Side> sides_;  // positive, negative
  std::size_t split_ = 0;
  TreeVertex center_;
};

}  // namespace endmatch

#endif  // ENDMATCH_TREE_LINE_HPP_
