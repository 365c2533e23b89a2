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

// Perfect matchings of automatic trees: the layered matching from a root,
// matchings of graphs generated by permutations, and the end-based
// constructions for one, two, or at least three selected ends.

#ifndef ENDMATCH_MATCHER_HPP_
#define ENDMATCH_MATCHER_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "endmatch/automatic_tree.hpp"
#include "endmatch/finite_graph.hpp"
#include "endmatch/tree_line.hpp"

namespace endmatch {

// A partner function on a set of tree vertices.
class MatchingOracle {
 public:
  using Domain = std::function<bool(const TreeVertex&)>;
  using Partner = std::function<TreeVertex(const TreeVertex&)>;

  MatchingOracle(Domain domain, Partner partner)
      : domain_(std::move(domain)), partner_(std::move(partner)) {}

  static MatchingOracle empty();

  bool in_domain(const TreeVertex& v) const { return domain_(v); }
  // Throws InvalidArgument outside the domain.
  TreeVertex partner(const TreeVertex& v) const;

 private:
  Domain domain_;
  Partner partner_;
};

// Layered matching of the component of T - {blocked} containing `anchor`,
// layered by distance from the anchor: the anchor takes its first free
// neighbor (children by index, then parent) unless `anchor_taken`, in which
// case it is matched to `blocked`; every other vertex is matched to the
// vertex it came from if that one chose it, and to its own first free
// neighbor otherwise.
TreeVertex layered_partner(const AutomaticTree& t, const TreeVertex& anchor,
                           const std::optional<TreeVertex>& blocked,
                           bool anchor_taken, const TreeVertex& v);

// Requires every vertex to have a child; throws InvalidArgument otherwise.
MatchingOracle rooted_matching(const AutomaticTree& t);

// Layered matching of the whole tree from `center`. Requires degree >= 2
// everywhere.
MatchingOracle rerooted_matching(const AutomaticTree& t,
                                 const TreeVertex& center);

// The graph with edges {x, perm[x]}. Throws InvalidArgument on a fixed point
// or an out-of-range image.
FiniteGraph generated_graph(std::span<const Vertex> f);

struct OddCycle {
  std::vector<Vertex> cycle;  // starts at its least element
};

// Pairs each cycle alternately from its least element; fails on the first
// odd cycle. Throws InvalidArgument unless perm is a fixed-point free
// permutation.
std::variant<Matching, OddCycle> bijection_graph_matching(
    std::span<const Vertex> perm);

// Degree >= 3 positions on one side of a line, and their parities.
struct SideProfile {
  LinePos periodic_start = 1;
  LinePos period = 1;
  std::vector<LinePos> before_cycle;  // branching magnitudes < periodic_start
  std::vector<LinePos> cycle;  // branching magnitudes in one period
  bool unbounded = false;
};

struct LineReport {
  TreeVertex divergence;
  EndDescriptor positive;
  EndDescriptor negative;
  SideProfile positive_side;
  SideProfile negative_side;
  // Consecutive branching positions inside the scanned range; the pattern
  // repeats beyond it.
  std::vector<std::pair<LinePos, LinePos>> gaps;
  bool has_odd_gap = false;
};

LineReport line_report(const TreeLine& line);

struct BSet {
  enum class Kind {
    kEmpty,
    kInjectivePart,  // the whole (linear) tree
    kLine,
  };
  Kind kind = Kind::kEmpty;
  std::optional<TreeLine> line;

  bool contains(const TreeVertex& v) const;
};

std::string to_string(BSet::Kind kind);

struct EndsOutput {
  BSet b_set;
  MatchingOracle oracle = MatchingOracle::empty();
  std::optional<LineReport> line;
  // Which construction produced the oracle: "layered", "line-parity",
  // "function-parity", "hanging", or "none".
  std::string construction;
};

inline constexpr std::size_t kDefaultMatchBudget = std::size_t{1} << 16;

// Throws InvalidArgument when some vertex has degree < 2 or e is invalid.
EndsOutput one_end_matching(const AutomaticTree& t, const EndDescriptor& e,
                            std::size_t budget = kDefaultMatchBudget);

// Throws InvalidArgument when some vertex has degree < 2 or the ends are
// invalid or equivalent.
EndsOutput two_end_matching(const AutomaticTree& t, const EndDescriptor& e1,
                            const EndDescriptor& e2,
                            std::size_t budget = kDefaultMatchBudget);

// Center of three rays: the vertex where the first three ends split.
TreeVertex tripod_center(const EndDescriptor& a, const EndDescriptor& b,
                         const EndDescriptor& c);

// Uses the first three ends. Throws InvalidArgument unless they are
// pairwise inequivalent.
EndsOutput many_end_matching(const AutomaticTree& t,
                             std::span<const EndDescriptor> ends);

// Representatives of the distinct ends, sorted by their words.
std::vector<EndDescriptor> distinct_ends(const AutomaticTree& t,
                                         std::span<const EndDescriptor> ends);

EndsOutput match_ends(const AutomaticTree& t,
                      std::span<const EndDescriptor> ends,
                      std::size_t budget = kDefaultMatchBudget);

// Checks involution, tree edges and totality on every domain vertex of depth
// <= depth. Returns a description of the first failure.
std::optional<std::string> check_window(const AutomaticTree& t,
                                        const MatchingOracle& oracle,
                                        std::size_t depth);

struct ConclusionReport {
  bool two_regular = true;      // G restricted to B
  bool single_component = true;  // at most one component of B
  bool no_odd_pair = true;       // degree >= 3 vertices of B
  bool perfect_off_b = true;     // domain = complement of B, and valid
  bool empty_without_bad_ray = true;
  std::string failure;

  bool ok() const {
    return two_regular && single_component && no_odd_pair && perfect_off_b &&
           empty_without_bad_ray;
  }
};

ConclusionReport verify_conclusions(const AutomaticTree& t,
                                    const EndsOutput& out, std::size_t depth);

}  // namespace endmatch

#endif  // ENDMATCH_MATCHER_HPP_
