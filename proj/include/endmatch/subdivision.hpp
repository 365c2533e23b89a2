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

// The line-and-point graph of a finite graph, and the correspondence between
// its perfect matchings and the functions generating the graph whose first
// two iterates are fixed-point free.

#ifndef ENDMATCH_SUBDIVISION_HPP_
#define ENDMATCH_SUBDIVISION_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "endmatch/finite_graph.hpp"

namespace endmatch {

// Points come first (vertex x of the original is vertex x here), followed by
// one vertex per original edge in sorted edge order.
struct SubdivisionGraph {
  struct Label {
    bool is_edge = false;
    Vertex a = 0;  // the point, or the smaller endpoint
    Vertex b = 0;  // the larger endpoint (edges only)

    friend bool operator==(const Label&, const Label&) = default;
  };

  FiniteGraph graph;
  std::vector<Label> labels;
  std::size_t point_count = 0;

  // Throws InvalidArgument if {a, b} is not an original edge.
  Vertex edge_vertex(Vertex a, Vertex b) const;
};

SubdivisionGraph subdivide(const FiniteGraph& g);

// Throws InvalidArgument if f has the wrong size, if f or f o f has a fixed
// point, or if f does not generate g.
Matching orientation_to_matching(const FiniteGraph& g,
                                 std::span<const Vertex> f);

// Throws InvalidArgument unless m is a perfect matching of subdivide(g).
std::vector<Vertex> matching_to_orientation(const FiniteGraph& g,
                                            const Matching& m);

}  // namespace endmatch

#endif  // ENDMATCH_SUBDIVISION_HPP_
