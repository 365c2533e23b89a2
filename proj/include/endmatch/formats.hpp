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

// Line-based text formats. Parsers throw ParseError with a 1-based line and
// column; printers emit the canonical form, which parses back to an equal
// value. `#` starts a comment running to the end of the line.
//
//   graph file     graph <n>
//                  e <a> <b>                 (a < b, no repeats)
//   tree file      tree
//                  state <name> branch <k>
//                  root <name>
//                  trans <state> <i> <state> (omitted: the state itself)
//   end argument   <i,j,...>|<p,q,...>       (empty preperiod allowed)
//   matching       m <x> <y>                 (finite vertices or tree paths)

#ifndef ENDMATCH_FORMATS_HPP_
#define ENDMATCH_FORMATS_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "endmatch/automatic_tree.hpp"
#include "endmatch/counterexample.hpp"
#include "endmatch/finite_graph.hpp"

namespace endmatch {

FiniteGraph parse_graph(std::string_view text);
std::string print_graph(const FiniteGraph& g);

AutomaticTree parse_tree(std::string_view text);
std::string print_tree(const AutomaticTree& t);

EndDescriptor parse_end(std::string_view text);

// "/" for the root, "/0/2" otherwise.
TreeVertex parse_vertex(std::string_view text);

using TreeMatching = std::vector<std::pair<TreeVertex, TreeVertex>>;

Matching parse_matching(std::string_view text);
std::string print_matching(const Matching& m);

TreeMatching parse_tree_matching(std::string_view text);
std::string print_tree_matching(const TreeMatching& m);

// Inverse of level_dump. Throws ParseError when a listed S disagrees with the
// rules of its level.
std::vector<LevelSystem> parse_level_dump(std::string_view text);

}  // namespace endmatch

#endif  // ENDMATCH_FORMATS_HPP_
