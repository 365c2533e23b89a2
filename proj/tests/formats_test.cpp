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

#include "endmatch/formats.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "endmatch/battery.hpp"
#include "endmatch/error.hpp"
#include "support.hpp"

namespace endmatch {
namespace {

// Line and column of the ParseError thrown by f, or (0, 0).
template <typename F>
std::pair<std::size_t, std::size_t> error_at(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

using At = std::pair<std::size_t, std::size_t>;

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(ENDMATCH_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(GraphFormat, RoundTrip) {
  std::mt19937_64 rng(testing::kSeed + 7);
  for (int trial = 0; trial < 100; ++trial) {
    const FiniteGraph g = testing::random_graph(trial % 9, 0.4, rng);
    const std::string text = print_graph(g);
    EXPECT_EQ(print_graph(parse_graph(text)), text);
    EXPECT_EQ(parse_graph(text).edges(), g.edges());
  }
}

TEST(GraphFormat, CommentsAndBlankLines) {
  const FiniteGraph g = parse_graph("# path\n\ngraph 3  # three\ne 0 1\ne 1 2\n");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(GraphFormat, ErrorPositions) {
  EXPECT_EQ(error_at([] { parse_graph(""); }), At(1, 1));
  EXPECT_EQ(error_at([] { parse_graph("tree\n"); }), At(1, 1));
  EXPECT_EQ(error_at([] { parse_graph("graph x\n"); }), At(1, 7));
  EXPECT_EQ(error_at([] { parse_graph("graph 3\ne 0 3\n"); }), At(2, 5));
  EXPECT_EQ(error_at([] { parse_graph("graph 3\ne 1 0\n"); }), At(2, 5));
  EXPECT_EQ(error_at([] { parse_graph("graph 3\ne 0 1\ne 0 1\n"); }), At(3, 1));
  EXPECT_EQ(error_at([] { parse_graph("graph 3\ne 0\n"); }), At(2, 4));
  EXPECT_EQ(error_at([] { parse_graph("graph 3\n  f 0 1\n"); }), At(2, 3));
}

TEST(TreeFormat, RoundTripsTheBattery) {
  for (const auto& entry : battery::all()) {
    const std::string text = print_tree(entry.tree);
    const AutomaticTree back = parse_tree(text);
    EXPECT_EQ(print_tree(back), text) << entry.name;
    for (const auto& v : vertices_up_to(entry.tree, 5)) {
      EXPECT_EQ(back.degree(v), entry.tree.degree(v)) << entry.name;
    }
  }
}

TEST(TreeFormat, DataFilesParse) {
  for (const char* name : {"t3.tree", "binary.tree", "line.tree",
                           "odd_comb.tree", "even_comb.tree"}) {
    EXPECT_NO_THROW(parse_tree(read_data(name))) << name;
  }
  const AutomaticTree t3 = parse_tree(read_data("t3.tree"));
  for (const auto& v : vertices_up_to(t3, 4)) EXPECT_EQ(t3.degree(v), 3u);
}

TEST(TreeFormat, OmittedTransitionsStayPut) {
  const AutomaticTree t = parse_tree("tree\nstate a branch 2\nroot a\n");
  EXPECT_EQ(t.step(0, 0), 0u);
  EXPECT_EQ(t.step(0, 1), 0u);
}

TEST(TreeFormat, ErrorPositions) {
  EXPECT_EQ(error_at([] { parse_tree(""); }), At(1, 1));
  EXPECT_EQ(error_at([] { parse_tree("tree\nstate a twig 2\n"); }), At(2, 9));
  EXPECT_EQ(error_at([] {
              parse_tree("tree\nstate a branch 2\nstate a branch 1\n");
            }),
            At(3, 7));
  EXPECT_EQ(error_at([] {
              parse_tree("tree\nstate a branch 2\nroot a\ntrans a 2 a\n");
            }),
            At(4, 9));
  EXPECT_EQ(error_at([] {
              parse_tree("tree\nstate a branch 2\nroot b\n");
            }),
            At(3, 6));
  EXPECT_EQ(error_at([] {
              parse_tree("tree\nstate a branch 2\nroot a\nroot a\n");
            }),
            At(4, 1));
  EXPECT_EQ(error_at([] {
              parse_tree("tree\nstate a branch 2\nroot a\nleaf a\n");
            }),
            At(4, 1));
  EXPECT_EQ(error_at([] { parse_tree("tree\nstate a branch x\n"); }),
            At(2, 16));
}

TEST(EndFormat, Parses) {
  EXPECT_EQ(parse_end("|0"), EndDescriptor({}, {0}));
  EXPECT_EQ(parse_end("1,2|0,1"), EndDescriptor({1, 2}, {0, 1}));
  EXPECT_EQ(to_string(parse_end("2|0")), "2|0");
}

TEST(EndFormat, ErrorPositions) {
  EXPECT_EQ(error_at([] { parse_end("0,1"); }), At(1, 4));
  EXPECT_EQ(error_at([] { parse_end("0|"); }), At(1, 3));
  EXPECT_EQ(error_at([] { parse_end("0|1|2"); }), At(1, 4));
  EXPECT_EQ(error_at([] { parse_end("0,x|1"); }), At(1, 3));
}

TEST(VertexFormat, Parses) {
  EXPECT_EQ(parse_vertex("/"), TreeVertex{});
  EXPECT_EQ(parse_vertex("/0/2"), (TreeVertex{0, 2}));
  EXPECT_EQ(error_at([] { parse_vertex("0/2"); }), At(1, 1));
  EXPECT_EQ(error_at([] { parse_vertex("/0//2"); }).first, 1u);
}

TEST(MatchingFormat, RoundTrips) {
  const Matching m({{0, 3}, {1, 2}});
  EXPECT_EQ(parse_matching(print_matching(m)), m);
  const TreeMatching tm = {{TreeVertex{}, TreeVertex{0}},
                           {TreeVertex{1}, TreeVertex{1, 0}}};
  EXPECT_EQ(parse_tree_matching(print_tree_matching(tm)), tm);
}

TEST(MatchingFormat, ErrorPositions) {
  EXPECT_EQ(error_at([] { parse_matching("m 0 0\n"); }), At(1, 5));
  EXPECT_EQ(error_at([] { parse_matching("m 0 1\nm 1 2\n"); }), At(2, 3));
  EXPECT_EQ(error_at([] { parse_tree_matching("m / /0\nm /0 /1\n"); }),
            At(2, 3));
}

TEST(LevelDumpFormat, ErrorPositions) {
  EXPECT_EQ(error_at([] { parse_level_dump("level 1\n"); }), At(1, 7));
  EXPECT_EQ(error_at([] { parse_level_dump("R 0 1\n"); }), At(1, 1));
  EXPECT_EQ(error_at([] {
              parse_level_dump("level 0\nS - -\nlevel 1\nu -\nv -\nR 0 11\n");
            }),
            At(6, 5));
  EXPECT_EQ(error_at([] { parse_level_dump("level 0\nQ - -\n"); }), At(2, 1));
}

}  // namespace
}  // namespace endmatch
