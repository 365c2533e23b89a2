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

// A fixed family of small automatic trees used by tests, the acceptance
// suite and the sample data files.

#ifndef ENDMATCH_BATTERY_HPP_
#define ENDMATCH_BATTERY_HPP_

#include <string>
#include <vector>

#include "endmatch/automatic_tree.hpp"

namespace endmatch::battery {

// Every vertex has exactly one child; the root has degree one.
AutomaticTree unary();
// Every vertex has two children.
AutomaticTree binary();
// 3-regular: the root has three children, every other vertex two.
AutomaticTree ternary();
// 2-regular two-ended line.
AutomaticTree line();
// Two-ended line with an infinite binary tooth at every line vertex.
AutomaticTree odd_comb();
// Two-ended line with a tooth at every second line vertex.
AutomaticTree even_comb();
// Child 0 cycles through branches 2, 2, 1; child 1 repeats the state.
AutomaticTree mixed_period();
// One-ended ray with an infinite binary tooth at every ray vertex.
AutomaticTree toothed_ray();

struct Entry {
  std::string name;
  AutomaticTree tree;
  // Documented end selections of sizes 1, 2 and (where the tree has three
  // ends) 3. Empty for trees with a vertex of degree < 2.
  std::vector<std::vector<EndDescriptor>> end_lists;
};

std::vector<Entry> all();

}  // namespace endmatch::battery

#endif  // ENDMATCH_BATTERY_HPP_
