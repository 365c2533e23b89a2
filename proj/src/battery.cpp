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

#include "endmatch/battery.hpp"

namespace endmatch::battery {
namespace {

using Spec = AutomaticTree::StateSpec;

EndDescriptor end(std::vector<ChildIndex> pre, std::vector<ChildIndex> per) {
  return EndDescriptor(std::move(pre), std::move(per));
}

}  // namespace

AutomaticTree unary() { return AutomaticTree({Spec{"u", 1, {0}}}, 0); }

AutomaticTree binary() { return AutomaticTree({Spec{"b", 2, {0, 0}}}, 0); }

AutomaticTree ternary() {
  return AutomaticTree({Spec{"r", 3, {1, 1, 1}}, Spec{"b", 2, {1, 1}}}, 0);
}

AutomaticTree line() {
  return AutomaticTree({Spec{"r", 2, {1, 1}}, Spec{"l", 1, {1}}}, 0);
}

AutomaticTree odd_comb() {
  return AutomaticTree({Spec{"r", 3, {1, 1, 2}}, Spec{"l", 2, {1, 2}},
                        Spec{"t", 2, {2, 2}}},
                       0);
}

AutomaticTree even_comb() {
  return AutomaticTree({Spec{"r", 3, {1, 1, 3}}, Spec{"m", 1, {2}},
                        Spec{"n", 2, {1, 3}}, Spec{"t", 2, {3, 3}}},
                       0);
}

AutomaticTree mixed_period() {
  return AutomaticTree(
      {Spec{"a", 2, {1, 0}}, Spec{"b", 2, {2, 1}}, Spec{"c", 1, {0}}}, 0);
}

AutomaticTree toothed_ray() {
  return AutomaticTree({Spec{"r", 2, {0, 1}}, Spec{"t", 2, {1, 1}}}, 0);
}

std::vector<Entry> all() {
  return {
      {"unary", unary(), {}},
      {"binary",
       binary(),
       {{end({}, {0})},
        {end({}, {0}), end({}, {1})},
        {end({}, {0}), end({}, {1}), end({0}, {1})}}},
      {"ternary",
       ternary(),
       {{end({}, {0})},
        {end({}, {0}), end({}, {1})},
        {end({}, {0}), end({}, {1}), end({2}, {0})}}},
      {"line", line(), {{end({}, {0})}, {end({}, {0}), end({1}, {0})}}},
      {"odd-comb",
       odd_comb(),
       {{end({}, {0})},
        {end({}, {0}), end({1}, {0})},
        {end({}, {0}), end({1}, {0}), end({2}, {0})}}},
      {"even-comb",
       even_comb(),
       {{end({}, {0})},
        {end({}, {0}), end({1}, {0})},
        {end({}, {0}), end({1}, {0}), end({2}, {0})}}},
      {"mixed-period",
       mixed_period(),
       {{end({}, {0})},
        {end({}, {0}), end({}, {1})},
        {end({}, {0}), end({}, {1}), end({0, 1}, {0})}}},
      {"toothed-ray",
       toothed_ray(),
       {{end({}, {0})},
        {end({}, {0}), end({1}, {0})},
        {end({}, {0}), end({1}, {0}), end({1}, {1})}}},
  };
}

}  // namespace endmatch::battery
