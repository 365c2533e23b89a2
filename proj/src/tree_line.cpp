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

#include "endmatch/tree_line.hpp"

#include <algorithm>
#include <map>

#include "endmatch/error.hpp"

namespace endmatch {
namespace {

std::size_t agreement(const TreeVertex& v, const EndDescriptor& e) {
  std::size_t k = 0;
  while (k < v.depth() && v[k] == e.at(k)) ++k;
  return k;
}

}  // namespace

State TreeLine::Side::state_at(std::size_t depth) const {
  if (depth < states.size()) return states[depth];
  return states[cycle_start + (depth - cycle_start) % cycle_length];
}

TreeLine::Side TreeLine::make_side(const AutomaticTree& t, EndDescriptor e,
                                   std::size_t budget) {
  validate_end(t, e);
  Side s{std::move(e), {}, 0, 0};
  const std::size_t pre = s.end.preperiod().size();
  const std::size_t per = s.end.period().size();
  s.states.push_back(t.root_state());
  auto extend = [&] {
    if (s.states.size() > budget) {
      throw BudgetExceeded("ray state table exceeds budget",
                           {to_string(s.end.prefix(s.states.size() - 1))});
    }
    const std::size_t k = s.states.size() - 1;
    s.states.push_back(t.step(s.states.back(), s.end.at(k)));
  };
  while (s.states.size() <= pre) extend();
  std::map<State, std::size_t> seen;
  for (std::size_t j = 0;; ++j) {
    const State q = s.states[pre + j * per];
    if (auto [it, fresh] = seen.emplace(q, j); !fresh) {
      s.cycle_start = pre + it->second * per;
      s.cycle_length = (j - it->second) * per;
      break;
    }
    for (std::size_t i = 0; i < per; ++i) extend();
  }
  s.states.resize(s.cycle_start + s.cycle_length);
  return s;
}

TreeLine::TreeLine(std::shared_ptr<const AutomaticTree> tree,
                   EndDescriptor positive, EndDescriptor negative,
                   std::size_t budget)
    : tree_(std::move(tree)) {
  sides_.push_back(make_side(*tree_, std::move(positive), budget));
  sides_.push_back(make_side(*tree_, std::move(negative), budget));
  split_ = divergence_index(sides_[0].end, sides_[1].end);
  center_ = sides_[0].end.prefix(split_);
}

TreeVertex TreeLine::vertex_at(LinePos pos) const {
  const auto depth = split_ + static_cast<std::size_t>(pos < 0 ? -pos : pos);
  return side(pos >= 0 ? 1 : -1).end.prefix(depth);
}

std::optional<LinePos> TreeLine::position_of(const TreeVertex& v) const {
  if (v.depth() < split_) return std::nullopt;
  const auto offset = static_cast<LinePos>(v.depth() - split_);
  if (agreement(v, sides_[0].end) == v.depth()) return offset;
  if (offset > 0 && agreement(v, sides_[1].end) == v.depth()) return -offset;
  return std::nullopt;
}

std::size_t TreeLine::degree_at(LinePos pos) const {
  const auto depth = split_ + static_cast<std::size_t>(pos < 0 ? -pos : pos);
  const State q = side(pos >= 0 ? 1 : -1).state_at(depth);
  return tree_->state_degree(q, depth == 0);
}

LinePos TreeLine::periodic_start(int dir) const {
  const Side& s = side(dir);
  const auto start = static_cast<LinePos>(s.cycle_start) -
                     static_cast<LinePos>(split_);
  return std::max<LinePos>(1, start);
}

LinePos TreeLine::period(int dir) const {
  return static_cast<LinePos>(side(dir).cycle_length);
}

LinePos TreeLine::scan_limit(LinePos pos, int dir) const {
  const LinePos p = period(dir);
  return std::max(std::max<LinePos>(1, dir * pos + 1),
                  periodic_start(dir) + 3 * p) +
         p;
}

std::optional<LinePos> TreeLine::next_branching(LinePos pos, int dir) const {
  return scan(pos, dir, [this](LinePos q) { return branches_at(q); });
}

bool TreeLine::branching_unbounded(int dir) const {
  const LinePos start = periodic_start(dir);
  for (LinePos q = start; q < start + period(dir); ++q) {
    if (branches_at(dir * q)) return true;
  }
  return false;
}

std::optional<TreeVertex> TreeLine::first_off_line(LinePos pos) const {
  const TreeVertex v = vertex_at(pos);
  const TreeVertex ahead = vertex_at(pos + 1);
  const TreeVertex behind = vertex_at(pos - 1);
  for (ChildIndex i = 0; i < tree_->child_count(v); ++i) {
    TreeVertex c = v.child(i);
    if (c != ahead && c != behind) return c;
  }
  if (!v.is_root() && pos == 0) return v.parent();
  return std::nullopt;
}

std::pair<TreeVertex, TreeVertex> TreeLine::attachment(
    const TreeVertex& v) const {
  if (contains(v)) {
    throw InvalidArgument("vertex " + to_string(v) + " lies on the line");
  }
  if (!center_.is_prefix_of(v)) return {center_, center_.parent()};
  const std::size_t k =
      std::max(agreement(v, sides_[0].end), agreement(v, sides_[1].end));
  return {v.prefix(k), v.prefix(k + 1)};
}

}  // namespace endmatch
