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

#include "endmatch/automatic_tree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "endmatch/error.hpp"

namespace endmatch {

// ---------------------------------------------------------------------------
// TreeVertex

TreeVertex TreeVertex::parent() const {
  if (path_.empty()) throw InvalidArgument("the root has no parent");
  return TreeVertex(std::vector<ChildIndex>(path_.begin(), path_.end() - 1));
}

TreeVertex TreeVertex::child(ChildIndex i) const {
  std::vector<ChildIndex> p = path_;
  p.push_back(i);
  return TreeVertex(std::move(p));
}

TreeVertex TreeVertex::prefix(std::size_t length) const {
  if (length > path_.size()) throw InvalidArgument("prefix longer than path");
  return TreeVertex(
      std::vector<ChildIndex>(path_.begin(), path_.begin() + length));
}

bool TreeVertex::is_prefix_of(const TreeVertex& other) const {
  return path_.size() <= other.path_.size() &&
         std::equal(path_.begin(), path_.end(), other.path_.begin());
}

std::strong_ordering operator<=>(const TreeVertex& a, const TreeVertex& b) {
  if (auto c = a.path_.size() <=> b.path_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.path_.begin(), a.path_.end(), b.path_.begin(), b.path_.end());
}

std::size_t common_prefix_length(const TreeVertex& a, const TreeVertex& b) {
  std::size_t n = std::min(a.depth(), b.depth());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

std::string to_string(const TreeVertex& v) {
  if (v.is_root()) return "/";
  std::string s;
  for (ChildIndex i : v.path()) {
    s += '/';
    s += std::to_string(i);
  }
  return s;
}

std::size_t TreeVertexHash::operator()(const TreeVertex& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (ChildIndex i : v.path()) {
    h ^= static_cast<std::size_t>(i) + 1;
    h *= 0x100000001b3ULL;
  }
  return h ^ v.depth();
}

// ---------------------------------------------------------------------------
// AutomaticTree

AutomaticTree::AutomaticTree(std::vector<StateSpec> states, State root)
    : states_(std::move(states)), root_(root) {
  if (states_.empty()) throw InvalidArgument("tree has no states");
  if (root_ >= states_.size()) throw InvalidArgument("root state undeclared");
  for (const auto& s : states_) {
    if (s.step.size() != s.branch) {
      throw InvalidArgument("state " + s.name + " has " +
                            std::to_string(s.step.size()) +
                            " transitions but branch " +
                            std::to_string(s.branch));
    }
    for (State q : s.step) {
      if (q >= states_.size()) {
        throw InvalidArgument("state " + s.name +
                              " steps to an undeclared state");
      }
    }
  }
  std::vector<bool> seen(states_.size(), false);
  std::queue<State> q;
  q.push(root_);
  seen[root_] = true;
  while (!q.empty()) {
    State s = q.front();
    q.pop();
    for (State t : states_[s].step) {
      if (!seen[t]) {
        seen[t] = true;
        q.push(t);
      }
    }
  }
  for (State s = 0; s < states_.size(); ++s) {
    if (!seen[s]) {
      throw InvalidArgument("state " + states_[s].name +
                            " is unreachable from the root");
    }
  }
}

State AutomaticTree::step(State q, ChildIndex i) const {
  const auto& s = states_.at(q);
  if (i >= s.branch) {
    throw InvalidArgument("child index " + std::to_string(i) +
                          " out of range at state " + s.name);
  }
  return s.step[i];
}

bool AutomaticTree::is_valid(const TreeVertex& v) const {
  State q = root_;
  for (ChildIndex i : v.path()) {
    if (i >= states_[q].branch) return false;
    q = states_[q].step[i];
  }
  return true;
}

State AutomaticTree::state_of(const TreeVertex& v) const {
  State q = root_;
  for (ChildIndex i : v.path()) {
    if (i >= states_[q].branch) {
      throw InvalidArgument("invalid vertex " + to_string(v));
    }
    q = states_[q].step[i];
  }
  return q;
}

std::vector<State> AutomaticTree::states_along(const TreeVertex& v) const {
  std::vector<State> out;
  out.reserve(v.depth() + 1);
  State q = root_;
  out.push_back(q);
  for (ChildIndex i : v.path()) {
    if (i >= states_[q].branch) {
      throw InvalidArgument("invalid vertex " + to_string(v));
    }
    q = states_[q].step[i];
    out.push_back(q);
  }
  return out;
}

std::size_t AutomaticTree::degree(const TreeVertex& v) const {
  return state_degree(state_of(v), v.is_root());
}

std::vector<TreeVertex> AutomaticTree::neighbors(const TreeVertex& v) const {
  std::vector<TreeVertex> out;
  const std::size_t b = branch(state_of(v));
  out.reserve(b + 1);
  for (ChildIndex i = 0; i < b; ++i) out.push_back(v.child(i));
  if (!v.is_root()) out.push_back(v.parent());
  return out;
}

bool AutomaticTree::adjacent(const TreeVertex& a, const TreeVertex& b) const {
  if (!is_valid(a) || !is_valid(b)) return false;
  if (a.depth() + 1 == b.depth()) return a.is_prefix_of(b);
  if (b.depth() + 1 == a.depth()) return b.is_prefix_of(a);
  return false;
}

std::vector<std::pair<State, TreeVertex>> AutomaticTree::non_root_states()
    const {
  std::vector<std::pair<State, TreeVertex>> out;
  std::vector<bool> seen(states_.size(), false);
  std::queue<std::pair<State, TreeVertex>> q;
  for (ChildIndex i = 0; i < branch(root_); ++i) {
    q.emplace(step(root_, i), TreeVertex{i});
  }
  while (!q.empty()) {
    auto [s, v] = q.front();
    q.pop();
    if (seen[s]) continue;
    seen[s] = true;
    for (ChildIndex i = 0; i < branch(s); ++i) {
      q.emplace(step(s, i), v.child(i));
    }
    out.emplace_back(s, std::move(v));
  }
  return out;
}

std::size_t AutomaticTree::min_degree() const {
  std::size_t d = branch(root_);
  for (const auto& [s, v] : non_root_states()) {
    d = std::min(d, state_degree(s, false));
  }
  return d;
}

std::size_t AutomaticTree::min_branch() const {
  std::size_t b = branch(root_);
  for (const auto& s : states_) b = std::min(b, s.branch);
  return b;
}

std::size_t degree(const FiniteGraph& g, Vertex v) { return g.degree(v); }

std::size_t degree(const AutomaticTree& t, const TreeVertex& v) {
  return t.degree(v);
}

std::size_t tree_distance(const AutomaticTree& t, const TreeVertex& u,
                          const TreeVertex& v) {
  t.state_of(u);
  t.state_of(v);
  return u.depth() + v.depth() - 2 * common_prefix_length(u, v);
}

// ---------------------------------------------------------------------------
// Windows

std::vector<TreeVertex> vertices_up_to(const AutomaticTree& t,
                                       std::size_t depth,
                                       std::size_t vertex_budget) {
  std::vector<TreeVertex> out;
  std::vector<State> states;
  out.emplace_back();
  states.push_back(t.root_state());
  // Breadth-first expansion with children in index order yields path order.
  for (std::size_t head = 0; head < out.size(); ++head) {
    if (out[head].depth() == depth) continue;
    const State q = states[head];
    for (ChildIndex i = 0; i < t.branch(q); ++i) {
      if (out.size() >= vertex_budget) {
        throw BudgetExceeded("window of depth " + std::to_string(depth) +
                                 " exceeds the vertex budget of " +
                                 std::to_string(vertex_budget),
                             {to_string(out[head])});
      }
      out.push_back(out[head].child(i));
      states.push_back(t.step(q, i));
    }
  }
  return out;
}

TreeWindow window(const AutomaticTree& t, std::size_t depth,
                  std::size_t vertex_budget) {
  TreeWindow w;
  w.depth = depth;
  w.labels = vertices_up_to(t, depth, vertex_budget);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < w.labels.size(); ++i) {
    w.index.emplace(w.labels[i], i);
    if (!w.labels[i].is_root()) {
      edges.emplace_back(w.index.at(w.labels[i].parent()), i);
    }
  }
  w.graph = FiniteGraph(w.labels.size(), edges);
  return w;
}

std::optional<Vertex> TreeWindow::find(const TreeVertex& v) const {
  auto it = index.find(v);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Ends

EndDescriptor::EndDescriptor(std::vector<ChildIndex> preperiod,
                             std::vector<ChildIndex> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw InvalidArgument("end period must be nonempty");
}

ChildIndex EndDescriptor::at(std::size_t i) const {
  if (i < preperiod_.size()) return preperiod_[i];
  return period_[(i - preperiod_.size()) % period_.size()];
}

TreeVertex EndDescriptor::prefix(std::size_t length) const {
  std::vector<ChildIndex> p(length);
  for (std::size_t i = 0; i < length; ++i) p[i] = at(i);
  return TreeVertex(std::move(p));
}

bool EndDescriptor::on_ray(const TreeVertex& v) const {
  for (std::size_t i = 0; i < v.depth(); ++i) {
    if (v[i] != at(i)) return false;
  }
  return true;
}

std::string to_string(const EndDescriptor& e) {
  auto join = [](const std::vector<ChildIndex>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(xs[i]);
    }
    return s;
  };
  return join(e.preperiod()) + "|" + join(e.period());
}

std::size_t comparison_horizon(const EndDescriptor& a,
                               const EndDescriptor& b) {
  return a.preperiod().size() + b.preperiod().size() +
         std::lcm(a.period().size(), b.period().size());
}

void validate_end(const AutomaticTree& t, const EndDescriptor& e) {
  State q = t.root_state();
  auto advance = [&](ChildIndex i, std::size_t pos) {
    if (i >= t.branch(q)) {
      throw InvalidArgument("end " + to_string(e) + " leaves the tree at index " +
                            std::to_string(pos));
    }
    q = t.step(q, i);
  };
  std::size_t pos = 0;
  for (ChildIndex i : e.preperiod()) advance(i, pos++);
  // Once a state recurs at a period boundary the word is valid forever.
  std::set<State> at_boundary;
  while (at_boundary.insert(q).second) {
    for (ChildIndex i : e.period()) advance(i, pos++);
  }
}

bool ends_equivalent(const AutomaticTree& t, const EndDescriptor& a,
                     const EndDescriptor& b) {
  validate_end(t, a);
  validate_end(t, b);
  return compare_ends(a, b) == std::strong_ordering::equal;
}

std::strong_ordering compare_ends(const EndDescriptor& a,
                                  const EndDescriptor& b) {
  const std::size_t horizon = comparison_horizon(a, b);
  for (std::size_t i = 0; i < horizon; ++i) {
    if (auto c = a.at(i) <=> b.at(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t divergence_index(const EndDescriptor& a, const EndDescriptor& b) {
  const std::size_t horizon = comparison_horizon(a, b);
  for (std::size_t i = 0; i < horizon; ++i) {
    if (a.at(i) != b.at(i)) return i;
  }
  throw InvalidArgument("ends " + to_string(a) + " and " + to_string(b) +
                        " are equivalent");
}

// ---------------------------------------------------------------------------
// Bad rays

std::vector<TreeVertex> BadRayWitness::vertices(std::size_t count) const {
  std::vector<TreeVertex> out;
  TreeVertex v = start;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(v);
    ChildIndex next = k < stem.size()
                          ? stem[k]
                          : cycle[(k - stem.size()) % cycle.size()];
    v = v.child(next);
  }
  return out;
}

// Any injective ray in a rooted tree descends from some point on, and its
// tail from an even index past the turn is again a bad ray. So a bad ray
// exists iff some non-root vertex starts a descending one, which is a lasso
// in the product of states with the parity of the position: at even
// positions the state must have degree two (branch one), at odd positions it
// needs any child.
std::optional<BadRayWitness> find_bad_ray(const AutomaticTree& t) {
  const std::size_t n = t.state_count();
  auto node = [n](State q, int parity) { return q + n * parity; };
  auto allowed = [&](State q, int parity) {
    return parity == 0 ? t.branch(q) == 1 : t.branch(q) >= 1;
  };
  // 0 = unvisited, 1 = on stack, 2 = exhausted; shared across starts since an
  // exhausted node reaches no cycle.
  std::vector<int> color(2 * n, 0);
  for (const auto& [start_state, start_vertex] : t.non_root_states()) {
    if (!allowed(start_state, 0) || color[node(start_state, 0)] != 0) continue;
    struct Frame {
      State q;
      int parity;
      ChildIndex next;
    };
    std::vector<Frame> stack{{start_state, 0, 0}};
    std::vector<ChildIndex> taken;  // index taken out of stack[k]
    color[node(start_state, 0)] = 1;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next >= t.branch(f.q)) {
        color[node(f.q, f.parity)] = 2;
        stack.pop_back();
        if (!taken.empty()) taken.pop_back();
        continue;
      }
      const ChildIndex i = f.next++;
      const State r = t.step(f.q, i);
      const int rp = 1 - f.parity;
      if (!allowed(r, rp)) continue;
      const int c = color[node(r, rp)];
      if (c == 2) continue;
      if (c == 1) {
        // Back edge: the stack from the repeated node onwards is the cycle.
        taken.push_back(i);
        std::size_t entry = 0;
        while (stack[entry].q != r || stack[entry].parity != rp) ++entry;
        BadRayWitness w;
        w.start = start_vertex;
        w.stem.assign(taken.begin(), taken.begin() + entry);
        w.cycle.assign(taken.begin() + entry, taken.end());
        return w;
      }
      color[node(r, rp)] = 1;
      taken.push_back(i);
      stack.push_back({r, rp, 0});
    }
  }
  return std::nullopt;
}

}  // namespace endmatch
