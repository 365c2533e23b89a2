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

#include "endmatch/baire.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

#include "endmatch/error.hpp"

namespace endmatch {
namespace {

// Tree vertices outside `removed` and, if given, outside `also`.
class Region {
 public:
  Region(const AutomaticTree& t, const VertexSet& removed,
         const VertexSet* also = nullptr)
      : t_(t), removed_(removed), also_(also) {}

  bool contains(const TreeVertex& v) const {
    return !removed_.contains(v) && !(also_ && also_->contains(v));
  }

  std::vector<TreeVertex> neighbors(const TreeVertex& v) const {
    auto all = t_.neighbors(v);
    std::erase_if(all, [this](const TreeVertex& w) { return !contains(w); });
    return all;
  }

  std::size_t degree(const TreeVertex& v) const { return neighbors(v).size(); }

 private:
  const AutomaticTree& t_;
  const VertexSet& removed_;
  const VertexSet* also_;
};

std::pair<TreeVertex, TreeVertex> ordered(TreeVertex a, TreeVertex b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

VertexSet boundary_of_complement(const Region& outside, const VertexSet& s) {
  VertexSet out;
  for (const auto& v : s) {
    for (auto& w : outside.neighbors(v)) out.insert(std::move(w));
  }
  return out;
}

class BadPathLength {
 public:
  BadPathLength(const Region& region, std::size_t budget)
      : region_(region), budget_(budget) {}

  // Most vertices on a bad path of the region starting at u.
  std::size_t from(const TreeVertex& u) {
    start_ = u;
    return extend(u, std::nullopt, 0);
  }

 private:
  std::size_t extend(const TreeVertex& u, const std::optional<TreeVertex>& prev,
                     std::size_t index) {
    if (index % 2 == 0 && region_.degree(u) != 2) return 0;
    if (++visited_ > budget_) {
      throw BudgetExceeded("bad path search exceeded budget",
                           {to_string(start_), to_string(u)});
    }
    std::size_t best = 0;
    for (const auto& w : region_.neighbors(u)) {
      if (w != prev) best = std::max(best, extend(w, u, index + 1));
    }
    return 1 + best;
  }

  const Region& region_;
  std::size_t budget_;
  std::size_t visited_ = 0;
  TreeVertex start_;
};

}  // namespace

Closure closure(const AutomaticTree& t, const TreeVertex& x,
                const VertexSet& removed, std::size_t budget) {
  if (t.min_degree() < 2) {
    throw InvalidArgument("closure needs degree >= 2 at every vertex");
  }
  t.state_of(x);
  const Region region(t, removed);
  if (!region.contains(x)) {
    throw InvalidArgument("vertex " + to_string(x) + " was already removed");
  }
  const auto start = region.neighbors(x);
  if (start.empty()) {
    throw InvalidArgument("vertex " + to_string(x) + " has no neighbor left");
  }
  Closure c;
  c.s = {x, start.front()};
  c.matching.push_back(ordered(x, start.front()));
  // A vertex next to S can only qualify once, when its neighbor joins S.
  std::vector<TreeVertex> fresh(c.s.begin(), c.s.end());
  for (;;) {
    TreePairs added;
    for (const auto& v : fresh) {
      for (const auto& w : region.neighbors(v)) {
        if (c.s.contains(w)) continue;
        auto around = region.neighbors(w);
        if (around.size() != 2) continue;
        added.push_back(ordered(w, around[0] == v ? around[1] : around[0]));
      }
    }
    if (added.empty()) break;
    if (c.s.size() + 2 * added.size() > budget) {
      std::vector<std::string> frontier;
      for (const auto& [a, b] : added) {
        frontier.push_back(to_string(a));
        frontier.push_back(to_string(b));
      }
      std::sort(frontier.begin(), frontier.end());
      throw BudgetExceeded("closure of " + to_string(x) + " exceeded budget " +
                               std::to_string(budget),
                           std::move(frontier));
    }
    fresh.clear();
    for (const auto& [a, b] : added) {
      c.s.insert(a);
      c.s.insert(b);
      fresh.push_back(a);
      fresh.push_back(b);
      c.matching.emplace_back(a, b);
    }
  }
  std::sort(c.matching.begin(), c.matching.end());
  return c;
}

Buffer buffer(const AutomaticTree& t, const VertexSet& s,
              const VertexSet& removed, std::size_t budget) {
  const Region outside(t, removed, &s);
  const VertexSet boundary = boundary_of_complement(outside, s);
  BadPathLength longest(outside, budget);
  Buffer b;
  for (const auto& z : boundary) {
    b.radius = std::max(b.radius, longest.from(z) + 1);
    for (const auto& u : outside.neighbors(z)) {
      b.radius = std::max(b.radius, longest.from(u) + 1);
    }
  }
  b.t = s;
  std::map<TreeVertex, std::size_t> dist;
  std::deque<TreeVertex> queue;
  for (const auto& z : boundary) {
    dist.emplace(z, 0);
    queue.push_back(z);
  }
  while (!queue.empty()) {
    TreeVertex v = std::move(queue.front());
    queue.pop_front();
    const std::size_t d = dist.at(v);
    if (d < b.radius) {
      for (auto& w : outside.neighbors(v)) {
        if (dist.emplace(w, d + 1).second) queue.push_back(std::move(w));
      }
    }
    b.t.insert(std::move(v));
  }
  return b;
}

SweepResult sweep_step(const AutomaticTree& t,
                       std::span<const TreeVertex> seeds,
                       const VertexSet& removed, std::size_t budget) {
  const VertexSet ordered_seeds(seeds.begin(), seeds.end());
  SweepResult r;
  r.removed = removed;
  VertexSet claimed;
  for (const auto& seed : ordered_seeds) {
    if (removed.contains(seed)) continue;
    Closure c = closure(t, seed, removed, budget);
    Buffer b = buffer(t, c.s, removed, budget);
    const bool clash = std::any_of(b.t.begin(), b.t.end(), [&](const auto& v) {
      return claimed.contains(v);
    });
    if (clash) {
      r.passed_over.push_back(seed);
      continue;
    }
    claimed.insert(b.t.begin(), b.t.end());
    r.removed.insert(c.s.begin(), c.s.end());
    r.matching.insert(r.matching.end(), c.matching.begin(), c.matching.end());
    r.kept.push_back(ClosurePair{seed, std::move(c.s), std::move(b.t),
                                 std::move(c.matching), b.radius});
  }
  std::sort(r.matching.begin(), r.matching.end());
  return r;
}

SweepCheck verify_sweep(const AutomaticTree& t, const VertexSet& removed,
                        const SweepResult& result, std::size_t depth,
                        std::size_t max_points) {
  SweepCheck check;
  auto fail = [&check](bool& flag, const std::string& why) {
    if (flag && check.failure.empty()) check.failure = why;
    flag = false;
  };
  const auto vertices = vertices_up_to(t, depth);
  const Region left(t, result.removed);
  for (const auto& v : vertices) {
    if (left.contains(v) && left.degree(v) < 2) {
      fail(check.degree_ok, "vertex " + to_string(v) + " keeps degree " +
                                std::to_string(left.degree(v)));
    }
  }
  for (const auto& pair : result.kept) {
    VertexSet covered;
    for (const auto& [a, b] : pair.matching) {
      if (!t.adjacent(a, b) || !covered.insert(a).second ||
          !covered.insert(b).second) {
        fail(check.matching_ok, "bad pair at " + to_string(a));
      }
    }
    if (covered != pair.s) {
      fail(check.matching_ok, "matching of seed " + to_string(pair.seed) +
                                  " does not cover its closure");
    }

    const Region outside(t, removed, &pair.s);
    const VertexSet near_s = boundary_of_complement(outside, pair.s);
    VertexSet near_t;
    for (const auto& v : pair.t) {
      if (!outside.contains(v)) continue;
      for (const auto& w : outside.neighbors(v)) {
        if (!pair.t.contains(w)) near_t.insert(v);
      }
    }
    // Paths of at most max_points vertices meeting near_s start within
    // max_points - 1 of it.
    std::map<TreeVertex, std::size_t> dist;
    std::deque<TreeVertex> queue;
    for (const auto& z : near_s) {
      if (z.depth() > depth) continue;
      dist.emplace(z, 0);
      queue.push_back(z);
    }
    while (!queue.empty()) {
      const TreeVertex v = queue.front();
      queue.pop_front();
      if (dist.at(v) + 1 >= max_points) continue;
      for (auto& w : outside.neighbors(v)) {
        if (w.depth() <= depth && dist.emplace(w, dist.at(v) + 1).second) {
          queue.push_back(std::move(w));
        }
      }
    }
    auto walk = [&](auto&& self, const TreeVertex& u,
                    const std::optional<TreeVertex>& prev, std::size_t index,
                    bool met_s, bool met_t) -> void {
      if (index % 2 == 0 && outside.degree(u) != 2) return;
      met_s = met_s || near_s.contains(u);
      met_t = met_t || near_t.contains(u);
      if (met_s && met_t) {
        fail(check.paths_ok, "bad path through " + to_string(u) +
                                 " crosses the buffer of " +
                                 to_string(pair.seed));
        return;
      }
      if (index + 1 >= max_points) return;
      for (const auto& w : outside.neighbors(u)) {
        if (w != prev && w.depth() <= depth) {
          self(self, w, u, index + 1, met_s, met_t);
        }
      }
    };
    for (const auto& [start, d] : dist) walk(walk, start, std::nullopt, 0,
                                             false, false);
  }
  return check;
}

}  // namespace endmatch
