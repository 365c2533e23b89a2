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

#include "endmatch/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <string>
#include <unordered_map>

#include "endmatch/error.hpp"

namespace endmatch::oracle {
namespace {

constexpr Vertex kNone = static_cast<Vertex>(-1);

void require_exhaustive_size(const FiniteGraph& g,
                             std::size_t limit = kExhaustiveLimit) {
  if (g.vertex_count() > limit) {
    throw InvalidArgument("exhaustive search limited to " +
                          std::to_string(limit) + " vertices, got " +
                          std::to_string(g.vertex_count()));
  }
}

std::vector<int> two_coloring(const FiniteGraph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          q.push(w);
        }
      }
    }
  }
  return side;
}

// Kuhn's augmenting-path algorithm from the side-0 vertices, lowest id first.
Matching bipartite_max_matching(const FiniteGraph& g) {
  const std::size_t n = g.vertex_count();
  const auto side = two_coloring(g);
  std::vector<Vertex> mate(n, kNone);
  std::vector<char> visited(n, 0);

  std::function<bool(Vertex)> augment = [&](Vertex u) -> bool {
    for (Vertex w : g.neighbors(u)) {
      if (visited[w]) continue;
      visited[w] = 1;
      if (mate[w] == kNone || augment(mate[w])) {
        mate[w] = u;
        mate[u] = w;
        return true;
      }
    }
    return false;
  };

  for (Vertex u = 0; u < n; ++u) {
    if (side[u] != 0 || mate[u] != kNone) continue;
    std::fill(visited.begin(), visited.end(), 0);
    augment(u);
  }
  std::vector<Edge> pairs;
  for (Vertex v = 0; v < n; ++v) {
    if (mate[v] != kNone && v < mate[v]) pairs.emplace_back(v, mate[v]);
  }
  return Matching(std::move(pairs));
}

// Memoized search over the set of still-unmatched vertices: the least
// remaining vertex is either left out or matched to a remaining neighbor.
class ExhaustiveMatcher {
 public:
  explicit ExhaustiveMatcher(const FiniteGraph& g) : g_(g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      std::uint32_t mask = 0;
      for (Vertex w : g.neighbors(v)) mask |= std::uint32_t{1} << w;
      adj_.push_back(mask);
    }
  }

  Matching run() {
    const std::uint32_t all =
        g_.vertex_count() == 32 ? ~0u
                                : (std::uint32_t{1} << g_.vertex_count()) - 1;
    std::vector<Edge> pairs;
    std::uint32_t rest = all;
    while (rest) {
      const Vertex v = static_cast<Vertex>(__builtin_ctz(rest));
      const std::uint32_t without = rest & ~(std::uint32_t{1} << v);
      const int skip = best(without);
      Vertex chosen = kNone;
      for (std::uint32_t c = adj_[v] & without; c; c &= c - 1) {
        const Vertex w = static_cast<Vertex>(__builtin_ctz(c));
        if (1 + best(without & ~(std::uint32_t{1} << w)) > skip) {
          chosen = w;
          break;
        }
      }
      if (chosen == kNone) {
        rest = without;
      } else {
        pairs.emplace_back(v, chosen);
        rest = without & ~(std::uint32_t{1} << chosen);
      }
    }
    return Matching(std::move(pairs));
  }

 private:
  int best(std::uint32_t rest) {
    if (rest == 0) return 0;
    if (auto it = memo_.find(rest); it != memo_.end()) return it->second;
    const Vertex v = static_cast<Vertex>(__builtin_ctz(rest));
    const std::uint32_t without = rest & ~(std::uint32_t{1} << v);
    int value = best(without);
    for (std::uint32_t c = adj_[v] & without; c; c &= c - 1) {
      const Vertex w = static_cast<Vertex>(__builtin_ctz(c));
      value = std::max(value, 1 + best(without & ~(std::uint32_t{1} << w)));
    }
    memo_.emplace(rest, value);
    return value;
  }

  const FiniteGraph& g_;
  std::vector<std::uint32_t> adj_;
  std::unordered_map<std::uint32_t, int> memo_;
};

void enumerate(const FiniteGraph& g, std::vector<char>& used,
               std::vector<Edge>& current, std::vector<Matching>& out) {
  Vertex v = 0;
  while (v < used.size() && used[v]) ++v;
  if (v == used.size()) {
    out.emplace_back(current);
    return;
  }
  used[v] = 1;
  for (Vertex w : g.neighbors(v)) {
    if (used[w]) continue;
    used[w] = 1;
    current.emplace_back(v, w);
    enumerate(g, used, current, out);
    current.pop_back();
    used[w] = 0;
  }
  used[v] = 0;
}

}  // namespace

Matching max_matching(const FiniteGraph& g) {
  if (is_bipartite(g)) return bipartite_max_matching(g);
  require_exhaustive_size(g);
  return ExhaustiveMatcher(g).run();
}

bool has_perfect_matching(const FiniteGraph& g) {
  if (g.vertex_count() % 2 != 0) return false;
  return 2 * max_matching(g).size() == g.vertex_count();
}

std::vector<Matching> enumerate_perfect_matchings(const FiniteGraph& g,
                                                  std::size_t vertex_limit) {
  require_exhaustive_size(g, vertex_limit);
  std::vector<Matching> out;
  if (g.vertex_count() % 2 != 0) return out;
  std::vector<char> used(g.vertex_count(), 0);
  std::vector<Edge> current;
  enumerate(g, used, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::variant<Matching, GreedyFailure> greedy_forest_matching(
    const FiniteGraph& g) {
  if (!is_acyclic(g)) {
    throw InvalidArgument("greedy forest matching needs an acyclic graph");
  }
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::vector<char> gone(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<Edge> pairs;
  auto remove = [&](Vertex v) {
    gone[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (!gone[w]) --deg[w];
    }
  };
  for (std::size_t left = n; left > 0; left -= 2) {
    Vertex leaf = kNone;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      if (deg[v] == 0) return GreedyFailure{v};
      if (deg[v] == 1 && leaf == kNone) leaf = v;
    }
    // A nonempty forest without isolated vertices always has a leaf.
    Vertex other = kNone;
    for (Vertex w : g.neighbors(leaf)) {
      if (!gone[w]) other = w;
    }
    pairs.emplace_back(leaf, other);
    remove(leaf);
    remove(other);
  }
  return Matching(std::move(pairs));
}

}  // namespace endmatch::oracle
