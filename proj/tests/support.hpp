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

// Generators and independent reference computations shared by the tests and
// the acceptance runner.

#ifndef ENDMATCH_TESTS_SUPPORT_HPP_
#define ENDMATCH_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "endmatch/automatic_tree.hpp"
#include "endmatch/finite_graph.hpp"

namespace endmatch::testing {

inline constexpr std::uint64_t kSeed = 20260214;

inline std::vector<std::vector<Vertex>> adjacency(const FiniteGraph& g) {
  std::vector<std::vector<Vertex>> adj(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  }
  return adj;
}

// AHU code of the tree rooted at r.
inline std::string rooted_code(const std::vector<std::vector<Vertex>>& adj,
                               Vertex r, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : adj[r]) {
    if (w != parent) kids.push_back(rooted_code(adj, w, r));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

// Isomorphism-invariant code of a tree, rooted at its center(s).
inline std::string tree_code(const FiniteGraph& g) {
  const auto adj = adjacency(g);
  const std::size_t n = g.vertex_count();
  if (n <= 1) return n == 0 ? "" : "()";
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = adj[v].size();
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t left = n;
  while (left > 2) {
    left -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : adj[v]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    std::string code = rooted_code(adj, c, static_cast<Vertex>(-1));
    if (best.empty() || code < best) best = code;
  }
  return best;
}

// One representative of every unlabeled tree on n vertices, each grown from
// a smaller tree by attaching a leaf.
inline std::vector<FiniteGraph> all_trees(std::size_t n) {
  std::vector<FiniteGraph> level{FiniteGraph(1, std::vector<Edge>{})};
  if (n == 0) return {FiniteGraph()};
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::string, FiniteGraph> grown;
    for (const auto& g : level) {
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<Edge> edges = g.edges();
        edges.emplace_back(v, static_cast<Vertex>(size - 1));
        FiniteGraph h(size, edges);
        grown.emplace(tree_code(h), std::move(h));
      }
    }
    level.clear();
    for (auto& [code, g] : grown) level.push_back(std::move(g));
  }
  return level;
}

// Uniform labeled tree on n >= 2 vertices from a random Pruefer sequence.
inline FiniteGraph random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n <= 1) return FiniteGraph(n, std::vector<Edge>{});
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<std::size_t> deg(n, 1);
  for (Vertex c : code) ++deg[c];
  std::vector<Edge> edges;
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, c);
    --deg[leaf];
    --deg[c];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 1) last.push_back(v);
  }
  edges.emplace_back(last[0], last[1]);
  return FiniteGraph(n, edges);
}

// A random tree on 1..max_n vertices with each edge dropped with
// probability 1/4.
inline FiniteGraph random_forest(std::size_t max_n, std::mt19937_64& rng) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  const FiniteGraph t = random_tree(n, rng);
  std::vector<Edge> kept;
  std::bernoulli_distribution drop(0.25);
  for (const auto& e : t.edges()) {
    if (!drop(rng)) kept.push_back(e);
  }
  return FiniteGraph(n, kept);
}

// A random simple graph with edge probability p.
inline FiniteGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (keep(rng)) edges.emplace_back(a, b);
    }
  }
  return FiniteGraph(n, edges);
}

// Maximum matching size by branching on the least uncovered vertex.
inline std::size_t brute_matching_size(const FiniteGraph& g) {
  std::vector<char> used(g.vertex_count(), 0);
  std::function<std::size_t(Vertex)> best = [&](Vertex from) -> std::size_t {
    while (from < g.vertex_count() && used[from]) ++from;
    if (from >= g.vertex_count()) return 0;
    used[from] = 1;
    std::size_t result = best(from + 1);
    for (Vertex w : g.neighbors(from)) {
      if (used[w]) continue;
      used[w] = 1;
      result = std::max(result, 1 + best(from + 1));
      used[w] = 0;
    }
    used[from] = 0;
    return result;
  };
  return best(0);
}

// Number of perfect matchings by the same branching.
inline std::size_t brute_perfect_count(const FiniteGraph& g) {
  std::vector<char> used(g.vertex_count(), 0);
  std::function<std::size_t(Vertex)> count = [&](Vertex from) -> std::size_t {
    while (from < g.vertex_count() && used[from]) ++from;
    if (from >= g.vertex_count()) return 1;
    std::size_t total = 0;
    used[from] = 1;
    for (Vertex w : g.neighbors(from)) {
      if (used[w]) continue;
      used[w] = 1;
      total += count(from + 1);
      used[w] = 0;
    }
    used[from] = 0;
    return total;
  };
  return count(0);
}

// Induced subgraph of a tree on a finite vertex set, in set order.
inline FiniteGraph induced_tree_graph(const AutomaticTree& t,
                                      const std::set<TreeVertex>& s) {
  const std::vector<TreeVertex> order(s.begin(), s.end());
  std::vector<Edge> edges;
  for (Vertex i = 0; i < order.size(); ++i) {
    for (Vertex j = i + 1; j < order.size(); ++j) {
      if (t.adjacent(order[i], order[j])) edges.emplace_back(i, j);
    }
  }
  return FiniteGraph(order.size(), edges);
}

// Breadth-first distance in window(t, depth) from u to v.
inline std::size_t window_distance(const AutomaticTree& t, std::size_t depth,
                                   const TreeVertex& u, const TreeVertex& v) {
  std::map<TreeVertex, std::size_t> dist{{u, 0}};
  std::vector<TreeVertex> queue{u};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const TreeVertex x = queue[i];
    if (x == v) return dist[x];
    for (const auto& w : t.neighbors(x)) {
      if (w.depth() <= depth && dist.emplace(w, dist[x] + 1).second) {
        queue.push_back(w);
      }
    }
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace endmatch::testing

#endif  // ENDMATCH_TESTS_SUPPORT_HPP_
