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

#include "endmatch/derivative.hpp"

#include <algorithm>
#include <map>

#include "endmatch/error.hpp"

namespace endmatch {
namespace {

constexpr Vertex kOutside = static_cast<Vertex>(-1);

std::vector<Vertex> members(const std::vector<char>& in) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < in.size(); ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

struct RawOutcome {
  std::vector<char> in_core;
  std::vector<Edge> forced;  // second may be kOutside
  std::vector<std::vector<Vertex>> trace;
  std::optional<DerivativeConflict> conflict;
  std::size_t rounds = 0;
  bool stabilized = false;
};

// `outside[v]` counts neighbors of v that live outside g and are never
// removed.
RawOutcome run_derivative(const FiniteGraph& g,
                          const std::vector<std::size_t>& outside,
                          std::size_t max_rounds) {
  const std::size_t n = g.vertex_count();
  RawOutcome r;
  r.in_core.assign(n, 1);
  r.trace.push_back(members(r.in_core));
  std::vector<std::size_t> deg(n);
  for (; r.rounds < max_rounds; ++r.rounds) {
    for (Vertex v = 0; v < n; ++v) {
      if (!r.in_core[v]) continue;
      deg[v] = outside[v];
      for (Vertex w : g.neighbors(v)) deg[v] += r.in_core[w];
    }
    std::vector<Vertex> dropped;
    for (Vertex v = 0; v < n; ++v) {
      if (r.in_core[v] && deg[v] < 2) dropped.push_back(v);
    }
    if (dropped.empty()) {
      r.stabilized = true;
      return r;
    }
    const std::size_t stage = r.trace.size() - 1;
    std::map<Vertex, std::vector<Vertex>> claims;
    std::vector<Edge> outward;
    for (Vertex v : dropped) {
      if (deg[v] == 0) {
        r.conflict = DerivativeConflict{DerivativeConflict::Kind::kIsolated,
                                        v, {}, stage, r.trace};
        return r;
      }
      Vertex mate = kOutside;
      for (Vertex w : g.neighbors(v)) {
        if (r.in_core[w]) mate = w;
      }
      if (mate == kOutside) {
        outward.emplace_back(v, kOutside);
      } else {
        claims[mate].push_back(v);
      }
    }
    for (const auto& [mate, who] : claims) {
      if (who.size() > 1) {
        r.conflict = DerivativeConflict{DerivativeConflict::Kind::kContested,
                                        mate, who, stage, r.trace};
        return r;
      }
    }
    for (Vertex v : dropped) r.in_core[v] = 0;
    r.trace.push_back(members(r.in_core));
    for (const auto& [mate, who] : claims) {
      const Vertex v = who.front();
      // Two adjacent degree-one vertices claim each other; record once.
      if (!r.in_core[mate] && mate < v) continue;
      r.forced.emplace_back(v, mate);
      r.in_core[mate] = 0;
    }
    r.forced.insert(r.forced.end(), outward.begin(), outward.end());
    r.trace.push_back(members(r.in_core));
  }
  return r;
}

}  // namespace

DerivativeOutcome derive(const FiniteGraph& g) {
  std::vector<std::size_t> outside(g.vertex_count(), 0);
  RawOutcome r = run_derivative(g, outside, g.vertex_count() + 1);
  if (r.conflict) return *std::move(r.conflict);
  if (!r.stabilized) {
    throw InvariantViolation("derivative did not stabilize on a finite graph");
  }
  DerivativeResult out;
  out.core = members(r.in_core);
  out.forced = Matching(std::move(r.forced));
  out.trace = std::move(r.trace);
  out.stabilized = true;
  return out;
}

bool conflict_is_witnessed(const FiniteGraph& g, const DerivativeConflict& c) {
  if (c.stage >= c.trace.size()) return false;
  const auto& stage = c.trace[c.stage];
  auto in_stage = [&](Vertex v) {
    return std::binary_search(stage.begin(), stage.end(), v);
  };
  auto stage_degree = [&](Vertex v) {
    std::size_t d = 0;
    for (Vertex w : g.neighbors(v)) d += in_stage(w);
    return d;
  };
  if (!in_stage(c.vertex)) return false;
  if (c.kind == DerivativeConflict::Kind::kIsolated) {
    return stage_degree(c.vertex) == 0;
  }
  if (c.claimants.size() < 2) return false;
  return std::all_of(c.claimants.begin(), c.claimants.end(), [&](Vertex v) {
    return in_stage(v) && stage_degree(v) == 1 && g.has_edge(v, c.vertex);
  });
}

WindowDerivative derive_window(const AutomaticTree& t, std::size_t depth,
                               std::size_t max_rounds,
                               std::size_t vertex_budget) {
  if (depth < 2) throw InvalidArgument("derive_window needs depth >= 2");
  WindowDerivative out;
  out.window = window(t, depth, vertex_budget);
  const auto& labels = out.window.labels;
  std::vector<std::size_t> outside(labels.size(), 0);
  for (Vertex v = 0; v < labels.size(); ++v) {
    if (labels[v].depth() == depth) outside[v] = t.child_count(labels[v]);
  }
  RawOutcome r = run_derivative(out.window.graph, outside, max_rounds);
  out.rounds = r.rounds;
  out.stabilized = r.stabilized;
  out.conflict = std::move(r.conflict);
  for (Vertex v : members(r.in_core)) out.core.push_back(labels[v]);
  for (auto [a, b] : r.forced) {
    if (b == kOutside) {
      // The only surviving neighbor is the sole child below the window.
      out.forced.emplace_back(labels[a], labels[a].child(0));
    } else {
      out.forced.emplace_back(std::min(labels[a], labels[b]),
                              std::max(labels[a], labels[b]));
    }
  }
  std::sort(out.forced.begin(), out.forced.end());
  return out;
}

}  // namespace endmatch
