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

#include "endmatch/subdivision.hpp"

#include <algorithm>
#include <string>

#include "endmatch/error.hpp"
#include "endmatch/matcher.hpp"

namespace endmatch {

Vertex SubdivisionGraph::edge_vertex(Vertex a, Vertex b) const {
  const Label key{true, std::min(a, b), std::max(a, b)};
  auto first = labels.begin() + static_cast<std::ptrdiff_t>(point_count);
  auto it = std::lower_bound(first, labels.end(), key,
                             [](const Label& x, const Label& y) {
                               return std::pair(x.a, x.b) < std::pair(y.a, y.b);
                             });
  if (it == labels.end() || !(*it == key)) {
    throw InvalidArgument("{" + std::to_string(a) + ", " + std::to_string(b) +
                          "} is not an edge");
  }
  return static_cast<Vertex>(it - labels.begin());
}

SubdivisionGraph subdivide(const FiniteGraph& g) {
  SubdivisionGraph s;
  s.point_count = g.vertex_count();
  for (Vertex x = 0; x < g.vertex_count(); ++x) s.labels.push_back({false, x, 0});
  std::vector<Edge> incidences;
  for (auto [a, b] : g.edges()) {
    const Vertex e = s.labels.size();
    s.labels.push_back({true, a, b});
    incidences.emplace_back(a, e);
    incidences.emplace_back(b, e);
  }
  s.graph = FiniteGraph(s.labels.size(), incidences);
  return s;
}

Matching orientation_to_matching(const FiniteGraph& g,
                                 std::span<const Vertex> f) {
  if (f.size() != g.vertex_count()) {
    throw InvalidArgument("function size does not match the graph");
  }
  for (Vertex x = 0; x < f.size(); ++x) {
    if (f[x] >= f.size()) {
      throw InvalidArgument("image of " + std::to_string(x) + " out of range");
    }
    if (f[x] == x) throw InvalidArgument("f fixes " + std::to_string(x));
  }
  for (Vertex x = 0; x < f.size(); ++x) {
    if (f[f[x]] == x) {
      throw InvalidArgument("f o f fixes " + std::to_string(x));
    }
  }
  if (!(generated_graph(f) == g)) {
    throw InvalidArgument("function does not generate the graph");
  }
  const SubdivisionGraph s = subdivide(g);
  std::vector<Edge> pairs;
  for (Vertex x = 0; x < f.size(); ++x) {
    pairs.emplace_back(x, s.edge_vertex(x, f[x]));
  }
  Matching m(std::move(pairs));
  if (!is_perfect_matching_of(m, s.graph)) {
    throw InvariantViolation("orientation did not give a perfect matching");
  }
  return m;
}

std::vector<Vertex> matching_to_orientation(const FiniteGraph& g,
                                            const Matching& m) {
  const SubdivisionGraph s = subdivide(g);
  if (!is_perfect_matching_of(m, s.graph)) {
    throw InvalidArgument("not a perfect matching of the subdivision");
  }
  std::vector<Vertex> f(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    const auto& e = s.labels[*m.partner(x)];
    f[x] = e.a == x ? e.b : e.a;
  }
  return f;
}

}  // namespace endmatch
