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

#include "endmatch/matcher.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "endmatch/error.hpp"

namespace endmatch {
namespace {

void require_degree_two(const AutomaticTree& t) {
  if (t.min_degree() < 2) {
    throw InvalidArgument("construction needs degree >= 2 at every vertex");
  }
}

// First neighbor of u other than `excluded`: children by index, then parent.
TreeVertex free_neighbor(const AutomaticTree& t, const TreeVertex& u,
                         const std::optional<TreeVertex>& excluded) {
  const std::size_t b = t.child_count(u);
  for (ChildIndex i = 0; i < b; ++i) {
    TreeVertex c = u.child(i);
    if (c != excluded) return c;
  }
  if (!u.is_root()) {
    TreeVertex p = u.parent();
    if (p != excluded) return p;
  }
  throw InvalidArgument("vertex " + to_string(u) + " has no free neighbor");
}

std::vector<TreeVertex> tree_path(const TreeVertex& a, const TreeVertex& b) {
  const std::size_t l = common_prefix_length(a, b);
  std::vector<TreeVertex> path;
  for (std::size_t k = a.depth(); k > l; --k) path.push_back(a.prefix(k));
  path.push_back(a.prefix(l));
  for (std::size_t k = l + 1; k <= b.depth(); ++k) path.push_back(b.prefix(k));
  return path;
}

bool is_odd(LinePos x) { return x % 2 != 0; }

// Shortest period, then shortest preperiod, of the same word.
EndDescriptor canonical_end(const EndDescriptor& e) {
  std::vector<ChildIndex> period = e.period();
  for (std::size_t p = 1; p < period.size(); ++p) {
    if (period.size() % p != 0) continue;
    bool repeats = true;
    for (std::size_t i = p; i < period.size() && repeats; ++i) {
      repeats = period[i] == period[i - p];
    }
    if (repeats) {
      period.resize(p);
      break;
    }
  }
  std::vector<ChildIndex> pre = e.preperiod();
  while (!pre.empty() && pre.back() == period.back()) {
    pre.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  return EndDescriptor(std::move(pre), std::move(period));
}

// Branching positions at odd distance from a neighboring branching position,
// the selection of one endpoint from each even gap between consecutive such
// positions, and the positions left to be matched off the line.
class LineParity {
 public:
  explicit LineParity(const TreeLine& line) : line_(line) {}

  bool odd_endpoint(LinePos q) const {
    if (!line_.branches_at(q)) return false;
    for (int dir : {-1, 1}) {
      auto n = line_.next_branching(q, dir);
      if (n && is_odd(*n - q)) return true;
    }
    return false;
  }

  std::optional<LinePos> next_odd_endpoint(LinePos q, int dir) const {
    return line_.scan(q, dir, [this](LinePos x) { return odd_endpoint(x); });
  }

  // The member of an even pair x < y that stays on the line: the one nearer
  // position 0, ties toward the positive end.
  static LinePos kept(LinePos x, LinePos y) {
    const LinePos ax = x < 0 ? -x : x;
    const LinePos ay = y < 0 ? -y : y;
    return ax < ay ? x : y;
  }

  bool kept_on_line(LinePos q) const {
    for (int dir : {-1, 1}) {
      auto n = next_odd_endpoint(q, dir);
      if (n && !is_odd(*n - q) &&
          kept(std::min(q, *n), std::max(q, *n)) == q) {
        return true;
      }
    }
    return false;
  }

  bool leaves_line(LinePos q) const {
    return odd_endpoint(q) && !kept_on_line(q);
  }

  bool odd_endpoints_unbounded(int dir) const {
    const LinePos far =
        dir * (line_.periodic_start(dir) + 3 * line_.period(dir));
    return next_odd_endpoint(far, dir).has_value();
  }

 private:
  const TreeLine& line_;
};

}  // namespace

MatchingOracle MatchingOracle::empty() {
  return MatchingOracle([](const TreeVertex&) { return false; },
                        [](const TreeVertex& v) -> TreeVertex {
                          throw InvalidArgument("vertex " + to_string(v) +
                                                " outside matching domain");
                        });
}

TreeVertex MatchingOracle::partner(const TreeVertex& v) const {
  if (!in_domain(v)) {
    throw InvalidArgument("vertex " + to_string(v) + " outside matching domain");
  }
  return partner_(v);
}

TreeVertex layered_partner(const AutomaticTree& t, const TreeVertex& anchor,
                           const std::optional<TreeVertex>& blocked,
                           bool anchor_taken, const TreeVertex& v) {
  if (anchor_taken && !blocked) {
    throw InvalidArgument("a taken anchor needs its partner as blocked vertex");
  }
  const auto path = tree_path(anchor, v);
  if (blocked && std::find(path.begin(), path.end(), *blocked) != path.end()) {
    throw InvalidArgument("vertex " + to_string(v) +
                          " is not in the component of the anchor");
  }
  std::optional<TreeVertex> prev = blocked;
  bool up = anchor_taken;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const bool chosen = !up && path[i + 1] == free_neighbor(t, path[i], prev);
    prev = path[i];
    up = chosen;
  }
  if (up) return *prev;
  return free_neighbor(t, path.back(), prev);
}

MatchingOracle rooted_matching(const AutomaticTree& t) {
  if (t.min_branch() < 1) {
    throw InvalidArgument("rooted matching needs a child at every vertex");
  }
  auto tree = std::make_shared<const AutomaticTree>(t);
  return MatchingOracle(
      [tree](const TreeVertex& v) { return tree->is_valid(v); },
      [tree](const TreeVertex& v) {
        return layered_partner(*tree, TreeVertex{}, std::nullopt, false, v);
      });
}

MatchingOracle rerooted_matching(const AutomaticTree& t,
                                 const TreeVertex& center) {
  require_degree_two(t);
  t.state_of(center);
  auto tree = std::make_shared<const AutomaticTree>(t);
  return MatchingOracle(
      [tree](const TreeVertex& v) { return tree->is_valid(v); },
      [tree, center](const TreeVertex& v) {
        return layered_partner(*tree, center, std::nullopt, false, v);
      });
}

FiniteGraph generated_graph(std::span<const Vertex> f) {
  std::vector<Edge> edges;
  for (Vertex x = 0; x < f.size(); ++x) {
    if (f[x] >= f.size()) {
      throw InvalidArgument("image of " + std::to_string(x) + " out of range");
    }
    if (f[x] == x) {
      throw InvalidArgument("fixed point at " + std::to_string(x));
    }
    edges.emplace_back(x, f[x]);
  }
  return FiniteGraph(f.size(), edges);
}

std::variant<Matching, OddCycle> bijection_graph_matching(
    std::span<const Vertex> perm) {
  generated_graph(perm);
  std::vector<char> hit(perm.size(), 0);
  for (Vertex y : perm) hit[y] = 1;
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
    throw InvalidArgument("not a permutation");
  }
  std::vector<char> seen(perm.size(), 0);
  std::vector<Edge> pairs;
  for (Vertex start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> cycle;
    for (Vertex x = start; !seen[x]; x = perm[x]) {
      seen[x] = 1;
      cycle.push_back(x);
    }
    if (cycle.size() % 2 != 0) return OddCycle{std::move(cycle)};
    for (std::size_t i = 0; i < cycle.size(); i += 2) {
      pairs.emplace_back(cycle[i], cycle[i + 1]);
    }
  }
  return Matching(std::move(pairs));
}

LineReport line_report(const TreeLine& line) {
  LineReport r{line.divergence_vertex(), line.positive_end(),
               line.negative_end(), {}, {}, {}, false};
  for (int dir : {1, -1}) {
    SideProfile& s = dir > 0 ? r.positive_side : r.negative_side;
    s.periodic_start = line.periodic_start(dir);
    s.period = line.period(dir);
    for (LinePos q = 1; q < s.periodic_start + s.period; ++q) {
      if (!line.branches_at(dir * q)) continue;
      (q < s.periodic_start ? s.before_cycle : s.cycle).push_back(q);
    }
    s.unbounded = !s.cycle.empty();
  }
  const LinePos lo =
      -(r.negative_side.periodic_start + 2 * r.negative_side.period);
  const LinePos hi =
      r.positive_side.periodic_start + 2 * r.positive_side.period;
  std::optional<LinePos> last;
  for (LinePos q = lo; q <= hi; ++q) {
    if (!line.branches_at(q)) continue;
    if (last) {
      r.gaps.emplace_back(*last, q);
      r.has_odd_gap = r.has_odd_gap || is_odd(q - *last);
    }
    last = q;
  }
  return r;
}

bool BSet::contains(const TreeVertex& v) const {
  switch (kind) {
    case Kind::kEmpty:
      return false;
    case Kind::kInjectivePart:
      return true;
    case Kind::kLine:
      return line->contains(v);
  }
  return false;
}

std::string to_string(BSet::Kind kind) {
  switch (kind) {
    case BSet::Kind::kEmpty:
      return "empty";
    case BSet::Kind::kInjectivePart:
      return "injective-part";
    case BSet::Kind::kLine:
      return "line";
  }
  return "?";
}

EndsOutput one_end_matching(const AutomaticTree& t, const EndDescriptor& e,
                            std::size_t budget) {
  require_degree_two(t);
  validate_end(t, e);
  auto tree = std::make_shared<const AutomaticTree>(t);
  // The line through the ray and the chain of first children below the
  // root's first child off the ray.
  const ChildIndex side = e.at(0) == 0 ? 1 : 0;
  TreeLine line(tree, e, EndDescriptor({side}, {0}), budget);
  EndsOutput out;
  out.line = line_report(line);
  const bool branching = line.branches_at(0) ||
                         line.next_branching(0, 1).has_value() ||
                         line.next_branching(0, -1).has_value();
  if (!branching) {
    out.b_set = BSet{BSet::Kind::kInjectivePart, line};
    out.construction = "none";
    return out;
  }
  if (!line.branching_unbounded(1) || !line.branching_unbounded(-1)) {
    out.oracle = rooted_matching(t);
    out.construction = "layered";
    return out;
  }
  // Branching position a is skipped on the line iff the next branching
  // position toward the end is at odd distance.
  auto skipped = [](const TreeLine& l, LinePos a) {
    return is_odd(*l.next_branching(a, 1) - a);
  };
  out.oracle = MatchingOracle(
      [tree](const TreeVertex& v) { return tree->is_valid(v); },
      [tree, line, skipped](const TreeVertex& v) {
        if (auto p = line.position_of(v)) {
          const LinePos a =
              line.branches_at(*p) ? *p : *line.next_branching(*p, -1);
          const bool skip = skipped(line, a);
          const LinePos k = *p - a;
          if (skip && k == 0) return *line.first_off_line(a);
          const bool forward = skip ? is_odd(k) : !is_odd(k);
          return line.vertex_at(*p + (forward ? 1 : -1));
        }
        auto [y, h] = line.attachment(v);
        const LinePos py = *line.position_of(y);
        const bool taken = line.branches_at(py) && skipped(line, py) &&
                           h == *line.first_off_line(py);
        return layered_partner(*tree, h, y, taken, v);
      });
  out.construction = "function-parity";
  return out;
}

EndsOutput two_end_matching(const AutomaticTree& t, const EndDescriptor& e1,
                            const EndDescriptor& e2, std::size_t budget) {
  require_degree_two(t);
  if (ends_equivalent(t, e1, e2)) {
    throw InvalidArgument("ends " + to_string(e1) + " and " + to_string(e2) +
                          " are equivalent");
  }
  auto tree = std::make_shared<const AutomaticTree>(t);
  TreeLine line(tree, e1, e2, budget);
  EndsOutput out;
  out.line = line_report(line);
  if (!out.line->has_odd_gap) {
    out.b_set = BSet{BSet::Kind::kLine, line};
    out.oracle = MatchingOracle(
        [tree, line](const TreeVertex& v) {
          return tree->is_valid(v) && !line.contains(v);
        },
        [tree, line](const TreeVertex& v) {
          auto [y, h] = line.attachment(v);
          return layered_partner(*tree, h, y, false, v);
        });
    out.construction = "hanging";
    return out;
  }
  const LineParity parity(line);
  if (!parity.odd_endpoints_unbounded(1) ||
      !parity.odd_endpoints_unbounded(-1)) {
    out.oracle = rooted_matching(t);
    out.construction = "layered";
    return out;
  }
  out.oracle = MatchingOracle(
      [tree](const TreeVertex& v) { return tree->is_valid(v); },
      [tree, line](const TreeVertex& v) {
        const LineParity parity(line);
        if (auto p = line.position_of(v)) {
          if (parity.leaves_line(*p)) return *line.first_off_line(*p);
          const LinePos d = *line.scan(
              *p, -1, [&](LinePos q) { return parity.leaves_line(q); });
          return line.vertex_at(*p + (is_odd(*p - d) ? 1 : -1));
        }
        auto [y, h] = line.attachment(v);
        const LinePos py = *line.position_of(y);
        const bool taken =
            parity.leaves_line(py) && h == *line.first_off_line(py);
        return layered_partner(*tree, h, y, taken, v);
      });
  out.construction = "line-parity";
  return out;
}

TreeVertex tripod_center(const EndDescriptor& a, const EndDescriptor& b,
                         const EndDescriptor& c) {
  const std::size_t ab = divergence_index(a, b);
  const std::size_t ac = divergence_index(a, c);
  const std::size_t bc = divergence_index(b, c);
  if (ab >= ac && ab >= bc) return a.prefix(ab);
  if (ac >= bc) return a.prefix(ac);
  return b.prefix(bc);
}

EndsOutput many_end_matching(const AutomaticTree& t,
                             std::span<const EndDescriptor> ends) {
  require_degree_two(t);
  if (ends.size() < 3) {
    throw InvalidArgument("many-end matching needs at least 3 ends");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    validate_end(t, ends[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (ends_equivalent(t, ends[i], ends[j])) {
        throw InvalidArgument("ends " + to_string(ends[j]) + " and " +
                              to_string(ends[i]) + " are equivalent");
      }
    }
  }
  EndsOutput out;
  out.oracle =
      rerooted_matching(t, tripod_center(ends[0], ends[1], ends[2]));
  out.construction = "layered";
  return out;
}

std::vector<EndDescriptor> distinct_ends(const AutomaticTree& t,
                                         std::span<const EndDescriptor> ends) {
  std::vector<EndDescriptor> out;
  for (const auto& e : ends) {
    validate_end(t, e);
    out.push_back(canonical_end(e));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return compare_ends(a, b) < 0;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [&](const auto& a, const auto& b) {
                          return ends_equivalent(t, a, b);
                        }),
            out.end());
  return out;
}

EndsOutput match_ends(const AutomaticTree& t,
                      std::span<const EndDescriptor> ends,
                      std::size_t budget) {
  const auto distinct = distinct_ends(t, ends);
  switch (distinct.size()) {
    case 0:
      throw InvalidArgument("no ends selected");
    case 1:
      return one_end_matching(t, distinct[0], budget);
    case 2:
      return two_end_matching(t, distinct[0], distinct[1], budget);
    default:
      return many_end_matching(t, distinct);
  }
}

std::optional<std::string> check_window(const AutomaticTree& t,
                                        const MatchingOracle& oracle,
                                        std::size_t depth) {
  try {
    for (const auto& v : vertices_up_to(t, depth)) {
      if (!oracle.in_domain(v)) continue;
      const TreeVertex p = oracle.partner(v);
      if (!t.is_valid(p) || !t.adjacent(v, p)) {
        return "partner " + to_string(p) + " of " + to_string(v) +
               " is not a neighbor";
      }
      if (!oracle.in_domain(p) || oracle.partner(p) != v) {
        return "partner of " + to_string(p) + " is not " + to_string(v);
      }
    }
  } catch (const Error& e) {
    return std::string("oracle failed: ") + e.what();
  }
  return std::nullopt;
}

ConclusionReport verify_conclusions(const AutomaticTree& t,
                                    const EndsOutput& out, std::size_t depth) {
  ConclusionReport r;
  auto fail = [&r](bool& flag, const std::string& why) {
    if (flag && r.failure.empty()) r.failure = why;
    flag = false;
  };
  const TreeWindow w = window(t, depth);
  std::vector<Vertex> in_b;
  std::optional<std::size_t> parity;
  for (Vertex i = 0; i < w.labels.size(); ++i) {
    const TreeVertex& v = w.labels[i];
    const bool b = out.b_set.contains(v);
    if (b == out.oracle.in_domain(v)) {
      fail(r.perfect_off_b, "domain disagrees with B at " + to_string(v));
    }
    if (!b) continue;
    in_b.push_back(i);
    std::size_t b_neighbors = 0;
    for (const auto& u : t.neighbors(v)) b_neighbors += out.b_set.contains(u);
    if (b_neighbors != 2) {
      fail(r.two_regular, "vertex " + to_string(v) + " has " +
                              std::to_string(b_neighbors) + " neighbors in B");
    }
    if (t.degree(v) >= 3) {
      if (parity && *parity != v.depth() % 2) {
        fail(r.no_odd_pair, "branching vertices of B at odd distance");
      }
      parity = v.depth() % 2;
    }
  }
  if (components(w.graph.induced(in_b)).size() > 1) {
    fail(r.single_component, "B meets the window in several components");
  }
  if (auto why = check_window(t, out.oracle, depth)) {
    fail(r.perfect_off_b, *why);
  }
  if (out.b_set.kind != BSet::Kind::kEmpty && !has_bad_ray(t)) {
    fail(r.empty_without_bad_ray, "B is nonempty but no bad ray exists");
  }
  return r;
}

}  // namespace endmatch
