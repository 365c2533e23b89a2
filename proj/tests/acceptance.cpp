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

// Acceptance runner: one PASS/FAIL line per criterion. Every criterion is an
// exact check; the time limit is part of the pass condition.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "endmatch/baire.hpp"
#include "endmatch/battery.hpp"
#include "endmatch/counterexample.hpp"
#include "endmatch/derivative.hpp"
#include "endmatch/error.hpp"
#include "endmatch/formats.hpp"
#include "endmatch/matcher.hpp"
#include "endmatch/oracle.hpp"
#include "endmatch/subdivision.hpp"
#include "support.hpp"

namespace endmatch {
namespace {

namespace fs = std::filesystem;

struct Verdict {
  bool ok = true;
  std::string detail;  // deterministic summary, compared across runs

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  Verdict (*run)();
};

// Involution into tree edges, total on every vertex of depth <= depth that
// `skip` rejects and absent on the others.
std::optional<std::string> window_total(
    const AutomaticTree& t, const MatchingOracle& m, std::size_t depth,
    const std::function<bool(const TreeVertex&)>& skip = nullptr) {
  for (const auto& v : vertices_up_to(t, depth)) {
    if (skip && skip(v)) {
      if (m.in_domain(v)) return "vertex " + to_string(v) + " of B is matched";
      continue;
    }
    if (!m.in_domain(v)) return "vertex " + to_string(v) + " is unmatched";
    const TreeVertex p = m.partner(v);
    if (!t.adjacent(v, p)) return "non-edge at " + to_string(v);
    if (!m.in_domain(p) || m.partner(p) != v) {
      return "not an involution at " + to_string(v);
    }
    if (skip && skip(p)) return "partner of " + to_string(v) + " lies in B";
  }
  return std::nullopt;
}

// --- 1 -------------------------------------------------------------------

Verdict derivative_completeness() {
  Verdict v;
  std::size_t graphs = 0;
  std::size_t perfect = 0;
  auto check = [&](const FiniteGraph& g) {
    ++graphs;
    const auto o = derive(g);
    const bool expected = oracle::has_perfect_matching(g);
    if (std::holds_alternative<DerivativeResult>(o) != expected) {
      v.fail("derive disagrees with the oracle on\n" + print_graph(g));
      return;
    }
    if (expected) {
      ++perfect;
      if (!is_perfect_matching_of(std::get<DerivativeResult>(o).forced, g)) {
        v.fail("forced is not perfect on\n" + print_graph(g));
      }
    }
  };
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& g : testing::all_trees(n)) check(g);
  }
  std::mt19937_64 rng(testing::kSeed + 101);
  for (int i = 0; i < 1000; ++i) check(testing::random_forest(16, rng));
  if (v.ok) {
    v.detail = std::to_string(graphs) + " graphs, " + std::to_string(perfect) +
               " with a perfect matching";
  }
  return v;
}

// --- 2 -------------------------------------------------------------------

Verdict rooted_totality() {
  Verdict v;
  std::size_t trees = 0;
  std::size_t vertices = 0;
  for (const auto& entry : battery::all()) {
    if (entry.tree.min_branch() == 0) continue;
    ++trees;
    const MatchingOracle m = rooted_matching(entry.tree);
    if (auto why = window_total(entry.tree, m, 10)) {
      v.fail(entry.name + ": " + *why);
    }
    vertices += vertices_up_to(entry.tree, 10).size();
  }
  if (trees < 6) v.fail("battery has only " + std::to_string(trees) + " trees");
  if (v.ok) {
    v.detail = std::to_string(trees) + " trees, " + std::to_string(vertices) +
               " vertices at depth <= 10";
  }
  return v;
}

// --- 3 -------------------------------------------------------------------

Verdict ends_final_clause() {
  Verdict v;
  std::size_t lists = 0;
  for (const auto& entry : battery::all()) {
    if (has_bad_ray(entry.tree)) continue;
    for (const auto& ends : entry.end_lists) {
      ++lists;
      const EndsOutput out = match_ends(entry.tree, ends);
      if (out.b_set.kind != BSet::Kind::kEmpty) {
        v.fail(entry.name + ": B is " + to_string(out.b_set.kind));
      }
      if (auto why = window_total(entry.tree, out.oracle, 10)) {
        v.fail(entry.name + " with " + std::to_string(ends.size()) +
               " ends: " + *why);
      }
    }
  }
  const AutomaticTree line = battery::line();
  const std::vector<EndDescriptor> two = {EndDescriptor({}, {0}),
                                          EndDescriptor({1}, {0})};
  const EndsOutput out = match_ends(line, two);
  if (out.b_set.kind != BSet::Kind::kLine) v.fail("line: B is not the line");
  for (std::size_t depth : {4u, 7u, 10u}) {
    const ConclusionReport r = verify_conclusions(line, out, depth);
    if (!r.ok()) v.fail("line conclusions: " + r.failure);
    // B inside the window is a path on all of its vertices.
    const auto window_vertices = vertices_up_to(line, depth);
    std::size_t in_b = 0;
    std::size_t edges = 0;
    for (const auto& a : window_vertices) {
      if (!out.b_set.contains(a)) continue;
      ++in_b;
      std::size_t inside = 0;
      for (const auto& b : line.neighbors(a)) {
        if (b.depth() <= depth && out.b_set.contains(b)) ++inside;
      }
      if (inside > 2 || line.degree(a) != 2) v.fail("line: B not 2-regular");
      edges += inside;
    }
    if (in_b != window_vertices.size() || edges / 2 + 1 != in_b) {
      v.fail("line: B is not one path through the window");
    }
    if (auto why = window_total(line, out.oracle, depth, [&](const auto& x) {
          return out.b_set.contains(x);
        })) {
      v.fail("line: " + *why);
    }
  }
  if (v.ok) {
    v.detail = std::to_string(lists) +
               " end lists with empty B; line keeps B = line";
  }
  return v;
}

// --- 4 -------------------------------------------------------------------

Verdict subdivision_equivalence() {
  Verdict v;
  for (std::size_t n = 3; n <= 12; ++n) {
    const FiniteGraph g = cycle_graph(n);
    const SubdivisionGraph s = subdivide(g);
    const auto all = oracle::enumerate_perfect_matchings(s.graph, 24);
    if (all.size() != 2) {
      v.fail("C" + std::to_string(n) + " has " + std::to_string(all.size()) +
             " perfect matchings");
    }
    for (const auto& m : all) {
      const auto f = matching_to_orientation(g, m);
      if (orientation_to_matching(g, f) != m) {
        v.fail("round trip fails on C" + std::to_string(n));
      }
      if (matching_to_orientation(g, orientation_to_matching(g, f)) != f) {
        v.fail("converse round trip fails on C" + std::to_string(n));
      }
    }
  }
  std::size_t trees = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& g : testing::all_trees(n)) {
      ++trees;
      const SubdivisionGraph s = subdivide(g);
      if (s.graph.vertex_count() % 2 == 0 ||
          oracle::has_perfect_matching(s.graph) ||
          testing::brute_perfect_count(s.graph) != 0) {
        v.fail("a tree on " + std::to_string(n) + " vertices has a matching");
      }
    }
  }
  if (v.ok) {
    v.detail = "C3..C12 with 2 matchings each; " + std::to_string(trees) +
               " trees without";
  }
  return v;
}

// --- 5 -------------------------------------------------------------------

std::vector<TreeVertex> neighbors_left(const AutomaticTree& t,
                                       const TreeVertex& v,
                                       const VertexSet& gone) {
  std::vector<TreeVertex> out;
  for (const auto& w : t.neighbors(v)) {
    if (!gone.contains(w)) out.push_back(w);
  }
  return out;
}

// Every bad path of at most 12 vertices inside the window of X \ s, from
// every start; reports one that meets both the outer boundary of s and the
// inner boundary of t.
std::optional<std::string> crossing_path(const AutomaticTree& t,
                                         const VertexSet& removed,
                                         const ClosurePair& pair,
                                         std::size_t depth) {
  VertexSet gone = removed;
  gone.insert(pair.s.begin(), pair.s.end());
  VertexSet near_s;
  VertexSet near_t;
  for (const auto& v : vertices_up_to(t, depth)) {
    if (gone.contains(v)) continue;
    for (const auto& w : t.neighbors(v)) {
      if (pair.s.contains(w)) near_s.insert(v);
      if (pair.t.contains(v) && !gone.contains(w) && !pair.t.contains(w)) {
        near_t.insert(v);
      }
    }
  }
  std::vector<TreeVertex> path;
  std::optional<std::string> found;
  std::function<void()> grow = [&]() {
    if (found) return;
    const TreeVertex& u = path.back();
    if ((path.size() - 1) % 2 == 0 && neighbors_left(t, u, gone).size() != 2) {
      return;
    }
    const bool meets_s = std::any_of(path.begin(), path.end(),
                                     [&](const auto& x) { return near_s.contains(x); });
    const bool meets_t = std::any_of(path.begin(), path.end(),
                                     [&](const auto& x) { return near_t.contains(x); });
    if (meets_s && meets_t) {
      found = "bad path from " + to_string(path.front()) + " to " +
              to_string(u) + " crosses the buffer of " + to_string(pair.seed);
      return;
    }
    if (path.size() == 12) return;
    for (const auto& w : neighbors_left(t, u, gone)) {
      if (w.depth() > depth) continue;
      if (path.size() >= 2 && w == path[path.size() - 2]) continue;
      path.push_back(w);
      grow();
      path.pop_back();
    }
  };
  for (const auto& start : vertices_up_to(t, depth)) {
    if (gone.contains(start)) continue;
    path = {start};
    grow();
  }
  return found;
}

void sweep_tree(const std::string& name, const AutomaticTree& t, Verdict& v,
                std::size_t& kept_total) {
  constexpr std::size_t kSeedDepth = 3;
  constexpr std::size_t kCheckDepth = 6;
  VertexSet removed;
  for (int round = 0; round < 12; ++round) {
    std::vector<TreeVertex> seeds;
    for (const auto& x : vertices_up_to(t, kSeedDepth)) {
      if (!removed.contains(x)) seeds.push_back(x);
    }
    if (seeds.empty()) return;
    const SweepResult r = sweep_step(t, seeds, removed);
    for (const auto& pair : r.kept) {
      ++kept_total;
      if (pair.s.size() % 2 != 0) v.fail(name + ": odd closure");
      if (!oracle::has_perfect_matching(
              testing::induced_tree_graph(t, pair.s))) {
        v.fail(name + ": closure of " + to_string(pair.seed) +
               " has no perfect matching");
      }
      for (const auto& [a, b] : pair.matching) {
        if (!t.adjacent(a, b)) v.fail(name + ": matching uses a non-edge");
      }
      if (auto why = crossing_path(t, removed, pair, kCheckDepth)) {
        v.fail(name + ": " + *why);
      }
    }
    for (const auto& x : vertices_up_to(t, kCheckDepth)) {
      if (!r.removed.contains(x) &&
          neighbors_left(t, x, r.removed).size() < 2) {
        v.fail(name + ": " + to_string(x) + " drops below degree 2");
      }
    }
    removed = r.removed;
  }
  v.fail(name + ": window not emptied in 12 rounds");
}

Verdict baire_machinery() {
  Verdict v;
  std::size_t kept = 0;
  sweep_tree("ternary", battery::ternary(), v, kept);
  sweep_tree("odd-comb", battery::odd_comb(), v, kept);
  for (std::size_t budget : {16u, 64u, 256u, 1024u, 4096u}) {
    try {
      closure(battery::line(), {}, {}, budget);
      v.fail("line closure fits budget " + std::to_string(budget));
    } catch (const BudgetExceeded& e) {
      if (e.frontier().empty()) v.fail("line: empty frontier");
    }
  }
  if (v.ok) {
    v.detail = std::to_string(kept) +
               " closure pairs checked; line exceeds budgets 16..4096";
  }
  return v;
}

// --- 6 -------------------------------------------------------------------

bool conditions_hold(const LevelSystem& ls) {
  const std::size_t n = ls.n;
  const std::uint64_t size = std::uint64_t{1} << n;
  const auto word = [size](std::uint64_t x) {
    return BinaryWord::from_index(size | x);
  };
  const auto forced_ok = [&](const BinaryWord& u, const BinaryWord& col) {
    for (const auto& rule : ls.s_rules) {
      if (rule.row.is_prefix_of(u) && !rule.column.is_prefix_of(col)) {
        return false;
      }
    }
    return true;
  };
  for (const auto& [u, col] : ls.r) {
    if (!forced_ok(u, col)) return false;  // R inside S
  }
  for (std::uint64_t x = 0; x < size; ++x) {  // condition (1)
    BinaryWord longest;
    for (const auto& rule : ls.s_rules) {
      if (rule.row.is_prefix_of(word(x)) &&
          rule.column.length() > longest.length()) {
        longest = rule.column;
      }
    }
    const std::uint64_t pad = (longest.index() - (std::uint64_t{1} << longest.length()))
                              << (n - longest.length());
    if (!forced_ok(word(x), word(pad))) return false;
  }
  std::vector<char> used(size, 0);  // condition (2)
  for (const auto& [u, col] : ls.r) used[u.index() - size] = 1;
  const std::size_t rules = ls.s_rules.size();
  std::vector<char> blocked_ok(std::size_t{1} << rules, 0);
  for (std::size_t mask = 0; mask < blocked_ok.size(); ++mask) {
    for (std::uint64_t x = 0; x < size && !blocked_ok[mask]; ++x) {
      if (used[x]) continue;
      bool clear = true;
      for (std::size_t i = 0; i < rules && clear; ++i) {
        clear = !((mask >> i) & 1) || !ls.s_rules[i].row.is_prefix_of(word(x));
      }
      blocked_ok[mask] = clear;
    }
  }
  for (std::uint64_t y = 0; y < size; ++y) {
    std::size_t mask = 0;
    for (std::size_t i = 0; i < rules; ++i) {
      if (!ls.s_rules[i].column.is_prefix_of(word(y))) {
        mask |= std::size_t{1} << i;
      }
    }
    if (!blocked_ok[mask]) return false;
  }
  return true;
}

bool r_is_forest(const LevelSystem& ls) {
  const std::uint64_t size = std::uint64_t{1} << ls.n;
  std::vector<std::uint64_t> parent(2 * size);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::uint64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, col] : ls.r) {
    const auto a = find(u.index() - size);
    const auto b = find(col.index());
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

Verdict counterexample_recursion() {
  Verdict v;
  const auto levels = build_levels(16);
  if (levels != build_levels(16)) v.fail("levels differ between builds");
  for (std::size_t n = 0; n <= 16; ++n) {
    const LevelSystem& ls = levels[n];
    if (ls.n != n) v.fail("level index mismatch");
    if (!conditions_hold(ls)) v.fail("conditions fail at level " + std::to_string(n));
    if (!r_is_forest(ls)) v.fail("R has a cycle at level " + std::to_string(n));
    if (n > 0) {
      const std::size_t expected =
          2 * levels[n - 1].r.size() + (n % 2 == 1 ? 1 : 0);
      if (ls.r.size() != expected) {
        v.fail("cardinality recurrence fails at level " + std::to_string(n));
      }
    }
  }
  const auto schedule = schedule_prefix(200);
  std::size_t strings = 0;
  for (std::size_t len = 0; len <= 6; ++len) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << len); ++x) {
      ++strings;
      std::string w(len, '0');
      for (std::size_t b = 0; b < len; ++b) {
        if ((x >> (len - 1 - b)) & 1) w[b] = '1';
      }
      const auto hit = [&](bool rows) {
        return std::any_of(schedule.begin(), schedule.end(), [&](const auto& p) {
          const std::string& s = rows ? p.first : p.second;
          return s.compare(0, w.size(), w) == 0;
        });
      };
      if (!hit(true) || !hit(false)) v.fail("schedule misses '" + w + "'");
    }
  }
  if (v.ok) {
    v.detail = "levels 0..16, |R_16| = " + std::to_string(levels[16].r.size()) +
               ", " + std::to_string(strings) + " strings reached";
  }
  return v;
}

// --- 7 -------------------------------------------------------------------

struct Captured {
  int code = -1;
  std::string out;
};

Captured run_cli(const std::string& args) {
  const std::string command = std::string(ENDMATCH_CLI) + " " + args + " 2>&1";
  Captured c;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return c;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) c.out.append(buf, got);
  const int status = pclose(pipe);
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> cli_commands(const fs::path& dir) {
  const std::string data = ENDMATCH_DATA;
  std::vector<std::string> commands = {
      "derivative --graph " + data + "/p3.g",
      "derivative --graph " + data + "/c6.g",
      "derivative --graph " + data + "/spider.g",
      "subdivide --graph " + data + "/c6.g",
      "subdivide --graph " + data + "/c6.g --function 5,0,1,2,3,4",
      "baire-sweep --tree " + data + "/t3.tree --depth 3 --rounds 6",
      "baire-sweep --tree " + data + "/odd_comb.tree --depth 3 --rounds 6",
      "baire-sweep --tree " + data + "/line.tree --depth 3 --budget 256",
      "counterexample --levels 12",
  };
  for (const auto& entry : battery::all()) {
    const fs::path file = dir / (entry.name + ".tree");
    std::ofstream(file) << print_tree(entry.tree);
    commands.push_back("match-rooted --tree " + file.string() + " --depth 6");
    commands.push_back("derivative --tree " + file.string() + " --depth 5");
    for (const auto& ends : entry.end_lists) {
      std::string args = "match-ends --tree " + file.string() + " --depth 6";
      for (const auto& e : ends) args += " --end \"" + to_string(e) + "\"";
      commands.push_back(args);
    }
  }
  return commands;
}

Verdict cli_determinism() {
  Verdict v;
  const fs::path dir = fs::temp_directory_path() /
                       ("endmatch-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto commands = cli_commands(dir);
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string outputs[2];
    int codes[2];
    for (int pass = 0; pass < 2; ++pass) {
      const fs::path out = dir / ("out" + std::to_string(pass));
      const Captured c = run_cli(commands[i] + " --out " + out.string());
      codes[pass] = c.code;
      outputs[pass] = c.out + "\n--\n" + slurp(out);
      fs::remove(out);
    }
    if (codes[0] != codes[1] || outputs[0] != outputs[1]) {
      v.fail("output differs between runs: " + commands[i]);
    }
    if (codes[0] < 0 || codes[0] > 3) v.fail("abnormal exit: " + commands[i]);
  }
  fs::remove_all(dir);
  if (v.ok) {
    v.detail = std::to_string(commands.size()) +
               " commands byte-identical across two runs";
  }
  return v;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "derivative completeness on forests", 30, derivative_completeness},
      {2, "rooted matching totality", 10, rooted_totality},
      {3, "end matchings and the bad-ray clause", 30, ends_final_clause},
      {4, "subdivision equivalence", 10, subdivision_equivalence},
      {5, "closure, buffer and sweep", 30, baire_machinery},
      {6, "counterexample recursion", 60, counterexample_recursion},
  };
  return all;
}

}  // namespace
}  // namespace endmatch

int main() {
  using endmatch::Verdict;
  using Clock = std::chrono::steady_clock;
  int failed = 0;
  std::vector<std::string> first_details;
  auto report = [&](int id, const char* name, const Verdict& v, double seconds,
                    double limit) {
    const bool ok = v.ok && seconds < limit;
    failed += !ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", seconds,
                  limit);
    std::cout << "criterion " << id << ' ' << (ok ? "PASS" : "FAIL") << " ["
              << name << "] (" << timing << ") " << v.detail << std::endl;
  };
  for (const auto& c : endmatch::criteria()) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("unexpected exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    first_details.push_back(v.detail);
    report(c.id, c.name, v, seconds, c.limit_seconds);
  }

  const auto start = Clock::now();
  Verdict v;
  try {
    v = endmatch::cli_determinism();
    for (std::size_t i = 0; i < endmatch::criteria().size(); ++i) {
      const auto& c = endmatch::criteria()[i];
      if (c.run().detail != first_details[i]) {
        v.fail("criterion " + std::to_string(c.id) + " differs on rerun");
      }
    }
    if (v.ok) v.detail += "; criteria 1-6 repeat identically";
  } catch (const std::exception& e) {
    v.fail(std::string("unexpected exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  report(7, "determinism", v, seconds, 240);
  return failed == 0 ? 0 : 1;
}
