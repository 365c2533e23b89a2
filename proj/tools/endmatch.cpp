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

// endmatch: command-line front end.
//
// Exit codes: 0 ok, 1 conflict or no matching, 2 usage or format error,
// 3 budget exceeded.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "endmatch/baire.hpp"
#include "endmatch/counterexample.hpp"
#include "endmatch/derivative.hpp"
#include "endmatch/error.hpp"
#include "endmatch/formats.hpp"
#include "endmatch/matcher.hpp"
#include "endmatch/subdivision.hpp"
#include "json.hpp"

namespace {

using namespace endmatch;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

// Raised for unreadable files and bad flag combinations.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string graph;
  std::string tree;
  std::vector<std::string> ends;
  std::string function;
  std::string out;
  std::string report;
  std::size_t depth = 8;
  std::size_t budget = 0;
  std::size_t levels = kDefaultLevels;
  std::size_t rounds = 16;
};

struct RunReport {
  std::string subcommand;
  std::uint64_t digest = 0xcbf29ce484222325u;  // FNV-1a over inputs
  std::string outcome = "ok";
  std::size_t vertices = 0;
  std::size_t iterations = 0;
  double runtime_ms = 0;

  void absorb(std::string_view bytes) {
    for (unsigned char c : bytes) {
      digest ^= c;
      digest *= 0x100000001b3u;
    }
  }
};

std::string read_file(const std::string& path, RunReport& report) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  report.absorb(text.str());
  return text.str();
}

template <typename Parse>
auto parse_file(const std::string& path, RunReport& report, Parse parse) {
  if (path.empty()) throw UsageError("missing input file");
  const std::string text = read_file(path, report);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

std::size_t or_default(std::size_t value, std::size_t fallback) {
  return value == 0 ? fallback : value;
}

std::string clip(const std::string& s) {
  constexpr std::size_t kWidth = 48;
  if (s.size() <= kWidth) return s;
  return s.substr(0, kWidth) + "... (" + std::to_string(s.size()) + " chars)";
}

TreeMatching window_pairs(const AutomaticTree& t, const MatchingOracle& oracle,
                          std::size_t depth, RunReport& report) {
  std::set<std::pair<TreeVertex, TreeVertex>> pairs;
  for (const auto& v : vertices_up_to(t, depth)) {
    ++report.vertices;
    if (!oracle.in_domain(v)) continue;
    TreeVertex w = oracle.partner(v);
    pairs.insert(w < v ? std::pair(w, v) : std::pair(v, w));
  }
  return {pairs.begin(), pairs.end()};
}

std::vector<EndDescriptor> parse_ends(const AutomaticTree& t,
                                      const Options& opt, RunReport& report) {
  std::vector<EndDescriptor> ends;
  for (const auto& text : opt.ends) {
    report.absorb(text);
    EndDescriptor e = parse_end(text);
    try {
      validate_end(t, e);
    } catch (const InvalidArgument& err) {
      throw UsageError("--end " + text + ": " + err.what());
    }
    ends.push_back(std::move(e));
  }
  return ends;
}

int run_derivative(const Options& opt, std::ostream& out, RunReport& report) {
  if (opt.graph.empty() == opt.tree.empty()) {
    throw UsageError("give exactly one of --graph and --tree");
  }
  if (!opt.tree.empty()) {
    const AutomaticTree t = parse_file(opt.tree, report, parse_tree);
    const WindowDerivative w = derive_window(
        t, opt.depth, kDefaultDerivativeRounds,
        or_default(opt.budget, kDefaultWindowBudget));
    report.vertices = w.window.labels.size();
    report.iterations = w.rounds;
    if (w.conflict) {
      const auto& c = *w.conflict;
      out << "conflict "
          << (c.kind == DerivativeConflict::Kind::kIsolated ? "isolated"
                                                            : "contested")
          << ' ' << to_string(w.window.labels[c.vertex]) << " stage "
          << c.stage << '\n';
      return kNegative;
    }
    out << "# core " << w.core.size() << " vertices\n";
    out << print_tree_matching(w.forced);
    return kOk;
  }
  const FiniteGraph g = parse_file(opt.graph, report, parse_graph);
  report.vertices = g.vertex_count();
  const DerivativeOutcome outcome = derive(g);
  if (const auto* c = std::get_if<DerivativeConflict>(&outcome)) {
    report.iterations = c->trace.size();
    out << "conflict ";
    if (c->kind == DerivativeConflict::Kind::kIsolated) {
      out << "isolated " << c->vertex;
    } else {
      out << "contested " << c->vertex << " claimants";
      for (Vertex v : c->claimants) out << ' ' << v;
    }
    out << " stage " << c->stage << '\n';
    return kNegative;
  }
  const auto& r = std::get<DerivativeResult>(outcome);
  report.iterations = r.trace.size();
  out << "# core";
  for (Vertex v : r.core) out << ' ' << v;
  out << '\n' << print_matching(r.forced);
  return kOk;
}

int run_match_rooted(const Options& opt, std::ostream& out,
                     RunReport& report) {
  const AutomaticTree t = parse_file(opt.tree, report, parse_tree);
  const MatchingOracle oracle = rooted_matching(t);
  if (auto failure = check_window(t, oracle, opt.depth)) {
    std::cerr << "endmatch: " << *failure << '\n';
    return kNegative;
  }
  out << print_tree_matching(window_pairs(t, oracle, opt.depth, report));
  return kOk;
}

int run_match_ends(const Options& opt, std::ostream& out, RunReport& report) {
  const AutomaticTree t = parse_file(opt.tree, report, parse_tree);
  const auto ends = parse_ends(t, opt, report);
  if (ends.empty()) throw UsageError("give at least one --end");
  const EndsOutput result =
      match_ends(t, ends, or_default(opt.budget, kDefaultMatchBudget));
  const ConclusionReport check = verify_conclusions(t, result, opt.depth);
  if (!check.ok()) {
    std::cerr << "endmatch: " << check.failure << '\n';
    return kNegative;
  }
  out << "# b-set " << to_string(result.b_set.kind) << '\n';
  out << "# construction " << result.construction << '\n';
  out << print_tree_matching(window_pairs(t, result.oracle, opt.depth, report));
  return kOk;
}

int run_subdivide(const Options& opt, std::ostream& out, RunReport& report) {
  const FiniteGraph g = parse_file(opt.graph, report, parse_graph);
  report.vertices = g.vertex_count();
  if (opt.function.empty()) {
    out << print_graph(subdivide(g).graph);
    return kOk;
  }
  report.absorb(opt.function);
  std::vector<Vertex> f;
  std::stringstream items(opt.function);
  for (std::string item; std::getline(items, item, ',');) {
    try {
      std::size_t used = 0;
      f.push_back(std::stoul(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("--function: bad image '" + item + "'");
    }
  }
  try {
    out << print_matching(orientation_to_matching(g, f));
  } catch (const InvalidArgument& e) {
    std::cerr << "endmatch: " << e.what() << '\n';
    return kNegative;
  }
  return kOk;
}

int run_baire_sweep(const Options& opt, std::ostream& out,
                    RunReport& report) {
  const AutomaticTree t = parse_file(opt.tree, report, parse_tree);
  const std::size_t budget = or_default(opt.budget, kDefaultBaireBudget);
  const auto window_vertices = vertices_up_to(t, opt.depth);
  VertexSet removed;
  TreePairs matching;
  std::size_t round = 0;
  auto left = [&] {
    std::vector<TreeVertex> seeds;
    for (const auto& v : window_vertices) {
      if (!removed.contains(v)) seeds.push_back(v);
    }
    return seeds;
  };
  for (auto seeds = left(); !seeds.empty() && round < opt.rounds;
       seeds = left()) {
    ++round;
    SweepResult r = sweep_step(t, seeds, removed, budget);
    const SweepCheck check = verify_sweep(t, removed, r, opt.depth + 2);
    if (!check.ok()) {
      std::cerr << "endmatch: round " << round << ": " << check.failure
                << '\n';
      return kNegative;
    }
    out << "# round " << round << " kept " << r.kept.size() << " passed "
        << r.passed_over.size() << '\n';
    matching.insert(matching.end(), r.matching.begin(), r.matching.end());
    removed = std::move(r.removed);
  }
  report.iterations = round;
  report.vertices = window_vertices.size();
  std::sort(matching.begin(), matching.end());
  if (!left().empty()) {
    out << "# window not emptied after " << round << " rounds\n";
  }
  out << print_tree_matching(matching);
  return kOk;
}

int run_counterexample(const Options& opt, std::ostream& out,
                       RunReport& report) {
  if (opt.levels > kMaxLevels) {
    throw UsageError("--levels is capped at " + std::to_string(kMaxLevels));
  }
  report.absorb(std::to_string(opt.levels));
  const auto levels = build_levels(opt.levels);
  for (const auto& ls : levels) {
    ++report.iterations;
    report.vertices += std::size_t{2} << ls.n;
    const ConditionReport c = check_conditions(ls);
    const AcyclicityReport a = check_acyclic(ls);
    if (!c.ok() || !a.acyclic) {
      std::cerr << "endmatch: invariant failed at level " << ls.n << '\n';
      report.outcome = "invariant-violation";
      return kNegative;
    }
  }
  out << level_dump(levels);
  return kOk;
}

void write_report(const std::string& path, const RunReport& report) {
  std::ostringstream digest;
  digest << std::hex << std::setw(16) << std::setfill('0') << report.digest;
  const nlohmann::json j = {
      {"subcommand", report.subcommand},
      {"input_digest", digest.str()},
      {"outcome", report.outcome},
      {"counters",
       {{"vertices", report.vertices},
        {"iterations", report.iterations},
        {"runtime_ms", report.runtime_ms}}},
  };
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect matchings on finite forests and automatic trees"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--out", opt.out, "Write output here instead of stdout");
    sub->add_option("--report", opt.report, "Write a JSON run report here");
    sub->add_option("--budget", opt.budget,
                    "Search budget (0 keeps the default)");
  };

  auto* derivative = app.add_subcommand(
      "derivative", "Forced pairs and core of the degree derivative");
  derivative->add_option("--graph", opt.graph, "Finite graph file");
  derivative->add_option("--tree", opt.tree, "Tree file (window mode)");
  derivative->add_option("--depth", opt.depth, "Window depth");
  add_common(derivative);

  auto* rooted = app.add_subcommand(
      "match-rooted", "Layered matching from the root, on a window");
  rooted->add_option("--tree", opt.tree, "Tree file")->required();
  rooted->add_option("--depth", opt.depth, "Window depth");
  add_common(rooted);

  auto* ends = app.add_subcommand(
      "match-ends", "Matching off the set B for a list of ends");
  ends->add_option("--tree", opt.tree, "Tree file")->required();
  ends->add_option("--end", opt.ends, "End as <pre>|<period>, repeatable")
      ->required();
  ends->add_option("--depth", opt.depth, "Window depth");
  add_common(ends);

  auto* sub = app.add_subcommand(
      "subdivide", "Line-and-point graph, or the matching of a function");
  sub->add_option("--graph", opt.graph, "Finite graph file")->required();
  sub->add_option("--function", opt.function,
                  "Comma-separated images f(0),f(1),...");
  add_common(sub);

  auto* baire = app.add_subcommand(
      "baire-sweep", "Sweep closure pairs until the window is used up");
  baire->add_option("--tree", opt.tree, "Tree file")->required();
  baire->add_option("--depth", opt.depth, "Window depth");
  baire->add_option("--rounds", opt.rounds, "Most sweep rounds");
  add_common(baire);

  auto* counter = app.add_subcommand(
      "counterexample", "Dump levels 0..N of the R/S recursion");
  counter->add_option("--levels", opt.levels, "Last level");
  add_common(counter);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  RunReport report;
  report.subcommand = name;
  report.absorb(name);
  const auto start = std::chrono::steady_clock::now();

  int code = kOk;
  std::ostringstream out;
  try {
    if (name == "derivative") {
      code = run_derivative(opt, out, report);
    } else if (name == "match-rooted") {
      code = run_match_rooted(opt, out, report);
    } else if (name == "match-ends") {
      code = run_match_ends(opt, out, report);
    } else if (name == "subdivide") {
      code = run_subdivide(opt, out, report);
    } else if (name == "baire-sweep") {
      code = run_baire_sweep(opt, out, report);
    } else {
      code = run_counterexample(opt, out, report);
    }
    if (code == kNegative && report.outcome == "ok") report.outcome = "conflict";
  } catch (const ParseError& e) {
    std::cerr << "endmatch: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "endmatch: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "endmatch: " << e.what() << '\n';
    const auto& frontier = e.frontier();
    std::cerr << "frontier (" << frontier.size() << " vertices):";
    for (std::size_t i = 0; i < frontier.size() && i < 4; ++i) {
      std::cerr << ' ' << clip(frontier[i]);
    }
    std::cerr << '\n';
    report.outcome = "budget-exceeded";
    code = kBudget;
  } catch (const InvariantViolation& e) {
    std::cerr << "endmatch: invariant violation: " << e.what() << '\n';
    report.outcome = "invariant-violation";
    code = kNegative;
  } catch (const InvalidArgument& e) {
    std::cerr << "endmatch: " << e.what() << '\n';
    report.outcome = "conflict";
    code = kNegative;
  }
  report.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();

  try {
    if (opt.out.empty()) {
      std::cout << out.str();
    } else {
      std::ofstream file(opt.out, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + opt.out + "'");
      file << out.str();
    }
    if (!opt.report.empty()) write_report(opt.report, report);
  } catch (const UsageError& e) {
    std::cerr << "endmatch: " << e.what() << '\n';
    return kUsage;
  }
  return code;
}
