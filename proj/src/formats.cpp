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

#include "endmatch/formats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "endmatch/error.hpp"

namespace endmatch {
namespace {

struct Token {
  std::string text;
  std::size_t column = 0;
};

struct Line {
  std::size_t number = 0;
  std::size_t end_column = 0;
  std::vector<Token> tokens;

  [[noreturn]] void fail(std::size_t i, const std::string& what) const {
    throw ParseError(number, i < tokens.size() ? tokens[i].column : end_column,
                     what);
  }

  void expect_size(std::size_t n, const std::string& form) const {
    if (tokens.size() != n) fail(std::min(n, tokens.size()), "expected " + form);
  }
};

std::vector<Line> lex(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const std::size_t cut = text.find('\n');
    std::string_view raw = text.substr(0, cut);
    text = cut == std::string_view::npos ? std::string_view() : text.substr(cut + 1);
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, raw.size() + 1, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) {
        ++j;
      }
      line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (cut == std::string_view::npos) break;
  }
  return lines;
}

std::optional<std::size_t> to_number(std::string_view s) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return value;
}

std::size_t number_at(const Line& line, std::size_t i) {
  const auto value = to_number(line.tokens[i].text);
  if (!value) line.fail(i, "expected a non-negative integer");
  return *value;
}

void expect_keyword(const Line& line, const std::string& keyword) {
  if (line.tokens[0].text != keyword) line.fail(0, "expected '" + keyword + "'");
}

// Comma-separated indices starting at `column`.
std::vector<ChildIndex> index_list(std::string_view s, std::size_t column) {
  std::vector<ChildIndex> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = s.find(',', start);
    const std::string_view item = s.substr(start, comma - start);
    const auto value = to_number(item);
    if (!value || *value > 0xffffffffu) {
      throw ParseError(1, column + start, "expected a child index");
    }
    out.push_back(static_cast<ChildIndex>(*value));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

TreeVertex vertex_at(const Line& line, std::size_t i) {
  try {
    return parse_vertex(line.tokens[i].text);
  } catch (const ParseError& e) {
    throw ParseError(line.number, line.tokens[i].column + e.column() - 1,
                     "bad tree vertex '" + line.tokens[i].text + "'");
  }
}

BinaryWord word_at(const Line& line, std::size_t i) {
  try {
    return BinaryWord::parse(line.tokens[i].text);
  } catch (const InvalidArgument&) {
    line.fail(i, "bad binary word '" + line.tokens[i].text + "'");
  }
}

}  // namespace

FiniteGraph parse_graph(std::string_view text) {
  const auto lines = lex(text);
  if (lines.empty()) throw ParseError(1, 1, "expected 'graph <n>'");
  const Line& head = lines.front();
  expect_keyword(head, "graph");
  head.expect_size(2, "'graph <n>'");
  const std::size_t n = number_at(head, 1);
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    expect_keyword(line, "e");
    line.expect_size(3, "'e <a> <b>'");
    const Vertex a = number_at(line, 1);
    const Vertex b = number_at(line, 2);
    if (a >= n) line.fail(1, "vertex out of range");
    if (b >= n) line.fail(2, "vertex out of range");
    if (a >= b) line.fail(2, "edge endpoints must satisfy a < b");
    if (!seen.emplace(a, b).second) line.fail(0, "repeated edge");
    edges.emplace_back(a, b);
  }
  return FiniteGraph(n, edges);
}

std::string print_graph(const FiniteGraph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << '\n';
  for (auto [a, b] : g.edges()) out << "e " << a << ' ' << b << '\n';
  return out.str();
}

AutomaticTree parse_tree(std::string_view text) {
  const auto lines = lex(text);
  if (lines.empty()) throw ParseError(1, 1, "expected 'tree'");
  expect_keyword(lines.front(), "tree");
  lines.front().expect_size(1, "'tree'");

  std::vector<AutomaticTree::StateSpec> specs;
  std::map<std::string, State> names;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0].text != "state") continue;
    line.expect_size(4, "'state <name> branch <k>'");
    if (line.tokens[2].text != "branch") line.fail(2, "expected 'branch'");
    const std::size_t branch = number_at(line, 3);
    const std::string& name = line.tokens[1].text;
    if (!names.emplace(name, specs.size()).second) {
      line.fail(1, "state '" + name + "' declared twice");
    }
    specs.push_back({name, branch, std::vector<State>(branch, specs.size())});
  }
  auto state_at = [&names](const Line& line, std::size_t i) {
    const auto it = names.find(line.tokens[i].text);
    if (it == names.end()) line.fail(i, "unknown state '" + line.tokens[i].text + "'");
    return it->second;
  };

  std::optional<State> root;
  const Line* root_line = nullptr;
  std::set<std::pair<State, std::size_t>> set_steps;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::string& word = line.tokens[0].text;
    if (word == "state") continue;
    if (word == "root") {
      line.expect_size(2, "'root <name>'");
      if (root) line.fail(0, "root declared twice");
      root = state_at(line, 1);
      root_line = &line;
    } else if (word == "trans") {
      line.expect_size(4, "'trans <state> <i> <state>'");
      const State from = state_at(line, 1);
      const std::size_t i = number_at(line, 2);
      if (i >= specs[from].branch) line.fail(2, "child index out of range");
      if (!set_steps.emplace(from, i).second) line.fail(0, "repeated transition");
      specs[from].step[i] = state_at(line, 3);
    } else {
      line.fail(0, "expected 'state', 'root' or 'trans'");
    }
  }
  if (specs.empty()) throw ParseError(lines.front().number, 1, "no states");
  if (!root) {
    throw ParseError(lines.back().number, lines.back().end_column,
                     "missing 'root <name>'");
  }
  try {
    return AutomaticTree(std::move(specs), *root);
  } catch (const InvalidArgument& e) {
    throw ParseError(root_line->number, 1, e.what());
  }
}

std::string print_tree(const AutomaticTree& t) {
  std::ostringstream out;
  out << "tree\n";
  for (const auto& spec : t.states()) {
    out << "state " << spec.name << " branch " << spec.branch << '\n';
  }
  out << "root " << t.state_name(t.root_state()) << '\n';
  for (State q = 0; q < t.state_count(); ++q) {
    const auto& spec = t.states()[q];
    for (std::size_t i = 0; i < spec.branch; ++i) {
      if (spec.step[i] != q) {
        out << "trans " << spec.name << ' ' << i << ' '
            << t.state_name(spec.step[i]) << '\n';
      }
    }
  }
  return out.str();
}

EndDescriptor parse_end(std::string_view text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw ParseError(1, text.size() + 1, "expected '<preperiod>|<period>'");
  }
  if (text.find('|', bar + 1) != std::string_view::npos) {
    throw ParseError(1, text.find('|', bar + 1) + 1, "second '|'");
  }
  auto pre = index_list(text.substr(0, bar), 1);
  auto period = index_list(text.substr(bar + 1), bar + 2);
  if (period.empty()) throw ParseError(1, bar + 2, "empty period");
  return EndDescriptor(std::move(pre), std::move(period));
}

TreeVertex parse_vertex(std::string_view text) {
  if (text.empty() || text[0] != '/') {
    throw ParseError(1, 1, "tree vertex must start with '/'");
  }
  if (text == "/") return TreeVertex();
  std::vector<ChildIndex> path;
  std::size_t start = 1;
  for (;;) {
    const std::size_t slash = text.find('/', start);
    const auto value = to_number(text.substr(start, slash - start));
    if (!value || *value > 0xffffffffu) {
      throw ParseError(1, start + 1, "expected a child index");
    }
    path.push_back(static_cast<ChildIndex>(*value));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return TreeVertex(std::move(path));
}

Matching parse_matching(std::string_view text) {
  std::vector<Edge> pairs;
  std::set<Vertex> covered;
  for (const Line& line : lex(text)) {
    expect_keyword(line, "m");
    line.expect_size(3, "'m <x> <y>'");
    const Vertex a = number_at(line, 1);
    const Vertex b = number_at(line, 2);
    if (a == b) line.fail(2, "vertex matched to itself");
    if (!covered.insert(a).second) line.fail(1, "vertex matched twice");
    if (!covered.insert(b).second) line.fail(2, "vertex matched twice");
    pairs.emplace_back(a, b);
  }
  return Matching(std::move(pairs));
}

std::string print_matching(const Matching& m) {
  std::ostringstream out;
  for (auto [a, b] : m.pairs()) out << "m " << a << ' ' << b << '\n';
  return out.str();
}

TreeMatching parse_tree_matching(std::string_view text) {
  TreeMatching pairs;
  std::set<TreeVertex> covered;
  for (const Line& line : lex(text)) {
    expect_keyword(line, "m");
    line.expect_size(3, "'m <x> <y>'");
    TreeVertex a = vertex_at(line, 1);
    TreeVertex b = vertex_at(line, 2);
    if (a == b) line.fail(2, "vertex matched to itself");
    if (!covered.insert(a).second) line.fail(1, "vertex matched twice");
    if (!covered.insert(b).second) line.fail(2, "vertex matched twice");
    pairs.emplace_back(std::move(a), std::move(b));
  }
  return pairs;
}

std::string print_tree_matching(const TreeMatching& m) {
  std::ostringstream out;
  for (const auto& [a, b] : m) {
    out << "m " << to_string(a) << ' ' << to_string(b) << '\n';
  }
  return out.str();
}

std::vector<LevelSystem> parse_level_dump(std::string_view text) {
  std::vector<LevelSystem> levels;
  std::vector<WordPair> listed_s;
  const Line* level_line = nullptr;
  std::optional<BinaryWord> step_u;

  auto finish = [&]() {
    if (levels.empty()) return;
    LevelSystem& ls = levels.back();
    std::sort(ls.r.begin(), ls.r.end());
    if (ls.n > 0 && ls.u_history.size() + ls.v_history.size() != ls.n) {
      level_line->fail(0, "level lacks its 'u' and 'v' lines");
    }
    if (ls.n <= kExplicitSLevels && listed_s != ls.s_pairs()) {
      level_line->fail(0, "listed S disagrees with the rules of level " +
                              std::to_string(ls.n));
    }
    listed_s.clear();
  };

  const auto lines = lex(text);
  for (const Line& line : lines) {
    const std::string& word = line.tokens[0].text;
    if (word == "level") {
      line.expect_size(2, "'level <n>'");
      finish();
      const std::size_t n = number_at(line, 1);
      if (n != levels.size()) {
        line.fail(1, "levels must run 0, 1, 2, ... without gaps");
      }
      LevelSystem ls;
      if (!levels.empty()) {
        ls.u_history = levels.back().u_history;
        ls.v_history = levels.back().v_history;
      }
      ls.n = n;
      ls.cursor = n / 2;
      levels.push_back(std::move(ls));
      level_line = &line;
      step_u.reset();
      continue;
    }
    if (levels.empty()) line.fail(0, "expected 'level <n>'");
    LevelSystem& ls = levels.back();
    if (word == "u" || word == "v") {
      line.expect_size(2, "'" + word + " <word>'");
      const BinaryWord w = word_at(line, 1);
      const bool first = word == "u";
      if (ls.n == 0 || first == step_u.has_value()) {
        line.fail(0, "unexpected '" + word + "' line");
      }
      if (first) {
        step_u = w;
        continue;
      }
      auto& history = ls.n % 2 == 1 ? ls.u_history : ls.v_history;
      history.push_back({*step_u, w});
    } else if (word == "s" || word == "R" || word == "S") {
      line.expect_size(3, "'" + word + " <word> <word>'");
      const BinaryWord a = word_at(line, 1);
      const BinaryWord b = word_at(line, 2);
      if (word == "s") {
        if (a.length() > ls.n || b.length() != a.length()) {
          line.fail(1, "rule words must share a length of at most the level");
        }
        ls.s_rules.push_back({a, b});
        continue;
      }
      if (a.length() != ls.n) line.fail(1, "word length differs from level");
      if (b.length() != ls.n) line.fail(2, "word length differs from level");
      if (word == "R") {
        ls.r.emplace_back(a, b);
      } else {
        if (ls.n > kExplicitSLevels) line.fail(0, "S is not listed at this level");
        listed_s.emplace_back(a, b);
      }
    } else {
      line.fail(0, "unknown line kind '" + word + "'");
    }
  }
  finish();
  return levels;
}

}  // namespace endmatch
