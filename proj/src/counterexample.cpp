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

#include "endmatch/counterexample.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "endmatch/error.hpp"

namespace endmatch {

BinaryWord BinaryWord::parse(const std::string& text) {
  if (text == "-") return BinaryWord();
  if (text.size() > kMaxWordLength) {
    throw InvalidArgument("binary word longer than " +
                          std::to_string(kMaxWordLength));
  }
  std::uint64_t index = 1;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidArgument("bad binary word '" + text + "'");
    }
    index = 2 * index + static_cast<std::uint64_t>(c - '0');
  }
  return BinaryWord(index);
}

std::size_t BinaryWord::length() const {
  return static_cast<std::size_t>(std::bit_width(index_)) - 1;
}

int BinaryWord::bit(std::size_t i) const {
  return static_cast<int>((index_ >> (length() - 1 - i)) & 1);
}

BinaryWord BinaryWord::child(int b) const {
  if (length() >= kMaxWordLength) {
    throw InvalidArgument("binary word too long");
  }
  return BinaryWord(2 * index_ + static_cast<std::uint64_t>(b));
}

BinaryWord BinaryWord::prefix(std::size_t len) const {
  return BinaryWord(index_ >> (length() - std::min(len, length())));
}

bool BinaryWord::is_prefix_of(const BinaryWord& w) const {
  return w.length() >= length() && w.prefix(length()) == *this;
}

std::string to_string(const BinaryWord& w) {
  if (w.length() == 0) return "-";
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) out += w.bit(i) ? '1' : '0';
  return out;
}

namespace {

std::vector<std::string> schedule_kind(std::size_t count, std::size_t offset) {
  std::set<std::uint64_t> served;
  std::uint64_t next = 1;
  std::vector<std::string> out;
  for (std::size_t m = 0; m < count; ++m) {
    while (served.contains(next)) ++next;
    const BinaryWord w = BinaryWord::from_index(next);
    const std::size_t target = 2 * m + offset;
    if (w.length() > target) throw InvariantViolation("schedule exhausted");
    std::string text = w.length() == 0 ? "" : to_string(w);
    text.append(target - w.length(), '0');
    out.push_back(text);
    const std::size_t marked = std::min(target, BinaryWord::kMaxWordLength);
    for (std::size_t len = 0; len <= marked; ++len) {
      served.insert(len <= w.length() ? w.prefix(len).index()
                                      : w.index() << (len - w.length()));
    }
  }
  return out;
}

BinaryWord word_at(std::size_t n, std::uint64_t value) {
  return BinaryWord::from_index((std::uint64_t{1} << n) | value);
}

std::uint64_t value_of(const BinaryWord& w) {
  return w.index() - (std::uint64_t{1} << w.length());
}

// Least v of length n with (u, v) in S, by depth-first search in
// lexicographic order.
std::optional<BinaryWord> least_column(const LevelSystem& ls,
                                       const BinaryWord& u) {
  std::vector<BinaryWord> forced;
  for (const auto& rule : ls.s_rules) {
    if (rule.row.is_prefix_of(u)) forced.push_back(rule.column);
  }
  auto search = [&](auto&& self, BinaryWord p) -> std::optional<BinaryWord> {
    for (const auto& b : forced) {
      if (!b.compatible(p)) return std::nullopt;
    }
    if (p.length() == ls.n) {
      return ls.in_s(u, p) ? std::optional(p) : std::nullopt;
    }
    for (int b = 0; b < 2; ++b) {
      if (auto found = self(self, p.child(b))) return found;
    }
    return std::nullopt;
  };
  return search(search, BinaryWord());
}

// Marks every prefix (by heap index) of a length-n row outside the first
// projection of R.
std::vector<char> free_row_prefixes(const LevelSystem& ls) {
  const std::uint64_t size = std::uint64_t{1} << ls.n;
  std::vector<char> taken(size, 0);
  for (const auto& [u, v] : ls.r) taken[value_of(u)] = 1;
  std::vector<char> free(2 * size, 0);
  for (std::uint64_t x = 0; x < size; ++x) {
    if (taken[x]) continue;
    for (std::uint64_t h = size | x; h != 0 && !free[h]; h >>= 1) free[h] = 1;
  }
  return free;
}

// Least row u of length n outside the first projection of R with (u, v) in S.
std::optional<BinaryWord> least_free_row(const LevelSystem& ls,
                                         const std::vector<char>& free,
                                         const BinaryWord& v) {
  std::vector<BinaryWord> blocked;
  for (const auto& rule : ls.s_rules) {
    if (!rule.column.is_prefix_of(v)) blocked.push_back(rule.row);
  }
  auto search = [&](auto&& self, BinaryWord p) -> std::optional<BinaryWord> {
    if (!free[p.index()]) return std::nullopt;
    for (const auto& a : blocked) {
      if (a.is_prefix_of(p)) return std::nullopt;
    }
    if (p.length() == ls.n) return p;
    for (int b = 0; b < 2; ++b) {
      if (auto found = self(self, p.child(b))) return found;
    }
    return std::nullopt;
  };
  return search(search, BinaryWord());
}

}  // namespace

std::pair<std::string, std::string> dense_schedule(std::size_t m) {
  return {schedule_kind(m + 1, 0).back(), schedule_kind(m + 1, 1).back()};
}

std::vector<std::pair<std::string, std::string>> schedule_prefix(
    std::size_t count) {
  const auto us = schedule_kind(count, 0);
  const auto vs = schedule_kind(count, 1);
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t m = 0; m < count; ++m) out.emplace_back(us[m], vs[m]);
  return out;
}

bool LevelSystem::in_s(const BinaryWord& u, const BinaryWord& v) const {
  if (u.length() != n || v.length() != n) return false;
  return std::all_of(s_rules.begin(), s_rules.end(), [&](const RowRule& rule) {
    return !rule.row.is_prefix_of(u) || rule.column.is_prefix_of(v);
  });
}

bool LevelSystem::in_r(const BinaryWord& u, const BinaryWord& v) const {
  return std::binary_search(r.begin(), r.end(), WordPair{u, v});
}

std::vector<WordPair> LevelSystem::s_pairs() const {
  if (n > 10) throw InvalidArgument("S is too large to list above level 10");
  std::vector<WordPair> out;
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < size; ++x) {
    for (std::uint64_t y = 0; y < size; ++y) {
      if (in_s(word_at(n, x), word_at(n, y))) {
        out.emplace_back(word_at(n, x), word_at(n, y));
      }
    }
  }
  return out;
}

LevelSystem init_level() { return LevelSystem{}; }

LevelSystem step(const LevelSystem& ls) {
  if (ls.n >= kMaxLevels) {
    throw InvalidArgument("level cap " + std::to_string(kMaxLevels) +
                          " reached");
  }
  LevelSystem next = ls;
  next.n = ls.n + 1;
  next.r.clear();
  for (const auto& [u, v] : ls.r) {
    next.r.emplace_back(u.child(0), v.child(0));
    next.r.emplace_back(u.child(1), v.child(1));
  }
  const std::size_t k = ls.n / 2;
  if (ls.n % 2 == 0) {
    const BinaryWord u = BinaryWord::parse(dense_schedule(k).first);
    const auto v = least_column(ls, u);
    if (!v) {
      throw InvariantViolation("row " + to_string(u) + " has no partner in S");
    }
    next.r.emplace_back(u.child(0), v->child(1));
    next.u_history.push_back({u, *v});
  } else {
    const BinaryWord v = BinaryWord::parse(dense_schedule(k).second);
    const auto u = least_free_row(ls, free_row_prefixes(ls), v);
    if (!u) {
      throw InvariantViolation("column " + to_string(v) +
                               " has no free partner in S");
    }
    next.s_rules.push_back({u->child(0), v.child(1)});
    next.v_history.push_back({*u, v});
    next.cursor = k + 1;
  }
  std::sort(next.r.begin(), next.r.end());
  return next;
}

LevelSystem advance(const LevelSystem& ls) {
  if (ls.n % 2 != 0) throw InvalidArgument("advance starts at an even level");
  return step(step(ls));
}

std::vector<LevelSystem> build_levels(std::size_t count) {
  std::vector<LevelSystem> levels{init_level()};
  while (levels.size() <= count) levels.push_back(step(levels.back()));
  return levels;
}

ConditionReport check_conditions(const LevelSystem& ls) {
  ConditionReport report;
  for (const auto& [u, v] : ls.r) {
    if (!ls.in_s(u, v)) {
      report.r_in_s = false;
      report.stray_pair = WordPair{u, v};
      break;
    }
  }

  const std::uint64_t size = std::uint64_t{1} << ls.n;
  for (std::uint64_t x = 0; x < size && report.rows_ok; ++x) {
    const BinaryWord u = word_at(ls.n, x);
    BinaryWord longest;
    for (const auto& rule : ls.s_rules) {
      if (rule.row.is_prefix_of(u) && rule.column.length() > longest.length()) {
        longest = rule.column;
      }
    }
    const BinaryWord v = word_at(
        ls.n, value_of(longest) << (ls.n - longest.length()));
    if (!ls.in_s(u, v)) {
      report.rows_ok = false;
      report.bad_row = u;
    }
  }

  // Columns blocked by the same rules share their candidate rows.
  std::vector<char> taken(size, 0);
  for (const auto& [u, v] : ls.r) taken[value_of(u)] = 1;
  std::map<std::uint64_t, bool> mask_has_row;
  for (std::uint64_t y = 0; y < size && report.columns_ok; ++y) {
    const BinaryWord v = word_at(ls.n, y);
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < ls.s_rules.size(); ++i) {
      if (!ls.s_rules[i].column.is_prefix_of(v)) mask |= std::uint64_t{1} << i;
    }
    auto it = mask_has_row.find(mask);
    if (it == mask_has_row.end()) {
      bool found = false;
      for (std::uint64_t x = 0; x < size && !found; ++x) {
        if (taken[x]) continue;
        const BinaryWord u = word_at(ls.n, x);
        found = true;
        for (std::size_t i = 0; i < ls.s_rules.size(); ++i) {
          if ((mask >> i & 1) && ls.s_rules[i].row.is_prefix_of(u)) {
            found = false;
          }
        }
      }
      it = mask_has_row.emplace(mask, found).first;
    }
    if (!it->second) {
      report.columns_ok = false;
      report.bad_column = v;
    }
  }
  return report;
}

AcyclicityReport check_acyclic(const LevelSystem& ls) {
  const std::uint64_t size = std::uint64_t{1} << ls.n;
  std::vector<std::uint64_t> parent(2 * size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::uint64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < ls.r.size(); ++i) {
    const std::uint64_t a = value_of(ls.r[i].first);
    const std::uint64_t b = size + value_of(ls.r[i].second);
    const std::uint64_t ra = find(a);
    const std::uint64_t rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      continue;
    }
    std::map<std::uint64_t, std::vector<std::uint64_t>> adj;
    for (std::size_t j = 0; j < i; ++j) {
      const std::uint64_t x = value_of(ls.r[j].first);
      const std::uint64_t y = size + value_of(ls.r[j].second);
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
    std::map<std::uint64_t, std::uint64_t> from{{a, a}};
    std::deque<std::uint64_t> queue{a};
    while (!queue.empty() && !from.contains(b)) {
      const std::uint64_t x = queue.front();
      queue.pop_front();
      for (std::uint64_t y : adj[x]) {
        if (from.emplace(y, x).second) queue.push_back(y);
      }
    }
    AcyclicityReport report;
    report.acyclic = false;
    auto word = [&](std::uint64_t x) {
      return x < size ? word_at(ls.n, x) : word_at(ls.n, x - size);
    };
    for (std::uint64_t x = b; x != a; x = from.at(x)) {
      report.cycle.push_back(word(x));
    }
    report.cycle.push_back(word(a));
    report.cycle.push_back(word(b));
    return report;
  }
  return {};
}

SectionReport section_report(const LevelSystem& ls, std::size_t k) {
  SectionReport report;
  report.k = k;
  report.n = ls.n;
  const std::uint64_t size = std::uint64_t{1} << ls.n;

  auto scan = [&](bool rows, std::optional<std::size_t>& reach,
                  std::vector<BinaryWord>& failing) {
    std::vector<std::size_t> degree(size, 0);
    for (const auto& [u, v] : ls.r) ++degree[value_of(rows ? u : v)];
    std::vector<char> pass(2 * size, 0);
    for (std::uint64_t x = 0; x < size; ++x) pass[size | x] = degree[x] >= k;
    for (std::uint64_t h = size - 1; h >= 1; --h) {
      pass[h] = pass[2 * h] || pass[2 * h + 1];
    }
    for (std::size_t len = 0; len <= ls.n; ++len) {
      const std::uint64_t first = std::uint64_t{1} << len;
      for (std::uint64_t h = first; h < 2 * first; ++h) {
        if (!pass[h]) failing.push_back(BinaryWord::from_index(h));
      }
      if (!failing.empty()) return;
      reach = len;
    }
  };
  scan(true, report.row_reach, report.failing_rows);
  scan(false, report.column_reach, report.failing_columns);
  if (report.row_reach && report.column_reach) {
    report.c = ls.n - std::min(*report.row_reach, *report.column_reach);
  }
  return report;
}

std::string level_dump(const std::vector<LevelSystem>& levels) {
  std::ostringstream out;
  for (const auto& ls : levels) {
    out << "level " << ls.n << '\n';
    if (ls.n > 0) {
      const std::size_t k = (ls.n - 1) / 2;
      const auto& st = ls.n % 2 == 1 ? ls.u_history.at(k) : ls.v_history.at(k);
      out << "u " << to_string(st.u) << '\n';
      out << "v " << to_string(st.v) << '\n';
    }
    for (const auto& rule : ls.s_rules) {
      out << "s " << to_string(rule.row) << ' ' << to_string(rule.column)
          << '\n';
    }
    for (const auto& [u, v] : ls.r) {
      out << "R " << to_string(u) << ' ' << to_string(v) << '\n';
    }
    if (ls.n <= kExplicitSLevels) {
      for (const auto& [u, v] : ls.s_pairs()) {
        out << "S " << to_string(u) << ' ' << to_string(v) << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace endmatch
