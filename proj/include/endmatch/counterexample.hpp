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

// Finite stages of a recursion on pairs of binary words of equal length. Each
// level n carries R_n and S_n, subsets of 2^n x 2^n with R_n inside S_n, such
// that
//   (1) every row u has some v with (u, v) in S_n, and
//   (2) every column v has some u outside the first projection of R_n with
//       (u, v) in S_n,
// and such that the bipartite graph with edge set R_n is a forest.
//
// Going up one level, every pair (u, v) of R spawns (u0, v0) and (u1, v1),
// and every pair of S spawns its four child pairs. An odd step adds one pair
// (u0, v1) to R; an even step cuts one row of S down to a single column.

#ifndef ENDMATCH_COUNTEREXAMPLE_HPP_
#define ENDMATCH_COUNTEREXAMPLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace endmatch {

// A binary word of length <= kMaxWordLength, stored as the heap index
// 2^length + value. Words of one length compare lexicographically.
class BinaryWord {
 public:
  static constexpr std::size_t kMaxWordLength = 62;

  BinaryWord() = default;
  // Accepts '0'/'1' characters; "-" and "" are the empty word.
  static BinaryWord parse(const std::string& text);
  static BinaryWord from_index(std::uint64_t index) { return BinaryWord(index); }

  std::uint64_t index() const { return index_; }
  std::size_t length() const;
  int bit(std::size_t i) const;
  BinaryWord child(int b) const;
  BinaryWord prefix(std::size_t length) const;
  bool is_prefix_of(const BinaryWord& w) const;
  bool compatible(const BinaryWord& w) const {
    return is_prefix_of(w) || w.is_prefix_of(*this);
  }

  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  explicit BinaryWord(std::uint64_t index) : index_(index) {}
  std::uint64_t index_ = 1;
};

// "-" for the empty word.
std::string to_string(const BinaryWord& w);

using WordPair = std::pair<BinaryWord, BinaryWord>;

inline constexpr std::size_t kDefaultLevels = 16;
inline constexpr std::size_t kMaxLevels = 24;

// Scheduled words as '0'/'1' strings: u_{2m} of length 2m and v_{2m+1} of
// length 2m + 1. Strings are served in length-lexicographic order, skipping
// those already a prefix of an earlier scheduled word of the same kind, and
// padded with trailing zeros.
std::pair<std::string, std::string> dense_schedule(std::size_t m);

// dense_schedule(0), ..., dense_schedule(count - 1).
std::vector<std::pair<std::string, std::string>> schedule_prefix(
    std::size_t count);

struct LevelSystem {
  // Forces v to extend `column` whenever u extends `row`.
  struct RowRule {
    BinaryWord row;
    BinaryWord column;

    friend bool operator==(const RowRule&, const RowRule&) = default;
  };

  struct Step {
    BinaryWord u;
    BinaryWord v;

    friend bool operator==(const Step&, const Step&) = default;
  };

  std::size_t n = 0;
  std::vector<WordPair> r;  // sorted
  // S_n is every pair of length-n words obeying all rules; rules are only
  // added at even levels, so S_1 is everything.
  std::vector<RowRule> s_rules;
  std::vector<Step> u_history;  // (u_{2k}, chosen v_{2k})
  std::vector<Step> v_history;  // (chosen u_{2k+1}, v_{2k+1})
  std::size_t cursor = 0;       // next schedule index

  bool in_s(const BinaryWord& u, const BinaryWord& v) const;
  bool in_r(const BinaryWord& u, const BinaryWord& v) const;
  // Every pair of S_n in order. Throws InvalidArgument above level 10.
  std::vector<WordPair> s_pairs() const;

  friend bool operator==(const LevelSystem&, const LevelSystem&) = default;
};

LevelSystem init_level();

// One level up: an odd step from an even level, an even step from an odd
// level. Throws InvalidArgument past kMaxLevels and InvariantViolation if a
// required choice does not exist.
LevelSystem step(const LevelSystem& ls);

// Two levels up, from an even level. Throws InvalidArgument at odd levels.
LevelSystem advance(const LevelSystem& ls);

// Levels 0..count.
std::vector<LevelSystem> build_levels(std::size_t count);

struct ConditionReport {
  bool r_in_s = true;
  bool rows_ok = true;     // condition (1)
  bool columns_ok = true;  // condition (2)
  std::optional<BinaryWord> bad_row;
  std::optional<BinaryWord> bad_column;
  std::optional<WordPair> stray_pair;  // in R but not in S

  bool ok() const { return r_in_s && rows_ok && columns_ok; }
};

// Exhaustive over all 2^n rows and columns.
ConditionReport check_conditions(const LevelSystem& ls);

struct AcyclicityReport {
  bool acyclic = true;
  // Alternating row and column words of a cycle, first word repeated last.
  std::vector<BinaryWord> cycle;
};

AcyclicityReport check_acyclic(const LevelSystem& ls);

struct SectionReport {
  std::size_t k = 0;
  std::size_t n = 0;
  // Every row prefix of length <= row_reach has an extension of length n
  // with at least k partners in R; likewise for columns. Empty when even
  // the empty prefix fails.
  std::optional<std::size_t> row_reach;
  std::optional<std::size_t> column_reach;
  std::optional<std::size_t> c;  // n - min(row_reach, column_reach)
  // Failing prefixes of the first failing length, in order.
  std::vector<BinaryWord> failing_rows;
  std::vector<BinaryWord> failing_columns;

  bool all_pass() const { return c == 0; }
};

SectionReport section_report(const LevelSystem& ls, std::size_t k);

// Levels up to this one list S pair by pair in a dump.
inline constexpr std::size_t kExplicitSLevels = 6;

// Text dump of the given levels: per level `level n`, the step words `u w`
// and `v w` that produced it, one `s row column` line per rule, the pairs
// `R a b`, and `S a b` up to kExplicitSLevels.
std::string level_dump(const std::vector<LevelSystem>& levels);

}  // namespace endmatch

#endif  // ENDMATCH_COUNTEREXAMPLE_HPP_
