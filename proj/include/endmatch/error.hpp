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

#ifndef ENDMATCH_ERROR_HPP_
#define ENDMATCH_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace endmatch {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument failed (invalid vertex, malformed descriptor,
// hypothesis of a construction not met).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed text input. Carries a 1-based line/column position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A search ran past its configured budget. On inputs with injective rays of
// degree two on even indices this is the expected outcome; `frontier` holds
// rendered vertices at which the search was still growing.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::vector<std::string> frontier)
      : Error(what), frontier_(std::move(frontier)) {}

  const std::vector<std::string>& frontier() const { return frontier_; }

 private:
  std::vector<std::string> frontier_;
};

// An internal consistency check failed. Never expected; signals a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace endmatch

#endif  // ENDMATCH_ERROR_HPP_
