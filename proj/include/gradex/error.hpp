// Copyright 2026 The gradex Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gradex {

/// Base of every exception thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different fields, rings or free modules.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Mathematically undefined request (division by zero, pdim of the zero
/// module, non-homogeneous input to a graded algorithm, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Bad request: missing or inconsistent options, unknown module names.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, UnknownVariable, NonHomogeneous, DegreeMismatch, Schema };

  ParseError(Kind kind, const std::string& message, std::size_t line = 0, std::size_t column = 0)
      : Error(format(kind, message, line, column)), kind_(kind), detail_(message), line_(line), column_(column) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// The message without kind and location.
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string format(Kind kind, const std::string& message, std::size_t line, std::size_t column) {
    std::string out;
    switch (kind) {
      case Kind::Syntax: out = "syntax error"; break;
      case Kind::UnknownVariable: out = "unknown variable"; break;
      case Kind::NonHomogeneous: out = "non-homogeneous entry"; break;
      case Kind::DegreeMismatch: out = "twist/degree mismatch"; break;
      case Kind::Schema: out = "invalid document"; break;
    }
    if (line != 0) out += " at " + std::to_string(line) + ":" + std::to_string(column);
    return out + ": " + message;
  }

  Kind kind_;
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gradex
