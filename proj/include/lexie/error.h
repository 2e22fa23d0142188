// Copyright 2026 The Lexie Authors.
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

#ifndef LEXIE_ERROR_H_
#define LEXIE_ERROR_H_

#include <stdexcept>
#include <string>

namespace lexie {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &message) : std::runtime_error(message) {}
};

// Malformed input. Line and column are 1-based; zero means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, int line, int column = 0)
      : Error(Format(message, line, column)),
        line_(line),
        column_(column),
        detail_(message) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string &detail() const { return detail_; }

 private:
  static std::string Format(const std::string &message, int line, int column) {
    std::string out = "line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    return out + ": " + message;
  }

  int line_;
  int column_;
  std::string detail_;
};

}  // namespace lexie

#endif  // LEXIE_ERROR_H_
