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

#ifndef LEXIE_STRINGS_H_
#define LEXIE_STRINGS_H_

#include <string>
#include <string_view>
#include <vector>

namespace lexie {

std::string_view Trim(std::string_view s);

// Splits on runs of ASCII whitespace.
std::vector<std::string> SplitWhitespace(std::string_view s);

std::vector<std::string> Split(std::string_view s, char sep);

std::string ToUpper(std::string_view s);
std::string ToLower(std::string_view s);

// Fixed six-decimal rendering used by every persisted weight.
std::string FormatWeight(double value);

// Number of leading spaces; tabs count as one column each.
int Indentation(std::string_view line);

// Strips a trailing '#' comment. Returns the comment text (without '#') in
// *comment when non-null.
std::string_view StripComment(std::string_view line,
                              std::string *comment = nullptr);

// Calls fn(line_number, line) for each line, 1-based, without the newline.
template <typename Fn>
void ForEachLine(std::string_view text, Fn &&fn) {
  int number = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(++number, line);
    pos = end + 1;
  }
}

}  // namespace lexie

#endif  // LEXIE_STRINGS_H_
