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

#ifndef LEXIE_TESTS_TEST_UTIL_H_
#define LEXIE_TESTS_TEST_UTIL_H_

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

namespace lexie::testing {

inline std::string DataPath(const std::string &name) {
  return std::string(LEXIE_TEST_DATA) + "/" + name;
}

inline std::string ReadData(const std::string &name) {
  std::ifstream in(DataPath(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Vertical text from "The/DET school/NN ..." items; a blank-separated "|"
// ends a sentence. Lemmas are lowercased surfaces unless written as
// surface/lemma/TAG.
inline std::string TaggedVertical(const std::string &text, const std::string &doc_id = "t") {
  std::string out = "#DOC " + doc_id + "\n";
  std::istringstream in(text);
  std::string item;
  while (in >> item) {
    if (item == "|") {
      out += "\n";
      continue;
    }
    auto a = item.find('/');
    auto b = item.rfind('/');
    std::string surface = item.substr(0, a);
    std::string lemma = surface;
    if (a == b) {
      for (char &c : lemma) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else {
      lemma = item.substr(a + 1, b - a - 1);
    }
    out += surface + "\t" + lemma + "\t" + item.substr(b + 1) + "\n";
  }
  return out;
}

}  // namespace lexie::testing

#endif  // LEXIE_TESTS_TEST_UTIL_H_
