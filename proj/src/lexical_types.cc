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

#include "lexie/lexical_types.h"

namespace lexie {

std::string_view WordClassName(WordClass wc) {
  switch (wc) {
    case WordClass::kNoun: return "noun";
    case WordClass::kVerb: return "verb";
    case WordClass::kAdj: return "adj";
    case WordClass::kOther: return "other";
  }
  return "other";
}

std::optional<WordClass> ParseWordClass(std::string_view name) {
  if (name == "noun") return WordClass::kNoun;
  if (name == "verb") return WordClass::kVerb;
  if (name == "adj") return WordClass::kAdj;
  if (name == "other") return WordClass::kOther;
  return std::nullopt;
}

std::string RelationName(const RelationLabel &label) {
  switch (label.type) {
    case RelationType::kSubj: return "subj";
    case RelationType::kDobj: return "dobj";
    case RelationType::kIobj: return "iobj";
    case RelationType::kAgentBy: return "agent_by";
    case RelationType::kPp: return "pp:" + label.prep;
  }
  return "subj";
}

std::optional<RelationLabel> ParseRelationLabel(std::string_view text) {
  if (text == "subj") return RelationLabel{RelationType::kSubj, ""};
  if (text == "dobj") return RelationLabel{RelationType::kDobj, ""};
  if (text == "iobj") return RelationLabel{RelationType::kIobj, ""};
  if (text == "agent_by") return RelationLabel{RelationType::kAgentBy, ""};
  if (text.size() > 3 && text.substr(0, 3) == "pp:") {
    return RelationLabel{RelationType::kPp, std::string(text.substr(3))};
  }
  return std::nullopt;
}

}  // namespace lexie
