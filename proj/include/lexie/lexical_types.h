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

#ifndef LEXIE_LEXICAL_TYPES_H_
#define LEXIE_LEXICAL_TYPES_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace lexie {

// Lexicon-level part of speech; corpus tags map onto this.
enum class WordClass { kNoun, kVerb, kAdj, kOther };

std::string_view WordClassName(WordClass wc);
std::optional<WordClass> ParseWordClass(std::string_view name);

enum class RelationType { kSubj, kDobj, kIobj, kAgentBy, kPp };

// A grammatical relation label; prep is set only for kPp.
struct RelationLabel {
  RelationType type = RelationType::kSubj;
  std::string prep;

  auto operator<=>(const RelationLabel &) const = default;
};

// "subj", "dobj", "iobj", "agent_by", "pp:<prep>".
std::string RelationName(const RelationLabel &label);
std::optional<RelationLabel> ParseRelationLabel(std::string_view text);

}  // namespace lexie

#endif  // LEXIE_LEXICAL_TYPES_H_
