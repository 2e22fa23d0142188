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

#ifndef LEXIE_ONTOLOGY_H_
#define LEXIE_ONTOLOGY_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexie {

enum class LexicalCategory { kAny, kNoun, kVerb };

std::string_view CategoryName(LexicalCategory category);

// A node in the semantic-class forest. Ids are uppercase.
struct SemClass {
  std::string id;
  std::optional<std::string> parent;
  LexicalCategory category = LexicalCategory::kAny;

  bool operator==(const SemClass &) const = default;
};

enum class Multiplicity { kOne, kMany };

struct SlotSpec {
  std::string name;
  std::string filler_class;
  bool required = false;
  Multiplicity multiplicity = Multiplicity::kOne;

  bool operator==(const SlotSpec &) const = default;
};

struct TemplateSchema {
  std::string name;
  std::vector<SlotSpec> slots;

  const SlotSpec *FindSlot(std::string_view slot) const;

  bool operator==(const TemplateSchema &) const = default;
};

// Semantic-class taxonomy plus the template schemas the extraction task
// fills. Immutable once loaded.
class Ontology {
 public:
  Ontology() = default;

  // Validates and indexes. Throws ParseError on duplicate ids, dangling
  // parents, cycles, or schema slots whose class does not resolve.
  Ontology(std::vector<SemClass> classes, std::vector<TemplateSchema> schemas);

  const std::vector<SemClass> &classes() const { return classes_; }
  const std::vector<TemplateSchema> &schemas() const { return schemas_; }

  bool HasClass(std::string_view id) const;
  const SemClass &Class(std::string_view id) const;
  const TemplateSchema *FindSchema(std::string_view name) const;

  // Parent chain from id (inclusive) up to its root.
  std::vector<std::string> Ancestors(std::string_view id) const;

  // True iff ancestor lies on descendant's parent chain (or equals it).
  bool Subsumes(std::string_view ancestor, std::string_view descendant) const;

  // Two-way subsumption: an ancestor tag satisfies a descendant restriction
  // and vice versa. Disjoint branches are incompatible.
  bool Compatible(std::string_view a, std::string_view b) const;

  bool operator==(const Ontology &other) const {
    return classes_ == other.classes_ && schemas_ == other.schemas_;
  }

 private:
  size_t IndexOf(std::string_view id) const;

  std::vector<SemClass> classes_;
  std::vector<TemplateSchema> schemas_;
  std::map<std::string, size_t, std::less<>> index_;
  std::vector<int> parent_index_;  // -1 for roots
  std::vector<int> depth_;
};

// Parses the line-oriented ontology format:
//
//   # comment
//   class <ID> [isa <ID>] [cat noun|verb]
//   template <NAME>
//     slot <name> : <CLASS> [required] [many]
//
// Class ids are upper-cased. Forward references are allowed.
Ontology LoadOntology(std::string_view text);

// Canonical text form; LoadOntology(SerializeOntology(o)) == o.
std::string SerializeOntology(const Ontology &ontology);

}  // namespace lexie

#endif  // LEXIE_ONTOLOGY_H_
