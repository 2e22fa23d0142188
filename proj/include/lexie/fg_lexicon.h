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

#ifndef LEXIE_FG_LEXICON_H_
#define LEXIE_FG_LEXICON_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "lexie/decision_list.h"
#include "lexie/lexical_types.h"
#include "lexie/ontology.h"

namespace lexie {

enum class Phase { kBefore, kAfter };

std::string_view PhaseName(Phase phase);

// A before/after fact an event implies, over the concept's roles.
struct StateAssertion {
  std::string predicate;
  std::vector<std::string> roles;
  bool polarity = true;
  Phase phase = Phase::kAfter;

  bool operator==(const StateAssertion &) const = default;
};

std::string AssertionString(const StateAssertion &a);

// A fully specified argument. `slot` names a slot of the owning concept's
// template.
struct ArgSpec {
  std::string role;
  std::string restriction;
  std::optional<std::string> slot;
  bool required = true;

  bool operator==(const ArgSpec &) const = default;
};

// A flattened concept. General concepts stand for dictionary senses that
// carry restrictions but no template; they can survive the restriction
// filter but never produce output.
struct ConceptNode {
  std::string id;
  bool general = false;
  std::optional<std::string> schema;
  std::vector<ArgSpec> args;
  std::vector<StateAssertion> assertions;
  std::optional<std::string> instigator;
  std::vector<DecisionRule> discriminators;  // sorted
  int line = 0;

  const ArgSpec *FindArg(std::string_view role) const;

  bool operator==(const ConceptNode &) const = default;
};

// --- Raw (pre-inheritance) form ---------------------------------------------

// Any subset of an argument's fields; unset fields inherit.
struct ArgPatch {
  std::string role;
  std::optional<std::string> restriction;
  std::optional<std::string> slot;
  std::optional<bool> required;

  bool operator==(const ArgPatch &) const = default;
};

// Locally stated fields. Assertions and discriminators are replaced
// wholesale when present; args merge per role and per field.
struct ConceptPatch {
  std::optional<std::string> schema;
  std::vector<ArgPatch> args;
  std::optional<std::vector<StateAssertion>> assertions;
  std::optional<std::string> instigator;
  std::optional<std::vector<DecisionRule>> discriminators;

  bool empty() const {
    return !schema && args.empty() && !assertions && !instigator &&
           !discriminators;
  }
  bool operator==(const ConceptPatch &) const = default;
};

struct RawConcept {
  std::string id;
  std::optional<std::string> parent;
  bool general = false;
  ConceptPatch fields;
  int line = 0;

  bool operator==(const RawConcept &) const = default;
};

using ComplementMap = std::vector<std::pair<RelationLabel, std::string>>;

struct RawRealization {
  std::string lemma;
  WordClass pos = WordClass::kVerb;
  std::string lang = "en";
  std::string sense_id;
  std::string concept_id;
  ComplementMap complement_map;
  ConceptPatch overrides;
  int line = 0;

  bool operator==(const RawRealization &) const = default;
};

struct RawLexicon {
  std::vector<RawConcept> concepts;
  std::vector<RawRealization> realizations;

  bool operator==(const RawLexicon &) const = default;
};

// --- Resolved form -----------------------------------------------------------

// A word sense bound to a concept. `resolved` is the concept with this
// realization's overrides applied; the shared concept is untouched.
struct Realization {
  RawRealization source;
  ConceptNode resolved;

  const std::string &lemma() const { return source.lemma; }
  WordClass pos() const { return source.pos; }
  const std::string &lang() const { return source.lang; }
  const std::string &sense_id() const { return source.sense_id; }
  const std::string &concept_id() const { return source.concept_id; }
  const ComplementMap &complement_map() const { return source.complement_map; }

  // Role mapped from a grammatical relation, if any.
  const std::string *RoleFor(const RelationLabel &label) const;

  bool operator==(const Realization &) const = default;
};

class FgLexicon {
 public:
  FgLexicon() = default;
  FgLexicon(std::vector<ConceptNode> concepts,
            std::vector<Realization> realizations,
            std::map<std::string, std::string> parents = {});

  const std::vector<ConceptNode> &concepts() const { return concepts_; }
  const std::vector<Realization> &realizations() const { return realizations_; }

  const ConceptNode *FindConcept(std::string_view id) const;

  // Declared parent of a concept, or nullptr. Not part of equality.
  const std::string *Parent(const std::string &id) const;

  // All senses of the key in declaration order; empty for unknown words.
  std::vector<const Realization *> Senses(std::string_view lemma, WordClass pos,
                                          std::string_view lang = "en") const;

  // True iff some realization has this lemma and part of speech.
  bool HasLemma(std::string_view lemma, WordClass pos) const;

  // Flat raw form: no parents, every field explicit. Resolving it yields
  // this lexicon again.
  RawLexicon ToRaw() const;

  bool operator==(const FgLexicon &other) const {
    return concepts_ == other.concepts_ && realizations_ == other.realizations_;
  }

 private:
  using Key = std::tuple<std::string, WordClass, std::string>;

  std::vector<ConceptNode> concepts_;
  std::vector<Realization> realizations_;
  std::map<std::string, size_t, std::less<>> concept_index_;
  std::map<Key, std::vector<size_t>> sense_index_;
  std::map<std::string, std::string> parents_;
};

// Parses the foreground DSL. Inheritance links are kept. Throws ParseError
// (with line and column) on syntax errors, undeclared concepts, duplicate
// keys, and complement mappings to roles the concept chain never declares.
RawLexicon ParseFgLexicon(std::string_view text);

// Flattens single-parent default inheritance: child fields override parent
// fields per field; realization overrides apply to that realization only.
// Throws ParseError on parent cycles or when a non-general concept ends up
// without a template or an argument without a restriction.
FgLexicon ResolveInheritance(const RawLexicon &raw);

// Merges a patch onto a resolved node (the inheritance step).
ConceptNode ApplyPatch(ConceptNode base, const ConceptPatch &patch);

std::vector<const Realization *> FgSenses(const FgLexicon &lexicon,
                                          std::string_view lemma, WordClass pos,
                                          std::string_view lang = "en");

enum class Severity { kError, kWarning };

struct Diagnostic {
  Severity severity = Severity::kError;
  int line = 0;
  std::string message;

  bool operator==(const Diagnostic &) const = default;
};

std::string DiagnosticString(const Diagnostic &d, std::string_view path = "");

// Cross-checks every restriction, template, slot binding, role reference and
// assertion role against the ontology. Empty result means valid.
std::vector<Diagnostic> Validate(const FgLexicon &lexicon,
                                 const Ontology &ontology);

}  // namespace lexie

#endif  // LEXIE_FG_LEXICON_H_
