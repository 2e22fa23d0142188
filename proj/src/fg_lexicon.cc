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

#include "lexie/fg_lexicon.h"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "lexie/error.h"
#include "lexie/strings.h"

namespace lexie {

std::string_view PhaseName(Phase phase) {
  return phase == Phase::kBefore ? "before" : "after";
}

std::string AssertionString(const StateAssertion &a) {
  std::string out = a.polarity ? "" : "not ";
  out += a.predicate + "(";
  for (size_t i = 0; i < a.roles.size(); ++i) {
    if (i) out += ", ";
    out += a.roles[i];
  }
  return out + ") @" + std::string(PhaseName(a.phase));
}

const ArgSpec *ConceptNode::FindArg(std::string_view role) const {
  for (const ArgSpec &arg : args) {
    if (arg.role == role) return &arg;
  }
  return nullptr;
}

const std::string *Realization::RoleFor(const RelationLabel &label) const {
  for (const auto &[rel, role] : source.complement_map) {
    if (rel == label) return &role;
  }
  return nullptr;
}

FgLexicon::FgLexicon(std::vector<ConceptNode> concepts,
                     std::vector<Realization> realizations,
                     std::map<std::string, std::string> parents)
    : concepts_(std::move(concepts)),
      realizations_(std::move(realizations)),
      parents_(std::move(parents)) {
  for (size_t i = 0; i < concepts_.size(); ++i) {
    concept_index_.emplace(concepts_[i].id, i);
  }
  for (size_t i = 0; i < realizations_.size(); ++i) {
    const Realization &r = realizations_[i];
    sense_index_[Key{r.lemma(), r.pos(), r.lang()}].push_back(i);
  }
}

const std::string *FgLexicon::Parent(const std::string &id) const {
  auto it = parents_.find(id);
  return it == parents_.end() ? nullptr : &it->second;
}

const ConceptNode *FgLexicon::FindConcept(std::string_view id) const {
  auto it = concept_index_.find(id);
  return it == concept_index_.end() ? nullptr : &concepts_[it->second];
}

std::vector<const Realization *> FgLexicon::Senses(std::string_view lemma,
                                                   WordClass pos,
                                                   std::string_view lang) const {
  std::vector<const Realization *> out;
  auto it = sense_index_.find(Key{std::string(lemma), pos, std::string(lang)});
  if (it == sense_index_.end()) return out;
  for (size_t i : it->second) out.push_back(&realizations_[i]);
  return out;
}

bool FgLexicon::HasLemma(std::string_view lemma, WordClass pos) const {
  for (const auto &[key, indices] : sense_index_) {
    if (std::get<0>(key) == lemma && std::get<1>(key) == pos) return true;
  }
  return false;
}

RawLexicon FgLexicon::ToRaw() const {
  RawLexicon raw;
  for (const ConceptNode &c : concepts_) {
    RawConcept rc;
    rc.id = c.id;
    rc.general = c.general;
    rc.line = c.line;
    rc.fields.schema = c.schema;
    for (const ArgSpec &a : c.args) {
      rc.fields.args.push_back({a.role, a.restriction, a.slot, a.required});
    }
    rc.fields.assertions = c.assertions;
    rc.fields.instigator = c.instigator;
    rc.fields.discriminators = c.discriminators;
    raw.concepts.push_back(std::move(rc));
  }
  for (const Realization &r : realizations_) raw.realizations.push_back(r.source);
  return raw;
}

std::vector<const Realization *> FgSenses(const FgLexicon &lexicon,
                                          std::string_view lemma, WordClass pos,
                                          std::string_view lang) {
  return lexicon.Senses(lemma, pos, lang);
}

// --- Parsing -----------------------------------------------------------------

namespace {

struct Word {
  std::string text;
  int column;  // 1-based
};

// Whitespace-separated words; '(', ')', ',', ':' and '->' are tokens of
// their own.
std::vector<Word> Lex(std::string_view line) {
  std::vector<Word> out;
  size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t'; };
  auto is_punct = [&](size_t k) {
    char c = line[k];
    if (c == '(' || c == ')' || c == ',' || c == ':') return 1;
    if (c == '-' && k + 1 < line.size() && line[k + 1] == '>') return 2;
    return 0;
  };
  while (i < line.size()) {
    if (is_space(line[i])) {
      ++i;
      continue;
    }
    if (int n = is_punct(i)) {
      out.push_back({std::string(line.substr(i, n)), static_cast<int>(i) + 1});
      i += n;
      continue;
    }
    size_t start = i;
    while (i < line.size() && !is_space(line[i]) && !is_punct(i)) ++i;
    out.push_back({std::string(line.substr(start, i - start)),
                   static_cast<int>(start) + 1});
  }
  return out;
}

class Parser {
 public:
  RawLexicon Run(std::string_view text);

 private:
  [[noreturn]] void Fail(const std::string &msg, const Word &at) const {
    throw ParseError(msg, line_, at.column);
  }
  [[noreturn]] void FailEnd(const std::string &msg) const {
    throw ParseError(msg, line_, end_column_);
  }
  const Word &At(size_t i, const char *what) const {
    if (i >= words_.size()) FailEnd(std::string("expected ") + what);
    return words_[i];
  }
  void Expect(size_t i, const char *text) const {
    const Word &w = At(i, text);
    if (w.text != text) Fail(std::string("expected '") + text + "', got '" + w.text + "'", w);
  }
  void ExpectEnd(size_t i) const {
    if (i < words_.size()) Fail("unexpected '" + words_[i].text + "'", words_[i]);
  }

  void ParseConceptHeader();
  void ParseWordHeader();
  void ParseStatement(size_t first, ConceptPatch &patch);
  void ParseMap(RawRealization &r);
  void CheckReferences();

  RawLexicon lex_;
  std::vector<Word> words_;
  int line_ = 0;
  int end_column_ = 1;
  enum class Block { kNone, kConcept, kWord } block_ = Block::kNone;

  // Locations for post-parse reference checks.
  struct Ref {
    int line;
    int column;
  };
  std::vector<Ref> parent_refs_;
  std::vector<Ref> concept_refs_;
  std::vector<std::vector<Ref>> map_refs_;
};

void Parser::ParseConceptHeader() {
  RawConcept c;
  c.line = line_;
  c.id = At(1, "concept id").text;
  size_t i = 2;
  Ref parent_ref{0, 0};
  while (i < words_.size()) {
    const Word &w = words_[i];
    if (w.text == "isa" && !c.parent) {
      const Word &p = At(i + 1, "parent concept id");
      c.parent = p.text;
      parent_ref = {line_, p.column};
      i += 2;
    } else if (w.text == "general" && !c.general) {
      c.general = true;
      ++i;
    } else {
      Fail("unexpected '" + w.text + "' in concept header", w);
    }
  }
  for (const RawConcept &other : lex_.concepts) {
    if (other.id == c.id) Fail("duplicate concept " + c.id, words_[1]);
  }
  lex_.concepts.push_back(std::move(c));
  parent_refs_.push_back(parent_ref);
  block_ = Block::kConcept;
}

void Parser::ParseWordHeader() {
  // word <lemma> <pos> [lang <tag>] sense <id> -> <concept>
  RawRealization r;
  r.line = line_;
  r.lemma = At(1, "lemma").text;
  const Word &pos = At(2, "part of speech");
  auto wc = ParseWordClass(pos.text);
  if (!wc || *wc == WordClass::kOther) Fail("bad part of speech '" + pos.text + "'", pos);
  r.pos = *wc;
  size_t i = 3;
  if (At(i, "'sense' or 'lang'").text == "lang") {
    r.lang = At(i + 1, "language tag").text;
    i += 2;
  }
  Expect(i, "sense");
  r.sense_id = At(i + 1, "sense id").text;
  Expect(i + 2, "->");
  const Word &target = At(i + 3, "concept id");
  r.concept_id = target.text;
  ExpectEnd(i + 4);
  for (const RawRealization &other : lex_.realizations) {
    if (other.lemma == r.lemma && other.pos == r.pos && other.lang == r.lang &&
        other.sense_id == r.sense_id) {
      Fail("duplicate sense " + r.lemma + "/" + pos.text + "/" + r.lang + "/" +
               r.sense_id, words_[1]);
    }
  }
  lex_.realizations.push_back(std::move(r));
  concept_refs_.push_back({line_, target.column});
  map_refs_.emplace_back();
  block_ = Block::kWord;
}

void Parser::ParseStatement(size_t first, ConceptPatch &patch) {
  const Word &head = At(first, "statement");
  size_t i = first + 1;
  if (head.text == "template") {
    if (patch.schema) Fail("template stated twice", head);
    patch.schema = At(i, "template name").text;
    ExpectEnd(i + 1);
  } else if (head.text == "arg") {
    ArgPatch arg;
    const Word &role = At(i++, "role");
    arg.role = role.text;
    for (const ArgPatch &other : patch.args) {
      if (other.role == arg.role) Fail("argument " + arg.role + " stated twice", role);
    }
    while (i < words_.size()) {
      const Word &w = words_[i];
      if (w.text == ":" && !arg.restriction) {
        arg.restriction = ToUpper(At(i + 1, "class").text);
        i += 2;
      } else if (w.text == "->" && !arg.slot) {
        arg.slot = At(i + 1, "slot name").text;
        i += 2;
      } else if ((w.text == "optional" || w.text == "required") && !arg.required) {
        arg.required = w.text == "required";
        ++i;
      } else {
        Fail("unexpected '" + w.text + "' in arg", w);
      }
    }
    patch.args.push_back(std::move(arg));
  } else if (head.text == "assert") {
    StateAssertion a;
    if (At(i, "predicate").text == "not") {
      a.polarity = false;
      ++i;
    }
    a.predicate = At(i++, "predicate").text;
    Expect(i++, "(");
    if (At(i, "')'").text != ")") {
      while (true) {
        const Word &role = At(i++, "role");
        if (role.text == "," || role.text == ")") Fail("expected a role", role);
        a.roles.push_back(role.text);
        const Word &sep = At(i++, "',' or ')'");
        if (sep.text == ")") break;
        if (sep.text != ",") Fail("expected ',' or ')'", sep);
      }
    } else {
      ++i;
    }
    const Word &phase = At(i++, "@before or @after");
    if (phase.text == "@before") {
      a.phase = Phase::kBefore;
    } else if (phase.text == "@after") {
      a.phase = Phase::kAfter;
    } else {
      Fail("expected @before or @after", phase);
    }
    ExpectEnd(i);
    if (!patch.assertions) patch.assertions.emplace();
    patch.assertions->push_back(std::move(a));
  } else if (head.text == "instigator") {
    if (patch.instigator) Fail("instigator stated twice", head);
    patch.instigator = At(i, "role").text;
    ExpectEnd(i + 1);
  } else if (head.text == "discriminate") {
    DecisionRule rule;
    rule.sense = At(i++, "sense id").text;
    Expect(i++, "when");
    const Word &feature = At(i++, "feature");
    auto f = ParseFeature(feature.text);
    if (!f) Fail("bad feature pattern '" + feature.text + "'", feature);
    rule.feature = *f;
    rule.score = 1.0;
    if (i < words_.size()) {
      Expect(i, "score");
      const Word &value = At(i + 1, "score value");
      char *end = nullptr;
      rule.score = std::strtod(value.text.c_str(), &end);
      if (end == value.text.c_str() || *end != '\0') Fail("bad score", value);
      ExpectEnd(i + 2);
    }
    if (!patch.discriminators) patch.discriminators.emplace();
    patch.discriminators->push_back(std::move(rule));
  } else {
    Fail("unknown statement '" + head.text + "'", head);
  }
}

void Parser::ParseMap(RawRealization &r) {
  // map subj|dobj|iobj|pp:<prep> -> <role>
  size_t i = 1;
  const Word &rel = At(i++, "relation");
  std::string label = rel.text;
  if (label == "pp") {
    Expect(i++, ":");
    label += ":" + At(i++, "preposition").text;
  }
  auto parsed = ParseRelationLabel(label);
  if (!parsed || parsed->type == RelationType::kAgentBy) {
    Fail("bad relation '" + label + "'", rel);
  }
  Expect(i++, "->");
  const Word &role = At(i++, "role");
  ExpectEnd(i);
  for (const auto &[existing, unused] : r.complement_map) {
    if (existing == *parsed) Fail("relation " + label + " mapped twice", rel);
  }
  r.complement_map.emplace_back(*parsed, role.text);
  map_refs_.back().push_back({line_, role.column});
}

void Parser::CheckReferences() {
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < lex_.concepts.size(); ++i) index[lex_.concepts[i].id] = i;
  for (size_t i = 0; i < lex_.concepts.size(); ++i) {
    const auto &parent = lex_.concepts[i].parent;
    if (parent && !index.count(*parent)) {
      throw ParseError("undeclared concept " + *parent, parent_refs_[i].line,
                       parent_refs_[i].column);
    }
  }
  for (size_t i = 0; i < lex_.realizations.size(); ++i) {
    const RawRealization &r = lex_.realizations[i];
    auto it = index.find(r.concept_id);
    if (it == index.end()) {
      throw ParseError("undeclared concept " + r.concept_id, concept_refs_[i].line,
                       concept_refs_[i].column);
    }
    // Roles along the parent chain plus the realization's own overrides.
    std::set<std::string> roles;
    std::set<size_t> seen;
    for (size_t c = it->second; seen.insert(c).second;) {
      for (const ArgPatch &a : lex_.concepts[c].fields.args) roles.insert(a.role);
      if (!lex_.concepts[c].parent) break;
      c = index[*lex_.concepts[c].parent];
    }
    for (const ArgPatch &a : r.overrides.args) roles.insert(a.role);
    for (size_t k = 0; k < r.complement_map.size(); ++k) {
      const std::string &role = r.complement_map[k].second;
      if (!roles.count(role)) {
        throw ParseError("concept " + r.concept_id + " has no role " + role,
                         map_refs_[i][k].line, map_refs_[i][k].column);
      }
    }
  }
}

RawLexicon Parser::Run(std::string_view text) {
  ForEachLine(text, [&](int line_no, std::string_view raw) {
    line_ = line_no;
    std::string_view line = StripComment(raw);
    if (Trim(line).empty()) return;
    words_ = Lex(line);
    end_column_ = static_cast<int>(line.size()) + 1;
    const Word &head = words_[0];
    if (Indentation(line) == 0) {
      if (head.text == "concept") {
        ParseConceptHeader();
      } else if (head.text == "word") {
        ParseWordHeader();
      } else {
        Fail("unknown directive '" + head.text + "'", head);
      }
      return;
    }
    switch (block_) {
      case Block::kNone:
        Fail("indented line outside a concept or word block", head);
      case Block::kConcept:
        ParseStatement(0, lex_.concepts.back().fields);
        break;
      case Block::kWord:
        if (head.text == "map") {
          ParseMap(lex_.realizations.back());
        } else if (head.text == "override") {
          ParseStatement(1, lex_.realizations.back().overrides);
        } else {
          Fail("expected 'map' or 'override', got '" + head.text + "'", head);
        }
        break;
    }
  });
  CheckReferences();
  return std::move(lex_);
}

}  // namespace

RawLexicon ParseFgLexicon(std::string_view text) { return Parser().Run(text); }

// --- Inheritance ---------------------------------------------------------------

ConceptNode ApplyPatch(ConceptNode base, const ConceptPatch &patch) {
  if (patch.schema) base.schema = patch.schema;
  for (const ArgPatch &p : patch.args) {
    auto it = std::find_if(base.args.begin(), base.args.end(),
                           [&](const ArgSpec &a) { return a.role == p.role; });
    if (it == base.args.end()) {
      base.args.push_back(ArgSpec{p.role, p.restriction.value_or(""), p.slot,
                                  p.required.value_or(true)});
      continue;
    }
    if (p.restriction) it->restriction = *p.restriction;
    if (p.slot) it->slot = p.slot;
    if (p.required) it->required = *p.required;
  }
  if (patch.assertions) base.assertions = *patch.assertions;
  if (patch.instigator) base.instigator = patch.instigator;
  if (patch.discriminators) {
    base.discriminators = *patch.discriminators;
    SortRules(base.discriminators);
  }
  return base;
}

namespace {

void CheckComplete(const ConceptNode &node, const std::string &what, int line) {
  if (!node.general && !node.schema) {
    throw ParseError(what + " has no template", line);
  }
  for (const ArgSpec &a : node.args) {
    if (a.restriction.empty()) {
      throw ParseError(what + ": argument " + a.role + " has no restriction", line);
    }
  }
}

}  // namespace

FgLexicon ResolveInheritance(const RawLexicon &raw) {
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < raw.concepts.size(); ++i) index[raw.concepts[i].id] = i;

  std::vector<std::optional<ConceptNode>> done(raw.concepts.size());
  std::vector<bool> active(raw.concepts.size(), false);

  // Iterative to keep deep chains off the call stack.
  for (size_t start = 0; start < raw.concepts.size(); ++start) {
    std::vector<size_t> stack{start};
    while (!stack.empty()) {
      size_t cur = stack.back();
      if (done[cur]) {
        stack.pop_back();
        continue;
      }
      const RawConcept &rc = raw.concepts[cur];
      std::optional<size_t> parent;
      if (rc.parent) {
        auto it = index.find(*rc.parent);
        if (it == index.end()) {
          throw ParseError("undeclared concept " + *rc.parent, rc.line);
        }
        parent = it->second;
      }
      if (parent && !done[*parent]) {
        if (active[*parent]) {
          std::vector<std::string> ids;
          for (auto s = std::find(stack.begin(), stack.end(), *parent);
               s != stack.end(); ++s) {
            ids.push_back(raw.concepts[*s].id);
          }
          std::string names;
          for (const auto &id : ids) names += (names.empty() ? "" : ", ") + id;
          throw ParseError("cycle in concept hierarchy: {" + names + "}", rc.line);
        }
        active[cur] = true;
        stack.push_back(*parent);
        continue;
      }
      ConceptNode base;
      if (parent) base = *done[*parent];
      base.id = rc.id;
      base.general = rc.general;
      base.line = rc.line;
      done[cur] = ApplyPatch(std::move(base), rc.fields);
      active[cur] = false;
      stack.pop_back();
    }
  }

  std::vector<ConceptNode> concepts;
  for (auto &node : done) {
    CheckComplete(*node, "concept " + node->id, node->line);
    concepts.push_back(std::move(*node));
  }
  std::vector<Realization> realizations;
  for (const RawRealization &rr : raw.realizations) {
    auto it = index.find(rr.concept_id);
    if (it == index.end()) {
      throw ParseError("undeclared concept " + rr.concept_id, rr.line);
    }
    Realization r{rr, ApplyPatch(concepts[it->second], rr.overrides)};
    if (!rr.overrides.empty()) {
      CheckComplete(r.resolved, "word " + rr.lemma + " sense " + rr.sense_id, rr.line);
    }
    realizations.push_back(std::move(r));
  }
  std::map<std::string, std::string> parents;
  for (const RawConcept &rc : raw.concepts) {
    if (rc.parent) parents[rc.id] = *rc.parent;
  }
  return FgLexicon(std::move(concepts), std::move(realizations), std::move(parents));
}

// --- Validation ------------------------------------------------------------------

std::string DiagnosticString(const Diagnostic &d, std::string_view path) {
  std::string out = d.severity == Severity::kError ? "error: " : "warning: ";
  if (!path.empty()) out += std::string(path) + ":";
  if (d.line > 0) out += std::to_string(d.line) + ":";
  if (!path.empty() || d.line > 0) out += " ";
  return out + d.message;
}

namespace {

// Problems found on a resolved node, without location.
std::vector<std::string> NodeProblems(const ConceptNode &node, const Ontology &ontology) {
  std::vector<std::string> out;
  auto error = [&](const std::string &msg) { out.push_back(msg); };
  const TemplateSchema *schema = nullptr;
  if (node.schema) {
    schema = ontology.FindSchema(*node.schema);
    if (schema == nullptr) error("unknown template " + *node.schema);
  }
  std::set<std::string> roles;
  for (const ArgSpec &arg : node.args) {
    roles.insert(arg.role);
    bool class_ok = ontology.HasClass(arg.restriction);
    if (!class_ok) error("argument " + arg.role + " has unknown class " + arg.restriction);
    if (!arg.slot) continue;
    if (!node.schema) {
      error("argument " + arg.role + " binds slot " + *arg.slot + " but there is no template");
      continue;
    }
    if (schema == nullptr) continue;
    const SlotSpec *slot = schema->FindSlot(*arg.slot);
    if (slot == nullptr) {
      error("template " + schema->name + " has no slot " + *arg.slot);
    } else if (class_ok && !ontology.Compatible(arg.restriction, slot->filler_class)) {
      error("argument " + arg.role + " restriction " + arg.restriction +
            " is incompatible with slot " + slot->name + " (" + slot->filler_class + ")");
    }
  }
  for (const StateAssertion &a : node.assertions) {
    for (const std::string &role : a.roles) {
      if (!roles.count(role)) error("assertion " + AssertionString(a) + " uses unknown role " + role);
    }
  }
  if (node.instigator && !roles.count(*node.instigator)) {
    error("instigator " + *node.instigator + " is not a role");
  }
  return out;
}

// Reports the problems of `node` that its parent does not already have, so an
// inherited mistake is reported once, where it was written.
void Report(const std::vector<std::string> &problems, const std::vector<std::string> &inherited,
            const std::string &where, int line, std::vector<Diagnostic> &out) {
  for (const std::string &p : problems) {
    if (std::find(inherited.begin(), inherited.end(), p) != inherited.end()) continue;
    out.push_back({Severity::kError, line, where + ": " + p});
  }
}

}  // namespace

std::vector<Diagnostic> Validate(const FgLexicon &lexicon,
                                 const Ontology &ontology) {
  std::vector<Diagnostic> out;
  std::map<std::string, std::vector<std::string>> problems;
  for (const ConceptNode &c : lexicon.concepts()) problems[c.id] = NodeProblems(c, ontology);
  static const std::vector<std::string> kNone;
  for (const ConceptNode &c : lexicon.concepts()) {
    const std::string *p = lexicon.Parent(c.id);
    Report(problems[c.id], p == nullptr ? kNone : problems[*p], "concept " + c.id,
           c.line, out);
    std::set<std::string> senses;
    for (const Realization &r : lexicon.realizations()) {
      if (r.concept_id() == c.id) senses.insert(r.sense_id());
    }
    for (const DecisionRule &rule : c.discriminators) {
      if (!senses.count(rule.sense)) {
        out.push_back({Severity::kWarning, c.line,
                       "concept " + c.id + ": discriminator names sense " +
                           rule.sense + " which no word of this concept has"});
      }
    }
  }
  for (const Realization &r : lexicon.realizations()) {
    std::string where = "word " + r.lemma() + " sense " + r.sense_id();
    if (!r.source.overrides.empty()) {
      Report(NodeProblems(r.resolved, ontology), problems[r.concept_id()], where, r.source.line,
             out);
    }
    for (const auto &[rel, role] : r.complement_map()) {
      if (r.resolved.FindArg(role) == nullptr) {
        out.push_back({Severity::kError, r.source.line,
                       where + ": " + RelationName(rel) + " maps to unknown role " + role});
      }
    }
  }
  return out;
}

}  // namespace lexie
