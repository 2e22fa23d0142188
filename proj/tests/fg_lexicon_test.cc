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

#include <random>

#include "doctest.h"
#include "fg_random.h"
#include "lexie/error.h"
#include "lexie/ontology.h"
#include "test_util.h"

namespace lexie {
namespace {

constexpr const char *kSmall = R"(
concept DISMISS-EVENT
  template SUCCESSION
  arg org : EMPLOYER -> ORGANIZATION
  arg person : INDIVIDUAL -> PERSON_OUT
  assert not employed(person, org) @after
  instigator org

word sack verb sense s1 -> DISMISS-EVENT
  map subj -> org
  map dobj -> person
word dismiss verb sense s1 -> DISMISS-EVENT
  map subj -> org
  map dobj -> person
word remove verb sense s1 -> DISMISS-EVENT
  map subj -> org
  map dobj -> person
)";

FgLexicon Resolve(std::string_view text) { return ResolveInheritance(ParseFgLexicon(text)); }

Ontology MucOntology() { return LoadOntology(testing::ReadData("muc.ont")); }

TEST_CASE("parse one concept with three realizations") {
  RawLexicon raw = ParseFgLexicon(kSmall);
  REQUIRE(raw.concepts.size() == 1);
  REQUIRE(raw.realizations.size() == 3);
  const RawConcept &c = raw.concepts[0];
  CHECK(c.id == "DISMISS-EVENT");
  CHECK(c.fields.schema == "SUCCESSION");
  REQUIRE(c.fields.args.size() == 2);
  CHECK(c.fields.args[0].role == "org");
  CHECK(c.fields.args[0].restriction == "EMPLOYER");
  CHECK(c.fields.args[0].slot == "ORGANIZATION");
  REQUIRE(c.fields.assertions);
  CHECK(AssertionString(c.fields.assertions->at(0)) == "not employed(person, org) @after");
  CHECK(raw.realizations[2].lemma == "remove");
  CHECK(raw.realizations[2].complement_map.size() == 2);
}

TEST_CASE("empty source") {
  RawLexicon raw = ParseFgLexicon("");
  CHECK(raw.concepts.empty());
  CHECK(raw.realizations.empty());
  CHECK(ResolveInheritance(raw).concepts().empty());
}

TEST_CASE("mapping to an unknown role names the role") {
  try {
    ParseFgLexicon(
        "concept C\n  template T\n  arg org : A\n"
        "word w verb sense s1 -> C\n  map dobj -> boss\n");
    FAIL("expected an error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 5);
    CHECK(e.column() == 15);
    CHECK(std::string(e.what()).find("boss") != std::string::npos);
  }
}

TEST_CASE("syntax errors carry line and column") {
  try {
    ParseFgLexicon("concept C\n  template T\n  arg org ; A\n");
    FAIL("expected an error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 11);
  }
  try {
    ParseFgLexicon("word w verb sense s1 -> NOWHERE\n");
    FAIL("expected an error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 25);
    CHECK(std::string(e.what()).find("NOWHERE") != std::string::npos);
  }
  CHECK_THROWS_AS(ParseFgLexicon("concept C isa MISSING\n"), ParseError);
  CHECK_THROWS_AS(ParseFgLexicon("  template T\n"), ParseError);
  CHECK_THROWS_AS(ParseFgLexicon("concept C\nconcept C\n"), ParseError);
  CHECK_THROWS_AS(ParseFgLexicon("concept C\n  assert p(a) @later\n"), ParseError);
  CHECK_THROWS_AS(ParseFgLexicon("concept C\n  discriminate s1 when bogus=x\n"), ParseError);
  CHECK_THROWS_AS(ParseFgLexicon("concept C\n  template T\n"
                                 "word w verb sense s1 -> C\nword w verb sense s1 -> C\n"),
                  ParseError);
}

TEST_CASE("child override replaces the parent's assertions") {
  FgLexicon lex = Resolve(R"(
concept DISMISS-EVENT
  template SUCCESSION
  arg org : EMPLOYER -> ORGANIZATION
  arg person : INDIVIDUAL -> PERSON_OUT
  arg post : POSITION -> POST optional
  assert not employed(person, org) @after
concept REMOVE-FROM-POST isa DISMISS-EVENT
  assert not holds_post(person, post) @after
)");
  const ConceptNode *child = lex.FindConcept("REMOVE-FROM-POST");
  REQUIRE(child != nullptr);
  REQUIRE(child->assertions.size() == 1);
  CHECK(child->assertions[0].predicate == "holds_post");
  CHECK_FALSE(child->assertions[0].polarity);
  CHECK(child->schema == "SUCCESSION");
  CHECK(child->args.size() == 3);
}

TEST_CASE("pure inheritance copies everything but the id") {
  FgLexicon lex = Resolve(R"(
concept P
  template T
  arg a : X -> S1
  assert q(a) @before
  instigator a
  discriminate s1 when word_left=court score 2.5
concept K isa P
)");
  ConceptNode parent = *lex.FindConcept("P");
  ConceptNode child = *lex.FindConcept("K");
  CHECK(child.id == "K");
  child.id = parent.id;
  child.line = parent.line;
  CHECK(child == parent);
}

TEST_CASE("args merge per role and per field") {
  FgLexicon lex = Resolve(R"(
concept P
  template T
  arg a : X -> S1
  arg b : Y optional
concept K isa P
  arg a -> S2
  arg b required
  arg c : Z
)");
  const ConceptNode &k = *lex.FindConcept("K");
  REQUIRE(k.args.size() == 3);
  CHECK(k.args[0] == ArgSpec{"a", "X", "S2", true});
  CHECK(k.args[1] == ArgSpec{"b", "Y", std::nullopt, true});
  CHECK(k.args[2] == ArgSpec{"c", "Z", std::nullopt, true});
}

TEST_CASE("incomplete or cyclic hierarchies are rejected") {
  CHECK_THROWS_AS(Resolve("concept C\n  arg a : X\n"), ParseError);
  CHECK_THROWS_AS(Resolve("concept C\n  template T\n  arg a\n"), ParseError);
  CHECK_NOTHROW(Resolve("concept C general\n  arg a : X\n"));
  try {
    Resolve("concept A isa B\n  template T\nconcept B isa A\n");
    FAIL("expected a cycle");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()).find("{A, B}") != std::string::npos);
  }
}

TEST_CASE("general is not inherited") {
  FgLexicon lex = Resolve("concept G general\n  arg a : X\nconcept K isa G\n  template T\n");
  CHECK(lex.FindConcept("G")->general);
  CHECK_FALSE(lex.FindConcept("K")->general);
}

TEST_CASE("flattening matches the field-merge oracle") {
  std::mt19937 rng(101);
  for (int round = 0; round < 60; ++round) {
    RawLexicon raw = testing::RandomHierarchy(rng, testing::Pick(rng, 1, 100));
    FgLexicon lex = ResolveInheritance(raw);
    REQUIRE(lex.concepts().size() == raw.concepts.size());
    for (const RawConcept &c : raw.concepts) {
      CHECK(*lex.FindConcept(c.id) == testing::MergeOracle(raw, c.id));
    }
  }
}

TEST_CASE("resolving a flat lexicon is the identity") {
  FgLexicon lex = ResolveInheritance(ParseFgLexicon(testing::ReadData("muc.fg")));
  CHECK(ResolveInheritance(lex.ToRaw()) == lex);
  std::mt19937 rng(5);
  for (int round = 0; round < 30; ++round) {
    FgLexicon r = ResolveInheritance(testing::RandomHierarchy(rng, 40));
    CHECK(ResolveInheritance(r.ToRaw()) == r);
  }
}

TEST_CASE("realization overrides stay local") {
  FgLexicon lex = ResolveInheritance(ParseFgLexicon(testing::ReadData("muc.fg")));
  const ConceptNode &shared = *lex.FindConcept("DISMISS-EVENT");
  auto sack = lex.Senses("sack", WordClass::kVerb);
  auto remove = lex.Senses("remove", WordClass::kVerb);
  REQUIRE(!sack.empty());
  REQUIRE(!remove.empty());
  CHECK(sack[0]->resolved == shared);
  CHECK(remove[0]->resolved.assertions.size() == 2);
  CHECK(remove[0]->resolved.assertions[1].predicate == "holds_post");
  for (const StateAssertion &a : shared.assertions) CHECK(a.predicate == "employed");

  // Same check with the override removed: the sibling must not change.
  RawLexicon raw = ParseFgLexicon(testing::ReadData("muc.fg"));
  for (RawRealization &r : raw.realizations) {
    if (r.lemma == "remove") r.overrides = {};
  }
  FgLexicon plain = ResolveInheritance(raw);
  CHECK(plain.Senses("sack", WordClass::kVerb)[0]->resolved ==
        lex.Senses("sack", WordClass::kVerb)[0]->resolved);
  CHECK(*plain.FindConcept("DISMISS-EVENT") == shared);
}

TEST_CASE("fg_senses lookups") {
  FgLexicon lex = ResolveInheritance(ParseFgLexicon(testing::ReadData("muc.fg")));
  auto dismiss = FgSenses(lex, "dismiss", WordClass::kVerb, "en");
  REQUIRE(dismiss.size() == 1);
  CHECK(dismiss[0]->concept_id() == "DISMISS-EVENT");
  CHECK(FgSenses(lex, "aardvark", WordClass::kNoun, "en").empty());
  auto sack = FgSenses(lex, "sack", WordClass::kVerb, "en");
  REQUIRE(sack.size() == 2);
  CHECK(sack[0]->sense_id() == "s1");
  CHECK(sack[1]->sense_id() == "s2");
  CHECK(sack[1]->resolved.general);
}

TEST_CASE("a French realization changes no English lookup") {
  std::string text = testing::ReadData("muc.fg");
  FgLexicon before = ResolveInheritance(ParseFgLexicon(text));
  FgLexicon after = ResolveInheritance(ParseFgLexicon(
      text + "\nword renvoyer verb lang fr sense s1 -> DISMISS-EVENT\n  map subj -> org\n"
             "word sack verb lang fr sense s1 -> DISMISS-EVENT\n  map dobj -> person\n"));
  for (const char *lemma : {"sack", "dismiss", "remove", "renvoyer"}) {
    auto a = before.Senses(lemma, WordClass::kVerb, "en");
    auto b = after.Senses(lemma, WordClass::kVerb, "en");
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(*a[i] == *b[i]);
  }
  CHECK(after.Senses("renvoyer", WordClass::kVerb, "fr").size() == 1);
  CHECK(after.Senses("sack", WordClass::kVerb, "fr").size() == 1);
}

TEST_CASE("validate the fixtures") {
  Ontology o = MucOntology();
  CHECK(Validate(ResolveInheritance(ParseFgLexicon(testing::ReadData("muc.fg"))), o).empty());
  CHECK(Validate(ResolveInheritance(ParseFgLexicon(testing::ReadData("senses.fg"))), o).empty());
}

TEST_CASE("validate reports a misspelt class") {
  std::string text = testing::ReadData("muc.fg");
  text.replace(text.find("org : EMPLOYER"), 14, "org : EMPLOYR");
  auto diags = Validate(Resolve(text), MucOntology());
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].severity == Severity::kError);
  CHECK(diags[0].message.find("EMPLOYR") != std::string::npos);
  CHECK(diags[0].line > 0);
}

TEST_CASE("validate reports a slot missing from the schema") {
  std::string text = testing::ReadData("muc.fg");
  text.replace(text.find("-> POST"), 7, "-> POSTT");
  auto diags = Validate(Resolve(text), MucOntology());
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].message.find("POSTT") != std::string::npos);
}

TEST_CASE("validate reports other unresolved references") {
  Ontology o = MucOntology();
  auto errors = [&](std::string_view text) {
    int n = 0;
    for (const Diagnostic &d : Validate(Resolve(text), o)) n += d.severity == Severity::kError;
    return n;
  };
  CHECK(errors("concept C\n  template NOPE\n  arg a : INDIVIDUAL\n") == 1);
  CHECK(errors("concept C\n  template SUCCESSION\n  arg a : INDIVIDUAL -> PERSON_OUT\n"
               "  assert p(a, zz) @after\n") == 1);
  CHECK(errors("concept C\n  template SUCCESSION\n  arg a : INDIVIDUAL\n  instigator zz\n") == 1);
  // A person restriction bound to the organisation slot.
  CHECK(errors("concept C\n  template SUCCESSION\n  arg a : INDIVIDUAL -> ORGANIZATION\n") == 1);
  CHECK(errors("concept C general\n  arg a : INDIVIDUAL -> ORGANIZATION\n") == 1);
  // Discriminating a sense the concept has no word for is a warning.
  auto diags = Validate(Resolve("concept C\n  template SUCCESSION\n  arg a : INDIVIDUAL\n"
                                "  discriminate s9 when word_left=x\n"),
                        o);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].severity == Severity::kWarning);
}

TEST_CASE("every mapped role exists on the resolved concept") {
  // Random lexicons with realizations mapping random roles: parsing either
  // rejects the mapping or the role exists after resolution.
  std::mt19937 rng(17);
  const std::vector<std::string> roles = {"a", "b", "c", "d", "e", "zz"};
  int accepted = 0;
  for (int round = 0; round < 200; ++round) {
    RawLexicon raw = testing::RandomHierarchy(rng, testing::Pick(rng, 1, 20));
    FgLexicon base = ResolveInheritance(raw);
    std::string text;
    for (const ConceptNode &c : base.concepts()) {
      text += "concept " + c.id + (c.general ? " general" : "") + "\n";
      if (c.schema) text += "  template " + *c.schema + "\n";
      for (const ArgSpec &a : c.args) text += "  arg " + a.role + " : " + a.restriction + "\n";
    }
    const ConceptNode &target = base.concepts()[testing::Pick(rng, 0, base.concepts().size() - 1)];
    text += "word w verb sense s1 -> " + target.id + "\n";
    text += "  map subj -> " + roles[testing::Pick(rng, 0, 5)] + "\n";
    text += "  map dobj -> " + roles[testing::Pick(rng, 0, 5)] + "\n";
    try {
      FgLexicon lex = Resolve(text);
      ++accepted;
      const Realization &r = lex.realizations()[0];
      for (const auto &[label, role] : r.complement_map()) CHECK(r.resolved.FindArg(role) != nullptr);
    } catch (const ParseError &e) {
      CHECK(std::string(e.what()).find("has no role") != std::string::npos);
    }
  }
  CHECK(accepted > 0);
}

}  // namespace
}  // namespace lexie
