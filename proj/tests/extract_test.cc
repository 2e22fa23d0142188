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

#include "lexie/extract.h"

#include <random>

#include "doctest.h"
#include "lexie/error.h"
#include "lexie/pipeline.h"
#include "test_util.h"

namespace lexie {
namespace {

struct Muc {
  Ontology ontology = LoadOntology(testing::ReadData("muc.ont"));
  CollapseMap map = LoadCollapseMap(testing::ReadData("muc.map"), ontology);
  BgLexicon bg = Collapse(LoadBgLexicon(testing::ReadData("muc.bg"), ontology), map, ontology);
  FgLexicon fg = ResolveInheritance(ParseFgLexicon(testing::ReadData("muc.fg")));
  Corpus corpus = ReadCorpus(testing::ReadData("muc.vert"));
  BayesModel model = TrainBayes(corpus, bg, {});
};

const Muc &Fixture() {
  static const Muc muc;
  return muc;
}

struct Run {
  Document doc;
  DocumentAnalysis analysis;
  DocTags tags;
  MatchResult match;
  std::vector<TemplateInstance> instances;
};

Run Extract(const std::string &tagged) {
  const Muc &f = Fixture();
  Run r{ReadCorpus(testing::TaggedVertical(tagged, "x")).documents.at(0), {}, {}, {}, {}};
  r.analysis = AnalyzeDocument(r.doc);
  r.tags = DisambiguateDocument(f.model, r.doc, f.bg);
  r.match = MatchForeground(r.doc, r.analysis, f.fg, r.tags, f.ontology, {});
  ApplyForegroundPriority(r.match.matches, r.tags);
  r.instances = FillTemplates(r.doc, r.analysis, r.match.matches, r.tags, f.ontology);
  return r;
}

std::vector<std::string> AssertionStrings(const TemplateInstance &inst) {
  std::vector<std::string> out;
  for (const FilledAssertion &a : inst.assertions) {
    std::string s = std::string(a.polarity ? "" : "not ") + a.predicate + "(";
    for (size_t i = 0; i < a.args.size(); ++i) s += (i ? "," : "") + a.args[i].value_or("?");
    out.push_back(s + ")@" + (a.phase == Phase::kBefore ? "before" : "after"));
  }
  return out;
}

TEST_CASE("a dismissal fills the succession template") {
  Run r = Extract("The/DET school/NN dismissed/dismiss/VBD the/DET teacher/NN ./PUNCT");
  REQUIRE(r.instances.size() == 1);
  const TemplateInstance &inst = r.instances[0];
  CHECK(inst.schema == "SUCCESSION");
  REQUIRE(inst.fillers.size() == 3);
  CHECK(inst.fillers[0].slot == "ORGANIZATION");
  CHECK(inst.Filler("ORGANIZATION")->lemma == "school");
  CHECK(inst.Filler("ORGANIZATION")->text == "The school");
  CHECK(inst.Filler("ORGANIZATION")->source == FillerSource::kDirect);
  CHECK(inst.Filler("PERSON_OUT")->lemma == "teacher");
  CHECK(inst.Filler("PERSON_OUT")->begin == 3);
  CHECK(inst.Filler("PERSON_OUT")->end == 5);
  CHECK_FALSE(inst.Filler("POST")->filled());
  CHECK(AssertionStrings(inst) ==
        std::vector<std::string>{"employed(teacher,school)@before", "not employed(teacher,school)@after"});
  CHECK(inst.instigator == "ORGANIZATION");
  CHECK(inst.provenance.doc == "x");
  CHECK(inst.provenance.trigger == "dismiss");
  CHECK(inst.provenance.concept_id == "DISMISS-EVENT");
}

TEST_CASE("an agentless passive with no earlier organisation leaves the slot unfilled") {
  Run r = Extract("The/DET teacher/NN was/be/BE sacked/sack/VBN ./PUNCT");
  REQUIRE(r.instances.size() == 1);
  const SlotFiller *org = r.instances[0].Filler("ORGANIZATION");
  CHECK(org->source == FillerSource::kUnfilled);
  CHECK(org->head == -1);
  CHECK(r.instances[0].provenance.passive_implicature);
  CHECK(AssertionStrings(r.instances[0])[1] == "not employed(teacher,?)@after");
}

TEST_CASE("salience finds the employer in an earlier sentence") {
  Run r = Extract(
      "Jones/jones/NNP joined/join/VBD Acme/NNP Corp./corp/NNP ./PUNCT | Last/ADJ week/NN "
      "she/PRON was/be/BE sacked/sack/VBN ./PUNCT");
  REQUIRE(r.instances.size() == 1);
  const SlotFiller *org = r.instances[0].Filler("ORGANIZATION");
  CHECK(org->source == FillerSource::kSalient);
  CHECK(org->lemma == "corp");
  CHECK(org->text == "Acme Corp.");
  CHECK(r.instances[0].Filler("PERSON_OUT")->lemma == "she");
}

TEST_CASE("salience prefers the nearer candidate and needs a compatible one") {
  const Muc &f = Fixture();
  Document doc = ReadCorpus(testing::TaggedVertical(
                                "The/DET firm/NN and/CONJ the/DET school/NN met/VBD the/DET "
                                "teacher/NN ./PUNCT | She/PRON left/VBD ./PUNCT"))
                     .documents.at(0);
  DocumentAnalysis a = AnalyzeDocument(doc);
  DocTags tags = DisambiguateDocument(f.model, doc, f.bg);
  CHECK(ResolveSalient(doc, a, tags, f.ontology, "ORGANISATION", 10) == 4);
  CHECK(ResolveSalient(doc, a, tags, f.ontology, "ORGANISATION", 10, {4}) == 1);
  CHECK(ResolveSalient(doc, a, tags, f.ontology, "ORGANISATION", 3) == 1);
  CHECK_FALSE(ResolveSalient(doc, a, tags, f.ontology, "ORGANISATION", 1));
  CHECK(ResolveSalient(doc, a, tags, f.ontology, "INDIVIDUAL", 10) == 9);
  CHECK(ResolveSalient(doc, a, tags, f.ontology, "INDIVIDUAL", 9) == 7);
  CHECK_FALSE(ResolveSalient(doc, a, tags, f.ontology, "TIME", 10));
}

// Oracle: scan tokens backwards for an NP head with a compatible tag.
std::optional<int> SalienceOracle(const Document &doc, const DocumentAnalysis &a, const DocTags &tags,
                                  const Ontology &o, const std::string &restriction, int position) {
  for (int i = position - 1; i >= 0; --i) {
    if (a.NounPhraseHeadedBy(doc.tokens[i].sent_idx, i) == nullptr || !tags[i]) continue;
    if (!o.HasClass(tags[i]->cls)) continue;
    if (o.Compatible(tags[i]->cls, restriction)) return i;
  }
  return std::nullopt;
}

TEST_CASE("salience agrees with a backward token scan") {
  const Muc &f = Fixture();
  for (const Document &doc : f.corpus.documents) {
    DocumentAnalysis a = AnalyzeDocument(doc);
    DocTags tags = DisambiguateDocument(f.model, doc, f.bg);
    for (const char *cls : {"ORGANISATION", "INDIVIDUAL", "POSITION", "EMPLOYER", "LOCATION"}) {
      for (int pos = 0; pos <= static_cast<int>(doc.tokens.size()); ++pos) {
        CHECK(ResolveSalient(doc, a, tags, f.ontology, cls, pos) ==
              SalienceOracle(doc, a, tags, f.ontology, cls, pos));
      }
    }
  }
}

TEST_CASE("a removal asserts the post change and not the employment change") {
  Run r = Extract(
      "Acme/NNP Corp./corp/NNP removed/remove/VBD Jones/jones/NNP as/PREP chairman/NN ./PUNCT");
  REQUIRE(r.instances.size() == 1);
  auto assertions = AssertionStrings(r.instances[0]);
  CHECK(assertions == std::vector<std::string>{"holds_post(jones,chairman)@before",
                                               "not holds_post(jones,chairman)@after"});
  CHECK(r.instances[0].Filler("POST")->lemma == "chairman");
}

TEST_CASE("output lines") {
  CHECK(WriteOutput({}).empty());
  Run r = Extract(
      "The/DET school/NN dismissed/dismiss/VBD the/DET teacher/NN ./PUNCT | The/DET firm/NN "
      "sacked/sack/VBD the/DET clerk/NN ./PUNCT");
  REQUIRE(r.instances.size() == 2);
  std::string out = WriteOutput(r.instances);
  CHECK(std::count(out.begin(), out.end(), '\n') == 2);
  auto first = nlohmann::json::parse(out.substr(0, out.find('\n')));
  CHECK(first["provenance"]["sentence"] == 0);
  // Key order is checked on the raw text; a parsed json object sorts keys.
  size_t p_schema = out.find("\"schema\""), p_fill = out.find("\"fillers\""),
         p_ass = out.find("\"assertions\""), p_inst = out.find("\"instigator\""),
         p_prov = out.find("\"provenance\"");
  CHECK(p_schema < p_fill);
  CHECK(p_fill < p_ass);
  CHECK(p_ass < p_inst);
  CHECK(p_inst < p_prov);
  CHECK(out.find("\"source\":\"unfilled\",\"span\":null") != std::string::npos);
}

TEST_CASE("the fixture corpus reproduces the gold file") {
  const Muc &f = Fixture();
  RunConfig config;
  PipelineResult result = RunPipeline(f.corpus, f.ontology, f.fg, f.bg, OptionsFrom(config));
  std::vector<TemplateInstance> all;
  for (const auto &d : result.documents) all.insert(all.end(), d.instances.begin(), d.instances.end());
  CHECK(WriteOutput(all, ParamsJson(config)) == testing::ReadData("muc.gold.jsonl"));
}

TEST_CASE("instances are sound and reproducible") {
  const Muc &f = Fixture();
  std::string first;
  for (PipelineOrder order : {PipelineOrder::kBackgroundFirst, PipelineOrder::kForegroundFirst}) {
    for (bool ospd : {true, false}) {
      RunConfig config;
      config.order = order;
      config.ospd = ospd;
      std::string reference;
      for (int jobs : {1, 3, 8}) {
        PipelineResult result = RunPipeline(f.corpus, f.ontology, f.fg, f.bg, OptionsFrom(config), jobs);
        std::vector<TemplateInstance> all;
        for (size_t d = 0; d < result.documents.size(); ++d) {
          const DocumentResult &dr = result.documents[d];
          for (const FgMatch &m : dr.match.matches) {
            // Re-verify against the tags the matcher saw: the foreground tag
            // only replaced the verb's own tag.
            DocTags before = dr.tags;
            before[m.verb].reset();
            CHECK(VerifyMatch(m, before, f.ontology));
          }
          for (const TemplateInstance &inst : dr.instances) {
            const TemplateSchema *schema = f.ontology.FindSchema(inst.schema);
            REQUIRE(schema != nullptr);
            for (const SlotFiller &sf : inst.fillers) {
              if (!sf.filled()) continue;
              CHECK(f.ontology.Compatible(sf.cls, schema->FindSlot(sf.slot)->filler_class));
            }
            all.push_back(inst);
          }
        }
        std::string out = WriteOutput(all, ParamsJson(config));
        if (reference.empty()) reference = out;
        CHECK(out == reference);
      }
    }
  }
}

TEST_CASE("a missing schema is an error") {
  const Muc &f = Fixture();
  FgLexicon broken = ResolveInheritance(ParseFgLexicon(
      "concept X\n  template NOPE\n  arg org : ORGANISATION\n  arg p : INDIVIDUAL\n"
      "word sack verb sense s1 -> X\n  map subj -> org\n  map dobj -> p\n"));
  Document doc = ReadCorpus(testing::TaggedVertical("The/DET firm/NN sacked/sack/VBD the/DET clerk/NN"))
                     .documents.at(0);
  DocumentAnalysis a = AnalyzeDocument(doc);
  DocTags tags = DisambiguateDocument(f.model, doc, f.bg);
  MatchResult m = MatchForeground(doc, a, broken, tags, f.ontology, {});
  REQUIRE(m.matches.size() == 1);
  CHECK_THROWS_AS(FillTemplates(doc, a, m.matches, tags, f.ontology), Error);
}

}  // namespace
}  // namespace lexie
