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

#include "lexie/tuner.h"

#include <random>

#include "doctest.h"
#include "lexie/error.h"
#include "lexie/wsd.h"
#include "test_util.h"
#include "tune_corpus.h"

namespace lexie {
namespace {

struct Setup {
  Ontology ontology = LoadOntology(testing::ReadData("muc.ont"));
  CollapseMap map = LoadCollapseMap(testing::ReadData("muc.map"), ontology);
  BgLexicon bg = Collapse(LoadBgLexicon(testing::kTuneBg, ontology), map, ontology);
};

using testing::MoneyCorpus;
using testing::RandomCorpus;

TEST_CASE("a sense the corpus never uses is ejected") {
  Setup s;
  Corpus c = MoneyCorpus();
  SenseUsage usage;
  TunedLexicon t = Tune(s.bg, c, {}, "money", 1, &usage);
  CHECK(usage.occurrences.at({"bank", WordClass::kNoun}) == 20);
  CHECK(usage.assigned.at({"bank", WordClass::kNoun, "s1"}) == 20);
  REQUIRE(t.ejected.count({"bank", WordClass::kNoun}));
  CHECK(t.ejected.at({"bank", WordClass::kNoun}) == std::set<std::string>{"s2"});
  CHECK(t.IsEjected("bank", WordClass::kNoun, "s2"));
  CHECK_FALSE(t.IsEjected("bank", WordClass::kNoun, "s1"));
  // court is seen twice, under the threshold.
  CHECK(usage.occurrences.at({"court", WordClass::kNoun}) == 2);
  CHECK_FALSE(t.ejected.count({"court", WordClass::kNoun}));

  BgLexicon view = ApplyTuning(t);
  BgLookup bank = BgSenses(view, "bank", WordClass::kNoun);
  REQUIRE(bank.senses.size() == 1);
  CHECK(bank.senses[0] == CoarseSense{"s1", "ORGANISATION"});
  CHECK_FALSE(bank.ambiguous);
  CHECK(BgSenses(view, "court", WordClass::kNoun).senses == BgSenses(s.bg, "court", WordClass::kNoun).senses);
  CHECK(t.base == s.bg);
}

TEST_CASE("discriminators are the strongest positive co-occurring lemmas") {
  Setup s;
  Corpus c = MoneyCorpus();
  TuneParams p;
  p.top_k = 2;
  p.ospd = false;
  TunedLexicon t = Tune(s.bg, c, p);
  BayesModel model = TrainBayes(c, s.bg, {p.window, p.alpha});
  for (const auto &[key, disc] : t.discriminators) {
    const auto &[lemma, pos, sense] = key;
    CHECK(disc.size() <= 2u);
    std::string cls;
    for (const CoarseSense &cs : s.bg.Senses(lemma, pos).senses) {
      if (cs.sense_id == sense) cls = cs.coarse_class;
    }
    // Oracle: every window lemma around the word, weighed for the class.
    std::set<std::string> around;
    for (const Document &d : c.documents) {
      for (const Token &tok : d.tokens) {
        if (tok.lemma != lemma) continue;
        for (const auto &w : ContextLemmas(d, tok.tok_idx, p.window)) {
          if (w != lemma) around.insert(w);
        }
      }
    }
    std::vector<std::pair<double, std::string>> ranked;
    for (const auto &w : around) {
      double v = model.Weight(w, cls);
      if (v > 0) ranked.push_back({-v, w});
    }
    std::sort(ranked.begin(), ranked.end());
    REQUIRE(disc.size() == std::min<size_t>(2, ranked.size()));
    for (size_t i = 0; i < disc.size(); ++i) {
      CHECK(disc[i].first == ranked[i].second);
      CHECK(disc[i].second == doctest::Approx(-ranked[i].first).epsilon(1e-6));
      CHECK(disc[i].first != lemma);
    }
  }
  const auto &bank = t.discriminators.at({"bank", WordClass::kNoun, "s1"});
  CHECK(bank.size() == 2u);
  CHECK(ApplyTuning(t).DiscriminatorsFor("bank", WordClass::kNoun, "s1") == bank);
}

TEST_CASE("re-tuning a tuned lexicon without ejections is a fixpoint") {
  Setup s;
  Corpus c = MoneyCorpus();
  TuneParams p;
  p.min_occurrences = 1000;
  TunedLexicon t = Tune(s.bg, c, p, "money");
  CHECK(t.ejected.empty());
  CHECK(Tune(ApplyTuning(t), c, p, "money") == t);
  // The view equals the base on every key.
  BgLexicon view = ApplyTuning(t);
  for (const auto &[key, bucket] : s.bg.entries()) {
    CHECK(BgSenses(view, key.first, key.second).senses == BgSenses(s.bg, key.first, key.second).senses);
  }
}

TEST_CASE("errors") {
  Setup s;
  CHECK_THROWS_AS(Tune(s.bg, Corpus{}, {}), Error);
  CHECK_THROWS_AS(Tune(s.bg, ReadCorpus("#DOC x\n"), {}), Error);
  CHECK_THROWS_AS(Tune(LoadBgLexicon(testing::kTuneBg, s.ontology), MoneyCorpus(), {}), Error);
}

TEST_CASE("tuned files round-trip exactly") {
  Setup s;
  TunedLexicon t = Tune(s.bg, MoneyCorpus(), {}, "money@fnv1a:12ab");
  std::string text = SerializeTuned(t);
  TunedLexicon back = LoadTuned(text, s.ontology, s.map);
  CHECK(back == t);
  CHECK(SerializeTuned(back) == text);
  CHECK(text.find("%tuning\neject bank noun s2\n") != std::string::npos);
  CHECK(text.find("corpus money@fnv1a:12ab") != std::string::npos);
  CHECK_THROWS_AS(LoadTuned(text + "eject nosuch noun s1\n", s.ontology, s.map), ParseError);
  CHECK_THROWS_AS(LoadTuned(text + "bogus line\n", s.ontology, s.map), ParseError);
}

TEST_CASE("tuning properties on random corpora") {
  Setup s;
  std::mt19937 rng(606);
  for (int round = 0; round < 60; ++round) {
    Corpus c = RandomCorpus(rng);
    std::map<LexKey, std::set<std::string>> previous;
    bool first = true;
    for (int threshold = 1; threshold <= 12; ++threshold) {
      TuneParams p;
      p.min_occurrences = threshold;
      p.ospd = round % 2 == 0;
      SenseUsage usage;
      TunedLexicon t = Tune(s.bg, c, p, "", 1, &usage);
      BgLexicon view = ApplyTuning(t);
      for (const auto &[key, ids] : t.ejected) {
        for (const auto &id : ids) {
          bool exists = false;
          for (const BgSense &b : *s.bg.Find(key.first, key.second)) exists |= b.sense_id == id;
          CHECK(exists);
        }
      }
      for (const auto &[key, bucket] : s.bg.entries()) {
        auto tuned = BgSenses(view, key.first, key.second).senses;
        auto base = BgSenses(s.bg, key.first, key.second).senses;
        for (const auto &sense : tuned) CHECK(std::find(base.begin(), base.end(), sense) != base.end());
        long seen = usage.occurrences.count(key) ? usage.occurrences.at(key) : 0;
        if (seen > 0) CHECK(!tuned.empty());
        if (seen >= threshold) {
          for (const auto &sense : tuned) {
            CHECK(usage.assigned.count({key.first, key.second, sense.sense_id}));
          }
        }
      }
      // Raising the threshold never ejects more.
      if (!first) {
        for (const auto &[key, ids] : t.ejected) {
          for (const auto &id : ids) CHECK(previous[key].count(id));
        }
      }
      previous = t.ejected;
      first = false;
    }
  }
}

TEST_CASE("tuning does not depend on the job count") {
  Setup s;
  std::mt19937 rng(1);
  Corpus c = RandomCorpus(rng);
  TunedLexicon one = Tune(s.bg, c, {}, "x", 1);
  CHECK(Tune(s.bg, c, {}, "x", 4) == one);
  CHECK(SerializeTuned(Tune(s.bg, c, {}, "x", 8)) == SerializeTuned(one));
}

}  // namespace
}  // namespace lexie
