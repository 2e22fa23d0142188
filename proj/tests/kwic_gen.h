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

// Random tagged corpora and queries, and a brute-force concordance scan.
#ifndef LEXIE_TESTS_KWIC_GEN_H_
#define LEXIE_TESTS_KWIC_GEN_H_

#include <random>
#include <regex>
#include <string>
#include <vector>

#include "lexie/ontology.h"
#include "lexie/textpipe.h"
#include "lexie/wsd.h"

namespace lexie::testing {

struct GenWord {
  std::string surface;
  std::string lemma;
  Tag pos;
  std::string cls;  // empty = untagged
};

inline const std::vector<GenWord> &GenVocabulary() {
  static const std::vector<GenWord> kWords = {
      {"the", "the", Tag::kDET, ""},          {"The", "the", Tag::kDET, ""},
      {"a", "a", Tag::kDET, ""},              {"school", "school", Tag::kNN, "ORGANISATION"},
      {"firm", "firm", Tag::kNN, "ORGANISATION"}, {"bank", "bank", Tag::kNN, "LOCATION"},
      {"bank", "bank", Tag::kNN, "ORGANISATION"}, {"teacher", "teacher", Tag::kNN, "INDIVIDUAL"},
      {"clerk", "clerk", Tag::kNN, "INDIVIDUAL"}, {"Smith", "smith", Tag::kNNP, "INDIVIDUAL"},
      {"dismissed", "dismiss", Tag::kVBD, "V_SOCIAL"}, {"dismiss", "dismiss", Tag::kVB, "V_SOCIAL"},
      {"sacked", "sack", Tag::kVBN, "V_SOCIAL"},  {"was", "be", Tag::kBE, ""},
      {"by", "by", Tag::kPREP, ""},            {"of", "of", Tag::kPREP, ""},
      {"post", "post", Tag::kNN, "ABSTRACTION"}, {"river", "river", Tag::kNN, "LOCATION"},
      {"old", "old", Tag::kADJ, ""},           {"quickly", "quickly", Tag::kADV, ""},
  };
  return kWords;
}

// Documents of random sentences drawn from the vocabulary, with tags.
inline void GenCorpus(std::mt19937 &rng, size_t tokens, Corpus &corpus, CorpusTags &tags) {
  const auto &vocab = GenVocabulary();
  size_t made = 0;
  while (made < tokens) {
    Document doc;
    doc.id = "g" + std::to_string(corpus.documents.size());
    DocTags dt;
    int sentences = 1 + rng() % 20;
    for (int s = 0; s < sentences && made < tokens; ++s) {
      SentenceSpan span{static_cast<int>(doc.tokens.size()), 0};
      int len = 1 + rng() % 15;
      for (int k = 0; k < len; ++k) {
        const GenWord &w = vocab[rng() % vocab.size()];
        Token t;
        t.surface = w.surface;
        t.lemma = w.lemma;
        t.pos = w.pos;
        t.sent_idx = s;
        t.tok_idx = static_cast<int>(doc.tokens.size());
        if (w.cls.empty()) {
          dt.emplace_back();
        } else {
          dt.push_back(SenseTag{t.tok_idx, "s1", w.cls, 0.0, TagMethod::kUnambiguous});
        }
        doc.tokens.push_back(t);
        ++made;
      }
      span.end = static_cast<int>(doc.tokens.size());
      doc.sentences.push_back(span);
    }
    corpus.documents.push_back(std::move(doc));
    tags.push_back(std::move(dt));
  }
}

struct GenAtom {
  std::string kind;  // word, lemma, pos, class, literal
  std::string value;
};

struct GenQuery {
  std::string text;
  std::vector<std::vector<GenAtom>> constraints;
};

// Query text for the given constraints.
inline GenQuery QueryFrom(const std::vector<std::vector<GenAtom>> &constraints) {
  GenQuery q;
  q.constraints = constraints;
  for (const auto &atoms : constraints) {
    std::string part;
    for (const GenAtom &a : atoms) {
      if (!part.empty()) part += "&";
      if (a.kind == "word") part += "word=/" + a.value + "/";
      else if (a.kind == "literal") part += a.value;
      else part += a.kind + "=" + a.value;
    }
    if (atoms.size() > 1) part = "[" + part + "]";
    q.text += (q.text.empty() ? "" : " ") + part;
  }
  return q;
}

inline GenQuery RandomQuery(std::mt19937 &rng, bool allow_class = true) {
  const auto &vocab = GenVocabulary();
  const std::vector<std::string> regexes = {"[a-z]+ed", "s.*", "[A-Z].*", "b.nk", ".*e.*"};
  const std::vector<std::string> classes = {"ORGANISATION", "INDIVIDUAL", "ENTITY", "LOCATION",
                                            "ABSTRACTION"};
  GenQuery q;
  int n = 1 + rng() % 3;
  for (int i = 0; i < n; ++i) {
    std::vector<GenAtom> atoms;
    int m = 1 + (rng() % 4 == 0);
    for (int j = 0; j < m; ++j) {
      const GenWord &w = vocab[rng() % vocab.size()];
      switch (rng() % (allow_class ? 5 : 4)) {
        case 0: atoms.push_back({"word", regexes[rng() % regexes.size()]}); break;
        case 1: atoms.push_back({"lemma", w.lemma}); break;
        case 2: atoms.push_back({"pos", std::string(TagName(w.pos))}); break;
        case 3: atoms.push_back({"literal", w.surface}); break;
        default: atoms.push_back({"class", classes[rng() % classes.size()]}); break;
      }
    }
    q.constraints.push_back(atoms);
  }
  return QueryFrom(q.constraints);
}

struct BruteMatch {
  int doc;
  int begin;
  int end;
};

inline bool BruteAtom(const GenAtom &a, const Token &t, const std::optional<SenseTag> &tag,
                      const Ontology &o) {
  if (a.kind == "word") return std::regex_match(t.surface, std::regex(a.value));
  if (a.kind == "literal") return t.surface == a.value;
  if (a.kind == "pos") return TagName(t.pos) == a.value;
  if (a.kind == "lemma") {
    std::string lower = t.lemma;
    for (char &c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return lower == a.value;
  }
  if (!tag) return false;
  for (std::string c = tag->cls;;) {
    if (c == a.value) return true;
    if (!o.HasClass(c) || !o.Class(c).parent) return false;
    c = *o.Class(c).parent;
  }
}

// Leftmost non-overlapping matches, sentence by sentence.
inline std::vector<BruteMatch> BruteKwic(const Corpus &corpus, const CorpusTags &tags,
                                         const Ontology &o, const GenQuery &q) {
  std::vector<BruteMatch> out;
  const int n = static_cast<int>(q.constraints.size());
  for (size_t d = 0; d < corpus.documents.size(); ++d) {
    const Document &doc = corpus.documents[d];
    for (const SentenceSpan &s : doc.sentences) {
      int i = s.begin;
      while (i + n <= s.end) {
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) {
          for (const GenAtom &a : q.constraints[k]) {
            if (!BruteAtom(a, doc.tokens[i + k], tags[d][i + k], o)) {
              ok = false;
              break;
            }
          }
        }
        if (ok) {
          out.push_back({static_cast<int>(d), i, i + n});
          i += n;
        } else {
          ++i;
        }
      }
    }
  }
  return out;
}

}  // namespace lexie::testing

#endif  // LEXIE_TESTS_KWIC_GEN_H_
