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

#include "lexie/bg_lexicon.h"

#include <algorithm>

#include "lexie/error.h"
#include "lexie/strings.h"

namespace lexie {

bool CollapseMap::InScheme(std::string_view cls) const {
  return std::find(noun_classes.begin(), noun_classes.end(), cls) != noun_classes.end() ||
         std::find(verb_classes.begin(), verb_classes.end(), cls) != verb_classes.end();
}

std::optional<std::string> CollapseMap::Image(std::string_view fine,
                                              const Ontology &ontology) const {
  for (const std::string &cls : ontology.Ancestors(fine)) {
    auto it = mapping.find(cls);
    if (it != mapping.end()) return it->second;
    if (InScheme(cls)) return cls;
  }
  return std::nullopt;
}

CollapseMap LoadCollapseMap(std::string_view text, const Ontology &ontology) {
  CollapseMap map;
  std::map<std::string, int> map_lines;
  ForEachLine(text, [&](int line_no, std::string_view raw) {
    std::vector<std::string> words = SplitWhitespace(StripComment(raw));
    if (words.empty()) return;
    auto known = [&](const std::string &cls) {
      if (!ontology.HasClass(cls)) throw ParseError("unknown class " + cls, line_no);
    };
    if (words[0] == "map") {
      if (words.size() != 4 || words[2] != "->") {
        throw ParseError("expected 'map <FINE> -> <COARSE>'", line_no);
      }
      std::string fine = ToUpper(words[1]), coarse = ToUpper(words[3]);
      known(fine);
      known(coarse);
      if (!map.mapping.emplace(fine, coarse).second) {
        throw ParseError("class " + fine + " mapped twice", line_no);
      }
      map_lines[fine] = line_no;
    } else if (words[0] == "scheme") {
      if (words.size() < 3 || (words[1] != "noun" && words[1] != "verb")) {
        throw ParseError("expected 'scheme noun|verb <CLASS>...'", line_no);
      }
      auto &target = words[1] == "noun" ? map.noun_classes : map.verb_classes;
      for (size_t i = 2; i < words.size(); ++i) {
        std::string cls = ToUpper(words[i]);
        known(cls);
        if (map.InScheme(cls)) throw ParseError("class " + cls + " listed twice in scheme", line_no);
        target.push_back(cls);
      }
    } else {
      throw ParseError("unknown directive '" + words[0] + "'", line_no);
    }
  });
  for (const auto &[fine, coarse] : map.mapping) {
    if (!map.InScheme(coarse)) {
      throw ParseError("target " + coarse + " is not in the coarse scheme", map_lines[fine]);
    }
    if (map.InScheme(fine) && fine != coarse) {
      throw ParseError("coarse class " + fine + " must map to itself", map_lines[fine]);
    }
  }
  return map;
}

BgLexicon::BgLexicon(std::vector<BgSense> senses, bool collapsed)
    : collapsed_(collapsed) {
  for (BgSense &s : senses) {
    auto &bucket = entries_[{s.lemma, s.pos}];
    for (const BgSense &other : bucket) {
      if (other.sense_id == s.sense_id) {
        throw Error("duplicate sense " + s.lemma + " " +
                    std::string(WordClassName(s.pos)) + " " + s.sense_id);
      }
    }
    bucket.push_back(std::move(s));
  }
  for (auto &[key, bucket] : entries_) {
    std::sort(bucket.begin(), bucket.end(),
              [](const BgSense &a, const BgSense &b) { return a.sense_id < b.sense_id; });
  }
}

size_t BgLexicon::sense_count() const {
  size_t n = 0;
  for (const auto &[key, bucket] : entries_) n += bucket.size();
  return n;
}

const std::vector<BgSense> *BgLexicon::Find(std::string_view lemma,
                                            WordClass pos) const {
  auto it = entries_.find(LexKey{std::string(lemma), pos});
  return it == entries_.end() ? nullptr : &it->second;
}

BgLookup BgLexicon::Senses(std::string_view lemma, WordClass pos) const {
  if (!collapsed_) throw Error("background lexicon is not collapsed");
  BgLookup out;
  if (const auto *bucket = Find(lemma, pos)) {
    for (const BgSense &s : *bucket) out.senses.push_back({s.sense_id, *s.coarse_class});
  }
  out.ambiguous = out.senses.size() > 1;
  return out;
}

const BgSense *BgLexicon::SenseWithClass(std::string_view lemma, WordClass pos,
                                         std::string_view coarse) const {
  if (const auto *bucket = Find(lemma, pos)) {
    for (const BgSense &s : *bucket) {
      if (s.coarse_class && *s.coarse_class == coarse) return &s;
    }
  }
  return nullptr;
}

const Discriminators &BgLexicon::DiscriminatorsFor(std::string_view lemma,
                                                   WordClass pos,
                                                   std::string_view sense_id) const {
  static const Discriminators kNone;
  auto it = discriminators_.find({std::string(lemma), pos, std::string(sense_id)});
  return it == discriminators_.end() ? kNone : it->second;
}

void BgLexicon::SetDiscriminators(const std::string &lemma, WordClass pos,
                                  const std::string &sense_id, Discriminators d) {
  discriminators_[{lemma, pos, sense_id}] = std::move(d);
}

BgLexicon LoadBgLexicon(std::string_view text, const Ontology &ontology) {
  std::vector<BgSense> senses;
  std::map<std::tuple<std::string, WordClass, std::string>, int> seen;
  ForEachLine(text, [&](int line_no, std::string_view raw) {
    std::string gloss;
    std::vector<std::string> words = SplitWhitespace(StripComment(raw, &gloss));
    if (words.empty()) return;
    if (words.size() != 4) {
      throw ParseError("expected '<lemma> <pos> <sense_id> <FINE_CLASS>'", line_no);
    }
    BgSense s;
    s.lemma = words[0];
    auto pos = ParseWordClass(words[1]);
    if (!pos) throw ParseError("unknown part of speech '" + words[1] + "'", line_no);
    s.pos = *pos;
    s.sense_id = words[2];
    s.fine_class = ToUpper(words[3]);
    if (!ontology.HasClass(s.fine_class)) {
      throw ParseError("unknown class " + s.fine_class, line_no);
    }
    if (!gloss.empty()) s.gloss = gloss;
    auto [it, fresh] = seen.emplace(std::make_tuple(s.lemma, s.pos, s.sense_id), line_no);
    if (!fresh) {
      throw ParseError("duplicate sense " + s.lemma + " " + words[1] + " " + s.sense_id +
                           " (first on line " + std::to_string(it->second) + ")",
                       line_no);
    }
    senses.push_back(std::move(s));
  });
  return BgLexicon(std::move(senses));
}

BgLexicon Collapse(const BgLexicon &lexicon, const CollapseMap &map,
                   const Ontology &ontology) {
  std::vector<BgSense> out;
  for (const auto &[key, bucket] : lexicon.entries()) {
    std::set<std::string> classes_seen;
    // Buckets are sorted by sense_id, so the first sense of a class is the
    // one with the lowest id.
    for (const BgSense &s : bucket) {
      auto image = map.Image(s.fine_class, ontology);
      if (!image) {
        throw Error("class " + s.fine_class + " (" + s.lemma + " " + s.sense_id +
                    ") has no coarse image");
      }
      if (!classes_seen.insert(*image).second) continue;
      BgSense merged = s;
      merged.coarse_class = *image;
      out.push_back(std::move(merged));
    }
  }
  BgLexicon result(std::move(out), true);
  for (const auto &[key, d] : lexicon.discriminators()) {
    const auto &[lemma, pos, sense] = key;
    if (result.Find(lemma, pos) != nullptr) result.SetDiscriminators(lemma, pos, sense, d);
  }
  return result;
}

BgLookup BgSenses(const BgLexicon &lexicon, std::string_view lemma,
                  WordClass pos) {
  return lexicon.Senses(lemma, pos);
}

std::string SerializeBgLexicon(const BgLexicon &lexicon) {
  std::string out;
  for (const auto &[key, bucket] : lexicon.entries()) {
    for (const BgSense &s : bucket) {
      out += s.lemma + " " + std::string(WordClassName(s.pos)) + " " + s.sense_id +
             " " + s.fine_class;
      if (s.gloss) out += " # " + *s.gloss;
      out += '\n';
    }
  }
  return out;
}

}  // namespace lexie
