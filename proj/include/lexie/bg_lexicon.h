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

#ifndef LEXIE_BG_LEXICON_H_
#define LEXIE_BG_LEXICON_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "lexie/lexical_types.h"
#include "lexie/ontology.h"

namespace lexie {

struct BgSense {
  std::string lemma;
  WordClass pos = WordClass::kNoun;
  std::string sense_id;
  std::string fine_class;
  std::optional<std::string> coarse_class;  // set by Collapse
  std::optional<std::string> gloss;

  bool operator==(const BgSense &) const = default;
};

// Fine class -> coarse class, plus the declared coarse scheme. Coarse
// classes implicitly map to themselves.
struct CollapseMap {
  std::map<std::string, std::string> mapping;
  std::vector<std::string> noun_classes;
  std::vector<std::string> verb_classes;

  bool InScheme(std::string_view cls) const;

  // Image of a fine class: its own mapping, else that of the nearest mapped
  // ancestor. nullopt when no ancestor is mapped.
  std::optional<std::string> Image(std::string_view fine,
                                   const Ontology &ontology) const;
};

// Parses `map <FINE> -> <COARSE>`, `scheme noun <C>...`, `scheme verb <C>...`
// lines. Every class must exist in the ontology; every target must be in the
// scheme; scheme classes may not be mapped elsewhere.
CollapseMap LoadCollapseMap(std::string_view text, const Ontology &ontology);

using LexKey = std::pair<std::string, WordClass>;

struct CoarseSense {
  std::string sense_id;
  std::string coarse_class;

  bool operator==(const CoarseSense &) const = default;
};

struct BgLookup {
  std::vector<CoarseSense> senses;  // sense_id order
  bool ambiguous = false;
};

// A weighted context lemma attached to a sense by tuning.
using Discriminators = std::vector<std::pair<std::string, double>>;

class BgLexicon {
 public:
  BgLexicon() = default;

  // Senses are grouped per key and sorted by sense_id. Throws Error on a
  // duplicate (lemma, pos, sense_id).
  explicit BgLexicon(std::vector<BgSense> senses, bool collapsed = false);

  bool collapsed() const { return collapsed_; }
  const std::map<LexKey, std::vector<BgSense>> &entries() const { return entries_; }
  size_t sense_count() const;

  // Raw senses of a key, or nullptr.
  const std::vector<BgSense> *Find(std::string_view lemma, WordClass pos) const;

  // Coarse inventory of a key. Throws Error on an uncollapsed lexicon.
  BgLookup Senses(std::string_view lemma, WordClass pos) const;

  // The sense of a key carrying a coarse class, or nullptr.
  const BgSense *SenseWithClass(std::string_view lemma, WordClass pos,
                                std::string_view coarse) const;

  // Discriminators attached by tuning; empty when none.
  const Discriminators &DiscriminatorsFor(std::string_view lemma, WordClass pos,
                                          std::string_view sense_id) const;
  void SetDiscriminators(const std::string &lemma, WordClass pos,
                         const std::string &sense_id, Discriminators d);
  const std::map<std::tuple<std::string, WordClass, std::string>, Discriminators> &
  discriminators() const {
    return discriminators_;
  }

  bool operator==(const BgLexicon &other) const {
    return collapsed_ == other.collapsed_ && entries_ == other.entries_ &&
           discriminators_ == other.discriminators_;
  }

 private:
  std::map<LexKey, std::vector<BgSense>> entries_;
  std::map<std::tuple<std::string, WordClass, std::string>, Discriminators>
      discriminators_;
  bool collapsed_ = false;
};

// One sense per line: `<lemma> <pos> <sense_id> <FINE_CLASS> [# gloss]`.
// Throws ParseError on malformed lines, duplicates, or unknown classes.
BgLexicon LoadBgLexicon(std::string_view text, const Ontology &ontology);

// Assigns coarse classes and merges same-class senses of a key, keeping the
// lowest sense_id. Idempotent. Throws Error for a fine class with no image.
BgLexicon Collapse(const BgLexicon &lexicon, const CollapseMap &map,
                   const Ontology &ontology);

BgLookup BgSenses(const BgLexicon &lexicon, std::string_view lemma,
                  WordClass pos);

// Base-format text, keys and senses in sorted order.
std::string SerializeBgLexicon(const BgLexicon &lexicon);

}  // namespace lexie

#endif  // LEXIE_BG_LEXICON_H_
