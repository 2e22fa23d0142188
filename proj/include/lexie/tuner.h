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

#ifndef LEXIE_TUNER_H_
#define LEXIE_TUNER_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>

#include "lexie/bg_lexicon.h"
#include "lexie/ontology.h"
#include "lexie/textpipe.h"

namespace lexie {

struct TuneParams {
  int min_occurrences = 5;
  int window = 10;
  double alpha = 0.1;
  int top_k = 10;
  bool ospd = true;

  bool operator==(const TuneParams &) const = default;
};

using SenseKey = std::tuple<std::string, WordClass, std::string>;

struct TunedLexicon {
  BgLexicon base;  // collapsed, no discriminators
  std::map<LexKey, std::set<std::string>> ejected;
  std::map<SenseKey, Discriminators> discriminators;
  std::string corpus_id;
  TuneParams params;

  bool IsEjected(std::string_view lemma, WordClass pos, std::string_view sense_id) const;

  bool operator==(const TunedLexicon &) const = default;
};

// Per-key evidence from one tagging pass over the corpus.
struct SenseUsage {
  std::map<LexKey, long> occurrences;
  std::map<SenseKey, long> assigned;
};

// Trains the coarse classifier on the corpus, tags it (with one sense per
// discourse when enabled), ejects every sense of a key seen at least
// min_occurrences times that received no occurrence, and attaches the top_k
// positive-weight context lemmas to each retained sense. Throws Error on an
// empty corpus.
TunedLexicon Tune(const BgLexicon &bg, const Corpus &corpus, const TuneParams &params,
                  std::string corpus_id = "", int jobs = 1, SenseUsage *usage = nullptr);

// The lexicon as seen after tuning: ejected senses removed, discriminators
// attached. The base is not modified.
BgLexicon ApplyTuning(const TunedLexicon &tuned);

// Base lexicon lines, then a `%tuning` line followed by `eject`, `disc`,
// `param` and `corpus` lines.
std::string SerializeTuned(const TunedLexicon &tuned);

// Inverse of SerializeTuned; the base is collapsed with `map`.
TunedLexicon LoadTuned(std::string_view text, const Ontology &ontology,
                       const CollapseMap &map);

}  // namespace lexie

#endif  // LEXIE_TUNER_H_
