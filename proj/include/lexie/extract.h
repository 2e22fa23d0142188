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

#ifndef LEXIE_EXTRACT_H_
#define LEXIE_EXTRACT_H_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "lexie/ontology.h"
#include "lexie/textpipe.h"
#include "lexie/wsd.h"

namespace lexie {

enum class FillerSource { kDirect, kSalient, kUnfilled };

std::string_view FillerSourceName(FillerSource source);

struct SlotFiller {
  std::string slot;
  FillerSource source = FillerSource::kUnfilled;
  int head = -1;     // document token index
  std::string lemma;  // head lemma
  std::string text;   // surface of the noun phrase
  std::string cls;
  int begin = -1;  // noun phrase span, end exclusive
  int end = -1;

  bool filled() const { return source != FillerSource::kUnfilled; }
  bool operator==(const SlotFiller &) const = default;
};

// A state assertion with each role replaced by its filler's head lemma
// (nullopt for unfilled roles).
struct FilledAssertion {
  std::string predicate;
  std::vector<std::optional<std::string>> args;
  bool polarity = true;
  Phase phase = Phase::kAfter;

  bool operator==(const FilledAssertion &) const = default;
};

struct Provenance {
  std::string doc;
  int sentence = 0;
  int token = 0;
  std::string trigger;  // lemma
  std::string sense;
  std::string concept_id;
  TagMethod method = TagMethod::kForeground;
  bool passive_implicature = false;

  bool operator==(const Provenance &) const = default;
};

struct TemplateInstance {
  std::string schema;
  std::vector<SlotFiller> fillers;  // schema slot order
  std::vector<FilledAssertion> assertions;
  std::optional<std::string> instigator;  // slot name
  Provenance provenance;

  const SlotFiller *Filler(std::string_view slot) const;
  bool operator==(const TemplateInstance &) const = default;
};

// The most recent noun-phrase head before `position` in the document whose
// background class is compatible with `restriction`, skipping `exclude`.
std::optional<int> ResolveSalient(const Document &doc, const DocumentAnalysis &analysis,
                                  const DocTags &tags, const Ontology &ontology,
                                  std::string_view restriction, int position,
                                  const std::set<int> &exclude = {});

// One instance per match, in match order. Required roles left unfilled by the
// match are resolved by salience. A filler whose class is incompatible with
// its slot class is reported unfilled. Throws Error for a missing schema.
std::vector<TemplateInstance> FillTemplates(const Document &doc,
                                            const DocumentAnalysis &analysis,
                                            const std::vector<FgMatch> &matches,
                                            const DocTags &tags, const Ontology &ontology);

// One JSON object per line with keys schema, fillers, assertions,
// instigator, provenance. `params` is echoed into each provenance.
nlohmann::ordered_json InstanceJson(const TemplateInstance &instance,
                                    const nlohmann::ordered_json &params);
std::string WriteOutput(const std::vector<TemplateInstance> &instances,
                        const nlohmann::ordered_json &params = nlohmann::ordered_json::object());

}  // namespace lexie

#endif  // LEXIE_EXTRACT_H_
