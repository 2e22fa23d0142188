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

#ifndef LEXIE_PIPELINE_H_
#define LEXIE_PIPELINE_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lexie/bg_lexicon.h"
#include "lexie/extract.h"
#include "lexie/fg_lexicon.h"
#include "lexie/ontology.h"
#include "lexie/textpipe.h"
#include "lexie/wsd.h"

namespace lexie {

enum class PipelineOrder { kBackgroundFirst, kForegroundFirst };

std::string_view PipelineOrderName(PipelineOrder order);

struct RunConfig {
  std::string ontology;
  std::string fg;
  std::string bg;
  std::string collapse;
  std::string corpus;
  std::string tuned;
  std::string output;

  int window = 10;
  double alpha = 0.1;
  int min_occurrences = 5;
  int top_k = 10;
  bool ospd = true;
  bool passive_implicature = true;
  bool implicature_alone = true;
  PipelineOrder order = PipelineOrder::kBackgroundFirst;
  int jobs = 1;
  bool raw = false;

  // Throws Error naming the first out-of-range parameter.
  void Check() const;
};

// Applies `key = value` lines (`#` comments) onto `config`. Keys use the
// long flag names with dashes or underscores. Throws ParseError on unknown
// keys or bad values.
void ApplyConfigText(std::string_view text, RunConfig &config);

// Effective parameters echoed into output provenance. Excludes paths and
// the job count, which do not affect results.
nlohmann::ordered_json ParamsJson(const RunConfig &config);

struct PipelineOptions {
  BayesParams bayes;
  bool ospd = true;
  MatchOptions match;
  PipelineOrder order = PipelineOrder::kBackgroundFirst;
};

PipelineOptions OptionsFrom(const RunConfig &config);

struct DocumentResult {
  DocumentAnalysis analysis;
  DocTags tags;
  MatchResult match;
  std::vector<TemplateInstance> instances;
};

struct PipelineResult {
  BayesModel model;
  std::vector<DocumentResult> documents;
};

// Background disambiguation, one sense per discourse, foreground matching,
// foreground priority and template filling, document-parallel. With
// kForegroundFirst the matcher sees only coarse-unambiguous tags.
PipelineResult RunPipeline(const Corpus &corpus, const Ontology &ontology,
                           const FgLexicon &fg, const BgLexicon &bg,
                           const PipelineOptions &options, int jobs = 1);

// Tokens' fourth column for sense-tagged vertical output: `sense/CLASS/method`
// or `_`.
std::string TagColumn(const std::optional<SenseTag> &tag);

}  // namespace lexie

#endif  // LEXIE_PIPELINE_H_
