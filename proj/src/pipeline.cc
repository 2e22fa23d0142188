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

#include "lexie/pipeline.h"

#include <algorithm>

#include "lexie/error.h"
#include "lexie/parallel.h"
#include "lexie/strings.h"

namespace lexie {

std::string_view PipelineOrderName(PipelineOrder order) {
  return order == PipelineOrder::kBackgroundFirst ? "bg-first" : "fg-first";
}

void RunConfig::Check() const {
  if (window <= 0) throw Error("window must be positive");
  if (!(alpha > 0)) throw Error("alpha must be positive");
  if (min_occurrences <= 0) throw Error("min-occurrences must be positive");
  if (top_k <= 0) throw Error("top-k must be positive");
  if (jobs <= 0) throw Error("jobs must be positive");
}

void ApplyConfigText(std::string_view text, RunConfig &config) {
  ForEachLine(text, [&](int line_no, std::string_view raw) {
    std::string_view line = Trim(StripComment(raw, nullptr));
    if (line.empty()) return;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no);
    std::string key(Trim(line.substr(0, eq)));
    std::string value(Trim(line.substr(eq + 1)));
    std::replace(key.begin(), key.end(), '-', '_');
    auto integer = [&]() {
      try {
        size_t used = 0;
        int v = std::stoi(value, &used);
        if (used == value.size()) return v;
      } catch (const std::logic_error &) {
      }
      throw ParseError("bad integer for " + key + ": '" + value + "'", line_no);
    };
    auto number = [&]() {
      try {
        size_t used = 0;
        double v = std::stod(value, &used);
        if (used == value.size()) return v;
      } catch (const std::logic_error &) {
      }
      throw ParseError("bad number for " + key + ": '" + value + "'", line_no);
    };
    auto boolean = [&]() {
      std::string v = ToLower(value);
      if (v == "on" || v == "true" || v == "yes" || v == "1") return true;
      if (v == "off" || v == "false" || v == "no" || v == "0") return false;
      throw ParseError("bad boolean for " + key + ": '" + value + "'", line_no);
    };
    if (key == "ontology") config.ontology = value;
    else if (key == "fg") config.fg = value;
    else if (key == "bg") config.bg = value;
    else if (key == "collapse") config.collapse = value;
    else if (key == "corpus") config.corpus = value;
    else if (key == "tuned") config.tuned = value;
    else if (key == "output") config.output = value;
    else if (key == "window") config.window = integer();
    else if (key == "alpha") config.alpha = number();
    else if (key == "min_occurrences") config.min_occurrences = integer();
    else if (key == "top_k") config.top_k = integer();
    else if (key == "ospd") config.ospd = boolean();
    else if (key == "passive_implicature") config.passive_implicature = boolean();
    else if (key == "implicature_alone") config.implicature_alone = boolean();
    else if (key == "jobs") config.jobs = integer();
    else if (key == "raw") config.raw = boolean();
    else if (key == "order") {
      if (value == "bg-first") config.order = PipelineOrder::kBackgroundFirst;
      else if (value == "fg-first") config.order = PipelineOrder::kForegroundFirst;
      else throw ParseError("order must be bg-first or fg-first", line_no);
    } else {
      throw ParseError("unknown key '" + key + "'", line_no);
    }
  });
}

nlohmann::ordered_json ParamsJson(const RunConfig &config) {
  nlohmann::ordered_json j;
  j["window"] = config.window;
  j["alpha"] = FormatWeight(config.alpha);
  j["ospd"] = config.ospd;
  j["passive_implicature"] = config.passive_implicature;
  j["implicature_alone"] = config.implicature_alone;
  j["order"] = PipelineOrderName(config.order);
  return j;
}

PipelineOptions OptionsFrom(const RunConfig &config) {
  PipelineOptions o;
  o.bayes = {config.window, config.alpha};
  o.ospd = config.ospd;
  o.match.passive_implicature = config.passive_implicature;
  o.match.implicature_alone = config.implicature_alone;
  o.match.discriminator_window = config.window;
  o.order = config.order;
  return o;
}

PipelineResult RunPipeline(const Corpus &corpus, const Ontology &ontology,
                           const FgLexicon &fg, const BgLexicon &bg,
                           const PipelineOptions &options, int jobs) {
  PipelineResult result;
  result.model = TrainBayes(corpus, bg, options.bayes, jobs);
  result.documents.resize(corpus.documents.size());
  ParallelFor(corpus.documents.size(), jobs, [&](size_t d) {
    const Document &doc = corpus.documents[d];
    DocumentResult &out = result.documents[d];
    out.analysis = AnalyzeDocument(doc);
    if (options.order == PipelineOrder::kBackgroundFirst) {
      out.tags = DisambiguateDocument(result.model, doc, bg);
      if (options.ospd) ApplyOspd(doc, out.tags, bg);
      out.match = MatchForeground(doc, out.analysis, fg, out.tags, ontology, options.match);
    } else {
      DocTags seed = UnambiguousTags(doc, bg);
      out.match = MatchForeground(doc, out.analysis, fg, seed, ontology, options.match);
      out.tags = DisambiguateDocument(result.model, doc, bg);
      if (options.ospd) ApplyOspd(doc, out.tags, bg);
    }
    ApplyForegroundPriority(out.match.matches, out.tags);
    out.instances = FillTemplates(doc, out.analysis, out.match.matches, out.tags, ontology);
  });
  return result;
}

std::string TagColumn(const std::optional<SenseTag> &tag) {
  if (!tag) return "_";
  return tag->sense_id + "/" + tag->cls + "/" + std::string(TagMethodName(tag->method));
}

}  // namespace lexie
