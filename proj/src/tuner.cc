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

#include <algorithm>

#include "lexie/error.h"
#include "lexie/strings.h"
#include "lexie/wsd.h"

namespace lexie {
namespace {

constexpr std::string_view kTuningMarker = "%tuning";

BgLexicon StripDiscriminators(const BgLexicon &bg) {
  std::vector<BgSense> senses;
  for (const auto &[key, bucket] : bg.entries()) {
    senses.insert(senses.end(), bucket.begin(), bucket.end());
  }
  return BgLexicon(std::move(senses), bg.collapsed());
}

double Rounded(double v) { return std::stod(FormatWeight(v)); }

}  // namespace

bool TunedLexicon::IsEjected(std::string_view lemma, WordClass pos,
                             std::string_view sense_id) const {
  auto it = ejected.find({std::string(lemma), pos});
  return it != ejected.end() && it->second.count(std::string(sense_id)) > 0;
}

TunedLexicon Tune(const BgLexicon &bg, const Corpus &corpus, const TuneParams &params,
                  std::string corpus_id, int jobs, SenseUsage *usage) {
  if (!bg.collapsed()) throw Error("tuning needs a collapsed background lexicon");
  if (corpus.token_count() == 0) throw Error("cannot tune on an empty corpus");

  BayesModel model = TrainBayes(corpus, bg, {params.window, params.alpha}, jobs);
  CorpusTags tags = DisambiguateBackground(model, corpus, bg, jobs);
  if (params.ospd) {
    for (size_t d = 0; d < corpus.documents.size(); ++d) {
      ApplyOspd(corpus.documents[d], tags[d], bg);
    }
  }

  SenseUsage counts;
  std::map<LexKey, std::set<std::string>> cooccur;
  for (size_t d = 0; d < corpus.documents.size(); ++d) {
    const Document &doc = corpus.documents[d];
    for (const Token &t : doc.tokens) {
      const auto &tag = tags[d][t.tok_idx];
      if (!tag) continue;
      LexKey key{KeyLemma(t), LexicalClassOf(t.pos)};
      ++counts.occurrences[key];
      ++counts.assigned[{key.first, key.second, tag->sense_id}];
      auto &words = cooccur[key];
      for (std::string &w : ContextLemmas(doc, t.tok_idx, params.window)) {
        if (w != key.first) words.insert(std::move(w));
      }
    }
  }

  TunedLexicon tuned;
  tuned.base = StripDiscriminators(bg);
  tuned.corpus_id = std::move(corpus_id);
  tuned.params = params;
  for (const auto &[key, bucket] : bg.entries()) {
    auto occ = counts.occurrences.find(key);
    long seen = occ == counts.occurrences.end() ? 0 : occ->second;
    for (const BgSense &s : bucket) {
      SenseKey skey{key.first, key.second, s.sense_id};
      if (seen >= params.min_occurrences && counts.assigned.count(skey) == 0) {
        tuned.ejected[key].insert(s.sense_id);
        continue;
      }
      auto words = cooccur.find(key);
      if (words == cooccur.end()) continue;
      Discriminators ranked;
      for (const std::string &w : words->second) {
        double weight = model.Weight(w, *s.coarse_class);
        if (weight > 0.0) ranked.emplace_back(w, weight);
      }
      std::sort(ranked.begin(), ranked.end(), [](const auto &a, const auto &b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
      });
      if (ranked.size() > static_cast<size_t>(params.top_k)) ranked.resize(params.top_k);
      for (auto &entry : ranked) entry.second = Rounded(entry.second);
      if (!ranked.empty()) tuned.discriminators[skey] = std::move(ranked);
    }
  }
  if (usage != nullptr) *usage = std::move(counts);
  return tuned;
}

BgLexicon ApplyTuning(const TunedLexicon &tuned) {
  std::vector<BgSense> kept;
  for (const auto &[key, bucket] : tuned.base.entries()) {
    for (const BgSense &s : bucket) {
      if (!tuned.IsEjected(s.lemma, s.pos, s.sense_id)) kept.push_back(s);
    }
  }
  BgLexicon view(std::move(kept), tuned.base.collapsed());
  for (const auto &[key, disc] : tuned.discriminators) {
    const auto &[lemma, pos, sense_id] = key;
    view.SetDiscriminators(lemma, pos, sense_id, disc);
  }
  return view;
}

std::string SerializeTuned(const TunedLexicon &tuned) {
  std::string out = SerializeBgLexicon(tuned.base);
  out += std::string(kTuningMarker) + "\n";
  for (const auto &[key, senses] : tuned.ejected) {
    for (const std::string &s : senses) {
      out += "eject " + key.first + " " + std::string(WordClassName(key.second)) + " " + s + "\n";
    }
  }
  for (const auto &[key, disc] : tuned.discriminators) {
    const auto &[lemma, pos, sense_id] = key;
    out += "disc " + lemma + " " + std::string(WordClassName(pos)) + " " + sense_id + " ";
    for (size_t i = 0; i < disc.size(); ++i) {
      if (i > 0) out += ',';
      out += disc[i].first + ":" + FormatWeight(disc[i].second);
    }
    out += '\n';
  }
  const TuneParams &p = tuned.params;
  out += "param min_occurrences " + std::to_string(p.min_occurrences) + "\n";
  out += "param window " + std::to_string(p.window) + "\n";
  out += "param alpha " + FormatWeight(p.alpha) + "\n";
  out += "param top_k " + std::to_string(p.top_k) + "\n";
  out += std::string("param ospd ") + (p.ospd ? "on" : "off") + "\n";
  if (!tuned.corpus_id.empty()) out += "corpus " + tuned.corpus_id + "\n";
  return out;
}

TunedLexicon LoadTuned(std::string_view text, const Ontology &ontology,
                       const CollapseMap &map) {
  // Locate the marker line; base lines precede it.
  size_t marker = std::string_view::npos;
  int marker_line = 0;
  {
    size_t pos = 0;
    int line_no = 1;
    while (pos <= text.size()) {
      size_t nl = text.find('\n', pos);
      std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
      if (Trim(line) == kTuningMarker) {
        marker = pos;
        marker_line = line_no;
        break;
      }
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
      ++line_no;
    }
  }
  if (marker == std::string_view::npos) throw ParseError("missing '%tuning' line", 1);

  TunedLexicon tuned;
  tuned.base = Collapse(LoadBgLexicon(text.substr(0, marker), ontology), map, ontology);
  tuned.params = TuneParams{};

  std::string_view rest = text.substr(marker);
  ForEachLine(rest, [&](int rel_line, std::string_view raw) {
    const int line_no = marker_line + rel_line - 1;
    if (rel_line == 1) return;
    auto words = SplitWhitespace(raw);
    if (words.empty()) return;
    auto word_class = [&](const std::string &s) {
      auto pos = ParseWordClass(s);
      if (!pos) throw ParseError("unknown part of speech '" + s + "'", line_no);
      return *pos;
    };
    auto integer = [&](const std::string &s) {
      try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size()) return v;
      } catch (const std::logic_error &) {
      }
      throw ParseError("bad integer '" + s + "'", line_no);
    };
    auto number = [&](const std::string &s) {
      try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used == s.size()) return v;
      } catch (const std::logic_error &) {
      }
      throw ParseError("bad number '" + s + "'", line_no);
    };
    const std::string &kw = words[0];
    if (kw == "eject" && words.size() == 4) {
      WordClass pos = word_class(words[2]);
      const auto *bucket = tuned.base.Find(words[1], pos);
      bool known = bucket != nullptr &&
                   std::any_of(bucket->begin(), bucket->end(),
                               [&](const BgSense &s) { return s.sense_id == words[3]; });
      if (!known) {
        throw ParseError("ejected sense " + words[1] + " " + words[2] + " " + words[3] +
                             " is not in the base lexicon",
                         line_no);
      }
      tuned.ejected[{words[1], pos}].insert(words[3]);
    } else if (kw == "disc" && words.size() == 5) {
      Discriminators disc;
      for (const std::string &item : Split(words[4], ',')) {
        size_t colon = item.rfind(':');
        if (colon == std::string::npos || colon == 0) {
          throw ParseError("expected 'lemma:weight' in '" + item + "'", line_no);
        }
        disc.emplace_back(item.substr(0, colon), number(item.substr(colon + 1)));
      }
      tuned.discriminators[{words[1], word_class(words[2]), words[3]}] = std::move(disc);
    } else if (kw == "param" && words.size() == 3) {
      const std::string &name = words[1];
      if (name == "min_occurrences") {
        tuned.params.min_occurrences = integer(words[2]);
      } else if (name == "window") {
        tuned.params.window = integer(words[2]);
      } else if (name == "alpha") {
        tuned.params.alpha = number(words[2]);
      } else if (name == "top_k") {
        tuned.params.top_k = integer(words[2]);
      } else if (name == "ospd") {
        if (words[2] != "on" && words[2] != "off") {
          throw ParseError("ospd must be on or off", line_no);
        }
        tuned.params.ospd = words[2] == "on";
      } else {
        throw ParseError("unknown parameter '" + name + "'", line_no);
      }
    } else if (kw == "corpus" && words.size() == 2) {
      tuned.corpus_id = words[1];
    } else {
      throw ParseError("unrecognised tuning line", line_no);
    }
  });
  return tuned;
}

}  // namespace lexie
