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

#include "lexie/wsd.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "lexie/error.h"
#include "lexie/parallel.h"
#include "lexie/strings.h"

namespace lexie {

std::string KeyLemma(const Token &token) { return ToLower(token.lemma); }

std::vector<std::string> ContextLemmas(const Document &doc, int tok_idx, int window) {
  std::vector<std::string> out;
  int lo = std::max(0, tok_idx - window);
  int hi = std::min(static_cast<int>(doc.tokens.size()) - 1, tok_idx + window);
  for (int i = lo; i <= hi; ++i) {
    if (i == tok_idx || doc.tokens[i].pos == Tag::kPUNCT) continue;
    out.push_back(KeyLemma(doc.tokens[i]));
  }
  return out;
}

Context MakeContext(const Document &doc, int tok_idx, int window) {
  Context ctx;
  int lo = std::max(0, tok_idx - window);
  int hi = std::min(static_cast<int>(doc.tokens.size()) - 1, tok_idx + window);
  for (int i = lo; i <= hi; ++i) {
    if (i == tok_idx || doc.tokens[i].pos == Tag::kPUNCT) continue;
    (i < tok_idx ? ctx.left : ctx.right).push_back(KeyLemma(doc.tokens[i]));
  }
  return ctx;
}

// --- Training ------------------------------------------------------------------

void BayesCounts::Merge(const BayesCounts &other) {
  for (const auto &[c, n] : other.anchors) anchors[c] += n;
  for (const auto &[w, by_class] : other.context) {
    auto &mine = context[w];
    for (const auto &[c, n] : by_class) mine[c] += n;
  }
  for (const auto &[c, n] : other.context_total) context_total[c] += n;
  for (const auto &[w, n] : other.unigram) unigram[w] += n;
  tokens += other.tokens;
}

BayesCounts CountDocument(const Document &doc, const BgLexicon &bg, int window) {
  BayesCounts counts;
  for (const Token &t : doc.tokens) {
    if (t.pos == Tag::kPUNCT) continue;
    ++counts.unigram[KeyLemma(t)];
    ++counts.tokens;
  }
  for (const Token &t : doc.tokens) {
    if (t.pos == Tag::kPUNCT) continue;
    BgLookup lookup = bg.Senses(KeyLemma(t), LexicalClassOf(t.pos));
    if (lookup.senses.size() != 1) continue;
    const std::string &cls = lookup.senses[0].coarse_class;
    ++counts.anchors[cls];
    for (const std::string &w : ContextLemmas(doc, t.tok_idx, window)) {
      ++counts.context[w][cls];
      ++counts.context_total[cls];
    }
  }
  return counts;
}

double BayesModel::Weight(std::string_view lemma, std::string_view cls) const {
  auto it = weights.find(std::string(lemma));
  if (it == weights.end()) return 0.0;
  auto jt = it->second.find(std::string(cls));
  return jt == it->second.end() ? 0.0 : jt->second;
}

double BayesModel::LogPrior(std::string_view cls) const {
  auto it = priors.find(std::string(cls));
  if (it == priors.end() || it->second <= 0.0) return -INFINITY;
  return std::log(it->second);
}

bool BayesModel::InVocab(std::string_view lemma) const {
  return weights.count(std::string(lemma)) > 0;
}

BayesModel FinalizeBayes(const BayesCounts &counts, const BayesParams &params) {
  long total_anchors = 0;
  for (const auto &[c, n] : counts.anchors) total_anchors += n;
  if (total_anchors == 0) {
    throw Error("no training anchors: no corpus lemma is unambiguous in the background lexicon");
  }
  BayesModel model;
  model.window = params.window;
  model.alpha = params.alpha;
  for (const auto &[c, n] : counts.anchors) {
    model.priors[c] = static_cast<double>(n) / static_cast<double>(total_anchors);
  }
  for (const auto &[w, by_class] : counts.context) {
    auto uni = counts.unigram.find(w);
    double p = uni == counts.unigram.end() || counts.tokens == 0
                   ? 0.0
                   : static_cast<double>(uni->second) / static_cast<double>(counts.tokens);
    auto &row = model.weights[w];
    for (const auto &[c, unused] : counts.anchors) {
      auto n_it = by_class.find(c);
      double observed = n_it == by_class.end() ? 0.0 : static_cast<double>(n_it->second);
      auto tot = counts.context_total.find(c);
      double window_tokens = tot == counts.context_total.end() ? 0.0 : static_cast<double>(tot->second);
      double expected = window_tokens * p;
      row[c] = std::log((observed + params.alpha) / (expected + params.alpha));
    }
  }
  return model;
}

BayesModel TrainBayes(const Corpus &corpus, const BgLexicon &bg,
                      const BayesParams &params, int jobs) {
  std::vector<BayesCounts> per_doc(corpus.documents.size());
  ParallelFor(corpus.documents.size(), jobs, [&](size_t d) {
    per_doc[d] = CountDocument(corpus.documents[d], bg, params.window);
  });
  BayesCounts total;
  for (const BayesCounts &c : per_doc) total.Merge(c);
  return FinalizeBayes(total, params);
}

std::vector<ClassScore> ClassifyBayes(const BayesModel &model,
                                      std::span<const std::string> context,
                                      std::span<const std::string> candidates) {
  std::vector<ClassScore> out;
  for (const std::string &c : candidates) {
    double score = model.LogPrior(c);
    for (const std::string &w : context) score += model.Weight(w, c);
    out.push_back({c, score});
  }
  std::sort(out.begin(), out.end(), [](const ClassScore &a, const ClassScore &b) {
    if (a.score != b.score) return a.score > b.score;
    return a.cls < b.cls;
  });
  return out;
}

std::string SerializeBayesModel(const BayesModel &model) {
  std::string out = "lexie-bayes 1\n";
  out += "window " + std::to_string(model.window) + "\n";
  out += "alpha " + FormatWeight(model.alpha) + "\n";
  for (const auto &[c, p] : model.priors) out += "prior " + c + " " + FormatWeight(p) + "\n";
  for (const auto &[w, row] : model.weights) {
    for (const auto &[c, v] : row) out += "weight " + w + " " + c + " " + FormatWeight(v) + "\n";
  }
  return out;
}

BayesModel LoadBayesModel(std::string_view text) {
  BayesModel model;
  bool header = false;
  ForEachLine(text, [&](int line_no, std::string_view line) {
    auto words = SplitWhitespace(line);
    if (words.empty()) return;
    auto number = [&](const std::string &s) {
      try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw ParseError("bad number '" + s + "'", line_no);
        return v;
      } catch (const std::logic_error &) {
        throw ParseError("bad number '" + s + "'", line_no);
      }
    };
    if (!header) {
      if (words.size() != 2 || words[0] != "lexie-bayes" || words[1] != "1") {
        throw ParseError("expected 'lexie-bayes 1' header", line_no);
      }
      header = true;
    } else if (words[0] == "window" && words.size() == 2) {
      model.window = static_cast<int>(number(words[1]));
    } else if (words[0] == "alpha" && words.size() == 2) {
      model.alpha = number(words[1]);
    } else if (words[0] == "prior" && words.size() == 3) {
      model.priors[words[1]] = number(words[2]);
    } else if (words[0] == "weight" && words.size() == 4) {
      model.weights[words[1]][words[2]] = number(words[3]);
    } else {
      throw ParseError("unrecognised model line", line_no);
    }
  });
  if (!header) throw ParseError("empty model file", 1);
  return model;
}

// --- Tagging -------------------------------------------------------------------

std::string_view TagMethodName(TagMethod method) {
  switch (method) {
    case TagMethod::kUnambiguous: return "unambiguous";
    case TagMethod::kBayes: return "bayes";
    case TagMethod::kOspd: return "ospd";
    case TagMethod::kForeground: return "foreground";
    case TagMethod::kDecisionList: return "decision_list";
  }
  return "unambiguous";
}

static bool IsBackgroundMethod(TagMethod m) {
  return m == TagMethod::kUnambiguous || m == TagMethod::kBayes || m == TagMethod::kOspd;
}

DocTags DisambiguateDocument(const BayesModel &model, const Document &doc,
                             const BgLexicon &bg) {
  DocTags tags(doc.tokens.size());
  for (const Token &t : doc.tokens) {
    if (t.pos == Tag::kPUNCT) continue;
    BgLookup lookup = bg.Senses(KeyLemma(t), LexicalClassOf(t.pos));
    if (lookup.senses.empty()) continue;
    if (lookup.senses.size() == 1) {
      tags[t.tok_idx] = SenseTag{t.tok_idx, lookup.senses[0].sense_id,
                                 lookup.senses[0].coarse_class, 0.0,
                                 TagMethod::kUnambiguous};
      continue;
    }
    std::vector<std::string> candidates;
    for (const CoarseSense &s : lookup.senses) candidates.push_back(s.coarse_class);
    std::vector<std::string> context = ContextLemmas(doc, t.tok_idx, model.window);
    std::vector<ClassScore> ranked = ClassifyBayes(model, context, candidates);
    const ClassScore &best = ranked.front();
    std::string sense_id;
    for (const CoarseSense &s : lookup.senses) {
      if (s.coarse_class == best.cls) sense_id = s.sense_id;
    }
    tags[t.tok_idx] = SenseTag{t.tok_idx, sense_id, best.cls, best.score, TagMethod::kBayes};
  }
  return tags;
}

CorpusTags DisambiguateBackground(const BayesModel &model, const Corpus &corpus,
                                  const BgLexicon &bg, int jobs) {
  CorpusTags out(corpus.documents.size());
  ParallelFor(corpus.documents.size(), jobs, [&](size_t d) {
    out[d] = DisambiguateDocument(model, corpus.documents[d], bg);
  });
  return out;
}

DocTags UnambiguousTags(const Document &doc, const BgLexicon &bg) {
  DocTags tags(doc.tokens.size());
  for (const Token &t : doc.tokens) {
    if (t.pos == Tag::kPUNCT) continue;
    BgLookup lookup = bg.Senses(KeyLemma(t), LexicalClassOf(t.pos));
    if (lookup.senses.size() != 1) continue;
    tags[t.tok_idx] = SenseTag{t.tok_idx, lookup.senses[0].sense_id,
                               lookup.senses[0].coarse_class, 0.0, TagMethod::kUnambiguous};
  }
  return tags;
}

void ApplyOspd(const Document &doc, DocTags &tags, const BgLexicon &bg) {
  std::map<LexKey, std::vector<int>> groups;
  for (const Token &t : doc.tokens) {
    const auto &tag = tags[t.tok_idx];
    if (!tag || !IsBackgroundMethod(tag->method)) continue;
    groups[{KeyLemma(t), LexicalClassOf(t.pos)}].push_back(t.tok_idx);
  }
  for (const auto &[key, members] : groups) {
    if (members.size() < 2) continue;
    std::map<std::string, size_t> votes;
    for (int i : members) ++votes[tags[i]->cls];
    const std::string *winner = nullptr;
    for (const auto &[cls, n] : votes) {
      if (2 * n > members.size()) winner = &cls;
    }
    if (winner == nullptr) continue;
    const BgSense *sense = bg.SenseWithClass(key.first, key.second, *winner);
    for (int i : members) {
      SenseTag &tag = *tags[i];
      if (tag.cls == *winner) continue;
      tag.cls = *winner;
      if (sense != nullptr) tag.sense_id = sense->sense_id;
      tag.method = TagMethod::kOspd;
    }
  }
}

// --- Foreground matching -------------------------------------------------------

SenseFit FitSense(const Realization &sense, const VerbFrame &frame,
                  const Ontology &ontology, const MatchOptions &options) {
  SenseFit fit;
  const bool passive = frame.voice == Voice::kPassive;
  const ConceptNode &concept_node = sense.resolved;
  std::map<std::string, Filler> bound;
  for (const auto &[label, filler] : frame.relations) {
    RelationLabel mapped = label;
    if (passive && label.type == RelationType::kSubj) {
      mapped = {RelationType::kDobj, ""};
    } else if (passive && label.type == RelationType::kAgentBy) {
      mapped = {RelationType::kSubj, ""};
    } else if (label.type == RelationType::kAgentBy) {
      continue;
    }
    const std::string *role = sense.RoleFor(mapped);
    if (role == nullptr) continue;
    bound.emplace(*role, filler);
  }

  const std::string *subj_role = sense.RoleFor({RelationType::kSubj, ""});
  fit.fits = true;
  for (const ArgSpec &arg : concept_node.args) {
    auto it = bound.find(arg.role);
    if (it == bound.end()) {
      fit.bindings.push_back({arg.role, BindingKind::kUnfilled, -1});
      bool implicit = passive && subj_role != nullptr && *subj_role == arg.role;
      if (implicit) fit.passive_implicature = true;
      if (arg.required && !(implicit && options.passive_implicature)) {
        fit.fits = false;
        if (fit.reason.empty()) fit.reason = "required role " + arg.role + " unfilled";
      }
      continue;
    }
    const Filler &filler = it->second;
    fit.bindings.push_back({arg.role, BindingKind::kHead, filler.head});
    if (!filler.cls) {
      fit.fits = false;
      if (fit.reason.empty()) fit.reason = "role " + arg.role + " head has no class";
    } else if (!ontology.HasClass(arg.restriction) || !ontology.HasClass(*filler.cls) ||
               !ontology.Compatible(*filler.cls, arg.restriction)) {
      fit.fits = false;
      if (fit.reason.empty()) {
        fit.reason = "role " + arg.role + " needs " + arg.restriction + ", got " + *filler.cls;
      }
    }
  }
  if (fit.fits && fit.passive_implicature && !options.implicature_alone) {
    bool any = std::any_of(fit.bindings.begin(), fit.bindings.end(),
                           [](const RoleBinding &b) { return b.kind == BindingKind::kHead; });
    if (!any) {
      fit.fits = false;
      fit.reason = "passive with no filled role";
    }
  }
  return fit;
}

std::vector<const Realization *> SurvivingSenses(const FgLexicon &lexicon,
                                                 std::string_view lemma,
                                                 const VerbFrame &frame,
                                                 const Ontology &ontology,
                                                 const MatchOptions &options) {
  std::vector<const Realization *> out;
  for (const Realization *r : lexicon.Senses(lemma, WordClass::kVerb, options.lang)) {
    if (FitSense(*r, frame, ontology, options).fits) out.push_back(r);
  }
  return out;
}

VerbFrame BuildFrame(int verb, std::span<const GrRelation> relations,
                     const DocTags &tags) {
  VerbFrame frame;
  for (const GrRelation &rel : relations) {
    if (rel.verb != verb) continue;
    frame.voice = rel.voice;
    Filler filler{rel.dependent, std::nullopt};
    const auto &tag = tags[rel.dependent];
    if (tag && IsBackgroundMethod(tag->method)) filler.cls = tag->cls;
    frame.relations.emplace_back(rel.relation, std::move(filler));
  }
  return frame;
}

MatchResult MatchForeground(const Document &doc, const DocumentAnalysis &analysis,
                            const FgLexicon &lexicon, const DocTags &tags,
                            const Ontology &ontology, const MatchOptions &options) {
  MatchResult result;
  for (size_t s = 0; s < analysis.sentences.size(); ++s) {
    const SentenceAnalysis &sa = analysis.sentences[s];
    for (const Chunk &chunk : sa.chunks) {
      if (chunk.kind != ChunkKind::kVG) continue;
      const int verb = chunk.head;
      const std::string lemma = KeyLemma(doc.tokens[verb]);
      auto senses = lexicon.Senses(lemma, WordClass::kVerb, options.lang);
      if (senses.empty()) continue;

      VerbFrame frame = BuildFrame(verb, sa.relations, tags);
      frame.voice = IsPassive(chunk, doc.tokens) ? Voice::kPassive : Voice::kActive;

      std::vector<std::pair<const Realization *, SenseFit>> fg_fits;
      int surviving = 0;
      for (const Realization *r : senses) {
        SenseFit fit = FitSense(*r, frame, ontology, options);
        if (!fit.fits) continue;
        ++surviving;
        if (!r->resolved.general) fg_fits.emplace_back(r, std::move(fit));
      }
      if (fg_fits.empty()) continue;

      size_t chosen = 0;
      TagMethod method = TagMethod::kForeground;
      bool one_concept = std::all_of(fg_fits.begin(), fg_fits.end(), [&](const auto &f) {
        return f.first->concept_id() == fg_fits.front().first->concept_id();
      });
      if (!one_concept) {
        // Distinct concepts with the same fit: the lexicographer's
        // discriminators decide, or we abstain.
        std::set<std::string> fitting;
        for (const auto &f : fg_fits) fitting.insert(f.first->sense_id());
        DecisionList list;
        std::set<std::tuple<Feature, std::string>> seen;
        for (const auto &f : fg_fits) {
          for (const DecisionRule &rule : f.first->resolved.discriminators) {
            if (!fitting.count(rule.sense)) continue;
            if (seen.emplace(rule.feature, rule.sense).second) list.rules.push_back(rule);
          }
        }
        SortRules(list.rules);
        DecisionOutcome outcome =
            ApplyDecisionList(list, MakeContext(doc, verb, options.discriminator_window));
        if (!outcome.rule) {
          std::string names;
          for (const auto &f : fg_fits) {
            names += (names.empty() ? "" : ", ") + f.first->sense_id() + "/" + f.first->concept_id();
          }
          result.diagnostics.push_back(
              {static_cast<int>(s), verb,
               "'" + doc.tokens[verb].surface + "' fits several foreground senses (" + names +
                   "); no discriminator applies, abstaining"});
          continue;
        }
        for (size_t k = 0; k < fg_fits.size(); ++k) {
          if (fg_fits[k].first->sense_id() == outcome.sense) {
            chosen = k;
            break;
          }
        }
        method = TagMethod::kDecisionList;
      }

      const auto &[realization, fit] = fg_fits[chosen];
      FgMatch m;
      m.sent_idx = static_cast<int>(s);
      m.verb = verb;
      m.concept_id = realization->concept_id();
      m.sense_id = realization->sense_id();
      m.realization = realization;
      m.bindings = fit.bindings;
      m.passive_implicature = fit.passive_implicature;
      m.competitors = static_cast<int>(fg_fits.size()) - 1;
      m.surviving = surviving;
      m.method = method;
      result.matches.push_back(std::move(m));
    }
  }
  return result;
}

void ApplyForegroundPriority(const std::vector<FgMatch> &matches, DocTags &tags) {
  for (const FgMatch &m : matches) {
    tags[m.verb] = SenseTag{m.verb, m.sense_id, m.concept_id, 0.0, m.method};
  }
}

bool VerifyMatch(const FgMatch &match, const DocTags &tags, const Ontology &ontology) {
  if (match.realization == nullptr) return false;
  for (const RoleBinding &b : match.bindings) {
    const ArgSpec *arg = match.realization->resolved.FindArg(b.role);
    if (arg == nullptr) return false;
    if (b.kind != BindingKind::kHead) continue;
    const auto &tag = tags[b.head];
    if (!tag || !IsBackgroundMethod(tag->method)) return false;
    if (!ontology.HasClass(tag->cls) || !ontology.Compatible(tag->cls, arg->restriction)) {
      return false;
    }
  }
  return true;
}

}  // namespace lexie
