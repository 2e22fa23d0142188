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

#ifndef LEXIE_WSD_H_
#define LEXIE_WSD_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexie/bg_lexicon.h"
#include "lexie/decision_list.h"
#include "lexie/fg_lexicon.h"
#include "lexie/ontology.h"
#include "lexie/textpipe.h"

namespace lexie {

// Lexicon lookup key for a token: the lower-cased lemma.
std::string KeyLemma(const Token &token);

// Lemmas of the non-punctuation tokens within `window` positions of
// `tok_idx` in the same document, excluding the token itself, in text order.
std::vector<std::string> ContextLemmas(const Document &doc, int tok_idx, int window);

// The same window split into left and right halves.
Context MakeContext(const Document &doc, int tok_idx, int window);

// --- Coarse background classifier --------------------------------------------

struct BayesParams {
  int window = 10;
  double alpha = 0.1;
};

// Integer evidence gathered from a corpus. Merging is associative and
// commutative, so documents can be counted independently.
struct BayesCounts {
  std::map<std::string, long> anchors;  // class -> anchor tokens
  std::map<std::string, std::map<std::string, long>> context;  // lemma -> class -> n
  std::map<std::string, long> context_total;  // class -> window tokens
  std::map<std::string, long> unigram;  // lemma -> corpus count
  long tokens = 0;  // non-punctuation tokens

  void Merge(const BayesCounts &other);
  bool operator==(const BayesCounts &) const = default;
};

// Anchors are tokens whose lemma has exactly one coarse sense.
BayesCounts CountDocument(const Document &doc, const BgLexicon &bg, int window);

struct BayesModel {
  std::map<std::string, double> priors;  // class -> probability
  std::map<std::string, std::map<std::string, double>> weights;  // lemma -> class -> log-weight
  int window = 10;
  double alpha = 0.1;

  // 0 for lemmas outside the vocabulary.
  double Weight(std::string_view lemma, std::string_view cls) const;
  double LogPrior(std::string_view cls) const;  // -inf for unseen classes
  bool InVocab(std::string_view lemma) const;

  bool operator==(const BayesModel &) const = default;
};

// weight(w, c) = log((n(w, c) + alpha) / (E(w, c) + alpha)) where E is the
// count expected from the corpus unigram distribution. Throws Error when the
// counts contain no anchors.
BayesModel FinalizeBayes(const BayesCounts &counts, const BayesParams &params);

BayesModel TrainBayes(const Corpus &corpus, const BgLexicon &bg,
                      const BayesParams &params, int jobs = 1);

struct ClassScore {
  std::string cls;
  double score = 0.0;

  bool operator==(const ClassScore &) const = default;
};

// score(c) = log prior(c) + sum of weight(w, c) over in-vocabulary context
// lemmas. Descending; ties go to the lexicographically smaller class.
std::vector<ClassScore> ClassifyBayes(const BayesModel &model,
                                      std::span<const std::string> context,
                                      std::span<const std::string> candidates);

// Versioned text form with sorted keys and six-decimal numbers.
std::string SerializeBayesModel(const BayesModel &model);
BayesModel LoadBayesModel(std::string_view text);

// --- Sense tags ------------------------------------------------------------------

enum class TagMethod { kUnambiguous, kBayes, kOspd, kForeground, kDecisionList };

std::string_view TagMethodName(TagMethod method);

struct SenseTag {
  int tok_idx = 0;
  std::string sense_id;
  std::string cls;  // coarse class, or the concept id for foreground tags
  double score = 0.0;
  TagMethod method = TagMethod::kUnambiguous;

  bool operator==(const SenseTag &) const = default;
};

using DocTags = std::vector<std::optional<SenseTag>>;  // indexed by tok_idx
using CorpusTags = std::vector<DocTags>;

// Tags every token whose lemma has a background entry; others stay empty.
DocTags DisambiguateDocument(const BayesModel &model, const Document &doc,
                             const BgLexicon &bg);

CorpusTags DisambiguateBackground(const BayesModel &model, const Corpus &corpus,
                                  const BgLexicon &bg, int jobs = 1);

// Tags only the coarse-unambiguous tokens (used when foreground matching runs
// before background disambiguation).
DocTags UnambiguousTags(const Document &doc, const BgLexicon &bg);

// One sense per discourse: within a document, instances of a (lemma, part of
// speech) with at least two background tags are moved to the class holding a
// strict majority. Ties are left alone. Changed tags get method kOspd.
void ApplyOspd(const Document &doc, DocTags &tags, const BgLexicon &bg);

// --- Foreground matching -------------------------------------------------------

struct MatchOptions {
  bool passive_implicature = true;
  // Whether a passive with no filled role at all may still match.
  bool implicature_alone = true;
  std::string lang = "en";
  int discriminator_window = 10;
};

// What one grammatical relation of a verb occurrence supplies.
struct Filler {
  int head = -1;
  std::optional<std::string> cls;  // nullopt when the head is untagged
};

struct VerbFrame {
  Voice voice = Voice::kActive;
  std::vector<std::pair<RelationLabel, Filler>> relations;
};

enum class BindingKind { kHead, kUnfilled };

struct RoleBinding {
  std::string role;
  BindingKind kind = BindingKind::kUnfilled;
  int head = -1;

  bool operator==(const RoleBinding &) const = default;
};

struct SenseFit {
  bool fits = false;
  bool passive_implicature = false;
  std::vector<RoleBinding> bindings;  // concept argument order
  std::string reason;                 // why it does not fit
};

// Hard-constraint check of one sense. Under passive voice the surface
// subject fills the object-mapped role and a by-agent the subject-mapped
// role; the subject-mapped role may then stay unfilled.
SenseFit FitSense(const Realization &sense, const VerbFrame &frame,
                  const Ontology &ontology, const MatchOptions &options);

// Senses of a word that survive the restriction check, general ones
// included, in declaration order.
std::vector<const Realization *> SurvivingSenses(const FgLexicon &lexicon,
                                                 std::string_view lemma,
                                                 const VerbFrame &frame,
                                                 const Ontology &ontology,
                                                 const MatchOptions &options);

struct FgMatch {
  int sent_idx = 0;
  int verb = 0;  // document token index
  std::string concept_id;
  std::string sense_id;
  const Realization *realization = nullptr;
  std::vector<RoleBinding> bindings;
  bool passive_implicature = false;
  int competitors = 0;  // other foreground senses that also fit
  int surviving = 0;    // all senses that fit, general ones included
  TagMethod method = TagMethod::kForeground;
};

struct FgDiagnostic {
  int sent_idx = 0;
  int verb = 0;
  std::string message;
};

struct MatchResult {
  std::vector<FgMatch> matches;
  std::vector<FgDiagnostic> diagnostics;
};

// The frame of one verb built from relations and background tags.
VerbFrame BuildFrame(int verb, std::span<const GrRelation> relations,
                     const DocTags &tags);

MatchResult MatchForeground(const Document &doc, const DocumentAnalysis &analysis,
                            const FgLexicon &lexicon, const DocTags &tags,
                            const Ontology &ontology, const MatchOptions &options);

// Replaces the background tag of every matched verb with a foreground tag.
void ApplyForegroundPriority(const std::vector<FgMatch> &matches, DocTags &tags);

// Re-checks every restriction of an emitted match against the tags.
bool VerifyMatch(const FgMatch &match, const DocTags &tags, const Ontology &ontology);

}  // namespace lexie

#endif  // LEXIE_WSD_H_
