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

#ifndef LEXIE_WORKBENCH_H_
#define LEXIE_WORKBENCH_H_

#include <map>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexie/ontology.h"
#include "lexie/textpipe.h"
#include "lexie/wsd.h"

namespace lexie {

// --- Queries ---------------------------------------------------------------------

enum class AtomKind { kWord, kLemma, kPos, kClass, kLiteral };

struct QueryAtom {
  AtomKind kind = AtomKind::kLiteral;
  std::string value;  // regex source, lemma, tag name, class id or literal
  std::regex regex;   // kWord only
  Tag tag = Tag::kUNK;  // kPos only
};

// All atoms of a constraint must hold for one token.
struct TokenConstraint {
  std::vector<QueryAtom> atoms;
};

struct PatternQuery {
  std::vector<TokenConstraint> constraints;

  bool NeedsTags() const;
};

// Whitespace-separated constraints, each `word=/re/`, `lemma=x`, `pos=TAG`,
// `class=ID` or a bare literal; `[a&b]` groups several atoms on one token.
// Throws Error on an empty query, an invalid regex or an unknown tag.
PatternQuery ParseQuery(std::string_view text);

// Token test. `tags` and `ontology` may be null; class atoms then fail.
// A class atom holds when the token's tag class equals the id or, with an
// ontology, is subsumed by it.
bool AtomMatches(const QueryAtom &atom, const Token &token,
                 const std::optional<SenseTag> *tag, const Ontology *ontology);

// --- Concordance -------------------------------------------------------------------

struct CorpusIndex {
  using Posting = std::pair<int, int>;  // (document, token)
  std::map<std::string, std::vector<Posting>, std::less<>> lemma;
  std::map<std::string, std::vector<Posting>, std::less<>> surface;
  std::map<Tag, std::vector<Posting>> pos;
  std::map<std::string, std::vector<Posting>, std::less<>> cls;
};

CorpusIndex BuildIndex(const Corpus &corpus, const CorpusTags *tags);

struct KwicLine {
  std::string doc;
  int doc_index = 0;
  int sent_idx = 0;
  int begin = 0;  // match span, end exclusive
  int end = 0;
  std::vector<std::string> left;
  std::vector<std::string> match;
  std::vector<std::string> right;

  bool operator==(const KwicLine &) const = default;
};

// Non-overlapping leftmost matches within sentences, in document order.
// Throws Error when the query has class atoms and `tags` is null.
std::vector<KwicLine> Kwic(const Corpus &corpus, const CorpusIndex &index,
                           const CorpusTags *tags, const Ontology *ontology,
                           const PatternQuery &query, int width);

std::string FormatKwic(const std::vector<KwicLine> &lines, bool tsv);

// --- Pattern reports -----------------------------------------------------------------

enum class ReportKind { kCollocate, kPosTrigram, kRelation };

std::string_view ReportKindName(ReportKind kind);

struct PatternReportEntry {
  ReportKind kind = ReportKind::kCollocate;
  std::string value;
  long frequency = 0;
  double score = 0.0;

  bool operator==(const PatternReportEntry &) const = default;
};

struct ReportParams {
  int window = 5;
  int top = 10;
};

// Dunning's G2 for the 2x2 table [[a, b], [c, d]], signed negative when `a`
// falls below its expected count.
double LogLikelihoodRatio(double a, double b, double c, double d);

// Collocates in the union of the target's +/-window positions scored by G2
// against the rest of the corpus; POS trigrams containing the target; and
// relation frames (`rel:CLASS` for the target as verb, `rel-of:verb` for the
// target as dependent). Each kind sorted by score, then value, and cut to
// `top`. Throws Error when the target does not occur.
std::vector<PatternReportEntry> PatternReport(const Corpus &corpus, const CorpusTags *tags,
                                              const std::vector<DocumentAnalysis> &analyses,
                                              std::string_view target,
                                              const ReportParams &params);

std::string FormatReport(const std::vector<PatternReportEntry> &entries, bool tsv);

}  // namespace lexie

#endif  // LEXIE_WORKBENCH_H_
