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

#ifndef LEXIE_TEXTPIPE_H_
#define LEXIE_TEXTPIPE_H_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexie/lexical_types.h"

namespace lexie {

// The corpus tagset. BE marks forms of "be"; UNK is what raw-mode reading
// assigns before the fallback tagger runs.
enum class Tag {
  kNN, kNNP, kVB, kVBD, kVBN, kDET, kADJ, kPREP, kPRON, kCONJ, kNUM, kADV,
  kPUNCT, kOTHER, kBE, kUNK
};

std::string_view TagName(Tag tag);
std::optional<Tag> ParseTag(std::string_view name);

// Lexicon part of speech for a corpus tag: nouns and pronouns look up noun
// entries, every verbal tag looks up verb entries.
WordClass LexicalClassOf(Tag tag);

bool IsVerbTag(Tag tag);
bool IsNounTag(Tag tag);

struct Token {
  std::string surface;
  std::string lemma;
  Tag pos = Tag::kUNK;
  int sent_idx = 0;
  int tok_idx = 0;  // index within the document
  std::pair<size_t, size_t> char_span{0, 0};  // byte offsets into the source
};

struct SentenceSpan {
  int begin = 0;
  int end = 0;  // exclusive token index
};

struct Document {
  std::string id;
  std::vector<Token> tokens;
  std::vector<SentenceSpan> sentences;

  std::span<const Token> Sentence(size_t i) const {
    return std::span<const Token>(tokens).subspan(
        sentences[i].begin, sentences[i].end - sentences[i].begin);
  }
};

struct Corpus {
  std::vector<Document> documents;

  size_t token_count() const;
};

enum class CorpusFormat { kVertical, kRaw };

// Vertical format: `#DOC <id>` starts a document, a blank line ends a
// sentence, token lines are `surface<TAB>lemma<TAB>POS` (a fourth column is
// ignored). Raw format: plain text, `#DOC <id>` lines honoured, tokens get
// pos UNK and a lower-cased lemma. Throws ParseError on malformed lines.
Corpus ReadCorpus(std::string_view text, CorpusFormat format = CorpusFormat::kVertical);

// Writes the vertical format; `extra` supplies an optional fourth column per
// (document, token).
std::string WriteVertical(
    const Corpus &corpus,
    const std::function<std::string(size_t doc, size_t tok)> &extra = {});

// Fallback tagger for raw text: closed-class word lists plus suffix rules,
// then the suffix-stripping lemmatizer.
void TagRaw(Corpus &corpus);

// Lower-cases and strips inflection per the documented suffix table.
std::string Lemmatize(std::string_view surface);

enum class ChunkKind { kNP, kVG, kPP, kO };

std::string_view ChunkKindName(ChunkKind kind);

struct Chunk {
  ChunkKind kind = ChunkKind::kO;
  int begin = 0;  // document token indices, end exclusive
  int end = 0;
  int head = 0;

  bool operator==(const Chunk &) const = default;
};

// Chunks one sentence. Spans partition the sentence.
std::vector<Chunk> ChunkSentence(std::span<const Token> sentence);

enum class Voice { kActive, kPassive };

struct GrRelation {
  int verb = 0;  // head of a VG chunk
  RelationLabel relation;
  int dependent = 0;  // head of an NP chunk
  Voice voice = Voice::kActive;

  bool operator==(const GrRelation &) const = default;
};

// True iff the VG contains a BE token followed later by a VBN main verb
// that heads the group.
bool IsPassive(const Chunk &vg, std::span<const Token> doc_tokens);

// Local, rule-based relations for one sentence's chunks. `doc_tokens` is the
// whole document's token vector (chunks use document indices).
std::vector<GrRelation> GrammaticalRelations(std::span<const Chunk> chunks,
                                             std::span<const Token> doc_tokens);

struct SentenceAnalysis {
  std::vector<Chunk> chunks;
  std::vector<GrRelation> relations;
};

struct DocumentAnalysis {
  std::vector<SentenceAnalysis> sentences;

  // The NP chunk headed by `head`, if any.
  const Chunk *NounPhraseHeadedBy(int sent_idx, int head) const;
};

DocumentAnalysis AnalyzeDocument(const Document &doc);

}  // namespace lexie

#endif  // LEXIE_TEXTPIPE_H_
