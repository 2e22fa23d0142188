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

#include "lexie/textpipe.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "lexie/error.h"
#include "lexie/strings.h"

namespace lexie {

namespace {

constexpr std::array<std::pair<Tag, std::string_view>, 16> kTagNames = {{
    {Tag::kNN, "NN"},     {Tag::kNNP, "NNP"},   {Tag::kVB, "VB"},
    {Tag::kVBD, "VBD"},   {Tag::kVBN, "VBN"},   {Tag::kDET, "DET"},
    {Tag::kADJ, "ADJ"},   {Tag::kPREP, "PREP"}, {Tag::kPRON, "PRON"},
    {Tag::kCONJ, "CONJ"}, {Tag::kNUM, "NUM"},   {Tag::kADV, "ADV"},
    {Tag::kPUNCT, "PUNCT"}, {Tag::kOTHER, "OTHER"}, {Tag::kBE, "BE"},
    {Tag::kUNK, "UNK"},
}};

}  // namespace

std::string_view TagName(Tag tag) {
  for (const auto &[t, name] : kTagNames) {
    if (t == tag) return name;
  }
  return "UNK";
}

std::optional<Tag> ParseTag(std::string_view name) {
  for (const auto &[t, n] : kTagNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

bool IsVerbTag(Tag tag) {
  return tag == Tag::kVB || tag == Tag::kVBD || tag == Tag::kVBN || tag == Tag::kBE;
}

bool IsNounTag(Tag tag) { return tag == Tag::kNN || tag == Tag::kNNP; }

WordClass LexicalClassOf(Tag tag) {
  if (IsNounTag(tag) || tag == Tag::kPRON) return WordClass::kNoun;
  if (IsVerbTag(tag)) return WordClass::kVerb;
  if (tag == Tag::kADJ) return WordClass::kAdj;
  return WordClass::kOther;
}

size_t Corpus::token_count() const {
  size_t n = 0;
  for (const Document &d : documents) n += d.tokens.size();
  return n;
}

// --- Reading -------------------------------------------------------------------

namespace {

class CorpusBuilder {
 public:
  void StartDocument(std::string id) {
    CloseSentence();
    corpus_.documents.push_back(Document{std::move(id), {}, {}});
  }

  void Add(Token token) {
    if (corpus_.documents.empty()) {
      StartDocument("doc" + std::to_string(corpus_.documents.size() + 1));
    }
    Document &doc = corpus_.documents.back();
    if (!open_) {
      doc.sentences.push_back({static_cast<int>(doc.tokens.size()),
                               static_cast<int>(doc.tokens.size())});
      open_ = true;
    }
    token.sent_idx = static_cast<int>(doc.sentences.size()) - 1;
    token.tok_idx = static_cast<int>(doc.tokens.size());
    doc.tokens.push_back(std::move(token));
    doc.sentences.back().end = static_cast<int>(doc.tokens.size());
  }

  void CloseSentence() { open_ = false; }

  Corpus Finish() { return std::move(corpus_); }

 private:
  Corpus corpus_;
  bool open_ = false;
};

bool IsDocLine(std::string_view line, std::string *id) {
  if (line.substr(0, 4) != "#DOC") return false;
  auto words = SplitWhitespace(line);
  if (words.size() != 2 || words[0] != "#DOC") return false;
  *id = words[1];
  return true;
}

void ReadVertical(std::string_view text, CorpusBuilder &builder) {
  size_t offset = 0;
  ForEachLine(text, [&](int line_no, std::string_view line) {
    size_t line_start = offset;
    offset += line.size() + 1;
    if (line_start + line.size() < text.size() && text[line_start + line.size()] == '\r') ++offset;
    std::string id;
    if (IsDocLine(line, &id)) {
      builder.StartDocument(id);
      return;
    }
    if (Trim(line).empty()) {
      builder.CloseSentence();
      return;
    }
    std::vector<std::string> cols = Split(line, '\t');
    if (cols.size() != 3 && cols.size() != 4) {
      throw ParseError("expected 3 tab-separated columns, found " +
                           std::to_string(cols.size()), line_no);
    }
    if (cols[0].empty() || cols[1].empty()) throw ParseError("empty surface or lemma", line_no);
    auto tag = ParseTag(cols[2]);
    if (!tag) throw ParseError("unknown POS tag '" + cols[2] + "'", line_no);
    Token t;
    t.surface = cols[0];
    t.lemma = cols[1];
    t.pos = *tag;
    t.char_span = {line_start, line_start + cols[0].size()};
    builder.Add(std::move(t));
  });
}

const std::set<std::string, std::less<>> &Abbreviations() {
  static const std::set<std::string, std::less<>> kAbbrev = {
      "corp.", "inc.", "ltd.", "co.", "mr.", "mrs.", "ms.", "dr.", "jr.",
      "sr.", "st.", "u.s.", "e.g.", "i.e.", "vs.", "plc."};
  return kAbbrev;
}

bool IsPunctChar(char c) {
  return c == '.' || c == ',' || c == ';' || c == ':' || c == '!' || c == '?' ||
         c == '(' || c == ')' || c == '"' || c == '\'';
}

void ReadRaw(std::string_view text, CorpusBuilder &builder) {
  size_t offset = 0;
  ForEachLine(text, [&](int, std::string_view line) {
    size_t line_start = offset;
    offset += line.size() + 1;
    if (line_start + line.size() < text.size() && text[line_start + line.size()] == '\r') ++offset;
    std::string id;
    if (IsDocLine(line, &id)) {
      builder.StartDocument(id);
      return;
    }
    if (Trim(line).empty()) {
      builder.CloseSentence();
      return;
    }
    size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      size_t end = i;
      // Peel leading and trailing punctuation off the whitespace token.
      std::vector<std::pair<size_t, size_t>> pieces;
      size_t b = start;
      while (b < end && IsPunctChar(line[b])) {
        pieces.push_back({b, b + 1});
        ++b;
      }
      size_t e = end;
      std::vector<std::pair<size_t, size_t>> trailing;
      while (e > b && IsPunctChar(line[e - 1])) {
        std::string word = ToLower(line.substr(b, e - b));
        bool abbrev = line[e - 1] == '.' &&
                      (Abbreviations().count(word) ||
                       (e - b == 2 && std::isupper(static_cast<unsigned char>(line[b]))));
        if (abbrev) break;
        trailing.push_back({e - 1, e});
        --e;
      }
      if (e > b) pieces.push_back({b, e});
      pieces.insert(pieces.end(), trailing.rbegin(), trailing.rend());
      for (const auto &[pb, pe] : pieces) {
        Token t;
        t.surface = std::string(line.substr(pb, pe - pb));
        t.lemma = ToLower(t.surface);
        t.pos = Tag::kUNK;
        t.char_span = {line_start + pb, line_start + pe};
        bool terminal = t.surface == "." || t.surface == "!" || t.surface == "?";
        builder.Add(std::move(t));
        if (terminal) builder.CloseSentence();
      }
    }
  });
}

}  // namespace

Corpus ReadCorpus(std::string_view text, CorpusFormat format) {
  CorpusBuilder builder;
  if (format == CorpusFormat::kVertical) {
    ReadVertical(text, builder);
  } else {
    ReadRaw(text, builder);
  }
  return builder.Finish();
}

std::string WriteVertical(
    const Corpus &corpus,
    const std::function<std::string(size_t doc, size_t tok)> &extra) {
  std::string out;
  for (size_t d = 0; d < corpus.documents.size(); ++d) {
    const Document &doc = corpus.documents[d];
    out += "#DOC " + doc.id + "\n";
    for (size_t s = 0; s < doc.sentences.size(); ++s) {
      if (s > 0) out += "\n";
      for (int i = doc.sentences[s].begin; i < doc.sentences[s].end; ++i) {
        const Token &t = doc.tokens[i];
        out += t.surface + "\t" + t.lemma + "\t" + std::string(TagName(t.pos));
        if (extra) out += "\t" + extra(d, static_cast<size_t>(i));
        out += "\n";
      }
    }
    out += "\n";
  }
  return out;
}

// --- Fallback tagger -----------------------------------------------------------

namespace {

using WordSet = std::set<std::string, std::less<>>;

const WordSet kDeterminers = {"the", "a", "an", "this", "that", "these", "those",
                              "every", "each", "some", "any", "no", "another"};
const WordSet kPronouns = {"he", "she", "it", "they", "we", "i", "you", "him",
                           "her", "them", "us", "me", "his", "its", "their",
                           "our", "my", "your", "who", "whom", "which"};
const WordSet kPrepositions = {"of", "in", "on", "at", "by", "for", "with", "from",
                               "to", "into", "over", "under", "after", "before",
                               "about", "as", "between", "through", "during",
                               "against", "without", "within", "since", "until"};
const WordSet kConjunctions = {"and", "or", "but", "nor", "because", "while",
                               "although", "if"};
const WordSet kBeForms = {"be", "is", "am", "are", "was", "were", "been", "being"};
const WordSet kAuxiliaries = {"has", "have", "had", "having", "do", "does", "did",
                              "will", "would", "can", "could", "may", "might",
                              "shall", "should", "must"};
const WordSet kAdverbs = {"not", "also", "very", "yesterday", "today", "soon",
                          "then", "now", "already", "still", "never", "n't"};

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Restores a stem after -ed / -ing removal.
std::string RepairStem(std::string stem) {
  size_t n = stem.size();
  if (n >= 2 && stem[n - 1] == stem[n - 2] && !IsVowel(stem[n - 1]) &&
      stem[n - 1] != 'l' && stem[n - 1] != 's' && stem[n - 1] != 'z') {
    stem.pop_back();
    return stem;
  }
  if (EndsWith(stem, "v") || EndsWith(stem, "at") || EndsWith(stem, "bl") ||
      EndsWith(stem, "iz")) {
    return stem + "e";
  }
  if (n >= 3 && n <= 4 && !IsVowel(stem[n - 3]) && IsVowel(stem[n - 2]) &&
      !IsVowel(stem[n - 1]) && stem[n - 1] != 'w' && stem[n - 1] != 'x' &&
      stem[n - 1] != 'y') {
    return stem + "e";
  }
  return stem;
}

}  // namespace

std::string Lemmatize(std::string_view surface) {
  std::string w = ToLower(surface);
  if (kBeForms.count(w)) return "be";
  if (w == "has" || w == "had" || w == "having") return "have";
  if (w == "does" || w == "did") return "do";
  if (w.size() > 4 && EndsWith(w, "ies")) return w.substr(0, w.size() - 3) + "y";
  if (w.size() > 4 && EndsWith(w, "ied")) return w.substr(0, w.size() - 3) + "y";
  if (EndsWith(w, "sses")) return w.substr(0, w.size() - 2);
  if (w.size() > 4 && (EndsWith(w, "ches") || EndsWith(w, "shes") || EndsWith(w, "xes"))) {
    return w.substr(0, w.size() - 2);
  }
  if (w.size() > 4 && EndsWith(w, "ed")) return RepairStem(w.substr(0, w.size() - 2));
  if (w.size() > 5 && EndsWith(w, "ing")) return RepairStem(w.substr(0, w.size() - 3));
  if (w.size() > 3 && EndsWith(w, "s") && !EndsWith(w, "ss") && !EndsWith(w, "us") &&
      !EndsWith(w, "is")) {
    return w.substr(0, w.size() - 1);
  }
  return w;
}

void TagRaw(Corpus &corpus) {
  for (Document &doc : corpus.documents) {
    for (const SentenceSpan &span : doc.sentences) {
      for (int i = span.begin; i < span.end; ++i) {
        Token &t = doc.tokens[i];
        std::string w = ToLower(t.surface);
        unsigned char first = static_cast<unsigned char>(t.surface[0]);
        bool after_aux = false;
        for (int k = i - 1; k >= span.begin && k >= i - 2; --k) {
          Tag p = doc.tokens[k].pos;
          if (p == Tag::kBE || (p == Tag::kVB && kAuxiliaries.count(ToLower(doc.tokens[k].surface)))) {
            after_aux = true;
          }
          if (p != Tag::kADV) break;
        }

        if (std::ispunct(first) && t.surface.size() == 1) {
          t.pos = Tag::kPUNCT;
        } else if (std::isdigit(first)) {
          t.pos = Tag::kNUM;
        } else if (kBeForms.count(w)) {
          t.pos = Tag::kBE;
        } else if (kDeterminers.count(w)) {
          t.pos = Tag::kDET;
        } else if (kPronouns.count(w)) {
          t.pos = Tag::kPRON;
        } else if (kPrepositions.count(w)) {
          t.pos = Tag::kPREP;
        } else if (kConjunctions.count(w)) {
          t.pos = Tag::kCONJ;
        } else if (kAuxiliaries.count(w)) {
          t.pos = Tag::kVB;
        } else if (kAdverbs.count(w) || (w.size() > 4 && EndsWith(w, "ly"))) {
          t.pos = Tag::kADV;
        } else if (std::isupper(first) && i > span.begin) {
          t.pos = Tag::kNNP;
        } else if (EndsWith(w, "ed") && w.size() > 4) {
          t.pos = after_aux ? Tag::kVBN : Tag::kVBD;
        } else if (EndsWith(w, "ing") && w.size() > 5) {
          t.pos = Tag::kVB;
        } else if (EndsWith(w, "ous") || EndsWith(w, "ful") || EndsWith(w, "ive") ||
                   EndsWith(w, "able") || EndsWith(w, "ible") || EndsWith(w, "al")) {
          t.pos = Tag::kADJ;
        } else {
          t.pos = Tag::kNN;
        }
        t.lemma = t.pos == Tag::kNNP ? t.surface : Lemmatize(t.surface);
        if (t.pos == Tag::kPUNCT || t.pos == Tag::kNUM) t.lemma = t.surface;
      }
    }
  }
}

// --- Chunking ------------------------------------------------------------------

std::string_view ChunkKindName(ChunkKind kind) {
  switch (kind) {
    case ChunkKind::kNP: return "NP";
    case ChunkKind::kVG: return "VG";
    case ChunkKind::kPP: return "PP";
    case ChunkKind::kO: return "O";
  }
  return "O";
}

std::vector<Chunk> ChunkSentence(std::span<const Token> sentence) {
  std::vector<Chunk> out;
  const int n = static_cast<int>(sentence.size());
  auto tag = [&](int i) { return i < n ? sentence[i].pos : Tag::kPUNCT; };
  auto doc_index = [&](int i) { return sentence[i].tok_idx; };
  auto emit = [&](ChunkKind kind, int b, int e, int head) {
    out.push_back({kind, doc_index(b), doc_index(e - 1) + 1, doc_index(head)});
  };

  int i = 0;
  while (i < n) {
    Tag t = tag(i);
    if (t == Tag::kDET || t == Tag::kPRON || t == Tag::kADJ || t == Tag::kNUM ||
        IsNounTag(t)) {
      int j = i;
      if (tag(j) == Tag::kDET || tag(j) == Tag::kPRON) ++j;
      while (tag(j) == Tag::kADJ || tag(j) == Tag::kNUM) ++j;
      int k = j;
      while (k < n && IsNounTag(tag(k))) ++k;
      if (k > j) {
        emit(ChunkKind::kNP, i, k, k - 1);
        i = k;
      } else if (t == Tag::kPRON) {
        emit(ChunkKind::kNP, i, i + 1, i);
        ++i;
      } else {
        emit(ChunkKind::kO, i, i + 1, i);
        ++i;
      }
    } else if (IsVerbTag(t)) {
      int j = i;
      int head = i;
      while (j < n) {
        if (IsVerbTag(tag(j))) {
          head = j++;
          continue;
        }
        // Adverbs stay inside the group only when a verb follows them.
        int k = j;
        while (k < n && tag(k) == Tag::kADV) ++k;
        if (k > j && k < n && IsVerbTag(tag(k))) {
          j = k;
          continue;
        }
        break;
      }
      emit(ChunkKind::kVG, i, j, head);
      i = j;
    } else if (t == Tag::kPREP) {
      emit(ChunkKind::kPP, i, i + 1, i);
      ++i;
    } else {
      emit(ChunkKind::kO, i, i + 1, i);
      ++i;
    }
  }
  return out;
}

bool IsPassive(const Chunk &vg, std::span<const Token> doc_tokens) {
  if (vg.kind != ChunkKind::kVG || doc_tokens[vg.head].pos != Tag::kVBN) return false;
  for (int i = vg.begin; i < vg.head; ++i) {
    if (doc_tokens[i].pos == Tag::kBE) return true;
  }
  return false;
}

std::vector<GrRelation> GrammaticalRelations(std::span<const Chunk> chunks,
                                             std::span<const Token> doc_tokens) {
  std::vector<GrRelation> out;
  const int n = static_cast<int>(chunks.size());
  auto is_pp_object = [&](int c) { return c > 0 && chunks[c - 1].kind == ChunkKind::kPP; };
  auto is_adverb = [&](int c) {
    return chunks[c].kind == ChunkKind::kO && doc_tokens[chunks[c].head].pos == Tag::kADV;
  };

  for (int v = 0; v < n; ++v) {
    if (chunks[v].kind != ChunkKind::kVG) continue;
    const int verb = chunks[v].head;
    const Voice voice = IsPassive(chunks[v], doc_tokens) ? Voice::kPassive : Voice::kActive;
    auto add = [&](RelationLabel label, int dep) {
      out.push_back({verb, std::move(label), dep, voice});
    };

    for (int c = v - 1; c >= 0; --c) {
      if (chunks[c].kind == ChunkKind::kVG) break;
      if (chunks[c].kind == ChunkKind::kNP && !is_pp_object(c)) {
        add({RelationType::kSubj, ""}, chunks[c].head);
        break;
      }
    }

    int c = v + 1;
    while (c < n && is_adverb(c)) ++c;
    if (c < n && chunks[c].kind == ChunkKind::kNP) {
      if (c + 1 < n && chunks[c + 1].kind == ChunkKind::kNP) {
        add({RelationType::kIobj, ""}, chunks[c].head);
        add({RelationType::kDobj, ""}, chunks[c + 1].head);
        c += 2;
      } else {
        add({RelationType::kDobj, ""}, chunks[c].head);
        c += 1;
      }
    }
    while (c < n && is_adverb(c)) ++c;
    while (c + 1 < n && chunks[c].kind == ChunkKind::kPP &&
           chunks[c + 1].kind == ChunkKind::kNP) {
      std::string prep = ToLower(doc_tokens[chunks[c].head].lemma);
      if (voice == Voice::kPassive && prep == "by") {
        add({RelationType::kAgentBy, ""}, chunks[c + 1].head);
      } else {
        add({RelationType::kPp, prep}, chunks[c + 1].head);
      }
      c += 2;
    }
  }
  return out;
}

const Chunk *DocumentAnalysis::NounPhraseHeadedBy(int sent_idx, int head) const {
  for (const Chunk &c : sentences[sent_idx].chunks) {
    if (c.kind == ChunkKind::kNP && c.head == head) return &c;
  }
  return nullptr;
}

DocumentAnalysis AnalyzeDocument(const Document &doc) {
  DocumentAnalysis out;
  out.sentences.reserve(doc.sentences.size());
  for (size_t s = 0; s < doc.sentences.size(); ++s) {
    SentenceAnalysis sa;
    sa.chunks = ChunkSentence(doc.Sentence(s));
    sa.relations = GrammaticalRelations(sa.chunks, doc.tokens);
    out.sentences.push_back(std::move(sa));
  }
  return out;
}

}  // namespace lexie
