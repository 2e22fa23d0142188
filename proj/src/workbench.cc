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

#include "lexie/workbench.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "lexie/error.h"
#include "lexie/strings.h"

namespace lexie {
namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class QueryParser {
 public:
  explicit QueryParser(std::string_view text) : text_(text) {}

  PatternQuery Parse() {
    PatternQuery q;
    while (true) {
      while (pos_ < text_.size() && IsSpace(text_[pos_])) ++pos_;
      if (pos_ >= text_.size()) break;
      TokenConstraint c;
      if (text_[pos_] == '[') {
        ++pos_;
        while (true) {
          c.atoms.push_back(Atom(true));
          if (pos_ >= text_.size()) throw Error("unterminated '[' in query");
          char sep = text_[pos_++];
          if (sep == ']') break;
          if (sep != '&') throw Error(std::string("unexpected '") + sep + "' in query");
        }
      } else {
        c.atoms.push_back(Atom(false));
      }
      q.constraints.push_back(std::move(c));
    }
    if (q.constraints.empty()) throw Error("empty query");
    return q;
  }

 private:
  QueryAtom Atom(bool grouped) {
    QueryAtom atom;
    if (text_.substr(pos_).starts_with("word=/")) {
      pos_ += 6;
      std::string re;
      while (pos_ < text_.size() && text_[pos_] != '/') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') ++pos_;
        re += text_[pos_++];
      }
      if (pos_ >= text_.size()) throw Error("unterminated regex in query");
      ++pos_;
      return WordAtom(re);
    }
    size_t start = pos_;
    while (pos_ < text_.size() && !IsSpace(text_[pos_]) &&
           !(grouped && (text_[pos_] == '&' || text_[pos_] == ']')) &&
           !(!grouped && text_[pos_] == '[')) {
      ++pos_;
    }
    std::string word(text_.substr(start, pos_ - start));
    if (word.empty()) throw Error("empty constraint in query");
    size_t eq = word.find('=');
    std::string key = eq == std::string::npos ? "" : word.substr(0, eq);
    std::string value = eq == std::string::npos ? "" : word.substr(eq + 1);
    if (key == "lemma") {
      atom.kind = AtomKind::kLemma;
      atom.value = ToLower(value);
    } else if (key == "pos") {
      auto tag = ParseTag(value);
      if (!tag) throw Error("unknown tag '" + value + "' in query");
      atom.kind = AtomKind::kPos;
      atom.tag = *tag;
      atom.value = value;
    } else if (key == "class") {
      atom.kind = AtomKind::kClass;
      atom.value = ToUpper(value);
    } else if (key == "word") {
      return WordAtom(value);
    } else {
      atom.kind = AtomKind::kLiteral;
      atom.value = word;
    }
    if (atom.value.empty()) throw Error("empty value for '" + key + "' in query");
    return atom;
  }

  static QueryAtom WordAtom(const std::string &re) {
    QueryAtom atom;
    atom.kind = AtomKind::kWord;
    atom.value = re;
    try {
      atom.regex = std::regex(re, std::regex::ECMAScript);
    } catch (const std::regex_error &e) {
      throw Error("invalid regex /" + re + "/: " + e.what());
    }
    return atom;
  }

  std::string_view text_;
  size_t pos_ = 0;
};

bool ConstraintMatches(const TokenConstraint &c, const Token &token,
                       const std::optional<SenseTag> *tag, const Ontology *ontology) {
  return std::all_of(c.atoms.begin(), c.atoms.end(), [&](const QueryAtom &a) {
    return AtomMatches(a, token, tag, ontology);
  });
}

std::string Join(const std::vector<std::string> &words) {
  std::string out;
  for (const std::string &w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace

bool PatternQuery::NeedsTags() const {
  for (const TokenConstraint &c : constraints) {
    for (const QueryAtom &a : c.atoms) {
      if (a.kind == AtomKind::kClass) return true;
    }
  }
  return false;
}

PatternQuery ParseQuery(std::string_view text) { return QueryParser(text).Parse(); }

bool AtomMatches(const QueryAtom &atom, const Token &token,
                 const std::optional<SenseTag> *tag, const Ontology *ontology) {
  switch (atom.kind) {
    case AtomKind::kWord: return std::regex_match(token.surface, atom.regex);
    case AtomKind::kLemma: return KeyLemma(token) == atom.value;
    case AtomKind::kPos: return token.pos == atom.tag;
    case AtomKind::kLiteral: return token.surface == atom.value;
    case AtomKind::kClass: {
      if (tag == nullptr || !*tag) return false;
      const std::string &cls = (*tag)->cls;
      if (cls == atom.value) return true;
      return ontology != nullptr && ontology->HasClass(cls) && ontology->HasClass(atom.value) &&
             ontology->Subsumes(atom.value, cls);
    }
  }
  return false;
}

CorpusIndex BuildIndex(const Corpus &corpus, const CorpusTags *tags) {
  CorpusIndex index;
  for (size_t d = 0; d < corpus.documents.size(); ++d) {
    const Document &doc = corpus.documents[d];
    for (const Token &t : doc.tokens) {
      CorpusIndex::Posting p{static_cast<int>(d), t.tok_idx};
      index.lemma[KeyLemma(t)].push_back(p);
      index.surface[t.surface].push_back(p);
      index.pos[t.pos].push_back(p);
      if (tags != nullptr && (*tags)[d][t.tok_idx]) {
        index.cls[(*tags)[d][t.tok_idx]->cls].push_back(p);
      }
    }
  }
  return index;
}

std::vector<KwicLine> Kwic(const Corpus &corpus, const CorpusIndex &index,
                           const CorpusTags *tags, const Ontology *ontology,
                           const PatternQuery &query, int width) {
  if (query.constraints.empty()) throw Error("empty query");
  if (query.NeedsTags() && tags == nullptr) {
    throw Error("class constraints need sense tags");
  }

  // Candidate starts: the smallest posting list among the first constraint's
  // indexable atoms, or every token when only regexes are given.
  std::optional<std::vector<CorpusIndex::Posting>> candidates;
  auto offer = [&](std::vector<CorpusIndex::Posting> postings) {
    if (!candidates || postings.size() < candidates->size()) candidates = std::move(postings);
  };
  auto lookup = [](const auto &map, const auto &key) {
    auto it = map.find(key);
    return it == map.end() ? std::vector<CorpusIndex::Posting>{} : it->second;
  };
  for (const QueryAtom &a : query.constraints.front().atoms) {
    switch (a.kind) {
      case AtomKind::kLemma: offer(lookup(index.lemma, a.value)); break;
      case AtomKind::kLiteral: offer(lookup(index.surface, a.value)); break;
      case AtomKind::kPos: offer(lookup(index.pos, a.tag)); break;
      case AtomKind::kClass: {
        std::vector<CorpusIndex::Posting> merged;
        for (const auto &[cls, postings] : index.cls) {
          bool hit = cls == a.value ||
                     (ontology != nullptr && ontology->HasClass(cls) &&
                      ontology->HasClass(a.value) && ontology->Subsumes(a.value, cls));
          if (hit) merged.insert(merged.end(), postings.begin(), postings.end());
        }
        std::sort(merged.begin(), merged.end());
        offer(std::move(merged));
        break;
      }
      case AtomKind::kWord: break;
    }
  }
  if (!candidates) {
    candidates.emplace();
    for (size_t d = 0; d < corpus.documents.size(); ++d) {
      for (size_t t = 0; t < corpus.documents[d].tokens.size(); ++t) {
        candidates->emplace_back(static_cast<int>(d), static_cast<int>(t));
      }
    }
  }

  std::vector<KwicLine> out;
  const int n = static_cast<int>(query.constraints.size());
  int current_doc = -1;
  int next_free = 0;
  for (const auto &[d, start] : *candidates) {
    if (d != current_doc) {
      current_doc = d;
      next_free = 0;
    }
    if (start < next_free) continue;
    const Document &doc = corpus.documents[d];
    const SentenceSpan &sent = doc.sentences[doc.tokens[start].sent_idx];
    if (start + n > sent.end) continue;
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      const std::optional<SenseTag> *tag = tags ? &(*tags)[d][start + k] : nullptr;
      ok = ConstraintMatches(query.constraints[k], doc.tokens[start + k], tag, ontology);
    }
    if (!ok) continue;
    KwicLine line;
    line.doc = doc.id;
    line.doc_index = d;
    line.sent_idx = doc.tokens[start].sent_idx;
    line.begin = start;
    line.end = start + n;
    for (int i = std::max(0, start - width); i < start; ++i) line.left.push_back(doc.tokens[i].surface);
    for (int i = start; i < start + n; ++i) line.match.push_back(doc.tokens[i].surface);
    int stop = std::min<int>(doc.tokens.size(), start + n + width);
    for (int i = start + n; i < stop; ++i) line.right.push_back(doc.tokens[i].surface);
    out.push_back(std::move(line));
    next_free = start + n;
  }
  return out;
}

std::string FormatKwic(const std::vector<KwicLine> &lines, bool tsv) {
  std::string out;
  if (tsv) {
    for (const KwicLine &l : lines) {
      out += l.doc + "\t" + std::to_string(l.sent_idx) + "\t" + std::to_string(l.begin) + "\t" +
             Join(l.left) + "\t" + Join(l.match) + "\t" + Join(l.right) + "\n";
    }
    return out;
  }
  size_t loc_width = 0;
  size_t left_width = 0;
  for (const KwicLine &l : lines) {
    loc_width = std::max(loc_width, l.doc.size() + 1 + std::to_string(l.sent_idx).size());
    left_width = std::max(left_width, Join(l.left).size());
  }
  for (const KwicLine &l : lines) {
    std::string loc = l.doc + ":" + std::to_string(l.sent_idx);
    std::string left = Join(l.left);
    out += loc + std::string(loc_width - loc.size(), ' ') + "  ";
    out += std::string(left_width - left.size(), ' ') + left;
    out += "  [" + Join(l.match) + "]  " + Join(l.right);
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  }
  return out;
}

std::string_view ReportKindName(ReportKind kind) {
  switch (kind) {
    case ReportKind::kCollocate: return "collocate";
    case ReportKind::kPosTrigram: return "pos_trigram";
    case ReportKind::kRelation: return "relation";
  }
  return "collocate";
}

double LogLikelihoodRatio(double a, double b, double c, double d) {
  const double n = a + b + c + d;
  if (n <= 0) return 0.0;
  const double cells[4] = {a, b, c, d};
  const double rows[2] = {a + b, c + d};
  const double cols[2] = {a + c, b + d};
  double g2 = 0.0;
  for (int i = 0; i < 4; ++i) {
    double observed = cells[i];
    if (observed <= 0) continue;
    double expected = rows[i / 2] * cols[i % 2] / n;
    g2 += observed * std::log(observed / expected);
  }
  g2 *= 2.0;
  double expected_a = rows[0] * cols[0] / n;
  return a < expected_a ? -g2 : g2;
}

std::vector<PatternReportEntry> PatternReport(const Corpus &corpus, const CorpusTags *tags,
                                              const std::vector<DocumentAnalysis> &analyses,
                                              std::string_view target,
                                              const ReportParams &params) {
  const std::string key = ToLower(target);
  std::map<std::string, long> corpus_counts;
  long total = 0;
  std::map<std::string, long> window_counts;
  long window_total = 0;
  std::map<std::string, long> trigrams;
  std::map<std::string, long> relations;
  long occurrences = 0;

  for (size_t d = 0; d < corpus.documents.size(); ++d) {
    const Document &doc = corpus.documents[d];
    const int n = static_cast<int>(doc.tokens.size());
    auto is_target = [&](int i) { return KeyLemma(doc.tokens[i]) == key; };
    std::set<int> window;
    for (const Token &t : doc.tokens) {
      if (t.pos == Tag::kPUNCT) continue;
      ++corpus_counts[KeyLemma(t)];
      ++total;
      if (!is_target(t.tok_idx)) continue;
      ++occurrences;
      for (int i = std::max(0, t.tok_idx - params.window);
           i <= std::min(n - 1, t.tok_idx + params.window); ++i) {
        if (doc.tokens[i].pos != Tag::kPUNCT && !is_target(i)) window.insert(i);
      }
      const SentenceSpan &sent = doc.sentences[t.sent_idx];
      for (int start = t.tok_idx - 2; start <= t.tok_idx; ++start) {
        if (start < sent.begin || start + 3 > sent.end) continue;
        std::string value;
        for (int i = start; i < start + 3; ++i) {
          if (!value.empty()) value += ' ';
          std::string tag(TagName(doc.tokens[i].pos));
          value += is_target(i) ? "[" + tag + "]" : tag;
        }
        ++trigrams[value];
      }
    }
    for (int i : window) {
      ++window_counts[KeyLemma(doc.tokens[i])];
      ++window_total;
    }
    if (d < analyses.size()) {
      for (const SentenceAnalysis &sa : analyses[d].sentences) {
        for (const GrRelation &rel : sa.relations) {
          std::string name = RelationName(rel.relation);
          if (is_target(rel.verb)) {
            std::string cls = "?";
            if (tags != nullptr && (*tags)[d][rel.dependent]) cls = (*tags)[d][rel.dependent]->cls;
            ++relations[name + ":" + cls];
          }
          if (is_target(rel.dependent)) {
            ++relations[name + "-of:" + KeyLemma(doc.tokens[rel.verb])];
          }
        }
      }
    }
  }
  if (occurrences == 0) throw Error("target '" + std::string(target) + "' does not occur in the corpus");

  std::vector<PatternReportEntry> out;
  auto emit = [&](ReportKind kind, std::vector<PatternReportEntry> entries) {
    std::sort(entries.begin(), entries.end(), [](const auto &a, const auto &b) {
      if (a.score != b.score) return a.score > b.score;
      return a.value < b.value;
    });
    if (entries.size() > static_cast<size_t>(params.top)) entries.resize(params.top);
    for (auto &e : entries) {
      e.kind = kind;
      out.push_back(std::move(e));
    }
  };

  std::vector<PatternReportEntry> collocates;
  for (const auto &[w, a] : window_counts) {
    double b = static_cast<double>(window_total - a);
    double c = static_cast<double>(corpus_counts[w] - a);
    double dd = static_cast<double>(total - window_total) - c;
    collocates.push_back({ReportKind::kCollocate, w, a, LogLikelihoodRatio(a, b, c, dd)});
  }
  emit(ReportKind::kCollocate, std::move(collocates));

  std::vector<PatternReportEntry> tri;
  for (const auto &[v, f] : trigrams) tri.push_back({ReportKind::kPosTrigram, v, f, static_cast<double>(f)});
  emit(ReportKind::kPosTrigram, std::move(tri));

  std::vector<PatternReportEntry> rel;
  for (const auto &[v, f] : relations) rel.push_back({ReportKind::kRelation, v, f, static_cast<double>(f)});
  emit(ReportKind::kRelation, std::move(rel));
  return out;
}

std::string FormatReport(const std::vector<PatternReportEntry> &entries, bool tsv) {
  std::string out;
  if (tsv) {
    for (const auto &e : entries) {
      out += std::string(ReportKindName(e.kind)) + "\t" + e.value + "\t" +
             std::to_string(e.frequency) + "\t" + FormatWeight(e.score) + "\n";
    }
    return out;
  }
  size_t kind_w = 4;
  size_t value_w = 5;
  size_t freq_w = 4;
  for (const auto &e : entries) {
    kind_w = std::max(kind_w, ReportKindName(e.kind).size());
    value_w = std::max(value_w, e.value.size());
    freq_w = std::max(freq_w, std::to_string(e.frequency).size());
  }
  auto pad = [](std::string s, size_t w) { return s + std::string(w - s.size(), ' '); };
  auto lpad = [](std::string s, size_t w) { return std::string(w - s.size(), ' ') + s; };
  out += pad("kind", kind_w) + "  " + pad("value", value_w) + "  " + lpad("freq", freq_w) +
         "  score\n";
  for (const auto &e : entries) {
    out += pad(std::string(ReportKindName(e.kind)), kind_w) + "  " + pad(e.value, value_w) +
           "  " + lpad(std::to_string(e.frequency), freq_w) + "  " + FormatWeight(e.score) + "\n";
  }
  return out;
}

}  // namespace lexie
