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

// Command-line entry point.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lexie/bg_lexicon.h"
#include "lexie/error.h"
#include "lexie/extract.h"
#include "lexie/fg_lexicon.h"
#include "lexie/ontology.h"
#include "lexie/pipeline.h"
#include "lexie/strings.h"
#include "lexie/textpipe.h"
#include "lexie/tuner.h"
#include "lexie/workbench.h"
#include "lexie/wsd.h"

namespace {

using namespace lexie;

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitUsage = 2;

// A failure tied to an input file.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string &path, const char *what) {
  if (path.empty()) throw FileError(std::string("missing --") + what);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path + ": cannot read " + what + " file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs a loader and prefixes its errors with the file path.
template <typename Fn>
auto Load(const std::string &path, Fn &&fn) {
  try {
    return fn();
  } catch (const ParseError &e) {
    std::string where = path + ":" + std::to_string(e.line());
    if (e.column() > 0) where += ":" + std::to_string(e.column());
    throw FileError(where + ": " + e.detail());
  } catch (const Error &e) {
    throw FileError(path + ": " + e.what());
  }
}

void WriteOutput(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError(path + ": cannot write output file");
  out << text;
}

std::string CorpusId(const std::string &path, const std::string &text) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return std::filesystem::path(path).filename().string() + "@fnv1a:" + hex;
}

struct Inputs {
  Ontology ontology;
  CollapseMap map;
  BgLexicon bg;
};

Ontology LoadOntologyFile(const RunConfig &c) {
  std::string text = ReadFile(c.ontology, "ontology");
  return Load(c.ontology, [&] { return LoadOntology(text); });
}

// The collapsed background lexicon, or the tuned view when --tuned is given.
BgLexicon LoadBackground(const RunConfig &c, const Ontology &ontology) {
  std::string map_text = ReadFile(c.collapse, "collapse");
  CollapseMap map = Load(c.collapse, [&] { return LoadCollapseMap(map_text, ontology); });
  if (!c.tuned.empty()) {
    std::string text = ReadFile(c.tuned, "tuned");
    return ApplyTuning(Load(c.tuned, [&] { return LoadTuned(text, ontology, map); }));
  }
  std::string text = ReadFile(c.bg, "bg");
  BgLexicon raw = Load(c.bg, [&] { return LoadBgLexicon(text, ontology); });
  return Load(c.collapse, [&] { return Collapse(raw, map, ontology); });
}

FgLexicon LoadForeground(const RunConfig &c) {
  std::string text = ReadFile(c.fg, "fg");
  return Load(c.fg, [&] { return ResolveInheritance(ParseFgLexicon(text)); });
}

Corpus LoadCorpusFile(const RunConfig &c, std::string *text_out = nullptr) {
  std::string text = ReadFile(c.corpus, "corpus");
  Corpus corpus = Load(c.corpus, [&] {
    Corpus parsed = ReadCorpus(text, c.raw ? CorpusFormat::kRaw : CorpusFormat::kVertical);
    if (c.raw) TagRaw(parsed);
    return parsed;
  });
  if (text_out != nullptr) *text_out = std::move(text);
  return corpus;
}

void PrintMatchDiagnostics(const Corpus &corpus, const PipelineResult &result) {
  for (size_t d = 0; d < result.documents.size(); ++d) {
    for (const FgDiagnostic &diag : result.documents[d].match.diagnostics) {
      std::cerr << "warning: " << corpus.documents[d].id << " sentence " << diag.sent_idx
                << ": " << diag.message << "\n";
    }
  }
}

int RunValidate(const RunConfig &c) {
  Ontology ontology = LoadOntologyFile(c);
  int errors = 0;
  if (!c.fg.empty()) {
    FgLexicon fg = LoadForeground(c);
    for (const Diagnostic &d : Validate(fg, ontology)) {
      std::cout << DiagnosticString(d, c.fg) << "\n";
      if (d.severity == Severity::kError) ++errors;
    }
  }
  if (!c.bg.empty() || !c.tuned.empty()) {
    BgLexicon bg = LoadBackground(c, ontology);
    std::cout << "background: " << bg.entries().size() << " entries, " << bg.sense_count()
              << " coarse senses\n";
  }
  std::cout << (errors == 0 ? "ok" : std::to_string(errors) + " error(s)") << "\n";
  return errors == 0 ? kExitOk : kExitDiagnostics;
}

int RunTune(const RunConfig &c) {
  Ontology ontology = LoadOntologyFile(c);
  BgLexicon bg = LoadBackground(c, ontology);
  std::string text;
  Corpus corpus = LoadCorpusFile(c, &text);
  TuneParams p{c.min_occurrences, c.window, c.alpha, c.top_k, c.ospd};
  TunedLexicon tuned = Load(c.corpus, [&] { return Tune(bg, corpus, p, CorpusId(c.corpus, text), c.jobs); });
  WriteOutput(c.output, SerializeTuned(tuned));
  return kExitOk;
}

int RunWsd(const RunConfig &c) {
  Ontology ontology = LoadOntologyFile(c);
  BgLexicon bg = LoadBackground(c, ontology);
  Corpus corpus = LoadCorpusFile(c);
  CorpusTags tags;
  if (!c.fg.empty()) {
    FgLexicon fg = LoadForeground(c);
    PipelineResult result =
        Load(c.corpus, [&] { return RunPipeline(corpus, ontology, fg, bg, OptionsFrom(c), c.jobs); });
    PrintMatchDiagnostics(corpus, result);
    for (DocumentResult &d : result.documents) tags.push_back(std::move(d.tags));
  } else {
    BayesModel model = Load(c.corpus, [&] { return TrainBayes(corpus, bg, {c.window, c.alpha}, c.jobs); });
    tags = DisambiguateBackground(model, corpus, bg, c.jobs);
    if (c.ospd) {
      for (size_t d = 0; d < corpus.documents.size(); ++d) ApplyOspd(corpus.documents[d], tags[d], bg);
    }
  }
  WriteOutput(c.output, WriteVertical(corpus, [&](size_t d, size_t t) {
                return TagColumn(tags[d][t]);
              }));
  return kExitOk;
}

int RunExtract(const RunConfig &c) {
  Ontology ontology = LoadOntologyFile(c);
  FgLexicon fg = LoadForeground(c);
  int errors = 0;
  for (const Diagnostic &d : Validate(fg, ontology)) {
    if (d.severity != Severity::kError) continue;
    std::cerr << DiagnosticString(d, c.fg) << "\n";
    ++errors;
  }
  if (errors > 0) return kExitDiagnostics;
  BgLexicon bg = LoadBackground(c, ontology);
  Corpus corpus = LoadCorpusFile(c);
  PipelineResult result =
      Load(c.corpus, [&] { return RunPipeline(corpus, ontology, fg, bg, OptionsFrom(c), c.jobs); });
  PrintMatchDiagnostics(corpus, result);
  std::vector<TemplateInstance> all;
  for (DocumentResult &d : result.documents) {
    for (TemplateInstance &inst : d.instances) all.push_back(std::move(inst));
  }
  WriteOutput(c.output, lexie::WriteOutput(all, ParamsJson(c)));
  return kExitOk;
}

// Tags for the workbench, computed only when a lexicon is configured.
std::optional<CorpusTags> WorkbenchTags(const RunConfig &c, const Corpus &corpus,
                                        const Ontology *ontology) {
  if (ontology == nullptr || (c.bg.empty() && c.tuned.empty())) return std::nullopt;
  BgLexicon bg = LoadBackground(c, *ontology);
  BayesModel model = Load(c.corpus, [&] { return TrainBayes(corpus, bg, {c.window, c.alpha}, c.jobs); });
  CorpusTags tags = DisambiguateBackground(model, corpus, bg, c.jobs);
  if (c.ospd) {
    for (size_t d = 0; d < corpus.documents.size(); ++d) ApplyOspd(corpus.documents[d], tags[d], bg);
  }
  return tags;
}

int RunKwic(const RunConfig &c, const std::string &query_text, int width, bool tsv) {
  PatternQuery query = Load("--query", [&] { return ParseQuery(query_text); });
  Corpus corpus = LoadCorpusFile(c);
  std::optional<Ontology> ontology;
  if (!c.ontology.empty()) ontology = LoadOntologyFile(c);
  std::optional<CorpusTags> tags = WorkbenchTags(c, corpus, ontology ? &*ontology : nullptr);
  if (query.NeedsTags() && !tags) {
    throw FileError("--query: class constraints need --ontology, --collapse and --bg or --tuned");
  }
  CorpusIndex index = BuildIndex(corpus, tags ? &*tags : nullptr);
  auto lines = Kwic(corpus, index, tags ? &*tags : nullptr, ontology ? &*ontology : nullptr,
                    query, width);
  WriteOutput(c.output, FormatKwic(lines, tsv));
  return kExitOk;
}

int RunPatterns(const RunConfig &c, const std::string &target, int width, int top, bool tsv) {
  Corpus corpus = LoadCorpusFile(c);
  std::optional<Ontology> ontology;
  if (!c.ontology.empty()) ontology = LoadOntologyFile(c);
  std::optional<CorpusTags> tags = WorkbenchTags(c, corpus, ontology ? &*ontology : nullptr);
  std::vector<DocumentAnalysis> analyses;
  for (const Document &doc : corpus.documents) analyses.push_back(AnalyzeDocument(doc));
  auto entries = Load("--target", [&] {
    return PatternReport(corpus, tags ? &*tags : nullptr, analyses, target, {width, top});
  });
  WriteOutput(c.output, FormatReport(entries, tsv));
  return kExitOk;
}

// Applies a `--config` file before flag parsing so flags override it.
void PreloadConfig(int argc, char **argv, RunConfig &config) {
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    std::string path;
    if (arg == "--config" && i + 1 < argc) {
      path = argv[i + 1];
    } else if (arg.starts_with("--config=")) {
      path = arg.substr(9);
    } else {
      continue;
    }
    std::string text = ReadFile(path, "config");
    Load(path, [&] {
      ApplyConfigText(text, config);
      return 0;
    });
  }
}

}  // namespace

int main(int argc, char **argv) {
  RunConfig config;
  std::string query;
  std::string target;
  std::string order = "bg-first";
  int width = 5;
  int top = 10;
  bool tsv = false;

  try {
    PreloadConfig(argc, argv, config);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  order = std::string(PipelineOrderName(config.order));

  CLI::App app{"lexie: two-tier lexicon information extraction"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto paths = [&](CLI::App *sub) {
    sub->add_option("--config", "key = value file applied before flags");
    sub->add_option("--ontology", config.ontology, "Ontology file");
    sub->add_option("--collapse", config.collapse, "Collapse map file");
    sub->add_option("--bg", config.bg, "Background lexicon file");
    sub->add_option("--tuned", config.tuned, "Tuned lexicon file (replaces --bg)");
    sub->add_option("--corpus", config.corpus, "Corpus file");
    sub->add_option("--output,-o", config.output, "Output path (default standard output)");
    sub->add_flag("--raw", config.raw, "Corpus is raw text; tag it with the fallback tagger");
    sub->add_option("--jobs,-j", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--window", config.window, "Context window, tokens each side")
        ->check(CLI::PositiveNumber);
    sub->add_option("--alpha", config.alpha, "Smoothing constant")->check(CLI::PositiveNumber);
    sub->add_flag("--ospd,!--no-ospd", config.ospd, "One sense per discourse filter");
  };
  auto matching = [&](CLI::App *sub) {
    sub->add_option("--fg", config.fg, "Foreground lexicon file");
    sub->add_flag("--passive-implicature,!--no-passive-implicature", config.passive_implicature,
                  "Let a passive leave the subject-mapped role unfilled");
    sub->add_flag("--implicature-alone,!--no-implicature-alone", config.implicature_alone,
                  "Match a passive even when no role is filled");
    sub->add_option("--order", order, "Pipeline order")
        ->check(CLI::IsMember({"bg-first", "fg-first"}));
  };

  CLI::App *validate = app.add_subcommand("validate", "Check ontology and lexicons");
  paths(validate);
  matching(validate);

  CLI::App *tune = app.add_subcommand("tune", "Write a tuned background lexicon");
  paths(tune);
  tune->add_option("--min-occurrences", config.min_occurrences,
                   "Occurrences a lemma needs before senses can be ejected")
      ->check(CLI::PositiveNumber);
  tune->add_option("--top-k", config.top_k, "Discriminators per sense")->check(CLI::PositiveNumber);

  CLI::App *wsd = app.add_subcommand("wsd", "Write the sense-tagged corpus");
  paths(wsd);
  matching(wsd);

  CLI::App *extract = app.add_subcommand("extract", "Extract templates as JSON Lines");
  paths(extract);
  matching(extract);

  CLI::App *kwic = app.add_subcommand("kwic", "Keyword-in-context concordance");
  paths(kwic);
  kwic->add_option("--query,-q", query, "Pattern query")->required();
  kwic->add_option("--width", width, "Context tokens each side")->check(CLI::NonNegativeNumber);
  kwic->add_flag("--tsv", tsv, "Tab-separated output");

  CLI::App *patterns = app.add_subcommand("patterns", "Pattern report for a target lemma");
  paths(patterns);
  patterns->add_option("--target,-t", target, "Target lemma")->required();
  patterns->add_option("--width", width, "Collocate window, tokens each side")
      ->check(CLI::PositiveNumber);
  patterns->add_option("--top", top, "Entries per kind")->check(CLI::PositiveNumber);
  patterns->add_flag("--tsv", tsv, "Tab-separated output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.order = order == "fg-first" ? PipelineOrder::kForegroundFirst
                                     : PipelineOrder::kBackgroundFirst;

  try {
    config.Check();
    if (*validate) return RunValidate(config);
    if (*tune) return RunTune(config);
    if (*wsd) return RunWsd(config);
    if (*extract) return RunExtract(config);
    if (*kwic) return RunKwic(config, query, width, tsv);
    if (*patterns) return RunPatterns(config, target, width, top, tsv);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
