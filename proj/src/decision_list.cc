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

#include "lexie/decision_list.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "lexie/error.h"

namespace lexie {

std::string_view FeatureKindName(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kWordLeft: return "word_left";
    case FeatureKind::kWordRight: return "word_right";
    case FeatureKind::kWordInWindow: return "word_in_window";
  }
  return "word_in_window";
}

std::optional<FeatureKind> ParseFeatureKind(std::string_view name) {
  if (name == "word_left") return FeatureKind::kWordLeft;
  if (name == "word_right") return FeatureKind::kWordRight;
  if (name == "word_in_window") return FeatureKind::kWordInWindow;
  return std::nullopt;
}

std::string FeatureString(const Feature &feature) {
  return std::string(FeatureKindName(feature.kind)) + "=" + feature.value;
}

std::optional<Feature> ParseFeature(std::string_view text) {
  size_t eq = text.find('=');
  if (eq == std::string_view::npos || eq + 1 == text.size()) return std::nullopt;
  auto kind = ParseFeatureKind(text.substr(0, eq));
  if (!kind) return std::nullopt;
  return Feature{*kind, std::string(text.substr(eq + 1))};
}

bool FeatureMatches(const Feature &feature, const Context &context) {
  switch (feature.kind) {
    case FeatureKind::kWordLeft:
      return !context.left.empty() && context.left.back() == feature.value;
    case FeatureKind::kWordRight:
      return !context.right.empty() && context.right.front() == feature.value;
    case FeatureKind::kWordInWindow:
      return std::find(context.left.begin(), context.left.end(), feature.value) !=
                 context.left.end() ||
             std::find(context.right.begin(), context.right.end(), feature.value) !=
                 context.right.end();
  }
  return false;
}

std::vector<Feature> ContextFeatures(const Context &context) {
  std::vector<Feature> out;
  if (!context.left.empty()) out.push_back({FeatureKind::kWordLeft, context.left.back()});
  if (!context.right.empty()) out.push_back({FeatureKind::kWordRight, context.right.front()});
  for (const auto &w : context.left) out.push_back({FeatureKind::kWordInWindow, w});
  for (const auto &w : context.right) out.push_back({FeatureKind::kWordInWindow, w});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void SortRules(std::vector<DecisionRule> &rules) {
  std::stable_sort(rules.begin(), rules.end(),
                   [](const DecisionRule &a, const DecisionRule &b) {
                     double sa = std::fabs(a.score), sb = std::fabs(b.score);
                     if (sa != sb) return sa > sb;
                     if (a.feature != b.feature) return a.feature < b.feature;
                     return a.sense < b.sense;
                   });
}

DecisionOutcome ApplyDecisionList(const DecisionList &list,
                                  const Context &context) {
  for (size_t i = 0; i < list.rules.size(); ++i) {
    if (FeatureMatches(list.rules[i].feature, context)) {
      return {list.rules[i].sense, i};
    }
  }
  return {list.default_sense, std::nullopt};
}

namespace {

using Labels = std::vector<std::optional<std::string>>;
using FeatureCounts = std::map<Feature, std::map<std::string, int>>;

FeatureCounts CountFeatures(const std::vector<SenseInstance> &instances,
                            const Labels &labels) {
  FeatureCounts counts;
  for (size_t i = 0; i < instances.size(); ++i) {
    if (!labels[i]) continue;
    for (const Feature &f : ContextFeatures(instances[i].context)) {
      ++counts[f][*labels[i]];
    }
  }
  return counts;
}

double RuleScore(const std::map<std::string, int> &by_sense,
                 const std::string &sense, double alpha) {
  int with = 0, total = 0;
  for (const auto &[s, n] : by_sense) {
    total += n;
    if (s == sense) with = n;
  }
  return std::log((with + alpha) / (total - with + alpha));
}

std::string MajorityLabel(const Labels &labels) {
  std::map<std::string, int> freq;
  for (const auto &l : labels) {
    if (l) ++freq[*l];
  }
  std::string best;
  int best_n = -1;
  for (const auto &[sense, n] : freq) {  // map order gives the tie-break
    if (n > best_n) {
      best = sense;
      best_n = n;
    }
  }
  return best;
}

std::vector<DecisionRule> SeedRules(
    const std::map<std::string, std::vector<std::string>> &seeds,
    const FeatureCounts &counts, double alpha) {
  std::vector<DecisionRule> rules;
  static const std::map<std::string, int> kEmpty;
  for (const auto &[sense, collocates] : seeds) {
    for (const auto &lemma : collocates) {
      Feature f{FeatureKind::kWordInWindow, lemma};
      auto it = counts.find(f);
      const auto &by_sense = it == counts.end() ? kEmpty : it->second;
      rules.push_back({f, sense, RuleScore(by_sense, sense, alpha)});
    }
  }
  return rules;
}

DecisionList BuildList(const std::vector<SenseInstance> &instances,
                       const Labels &labels,
                       const std::map<std::string, std::vector<std::string>> &seeds,
                       const DecisionListParams &params, bool seeds_only) {
  FeatureCounts counts = CountFeatures(instances, labels);
  DecisionList list;
  list.rules = SeedRules(seeds, counts, params.alpha);
  if (!seeds_only) {
    std::set<Feature> seeded;
    for (const auto &r : list.rules) seeded.insert(r.feature);
    for (const auto &[feature, by_sense] : counts) {
      if (seeded.count(feature)) continue;
      std::string best;
      double best_score = -INFINITY;
      for (const auto &[sense, n] : by_sense) {
        double score = RuleScore(by_sense, sense, params.alpha);
        if (score > best_score) {
          best = sense;
          best_score = score;
        }
      }
      if (best_score >= params.min_score) {
        list.rules.push_back({feature, best, best_score});
      }
    }
  }
  SortRules(list.rules);
  list.default_sense = MajorityLabel(labels);
  return list;
}

void ApplyDiscourseMajority(const std::vector<SenseInstance> &instances,
                            Labels &labels) {
  std::map<std::string, std::map<std::string, int>> by_doc;
  std::map<std::string, int> labelled;
  for (size_t i = 0; i < instances.size(); ++i) {
    if (!labels[i]) continue;
    ++by_doc[instances[i].doc_id][*labels[i]];
    ++labelled[instances[i].doc_id];
  }
  for (size_t i = 0; i < instances.size(); ++i) {
    auto it = by_doc.find(instances[i].doc_id);
    if (it == by_doc.end()) continue;
    int n = labelled[instances[i].doc_id];
    for (const auto &[sense, c] : it->second) {
      if (2 * c > n) labels[i] = sense;
    }
  }
}

}  // namespace

std::vector<std::optional<std::string>> LabelInstances(
    const DecisionList &list, const std::vector<SenseInstance> &instances) {
  Labels labels(instances.size());
  for (size_t i = 0; i < instances.size(); ++i) {
    for (const DecisionRule &rule : list.rules) {
      if (FeatureMatches(rule.feature, instances[i].context)) {
        labels[i] = rule.sense;
        break;
      }
    }
  }
  return labels;
}

DecisionList LearnDecisionList(
    const std::vector<SenseInstance> &instances,
    const std::map<std::string, std::vector<std::string>> &seeds,
    const DecisionListParams &params) {
  Labels labels(instances.size());
  bool any = false;
  for (size_t i = 0; i < instances.size(); ++i) {
    std::set<std::string> hit;
    for (const auto &[sense, collocates] : seeds) {
      for (const auto &lemma : collocates) {
        if (FeatureMatches({FeatureKind::kWordInWindow, lemma}, instances[i].context)) {
          hit.insert(sense);
        }
      }
    }
    if (hit.size() == 1) {
      labels[i] = *hit.begin();
      any = true;
    }
  }
  if (!any) throw Error("no instance matches any seed collocation");
  if (params.one_sense_per_discourse) ApplyDiscourseMajority(instances, labels);

  DecisionList list = BuildList(instances, labels, seeds, params, true);
  for (int iter = 0; iter < params.max_iters; ++iter) {
    list = BuildList(instances, labels, seeds, params, false);
    Labels next = LabelInstances(list, instances);
    if (params.one_sense_per_discourse) ApplyDiscourseMajority(instances, next);
    if (next == labels) break;
    labels = std::move(next);
    if (iter + 1 == params.max_iters) {
      list = BuildList(instances, labels, seeds, params, false);
    }
  }
  return list;
}

}  // namespace lexie
