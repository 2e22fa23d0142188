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

#ifndef LEXIE_DECISION_LIST_H_
#define LEXIE_DECISION_LIST_H_

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexie {

enum class FeatureKind { kWordLeft, kWordRight, kWordInWindow };

std::string_view FeatureKindName(FeatureKind kind);
std::optional<FeatureKind> ParseFeatureKind(std::string_view name);

struct Feature {
  FeatureKind kind = FeatureKind::kWordInWindow;
  std::string value;  // a lemma

  auto operator<=>(const Feature &) const = default;
};

// "word_left=court" and friends.
std::string FeatureString(const Feature &feature);
std::optional<Feature> ParseFeature(std::string_view text);

// Lemmas around a target occurrence. `left` is in text order, so the word
// immediately left of the target is left.back().
struct Context {
  std::vector<std::string> left;
  std::vector<std::string> right;
};

bool FeatureMatches(const Feature &feature, const Context &context);

// Every feature the context exhibits, sorted and de-duplicated.
std::vector<Feature> ContextFeatures(const Context &context);

struct DecisionRule {
  Feature feature;
  std::string sense;
  double score = 0.0;  // log-likelihood ratio

  bool operator==(const DecisionRule &) const = default;
};

// Rules ordered by |score| descending; the first matching rule decides.
struct DecisionList {
  std::vector<DecisionRule> rules;
  std::string default_sense;

  bool operator==(const DecisionList &) const = default;
};

// Restores the ordering invariant: |score| descending, then feature, then
// sense. Stable for exact duplicates.
void SortRules(std::vector<DecisionRule> &rules);

struct DecisionOutcome {
  std::string sense;
  std::optional<size_t> rule;  // index into the list; nullopt = default
};

DecisionOutcome ApplyDecisionList(const DecisionList &list,
                                  const Context &context);

// A training instance for the bootstrapper.
struct SenseInstance {
  Context context;
  std::string doc_id;
};

struct DecisionListParams {
  double alpha = 0.1;
  double min_score = 1.0;  // rules with a weaker log-likelihood are dropped
  int max_iters = 10;
  bool one_sense_per_discourse = false;
};

// Seed-driven bootstrap. Seeds map a sense to collocate lemmas; an instance
// is seed-labelled when its window contains collocates of exactly one sense.
// Throws Error when no instance matches a seed.
DecisionList LearnDecisionList(const std::vector<SenseInstance> &instances,
                               const std::map<std::string, std::vector<std::string>> &seeds,
                               const DecisionListParams &params);

// Labels assigned by the final list during training, exposed for tests:
// nullopt where no rule fires.
std::vector<std::optional<std::string>> LabelInstances(
    const DecisionList &list, const std::vector<SenseInstance> &instances);

}  // namespace lexie

#endif  // LEXIE_DECISION_LIST_H_
