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

// Constructed two-sense corpora where each sense has its own collocates.
#ifndef LEXIE_TESTS_DL_CORPUS_H_
#define LEXIE_TESTS_DL_CORPUS_H_

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lexie/decision_list.h"

namespace lexie::testing {

using Seeds = std::map<std::string, std::vector<std::string>>;

struct DlCorpus {
  std::vector<SenseInstance> instances;
  std::vector<std::string> truth;
  std::vector<std::vector<std::string>> collocates;  // per sense
  std::vector<std::string> senses;
};

struct DlShape {
  int collocates_per_sense = 6;
  int collocates_per_instance = 2;
  int noise_vocab = 20;
  int noise_per_instance = 6;
  int docs = 25;
};

inline DlCorpus MakeDlCorpus(std::mt19937 &rng, int n, const DlShape &shape = {}) {
  DlCorpus out;
  out.senses = {"s1", "s2"};
  for (int s = 0; s < 2; ++s) {
    std::vector<std::string> words;
    for (int k = 0; k < shape.collocates_per_sense; ++k) {
      words.push_back(std::string(s == 0 ? "alpha" : "beta") + std::to_string(k));
    }
    out.collocates.push_back(words);
  }
  for (int i = 0; i < n; ++i) {
    int s = std::uniform_int_distribution<int>(0, 1)(rng);
    std::vector<std::string> words;
    std::vector<std::string> pool = out.collocates[s];
    std::shuffle(pool.begin(), pool.end(), rng);
    words.insert(words.end(), pool.begin(), pool.begin() + shape.collocates_per_instance);
    std::uniform_int_distribution<int> noise(0, shape.noise_vocab - 1);
    for (int k = 0; k < shape.noise_per_instance; ++k) words.push_back("n" + std::to_string(noise(rng)));
    std::shuffle(words.begin(), words.end(), rng);
    size_t split = std::uniform_int_distribution<size_t>(0, words.size())(rng);
    SenseInstance inst;
    inst.context.left.assign(words.begin(), words.begin() + split);
    inst.context.right.assign(words.begin() + split, words.end());
    inst.doc_id = "d" + std::to_string(std::uniform_int_distribution<int>(0, shape.docs - 1)(rng));
    out.instances.push_back(std::move(inst));
    out.truth.push_back(out.senses[s]);
  }
  return out;
}

// The list a learner with no iterations should produce: seed labels, then
// one rule per seed collocate scored on those labels.
inline DecisionList SeedOnlyOracle(const std::vector<SenseInstance> &instances, const Seeds &seeds,
                                   double alpha) {
  auto has = [&](size_t i, const std::string &w) {
    const Context &c = instances[i].context;
    return std::count(c.left.begin(), c.left.end(), w) + std::count(c.right.begin(), c.right.end(), w) > 0;
  };
  std::vector<std::string> label(instances.size());
  std::map<std::string, int> freq;
  for (size_t i = 0; i < instances.size(); ++i) {
    std::string only;
    int senses = 0;
    for (const auto &[sense, words] : seeds) {
      bool hit = false;
      for (const auto &w : words) hit |= has(i, w);
      if (hit) {
        only = sense;
        ++senses;
      }
    }
    if (senses == 1) {
      label[i] = only;
      ++freq[only];
    }
  }
  DecisionList list;
  for (const auto &[sense, words] : seeds) {
    for (const auto &w : words) {
      double with = 0, without = 0;
      for (size_t i = 0; i < label.size(); ++i) {
        if (label[i].empty() || !has(i, w)) continue;
        (label[i] == sense ? with : without) += 1;
      }
      list.rules.push_back(DecisionRule{Feature{FeatureKind::kWordInWindow, w}, sense,
                                        std::log((with + alpha) / (without + alpha))});
    }
  }
  SortRules(list.rules);
  int best = -1;
  for (const auto &[sense, n] : freq) {
    if (n > best) {
      best = n;
      list.default_sense = sense;
    }
  }
  return list;
}

}  // namespace lexie::testing

#endif  // LEXIE_TESTS_DL_CORPUS_H_
