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

#include "lexie/extract.h"

#include <map>

#include "lexie/error.h"

namespace lexie {
namespace {

bool Usable(const std::optional<SenseTag> &tag, const Ontology &ontology) {
  return tag && (tag->method == TagMethod::kUnambiguous || tag->method == TagMethod::kBayes ||
                 tag->method == TagMethod::kOspd) &&
         ontology.HasClass(tag->cls);
}

SlotFiller MakeFiller(const std::string &slot, FillerSource source, int head,
                      const Document &doc, const DocumentAnalysis &analysis,
                      const DocTags &tags) {
  SlotFiller f;
  f.slot = slot;
  f.source = source;
  f.head = head;
  const Token &t = doc.tokens[head];
  f.lemma = KeyLemma(t);
  if (tags[head]) f.cls = tags[head]->cls;
  f.begin = head;
  f.end = head + 1;
  if (const Chunk *np = analysis.NounPhraseHeadedBy(t.sent_idx, head)) {
    f.begin = np->begin;
    f.end = np->end;
  }
  for (int i = f.begin; i < f.end; ++i) {
    if (!f.text.empty()) f.text += ' ';
    f.text += doc.tokens[i].surface;
  }
  return f;
}

}  // namespace

std::string_view FillerSourceName(FillerSource source) {
  switch (source) {
    case FillerSource::kDirect: return "direct";
    case FillerSource::kSalient: return "salient";
    case FillerSource::kUnfilled: return "unfilled";
  }
  return "unfilled";
}

const SlotFiller *TemplateInstance::Filler(std::string_view slot) const {
  for (const SlotFiller &f : fillers) {
    if (f.slot == slot) return &f;
  }
  return nullptr;
}

std::optional<int> ResolveSalient(const Document &doc, const DocumentAnalysis &analysis,
                                  const DocTags &tags, const Ontology &ontology,
                                  std::string_view restriction, int position,
                                  const std::set<int> &exclude) {
  if (position <= 0 || doc.tokens.empty()) return std::nullopt;
  const int last_sent = doc.tokens[std::min<int>(position, doc.tokens.size() - 1)].sent_idx;
  for (int s = last_sent; s >= 0; --s) {
    const auto &chunks = analysis.sentences[s].chunks;
    for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) {
      if (it->kind != ChunkKind::kNP || it->head >= position) continue;
      if (exclude.count(it->head)) continue;
      const auto &tag = tags[it->head];
      if (!Usable(tag, ontology)) continue;
      if (ontology.Compatible(tag->cls, std::string(restriction))) return it->head;
    }
  }
  return std::nullopt;
}

std::vector<TemplateInstance> FillTemplates(const Document &doc,
                                            const DocumentAnalysis &analysis,
                                            const std::vector<FgMatch> &matches,
                                            const DocTags &tags, const Ontology &ontology) {
  std::vector<TemplateInstance> out;
  for (const FgMatch &m : matches) {
    const ConceptNode &node = m.realization->resolved;
    if (!node.schema) continue;
    const TemplateSchema *schema = ontology.FindSchema(*node.schema);
    if (schema == nullptr) {
      throw Error("concept " + node.id + " names unknown template " + *node.schema);
    }

    std::map<std::string, SlotFiller> by_role;
    std::set<int> bound;
    for (const RoleBinding &b : m.bindings) {
      if (b.kind == BindingKind::kHead) bound.insert(b.head);
    }
    for (const RoleBinding &b : m.bindings) {
      const ArgSpec *arg = node.FindArg(b.role);
      std::string slot = arg && arg->slot ? *arg->slot : "";
      if (b.kind == BindingKind::kHead) {
        by_role[b.role] = MakeFiller(slot, FillerSource::kDirect, b.head, doc, analysis, tags);
        continue;
      }
      std::optional<int> head;
      if (arg && arg->required) {
        head = ResolveSalient(doc, analysis, tags, ontology, arg->restriction, m.verb, bound);
      }
      if (head) {
        bound.insert(*head);
        by_role[b.role] = MakeFiller(slot, FillerSource::kSalient, *head, doc, analysis, tags);
      } else {
        SlotFiller f;
        f.slot = slot;
        by_role[b.role] = f;
      }
    }

    TemplateInstance inst;
    inst.schema = schema->name;
    for (const SlotSpec &spec : schema->slots) {
      SlotFiller filler;
      filler.slot = spec.name;
      for (const ArgSpec &arg : node.args) {
        if (arg.slot != spec.name) continue;
        auto it = by_role.find(arg.role);
        if (it != by_role.end() && it->second.filled()) filler = it->second;
        break;
      }
      if (filler.filled() && (!ontology.HasClass(filler.cls) ||
                              !ontology.Compatible(filler.cls, spec.filler_class))) {
        filler = SlotFiller{};
        filler.slot = spec.name;
      }
      inst.fillers.push_back(std::move(filler));
    }

    for (const StateAssertion &a : node.assertions) {
      FilledAssertion fa{a.predicate, {}, a.polarity, a.phase};
      for (const std::string &role : a.roles) {
        const ArgSpec *arg = node.FindArg(role);
        const SlotFiller *f = arg && arg->slot ? inst.Filler(*arg->slot) : nullptr;
        if (f == nullptr) {
          auto it = by_role.find(role);
          f = it == by_role.end() ? nullptr : &it->second;
        }
        fa.args.push_back(f && f->filled() ? std::optional<std::string>(f->lemma) : std::nullopt);
      }
      inst.assertions.push_back(std::move(fa));
    }

    if (node.instigator) {
      const ArgSpec *arg = node.FindArg(*node.instigator);
      if (arg && arg->slot) inst.instigator = *arg->slot;
    }

    inst.provenance = Provenance{doc.id,       m.sent_idx, m.verb,
                                 KeyLemma(doc.tokens[m.verb]), m.sense_id, m.concept_id,
                                 m.method,     m.passive_implicature};
    out.push_back(std::move(inst));
  }
  return out;
}

nlohmann::ordered_json InstanceJson(const TemplateInstance &instance,
                                    const nlohmann::ordered_json &params) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = instance.schema;
  ordered_json fillers = ordered_json::object();
  for (const SlotFiller &f : instance.fillers) {
    ordered_json v;
    if (f.filled()) {
      v["head"] = f.lemma;
      v["text"] = f.text;
      v["class"] = f.cls;
      v["source"] = FillerSourceName(f.source);
      v["span"] = ordered_json::array({f.begin, f.end});
    } else {
      v["head"] = nullptr;
      v["text"] = nullptr;
      v["class"] = nullptr;
      v["source"] = FillerSourceName(f.source);
      v["span"] = nullptr;
    }
    fillers[f.slot] = std::move(v);
  }
  j["fillers"] = std::move(fillers);
  ordered_json assertions = ordered_json::array();
  for (const FilledAssertion &a : instance.assertions) {
    ordered_json v;
    v["predicate"] = a.predicate;
    ordered_json args = ordered_json::array();
    for (const auto &arg : a.args) {
      if (arg) {
        args.push_back(*arg);
      } else {
        args.push_back(nullptr);
      }
    }
    v["args"] = std::move(args);
    v["polarity"] = a.polarity;
    v["phase"] = PhaseName(a.phase);
    assertions.push_back(std::move(v));
  }
  j["assertions"] = std::move(assertions);
  if (instance.instigator) {
    j["instigator"] = *instance.instigator;
  } else {
    j["instigator"] = nullptr;
  }
  const Provenance &p = instance.provenance;
  ordered_json prov;
  prov["doc"] = p.doc;
  prov["sentence"] = p.sentence;
  prov["token"] = p.token;
  prov["trigger"] = p.trigger;
  prov["sense"] = p.sense;
  prov["concept"] = p.concept_id;
  prov["method"] = TagMethodName(p.method);
  prov["passive_implicature"] = p.passive_implicature;
  prov["params"] = params;
  j["provenance"] = std::move(prov);
  return j;
}

std::string WriteOutput(const std::vector<TemplateInstance> &instances,
                        const nlohmann::ordered_json &params) {
  std::string out;
  for (const TemplateInstance &inst : instances) {
    out += InstanceJson(inst, params).dump();
    out += '\n';
  }
  return out;
}

}  // namespace lexie
