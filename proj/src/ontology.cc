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

#include "lexie/ontology.h"

#include <algorithm>
#include <set>

#include "lexie/error.h"
#include "lexie/strings.h"

namespace lexie {

std::string_view CategoryName(LexicalCategory category) {
  switch (category) {
    case LexicalCategory::kNoun: return "noun";
    case LexicalCategory::kVerb: return "verb";
    case LexicalCategory::kAny: break;
  }
  return "any";
}

const SlotSpec *TemplateSchema::FindSlot(std::string_view slot) const {
  for (const SlotSpec &s : slots) {
    if (s.name == slot) return &s;
  }
  return nullptr;
}

Ontology::Ontology(std::vector<SemClass> classes,
                   std::vector<TemplateSchema> schemas)
    : classes_(std::move(classes)), schemas_(std::move(schemas)) {
  for (size_t i = 0; i < classes_.size(); ++i) {
    if (!index_.emplace(classes_[i].id, i).second) {
      throw ParseError("duplicate class " + classes_[i].id, 0);
    }
  }
  parent_index_.assign(classes_.size(), -1);
  for (size_t i = 0; i < classes_.size(); ++i) {
    const auto &parent = classes_[i].parent;
    if (!parent) continue;
    auto it = index_.find(*parent);
    if (it == index_.end()) {
      throw ParseError("class " + classes_[i].id + " has unknown parent " +
                           *parent, 0);
    }
    parent_index_[i] = static_cast<int>(it->second);
  }

  // Depths by iterative descent; a node still unresolved after the walk is on
  // a cycle.
  depth_.assign(classes_.size(), -1);
  for (size_t i = 0; i < classes_.size(); ++i) {
    std::vector<size_t> path;
    std::vector<bool> on_path(classes_.size(), false);
    size_t cur = i;
    while (depth_[cur] < 0) {
      if (on_path[cur]) {
        auto start = std::find(path.begin(), path.end(), cur);
        std::vector<std::string> ids;
        for (auto p = start; p != path.end(); ++p) ids.push_back(classes_[*p].id);
        std::sort(ids.begin(), ids.end());
        std::string names;
        for (const auto &id : ids) names += (names.empty() ? "" : ", ") + id;
        throw ParseError("cycle in class hierarchy: {" + names + "}", 0);
      }
      on_path[cur] = true;
      path.push_back(cur);
      if (parent_index_[cur] < 0) {
        depth_[cur] = 0;
        path.pop_back();
        break;
      }
      cur = static_cast<size_t>(parent_index_[cur]);
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      depth_[*it] = depth_[static_cast<size_t>(parent_index_[*it])] + 1;
    }
  }

  std::set<std::string> schema_names;
  for (const TemplateSchema &schema : schemas_) {
    if (!schema_names.insert(schema.name).second) {
      throw ParseError("duplicate template " + schema.name, 0);
    }
    std::set<std::string> slot_names;
    for (const SlotSpec &slot : schema.slots) {
      if (!slot_names.insert(slot.name).second) {
        throw ParseError("duplicate slot " + slot.name + " in template " +
                             schema.name, 0);
      }
      if (!HasClass(slot.filler_class)) {
        throw ParseError("slot " + schema.name + "." + slot.name +
                             " has unknown class " + slot.filler_class, 0);
      }
    }
  }
}

bool Ontology::HasClass(std::string_view id) const {
  return index_.find(id) != index_.end();
}

size_t Ontology::IndexOf(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error("unknown class " + std::string(id));
  return it->second;
}

const SemClass &Ontology::Class(std::string_view id) const {
  return classes_[IndexOf(id)];
}

const TemplateSchema *Ontology::FindSchema(std::string_view name) const {
  for (const TemplateSchema &schema : schemas_) {
    if (schema.name == name) return &schema;
  }
  return nullptr;
}

std::vector<std::string> Ontology::Ancestors(std::string_view id) const {
  std::vector<std::string> out;
  for (int cur = static_cast<int>(IndexOf(id)); cur >= 0;
       cur = parent_index_[cur]) {
    out.push_back(classes_[cur].id);
  }
  return out;
}

bool Ontology::Subsumes(std::string_view ancestor,
                        std::string_view descendant) const {
  int a = static_cast<int>(IndexOf(ancestor));
  int d = static_cast<int>(IndexOf(descendant));
  // Climb only as far as the ancestor's depth.
  while (d >= 0 && depth_[d] > depth_[a]) d = parent_index_[d];
  return d == a;
}

bool Ontology::Compatible(std::string_view a, std::string_view b) const {
  return Subsumes(a, b) || Subsumes(b, a);
}

namespace {

[[noreturn]] void Fail(const std::string &message, int line) {
  throw ParseError(message, line);
}

}  // namespace

Ontology LoadOntology(std::string_view text) {
  std::vector<SemClass> classes;
  std::vector<TemplateSchema> schemas;
  std::map<std::string, int> class_lines;
  TemplateSchema *current = nullptr;

  // Schemas are collected first and slot pointers fixed up afterwards, so
  // store slot line numbers by (schema, slot) index.
  std::vector<std::vector<int>> slot_lines;

  ForEachLine(text, [&](int line_no, std::string_view raw) {
    std::string_view line = StripComment(raw);
    if (Trim(line).empty()) return;
    bool indented = Indentation(line) > 0;
    std::vector<std::string> words = SplitWhitespace(line);
    const std::string &head = words[0];

    if (indented) {
      if (current == nullptr) Fail("indented line outside a template", line_no);
      if (head != "slot") Fail("expected 'slot', got '" + head + "'", line_no);
      // slot <name> : <CLASS> [required] [many]; ':' may be glued.
      std::string rest;
      for (size_t i = 1; i < words.size(); ++i) rest += words[i] + " ";
      size_t colon = rest.find(':');
      if (colon == std::string::npos) Fail("slot needs ': <CLASS>'", line_no);
      std::vector<std::string> name = SplitWhitespace(rest.substr(0, colon));
      std::vector<std::string> tail = SplitWhitespace(rest.substr(colon + 1));
      if (name.size() != 1 || tail.empty()) Fail("malformed slot line", line_no);
      SlotSpec slot;
      slot.name = name[0];
      slot.filler_class = ToUpper(tail[0]);
      for (size_t i = 1; i < tail.size(); ++i) {
        if (tail[i] == "required") {
          slot.required = true;
        } else if (tail[i] == "many") {
          slot.multiplicity = Multiplicity::kMany;
        } else {
          Fail("unknown slot flag '" + tail[i] + "'", line_no);
        }
      }
      if (current->FindSlot(slot.name) != nullptr) {
        Fail("duplicate slot " + slot.name, line_no);
      }
      current->slots.push_back(std::move(slot));
      slot_lines.back().push_back(line_no);
      return;
    }

    if (head == "class") {
      current = nullptr;
      if (words.size() < 2) Fail("class needs an id", line_no);
      SemClass cls;
      cls.id = ToUpper(words[1]);
      size_t i = 2;
      while (i < words.size()) {
        if (words[i] == "isa" && i + 1 < words.size() && !cls.parent) {
          cls.parent = ToUpper(words[i + 1]);
          i += 2;
        } else if (words[i] == "cat" && i + 1 < words.size()) {
          if (words[i + 1] == "noun") {
            cls.category = LexicalCategory::kNoun;
          } else if (words[i + 1] == "verb") {
            cls.category = LexicalCategory::kVerb;
          } else {
            Fail("unknown category '" + words[i + 1] + "'", line_no);
          }
          i += 2;
        } else {
          Fail("unexpected '" + words[i] + "' in class line", line_no);
        }
      }
      if (!class_lines.emplace(cls.id, line_no).second) {
        Fail("duplicate class " + cls.id, line_no);
      }
      classes.push_back(std::move(cls));
    } else if (head == "template") {
      if (words.size() != 2) Fail("template needs exactly one name", line_no);
      for (const auto &s : schemas) {
        if (s.name == words[1]) Fail("duplicate template " + words[1], line_no);
      }
      schemas.push_back(TemplateSchema{words[1], {}});
      slot_lines.emplace_back();
      current = &schemas.back();
    } else {
      Fail("unknown directive '" + head + "'", line_no);
    }
  });

  // Reference checks with line numbers before handing off to the constructor.
  for (const SemClass &cls : classes) {
    if (cls.parent && !class_lines.count(*cls.parent)) {
      Fail("class " + cls.id + " has unknown parent " + *cls.parent,
           class_lines[cls.id]);
    }
  }
  for (size_t s = 0; s < schemas.size(); ++s) {
    for (size_t k = 0; k < schemas[s].slots.size(); ++k) {
      const SlotSpec &slot = schemas[s].slots[k];
      if (!class_lines.count(slot.filler_class)) {
        Fail("slot " + slot.name + " has unknown class " + slot.filler_class,
             slot_lines[s][k]);
      }
    }
  }
  return Ontology(std::move(classes), std::move(schemas));
}

std::string SerializeOntology(const Ontology &ontology) {
  std::string out;
  for (const SemClass &cls : ontology.classes()) {
    out += "class " + cls.id;
    if (cls.parent) out += " isa " + *cls.parent;
    if (cls.category != LexicalCategory::kAny) {
      out += " cat " + std::string(CategoryName(cls.category));
    }
    out += '\n';
  }
  for (const TemplateSchema &schema : ontology.schemas()) {
    out += "template " + schema.name + '\n';
    for (const SlotSpec &slot : schema.slots) {
      out += "  slot " + slot.name + " : " + slot.filler_class;
      if (slot.required) out += " required";
      if (slot.multiplicity == Multiplicity::kMany) out += " many";
      out += '\n';
    }
  }
  return out;
}

}  // namespace lexie
