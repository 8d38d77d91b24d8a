// Copyright 2026 The SchemaForge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "schemaforge/metamodel.hpp"

// Seeded generators for property tests. Structural validity is guaranteed
// (unique names, declared prefixes); referential validity only where the
// property under test needs compilation.

namespace test_support {

inline int pick(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(std::mt19937& rng, int percent) { return pick(rng, 1, 100) <= percent; }

inline std::string random_name(std::mt19937& rng, const std::string& stem, int index) {
  std::string name = stem + std::to_string(index);
  if (chance(rng, 20)) name += " part";  // internal single space is legal
  if (chance(rng, 30)) name += "_x";
  return name;
}

// Strings that have historically broken naive emitters: YAML keywords,
// numbers, colons, comment markers, unicode, leading dashes.
inline std::string random_text(std::mt19937& rng) {
  static const std::vector<std::string> pool = {
      "plain words",       "true",          "false",   "null",    "100",
      "3.14",              "1,5,8",         "a: b",    "x #y",    "-lead",
      "wrapped \"quote\"", "back\\slash",   "tab\tin", "36.1069° -112.1129",
      "ENVO:00001998",     " leading",      "trailing ", "*star",  "[brack]",
      "after: ",           "e5",            "0x1f",    "~",       "yes",
  };
  std::string text = pool[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(pool.size()) - 1))];
  if (chance(rng, 25)) text += " " + std::to_string(pick(rng, 0, 999));
  return text;
}

inline schemaforge::SlotDefinition random_slot(std::mt19937& rng, const std::string& name) {
  schemaforge::SlotDefinition slot;
  slot.name = name;
  if (chance(rng, 60)) slot.description = random_text(rng);
  if (chance(rng, 40)) slot.range = "string";
  if (chance(rng, 50)) slot.required = chance(rng, 50);
  if (chance(rng, 40)) slot.multivalued = chance(rng, 50);
  if (chance(rng, 25)) slot.pattern = "[a-z]+";
  if (chance(rng, 25)) {
    double lo = pick(rng, -50, 50);
    slot.minimum_value = lo;
    if (chance(rng, 70)) slot.maximum_value = lo + pick(rng, 0, 100) + 0.25;
  }
  if (chance(rng, 20)) slot.unit = random_text(rng);
  if (chance(rng, 20)) slot.slot_uri = "ex:" + name;
  if (chance(rng, 25)) slot.examples.push_back(random_text(rng));
  if (chance(rng, 15))
    slot.mappings.push_back({schemaforge::MappingPredicate::Exact, "ex:m" + name});
  return slot;
}

/// Structurally valid schema for parse/serialize round-trip testing.
/// References may dangle; the round-trip does not resolve them.
inline schemaforge::SchemaDefinition random_schema(std::mt19937& rng) {
  schemaforge::SchemaDefinition schema;
  schema.id = "https://example.org/generated/" + std::to_string(pick(rng, 1, 999999));
  schema.name = random_name(rng, "generated_", pick(rng, 0, 99));
  if (chance(rng, 50)) schema.title = random_text(rng);
  if (chance(rng, 30)) schema.version = std::to_string(pick(rng, 0, 9)) + ".0";
  if (chance(rng, 30)) schema.license = "https://example.org/license";
  schema.prefixes.insert("ex", "https://example.org/generated/ns/");
  if (chance(rng, 50)) schema.prefixes.insert("other", "urn:other:");
  if (chance(rng, 50)) schema.default_prefix = "ex";
  if (chance(rng, 30)) schema.default_range = "string";
  if (chance(rng, 30)) schema.imports.push_back("common/base");

  int n_types = pick(rng, 0, 2);
  for (int i = 0; i < n_types; ++i) {
    schemaforge::TypeDefinition type;
    type.name = random_name(rng, "type_t", i);
    type.base = static_cast<schemaforge::BaseKind>(pick(rng, 0, 7));
    if (chance(rng, 40)) type.pattern = "[0-9]{3}";
    if (chance(rng, 60)) type.description = random_text(rng);
    schema.types.insert(type.name, type);
  }
  int n_enums = pick(rng, 0, 3);
  for (int i = 0; i < n_enums; ++i) {
    schemaforge::EnumDefinition en;
    en.name = random_name(rng, "Enum_E", i);
    if (chance(rng, 60)) en.description = random_text(rng);
    int n_pv = pick(rng, 0, 4);
    for (int k = 0; k < n_pv; ++k) {
      schemaforge::PermissibleValue pv;
      pv.text = random_text(rng) + "#" + std::to_string(k);
      if (chance(rng, 50)) pv.description = random_text(rng);
      if (chance(rng, 40)) pv.meaning = "ex:pv" + std::to_string(k);
      en.permissible_values.insert(pv.text, pv);
    }
    schema.enums.insert(en.name, en);
  }
  int n_slots = pick(rng, 0, 5);
  for (int i = 0; i < n_slots; ++i) {
    std::string name = random_name(rng, "slot_s", i);
    schema.slots.insert(name, random_slot(rng, name));
  }
  int n_classes = pick(rng, 1, 4);
  for (int i = 0; i < n_classes; ++i) {
    schemaforge::ClassDefinition cls;
    cls.name = random_name(rng, "Class_C", i);
    if (chance(rng, 60)) cls.description = random_text(rng);
    if (i > 0 && chance(rng, 40)) {
      auto it = schema.classes.begin();
      std::advance(it, pick(rng, 0, i - 1));
      cls.is_a = it->first;
    }
    cls.abstract = chance(rng, 15);
    if (chance(rng, 30)) cls.class_uri = "ex:C" + std::to_string(i);
    for (const auto& [slot_name, def] : schema.slots) {
      (void)def;
      if (chance(rng, 35)) cls.slots.push_back(slot_name);
    }
    int n_attrs = pick(rng, 0, 2);
    for (int k = 0; k < n_attrs; ++k) {
      std::string name = "attr_" + std::to_string(i) + "_" + std::to_string(k);
      cls.attributes.insert(name, random_slot(rng, name));
    }
    if (chance(rng, 20))
      cls.mappings.push_back({schemaforge::MappingPredicate::Close, "ex:map" + std::to_string(i)});
    schema.classes.insert(cls.name, cls);
  }
  return schema;
}

/// Compilable schema with an inheritance hierarchy up to the given depth:
/// every reference resolves, every class gets its own attributes.
inline schemaforge::SchemaDefinition random_hierarchy(std::mt19937& rng, int max_depth = 5) {
  schemaforge::SchemaDefinition schema;
  schema.id = "https://example.org/hierarchy/" + std::to_string(pick(rng, 1, 999999));
  schema.name = "hierarchy_schema";
  schema.prefixes.insert("ex", "https://example.org/hierarchy/ns/");

  schemaforge::EnumDefinition en;
  en.name = "ColourEnum";
  schemaforge::PermissibleValue red{"red", std::nullopt, std::nullopt};
  schemaforge::PermissibleValue blue{"blue", std::nullopt, std::nullopt};
  en.permissible_values.insert("red", red);
  en.permissible_values.insert("blue", blue);
  schema.enums.insert(en.name, en);

  static const std::vector<std::string> ranges = {"string", "integer", "float",
                                                  "boolean", "ColourEnum"};
  int n_classes = pick(rng, 2, 8);
  std::vector<std::pair<std::string, int>> depths;  // name, depth
  for (int i = 0; i < n_classes; ++i) {
    schemaforge::ClassDefinition cls;
    cls.name = "C" + std::to_string(i);
    int depth = 0;
    if (i > 0 && chance(rng, 75)) {
      int parent = pick(rng, 0, i - 1);
      if (depths[static_cast<std::size_t>(parent)].second < max_depth) {
        cls.is_a = depths[static_cast<std::size_t>(parent)].first;
        depth = depths[static_cast<std::size_t>(parent)].second + 1;
      }
    }
    if (i > 1 && chance(rng, 35)) {
      int mixin = pick(rng, 0, i - 1);
      const std::string& name = depths[static_cast<std::size_t>(mixin)].first;
      if (!cls.is_a || *cls.is_a != name) cls.mixins.push_back(name);
    }
    int n_attrs = pick(rng, 0, 3);
    for (int k = 0; k < n_attrs; ++k) {
      schemaforge::SlotDefinition attr;
      attr.name = "a_" + std::to_string(i) + "_" + std::to_string(k);
      attr.range = ranges[static_cast<std::size_t>(pick(rng, 0, 4))];
      if (chance(rng, 40)) attr.required = chance(rng, 50);
      cls.attributes.insert(attr.name, attr);
    }
    depths.emplace_back(cls.name, depth);
    schema.classes.insert(cls.name, cls);
  }
  return schema;
}

}  // namespace test_support
