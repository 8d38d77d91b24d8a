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

#include "schemaforge/metamodel.hpp"

#include <array>
#include <cctype>

namespace schemaforge {

namespace {

constexpr std::array<std::string_view, 8> kBaseKindNames = {
    "string", "integer", "float", "boolean", "uri", "curie", "date", "datetime"};

constexpr std::array<std::string_view, 5> kPredicateNames = {"exact", "close", "broad",
                                                             "narrow", "related"};

}  // namespace

std::string_view base_kind_name(BaseKind kind) {
  return kBaseKindNames[static_cast<std::size_t>(kind)];
}

std::optional<BaseKind> base_kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kBaseKindNames.size(); ++i)
    if (kBaseKindNames[i] == name) return static_cast<BaseKind>(i);
  return std::nullopt;
}

std::string_view mapping_predicate_name(MappingPredicate p) {
  return kPredicateNames[static_cast<std::size_t>(p)];
}

std::string_view element_kind_name(ElementKind kind) {
  switch (kind) {
    case ElementKind::Class: return "class";
    case ElementKind::Slot: return "slot";
    case ElementKind::Enum: return "enum";
    case ElementKind::Type: return "type";
  }
  return "unknown";
}

std::optional<ElementKind> SchemaDefinition::element_kind(std::string_view element_name) const {
  if (classes.contains(element_name)) return ElementKind::Class;
  if (slots.contains(element_name)) return ElementKind::Slot;
  if (enums.contains(element_name)) return ElementKind::Enum;
  if (types.contains(element_name)) return ElementKind::Type;
  return std::nullopt;
}

bool is_valid_element_name(std::string_view name) {
  if (name.empty()) return false;
  char first = name.front();
  if (!(std::isalpha(static_cast<unsigned char>(first)) || first == '_')) return false;
  if (name.back() == ' ') return false;
  bool prev_space = false;
  for (char c : name) {
    if (c == ' ') {
      if (prev_space) return false;  // internal single spaces only
      prev_space = true;
      continue;
    }
    prev_space = false;
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

bool is_absolute_uri(std::string_view text) {
  // scheme = ALPHA *(ALPHA / DIGIT / "+" / "-" / "."), then ":", then no whitespace.
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  if (!std::isalpha(static_cast<unsigned char>(text[0]))) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    char c = text[i];
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.'))
      return false;
  }
  if (colon + 1 >= text.size()) return false;  // bare "scheme:" is not a usable base
  for (std::size_t i = colon + 1; i < text.size(); ++i)
    if (std::isspace(static_cast<unsigned char>(text[i]))) return false;
  return true;
}

std::optional<std::pair<std::string, std::string>> split_curie(std::string_view text) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) return std::nullopt;
  if (text.find(':', colon + 1) != std::string_view::npos) return std::nullopt;
  std::string_view prefix = text.substr(0, colon);
  std::string_view local = text.substr(colon + 1);
  for (char c : prefix)
    if (std::isspace(static_cast<unsigned char>(c))) return std::nullopt;
  for (char c : local)
    if (std::isspace(static_cast<unsigned char>(c))) return std::nullopt;
  return std::make_pair(std::string(prefix), std::string(local));
}

namespace {

void check_name(std::string_view kind, std::string_view name) {
  if (!is_valid_element_name(name))
    throw InvariantError("invalid " + std::string(kind) + " name: '" + std::string(name) + "'");
}

void check_slot_fields(const SlotDefinition& slot, const std::string& context) {
  if (slot.minimum_value && slot.maximum_value && *slot.minimum_value > *slot.maximum_value)
    throw InvariantError("minimum_value exceeds maximum_value on slot '" + context + "'");
}

}  // namespace

void validate_structure(const SchemaDefinition& schema) {
  if (!is_absolute_uri(schema.id))
    throw InvariantError("schema id is not an absolute URI: '" + schema.id + "'");
  check_name("schema", schema.name);

  for (const auto& [prefix, base] : schema.prefixes) {
    if (!is_absolute_uri(base))
      throw InvariantError("prefix '" + prefix + "' does not expand to an absolute URI base: '" +
                           base + "'");
  }
  if (schema.default_prefix && !schema.prefixes.contains(*schema.default_prefix))
    throw InvariantError("default_prefix '" + *schema.default_prefix + "' is not declared");

  // A name denotes exactly one element kind across the four maps.
  ordered_map<ElementKind> seen;
  auto claim = [&](const std::string& name, ElementKind kind) {
    check_name(element_kind_name(kind), name);
    if (const ElementKind* prior = seen.find(name))
      throw InvariantError("element name '" + name + "' declared as both " +
                           std::string(element_kind_name(*prior)) + " and " +
                           std::string(element_kind_name(kind)));
    seen.insert(name, kind);
  };
  for (const auto& [name, cls] : schema.classes) {
    claim(name, ElementKind::Class);
    for (const auto& [attr_name, attr] : cls.attributes) {
      check_name("attribute", attr_name);
      check_slot_fields(attr, name + "." + attr_name);
    }
  }
  for (const auto& [name, slot] : schema.slots) {
    claim(name, ElementKind::Slot);
    check_slot_fields(slot, name);
  }
  for (const auto& [name, en] : schema.enums) {
    claim(name, ElementKind::Enum);
    for (const auto& [text, pv] : en.permissible_values) {
      if (text.empty())
        throw InvariantError("enum '" + name + "' has an empty permissible value text");
      (void)pv;
    }
  }
  for (const auto& [name, type] : schema.types) claim(name, ElementKind::Type);
}

const SchemaDefinition& builtin_schema() {
  static const SchemaDefinition instance = [] {
    SchemaDefinition s;
    s.id = "https://w3id.org/schemaforge/types";
    s.name = "schemaforge_types";
    s.title = "SchemaForge built-in types";
    s.default_prefix = "schemaforge";
    s.prefixes.insert("schemaforge", "https://w3id.org/schemaforge/");
    s.prefixes.insert("skos", "http://www.w3.org/2004/02/skos/core#");

    auto add = [&](std::string_view name, BaseKind base, std::string_view description) {
      TypeDefinition t;
      t.name = std::string(name);
      t.base = base;
      t.description = std::string(description);
      s.types.insert(std::string(name), std::move(t));
    };
    add("string", BaseKind::String, "A sequence of characters.");
    add("integer", BaseKind::Integer, "A whole number.");
    add("float", BaseKind::Float, "A decimal number; integer literals are accepted.");
    add("boolean", BaseKind::Boolean, "True or false.");
    add("uri", BaseKind::Uri, "An absolute URI.");
    add("curie", BaseKind::Curie, "A compact URI of the form prefix:local.");
    add("date", BaseKind::Date, "A calendar date, YYYY-MM-DD.");
    add("datetime", BaseKind::DateTime, "A date and time, ISO 8601.");
    return s;
  }();
  return instance;
}

}  // namespace schemaforge
