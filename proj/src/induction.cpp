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

#include "schemaforge/induction.hpp"

#include <algorithm>
#include <map>

#include "schemaforge/loader.hpp"

namespace schemaforge {

std::string_view inheritance_label_name(InheritanceLabel label) {
  switch (label) {
    case InheritanceLabel::Direct: return "direct";
    case InheritanceLabel::Inherited: return "inherited";
    case InheritanceLabel::Overridden: return "overridden";
  }
  return "unknown";
}

const InducedSlot* CompiledSchema::find_slot(std::string_view class_name,
                                             std::string_view slot_name) const {
  const auto* slots = induced.find(class_name);
  if (!slots) return nullptr;
  for (const auto& slot : *slots)
    if (slot.name == slot_name) return &slot;
  return nullptr;
}

const InducedSlot* CompiledSchema::identifier_slot(std::string_view class_name) const {
  const auto* slots = induced.find(class_name);
  if (!slots) return nullptr;
  for (const auto& slot : *slots)
    if (slot.identifier) return &slot;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Linearization
// ---------------------------------------------------------------------------

namespace {

void linearize(const SchemaDefinition& schema, const std::string& class_name,
               std::vector<std::string>& out, std::vector<std::string>& stack) {
  if (std::find(stack.begin(), stack.end(), class_name) != stack.end()) {
    std::string path;
    for (const auto& c : stack) path += c + " -> ";
    throw CycleError("inheritance cycle: " + path + class_name);
  }
  const ClassDefinition* cls = schema.classes.find(class_name);
  if (!cls) throw CompileError("unknown class '" + class_name + "'");

  if (std::find(out.begin(), out.end(), class_name) == out.end()) out.push_back(class_name);

  stack.push_back(class_name);
  if (cls->is_a) linearize(schema, *cls->is_a, out, stack);
  for (const auto& mixin : cls->mixins) linearize(schema, mixin, out, stack);
  stack.pop_back();
}

}  // namespace

std::vector<std::string> class_ancestors(const SchemaDefinition& schema,
                                         const std::string& class_name) {
  std::vector<std::string> out;
  std::vector<std::string> stack;
  linearize(schema, class_name, out, stack);
  return out;
}

// ---------------------------------------------------------------------------
// CURIE handling
// ---------------------------------------------------------------------------

std::string expand_curie(const PrefixMap& prefix_map, const std::string& curie) {
  auto parts = split_curie(curie);
  if (!parts) throw CompileError("malformed CURIE '" + curie + "'");
  const std::string* base = prefix_map.find(parts->first);
  if (!base) throw CompileError("undeclared prefix '" + parts->first + "' in '" + curie + "'");
  return *base + parts->second;
}

Contraction contract_uri(const PrefixMap& prefix_map, const std::string& uri) {
  const std::string* best_prefix = nullptr;
  const std::string* best_base = nullptr;
  for (const auto& [prefix, base] : prefix_map) {
    if (uri.size() >= base.size() && uri.compare(0, base.size(), base) == 0) {
      if (!best_base || base.size() > best_base->size()) {
        best_prefix = &prefix;
        best_base = &base;
      }
    }
  }
  if (!best_base) return {uri, false};
  return {*best_prefix + ":" + uri.substr(best_base->size()), true};
}

// ---------------------------------------------------------------------------
// Slot induction
// ---------------------------------------------------------------------------

namespace {

// Depth of each ancestor in the is_a/mixin graph, measured in edges from the
// class. Used to decide overlay precedence and to detect equal-depth overlay
// conflicts.
std::map<std::string, int> ancestor_depths(const SchemaDefinition& schema,
                                           const std::string& class_name) {
  std::map<std::string, int> depth{{class_name, 0}};
  std::vector<std::string> frontier{class_name};
  int level = 0;
  while (!frontier.empty()) {
    ++level;
    std::vector<std::string> next;
    for (const auto& name : frontier) {
      const ClassDefinition* cls = schema.classes.find(name);
      if (!cls) continue;  // linearization already validated references
      auto push = [&](const std::string& parent) {
        if (!depth.count(parent)) {
          depth[parent] = level;
          next.push_back(parent);
        }
      };
      if (cls->is_a) push(*cls->is_a);
      for (const auto& mixin : cls->mixins) push(mixin);
    }
    frontier = std::move(next);
  }
  return depth;
}

// Fills absent fields of `slot` from its is_a parent chain.
SlotDefinition resolve_slot_parents(const SchemaDefinition& schema, SlotDefinition slot) {
  std::vector<std::string> seen{slot.name};
  std::optional<std::string> parent_name = slot.is_a;
  while (parent_name) {
    if (std::find(seen.begin(), seen.end(), *parent_name) != seen.end())
      throw CycleError("slot inheritance cycle through '" + *parent_name + "'");
    seen.push_back(*parent_name);
    const SlotDefinition* parent = schema.slots.find(*parent_name);
    if (!parent)
      throw CompileError("slot '" + slot.name + "' inherits from unknown slot '" + *parent_name +
                         "'");
    if (!slot.description) slot.description = parent->description;
    if (!slot.range) slot.range = parent->range;
    if (!slot.required) slot.required = parent->required;
    if (!slot.multivalued) slot.multivalued = parent->multivalued;
    if (!slot.identifier) slot.identifier = parent->identifier;
    if (!slot.pattern) slot.pattern = parent->pattern;
    if (!slot.minimum_value) slot.minimum_value = parent->minimum_value;
    if (!slot.maximum_value) slot.maximum_value = parent->maximum_value;
    if (!slot.unit) slot.unit = parent->unit;
    if (!slot.slot_uri) slot.slot_uri = parent->slot_uri;
    parent_name = parent->is_a;
  }
  return slot;
}

struct Overlay {
  const SlotDefinition* usage;
  std::string from_class;
  int depth;
};

void apply_overlay(SlotDefinition& slot, const SlotDefinition& usage) {
  if (usage.description) slot.description = usage.description;
  if (usage.range) slot.range = usage.range;
  if (usage.required) slot.required = usage.required;
  if (usage.multivalued) slot.multivalued = usage.multivalued;
  if (usage.identifier) slot.identifier = usage.identifier;
  if (usage.pattern) slot.pattern = usage.pattern;
  if (usage.minimum_value) slot.minimum_value = usage.minimum_value;
  if (usage.maximum_value) slot.maximum_value = usage.maximum_value;
  if (usage.unit) slot.unit = usage.unit;
  if (usage.slot_uri) slot.slot_uri = usage.slot_uri;
}

// Two overlays at the same depth may touch disjoint fields; setting the same
// field to different values has no defined winner.
template <typename Field>
void check_field_conflict(const Field& a, const Field& b, const char* field,
                          const Overlay& lhs, const Overlay& rhs, const std::string& slot_name) {
  if (a && b && !(*a == *b))
    throw CompileError("conflicting slot_usage for '" + slot_name + "' on field '" + field +
                       "' from '" + lhs.from_class + "' and '" + rhs.from_class +
                       "' at equal inheritance depth");
}

void check_overlay_conflicts(const Overlay& lhs, const Overlay& rhs,
                             const std::string& slot_name) {
  const SlotDefinition& a = *lhs.usage;
  const SlotDefinition& b = *rhs.usage;
  check_field_conflict(a.description, b.description, "description", lhs, rhs, slot_name);
  check_field_conflict(a.range, b.range, "range", lhs, rhs, slot_name);
  check_field_conflict(a.required, b.required, "required", lhs, rhs, slot_name);
  check_field_conflict(a.multivalued, b.multivalued, "multivalued", lhs, rhs, slot_name);
  check_field_conflict(a.identifier, b.identifier, "identifier", lhs, rhs, slot_name);
  check_field_conflict(a.pattern, b.pattern, "pattern", lhs, rhs, slot_name);
  check_field_conflict(a.minimum_value, b.minimum_value, "minimum_value", lhs, rhs, slot_name);
  check_field_conflict(a.maximum_value, b.maximum_value, "maximum_value", lhs, rhs, slot_name);
  check_field_conflict(a.unit, b.unit, "unit", lhs, rhs, slot_name);
  check_field_conflict(a.slot_uri, b.slot_uri, "slot_uri", lhs, rhs, slot_name);
}

ResolvedRange resolve_range(const SchemaDefinition& schema, const std::string& class_name,
                            const std::string& slot_name,
                            const std::optional<std::string>& declared) {
  std::string range_name;
  if (declared) {
    range_name = *declared;
  } else if (schema.default_range) {
    range_name = *schema.default_range;
  } else {
    range_name = "string";  // the documented default of defaults
  }
  auto kind = schema.element_kind(range_name);
  if (!kind)
    throw CompileError("unknown range '" + range_name + "' for slot '" + slot_name +
                       "' on class '" + class_name + "'");
  ResolvedRange out;
  out.name = range_name;
  out.kind = *kind;
  switch (*kind) {
    case ElementKind::Type: {
      const TypeDefinition& type = *schema.types.find(range_name);
      out.base = type.base;
      out.type_pattern = type.pattern;
      break;
    }
    case ElementKind::Enum: {
      const EnumDefinition& en = *schema.enums.find(range_name);
      for (const auto& [text, pv] : en.permissible_values) {
        out.permissible_texts.push_back(text);
        (void)pv;
      }
      break;
    }
    case ElementKind::Class:
      break;
    case ElementKind::Slot:
      throw CompileError("range '" + range_name + "' of slot '" + slot_name + "' on class '" +
                         class_name + "' names a slot; expected a type, class, or enum");
  }
  return out;
}

}  // namespace

std::vector<InducedSlot> induced_slots(const SchemaDefinition& schema,
                                       const std::string& class_name, Diagnostics& diags) {
  const std::vector<std::string> chain = class_ancestors(schema, class_name);
  const std::map<std::string, int> depths = ancestor_depths(schema, class_name);

  // Slot names in induction order, each with the defining ancestor.
  struct Source {
    std::string slot_name;
    std::string declared_on;
    const SlotDefinition* attribute;  // null when the name references a schema-level slot
  };
  std::vector<Source> sources;
  auto add_source = [&](const std::string& slot_name, const std::string& declared_on,
                        const SlotDefinition* attribute) {
    for (const auto& s : sources)
      if (s.slot_name == slot_name) return;  // first occurrence wins
    sources.push_back({slot_name, declared_on, attribute});
  };
  for (const auto& ancestor : chain) {
    const ClassDefinition& cls = *schema.classes.find(ancestor);
    for (const auto& slot_name : cls.slots) add_source(slot_name, ancestor, nullptr);
    for (const auto& [attr_name, attr] : cls.attributes) add_source(attr_name, ancestor, &attr);
  }

  // Reachability check for slot_usage keys of the class itself.
  const ClassDefinition& own = *schema.classes.find(class_name);
  for (const auto& [usage_name, usage] : own.slot_usage) {
    (void)usage;
    bool reachable = std::any_of(sources.begin(), sources.end(),
                                 [&](const Source& s) { return s.slot_name == usage_name; });
    if (!reachable)
      throw CompileError("slot_usage for '" + usage_name + "' on class '" + class_name +
                         "' does not reference a reachable slot");
  }

  std::vector<InducedSlot> result;
  int identifier_count = 0;
  for (const auto& source : sources) {
    SlotDefinition def;
    if (source.attribute) {
      def = *source.attribute;
    } else {
      const SlotDefinition* schema_slot = schema.slots.find(source.slot_name);
      if (!schema_slot)
        throw CompileError("class '" + source.declared_on + "' references unknown slot '" +
                           source.slot_name + "'");
      def = *schema_slot;
    }
    def = resolve_slot_parents(schema, def);

    // Collect slot_usage overlays along the chain, farthest depth first;
    // nearest descendant is applied last and therefore wins.
    std::vector<Overlay> overlays;
    for (const auto& ancestor : chain) {
      const ClassDefinition& cls = *schema.classes.find(ancestor);
      if (const SlotDefinition* usage = cls.slot_usage.find(source.slot_name))
        overlays.push_back({usage, ancestor, depths.at(ancestor)});
    }
    std::stable_sort(overlays.begin(), overlays.end(),
                     [](const Overlay& a, const Overlay& b) { return a.depth > b.depth; });
    for (std::size_t i = 0; i < overlays.size(); ++i)
      for (std::size_t j = i + 1; j < overlays.size(); ++j)
        if (overlays[i].depth == overlays[j].depth)
          check_overlay_conflicts(overlays[i], overlays[j], source.slot_name);
    for (const auto& overlay : overlays) apply_overlay(def, *overlay.usage);

    InducedSlot induced;
    induced.name = source.slot_name;
    induced.owner_class = class_name;
    induced.effective_range = resolve_range(schema, class_name, source.slot_name, def.range);
    induced.required = def.required.value_or(false);
    induced.multivalued = def.multivalued.value_or(false);
    induced.identifier = def.identifier.value_or(false);
    induced.pattern = def.pattern;
    induced.minimum_value = def.minimum_value;
    induced.maximum_value = def.maximum_value;
    induced.unit = def.unit;
    induced.slot_uri = def.slot_uri;
    induced.description = def.description;
    induced.examples = def.examples;

    if (induced.identifier) {
      ++identifier_count;
      if (induced.multivalued)
        throw CompileError("identifier slot '" + source.slot_name + "' on class '" + class_name +
                           "' cannot be multivalued");
      if (def.required && !*def.required)
        warn(diags,
             "identifier slot '" + source.slot_name + "' is declared required: false; identifiers "
             "are always required",
             class_name);
      induced.required = true;
    }

    if (source.declared_on == class_name) {
      induced.inheritance = InheritanceLabel::Direct;
    } else if (own.slot_usage.contains(source.slot_name)) {
      induced.inheritance = InheritanceLabel::Overridden;
    } else {
      induced.inheritance = InheritanceLabel::Inherited;
    }
    result.push_back(std::move(induced));
  }

  if (identifier_count > 1)
    throw CompileError("class '" + class_name + "' has " + std::to_string(identifier_count) +
                       " identifier slots; at most one is allowed");
  return result;
}

// ---------------------------------------------------------------------------
// Compilation
// ---------------------------------------------------------------------------

namespace {

std::string percent_encode_spaces(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == ' ') out += "%20";
    else out += c;
  }
  return out;
}

std::string default_uri_base(const SchemaDefinition& schema) {
  if (schema.default_prefix) {
    if (const std::string* base = schema.prefixes.find(*schema.default_prefix)) return *base;
  }
  std::string base = schema.id;
  if (!base.empty() && base.back() != '/' && base.back() != '#') base += "/";
  return base;
}

std::string expand_declared_uri(const PrefixMap& prefixes, const std::string& declared) {
  if (declared.find("://") != std::string::npos) return declared;  // already a full URI
  if (is_absolute_uri(declared) && !split_curie(declared)) return declared;  // e.g. urn:a:b
  // Anything of prefix:local shape goes through the prefix map, which also
  // catches undeclared prefixes.
  return expand_curie(prefixes, declared);
}

}  // namespace

CompiledSchema compile_schema(const SchemaDefinition& schema, Diagnostics& diags) {
  validate_structure(schema);

  CompiledSchema compiled;
  compiled.source = schema;
  compiled.prefix_map = build_prefix_map(schema);

  std::string base = default_uri_base(schema);

  for (const auto& [class_name, cls] : schema.classes) {
    compiled.ancestors.insert(class_name, class_ancestors(schema, class_name));
    compiled.induced.insert(class_name, induced_slots(schema, class_name, diags));
    std::string uri = cls.class_uri
                          ? expand_declared_uri(compiled.prefix_map, *cls.class_uri)
                          : base + percent_encode_spaces(class_name);
    compiled.expanded_uris.insert(class_name, uri);
  }
  for (const auto& [slot_name, slot] : schema.slots) {
    std::string uri = slot.slot_uri ? expand_declared_uri(compiled.prefix_map, *slot.slot_uri)
                                    : base + percent_encode_spaces(slot_name);
    compiled.expanded_uris.insert(slot_name, uri);
  }
  for (const auto& [enum_name, en] : schema.enums) {
    compiled.expanded_uris.insert(enum_name, base + percent_encode_spaces(enum_name));
    for (const auto& [text, pv] : en.permissible_values) {
      if (pv.meaning) {
        auto parts = split_curie(*pv.meaning);
        if (!parts)
          throw CompileError("permissible value '" + text + "' of enum '" + enum_name +
                             "' has a malformed meaning CURIE '" + *pv.meaning + "'");
        if (!compiled.prefix_map.contains(parts->first))
          throw CompileError("permissible value '" + text + "' of enum '" + enum_name +
                             "' uses undeclared prefix '" + parts->first + "'");
      }
    }
  }
  for (const auto& [type_name, type] : schema.types) {
    (void)type;
    compiled.expanded_uris.insert(type_name, base + percent_encode_spaces(type_name));
  }

  // slot_uri_expanded on every induced slot, now that the prefix map is
  // known to be sound.
  for (auto& [class_name, slots] : compiled.induced) {
    (void)class_name;
    for (auto& slot : slots)
      if (slot.slot_uri)
        slot.slot_uri_expanded = expand_declared_uri(compiled.prefix_map, *slot.slot_uri);
  }

  return compiled;
}

}  // namespace schemaforge
