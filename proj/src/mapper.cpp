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

#include "schemaforge/mapper.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <regex>
#include <set>

#include "schemaforge/induction.hpp"
#include "schemaforge/loader.hpp"

namespace schemaforge {

// ---------------------------------------------------------------------------
// Spec parsing
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void fail_at(const YAML::Node& node, const std::string& msg) {
  throw TransformError(msg + " (line " + std::to_string(node.Mark().line + 1) + ")");
}

std::string require_string(const YAML::Node& node, const char* what) {
  if (!node || !node.IsScalar()) throw TransformError(std::string("missing or non-scalar ") + what);
  return node.as<std::string>();
}

TransformRule parse_rule(const YAML::Node& node, Diagnostics& diags) {
  if (!node.IsMap() || node.size() != 1)
    fail_at(node, "each rule must be a single-key mapping naming the rule kind");
  const auto entry = *node.begin();
  const std::string kind = entry.first.as<std::string>();
  const YAML::Node& body = entry.second;
  TransformRule rule;
  if (kind == "rename_slot") {
    rule.kind = TransformRule::Kind::RenameSlot;
    rule.from = require_string(body["from"], "rename_slot.from");
    rule.to = require_string(body["to"], "rename_slot.to");
    if (rule.from == rule.to)
      warn(diags, "rename_slot with identical from and to '" + rule.from + "' is a no-op",
           "transform");
  } else if (kind == "split_slot") {
    rule.kind = TransformRule::Kind::SplitSlot;
    rule.from = require_string(body["from"], "split_slot.from");
    if (body["separator"]) rule.separator = body["separator"].as<std::string>();
    if (body["pattern"]) rule.pattern = body["pattern"].as<std::string>();
    if (!rule.separator == !rule.pattern)
      fail_at(node, "split_slot requires exactly one of separator or pattern");
    const YAML::Node targets = body["targets"];
    if (!targets || !targets.IsSequence() || targets.size() < 2)
      fail_at(node, "split_slot requires a targets list with at least two entries");
    for (const auto& t : targets) {
      SplitTarget target;
      target.slot = require_string(t["slot"], "split target slot");
      target.type = t["type"] ? t["type"].as<std::string>() : "string";
      rule.targets.push_back(std::move(target));
    }
  } else if (kind == "copy_slot") {
    rule.kind = TransformRule::Kind::CopySlot;
    rule.name = require_string(body["name"], "copy_slot.name");
  } else if (kind == "drop_slot") {
    rule.kind = TransformRule::Kind::DropSlot;
    rule.name = require_string(body["name"], "drop_slot.name");
  } else if (kind == "subset_classes") {
    rule.kind = TransformRule::Kind::SubsetClasses;
    const YAML::Node keep = body["keep"];
    if (!keep || !keep.IsSequence()) fail_at(node, "subset_classes requires a keep list");
    for (const auto& k : keep) rule.keep.push_back(k.as<std::string>());
    if (rule.keep.empty()) fail_at(node, "subset_classes keep list is empty");
  } else {
    fail_at(entry.first, "unknown rule kind '" + kind + "'");
  }
  return rule;
}

}  // namespace

TransformSpec parse_transform_spec(std::string_view text, Diagnostics& diags) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw TransformError("invalid transform document: " + e.msg + " (line " +
                         std::to_string(e.mark.line + 1) + ")");
  }
  if (!root.IsMap() || !root["transformations"])
    throw TransformError("transform document must be a mapping with a 'transformations' key");
  const YAML::Node list = root["transformations"];
  if (!list.IsSequence()) throw TransformError("'transformations' must be a list");
  TransformSpec spec;
  for (const auto& item : list) {
    if (!item.IsMap()) fail_at(item, "each transformation must be a mapping");
    ClassBinding binding;
    binding.source_class = require_string(item["class"], "transformation class");
    if (item["target"]) binding.target_class = item["target"].as<std::string>();
    if (item["rules"]) {
      if (!item["rules"].IsSequence()) fail_at(item, "'rules' must be a list");
      for (const auto& r : item["rules"]) binding.rules.push_back(parse_rule(r, diags));
    }
    spec.bindings.push_back(std::move(binding));
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Validation against a source schema
// ---------------------------------------------------------------------------

namespace {

// Slot names reachable on a class (own slots, attributes, inherited), without
// requiring ranges to resolve.
std::vector<std::string> reachable_slot_names(const SchemaDefinition& schema,
                                              const std::string& class_name) {
  std::vector<std::string> names;
  for (const auto& ancestor : class_ancestors(schema, class_name)) {
    const ClassDefinition& cls = *schema.classes.find(ancestor);
    for (const auto& s : cls.slots)
      if (std::find(names.begin(), names.end(), s) == names.end()) names.push_back(s);
    for (const auto& [a, def] : cls.attributes) {
      (void)def;
      if (std::find(names.begin(), names.end(), a) == names.end()) names.push_back(a);
    }
  }
  return names;
}

void claim_slot(std::set<std::string>& consumed, const std::string& slot,
                const std::string& source_class) {
  if (!consumed.insert(slot).second)
    throw TransformError("slot '" + slot + "' of class '" + source_class +
                         "' is consumed by more than one rule");
}

}  // namespace

void validate_transform_spec(const TransformSpec& spec, const SchemaDefinition& source) {
  for (const auto& binding : spec.bindings) {
    if (!source.classes.contains(binding.source_class))
      throw TransformError("transformation references unknown class '" + binding.source_class +
                           "'");
    const std::vector<std::string> reachable = reachable_slot_names(source, binding.source_class);
    auto require_slot = [&](const std::string& slot) {
      if (std::find(reachable.begin(), reachable.end(), slot) == reachable.end())
        throw TransformError("rule references unknown slot '" + slot + "' on class '" +
                             binding.source_class + "'");
    };
    std::set<std::string> consumed;
    for (const auto& rule : binding.rules) {
      switch (rule.kind) {
        case TransformRule::Kind::RenameSlot:
          require_slot(rule.from);
          claim_slot(consumed, rule.from, binding.source_class);
          break;
        case TransformRule::Kind::SplitSlot: {
          require_slot(rule.from);
          claim_slot(consumed, rule.from, binding.source_class);
          std::set<std::string> target_names;
          for (const auto& t : rule.targets)
            if (!target_names.insert(t.slot).second)
              throw TransformError("split of '" + rule.from + "' declares duplicate target '" +
                                   t.slot + "'");
          if (rule.pattern) {
            try {
              std::regex re(*rule.pattern);
              if (re.mark_count() != rule.targets.size())
                throw TransformError("split pattern for '" + rule.from + "' captures " +
                                     std::to_string(re.mark_count()) + " groups but declares " +
                                     std::to_string(rule.targets.size()) + " targets");
            } catch (const std::regex_error& e) {
              throw TransformError("invalid split pattern for '" + rule.from + "': " + e.what());
            }
          }
          if (rule.separator && rule.separator->empty())
            throw TransformError("split separator for '" + rule.from + "' must be non-empty");
          break;
        }
        case TransformRule::Kind::CopySlot:
          require_slot(rule.name);
          claim_slot(consumed, rule.name, binding.source_class);
          break;
        case TransformRule::Kind::DropSlot:
          require_slot(rule.name);
          claim_slot(consumed, rule.name, binding.source_class);
          break;
        case TransformRule::Kind::SubsetClasses:
          if (rule.keep.empty()) throw TransformError("subset_classes keep list is empty");
          for (const auto& k : rule.keep)
            if (!source.classes.contains(k))
              throw TransformError("subset_classes keeps unknown class '" + k + "'");
          break;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Schema derivation
// ---------------------------------------------------------------------------

namespace {

template <typename T>
ordered_map<T> rename_key(const ordered_map<T>& map, const std::string& from,
                          const std::string& to) {
  ordered_map<T> out;
  for (const auto& [key, value] : map) {
    if (key == from) {
      T renamed = value;
      renamed.name = to;
      out.insert(to, std::move(renamed));
    } else {
      out.insert(key, value);
    }
  }
  return out;
}

template <typename T>
ordered_map<T> erase_key(const ordered_map<T>& map, const std::string& victim) {
  ordered_map<T> out;
  for (const auto& [key, value] : map)
    if (key != victim) out.insert(key, value);
  return out;
}

void ensure_name_free(const SchemaDefinition& schema, const std::string& name) {
  if (schema.element_kind(name))
    throw TransformError("cannot introduce '" + name + "': the name is already in use");
}

// Renames a slot wherever the source class sees it: its own attribute, or
// the schema-level definition plus every reference to it.
void rename_slot_in_schema(SchemaDefinition& schema, const std::string& source_class,
                           const std::string& from, const std::string& to) {
  ClassDefinition* cls = schema.classes.find(source_class);
  if (SlotDefinition* attr = cls->attributes.find(from)) {
    (void)attr;
    bool collision = schema.element_kind(to).has_value() || cls->attributes.contains(to);
    if (collision) throw TransformError("cannot rename '" + from + "' to '" + to +
                                        "': the name is already in use");
    cls->attributes = rename_key(cls->attributes, from, to);
    cls->slot_usage = rename_key(cls->slot_usage, from, to);
    return;
  }
  ensure_name_free(schema, to);
  schema.slots = rename_key(schema.slots, from, to);
  for (auto& [class_name, c] : schema.classes) {
    (void)class_name;
    for (auto& s : c.slots)
      if (s == from) s = to;
    c.slot_usage = rename_key(c.slot_usage, from, to);
    for (auto& [attr_name, attr] : c.attributes) {
      (void)attr_name;
      if (attr.is_a == from) attr.is_a = to;
    }
  }
  for (auto& [slot_name, s] : schema.slots) {
    (void)slot_name;
    if (s.is_a == from) s.is_a = to;
  }
}

// Removes a slot from one class: attribute, or the reference in its slots
// list. Schema-level definitions other classes may share are left alone.
void remove_slot_from_class(SchemaDefinition& schema, const std::string& source_class,
                            const std::string& slot) {
  ClassDefinition* cls = schema.classes.find(source_class);
  if (cls->attributes.contains(slot)) {
    cls->attributes = erase_key(cls->attributes, slot);
  } else {
    cls->slots.erase(std::remove(cls->slots.begin(), cls->slots.end(), slot), cls->slots.end());
  }
  cls->slot_usage = erase_key(cls->slot_usage, slot);
}

void rename_class_in_schema(SchemaDefinition& schema, const std::string& from,
                            const std::string& to) {
  ensure_name_free(schema, to);
  schema.classes = rename_key(schema.classes, from, to);
  auto fix_range = [&](SlotDefinition& slot) {
    if (slot.range == from) slot.range = to;
  };
  for (auto& [name, cls] : schema.classes) {
    (void)name;
    if (cls.is_a == from) cls.is_a = to;
    for (auto& m : cls.mixins)
      if (m == from) m = to;
    for (auto& [attr_name, attr] : cls.attributes) {
      (void)attr_name;
      fix_range(attr);
    }
    for (auto& [usage_name, usage] : cls.slot_usage) {
      (void)usage_name;
      fix_range(usage);
    }
  }
  for (auto& [name, slot] : schema.slots) {
    (void)name;
    fix_range(slot);
  }
}

void apply_subset(SchemaDefinition& schema, const std::vector<std::string>& keep) {
  // Closure: kept classes, their ancestors, and every class reachable
  // through slot ranges.
  std::set<std::string> kept(keep.begin(), keep.end());
  std::set<std::string> kept_slots, kept_ranges;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& name : std::vector<std::string>(kept.begin(), kept.end())) {
      const ClassDefinition* cls = schema.classes.find(name);
      if (!cls) continue;
      for (const auto& ancestor : class_ancestors(schema, name))
        if (kept.insert(ancestor).second) changed = true;
      auto visit_slot = [&](const SlotDefinition& slot) {
        if (!slot.range) return;
        if (schema.classes.contains(*slot.range)) {
          if (kept.insert(*slot.range).second) changed = true;
        } else {
          kept_ranges.insert(*slot.range);
        }
      };
      for (const auto& s : cls->slots) {
        kept_slots.insert(s);
        if (const SlotDefinition* def = schema.slots.find(s)) {
          visit_slot(*def);
          // slot parents stay resolvable
          const SlotDefinition* parent = def->is_a ? schema.slots.find(*def->is_a) : nullptr;
          while (parent) {
            kept_slots.insert(parent->name);
            visit_slot(*parent);
            parent = parent->is_a ? schema.slots.find(*parent->is_a) : nullptr;
          }
        }
      }
      for (const auto& [attr_name, attr] : cls->attributes) {
        (void)attr_name;
        visit_slot(attr);
      }
      for (const auto& [usage_name, usage] : cls->slot_usage) {
        (void)usage_name;
        visit_slot(usage);
      }
    }
  }

  ordered_map<ClassDefinition> classes;
  for (const auto& [name, cls] : schema.classes)
    if (kept.count(name)) classes.insert(name, cls);
  schema.classes = std::move(classes);

  ordered_map<SlotDefinition> slots;
  for (const auto& [name, slot] : schema.slots)
    if (kept_slots.count(name)) slots.insert(name, slot);
  schema.slots = std::move(slots);

  ordered_map<EnumDefinition> enums;
  for (const auto& [name, en] : schema.enums)
    if (kept_ranges.count(name)) enums.insert(name, en);
  schema.enums = std::move(enums);

  ordered_map<TypeDefinition> types;
  for (const auto& [name, type] : schema.types)
    if (kept_ranges.count(name)) types.insert(name, type);
  schema.types = std::move(types);
}

}  // namespace

SchemaDefinition derive_schema(const TransformSpec& spec, const SchemaDefinition& source,
                               Diagnostics& diags) {
  validate_transform_spec(spec, source);
  SchemaDefinition out = source;
  std::vector<std::string> subset_keep;

  for (const auto& binding : spec.bindings) {
    for (const auto& rule : binding.rules) {
      switch (rule.kind) {
        case TransformRule::Kind::RenameSlot: {
          if (rule.from == rule.to) break;
          const ClassDefinition* cls = out.classes.find(binding.source_class);
          const SlotDefinition* def = cls->attributes.find(rule.from);
          if (!def) def = out.slots.find(rule.from);
          if (def && def->slot_uri)
            warn(diags,
                 "renamed slot '" + rule.to + "' keeps the slot_uri '" + *def->slot_uri +
                     "' declared on '" + rule.from + "'",
                 binding.source_class);
          rename_slot_in_schema(out, binding.source_class, rule.from, rule.to);
          break;
        }
        case TransformRule::Kind::SplitSlot: {
          remove_slot_from_class(out, binding.source_class, rule.from);
          ClassDefinition* cls = out.classes.find(binding.source_class);
          for (const auto& target : rule.targets) {
            if (out.element_kind(target.slot) || cls->attributes.contains(target.slot))
              throw TransformError("split target '" + target.slot + "' is already in use");
            SlotDefinition slot;
            slot.name = target.slot;
            slot.range = target.type;
            cls->attributes.insert(target.slot, std::move(slot));
          }
          break;
        }
        case TransformRule::Kind::CopySlot:
          break;  // explicit identity carry-over
        case TransformRule::Kind::DropSlot:
          remove_slot_from_class(out, binding.source_class, rule.name);
          break;
        case TransformRule::Kind::SubsetClasses:
          for (const auto& k : rule.keep) subset_keep.push_back(k);
          break;
      }
    }
    if (binding.target_class && *binding.target_class != binding.source_class) {
      rename_class_in_schema(out, binding.source_class, *binding.target_class);
      for (auto& k : subset_keep)
        if (k == binding.source_class) k = *binding.target_class;
    }
  }

  if (!subset_keep.empty()) apply_subset(out, subset_keep);
  validate_structure(out);
  return out;
}

// ---------------------------------------------------------------------------
// Record transformation
// ---------------------------------------------------------------------------

namespace {

std::string split_source_text(const std::string& slot, const Value& value) {
  if (value.is_string()) return value.as_string();
  if (value.is_integer()) return std::to_string(value.as_integer());
  if (value.is_double()) return format_decimal(value.as_number());
  throw TransformError("cannot split " + std::string(value.shape_name()) + " value of slot '" +
                       slot + "'");
}

Value parse_split_part(const std::string& raw, const SplitTarget& target,
                       const std::string& from) {
  auto kind = base_kind_from_name(target.type);
  if (!kind) return Value(raw);  // non-base ranges keep the raw text
  Value typed = scalar_from_text(raw);
  switch (*kind) {
    case BaseKind::Integer:
      if (!typed.is_integer())
        throw TransformError("split of '" + from + "': cannot parse '" + raw +
                             "' as integer for target '" + target.slot + "'");
      return typed;
    case BaseKind::Float:
      if (!typed.is_number())
        throw TransformError("split of '" + from + "': cannot parse '" + raw +
                             "' as number for target '" + target.slot + "'");
      return typed;
    case BaseKind::Boolean:
      if (!typed.is_bool())
        throw TransformError("split of '" + from + "': cannot parse '" + raw +
                             "' as boolean for target '" + target.slot + "'");
      return typed;
    default:
      return Value(raw);
  }
}

std::vector<std::string> split_value(const TransformRule& rule, const std::string& text) {
  std::vector<std::string> parts;
  if (rule.pattern) {
    std::regex re(*rule.pattern);
    std::smatch match;
    if (!std::regex_match(text, match, re))
      throw TransformError("split of '" + rule.from + "' failed: value '" + text +
                           "' does not match the split pattern");
    for (std::size_t i = 1; i < match.size(); ++i) parts.push_back(match[i].str());
  } else {
    std::size_t start = 0;
    while (true) {
      std::size_t at = text.find(*rule.separator, start);
      if (at == std::string::npos) {
        parts.push_back(text.substr(start));
        break;
      }
      parts.push_back(text.substr(start, at - start));
      start = at + rule.separator->size();
    }
    if (parts.size() != rule.targets.size())
      throw TransformError("split of '" + rule.from + "' failed: value '" + text + "' yields " +
                           std::to_string(parts.size()) + " parts; expected " +
                           std::to_string(rule.targets.size()));
  }
  return parts;
}

}  // namespace

DataRecord transform_record(const TransformSpec& spec, const DataRecord& record) {
  const ClassBinding* binding = spec.binding_for(record.asserted_class);
  if (!binding) return record;  // unbound classes pass through unchanged

  DataRecord out;
  out.asserted_class = binding->target_class.value_or(binding->source_class);
  for (const auto& [key, value] : record.values) {
    const TransformRule* consumer = nullptr;
    for (const auto& rule : binding->rules) {
      const std::string& subject = (rule.kind == TransformRule::Kind::RenameSlot ||
                                    rule.kind == TransformRule::Kind::SplitSlot)
                                       ? rule.from
                                       : rule.name;
      if ((rule.kind == TransformRule::Kind::RenameSlot ||
           rule.kind == TransformRule::Kind::SplitSlot ||
           rule.kind == TransformRule::Kind::CopySlot ||
           rule.kind == TransformRule::Kind::DropSlot) &&
          subject == key) {
        consumer = &rule;
        break;
      }
    }
    if (!consumer) {
      out.set(key, value);
      continue;
    }
    switch (consumer->kind) {
      case TransformRule::Kind::RenameSlot:
        out.set(consumer->to, value);
        break;
      case TransformRule::Kind::SplitSlot: {
        const std::string text = split_source_text(key, value);
        std::vector<std::string> parts = split_value(*consumer, text);
        for (std::size_t i = 0; i < consumer->targets.size(); ++i)
          out.set(consumer->targets[i].slot,
                  parse_split_part(parts[i], consumer->targets[i], consumer->from));
        break;
      }
      case TransformRule::Kind::CopySlot:
        out.set(key, value);
        break;
      case TransformRule::Kind::DropSlot:
        break;
      case TransformRule::Kind::SubsetClasses:
        break;
    }
  }
  return out;
}

std::vector<TransformOutcome> transform_collection(const TransformSpec& spec,
                                                   const std::vector<DataRecord>& records) {
  std::vector<TransformOutcome> outcomes;
  outcomes.reserve(records.size());
  for (const auto& record : records) {
    TransformOutcome outcome;
    try {
      outcome.record = transform_record(spec, record);
    } catch (const TransformError& e) {
      outcome.error = e.what();
    }
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

}  // namespace schemaforge
