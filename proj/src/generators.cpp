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

#include "schemaforge/generators.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "json.hpp"
#include "schemaforge/loader.hpp"

namespace schemaforge {

using nlohmann::json;

std::string cardinality_text(bool required, bool multivalued) {
  std::string out = required ? "1.." : "0..";
  out += multivalued ? "*" : "1";
  return out;
}

std::string range_display_name(const ResolvedRange& range) {
  if (range.kind != ElementKind::Type) return range.name;
  std::string out = range.name;
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

// ---------------------------------------------------------------------------
// JSON Schema
// ---------------------------------------------------------------------------

namespace {

std::string anchored(const std::string& pattern) { return "^(?:" + pattern + ")$"; }

json bound_number(double v) {
  if (v == static_cast<long long>(v) && std::abs(v) < 1e15)
    return static_cast<std::int64_t>(v);
  return v;
}

// Classes that need a $defs entry: every non-abstract class, plus any class
// referenced as a slot range (abstract ranges included, so $refs resolve).
std::vector<std::string> json_schema_classes(const CompiledSchema& schema) {
  std::set<std::string> included;
  for (const auto& [name, cls] : schema.source.classes)
    if (!cls.abstract) included.insert(name);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& name : std::vector<std::string>(included.begin(), included.end())) {
      for (const auto& slot : *schema.induced_for(name)) {
        if (slot.effective_range.kind == ElementKind::Class &&
            included.insert(slot.effective_range.name).second)
          changed = true;
      }
    }
  }
  std::vector<std::string> order;
  for (const auto& [name, cls] : schema.source.classes) {
    (void)cls;
    if (included.count(name)) order.push_back(name);
  }
  return order;
}

std::string enum_meanings_note(const CompiledSchema& schema, const std::string& enum_name) {
  const EnumDefinition* en = schema.source.enums.find(enum_name);
  if (!en) return {};
  std::string note;
  for (const auto& [text, pv] : en->permissible_values) {
    if (!pv.meaning) continue;
    if (!note.empty()) note += "; ";
    note += text + " means " + *pv.meaning;
  }
  return note;
}

json class_definition_json(const CompiledSchema& schema, const std::string& class_name,
                           const GeneratorOptions& opts, int depth);

json range_schema_json(const CompiledSchema& schema, const InducedSlot& slot,
                       const GeneratorOptions& opts, int depth) {
  const ResolvedRange& range = slot.effective_range;
  if (range.kind == ElementKind::Enum) {
    json out;
    out["enum"] = range.permissible_texts;
    return out;
  }
  if (range.kind == ElementKind::Class) {
    if (depth < opts.inline_depth)
      return class_definition_json(schema, range.name, opts, depth + 1);
    return json{{"$ref", "#/$defs/" + range.name}};
  }

  json out;
  std::vector<std::string> patterns;
  switch (range.base) {
    case BaseKind::String: out["type"] = "string"; break;
    case BaseKind::Integer: out["type"] = "integer"; break;
    case BaseKind::Float: out["type"] = "number"; break;
    case BaseKind::Boolean: out["type"] = "boolean"; break;
    case BaseKind::Uri:
      out["type"] = "string";
      out["format"] = "uri";
      patterns.emplace_back(syntax::kUriPattern);
      break;
    case BaseKind::Curie:
      out["type"] = "string";
      patterns.emplace_back(syntax::kCuriePattern);
      break;
    case BaseKind::Date:
      out["type"] = "string";
      out["format"] = "date";
      patterns.emplace_back(syntax::kDatePattern);
      break;
    case BaseKind::DateTime:
      out["type"] = "string";
      out["format"] = "date-time";
      patterns.emplace_back(syntax::kDateTimePattern);
      break;
  }
  if (slot.effective_pattern()) patterns.push_back(anchored(*slot.effective_pattern()));
  if (patterns.size() == 1) {
    out["pattern"] = patterns.front();
  } else if (patterns.size() > 1) {
    json all = json::array();
    for (const auto& p : patterns) all.push_back(json{{"pattern", p}});
    out["allOf"] = all;
  }
  if (range.base == BaseKind::Integer || range.base == BaseKind::Float) {
    if (slot.minimum_value) out["minimum"] = bound_number(*slot.minimum_value);
    if (slot.maximum_value) out["maximum"] = bound_number(*slot.maximum_value);
  }
  return out;
}

json property_schema_json(const CompiledSchema& schema, const InducedSlot& slot,
                          const GeneratorOptions& opts, int depth) {
  json core = range_schema_json(schema, slot, opts, depth);
  if (slot.multivalued) core = json{{"type", "array"}, {"items", core}};

  std::string description = slot.description.value_or("");
  if (slot.effective_range.kind == ElementKind::Enum) {
    std::string note = enum_meanings_note(schema, slot.effective_range.name);
    if (!note.empty()) {
      if (!description.empty()) description += " ";
      description += "(" + note + ")";
    }
  }
  if (!description.empty()) core["description"] = description;
  return core;
}

json class_definition_json(const CompiledSchema& schema, const std::string& class_name,
                           const GeneratorOptions& opts, int depth) {
  json properties = json::object();
  std::vector<std::string> required;
  for (const auto& slot : *schema.induced_for(class_name)) {
    properties[slot.name] = property_schema_json(schema, slot, opts, depth);
    if (slot.required) required.push_back(slot.name);
  }
  json def;
  def["type"] = "object";
  def["additionalProperties"] = false;
  def["properties"] = properties;
  std::sort(required.begin(), required.end());
  if (!required.empty()) def["required"] = required;
  const ClassDefinition* cls = schema.source.classes.find(class_name);
  if (cls && cls->description) def["description"] = *cls->description;
  return def;
}

}  // namespace

std::string gen_json_schema(const CompiledSchema& schema, const GeneratorOptions& opts) {
  if (opts.root_class && !schema.source.classes.contains(*opts.root_class))
    throw CompileError("root class '" + *opts.root_class + "' does not exist");

  json defs = json::object();
  for (const auto& name : json_schema_classes(schema))
    defs[name] = class_definition_json(schema, name, opts, 0);

  json doc;
  doc["$schema"] = "https://json-schema.org/draft/2020-12/schema";
  doc["$id"] = schema.source.id;
  doc["title"] = schema.source.name;
  doc["$defs"] = defs;
  if (opts.root_class) doc["$ref"] = "#/$defs/" + *opts.root_class;
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// SQL DDL
// ---------------------------------------------------------------------------

namespace {

std::string sql_identifier(const std::string& name) {
  bool plain = !name.empty() &&
               (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) plain = false;
  if (plain) return name;
  std::string out = "\"";
  for (char c : name) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string sql_literal(const std::string& text) {
  std::string out = "'";
  for (char c : text) {
    if (c == '\'') out += "''";
    else out += c;
  }
  out += "'";
  return out;
}

std::string sql_base_type(BaseKind base) {
  switch (base) {
    case BaseKind::String: return "TEXT";
    case BaseKind::Integer: return "INTEGER";
    case BaseKind::Float: return "REAL";
    case BaseKind::Boolean: return "BOOLEAN";
    case BaseKind::Uri:
    case BaseKind::Curie:
    case BaseKind::Date:
    case BaseKind::DateTime: return "TEXT";
  }
  return "TEXT";
}

struct SqlColumn {
  std::string name;
  std::string type;
  bool not_null = false;
  bool primary_key = false;
  std::vector<std::string> check_values;                       // enum ranges
  std::optional<std::pair<std::string, std::string>> foreign;  // table, column
};

struct SqlTable {
  std::string name;
  std::vector<SqlColumn> columns;
  std::vector<std::string> depends_on;  // referenced table names
};

// Primary-key column of a class table: the identifier slot, or the
// synthetic surrogate.
struct KeyInfo {
  std::string column;
  std::string type;
  bool surrogate = false;
};

KeyInfo class_key(const CompiledSchema& schema, const std::string& class_name) {
  if (const InducedSlot* id = schema.identifier_slot(class_name)) {
    std::string type = id->effective_range.kind == ElementKind::Type
                           ? sql_base_type(id->effective_range.base)
                           : "TEXT";
    return {id->name, type, false};
  }
  return {"_pk", "INTEGER", true};
}

std::string render_table(const SqlTable& table) {
  std::ostringstream out;
  out << "CREATE TABLE " << sql_identifier(table.name) << " (";
  bool first = true;
  for (const auto& col : table.columns) {
    if (!first) out << ", ";
    first = false;
    out << sql_identifier(col.name) << " " << col.type;
    if (col.not_null && !col.primary_key) out << " NOT NULL";
    if (col.primary_key) out << " PRIMARY KEY";
    if (!col.check_values.empty()) {
      out << " CHECK (" << sql_identifier(col.name) << " IN (";
      for (std::size_t i = 0; i < col.check_values.size(); ++i) {
        if (i) out << ", ";
        out << sql_literal(col.check_values[i]);
      }
      out << "))";
    }
  }
  for (const auto& col : table.columns) {
    if (!col.foreign) continue;
    out << ", FOREIGN KEY (" << sql_identifier(col.name) << ") REFERENCES "
        << sql_identifier(col.foreign->first) << " (" << sql_identifier(col.foreign->second)
        << ")";
  }
  out << ");";
  return out.str();
}

}  // namespace

std::string gen_sql_ddl(const CompiledSchema& schema, const GeneratorOptions& opts) {
  std::vector<SqlTable> class_tables;
  std::vector<SqlTable> aux_tables;

  auto fk_target = [&](const InducedSlot& slot) -> KeyInfo {
    const std::string& range_class = slot.effective_range.name;
    const ClassDefinition* range_def = schema.source.classes.find(range_class);
    if (range_def && range_def->abstract)
      throw CompileError("slot '" + slot.name + "' references abstract class '" + range_class +
                         "', which has no table");
    KeyInfo key = class_key(schema, range_class);
    if (key.surrogate && !opts.surrogate_keys)
      throw CompileError("slot '" + slot.name + "' references class '" + range_class +
                         "', which has no identifier slot (enable surrogate keys to allow this)");
    return key;
  };

  for (const auto& [class_name, cls] : schema.source.classes) {
    if (cls.abstract) continue;
    SqlTable table;
    table.name = class_name;
    KeyInfo key = class_key(schema, class_name);
    if (key.surrogate) table.columns.push_back({"_pk", "INTEGER", false, true, {}, {}});

    for (const auto& slot : *schema.induced_for(class_name)) {
      if (slot.multivalued) {
        SqlTable aux;
        aux.name = class_name + "_" + slot.name;
        aux.depends_on.push_back(class_name);
        SqlColumn owner{class_name + "_" + key.column, key.type, true, false, {}, {}};
        owner.foreign = {class_name, key.column};
        aux.columns.push_back(owner);

        SqlColumn value{slot.name, "TEXT", true, false, {}, {}};
        if (slot.effective_range.kind == ElementKind::Class) {
          KeyInfo target = fk_target(slot);
          value.type = target.type;
          value.foreign = {slot.effective_range.name, target.column};
          aux.depends_on.push_back(slot.effective_range.name);
        } else if (slot.effective_range.kind == ElementKind::Enum) {
          value.check_values = slot.effective_range.permissible_texts;
        } else {
          value.type = sql_base_type(slot.effective_range.base);
        }
        aux.columns.push_back(value);
        aux_tables.push_back(std::move(aux));
        continue;
      }

      SqlColumn col{slot.name, "TEXT", slot.required, slot.identifier, {}, {}};
      switch (slot.effective_range.kind) {
        case ElementKind::Type:
          col.type = sql_base_type(slot.effective_range.base);
          break;
        case ElementKind::Enum:
          col.check_values = slot.effective_range.permissible_texts;
          break;
        case ElementKind::Class: {
          KeyInfo target = fk_target(slot);
          col.type = target.type;
          col.foreign = {slot.effective_range.name, target.column};
          table.depends_on.push_back(slot.effective_range.name);
          break;
        }
        case ElementKind::Slot:
          break;  // unreachable post-compile
      }
      table.columns.push_back(std::move(col));
    }
    class_tables.push_back(std::move(table));
  }

  // Referenced tables first: stable topological order over FK dependencies,
  // falling back to declaration order for any cycle remainder.
  std::vector<SqlTable> ordered;
  std::vector<bool> placed(class_tables.size(), false);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < class_tables.size(); ++i) {
      if (placed[i]) continue;
      bool ready = true;
      for (const auto& dep : class_tables[i].depends_on) {
        if (dep == class_tables[i].name) continue;  // self-reference
        bool dep_placed = false;
        for (const auto& t : ordered)
          if (t.name == dep) dep_placed = true;
        if (!dep_placed) ready = false;
      }
      if (ready) {
        ordered.push_back(class_tables[i]);
        placed[i] = true;
        progress = true;
      }
    }
  }
  for (std::size_t i = 0; i < class_tables.size(); ++i)
    if (!placed[i]) ordered.push_back(class_tables[i]);

  std::ostringstream out;
  for (const auto& table : ordered) out << render_table(table) << "\n";
  for (const auto& table : aux_tables) out << render_table(table) << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// JSON-LD context
// ---------------------------------------------------------------------------

std::string gen_context(const CompiledSchema& schema) {
  json ctx = json::object();
  for (const auto& [name, uri] : schema.expanded_uris) {
    if (schema.prefix_map.contains(name)) continue;  // the prefix declaration wins
    ctx[name] = json{{"@id", uri}};
  }
  for (const auto& [prefix, base] : schema.prefix_map) ctx[prefix] = base;
  json doc;
  doc["@context"] = ctx;
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Markdown documentation
// ---------------------------------------------------------------------------

namespace {

std::string page_name(const std::string& element) {
  std::string out;
  for (char c : element) out += (c == ' ') ? '_' : c;
  return out + ".md";
}

std::string link(const std::string& element) {
  return "[" + element + "](" + page_name(element) + ")";
}

std::string cell(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string docs_uri_base(const CompiledSchema& schema) {
  if (schema.source.default_prefix) {
    if (const std::string* base = schema.source.prefixes.find(*schema.source.default_prefix))
      return *base;
  }
  std::string base = schema.source.id;
  if (!base.empty() && base.back() != '/' && base.back() != '#') base += "/";
  return base;
}

// Slot names in page order: first appearance across classes (declaration
// order), then schema-level slots used by no class.
std::vector<std::string> docs_slot_names(const CompiledSchema& schema) {
  std::vector<std::string> names;
  auto add = [&](const std::string& n) {
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  };
  for (const auto& [class_name, slots] : schema.induced) {
    (void)class_name;
    for (const auto& slot : slots) add(slot.name);
  }
  for (const auto& [slot_name, def] : schema.source.slots) {
    (void)def;
    add(slot_name);
  }
  return names;
}

// The first induced occurrence decides the headline range and description
// shown on a slot page.
const InducedSlot* first_occurrence(const CompiledSchema& schema, const std::string& slot_name) {
  for (const auto& [class_name, slots] : schema.induced) {
    (void)class_name;
    for (const auto& slot : slots)
      if (slot.name == slot_name) return &slot;
  }
  return nullptr;
}

std::string slot_source_echo(const CompiledSchema& schema, const std::string& slot_name,
                             const InducedSlot* occurrence) {
  // Declared definition: schema-level slot, else the first attribute.
  const SlotDefinition* declared = schema.source.slots.find(slot_name);
  if (!declared) {
    for (const auto& [class_name, cls] : schema.source.classes) {
      (void)class_name;
      if (const SlotDefinition* attr = cls.attributes.find(slot_name)) {
        declared = attr;
        break;
      }
    }
  }

  std::string expanded;
  if (occurrence && occurrence->slot_uri_expanded) expanded = *occurrence->slot_uri_expanded;
  else expanded = docs_uri_base(schema) + slot_name;
  Contraction contracted = contract_uri(schema.prefix_map, expanded);

  std::vector<std::string> domain_of;
  for (const auto& [class_name, slots] : schema.induced) {
    for (const auto& slot : slots)
      if (slot.name == slot_name) {
        domain_of.push_back(class_name);
        break;
      }
  }

  std::ostringstream out;
  out << "name: " << yaml_scalar(slot_name) << "\n";
  const std::optional<std::string>& description =
      declared && declared->description ? declared->description
                                        : (occurrence ? occurrence->description : std::nullopt);
  if (description) out << "description: " << yaml_scalar(*description) << "\n";
  out << "from_schema: " << yaml_scalar(schema.source.id) << "\n";
  out << "slot_uri: " << yaml_scalar(contracted.text) << "\n";
  out << "alias: " << yaml_scalar(slot_name) << "\n";
  if (!domain_of.empty()) {
    out << "domain_of:\n";
    for (const auto& c : domain_of) out << "- " << yaml_scalar(c) << "\n";
  }
  if (occurrence) out << "range: " << yaml_scalar(occurrence->effective_range.name) << "\n";
  else if (declared && declared->range) out << "range: " << yaml_scalar(*declared->range) << "\n";
  if (declared) {
    if (declared->required) out << "required: " << (*declared->required ? "true" : "false") << "\n";
    if (declared->multivalued)
      out << "multivalued: " << (*declared->multivalued ? "true" : "false") << "\n";
    if (declared->identifier)
      out << "identifier: " << (*declared->identifier ? "true" : "false") << "\n";
    if (declared->pattern) out << "pattern: " << yaml_scalar(*declared->pattern) << "\n";
    if (declared->minimum_value)
      out << "minimum_value: " << format_decimal(*declared->minimum_value) << "\n";
    if (declared->maximum_value)
      out << "maximum_value: " << format_decimal(*declared->maximum_value) << "\n";
    if (declared->unit) out << "unit: " << yaml_scalar(*declared->unit) << "\n";
  }
  return out.str();
}

}  // namespace

std::vector<std::pair<std::string, std::string>> gen_docs(const CompiledSchema& schema) {
  std::vector<std::pair<std::string, std::string>> pages;
  const std::vector<std::string> slot_names = docs_slot_names(schema);

  // Index page.
  {
    std::ostringstream out;
    out << "# " << schema.source.title.value_or(schema.source.name) << "\n\n";
    out << "Schema: " << schema.source.id << "\n";
    if (schema.source.version) out << "Version: " << *schema.source.version << "\n";
    if (schema.source.license) out << "License: " << *schema.source.license << "\n";
    if (!schema.source.classes.empty()) {
      out << "\n## Classes\n\n| Name | Description |\n| --- | --- |\n";
      for (const auto& [name, cls] : schema.source.classes)
        out << "| " << link(name) << " | " << cell(cls.description.value_or("")) << " |\n";
    }
    if (!slot_names.empty()) {
      out << "\n## Slots\n\n| Name | Description |\n| --- | --- |\n";
      for (const auto& name : slot_names) {
        const InducedSlot* occ = first_occurrence(schema, name);
        std::string description;
        if (occ && occ->description) description = *occ->description;
        else if (const SlotDefinition* def = schema.source.slots.find(name))
          description = def->description.value_or("");
        out << "| " << link(name) << " | " << cell(description) << " |\n";
      }
    }
    if (!schema.source.enums.empty()) {
      out << "\n## Enums\n\n| Name | Description |\n| --- | --- |\n";
      for (const auto& [name, en] : schema.source.enums)
        out << "| " << link(name) << " | " << cell(en.description.value_or("")) << " |\n";
    }
    if (!schema.source.types.empty()) {
      out << "\n## Types\n\n| Name | Description |\n| --- | --- |\n";
      for (const auto& [name, type] : schema.source.types)
        out << "| " << link(name) << " | " << cell(type.description.value_or("")) << " |\n";
    }
    pages.emplace_back("index.md", out.str());
  }

  // Class pages.
  for (const auto& [class_name, cls] : schema.source.classes) {
    std::ostringstream out;
    out << "[Index](index.md)\n\n# Class: " << class_name << "\n\n";
    if (cls.description) out << "Description: " << *cls.description << "\n\n";
    Contraction uri = contract_uri(schema.prefix_map, *schema.expanded_uris.find(class_name));
    out << "URI: " << uri.text << "\n";
    if (cls.abstract) out << "\nAbstract: yes\n";
    if (cls.is_a || !cls.mixins.empty()) {
      out << "\n## Inheritance\n\n";
      if (cls.is_a) out << "- is_a: " << link(*cls.is_a) << "\n";
      if (!cls.mixins.empty()) {
        std::vector<std::string> mixin_links;
        for (const auto& m : cls.mixins) mixin_links.push_back(link(m));
        out << "- mixins: " << join(mixin_links, ", ") << "\n";
      }
    }
    const auto& slots = *schema.induced_for(class_name);
    if (!slots.empty()) {
      out << "\n## Slots\n\n| Name | Cardinality and Range | Inheritance | Examples |\n"
          << "| --- | --- | --- | --- |\n";
      for (const auto& slot : slots) {
        out << "| " << cell(slot.name) << " | "
            << cardinality_text(slot.required, slot.multivalued) << " "
            << cell(range_display_name(slot.effective_range)) << " | "
            << inheritance_label_name(slot.inheritance) << " | "
            << cell(join(slot.examples, ", ")) << " |\n";
      }
      std::vector<std::string> slot_links;
      for (const auto& slot : slots) slot_links.push_back(link(slot.name));
      out << "\nSlot pages: " << join(slot_links, ", ") << "\n";
    }
    pages.emplace_back(page_name(class_name), out.str());
  }

  // Slot pages.
  for (const auto& slot_name : slot_names) {
    const InducedSlot* occ = first_occurrence(schema, slot_name);
    std::ostringstream out;
    out << "[Index](index.md)\n\n# Slot: " << slot_name << "\n\n";
    std::optional<std::string> description;
    if (occ && occ->description) description = occ->description;
    else if (const SlotDefinition* def = schema.source.slots.find(slot_name))
      description = def->description;
    if (description) out << "Description: " << *description << "\n\n";
    if (occ) out << "Range: " << occ->effective_range.name << "\n";
    else if (const SlotDefinition* def = schema.source.slots.find(slot_name)) {
      out << "Range: "
          << def->range.value_or(schema.source.default_range.value_or("string")) << "\n";
    }

    std::vector<std::string> owners;
    for (const auto& [class_name, slots] : schema.induced)
      for (const auto& slot : slots)
        if (slot.name == slot_name) {
          owners.push_back(class_name);
          break;
        }
    if (!owners.empty()) {
      out << "\n## Applicable Classes\n\n| Name | Description | Modifies Slot |\n"
          << "| --- | --- | --- |\n";
      for (const auto& owner : owners) {
        const ClassDefinition& cls = *schema.source.classes.find(owner);
        bool modifies = cls.slot_usage.contains(slot_name);
        out << "| " << link(owner) << " | " << cell(cls.description.value_or("")) << " | "
            << (modifies ? "yes" : "no") << " |\n";
      }
    }
    out << "\n## Source\n\n```yaml\n" << slot_source_echo(schema, slot_name, occ) << "```\n";
    pages.emplace_back(page_name(slot_name), out.str());
  }

  // Enum pages.
  for (const auto& [enum_name, en] : schema.source.enums) {
    std::ostringstream out;
    out << "[Index](index.md)\n\n# Enum: " << enum_name << "\n\n";
    if (en.description) out << "Description: " << *en.description << "\n\n";
    if (!en.permissible_values.empty()) {
      out << "## Permissible Values\n\n| Text | Description | Meaning |\n| --- | --- | --- |\n";
      for (const auto& [text, pv] : en.permissible_values)
        out << "| " << cell(text) << " | " << cell(pv.description.value_or("")) << " | "
            << cell(pv.meaning.value_or("")) << " |\n";
    }
    std::vector<std::string> users;
    for (const auto& slot_name : slot_names) {
      const InducedSlot* occ = first_occurrence(schema, slot_name);
      if (occ && occ->effective_range.kind == ElementKind::Enum &&
          occ->effective_range.name == enum_name)
        users.push_back(link(slot_name));
    }
    if (!users.empty()) out << "\nConstrains slots: " << join(users, ", ") << "\n";
    pages.emplace_back(page_name(enum_name), out.str());
  }

  // Type pages.
  for (const auto& [type_name, type] : schema.source.types) {
    std::ostringstream out;
    out << "[Index](index.md)\n\n# Type: " << type_name << "\n\n";
    if (type.description) out << "Description: " << *type.description << "\n\n";
    out << "Base: " << base_kind_name(type.base) << "\n";
    if (type.pattern) out << "\nPattern: `" << *type.pattern << "`\n";
    pages.emplace_back(page_name(type_name), out.str());
  }

  return pages;
}

}  // namespace schemaforge
