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

#include "schemaforge/loader.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "httplib.h"

namespace schemaforge {

// ---------------------------------------------------------------------------
// Scalar formatting
// ---------------------------------------------------------------------------

std::string format_decimal(double value) {
  if (value == static_cast<long long>(value) && std::abs(value) < 1e15) {
    return std::to_string(static_cast<long long>(value));
  }
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, end);
}

namespace {

bool looks_like_number(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  bool digits = false, dot = false, exp = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = true;
    } else if (c == '.' && !dot && !exp) {
      dot = true;
    } else if ((c == 'e' || c == 'E') && digits && !exp) {
      exp = true;
      if (i + 1 < s.size() && (s[i + 1] == '+' || s[i + 1] == '-')) ++i;
    } else {
      return false;
    }
  }
  return digits;
}

bool looks_like_keyword(std::string_view s) {
  static constexpr std::string_view kWords[] = {"true", "false", "yes",  "no", "on",
                                                "off",  "null",  "~",    "y",  "n",
                                                "True", "False", "Null", "TRUE", "FALSE",
                                                "NULL", "Yes",   "No",   "On", "Off"};
  for (auto w : kWords)
    if (s == w) return true;
  return false;
}

bool plain_scalar_safe(std::string_view s, bool key_position) {
  if (s.empty()) return false;
  if (looks_like_keyword(s) || looks_like_number(s)) return false;
  char first = s.front();
  if (std::strchr("-?:,[]{}#&*!|>'\"%@` \t", first)) return false;
  if (s.back() == ' ' || s.back() == ':') return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '\n' || c == '\t' || c == '"' || c == '\\') return false;
    if (static_cast<unsigned char>(c) < 0x20) return false;
    if (c == ':' && (key_position || (i + 1 < s.size() && s[i + 1] == ' '))) return false;
    if (c == '#' && i > 0 && s[i - 1] == ' ') return false;
  }
  return true;
}

std::string quote_scalar(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\x%02x", static_cast<unsigned char>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

std::string yaml_key(std::string_view text) {
  return plain_scalar_safe(text, /*key_position=*/true) ? std::string(text) : quote_scalar(text);
}

}  // namespace

std::string yaml_scalar(std::string_view text) {
  return plain_scalar_safe(text, /*key_position=*/false) ? std::string(text) : quote_scalar(text);
}

// ---------------------------------------------------------------------------
// Canonical serializer
// ---------------------------------------------------------------------------

namespace {

class Emitter {
 public:
  std::string take() { return std::move(out_); }

  void line(int indent, std::string_view text) {
    out_.append(static_cast<std::size_t>(indent) * 2, ' ');
    out_.append(text);
    out_.push_back('\n');
  }

  void kv(int indent, std::string_view key, std::string_view value) {
    line(indent, yaml_key(key) + ": " + yaml_scalar(value));
  }

  void kv_opt(int indent, std::string_view key, const std::optional<std::string>& value) {
    if (value) kv(indent, key, *value);
  }

  void kv_bool(int indent, std::string_view key, bool value) {
    line(indent, yaml_key(key) + ": " + (value ? "true" : "false"));
  }

  void kv_number(int indent, std::string_view key, double value) {
    line(indent, yaml_key(key) + ": " + format_decimal(value));
  }

  void map_key(int indent, std::string_view key) { line(indent, yaml_key(key) + ":"); }

  void seq(int indent, std::string_view key, const std::vector<std::string>& items) {
    if (items.empty()) return;
    map_key(indent, key);
    for (const auto& item : items) line(indent, "- " + yaml_scalar(item));
  }

 private:
  std::string out_;
};

void emit_mappings(Emitter& e, int indent, const std::vector<Mapping>& mappings) {
  for (auto predicate : {MappingPredicate::Exact, MappingPredicate::Close,
                         MappingPredicate::Broad, MappingPredicate::Narrow,
                         MappingPredicate::Related}) {
    std::vector<std::string> targets;
    for (const auto& m : mappings)
      if (m.predicate == predicate) targets.push_back(m.target);
    e.seq(indent, std::string(mapping_predicate_name(predicate)) + "_mappings", targets);
  }
}

void emit_slot_body(Emitter& e, int indent, const SlotDefinition& slot) {
  e.kv_opt(indent, "description", slot.description);
  e.kv_opt(indent, "is_a", slot.is_a);
  e.kv_opt(indent, "range", slot.range);
  if (slot.required) e.kv_bool(indent, "required", *slot.required);
  if (slot.multivalued) e.kv_bool(indent, "multivalued", *slot.multivalued);
  if (slot.identifier) e.kv_bool(indent, "identifier", *slot.identifier);
  e.kv_opt(indent, "pattern", slot.pattern);
  if (slot.minimum_value) e.kv_number(indent, "minimum_value", *slot.minimum_value);
  if (slot.maximum_value) e.kv_number(indent, "maximum_value", *slot.maximum_value);
  e.kv_opt(indent, "unit", slot.unit);
  e.kv_opt(indent, "slot_uri", slot.slot_uri);
  e.seq(indent, "examples", slot.examples);
  emit_mappings(e, indent, slot.mappings);
}

void emit_slot_map(Emitter& e, int indent, std::string_view key,
                   const ordered_map<SlotDefinition>& slots) {
  if (slots.empty()) return;
  e.map_key(indent, key);
  for (const auto& [name, slot] : slots) {
    e.map_key(indent + 1, name);
    emit_slot_body(e, indent + 2, slot);
  }
}

}  // namespace

std::string serialize_schema(const SchemaDefinition& schema) {
  Emitter e;
  e.kv(0, "id", schema.id);
  e.kv(0, "name", schema.name);
  e.kv_opt(0, "title", schema.title);
  e.kv_opt(0, "license", schema.license);
  e.kv_opt(0, "version", schema.version);
  if (!schema.prefixes.empty()) {
    e.map_key(0, "prefixes");
    for (const auto& [prefix, base] : schema.prefixes) e.kv(1, prefix, base);
  }
  e.kv_opt(0, "default_prefix", schema.default_prefix);
  e.kv_opt(0, "default_range", schema.default_range);
  e.seq(0, "imports", schema.imports);

  if (!schema.types.empty()) {
    e.map_key(0, "types");
    for (const auto& [name, type] : schema.types) {
      e.map_key(1, name);
      e.kv(2, "base", base_kind_name(type.base));
      e.kv_opt(2, "pattern", type.pattern);
      e.kv_opt(2, "description", type.description);
    }
  }
  if (!schema.enums.empty()) {
    e.map_key(0, "enums");
    for (const auto& [name, en] : schema.enums) {
      e.map_key(1, name);
      e.kv_opt(2, "description", en.description);
      if (!en.permissible_values.empty()) {
        e.map_key(2, "permissible_values");
        for (const auto& [text, pv] : en.permissible_values) {
          if (!pv.description && !pv.meaning) {
            e.line(3, yaml_key(text) + ":");
          } else {
            e.map_key(3, text);
            e.kv_opt(4, "description", pv.description);
            e.kv_opt(4, "meaning", pv.meaning);
          }
        }
      }
    }
  }
  if (!schema.slots.empty()) {
    e.map_key(0, "slots");
    for (const auto& [name, slot] : schema.slots) {
      e.map_key(1, name);
      emit_slot_body(e, 2, slot);
    }
  }
  if (!schema.classes.empty()) {
    e.map_key(0, "classes");
    for (const auto& [name, cls] : schema.classes) {
      e.map_key(1, name);
      e.kv_opt(2, "description", cls.description);
      e.kv_opt(2, "is_a", cls.is_a);
      e.seq(2, "mixins", cls.mixins);
      if (cls.abstract) e.kv_bool(2, "abstract", true);
      e.kv_opt(2, "class_uri", cls.class_uri);
      emit_mappings(e, 2, cls.mappings);
      e.seq(2, "slots", cls.slots);
      emit_slot_map(e, 2, "attributes", cls.attributes);
      emit_slot_map(e, 2, "slot_usage", cls.slot_usage);
    }
  }
  return e.take();
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void fail_at(const YAML::Node& node, const std::string& msg) {
  throw ParseError(msg, node.Mark().line + 1, node.Mark().column + 1);
}

std::string node_string(const YAML::Node& node, const char* what) {
  if (!node.IsScalar()) fail_at(node, std::string("expected a scalar value for ") + what);
  return node.as<std::string>();
}

bool node_bool(const YAML::Node& node, const char* what) {
  if (!node.IsScalar()) fail_at(node, std::string("expected a boolean for ") + what);
  try {
    return node.as<bool>();
  } catch (const YAML::Exception&) {
    fail_at(node, std::string("expected a boolean for ") + what + ", got '" +
                      node.as<std::string>() + "'");
  }
}

double node_number(const YAML::Node& node, const char* what) {
  if (!node.IsScalar()) fail_at(node, std::string("expected a number for ") + what);
  try {
    return node.as<double>();
  } catch (const YAML::Exception&) {
    fail_at(node, std::string("expected a number for ") + what + ", got '" +
                      node.as<std::string>() + "'");
  }
}

std::vector<std::string> node_string_list(const YAML::Node& node, const char* what) {
  std::vector<std::string> out;
  if (node.IsNull()) return out;
  if (node.IsScalar()) {  // a single scalar is accepted as a one-element list
    out.push_back(node.as<std::string>());
    return out;
  }
  if (!node.IsSequence()) fail_at(node, std::string("expected a list for ") + what);
  for (const auto& item : node) out.push_back(node_string(item, what));
  return out;
}

void unknown_key(Diagnostics& diags, const std::string& context, const std::string& key,
                 const YAML::Node& node) {
  warn(diags,
       "unrecognized key '" + key + "' (line " + std::to_string(node.Mark().line + 1) + ")",
       context);
}

bool read_mapping_list(const std::string& key, const YAML::Node& value,
                       std::vector<Mapping>& out) {
  static const std::pair<std::string_view, MappingPredicate> kLists[] = {
      {"exact_mappings", MappingPredicate::Exact},   {"close_mappings", MappingPredicate::Close},
      {"broad_mappings", MappingPredicate::Broad},   {"narrow_mappings", MappingPredicate::Narrow},
      {"related_mappings", MappingPredicate::Related}};
  for (const auto& [list_key, predicate] : kLists) {
    if (key == list_key) {
      for (const auto& target : node_string_list(value, key.c_str()))
        out.push_back({predicate, target});
      return true;
    }
  }
  return false;
}

SlotDefinition parse_slot_node(const std::string& name, const YAML::Node& node,
                               const std::string& context, Diagnostics& diags) {
  SlotDefinition slot;
  slot.name = name;
  if (node.IsNull() || !node.IsDefined()) return slot;
  if (!node.IsMap()) fail_at(node, "slot '" + name + "' must be a mapping");
  for (const auto& entry : node) {
    const std::string key = entry.first.as<std::string>();
    const YAML::Node& value = entry.second;
    if (key == "description") slot.description = node_string(value, "description");
    else if (key == "is_a") slot.is_a = node_string(value, "is_a");
    else if (key == "range") slot.range = node_string(value, "range");
    else if (key == "required") slot.required = node_bool(value, "required");
    else if (key == "multivalued") slot.multivalued = node_bool(value, "multivalued");
    else if (key == "identifier") slot.identifier = node_bool(value, "identifier");
    else if (key == "pattern") slot.pattern = node_string(value, "pattern");
    else if (key == "minimum_value") slot.minimum_value = node_number(value, "minimum_value");
    else if (key == "maximum_value") slot.maximum_value = node_number(value, "maximum_value");
    else if (key == "unit") slot.unit = node_string(value, "unit");
    else if (key == "slot_uri") slot.slot_uri = node_string(value, "slot_uri");
    else if (key == "examples") slot.examples = node_string_list(value, "examples");
    else if (read_mapping_list(key, value, slot.mappings)) {}
    else unknown_key(diags, context, key, entry.first);
  }
  return slot;
}

void parse_slot_map(const YAML::Node& node, const std::string& context,
                    ordered_map<SlotDefinition>& out, Diagnostics& diags) {
  if (node.IsNull()) return;
  if (!node.IsMap()) fail_at(node, context + " must be a mapping");
  for (const auto& entry : node) {
    std::string name = entry.first.as<std::string>();
    if (!out.insert(name, parse_slot_node(name, entry.second, context + "." + name, diags)))
      fail_at(entry.first, "duplicate slot name '" + name + "' in " + context);
  }
}

ClassDefinition parse_class_node(const std::string& name, const YAML::Node& node,
                                 Diagnostics& diags) {
  ClassDefinition cls;
  cls.name = name;
  const std::string context = "classes." + name;
  if (node.IsNull() || !node.IsDefined()) return cls;
  if (!node.IsMap()) fail_at(node, "class '" + name + "' must be a mapping");
  for (const auto& entry : node) {
    const std::string key = entry.first.as<std::string>();
    const YAML::Node& value = entry.second;
    if (key == "description") cls.description = node_string(value, "description");
    else if (key == "is_a") cls.is_a = node_string(value, "is_a");
    else if (key == "mixins") cls.mixins = node_string_list(value, "mixins");
    else if (key == "abstract") cls.abstract = node_bool(value, "abstract");
    else if (key == "slots") cls.slots = node_string_list(value, "slots");
    else if (key == "attributes") parse_slot_map(value, context + ".attributes", cls.attributes, diags);
    else if (key == "slot_usage") parse_slot_map(value, context + ".slot_usage", cls.slot_usage, diags);
    else if (key == "class_uri") cls.class_uri = node_string(value, "class_uri");
    else if (read_mapping_list(key, value, cls.mappings)) {}
    else unknown_key(diags, context, key, entry.first);
  }
  return cls;
}

EnumDefinition parse_enum_node(const std::string& name, const YAML::Node& node,
                               Diagnostics& diags) {
  EnumDefinition en;
  en.name = name;
  const std::string context = "enums." + name;
  if (node.IsNull() || !node.IsDefined()) return en;
  if (!node.IsMap()) fail_at(node, "enum '" + name + "' must be a mapping");
  for (const auto& entry : node) {
    const std::string key = entry.first.as<std::string>();
    const YAML::Node& value = entry.second;
    if (key == "description") {
      en.description = node_string(value, "description");
    } else if (key == "permissible_values") {
      if (value.IsNull()) continue;
      if (!value.IsMap()) fail_at(value, "permissible_values must be a mapping");
      for (const auto& pv_entry : value) {
        PermissibleValue pv;
        pv.text = pv_entry.first.as<std::string>();
        const YAML::Node& body = pv_entry.second;
        if (body.IsMap()) {
          for (const auto& field : body) {
            const std::string fkey = field.first.as<std::string>();
            if (fkey == "description") pv.description = node_string(field.second, "description");
            else if (fkey == "meaning") pv.meaning = node_string(field.second, "meaning");
            else unknown_key(diags, context + "." + pv.text, fkey, field.first);
          }
        } else if (!body.IsNull() && body.IsDefined()) {
          fail_at(body, "permissible value '" + pv.text + "' must be empty or a mapping");
        }
        if (!en.permissible_values.insert(pv.text, pv))
          fail_at(pv_entry.first, "duplicate permissible value '" + pv.text + "' in " + name);
      }
    } else {
      unknown_key(diags, context, key, entry.first);
    }
  }
  return en;
}

TypeDefinition parse_type_node(const std::string& name, const YAML::Node& node,
                               Diagnostics& diags) {
  TypeDefinition type;
  type.name = name;
  const std::string context = "types." + name;
  if (!node.IsMap()) fail_at(node, "type '" + name + "' must be a mapping with a base");
  bool have_base = false;
  for (const auto& entry : node) {
    const std::string key = entry.first.as<std::string>();
    const YAML::Node& value = entry.second;
    if (key == "base") {
      const std::string base = node_string(value, "base");
      auto kind = base_kind_from_name(base);
      if (!kind) fail_at(value, "type '" + name + "' has unknown base kind '" + base + "'");
      type.base = *kind;
      have_base = true;
    } else if (key == "pattern") {
      type.pattern = node_string(value, "pattern");
    } else if (key == "description") {
      type.description = node_string(value, "description");
    } else {
      unknown_key(diags, context, key, entry.first);
    }
  }
  if (!have_base) fail_at(node, "type '" + name + "' is missing its base kind");
  return type;
}

}  // namespace

SchemaDefinition parse_schema(std::string_view text, Diagnostics& diags) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
  if (root.IsNull() || !root.IsDefined()) throw ParseError("missing required key: id");
  if (!root.IsMap()) fail_at(root, "top level of a schema document must be a mapping");

  SchemaDefinition schema;
  std::vector<std::string> seen_keys;
  for (const auto& entry : root) {
    const std::string key = entry.first.as<std::string>();
    if (std::find(seen_keys.begin(), seen_keys.end(), key) != seen_keys.end())
      fail_at(entry.first, "duplicate top-level key '" + key + "'");
    seen_keys.push_back(key);
    const YAML::Node& value = entry.second;
    if (key == "id") schema.id = node_string(value, "id");
    else if (key == "name") schema.name = node_string(value, "name");
    else if (key == "title") schema.title = node_string(value, "title");
    else if (key == "license") schema.license = node_string(value, "license");
    else if (key == "version") schema.version = node_string(value, "version");
    else if (key == "default_prefix") schema.default_prefix = node_string(value, "default_prefix");
    else if (key == "default_range") schema.default_range = node_string(value, "default_range");
    else if (key == "imports") schema.imports = node_string_list(value, "imports");
    else if (key == "prefixes") {
      if (value.IsNull()) continue;
      if (!value.IsMap()) fail_at(value, "prefixes must be a mapping");
      for (const auto& p : value) {
        std::string prefix = p.first.as<std::string>();
        if (!schema.prefixes.insert(prefix, node_string(p.second, "prefix base")))
          fail_at(p.first, "duplicate prefix '" + prefix + "'");
      }
    } else if (key == "classes") {
      if (value.IsNull()) continue;
      if (!value.IsMap()) fail_at(value, "classes must be a mapping");
      for (const auto& c : value) {
        std::string name = c.first.as<std::string>();
        if (!schema.classes.insert(name, parse_class_node(name, c.second, diags)))
          fail_at(c.first, "duplicate element name '" + name + "'");
      }
    } else if (key == "slots") {
      if (value.IsNull()) continue;
      if (!value.IsMap()) fail_at(value, "slots must be a mapping");
      for (const auto& s : value) {
        std::string name = s.first.as<std::string>();
        if (!schema.slots.insert(name, parse_slot_node(name, s.second, "slots." + name, diags)))
          fail_at(s.first, "duplicate element name '" + name + "'");
      }
    } else if (key == "enums") {
      if (value.IsNull()) continue;
      if (!value.IsMap()) fail_at(value, "enums must be a mapping");
      for (const auto& en : value) {
        std::string name = en.first.as<std::string>();
        if (!schema.enums.insert(name, parse_enum_node(name, en.second, diags)))
          fail_at(en.first, "duplicate element name '" + name + "'");
      }
    } else if (key == "types") {
      if (value.IsNull()) continue;
      if (!value.IsMap()) fail_at(value, "types must be a mapping");
      for (const auto& t : value) {
        std::string name = t.first.as<std::string>();
        if (!schema.types.insert(name, parse_type_node(name, t.second, diags)))
          fail_at(t.first, "duplicate element name '" + name + "'");
      }
    } else {
      unknown_key(diags, "schema", key, entry.first);
    }
  }
  if (schema.id.empty()) throw ParseError("missing required key: id");
  if (schema.name.empty()) throw ParseError("missing required key: name");
  validate_structure(schema);
  return schema;
}

// ---------------------------------------------------------------------------
// Imports
// ---------------------------------------------------------------------------

std::vector<std::filesystem::path> ImportResolver::env_search_roots() {
  std::vector<std::filesystem::path> roots;
  if (const char* env = std::getenv("SCHEMAFORGE_PATH")) {
    std::string entry;
    std::istringstream stream{std::string(env)};
    while (std::getline(stream, entry, ':'))
      if (!entry.empty()) roots.emplace_back(entry);
  }
  return roots;
}

namespace {

bool is_remote_ref(std::string_view ref) {
  return ref.rfind("http://", 0) == 0 || ref.rfind("https://", 0) == 0;
}

SchemaDefinition fetch_remote(const std::string& ref, Diagnostics& diags) {
  std::size_t scheme_end = ref.find("://");
  std::size_t path_start = ref.find('/', scheme_end + 3);
  std::string origin = path_start == std::string::npos ? ref : ref.substr(0, path_start);
  std::string path = path_start == std::string::npos ? "/" : ref.substr(path_start);
  httplib::Client client(origin);
  client.set_follow_location(true);
  auto res = client.Get(path);
  if (!res || res->status != 200)
    throw ImportError("cannot fetch remote import '" + ref + "'" +
                      (res ? " (status " + std::to_string(res->status) + ")" : ""));
  return parse_schema(res->body, diags);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ImportError("cannot read file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

const SchemaDefinition& ImportResolver::load(const std::string& ref, Diagnostics& diags) {
  if (auto it = cache_.find(ref); it != cache_.end()) return it->second;

  if (is_remote_ref(ref)) {
    if (!allow_remote)
      throw ImportError("remote import '" + ref + "' requires enabling remote fetches");
    return cache_.emplace(ref, fetch_remote(ref, diags)).first->second;
  }

  std::filesystem::path candidate(ref);
  if (!candidate.has_extension()) candidate += ".yaml";
  std::vector<std::filesystem::path> probes;
  if (candidate.is_absolute()) {
    probes.push_back(candidate);
  } else {
    for (const auto& root : search_roots) probes.push_back(root / candidate);
  }
  for (const auto& p : probes) {
    std::error_code ec;
    if (std::filesystem::exists(p, ec)) {
      SchemaDefinition parsed = parse_schema(read_text_file(p), diags);
      return cache_.emplace(ref, std::move(parsed)).first->second;
    }
  }
  throw ImportError("cannot resolve import '" + ref + "' (searched " +
                    std::to_string(probes.size()) + " locations)");
}

void merge_prefixes(PrefixMap& into, const PrefixMap& from) {
  for (const auto& [prefix, base] : from) {
    if (const std::string* existing = into.find(prefix)) {
      if (*existing != base)
        throw ConflictError("prefix '" + prefix + "' declared with conflicting bases: '" +
                            *existing + "' and '" + base + "'");
    } else {
      into.insert(prefix, base);
    }
  }
}

PrefixMap build_prefix_map(const SchemaDefinition& schema) {
  for (const auto& [prefix, base] : schema.prefixes)
    if (!is_absolute_uri(base))
      throw ConflictError("prefix '" + prefix + "' has a non-URI base: '" + base + "'");
  return schema.prefixes;
}

namespace {

struct ClosureBuilder {
  ImportResolver& resolver;
  Diagnostics& diags;
  std::vector<const SchemaDefinition*> order;
  std::vector<std::string> included;
  std::vector<std::string> stack;

  void visit(const std::string& ref) {
    if (ref == kBuiltinTypesImport) return;  // implicitly first in every closure
    if (std::find(included.begin(), included.end(), ref) != included.end()) return;
    if (auto at = std::find(stack.begin(), stack.end(), ref); at != stack.end()) {
      std::string path;
      for (auto it = at; it != stack.end(); ++it) path += *it + " -> ";
      throw CycleError("import cycle: " + path + ref);
    }
    stack.push_back(ref);
    const SchemaDefinition& doc = resolver.load(ref, diags);
    for (const auto& imp : doc.imports) visit(imp);
    stack.pop_back();
    included.push_back(ref);
    order.push_back(&doc);
  }
};

template <typename T>
void merge_element_map(SchemaDefinition& target, ordered_map<T>& target_map,
                       const ordered_map<T>& source, ElementKind kind,
                       const std::string& source_name, Diagnostics& diags) {
  for (const auto& [name, def] : source) {
    if (auto existing = target.element_kind(name); existing && *existing != kind)
      throw ConflictError("element '" + name + "' is declared as a " +
                          std::string(element_kind_name(*existing)) + " and as a " +
                          std::string(element_kind_name(kind)) + " across the import closure");
    if (T* prior = target_map.find(name)) {
      if (!(*prior == def)) {
        warn(diags,
             std::string(element_kind_name(kind)) + " '" + name +
                 "' overrides an earlier definition",
             source_name);
        *prior = def;
      }
    } else {
      target_map.insert(name, def);
    }
  }
}

void merge_into(SchemaDefinition& target, const SchemaDefinition& source, Diagnostics& diags) {
  merge_prefixes(target.prefixes, source.prefixes);
  merge_element_map(target, target.classes, source.classes, ElementKind::Class, source.name, diags);
  merge_element_map(target, target.slots, source.slots, ElementKind::Slot, source.name, diags);
  merge_element_map(target, target.enums, source.enums, ElementKind::Enum, source.name, diags);
  merge_element_map(target, target.types, source.types, ElementKind::Type, source.name, diags);
}

}  // namespace

SchemaDefinition resolve_imports(const SchemaDefinition& root, ImportResolver& resolver,
                                 Diagnostics& diags) {
  ClosureBuilder closure{resolver, diags, {}, {}, {}};
  closure.stack.push_back(root.name);  // so a cycle back into the root is reported from it
  for (const auto& ref : root.imports) closure.visit(ref);

  SchemaDefinition merged;
  merged.id = root.id;
  merged.name = root.name;
  merged.title = root.title;
  merged.license = root.license;
  merged.version = root.version;
  merged.default_prefix = root.default_prefix;
  merged.default_range = root.default_range;
  merged.imports = root.imports;

  merge_into(merged, builtin_schema(), diags);
  for (const SchemaDefinition* doc : closure.order) merge_into(merged, *doc, diags);
  merge_into(merged, root, diags);

  validate_structure(merged);
  return merged;
}

SchemaDefinition load_schema_file(const std::filesystem::path& path, Diagnostics& diags,
                                  bool allow_remote) {
  std::string text = read_text_file(path);
  SchemaDefinition root = parse_schema(text, diags);
  ImportResolver resolver;
  resolver.allow_remote = allow_remote;
  if (path.has_parent_path()) resolver.search_roots.push_back(path.parent_path());
  else resolver.search_roots.push_back(".");
  for (auto& extra : ImportResolver::env_search_roots())
    resolver.search_roots.push_back(std::move(extra));
  return resolve_imports(root, resolver, diags);
}

}  // namespace schemaforge
