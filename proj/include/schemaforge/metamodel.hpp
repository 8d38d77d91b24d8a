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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schemaforge/diagnostics.hpp"

namespace schemaforge {

/// Insertion-ordered string-keyed map. Schema element maps preserve document
/// order, so a plain std::map would lose information; lookups are linear,
/// which is fine at schema scale.
template <typename T>
class ordered_map {
 public:
  using entry_type = std::pair<std::string, T>;
  using const_iterator = typename std::vector<entry_type>::const_iterator;
  using iterator = typename std::vector<entry_type>::iterator;

  // Returns false (and leaves the map unchanged) if the key is already present.
  bool insert(std::string key, T value) {
    if (contains(key)) return false;
    entries_.emplace_back(std::move(key), std::move(value));
    return true;
  }

  // Inserts or replaces; returns true if an existing entry was replaced.
  bool assign(std::string key, T value) {
    for (auto& e : entries_) {
      if (e.first == key) {
        e.second = std::move(value);
        return true;
      }
    }
    entries_.emplace_back(std::move(key), std::move(value));
    return false;
  }

  const T* find(std::string_view key) const {
    for (const auto& e : entries_)
      if (e.first == key) return &e.second;
    return nullptr;
  }

  T* find(std::string_view key) {
    for (auto& e : entries_)
      if (e.first == key) return &e.second;
    return nullptr;
  }

  bool contains(std::string_view key) const { return find(key) != nullptr; }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }
  iterator begin() { return entries_.begin(); }
  iterator end() { return entries_.end(); }

  std::vector<std::string> keys() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.first);
    return out;
  }

  bool operator==(const ordered_map&) const = default;

 private:
  std::vector<entry_type> entries_;
};

/// Declared prefix -> absolute URI base associations.
using PrefixMap = ordered_map<std::string>;

// ---------------------------------------------------------------------------
// Element definitions
// ---------------------------------------------------------------------------

/// The closed set of scalar kinds a type definition can bottom out in.
enum class BaseKind { String, Integer, Float, Boolean, Uri, Curie, Date, DateTime };

std::string_view base_kind_name(BaseKind kind);
std::optional<BaseKind> base_kind_from_name(std::string_view name);

/// Alignment predicates for element-to-vocabulary mappings. Mappings are
/// metadata only: they are echoed into docs and context output but impose no
/// validation semantics.
enum class MappingPredicate { Exact, Close, Broad, Narrow, Related };

std::string_view mapping_predicate_name(MappingPredicate p);

struct Mapping {
  MappingPredicate predicate = MappingPredicate::Exact;
  std::string target;  // CURIE of the external term

  bool operator==(const Mapping&) const = default;
};

struct TypeDefinition {
  std::string name;
  BaseKind base = BaseKind::String;
  std::optional<std::string> pattern;
  std::optional<std::string> description;

  bool operator==(const TypeDefinition&) const = default;
};

struct PermissibleValue {
  std::string text;
  std::optional<std::string> description;
  std::optional<std::string> meaning;  // CURIE of the ontology term

  bool operator==(const PermissibleValue&) const = default;
};

struct EnumDefinition {
  std::string name;
  std::optional<std::string> description;
  ordered_map<PermissibleValue> permissible_values;

  bool operator==(const EnumDefinition&) const = default;
};

/// A slot definition, also used (with all fields optional in spirit) as a
/// slot_usage overlay where only explicitly present fields override.
/// Booleans are tri-state for exactly that reason: absent, false, and true
/// are distinct in an overlay.
struct SlotDefinition {
  std::string name;
  std::optional<std::string> description;
  std::optional<std::string> is_a;   // parent slot
  std::optional<std::string> range;  // type, class, or enum name
  std::optional<bool> required;
  std::optional<bool> multivalued;
  std::optional<bool> identifier;
  std::optional<std::string> pattern;
  std::optional<double> minimum_value;
  std::optional<double> maximum_value;
  std::optional<std::string> unit;  // free-text annotation
  std::optional<std::string> slot_uri;
  std::vector<std::string> examples;
  std::vector<Mapping> mappings;

  bool operator==(const SlotDefinition&) const = default;
};

struct ClassDefinition {
  std::string name;
  std::optional<std::string> description;
  std::optional<std::string> is_a;
  std::vector<std::string> mixins;
  bool abstract = false;
  std::vector<std::string> slots;            // references to schema-level slots
  ordered_map<SlotDefinition> attributes;    // inline slots scoped to this class
  ordered_map<SlotDefinition> slot_usage;    // partial overrides, keyed by slot name
  std::optional<std::string> class_uri;      // CURIE
  std::vector<Mapping> mappings;

  bool operator==(const ClassDefinition&) const = default;
};

// ---------------------------------------------------------------------------
// Schema
// ---------------------------------------------------------------------------

enum class ElementKind { Class, Slot, Enum, Type };

std::string_view element_kind_name(ElementKind kind);

/// The parsed, unresolved model. Immutable by convention once loaded; all
/// downstream modules take it by const reference.
struct SchemaDefinition {
  std::string id;    // absolute URI
  std::string name;  // identifier string
  std::optional<std::string> title;
  std::optional<std::string> license;
  std::optional<std::string> version;
  PrefixMap prefixes;
  std::optional<std::string> default_prefix;  // references a declared prefix
  std::optional<std::string> default_range;   // type name; absent means "string"
  std::vector<std::string> imports;
  ordered_map<ClassDefinition> classes;
  ordered_map<SlotDefinition> slots;
  ordered_map<EnumDefinition> enums;
  ordered_map<TypeDefinition> types;

  bool operator==(const SchemaDefinition&) const = default;

  /// Resolves a name to the unique element kind it denotes, if any.
  std::optional<ElementKind> element_kind(std::string_view element_name) const;
};

// ---------------------------------------------------------------------------
// Identifier syntax helpers
// ---------------------------------------------------------------------------

/// Element names: [A-Za-z_][A-Za-z0-9_ ]* with internal single spaces only;
/// compared byte-exact, no case folding.
bool is_valid_element_name(std::string_view name);

// Anchored syntactic patterns for the uri/curie/date/datetime base kinds.
// The validator and the JSON Schema generator both use these, so the two
// validation routes cannot drift apart.
namespace syntax {
inline constexpr std::string_view kUriPattern = R"(^[A-Za-z][A-Za-z0-9+.\-]*:[^\s]+$)";
inline constexpr std::string_view kCuriePattern = R"(^[^:\s]+:[^:\s]*$)";
inline constexpr std::string_view kDatePattern = R"(^\d{4}-\d{2}-\d{2}$)";
inline constexpr std::string_view kDateTimePattern =
    R"(^\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}(\.\d+)?(Z|[+-]\d{2}:\d{2})?$)";
}  // namespace syntax

/// Absolute URI check: scheme, colon, no whitespace. Syntactic only.
bool is_absolute_uri(std::string_view text);

/// Splits "prefix:local" at its single colon. The prefix must be non-empty
/// and contain no whitespace; the local part may be empty.
std::optional<std::pair<std::string, std::string>> split_curie(std::string_view text);

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Checks every local structural invariant of a schema value: id and prefix
/// URI syntax, the element-name grammar, and name uniqueness across the four
/// element maps. Referential invariants (ranges, inheritance) belong to
/// compilation. Throws InvariantError; never repairs.
void validate_structure(const SchemaDefinition& schema);

/// The schema of built-in types that every schema implicitly imports first:
/// one TypeDefinition per base kind plus the standard prefix declarations.
/// Deterministic across calls.
const SchemaDefinition& builtin_schema();

/// Import reference that resolves to builtin_schema() without touching the
/// filesystem. Recognized in `imports:` lists, though the built-ins are
/// merged implicitly whether or not it is spelled out.
inline constexpr std::string_view kBuiltinTypesImport = "schemaforge:types";

}  // namespace schemaforge
