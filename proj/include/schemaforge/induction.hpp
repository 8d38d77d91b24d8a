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
#include <vector>

#include "schemaforge/metamodel.hpp"

namespace schemaforge {

/// A slot's range after resolution, with enough detail for value checking to
/// be self-contained: base kind and pattern for types, permissible texts for
/// enums.
struct ResolvedRange {
  ElementKind kind = ElementKind::Type;
  std::string name;
  BaseKind base = BaseKind::String;                // kind == Type
  std::optional<std::string> type_pattern;         // kind == Type
  std::vector<std::string> permissible_texts;      // kind == Enum

  bool operator==(const ResolvedRange&) const = default;
};

enum class InheritanceLabel { Direct, Inherited, Overridden };

std::string_view inheritance_label_name(InheritanceLabel label);

/// The fully resolved effective slot a class has after inheritance,
/// attributes, and slot_usage are merged. Every field holds a concrete
/// value; tri-state booleans are gone.
struct InducedSlot {
  std::string name;
  std::string owner_class;
  ResolvedRange effective_range;
  bool required = false;
  bool multivalued = false;
  bool identifier = false;
  std::optional<std::string> pattern;  // slot-level; falls back to the range type's pattern
  std::optional<double> minimum_value;
  std::optional<double> maximum_value;
  std::optional<std::string> unit;
  std::optional<std::string> slot_uri;           // as declared (CURIE or URI)
  std::optional<std::string> slot_uri_expanded;  // absolute form
  std::optional<std::string> description;
  std::vector<std::string> examples;
  InheritanceLabel inheritance = InheritanceLabel::Direct;

  bool operator==(const InducedSlot&) const = default;

  /// The pattern value checking applies: the slot's own, else the range
  /// type's.
  const std::optional<std::string>& effective_pattern() const {
    return pattern ? pattern : effective_range.type_pattern;
  }
};

/// The post-induction model consumed by the validator and generators.
struct CompiledSchema {
  SchemaDefinition source;
  PrefixMap prefix_map;
  ordered_map<std::vector<InducedSlot>> induced;    // one entry per class
  ordered_map<std::vector<std::string>> ancestors;  // class itself first
  ordered_map<std::string> expanded_uris;           // element name -> absolute URI

  const std::vector<InducedSlot>* induced_for(std::string_view class_name) const {
    return induced.find(class_name);
  }
  const InducedSlot* find_slot(std::string_view class_name, std::string_view slot_name) const;
  const InducedSlot* identifier_slot(std::string_view class_name) const;
};

/// Linearized ancestor chain: the class itself, then the is_a chain
/// interleaved with mixins, depth-first, is_a before mixins at each level,
/// mixins in declaration order, duplicates removed keeping the first
/// occurrence. Deliberately simple and total; this is not C3.
std::vector<std::string> class_ancestors(const SchemaDefinition& schema,
                                         const std::string& class_name);

/// One InducedSlot per distinct slot name reachable through the ancestor
/// chain, attributes, and `slots` lists: own declaration order first, then
/// inherited in ancestor order. slot_usage overlays apply with
/// nearest-descendant precedence; conflicting overlays at equal inheritance
/// depth are an error rather than a tie-break.
std::vector<InducedSlot> induced_slots(const SchemaDefinition& schema,
                                       const std::string& class_name, Diagnostics& diags);

/// prefix:local -> base + local. Throws CompileError on a malformed CURIE or
/// an undeclared prefix.
std::string expand_curie(const PrefixMap& prefix_map, const std::string& curie);

struct Contraction {
  std::string text;
  bool contracted = false;  // false means pass-through: no declared base matched

  bool operator==(const Contraction&) const = default;
};

/// Inverse of expansion using the longest matching declared base; unmatched
/// URIs pass through unchanged.
Contraction contract_uri(const PrefixMap& prefix_map, const std::string& uri);

/// Compiles a merged schema: checks referential invariants, linearizes every
/// class, induces every slot list, and expands element URIs. Pure function
/// of the schema value.
CompiledSchema compile_schema(const SchemaDefinition& schema, Diagnostics& diags);

}  // namespace schemaforge
