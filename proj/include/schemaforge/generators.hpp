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

#include <string>
#include <utility>
#include <vector>

#include "schemaforge/induction.hpp"

namespace schemaforge {

enum class GeneratorTarget { JsonSchema, SqlDdl, JsonLdContext, Docs };

struct GeneratorOptions {
  GeneratorTarget target = GeneratorTarget::JsonSchema;
  std::optional<std::string> root_class;  // json_schema: top-level $ref
  std::string dialect = "generic";        // sql
  int inline_depth = 0;  // class-ranged slots: 0 = always $ref to the named definition
  bool surrogate_keys = false;  // sql: allow FK targets without identifier slots
};

/// JSON Schema (draft 2020-12): one $defs entry per non-abstract class (plus
/// abstract classes that are referenced as a range, so every $ref resolves),
/// properties per induced slot, required arrays, anchored patterns, numeric
/// bounds, additionalProperties: false. Canonically formatted: sorted keys,
/// 2-space indent, trailing newline. Byte-deterministic.
std::string gen_json_schema(const CompiledSchema& schema, const GeneratorOptions& opts = {});

/// Generic SQL DDL: one table per non-abstract class, identifier slot as
/// primary key (synthetic _pk INTEGER when absent), NOT NULL from required,
/// CHECK constraints from enum ranges, auxiliary <Class>_<slot> tables for
/// multivalued slots, referenced tables created first. Uppercase keywords,
/// one statement per line.
std::string gen_sql_ddl(const CompiledSchema& schema, const GeneratorOptions& opts = {});

/// JSON-LD context: prefix declarations plus an entry per element name
/// mapping to its expanded URI. When an element name collides with a
/// declared prefix, the prefix wins; identifier expansion depends on it.
std::string gen_context(const CompiledSchema& schema);

/// Markdown documentation: index page, one page per class, slot, enum, and
/// type. Class pages carry the slots table (Name, Cardinality and Range,
/// Inheritance, Examples); slot pages carry range, applicable classes, and a
/// fenced source echo. Returns (relative path, content) pairs in a
/// deterministic order.
std::vector<std::pair<std::string, std::string>> gen_docs(const CompiledSchema& schema);

/// "0..1", "1..1", "0..*", "1..*".
std::string cardinality_text(bool required, bool multivalued);

/// Display name of a range in docs: type names capitalize the first letter
/// ("Float"); class and enum names are verbatim.
std::string range_display_name(const ResolvedRange& range);

}  // namespace schemaforge
