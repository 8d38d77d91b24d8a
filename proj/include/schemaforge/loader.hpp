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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "schemaforge/metamodel.hpp"

namespace schemaforge {

/// Parses one schema document (YAML). Recognized keys populate the
/// SchemaDefinition; unrecognized keys are collected as warnings in `diags`,
/// never errors, so documents using unsupported features still partially
/// load. Document order of all maps is preserved.
///
/// Throws ParseError (position-annotated) on malformed input, a non-mapping
/// top level, a missing `id` or `name`, or a duplicate element name, and
/// InvariantError when the result violates metamodel structure.
SchemaDefinition parse_schema(std::string_view text, Diagnostics& diags);

/// Serializes a schema to the canonical text form. parse_schema of the
/// result yields an equal value (round-trip identity on the supported key
/// set); output is deterministic, UTF-8, LF, trailing newline.
std::string serialize_schema(const SchemaDefinition& schema);

/// Renders one scalar as it would appear in the canonical text form
/// (quoted only when required). Shared with the documentation generator's
/// source echo.
std::string yaml_scalar(std::string_view text);

/// Shortest decimal rendering that round-trips through parsing; integral
/// values render without a fractional part.
std::string format_decimal(double value);

/// Resolves import references to parsed documents. References are resolved
/// by appending ".yaml" (unless an extension is already present) and probing
/// `search_roots` in order. http(s) references require `allow_remote`.
/// Results are memoized, so a reference resolves to at most one document.
class ImportResolver {
 public:
  ImportResolver() = default;
  explicit ImportResolver(std::vector<std::filesystem::path> roots)
      : search_roots(std::move(roots)) {}

  std::vector<std::filesystem::path> search_roots;
  bool allow_remote = false;

  /// Parses and memoizes the document behind `ref`. Throws ImportError when
  /// no candidate exists.
  const SchemaDefinition& load(const std::string& ref, Diagnostics& diags);

  /// Search roots contributed by the SCHEMAFORGE_PATH environment variable
  /// (path-separator delimited).
  static std::vector<std::filesystem::path> env_search_roots();

 private:
  std::map<std::string, SchemaDefinition> cache_;
};

/// Merges the import closure of `root` into a single schema: depth-first
/// post-order, built-in types implicitly first, the importing schema winning
/// on name collisions (among siblings, the later import wins). Overriding a
/// differing definition warns; redefining an identical one is silent, which
/// keeps the merge idempotent. A name bound to different element kinds in
/// two schemas is a ConflictError; an import cycle is a CycleError naming
/// the cycle path.
SchemaDefinition resolve_imports(const SchemaDefinition& root, ImportResolver& resolver,
                                 Diagnostics& diags);

/// Prefix declarations of a merged schema, with every base re-checked as an
/// absolute URI.
PrefixMap build_prefix_map(const SchemaDefinition& schema);

/// Unions `from` into `into`; identical re-declarations merge silently,
/// differing bases raise ConflictError reporting both.
void merge_prefixes(PrefixMap& into, const PrefixMap& from);

/// Convenience: read, parse, and resolve imports for a schema file, with
/// search roots seeded from the file's directory plus SCHEMAFORGE_PATH.
SchemaDefinition load_schema_file(const std::filesystem::path& path, Diagnostics& diags,
                                  bool allow_remote = false);

}  // namespace schemaforge
