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

struct Cardinality {
  int min = 0;
  std::optional<int> max;  // nullopt = unbounded

  bool required() const { return min >= 1; }
  bool multivalued() const { return !max || *max > 1; }
  bool operator==(const Cardinality&) const = default;
};

/// "a..b" -> (a,b); "a..*" -> (a, unbounded); bare "a" -> (a,a); empty ->
/// (0,1). Throws ParseError on anything else, including min > max.
Cardinality parse_cardinality(std::string_view text);

/// Canonical form: "a..b" or "a..*". parse_cardinality of the result is the
/// identity.
std::string format_cardinality(const Cardinality& cardinality);

/// What a sheet column means, taken from the `>`-prefixed descriptor row.
enum class ColumnBinding { Class, Slot, Cardinality, Required, Range, IsA, Description, Ignore };

std::optional<ColumnBinding> column_binding_from_token(std::string_view token);

struct SheetDescriptor {
  std::vector<std::string> headers;          // display names (row 1)
  std::vector<ColumnBinding> bindings;       // one per column (row 2)
};

/// A parsed tabular schema sheet: header row, exactly one descriptor row
/// (extra `>` rows are ignored with a warning), then data rows. Cells are
/// whitespace-trimmed; empty rows and `#`-prefixed comment rows are skipped.
struct Sheet {
  SheetDescriptor descriptor;
  std::vector<std::vector<std::string>> rows;
};

Sheet parse_sheet(std::string_view text, Diagnostics& diags);

/// Converts sheet rows into a schema: a row with only the class column
/// declares a class; a row with class and slot attaches an attribute. The
/// cardinality column maps to required/multivalued; an explicit required
/// column wins over a contradicting optional cardinality with a warning,
/// while required FALSE against a mandatory cardinality is an error.
SchemaDefinition sheet_to_schema(const Sheet& sheet, const std::string& schema_id,
                                 const std::string& schema_name, Diagnostics& diags);

}  // namespace schemaforge
