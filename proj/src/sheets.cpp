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

#include "schemaforge/sheets.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace schemaforge {

namespace {

std::string trim(std::string_view s) {
  std::size_t begin = 0, end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return std::string(s.substr(begin, end - begin));
}

std::vector<std::string> split_tabs(const std::string& row) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = row.find('\t', start);
    if (tab == std::string::npos) {
      cells.push_back(trim(row.substr(start)));
      break;
    }
    cells.push_back(trim(row.substr(start, tab - start)));
    start = tab + 1;
  }
  return cells;
}

bool row_is_empty(const std::vector<std::string>& cells) {
  return std::all_of(cells.begin(), cells.end(), [](const std::string& c) { return c.empty(); });
}

int parse_nonneg(std::string_view text, std::string_view what) {
  if (text.empty()) throw ParseError("empty " + std::string(what) + " in cardinality");
  int value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("malformed cardinality component '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
    if (value > 1000000) throw ParseError("cardinality out of range: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Cardinality parse_cardinality(std::string_view raw) {
  std::string text = trim(raw);
  if (text.empty()) return {0, 1};
  std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    int n = parse_nonneg(text, "count");
    if (n < 1)
      throw ParseError("bare cardinality must be positive, got '" + text + "'");
    return {n, n};
  }
  Cardinality out;
  out.min = parse_nonneg(text.substr(0, dots), "minimum");
  std::string max_part = text.substr(dots + 2);
  if (max_part == "*") {
    out.max = std::nullopt;
  } else {
    int max = parse_nonneg(max_part, "maximum");
    if (max < 1) throw ParseError("cardinality maximum must be positive in '" + text + "'");
    if (out.min > max)
      throw ParseError("cardinality minimum exceeds maximum in '" + text + "'");
    out.max = max;
  }
  return out;
}

std::string format_cardinality(const Cardinality& cardinality) {
  std::string out = std::to_string(cardinality.min) + "..";
  out += cardinality.max ? std::to_string(*cardinality.max) : "*";
  return out;
}

std::optional<ColumnBinding> column_binding_from_token(std::string_view token) {
  if (token == "class") return ColumnBinding::Class;
  if (token == "slot") return ColumnBinding::Slot;
  if (token == "cardinality") return ColumnBinding::Cardinality;
  if (token == "required") return ColumnBinding::Required;
  if (token == "range") return ColumnBinding::Range;
  if (token == "is_a") return ColumnBinding::IsA;
  if (token == "description") return ColumnBinding::Description;
  if (token == "ignore") return ColumnBinding::Ignore;
  return std::nullopt;
}

Sheet parse_sheet(std::string_view text, Diagnostics& diags) {
  std::istringstream stream{std::string(text)};
  std::string line;
  Sheet sheet;
  bool have_header = false, have_descriptor = false;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> cells = split_tabs(line);
    if (row_is_empty(cells)) continue;
    if (!cells[0].empty() && cells[0][0] == '#') continue;  // comment row

    if (!have_header) {
      sheet.descriptor.headers = cells;
      have_header = true;
      continue;
    }
    if (!cells[0].empty() && cells[0][0] == '>') {
      if (have_descriptor) {
        warn(diags, "extra descriptor row ignored (line " + std::to_string(line_no) + ")",
             "sheet");
        continue;
      }
      cells[0] = trim(cells[0].substr(1));
      for (std::size_t i = 0; i < sheet.descriptor.headers.size(); ++i) {
        std::string token = i < cells.size() ? cells[i] : std::string();
        if (token.empty())
          throw ParseError("column '" + sheet.descriptor.headers[i] +
                               "' has no descriptor binding (use 'ignore' to skip it)",
                           line_no, static_cast<int>(i + 1));
        auto binding = column_binding_from_token(token);
        if (!binding)
          throw ParseError("unknown descriptor '" + token + "' for column '" +
                               sheet.descriptor.headers[i] + "'",
                           line_no, static_cast<int>(i + 1));
        sheet.descriptor.bindings.push_back(*binding);
      }
      have_descriptor = true;
      continue;
    }
    if (!have_descriptor)
      throw ParseError("expected a '>' descriptor row before data rows", line_no, 1);
    cells.resize(sheet.descriptor.bindings.size());
    sheet.rows.push_back(std::move(cells));
  }
  if (!have_header) throw ParseError("sheet has no header row");
  if (!have_descriptor) throw ParseError("sheet has no descriptor row");

  int class_columns = 0;
  for (auto b : sheet.descriptor.bindings)
    if (b == ColumnBinding::Class) ++class_columns;
  if (class_columns != 1)
    throw ParseError("sheet must bind exactly one column to 'class', found " +
                     std::to_string(class_columns));
  return sheet;
}

namespace {

struct RowView {
  std::string class_name, slot_name, cardinality, required, range, is_a, description;
};

RowView project_row(const Sheet& sheet, const std::vector<std::string>& cells) {
  RowView out;
  for (std::size_t i = 0; i < sheet.descriptor.bindings.size() && i < cells.size(); ++i) {
    switch (sheet.descriptor.bindings[i]) {
      case ColumnBinding::Class: out.class_name = cells[i]; break;
      case ColumnBinding::Slot: out.slot_name = cells[i]; break;
      case ColumnBinding::Cardinality: out.cardinality = cells[i]; break;
      case ColumnBinding::Required: out.required = cells[i]; break;
      case ColumnBinding::Range: out.range = cells[i]; break;
      case ColumnBinding::IsA: out.is_a = cells[i]; break;
      case ColumnBinding::Description: out.description = cells[i]; break;
      case ColumnBinding::Ignore: break;
    }
  }
  return out;
}

std::optional<bool> parse_required_cell(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "TRUE" || text == "True" || text == "true") return true;
  if (text == "FALSE" || text == "False" || text == "false") return false;
  throw ParseError("required column expects TRUE or FALSE, got '" + text + "'");
}

// Range tokens of the form uri:curie collapse to the built-in curie type;
// other unknown tokens pass through for compile-time resolution.
std::string map_range_token(const std::string& token) {
  if (token == "uri:curie") return "curie";
  return token;
}

}  // namespace

SchemaDefinition sheet_to_schema(const Sheet& sheet, const std::string& schema_id,
                                 const std::string& schema_name, Diagnostics& diags) {
  SchemaDefinition schema;
  schema.id = schema_id;
  schema.name = schema_name;

  std::vector<std::string> sheet_classes;
  for (const auto& cells : sheet.rows) {
    RowView row = project_row(sheet, cells);
    if (!row.class_name.empty() &&
        std::find(sheet_classes.begin(), sheet_classes.end(), row.class_name) ==
            sheet_classes.end())
      sheet_classes.push_back(row.class_name);
  }

  for (std::size_t r = 0; r < sheet.rows.size(); ++r) {
    RowView row = project_row(sheet, sheet.rows[r]);
    if (row.class_name.empty())
      throw ParseError("data row " + std::to_string(r + 1) + " has an empty class cell");

    ClassDefinition* cls = schema.classes.find(row.class_name);
    if (!cls) {
      ClassDefinition fresh;
      fresh.name = row.class_name;
      schema.classes.insert(row.class_name, std::move(fresh));
      cls = schema.classes.find(row.class_name);
    }

    if (row.slot_name.empty()) {
      // Class-declaring row.
      if (!row.description.empty()) cls->description = row.description;
      if (!row.is_a.empty()) cls->is_a = row.is_a;
      continue;
    }

    if (cls->attributes.contains(row.slot_name))
      throw ConflictError("duplicate definition of slot '" + row.slot_name + "' on class '" +
                          row.class_name + "'");

    SlotDefinition slot;
    slot.name = row.slot_name;
    if (!row.description.empty()) slot.description = row.description;
    if (!row.is_a.empty()) slot.is_a = row.is_a;

    Cardinality cardinality = parse_cardinality(row.cardinality);
    std::optional<bool> explicit_required = parse_required_cell(row.required);
    bool required = cardinality.required();
    if (explicit_required) {
      if (*explicit_required && !cardinality.required()) {
        warn(diags,
             "row " + std::to_string(r + 1) + ": cardinality '" + row.cardinality +
                 "' says optional but the required column says TRUE; the required column wins",
             row.class_name + "." + row.slot_name);
        required = true;
      } else if (!*explicit_required && cardinality.required()) {
        throw ConflictError("row " + std::to_string(r + 1) + ": cardinality '" +
                            row.cardinality + "' requires the slot but the required column says "
                            "FALSE");
      } else {
        required = *explicit_required;
      }
    }
    if (required) slot.required = true;
    if (cardinality.multivalued()) slot.multivalued = true;

    if (!row.range.empty()) {
      std::string range = map_range_token(row.range);
      slot.range = range;
      bool known = base_kind_from_name(range).has_value() ||
                   std::find(sheet_classes.begin(), sheet_classes.end(), range) !=
                       sheet_classes.end();
      if (!known)
        warn(diags,
             "row " + std::to_string(r + 1) + ": range '" + range +
                 "' is not defined in this sheet; resolution is deferred to compile",
             row.class_name + "." + row.slot_name);
    }

    cls->attributes.insert(row.slot_name, std::move(slot));
  }

  // Row order carries no meaning in a sheet, so the result is normalized:
  // classes and attributes sorted by name. Compiling two shufflings of the
  // same rows yields identical induced slots.
  ordered_map<ClassDefinition> normalized;
  std::vector<std::string> class_names = schema.classes.keys();
  std::sort(class_names.begin(), class_names.end());
  for (const auto& name : class_names) {
    ClassDefinition cls = *schema.classes.find(name);
    std::vector<std::string> attr_names = cls.attributes.keys();
    std::sort(attr_names.begin(), attr_names.end());
    ordered_map<SlotDefinition> attrs;
    for (const auto& attr : attr_names) attrs.insert(attr, *cls.attributes.find(attr));
    cls.attributes = std::move(attrs);
    normalized.insert(name, std::move(cls));
  }
  schema.classes = std::move(normalized);

  validate_structure(schema);
  return schema;
}

}  // namespace schemaforge
