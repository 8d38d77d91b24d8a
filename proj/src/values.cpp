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

#include "schemaforge/values.hpp"

#include <yaml-cpp/yaml.h>

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "schemaforge/loader.hpp"

namespace schemaforge {

Value::Value(DataRecord record) : v_(std::make_shared<DataRecord>(std::move(record))) {}

std::string_view Value::shape_name() const {
  if (is_null()) return "null";
  if (is_bool()) return "boolean";
  if (is_number()) return "number";
  if (is_string()) return "text";
  if (is_list()) return "list";
  return "object";
}

std::string Value::display() const {
  if (is_null()) return "null";
  if (is_bool()) return as_bool() ? "true" : "false";
  if (is_integer()) return std::to_string(as_integer());
  if (is_double()) return format_decimal(as_number());
  if (is_string()) return "'" + as_string() + "'";
  if (is_list()) return "a list of " + std::to_string(as_list().size()) + " values";
  return "an object";
}

bool Value::operator==(const Value& other) const {
  if (v_.index() != other.v_.index()) return false;
  if (is_record()) return as_record() == other.as_record();
  return v_ == other.v_;
}

// ---------------------------------------------------------------------------
// Scalar typing
// ---------------------------------------------------------------------------

namespace {

bool is_strict_integer(std::string_view s) {
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool is_strict_float(std::string_view s) {
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  bool digits = false, dot = false, exp = false, exp_digits = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (exp ? exp_digits : digits) = true;
    } else if (c == '.' && !dot && !exp) {
      dot = true;
    } else if ((c == 'e' || c == 'E') && digits && !exp) {
      exp = true;
      if (i + 1 < s.size() && (s[i + 1] == '+' || s[i + 1] == '-')) ++i;
    } else {
      return false;
    }
  }
  return digits && (!exp || exp_digits);
}

}  // namespace

Value scalar_from_text(std::string_view text) {
  if (text.empty() || text == "~" || text == "null" || text == "Null" || text == "NULL")
    return Value();
  if (text == "true" || text == "True" || text == "TRUE") return Value(true);
  if (text == "false" || text == "False" || text == "FALSE") return Value(false);
  std::string owned(text);
  if (is_strict_integer(text)) {
    errno = 0;
    char* end = nullptr;
    long long parsed = std::strtoll(owned.c_str(), &end, 10);
    if (errno != ERANGE && end == owned.c_str() + owned.size())
      return Value(static_cast<std::int64_t>(parsed));
    // fall through to float on overflow
  }
  if (is_strict_integer(text) || is_strict_float(text)) {
    errno = 0;
    char* end = nullptr;
    double parsed = std::strtod(owned.c_str(), &end);
    if (end == owned.c_str() + owned.size()) return Value(parsed);
  }
  return Value(std::move(owned));
}

// ---------------------------------------------------------------------------
// YAML records
// ---------------------------------------------------------------------------

namespace {

Value value_from_yaml(const YAML::Node& node);

DataRecord record_from_yaml(const YAML::Node& node, const std::string& asserted_class) {
  if (!node.IsMap())
    throw ParseError("expected a mapping for a data record", node.Mark().line + 1,
                     node.Mark().column + 1);
  DataRecord record;
  record.asserted_class = asserted_class;
  for (const auto& entry : node) {
    std::string key = entry.first.as<std::string>();
    Value v = value_from_yaml(entry.second);
    if (v.is_null()) continue;  // explicit null means "not specified"
    record.set(std::move(key), std::move(v));
  }
  return record;
}

Value value_from_yaml(const YAML::Node& node) {
  if (node.IsNull() || !node.IsDefined()) return Value();
  if (node.IsMap()) return Value(record_from_yaml(node, ""));
  if (node.IsSequence()) {
    Value::List items;
    for (const auto& item : node) items.push_back(value_from_yaml(item));
    return Value(std::move(items));
  }
  const std::string raw = node.as<std::string>();
  if (node.Tag() == "?") return scalar_from_text(raw);  // plain scalar: resolve
  return Value(raw);                                    // quoted: always text
}

}  // namespace

std::vector<DataRecord> parse_records_yaml(std::string_view text,
                                           const std::string& asserted_class) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
  std::vector<DataRecord> records;
  if (root.IsNull() || !root.IsDefined()) return records;
  if (root.IsSequence()) {
    for (const auto& item : root) records.push_back(record_from_yaml(item, asserted_class));
  } else {
    records.push_back(record_from_yaml(root, asserted_class));
  }
  return records;
}

// ---------------------------------------------------------------------------
// JSON records
// ---------------------------------------------------------------------------

namespace {

Value value_from_json(const nlohmann::ordered_json& j);

DataRecord record_from_json(const nlohmann::ordered_json& j, const std::string& asserted_class) {
  if (!j.is_object()) throw ParseError("expected a JSON object for a data record");
  DataRecord record;
  record.asserted_class = asserted_class;
  for (const auto& [key, value] : j.items()) {
    if (value.is_null()) continue;
    record.set(key, value_from_json(value));
  }
  return record;
}

Value value_from_json(const nlohmann::ordered_json& j) {
  switch (j.type()) {
    case nlohmann::ordered_json::value_t::null: return Value();
    case nlohmann::ordered_json::value_t::boolean: return Value(j.get<bool>());
    case nlohmann::ordered_json::value_t::number_integer:
    case nlohmann::ordered_json::value_t::number_unsigned:
      return Value(j.get<std::int64_t>());
    case nlohmann::ordered_json::value_t::number_float: return Value(j.get<double>());
    case nlohmann::ordered_json::value_t::string: return Value(j.get<std::string>());
    case nlohmann::ordered_json::value_t::array: {
      Value::List items;
      for (const auto& item : j) items.push_back(value_from_json(item));
      return Value(std::move(items));
    }
    case nlohmann::ordered_json::value_t::object: return Value(record_from_json(j, ""));
    default: return Value();
  }
}

}  // namespace

std::vector<DataRecord> parse_records_json(std::string_view text,
                                           const std::string& asserted_class) {
  nlohmann::ordered_json parsed;
  try {
    parsed = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  std::vector<DataRecord> records;
  if (parsed.is_array()) {
    for (const auto& item : parsed) records.push_back(record_from_json(item, asserted_class));
  } else {
    records.push_back(record_from_json(parsed, asserted_class));
  }
  return records;
}

// ---------------------------------------------------------------------------
// Tab-separated records
// ---------------------------------------------------------------------------

std::vector<DataRecord> parse_records_tsv(std::string_view text,
                                          const std::string& asserted_class) {
  std::vector<DataRecord> records;
  std::istringstream stream{std::string(text)};
  std::string line;
  std::vector<std::string> header;
  auto split = [](const std::string& row) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = row.find('\t', start);
      if (tab == std::string::npos) {
        cells.push_back(row.substr(start));
        break;
      }
      cells.push_back(row.substr(start, tab - start));
      start = tab + 1;
    }
    return cells;
  };
  bool first = true;
  while (std::getline(stream, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first) {
      header = split(line);
      if (header.empty() || (header.size() == 1 && header[0].empty()))
        throw ParseError("table has no header row");
      first = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> cells = split(line);
    DataRecord record;
    record.asserted_class = asserted_class;
    for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i) {
      if (cells[i].empty()) continue;  // empty cell: not specified
      Value v = scalar_from_text(cells[i]);
      if (v.is_null()) continue;
      record.set(header[i], std::move(v));
    }
    records.push_back(std::move(record));
  }
  if (first) throw ParseError("table has no header row");
  return records;
}

std::vector<DataRecord> load_records_file(const std::filesystem::path& path,
                                          const std::string& asserted_class) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ImportError("cannot read file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const std::string ext = path.extension().string();
  if (ext == ".json") return parse_records_json(text, asserted_class);
  if (ext == ".tsv") return parse_records_tsv(text, asserted_class);
  return parse_records_yaml(text, asserted_class);
}

// ---------------------------------------------------------------------------
// JSON rendering
// ---------------------------------------------------------------------------

nlohmann::ordered_json value_to_json(const Value& value) {
  if (value.is_null()) return nullptr;
  if (value.is_bool()) return value.as_bool();
  if (value.is_integer()) return value.as_integer();
  if (value.is_double()) return value.as_number();
  if (value.is_string()) return value.as_string();
  if (value.is_list()) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& item : value.as_list()) arr.push_back(value_to_json(item));
    return arr;
  }
  return record_to_json(value.as_record());
}

nlohmann::ordered_json record_to_json(const DataRecord& record) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [key, value] : record.values) obj[key] = value_to_json(value);
  return obj;
}

}  // namespace schemaforge
