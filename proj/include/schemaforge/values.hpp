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

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "schemaforge/diagnostics.hpp"

namespace schemaforge {

struct DataRecord;

/// One cell of instance data: a scalar, a list, or a nested record. Nulls
/// only survive inside lists; a null map value means "not specified" and is
/// dropped on ingestion.
class Value {
 public:
  using List = std::vector<Value>;

  Value() : v_(std::monostate{}) {}
  Value(bool b) : v_(b) {}
  Value(std::int64_t i) : v_(i) {}
  Value(int i) : v_(static_cast<std::int64_t>(i)) {}
  Value(double d) : v_(d) {}
  Value(std::string s) : v_(std::move(s)) {}
  Value(const char* s) : v_(std::string(s)) {}
  Value(List items) : v_(std::move(items)) {}
  Value(DataRecord record);

  bool is_null() const { return std::holds_alternative<std::monostate>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_integer() const { return std::holds_alternative<std::int64_t>(v_); }
  bool is_double() const { return std::holds_alternative<double>(v_); }
  bool is_number() const { return is_integer() || is_double(); }
  bool is_string() const { return std::holds_alternative<std::string>(v_); }
  bool is_list() const { return std::holds_alternative<List>(v_); }
  bool is_record() const { return std::holds_alternative<std::shared_ptr<DataRecord>>(v_); }

  bool as_bool() const { return std::get<bool>(v_); }
  std::int64_t as_integer() const { return std::get<std::int64_t>(v_); }
  double as_number() const {
    return is_integer() ? static_cast<double>(std::get<std::int64_t>(v_)) : std::get<double>(v_);
  }
  const std::string& as_string() const { return std::get<std::string>(v_); }
  const List& as_list() const { return std::get<List>(v_); }
  const DataRecord& as_record() const { return *std::get<std::shared_ptr<DataRecord>>(v_); }

  /// Human name of the value's shape, for findings ("number", "text", ...).
  std::string_view shape_name() const;

  /// Rendering used in messages and identifier-uniqueness comparison.
  std::string display() const;

  bool operator==(const Value& other) const;

 private:
  std::variant<std::monostate, bool, std::int64_t, double, std::string, List,
               std::shared_ptr<DataRecord>>
      v_;
};

/// One instance record. Nested records leave asserted_class empty; the
/// containing slot's range supplies it during validation.
struct DataRecord {
  std::string asserted_class;
  std::vector<std::pair<std::string, Value>> values;  // document order

  const Value* find(std::string_view key) const {
    for (const auto& [k, v] : values)
      if (k == key) return &v;
    return nullptr;
  }
  void set(std::string key, Value value) { values.emplace_back(std::move(key), std::move(value)); }

  bool operator==(const DataRecord&) const = default;
};

/// Types an untyped table cell or plain scalar: null-likes, booleans,
/// strict decimal integers and floats, everything else text. No locale, no
/// thousands separators; "1,5,8" stays one string.
Value scalar_from_text(std::string_view text);

/// Records from a YAML document: a top-level sequence of mappings, or a
/// single mapping. Plain scalars are typed with scalar_from_text; quoted
/// scalars stay strings; null-valued keys are dropped.
std::vector<DataRecord> parse_records_yaml(std::string_view text,
                                           const std::string& asserted_class);

/// Records from a JSON document: an array of objects or a single object.
std::vector<DataRecord> parse_records_json(std::string_view text,
                                           const std::string& asserted_class);

/// Records from a tab-separated table: first row slot names, one record per
/// row, empty cells absent.
std::vector<DataRecord> parse_records_tsv(std::string_view text,
                                          const std::string& asserted_class);

/// Dispatches on extension: .yaml/.yml, .json, .tsv.
std::vector<DataRecord> load_records_file(const std::filesystem::path& path,
                                          const std::string& asserted_class);

/// The record's canonical JSON form (values only; nulls inside lists are
/// preserved, insertion order kept).
nlohmann::ordered_json record_to_json(const DataRecord& record);
nlohmann::ordered_json value_to_json(const Value& value);

}  // namespace schemaforge
