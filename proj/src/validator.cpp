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

#include "schemaforge/validator.hpp"

#include <cmath>
#include <map>
#include <regex>
#include <sstream>

#include "schemaforge/loader.hpp"

namespace schemaforge {

namespace {

void add(std::vector<Finding>& out, std::string_view rule, const std::string& path,
         std::string message, Severity severity = Severity::Error) {
  out.push_back({severity, std::string(rule), path, std::move(message)});
}

bool is_integral_number(const Value& v) {
  if (v.is_integer()) return true;
  if (!v.is_double()) return false;
  double d = v.as_number();
  return std::isfinite(d) && std::floor(d) == d;
}

// Full-string anchored match; partial-match validators silently accept
// garbage suffixes.
bool pattern_matches(const std::string& pattern, const std::string& text) {
  std::regex re(pattern, std::regex::ECMAScript);
  return std::regex_match(text, re);
}

// Syntactic ISO-8601 checks; the shared patterns keep this route and the
// generated JSON Schema in agreement. Calendar arithmetic is out of scope.
const std::regex kDateRe{std::string(syntax::kDatePattern)};
const std::regex kDateTimeRe{std::string(syntax::kDateTimePattern)};

bool parse_number_text(const std::string& text, double& out) {
  Value v = scalar_from_text(text);
  if (!v.is_number()) return false;
  out = v.as_number();
  return true;
}

void check_type_value(const InducedSlot& slot, const Value& value, const PrefixMap& prefix_map,
                      const std::string& path, const ValidatorOptions& options,
                      std::vector<Finding>& out) {
  const ResolvedRange& range = slot.effective_range;
  const std::string range_desc = range.name;
  auto mismatch = [&](std::string_view expected) {
    add(out, rules::kRangeViolation, path,
        value.display() + " is not a valid " + std::string(expected) + " for slot '" + slot.name +
            "'");
  };

  bool ok = false;
  switch (range.base) {
    case BaseKind::String:
      ok = value.is_string();
      if (!ok) mismatch(range_desc);
      break;
    case BaseKind::Integer:
      ok = is_integral_number(value);
      if (!ok && options.coerce && value.is_string()) {
        double parsed = 0;
        if (parse_number_text(value.as_string(), parsed) && std::floor(parsed) == parsed) {
          add(out, rules::kCoercedValue, path,
              "coerced " + value.display() + " to integer for slot '" + slot.name + "'",
              Severity::Warning);
          ok = true;
        }
      }
      if (!ok) mismatch(range_desc);
      break;
    case BaseKind::Float:
      ok = value.is_number();  // integer literals are acceptable floats
      if (!ok && options.coerce && value.is_string()) {
        double parsed = 0;
        if (parse_number_text(value.as_string(), parsed)) {
          add(out, rules::kCoercedValue, path,
              "coerced " + value.display() + " to number for slot '" + slot.name + "'",
              Severity::Warning);
          ok = true;
        }
      }
      if (!ok) mismatch(range_desc);
      break;
    case BaseKind::Boolean:
      ok = value.is_bool();
      if (!ok) mismatch(range_desc);
      break;
    case BaseKind::Uri:
      ok = value.is_string() && is_absolute_uri(value.as_string());
      if (!ok) mismatch("uri (absolute)");
      break;
    case BaseKind::Curie: {
      if (!value.is_string()) {
        mismatch("curie");
        break;
      }
      auto parts = split_curie(value.as_string());
      if (!parts) {
        mismatch("curie (prefix:local)");
        break;
      }
      ok = true;
      if (!prefix_map.contains(parts->first))
        add(out, rules::kUndeclaredPrefix, path,
            "curie " + value.display() + " uses undeclared prefix '" + parts->first + "'");
      break;
    }
    case BaseKind::Date:
      ok = value.is_string() && std::regex_match(value.as_string(), kDateRe);
      if (!ok) mismatch("date (YYYY-MM-DD)");
      break;
    case BaseKind::DateTime:
      ok = value.is_string() && std::regex_match(value.as_string(), kDateTimeRe);
      if (!ok) mismatch("datetime (ISO 8601)");
      break;
  }

  // Pattern applies to text values only, matching JSON Schema semantics.
  if (value.is_string() && slot.effective_pattern()) {
    if (!pattern_matches(*slot.effective_pattern(), value.as_string()))
      add(out, rules::kPatternViolation, path,
          value.display() + " does not match pattern '" + *slot.effective_pattern() +
              "' of slot '" + slot.name + "'");
  }

  if (value.is_number()) {
    double n = value.as_number();
    if (slot.minimum_value && n < *slot.minimum_value)
      add(out, rules::kBoundsViolation, path,
          value.display() + " is below the minimum " + format_decimal(*slot.minimum_value) +
              " of slot '" + slot.name + "'");
    if (slot.maximum_value && n > *slot.maximum_value)
      add(out, rules::kBoundsViolation, path,
          value.display() + " is above the maximum " + format_decimal(*slot.maximum_value) +
              " of slot '" + slot.name + "'");
  }
}

}  // namespace

std::vector<Finding> check_value(const InducedSlot& slot, const Value& value,
                                 const PrefixMap& prefix_map, const std::string& path,
                                 const ValidatorOptions& options) {
  std::vector<Finding> out;
  if (value.is_null()) {
    add(out, rules::kRangeViolation, path, "null is not a value for slot '" + slot.name + "'");
    return out;
  }
  switch (slot.effective_range.kind) {
    case ElementKind::Type:
      check_type_value(slot, value, prefix_map, path, options, out);
      break;
    case ElementKind::Enum: {
      bool member = false;
      if (value.is_string()) {
        for (const auto& text : slot.effective_range.permissible_texts)
          if (text == value.as_string()) {
            member = true;
            break;
          }
      }
      if (!member)
        add(out, rules::kEnumViolation, path,
            value.display() + " is not a permissible value of " + slot.effective_range.name +
                " for slot '" + slot.name + "'");
      break;
    }
    case ElementKind::Class:
      if (!value.is_record())
        add(out, rules::kRangeViolation, path,
            value.display() + " is not an object of class " + slot.effective_range.name +
                " for slot '" + slot.name + "'");
      break;
    case ElementKind::Slot:
      break;  // unreachable post-compile
  }
  return out;
}

ValidationReport validate_record(const CompiledSchema& schema, const DataRecord& record,
                                 const ValidatorOptions& options,
                                 const std::string& path_prefix) {
  const std::vector<InducedSlot>* slots = schema.induced_for(record.asserted_class);
  if (!slots)
    throw CompileError("unknown class '" + record.asserted_class + "' asserted by record");

  ValidationReport report;
  auto& out = report.findings;

  auto check_one = [&](const InducedSlot& slot, const Value& value, const std::string& path) {
    if (slot.effective_range.kind == ElementKind::Class && value.is_record()) {
      DataRecord nested = value.as_record();
      nested.asserted_class = slot.effective_range.name;
      report.append(validate_record(schema, nested, options, path));
      return;
    }
    for (auto& f : check_value(slot, value, schema.prefix_map, path, options))
      out.push_back(std::move(f));
  };

  for (const auto& slot : *slots) {
    const Value* value = record.find(slot.name);
    const std::string path = path_prefix + "/" + slot.name;
    if (!value || value->is_null()) {
      if (slot.required)
        add(out, rules::kMissingRequired, path,
            "required slot '" + slot.name + "' of class '" + record.asserted_class +
                "' is missing");
      continue;
    }
    if (slot.multivalued) {
      if (!value->is_list()) {
        add(out, rules::kShapeViolation, path,
            "slot '" + slot.name + "' is multivalued; expected a list, got " +
                std::string(value->shape_name()));
        continue;
      }
      const auto& items = value->as_list();
      for (std::size_t i = 0; i < items.size(); ++i)
        check_one(slot, items[i], path + "/" + std::to_string(i));
    } else {
      if (value->is_list()) {
        add(out, rules::kShapeViolation, path,
            "slot '" + slot.name + "' is single-valued; got a list");
        continue;
      }
      check_one(slot, *value, path);
    }
  }

  for (const auto& [key, value] : record.values) {
    if (value.is_null()) continue;
    bool known = false;
    for (const auto& slot : *slots)
      if (slot.name == key) {
        known = true;
        break;
      }
    if (!known)
      add(out, rules::kUnknownSlot, path_prefix + "/" + key,
          "class '" + record.asserted_class + "' has no slot '" + key + "'");
  }
  return report;
}

ValidationReport validate_collection(const CompiledSchema& schema,
                                     const std::vector<DataRecord>& records,
                                     const ValidatorOptions& options) {
  ValidationReport report;
  for (std::size_t i = 0; i < records.size(); ++i)
    report.append(validate_record(schema, records[i], options, "/" + std::to_string(i)));

  // Identifier uniqueness across records of the same class.
  std::map<std::pair<std::string, std::string>, std::size_t> first_seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const InducedSlot* id_slot = schema.identifier_slot(records[i].asserted_class);
    if (!id_slot) continue;
    const Value* value = records[i].find(id_slot->name);
    if (!value || value->is_null() || value->is_list() || value->is_record()) continue;
    auto key = std::make_pair(records[i].asserted_class, value->display());
    auto [it, inserted] = first_seen.emplace(key, i);
    if (!inserted)
      report.findings.push_back(
          {Severity::Error, std::string(rules::kDuplicateIdentifier),
           "/" + std::to_string(i) + "/" + id_slot->name,
           "identifier " + value->display() + " of record " + std::to_string(i) +
               " duplicates record " + std::to_string(it->second)});
  }
  return report;
}

std::string report_to_text(const ValidationReport& report) {
  std::ostringstream out;
  for (const auto& f : report.findings)
    out << severity_name(f.severity) << " [" << f.rule_id << "] "
        << (f.path.empty() ? "/" : f.path) << ": " << f.message << "\n";
  out << (report.valid() ? "valid" : "invalid") << " (" << report.findings.size()
      << " finding" << (report.findings.size() == 1 ? "" : "s") << ")\n";
  return out.str();
}

nlohmann::ordered_json report_to_json(const ValidationReport& report) {
  nlohmann::ordered_json findings = nlohmann::ordered_json::array();
  for (const auto& f : report.findings)
    findings.push_back({{"severity", severity_name(f.severity)},
                        {"rule_id", f.rule_id},
                        {"path", f.path},
                        {"message", f.message}});
  return {{"valid", report.valid()}, {"findings", findings}};
}

}  // namespace schemaforge
