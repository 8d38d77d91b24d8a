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
#include <vector>

#include "json.hpp"
#include "schemaforge/induction.hpp"
#include "schemaforge/values.hpp"

namespace schemaforge {

// Stable rule identifiers. These are part of the machine-readable report
// format; never rename.
namespace rules {
inline constexpr std::string_view kMissingRequired = "missing_required";
inline constexpr std::string_view kRangeViolation = "range_violation";
inline constexpr std::string_view kShapeViolation = "shape_violation";
inline constexpr std::string_view kEnumViolation = "enum_violation";
inline constexpr std::string_view kPatternViolation = "pattern_violation";
inline constexpr std::string_view kBoundsViolation = "bounds_violation";
inline constexpr std::string_view kUnknownSlot = "unknown_slot";
inline constexpr std::string_view kDuplicateIdentifier = "duplicate_identifier";
inline constexpr std::string_view kUndeclaredPrefix = "undeclared_prefix";
inline constexpr std::string_view kCoercedValue = "coerced_value";
}  // namespace rules

struct Finding {
  Severity severity = Severity::Error;
  std::string rule_id;
  std::string path;  // slash-delimited location within the input
  std::string message;

  bool operator==(const Finding&) const = default;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool valid() const {
    for (const auto& f : findings)
      if (f.severity == Severity::Error) return false;
    return true;
  }

  void append(ValidationReport other) {
    for (auto& f : other.findings) findings.push_back(std::move(f));
  }

  bool operator==(const ValidationReport&) const = default;
};

struct ValidatorOptions {
  /// Permit string-to-number parsing, downgrading each successful coercion
  /// to a warning. Off by default; strictness is the point.
  bool coerce = false;
};

/// Findings for one value against one induced slot: base-kind conformance,
/// enum membership, anchored pattern match, numeric bounds, CURIE prefix
/// declaration. Class-ranged recursion is validate_record's job; here a
/// class-ranged slot only checks that the value is an object.
std::vector<Finding> check_value(const InducedSlot& slot, const Value& value,
                                 const PrefixMap& prefix_map, const std::string& path = "",
                                 const ValidatorOptions& options = {});

/// Validates one record against its asserted class: required presence,
/// multivalued shape (a list exactly when multivalued), per-value checks,
/// recursive validation for class ranges, unknown-key findings. Throws
/// CompileError when the asserted class does not exist; everything else is
/// a finding. Deterministic.
ValidationReport validate_record(const CompiledSchema& schema, const DataRecord& record,
                                 const ValidatorOptions& options = {},
                                 const std::string& path_prefix = "");

/// Per-record reports with record-index-prefixed paths, plus collection-wide
/// uniqueness of each class's identifier slot.
ValidationReport validate_collection(const CompiledSchema& schema,
                                     const std::vector<DataRecord>& records,
                                     const ValidatorOptions& options = {});

/// One line per finding, then a verdict line.
std::string report_to_text(const ValidationReport& report);

/// Machine form: {"valid": ..., "findings": [{severity, rule_id, path,
/// message}, ...]}.
nlohmann::ordered_json report_to_json(const ValidationReport& report);

}  // namespace schemaforge
