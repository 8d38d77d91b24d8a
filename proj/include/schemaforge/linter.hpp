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

#include "schemaforge/metamodel.hpp"

namespace schemaforge {

// Built-in lint rule identifiers.
namespace lint_rules {
inline constexpr std::string_view kMissingDescription = "missing_description";
inline constexpr std::string_view kClassNameNotCamelCase = "class_name_not_camelcase";
inline constexpr std::string_view kSlotNameNotSnakeCase = "slot_name_not_snakecase";
inline constexpr std::string_view kEnumNameNotCamelCase = "enum_name_not_camelcase";
inline constexpr std::string_view kMissingRange = "missing_range";
inline constexpr std::string_view kEmptyEnum = "empty_enum";
inline constexpr std::string_view kUndeclaredPrefixInMapping = "undeclared_prefix_in_mapping";
}  // namespace lint_rules

/// All built-in rule ids, in report order.
const std::vector<std::string>& lint_rule_ids();

struct LintRuleSetting {
  bool enabled = true;
  Severity severity = Severity::Warning;

  bool operator==(const LintRuleSetting&) const = default;
};

/// Per-rule overrides; anything not mentioned keeps the default (enabled,
/// warning).
struct LintConfig {
  ordered_map<LintRuleSetting> rules;

  LintRuleSetting setting_for(std::string_view rule_id) const {
    if (const LintRuleSetting* s = rules.find(rule_id)) return *s;
    return {};
  }

  /// Parses a config document: a flat mapping of rule id to off | warning |
  /// error. Unknown rule ids and unknown levels are ConfigErrors.
  static LintConfig parse(std::string_view text);
};

struct LintFinding {
  std::string rule_id;
  std::string element;  // top-level element containing the issue
  Severity severity = Severity::Warning;
  std::string message;

  bool operator==(const LintFinding&) const = default;
};

/// Checks naming conventions, descriptions, ranges, enum contents, and
/// mapping prefixes against the raw (pre-compilation) schema, so broken
/// schemas still get style feedback. Pure and deterministic: element
/// declaration order, then rule order.
std::vector<LintFinding> lint(const SchemaDefinition& schema, const LintConfig& config = {});

/// True when any finding has error severity (CLI exit 1).
bool has_lint_errors(const std::vector<LintFinding>& findings);

std::string lint_report_text(const std::vector<LintFinding>& findings);

}  // namespace schemaforge
