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

#include "schemaforge/linter.hpp"

#include <yaml-cpp/yaml.h>

#include <cctype>
#include <sstream>

namespace schemaforge {

const std::vector<std::string>& lint_rule_ids() {
  static const std::vector<std::string> ids = {
      std::string(lint_rules::kMissingDescription),
      std::string(lint_rules::kClassNameNotCamelCase),
      std::string(lint_rules::kSlotNameNotSnakeCase),
      std::string(lint_rules::kEnumNameNotCamelCase),
      std::string(lint_rules::kMissingRange),
      std::string(lint_rules::kEmptyEnum),
      std::string(lint_rules::kUndeclaredPrefixInMapping)};
  return ids;
}

LintConfig LintConfig::parse(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ConfigError("invalid lint config: " + e.msg);
  }
  LintConfig config;
  if (root.IsNull() || !root.IsDefined()) return config;
  if (!root.IsMap()) throw ConfigError("lint config must be a mapping of rule id to level");
  for (const auto& entry : root) {
    const std::string rule = entry.first.as<std::string>();
    const auto& ids = lint_rule_ids();
    if (std::find(ids.begin(), ids.end(), rule) == ids.end())
      throw ConfigError("unknown lint rule id '" + rule + "'");
    const std::string level = entry.second.as<std::string>();
    LintRuleSetting setting;
    if (level == "off") setting.enabled = false;
    else if (level == "warning") setting.severity = Severity::Warning;
    else if (level == "error") setting.severity = Severity::Error;
    else
      throw ConfigError("unknown level '" + level + "' for rule '" + rule +
                        "' (expected off, warning, or error)");
    config.rules.assign(rule, setting);
  }
  return config;
}

namespace {

// CamelCase: first character uppercase, no underscores, no spaces. Digits
// permitted.
bool is_camel_case(std::string_view name) {
  if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (c == '_' || c == ' ') return false;
  return true;
}

// snake_case: all lowercase alphanumerics and underscores.
bool is_snake_case(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (c == '_' || std::isdigit(static_cast<unsigned char>(c))) continue;
    if (!std::islower(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

class RuleSink {
 public:
  RuleSink(const LintConfig& config, std::vector<LintFinding>& out)
      : config_(config), out_(out) {}

  void report(std::string_view rule_id, const std::string& element, std::string message) {
    LintRuleSetting setting = config_.setting_for(rule_id);
    if (!setting.enabled) return;
    out_.push_back({std::string(rule_id), element, setting.severity, std::move(message)});
  }

 private:
  const LintConfig& config_;
  std::vector<LintFinding>& out_;
};

void check_mapping_prefixes(RuleSink& sink, const SchemaDefinition& schema,
                            const std::string& element, const std::string& what,
                            const std::string& curie) {
  if (curie.find("://") != std::string::npos) return;  // a full URI, not a CURIE
  auto parts = split_curie(curie);
  if (!parts) return;  // multi-colon URNs and plain text pass
  if (!schema.prefixes.contains(parts->first))
    sink.report(lint_rules::kUndeclaredPrefixInMapping, element,
                what + " '" + curie + "' uses undeclared prefix '" + parts->first + "'");
}

void check_slot_like(RuleSink& sink, const SchemaDefinition& schema, const std::string& element,
                     const SlotDefinition& slot, const std::string& label) {
  if (!slot.description)
    sink.report(lint_rules::kMissingDescription, element, label + " has no description");
  if (!is_snake_case(slot.name))
    sink.report(lint_rules::kSlotNameNotSnakeCase, element,
                label + " is not snake_case (expected all-lowercase with underscores)");
  if (!slot.range && !schema.default_range)
    sink.report(lint_rules::kMissingRange, element,
                label + " has no range and the schema declares no default_range");
  if (slot.slot_uri) check_mapping_prefixes(sink, schema, element, "slot_uri", *slot.slot_uri);
  for (const auto& m : slot.mappings)
    check_mapping_prefixes(sink, schema, element, "mapping", m.target);
}

}  // namespace

std::vector<LintFinding> lint(const SchemaDefinition& schema, const LintConfig& config) {
  std::vector<LintFinding> findings;
  RuleSink sink(config, findings);

  for (const auto& [name, cls] : schema.classes) {
    if (!cls.description)
      sink.report(lint_rules::kMissingDescription, name, "class '" + name + "' has no description");
    if (!is_camel_case(name))
      sink.report(lint_rules::kClassNameNotCamelCase, name,
                  "class '" + name + "' is not CamelCase (expected leading uppercase, no "
                  "underscores or spaces)");
    if (cls.class_uri) check_mapping_prefixes(sink, schema, name, "class_uri", *cls.class_uri);
    for (const auto& m : cls.mappings) check_mapping_prefixes(sink, schema, name, "mapping", m.target);
    for (const auto& [attr_name, attr] : cls.attributes)
      check_slot_like(sink, schema, name, attr, "attribute '" + attr_name + "'");
  }
  for (const auto& [name, slot] : schema.slots)
    check_slot_like(sink, schema, name, slot, "slot '" + name + "'");
  for (const auto& [name, en] : schema.enums) {
    if (!en.description)
      sink.report(lint_rules::kMissingDescription, name, "enum '" + name + "' has no description");
    if (!is_camel_case(name))
      sink.report(lint_rules::kEnumNameNotCamelCase, name,
                  "enum '" + name + "' is not CamelCase (expected leading uppercase, no "
                  "underscores or spaces)");
    if (en.permissible_values.empty())
      sink.report(lint_rules::kEmptyEnum, name, "enum '" + name + "' has no permissible values");
    for (const auto& [text, pv] : en.permissible_values)
      if (pv.meaning)
        check_mapping_prefixes(sink, schema, name, "meaning of '" + text + "'", *pv.meaning);
  }
  for (const auto& [name, type] : schema.types) {
    if (!type.description)
      sink.report(lint_rules::kMissingDescription, name, "type '" + name + "' has no description");
  }
  return findings;
}

bool has_lint_errors(const std::vector<LintFinding>& findings) {
  for (const auto& f : findings)
    if (f.severity == Severity::Error) return true;
  return false;
}

std::string lint_report_text(const std::vector<LintFinding>& findings) {
  std::ostringstream out;
  for (const auto& f : findings)
    out << severity_name(f.severity) << " [" << f.rule_id << "] " << f.element << ": "
        << f.message << "\n";
  out << findings.size() << " finding" << (findings.size() == 1 ? "" : "s") << "\n";
  return out.str();
}

}  // namespace schemaforge
