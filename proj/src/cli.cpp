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

#include "schemaforge/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "schemaforge/generators.hpp"
#include "schemaforge/linter.hpp"
#include "schemaforge/loader.hpp"
#include "schemaforge/mapper.hpp"
#include "schemaforge/sheets.hpp"
#include "schemaforge/validator.hpp"

namespace schemaforge {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

void print_diagnostics(const Diagnostics& diags) {
  for (const auto& d : diags) {
    std::cerr << severity_name(d.severity) << ": " << d.message;
    if (!d.context.empty()) std::cerr << " [" << d.context << "]";
    std::cerr << "\n";
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ImportError("cannot read file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ImportError("cannot write file: " + out_path);
  out << content;
}

struct CompileInputs {
  std::string schema_path;
  bool allow_remote = false;
};

CompiledSchema load_and_compile(const CompileInputs& in, Diagnostics& diags) {
  SchemaDefinition merged = load_schema_file(in.schema_path, diags, in.allow_remote);
  return compile_schema(merged, diags);
}

std::vector<DataRecord> load_all_records(const std::vector<std::string>& paths,
                                         const std::string& asserted_class) {
  std::vector<DataRecord> records;
  for (const auto& path : paths) {
    std::vector<DataRecord> part = load_records_file(path, asserted_class);
    for (auto& r : part) records.push_back(std::move(r));
  }
  return records;
}

int run_compile(const CompileInputs& in, const std::string& format) {
  Diagnostics diags;
  CompiledSchema compiled = load_and_compile(in, diags);
  print_diagnostics(diags);
  if (format == "json") {
    ordered_json doc;
    doc["id"] = compiled.source.id;
    doc["name"] = compiled.source.name;
    ordered_json classes = ordered_json::object();
    for (const auto& [class_name, slots] : compiled.induced) {
      ordered_json entry;
      entry["ancestors"] = *compiled.ancestors.find(class_name);
      ordered_json slot_list = ordered_json::array();
      for (const auto& slot : slots) {
        slot_list.push_back({{"name", slot.name},
                             {"range", slot.effective_range.name},
                             {"cardinality", cardinality_text(slot.required, slot.multivalued)},
                             {"identifier", slot.identifier},
                             {"inheritance", std::string(inheritance_label_name(slot.inheritance))}});
      }
      entry["slots"] = slot_list;
      classes[class_name] = entry;
    }
    doc["classes"] = classes;
    std::cout << doc.dump(2) << "\n";
    return exit_code::kOk;
  }
  std::cout << "schema " << compiled.source.name << " (" << compiled.source.id << ")\n"
            << "  classes: " << compiled.source.classes.size()
            << ", slots: " << compiled.source.slots.size()
            << ", enums: " << compiled.source.enums.size()
            << ", types: " << compiled.source.types.size() << "\n";
  for (const auto& [class_name, slots] : compiled.induced) {
    std::cout << "class " << class_name << " (" << slots.size() << " slot"
              << (slots.size() == 1 ? "" : "s") << ")\n";
    for (const auto& slot : slots)
      std::cout << "  " << slot.name << ": " << cardinality_text(slot.required, slot.multivalued)
                << " " << slot.effective_range.name << " ("
                << inheritance_label_name(slot.inheritance) << ")\n";
  }
  return exit_code::kOk;
}

int run_validate(const CompileInputs& in, const std::string& class_name,
                 const std::vector<std::string>& data_paths, const std::string& format,
                 bool coerce) {
  Diagnostics diags;
  CompiledSchema compiled = load_and_compile(in, diags);
  print_diagnostics(diags);
  std::vector<DataRecord> records = load_all_records(data_paths, class_name);
  ValidatorOptions options;
  options.coerce = coerce;
  ValidationReport report = validate_collection(compiled, records, options);
  if (format == "json") std::cout << report_to_json(report).dump(2) << "\n";
  else std::cout << report_to_text(report);
  return report.valid() ? exit_code::kOk : exit_code::kFindings;
}

int run_lint(const std::string& schema_path, const std::string& config_path,
             const std::string& format) {
  Diagnostics diags;
  SchemaDefinition schema = parse_schema(read_file(schema_path), diags);
  print_diagnostics(diags);
  LintConfig config;
  if (!config_path.empty()) config = LintConfig::parse(read_file(config_path));
  std::vector<LintFinding> findings = lint(schema, config);
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& f : findings)
      arr.push_back({{"rule_id", f.rule_id},
                     {"element", f.element},
                     {"severity", severity_name(f.severity)},
                     {"message", f.message}});
    std::cout << ordered_json{{"findings", arr}}.dump(2) << "\n";
  } else {
    std::cout << lint_report_text(findings);
  }
  return has_lint_errors(findings) ? exit_code::kFindings : exit_code::kOk;
}

int run_gen(const CompileInputs& in, const std::string& target, const std::string& out_path,
            const std::string& root_class, int inline_depth, bool surrogate_keys) {
  Diagnostics diags;
  CompiledSchema compiled = load_and_compile(in, diags);
  print_diagnostics(diags);
  GeneratorOptions options;
  options.inline_depth = inline_depth;
  options.surrogate_keys = surrogate_keys;
  if (!root_class.empty()) options.root_class = root_class;

  if (target == "docs") {
    fs::path dir = out_path.empty() ? fs::path("docs") : fs::path(out_path);
    fs::create_directories(dir);
    for (const auto& [name, content] : gen_docs(compiled)) {
      std::ofstream page(dir / name, std::ios::binary);
      if (!page) throw ImportError("cannot write file: " + (dir / name).string());
      page << content;
    }
    return exit_code::kOk;
  }

  std::string output;
  if (target == "json-schema") {
    options.target = GeneratorTarget::JsonSchema;
    output = gen_json_schema(compiled, options);
  } else if (target == "sql-ddl") {
    options.target = GeneratorTarget::SqlDdl;
    output = gen_sql_ddl(compiled, options);
  } else {
    options.target = GeneratorTarget::JsonLdContext;
    output = gen_context(compiled);
  }
  write_output(out_path, output);
  return exit_code::kOk;
}

int run_sheets(const std::string& tsv_path, const std::string& id, const std::string& name,
               const std::string& out_path) {
  Diagnostics diags;
  Sheet sheet = parse_sheet(read_file(tsv_path), diags);
  SchemaDefinition schema = sheet_to_schema(sheet, id, name, diags);
  print_diagnostics(diags);
  write_output(out_path, serialize_schema(schema));
  return exit_code::kOk;
}

int run_map(const CompileInputs& in, const std::string& spec_path,
            const std::vector<std::string>& data_paths, std::string class_name,
            const std::string& out_path) {
  Diagnostics diags;
  SchemaDefinition source = load_schema_file(in.schema_path, diags, in.allow_remote);
  TransformSpec spec = parse_transform_spec(read_file(spec_path), diags);
  validate_transform_spec(spec, source);

  if (data_paths.empty()) {
    SchemaDefinition derived = derive_schema(spec, source, diags);
    print_diagnostics(diags);
    write_output(out_path, serialize_schema(derived));
    return exit_code::kOk;
  }

  if (class_name.empty()) {
    if (spec.bindings.size() == 1) {
      class_name = spec.bindings.front().source_class;
    } else {
      std::cerr << "error: --class-name is required when the spec binds more than one class\n";
      return exit_code::kUsage;
    }
  }
  print_diagnostics(diags);
  std::vector<DataRecord> records = load_all_records(data_paths, class_name);
  std::vector<TransformOutcome> outcomes = transform_collection(spec, records);
  ordered_json arr = ordered_json::array();
  bool any_failed = false;
  for (const auto& outcome : outcomes) {
    if (outcome.ok()) {
      arr.push_back(record_to_json(*outcome.record));
    } else {
      arr.push_back(ordered_json{{"error", outcome.error}});
      any_failed = true;
    }
  }
  write_output(out_path, arr.dump(2) + "\n");
  return any_failed ? exit_code::kFindings : exit_code::kOk;
}

}  // namespace

int run(std::vector<std::string> args) {
  CLI::App app{"Schema toolkit: compile, validate, lint, generate, convert, transform"};
  app.name("schemaforge");
  app.require_subcommand(1);

  CompileInputs inputs;
  std::string format = "text";
  std::string class_name, config_path, out_path, target, spec_path, sheet_id, sheet_name;
  std::vector<std::string> data_paths;
  bool coerce = false, surrogate_keys = false;
  int inline_depth = 0;

  auto* compile = app.add_subcommand("compile", "Compile a schema and print its induced view");
  compile->add_option("schema", inputs.schema_path, "Schema document")->required();
  compile->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  compile->add_flag("--allow-remote", inputs.allow_remote, "Allow http(s) imports");

  auto* validate = app.add_subcommand("validate", "Validate data records against a schema");
  validate->add_option("-s,--schema", inputs.schema_path, "Schema document")->required();
  validate->add_option("-C,--class-name", class_name, "Class the records instantiate")
      ->required();
  validate->add_option("data", data_paths, "Record files (.yaml, .json, .tsv)")->required();
  validate->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  validate->add_flag("--coerce", coerce, "Permit string-to-number coercion (warns per value)");
  validate->add_flag("--allow-remote", inputs.allow_remote, "Allow http(s) imports");

  auto* lint_cmd = app.add_subcommand("lint", "Check a schema against best-practice rules");
  lint_cmd->add_option("schema", inputs.schema_path, "Schema document")->required();
  lint_cmd->add_option("--config", config_path, "Rule configuration (rule id to off|warning|error)");
  lint_cmd->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* gen = app.add_subcommand("gen", "Generate a downstream serialization");
  gen->add_option("--target", target, "What to generate")
      ->required()
      ->check(CLI::IsMember({"json-schema", "sql-ddl", "context", "docs"}));
  gen->add_option("schema", inputs.schema_path, "Schema document")->required();
  gen->add_option("-o,--output", out_path, "Output file (or directory for docs)");
  gen->add_option("--root-class", class_name, "Top-level class for json-schema");
  gen->add_option("--inline-depth", inline_depth, "Inline class ranges up to this depth");
  gen->add_flag("--surrogate-keys", surrogate_keys,
                "Allow foreign keys to classes without identifiers");
  gen->add_flag("--allow-remote", inputs.allow_remote, "Allow http(s) imports");

  auto* sheets_cmd = app.add_subcommand("sheets", "Convert a tabular schema sheet");
  sheets_cmd->add_option("tsv", inputs.schema_path, "Tab-separated sheet")->required();
  sheets_cmd->add_option("--id", sheet_id, "Schema id (absolute URI)")->required();
  sheets_cmd->add_option("--name", sheet_name, "Schema name")->required();
  sheets_cmd->add_option("-o,--output", out_path, "Output file");

  auto* map_cmd = app.add_subcommand("map", "Apply a transformation spec to a schema or data");
  map_cmd->add_option("--spec", spec_path, "Transformation document")->required();
  map_cmd->add_option("-s,--schema", inputs.schema_path, "Source schema document")->required();
  map_cmd->add_option("data", data_paths, "Record files to transform");
  map_cmd->add_option("-C,--class-name", class_name, "Class the records instantiate");
  map_cmd->add_option("-o,--output", out_path, "Output file");
  map_cmd->add_flag("--allow-remote", inputs.allow_remote, "Allow http(s) imports");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code::kUsage;
  }

  try {
    if (*compile) return run_compile(inputs, format);
    if (*validate) return run_validate(inputs, class_name, data_paths, format, coerce);
    if (*lint_cmd) return run_lint(inputs.schema_path, config_path, format);
    if (*gen) return run_gen(inputs, target, out_path, class_name, inline_depth, surrogate_keys);
    if (*sheets_cmd) return run_sheets(inputs.schema_path, sheet_id, sheet_name, out_path);
    if (*map_cmd) return run_map(inputs, spec_path, data_paths, class_name, out_path);
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::kInput;
  }
  return exit_code::kUsage;
}

}  // namespace schemaforge
