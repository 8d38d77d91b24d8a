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
#include <fstream>
#include <sstream>
#include <string>

#include "schemaforge/induction.hpp"
#include "schemaforge/loader.hpp"

namespace test_support {

inline std::filesystem::path fixtures_dir() { return SCHEMAFORGE_FIXTURES_DIR; }
inline std::filesystem::path golden_dir() { return SCHEMAFORGE_GOLDEN_DIR; }

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot read ", path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline schemaforge::SchemaDefinition parse(const std::string& text) {
  schemaforge::Diagnostics diags;
  return schemaforge::parse_schema(text, diags);
}

inline schemaforge::SchemaDefinition merge(const schemaforge::SchemaDefinition& root) {
  schemaforge::Diagnostics diags;
  schemaforge::ImportResolver resolver;
  return schemaforge::resolve_imports(root, resolver, diags);
}

inline schemaforge::CompiledSchema compile_text(const std::string& text) {
  schemaforge::Diagnostics diags;
  return schemaforge::compile_schema(merge(parse(text)), diags);
}

inline schemaforge::CompiledSchema compile_fixture(const std::string& relative) {
  schemaforge::Diagnostics diags;
  schemaforge::SchemaDefinition merged =
      schemaforge::load_schema_file(fixtures_dir() / relative, diags);
  return schemaforge::compile_schema(merged, diags);
}

}  // namespace test_support
