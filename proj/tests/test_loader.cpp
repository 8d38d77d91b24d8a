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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "doctest.h"
#include "helpers.hpp"
#include "httplib.h"
#include "schema_generator.hpp"
#include "schemaforge/loader.hpp"

using namespace schemaforge;
using test_support::parse;

namespace {

const char* kSampleDoc = R"(id: https://w3id.org/environmental-sample-schema
name: environmental_sample_schema
prefixes:
  samp: https://w3id.org/environmental-sample-schema/
default_prefix: samp
classes:
  Sample:
    description: A collection of attributes for one sample.
    slots:
    - latitude
    - longitude
    - environment_type
    - depth
    - depth_units
slots:
  latitude:
    description: The latitude of the sample location.
    required: true
    range: float
  longitude:
    description: The longitude of the sample location.
    required: true
    range: float
  environment_type:
    description: The type of sample
  depth:
    description: Depth below the surface.
    range: float
  depth_units:
    description: Unit for the depth column.
)";

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "schemaforge_loader_test";
  std::filesystem::create_directories(dir);
  std::filesystem::path path = dir / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("parsing a sample schema document") {
  Diagnostics diags;
  SchemaDefinition schema = parse_schema(kSampleDoc, diags);
  CHECK(schema.id == "https://w3id.org/environmental-sample-schema");
  CHECK(schema.classes.size() == 1);
  const ClassDefinition* sample = schema.classes.find("Sample");
  REQUIRE(sample != nullptr);
  CHECK(sample->slots.size() == 5);
  CHECK(diags.empty());
}

TEST_CASE("parse errors") {
  Diagnostics diags;
  SUBCASE("empty document is missing id") {
    try {
      parse_schema("", diags);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("missing required key: id") != std::string::npos);
    }
  }
  SUBCASE("non-mapping top level") {
    CHECK_THROWS_AS(parse_schema("- a\n- b\n", diags), ParseError);
  }
  SUBCASE("missing name") {
    CHECK_THROWS_AS(parse_schema("id: https://example.org/x\n", diags), ParseError);
  }
  SUBCASE("duplicate element name in one map") {
    CHECK_THROWS_AS(parse_schema("id: https://example.org/x\n"
                                 "name: x\n"
                                 "classes:\n"
                                 "  A:\n"
                                 "  A:\n",
                                 diags),
                    ParseError);
  }
  SUBCASE("same name as class and enum") {
    CHECK_THROWS_AS(parse_schema("id: https://example.org/x\n"
                                 "name: x\n"
                                 "classes:\n"
                                 "  A:\n"
                                 "enums:\n"
                                 "  A:\n",
                                 diags),
                    InvariantError);
  }
  SUBCASE("syntax error carries a position") {
    try {
      parse_schema("id: [unclosed\nname: x\n", diags);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() > 0);
    }
  }
}

TEST_CASE("unrecognized keys are warnings, not errors") {
  Diagnostics diags;
  SchemaDefinition schema = parse_schema("id: https://example.org/x\n"
                                         "name: x\n"
                                         "see_also: something\n"
                                         "classes:\n"
                                         "  A:\n"
                                         "    annotations: ignored\n",
                                         diags);
  CHECK(schema.classes.size() == 1);
  REQUIRE(diags.size() == 2);
  CHECK(diags[0].message.find("see_also") != std::string::npos);
  CHECK(diags[1].message.find("annotations") != std::string::npos);
}

TEST_CASE("document order of element maps is preserved") {
  Diagnostics diags;
  SchemaDefinition schema = parse_schema("id: https://example.org/x\n"
                                         "name: x\n"
                                         "slots:\n"
                                         "  zulu:\n"
                                         "  alpha:\n"
                                         "  mike:\n",
                                         diags);
  CHECK(schema.slots.keys() == std::vector<std::string>{"zulu", "alpha", "mike"});
}

TEST_CASE("serialize then parse is the identity on a tricky schema") {
  Diagnostics diags;
  SchemaDefinition schema = parse(kSampleDoc);
  EnumDefinition en;
  en.name = "TrickyEnum";
  for (std::string text : {"true", "1,5,8", "a: b", "36.1069\u00b0 -112.1129", "x #y", "-lead"}) {
    PermissibleValue pv;
    pv.text = text;
    en.permissible_values.insert(text, pv);
  }
  schema.enums.insert(en.name, en);
  SlotDefinition weird;
  weird.name = "weird slot";
  weird.description = "has \"quotes\" and a\ttab";
  weird.pattern = "\\d+\\.\\d+";
  weird.minimum_value = -0.5;
  weird.maximum_value = 1e9;
  schema.slots.insert(weird.name, weird);

  std::string text = serialize_schema(schema);
  SchemaDefinition reparsed = parse_schema(text, diags);
  CHECK(reparsed == schema);
  CHECK(diags.empty());
}

TEST_CASE("parse-serialize round trip over generated schemas") {
  std::mt19937 rng(20260810);
  for (int i = 0; i < 60; ++i) {
    SchemaDefinition schema = test_support::random_schema(rng);
    CAPTURE(i);
    Diagnostics diags;
    SchemaDefinition reparsed = parse_schema(serialize_schema(schema), diags);
    REQUIRE(reparsed == schema);
  }
}

TEST_CASE("resolving imports") {
  SUBCASE("built-ins merge implicitly") {
    Diagnostics diags;
    SchemaDefinition root = parse(kSampleDoc);
    ImportResolver resolver;
    SchemaDefinition merged = resolve_imports(root, resolver, diags);
    CHECK(merged.types.size() == 8);  // the built-in types
    CHECK(merged.classes.size() == 1);
    CHECK(merged.prefixes.contains("samp"));
    CHECK(merged.prefixes.contains("schemaforge"));
  }

  SUBCASE("an imported enum resolves as a range") {
    write_temp("enums_lib.yaml",
               "id: https://example.org/enums\n"
               "name: enums_lib\n"
               "enums:\n"
               "  EnvironmentTypeEnum:\n"
               "    permissible_values:\n"
               "      soil:\n");
    Diagnostics diags;
    SchemaDefinition root = parse("id: https://example.org/root\n"
                                  "name: root\n"
                                  "imports:\n"
                                  "- enums_lib\n"
                                  "classes:\n"
                                  "  Sample:\n"
                                  "    attributes:\n"
                                  "      environment_type:\n"
                                  "        range: EnvironmentTypeEnum\n");
    ImportResolver resolver({write_temp("x", "").parent_path()});
    SchemaDefinition merged = resolve_imports(root, resolver, diags);
    CHECK(merged.enums.contains("EnvironmentTypeEnum"));
    CompiledSchema compiled = compile_schema(merged, diags);
    CHECK(compiled.find_slot("Sample", "environment_type")->effective_range.kind ==
          ElementKind::Enum);
  }

  SUBCASE("cycles are reported with their path") {
    write_temp("A.yaml", "id: https://example.org/A\nname: A\nimports: [B]\n");
    write_temp("B.yaml", "id: https://example.org/B\nname: B\nimports: [A]\n");
    Diagnostics diags;
    SchemaDefinition root = parse("id: https://example.org/A\nname: A\nimports: [B]\n");
    ImportResolver resolver({write_temp("x", "").parent_path()});
    try {
      resolve_imports(root, resolver, diags);
      FAIL("expected CycleError");
    } catch (const CycleError& e) {
      CHECK(std::string(e.what()).find("A -> B -> A") != std::string::npos);
    }
  }

  SUBCASE("unresolvable import") {
    Diagnostics diags;
    SchemaDefinition root =
        parse("id: https://example.org/r\nname: r\nimports: [does_not_exist]\n");
    ImportResolver resolver;
    CHECK_THROWS_AS(resolve_imports(root, resolver, diags), ImportError);
  }

  SUBCASE("kind conflict across schemas") {
    write_temp("kinds.yaml",
               "id: https://example.org/kinds\nname: kinds\nenums:\n  Thing:\n");
    Diagnostics diags;
    SchemaDefinition root = parse("id: https://example.org/r\n"
                                  "name: r\n"
                                  "imports: [kinds]\n"
                                  "classes:\n  Thing:\n");
    ImportResolver resolver({write_temp("x", "").parent_path()});
    CHECK_THROWS_AS(resolve_imports(root, resolver, diags), ConflictError);
  }

  SUBCASE("the importing schema wins and a warning records the override") {
    write_temp("base_defs.yaml",
               "id: https://example.org/base\n"
               "name: base_defs\n"
               "slots:\n"
               "  depth:\n"
               "    range: integer\n");
    Diagnostics diags;
    SchemaDefinition root = parse("id: https://example.org/r\n"
                                  "name: r\n"
                                  "imports: [base_defs]\n"
                                  "slots:\n"
                                  "  depth:\n"
                                  "    range: float\n");
    ImportResolver resolver({write_temp("x", "").parent_path()});
    SchemaDefinition merged = resolve_imports(root, resolver, diags);
    CHECK(merged.slots.find("depth")->range == "float");
    bool warned = false;
    for (const auto& d : diags)
      if (d.message.find("overrides") != std::string::npos) warned = true;
    CHECK(warned);
  }

  SUBCASE("among siblings the later import wins") {
    write_temp("sib1.yaml",
               "id: https://example.org/s1\nname: sib1\nslots:\n  s:\n    range: integer\n");
    write_temp("sib2.yaml",
               "id: https://example.org/s2\nname: sib2\nslots:\n  s:\n    range: float\n");
    Diagnostics diags;
    SchemaDefinition root =
        parse("id: https://example.org/r\nname: r\nimports: [sib1, sib2]\n");
    ImportResolver resolver({write_temp("x", "").parent_path()});
    SchemaDefinition merged = resolve_imports(root, resolver, diags);
    CHECK(merged.slots.find("s")->range == "float");
  }

  SUBCASE("merge is idempotent") {
    write_temp("idem.yaml",
               "id: https://example.org/idem\nname: idem\nslots:\n  s:\n    range: string\n");
    Diagnostics diags;
    SchemaDefinition root = parse("id: https://example.org/r\nname: r\nimports: [idem]\n");
    ImportResolver resolver({write_temp("x", "").parent_path()});
    SchemaDefinition once = resolve_imports(root, resolver, diags);
    SchemaDefinition twice = resolve_imports(once, resolver, diags);
    CHECK(once == twice);
  }

  SUBCASE("the merge does not depend on resolver memoization state") {
    write_temp("memo.yaml",
               "id: https://example.org/memo\nname: memo\nslots:\n  s:\n    range: string\n");
    Diagnostics diags;
    SchemaDefinition root = parse("id: https://example.org/r\nname: r\nimports: [memo]\n");
    ImportResolver cold({write_temp("x", "").parent_path()});
    ImportResolver warm({write_temp("x", "").parent_path()});
    warm.load("memo", diags);  // pre-populate the cache
    CHECK(resolve_imports(root, cold, diags) == resolve_imports(root, warm, diags));
  }
}

TEST_CASE("prefix maps") {
  SUBCASE("identical re-declarations merge silently") {
    PrefixMap a, b;
    a.insert("shared_ns", "https://example.org/ns/");
    b.insert("shared_ns", "https://example.org/ns/");
    merge_prefixes(a, b);
    CHECK(a.size() == 1);
  }
  SUBCASE("conflicting bases are an error naming both") {
    PrefixMap a, b;
    a.insert("ex", "https://example.org/one/");
    b.insert("ex", "https://example.org/two/");
    try {
      merge_prefixes(a, b);
      FAIL("expected ConflictError");
    } catch (const ConflictError& e) {
      std::string msg = e.what();
      CHECK(msg.find("https://example.org/one/") != std::string::npos);
      CHECK(msg.find("https://example.org/two/") != std::string::npos);
    }
  }
  SUBCASE("two imports with conflicting prefixes fail to merge") {
    write_temp("p1.yaml",
               "id: https://example.org/p1\nname: p1\nprefixes:\n  ex: https://one.example/\n");
    write_temp("p2.yaml",
               "id: https://example.org/p2\nname: p2\nprefixes:\n  ex: https://two.example/\n");
    Diagnostics diags;
    SchemaDefinition root = parse("id: https://example.org/r\nname: r\nimports: [p1, p2]\n");
    ImportResolver resolver({write_temp("x", "").parent_path()});
    CHECK_THROWS_AS(resolve_imports(root, resolver, diags), ConflictError);
  }
  SUBCASE("build_prefix_map returns the declared map") {
    Diagnostics diags;
    SchemaDefinition schema = parse("id: https://example.org/x\n"
                                    "name: x\n"
                                    "prefixes:\n"
                                    "  ENVO: http://purl.obolibrary.org/obo/ENVO_\n");
    PrefixMap map = build_prefix_map(schema);
    CHECK(map.contains("ENVO"));
  }
}

TEST_CASE("SCHEMAFORGE_PATH contributes search roots") {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "schemaforge_env_root";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "env_lib.yaml")
      << "id: https://example.org/envlib\nname: env_lib\nslots:\n  marker:\n";
  setenv("SCHEMAFORGE_PATH", dir.string().c_str(), 1);
  auto roots = ImportResolver::env_search_roots();
  unsetenv("SCHEMAFORGE_PATH");
  REQUIRE(!roots.empty());
  CHECK(roots.front() == dir);

  Diagnostics diags;
  ImportResolver resolver(roots);
  const SchemaDefinition& lib = resolver.load("env_lib", diags);
  CHECK(lib.slots.contains("marker"));
}

TEST_CASE("remote imports") {
  SUBCASE("disabled by default") {
    Diagnostics diags;
    ImportResolver resolver;
    CHECK_THROWS_AS(resolver.load("https://example.org/remote_schema", diags), ImportError);
  }
  SUBCASE("served schema loads when enabled") {
    httplib::Server server;
    server.Get("/lib.yaml", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("id: https://example.org/remote\nname: remote_lib\nslots:\n  fetched:\n",
                      "text/yaml");
    });
    int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread serve([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    Diagnostics diags;
    ImportResolver resolver;
    resolver.allow_remote = true;
    const SchemaDefinition& lib =
        resolver.load("http://127.0.0.1:" + std::to_string(port) + "/lib.yaml", diags);
    CHECK(lib.slots.contains("fetched"));

    server.stop();
    serve.join();
  }
}
