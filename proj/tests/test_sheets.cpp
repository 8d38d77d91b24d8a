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

#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "schemaforge/sheets.hpp"

using namespace schemaforge;
using test_support::read_file;

namespace {

SchemaDefinition convert(const std::string& text, Diagnostics& diags) {
  Sheet sheet = parse_sheet(text, diags);
  return sheet_to_schema(sheet, "https://example.org/sheet", "sheet_schema", diags);
}

}  // namespace

TEST_CASE("cardinality strings") {
  CHECK(parse_cardinality("0..1") == Cardinality{0, 1});
  CHECK(parse_cardinality("1") == Cardinality{1, 1});
  CHECK(parse_cardinality("0..*") == Cardinality{0, std::nullopt});
  CHECK(parse_cardinality("") == Cardinality{0, 1});
  CHECK(parse_cardinality("2..5") == Cardinality{2, 5});
  CHECK(parse_cardinality("1..*") == Cardinality{1, std::nullopt});

  CHECK(parse_cardinality("1").required());
  CHECK_FALSE(parse_cardinality("0..1").required());
  CHECK(parse_cardinality("0..*").multivalued());
  CHECK(parse_cardinality("2..5").multivalued());
  CHECK_FALSE(parse_cardinality("1").multivalued());

  CHECK_THROWS_AS(parse_cardinality("x"), ParseError);
  CHECK_THROWS_AS(parse_cardinality("1.."), ParseError);
  CHECK_THROWS_AS(parse_cardinality("..2"), ParseError);
  CHECK_THROWS_AS(parse_cardinality("5..2"), ParseError);
  CHECK_THROWS_AS(parse_cardinality("0"), ParseError);
  CHECK_THROWS_AS(parse_cardinality("1..0"), ParseError);
}

TEST_CASE("format then parse is the identity on formatted output") {
  for (const Cardinality& c :
       {Cardinality{0, 1}, Cardinality{1, 1}, Cardinality{0, std::nullopt}, Cardinality{2, 5},
        Cardinality{1, std::nullopt}}) {
    CHECK(parse_cardinality(format_cardinality(c)) == c);
  }
}

TEST_CASE("the shipped sheet converts to the expected schema") {
  Diagnostics diags;
  std::string text = read_file(test_support::fixtures_dir() / "sample_sheet.tsv");
  Sheet sheet = parse_sheet(text, diags);
  SchemaDefinition schema =
      sheet_to_schema(sheet, "https://example.org/sheet-demo", "sheet_demo", diags);

  CHECK(schema.classes.size() == 2);
  const ClassDefinition* sample = schema.classes.find("Sample");
  const ClassDefinition* study = schema.classes.find("Study");
  REQUIRE(sample != nullptr);
  REQUIRE(study != nullptr);
  CHECK(sample->attributes.keys() ==
        std::vector<std::string>{"environment_type", "latitude", "longitude"});
  CHECK(study->attributes.keys() == std::vector<std::string>{"id"});

  SUBCASE("latitude resolves the contradiction in favor of required") {
    const SlotDefinition* latitude = sample->attributes.find("latitude");
    REQUIRE(latitude != nullptr);
    CHECK(latitude->required == true);
    CHECK(latitude->range == "float");
    CHECK(latitude->description == "The latitude of the sample location.");
    bool contradiction_warned = false;
    for (const auto& d : diags)
      if (d.message.find("required column wins") != std::string::npos &&
          d.context == "Sample.latitude")
        contradiction_warned = true;
    CHECK(contradiction_warned);
  }
  SUBCASE("the study identifier row maps uri:curie onto the curie type") {
    const SlotDefinition* id = study->attributes.find("id");
    REQUIRE(id != nullptr);
    CHECK(id->required == true);
    CHECK(id->range == "curie");
    CHECK_FALSE(id->multivalued.has_value());
  }
  SUBCASE("unknown ranges defer to compile with a warning") {
    bool deferred = false;
    for (const auto& d : diags)
      if (d.message.find("EnvironmentTypeEnum") != std::string::npos &&
          d.message.find("deferred") != std::string::npos)
        deferred = true;
    CHECK(deferred);
  }
  SUBCASE("the blank extra descriptor row is ignored with a warning") {
    bool extra = false;
    for (const auto& d : diags)
      if (d.message.find("extra descriptor row") != std::string::npos) extra = true;
    CHECK(extra);
  }
}

TEST_CASE("required FALSE against a mandatory cardinality is an error") {
  Diagnostics diags;
  CHECK_THROWS_AS(convert("record\tfield\tmultiplicity\trequired\n"
                          "> class\tslot\tcardinality\trequired\n"
                          "Thing\tbroken\t1\tFALSE\n",
                          diags),
                  ConflictError);
}

TEST_CASE("duplicate class/slot pairs are rejected") {
  Diagnostics diags;
  CHECK_THROWS_AS(convert("record\tfield\n"
                          "> class\tslot\n"
                          "Thing\ttwice\n"
                          "Thing\ttwice\n",
                          diags),
                  ConflictError);
}

TEST_CASE("comments, blank rows, and cell whitespace are tolerated") {
  Diagnostics diags;
  SchemaDefinition schema = convert("record\tfield\trange\n"
                                    "> class\tslot\trange\n"
                                    "# a comment row\n"
                                    "\t\t\n"
                                    " Thing \t name \t string \n",
                                    diags);
  const ClassDefinition* thing = schema.classes.find("Thing");
  REQUIRE(thing != nullptr);
  CHECK(thing->attributes.contains("name"));
}

TEST_CASE("descriptor rows are validated") {
  Diagnostics diags;
  SUBCASE("a column without a binding is an error") {
    CHECK_THROWS_AS(parse_sheet("record\tfield\textra\n"
                                "> class\tslot\t\n"
                                "Thing\tname\tx\n",
                                diags),
                    ParseError);
  }
  SUBCASE("unknown descriptor tokens are errors") {
    CHECK_THROWS_AS(parse_sheet("record\tfield\n"
                                "> class\twibble\n",
                                diags),
                    ParseError);
  }
  SUBCASE("exactly one class column is required") {
    CHECK_THROWS_AS(parse_sheet("a\tb\n"
                                "> class\tclass\n",
                                diags),
                    ParseError);
    CHECK_THROWS_AS(parse_sheet("a\tb\n"
                                "> slot\trange\n",
                                diags),
                    ParseError);
  }
  SUBCASE("columns can be explicitly ignored") {
    SchemaDefinition schema = convert("record\tfield\tnotes\n"
                                      "> class\tslot\tignore\n"
                                      "Thing\tname\twhatever\n",
                                      diags);
    CHECK(schema.classes.find("Thing")->attributes.contains("name"));
  }
  SUBCASE("data before the descriptor row is an error") {
    CHECK_THROWS_AS(parse_sheet("record\tfield\n"
                                "Thing\tname\n",
                                diags),
                    ParseError);
  }
}

TEST_CASE("the parents column feeds is_a for classes and slots") {
  Diagnostics diags;
  SchemaDefinition schema = convert("record\tfield\tparents\n"
                                    "> class\tslot\tis_a\n"
                                    "Base\t\t\n"
                                    "Derived\t\tBase\n"
                                    "Derived\tspecial\t\n",
                                    diags);
  CHECK(schema.classes.find("Derived")->is_a == "Base");
}

TEST_CASE("row order does not affect the converted schema") {
  Diagnostics diags;
  std::string header = "record\tfield\tmultiplicity\trange\tdesc\n"
                       "> class\tslot\tcardinality\trange\tdescription\n";
  std::string rows_a = "Sample\tlatitude\t0..1\tfloat\tLatitude.\n"
                       "Sample\tlongitude\t0..1\tfloat\tLongitude.\n"
                       "Study\tid\t1\turi:curie\tIdentifier.\n";
  std::string rows_b = "Study\tid\t1\turi:curie\tIdentifier.\n"
                       "Sample\tlongitude\t0..1\tfloat\tLongitude.\n"
                       "Sample\tlatitude\t0..1\tfloat\tLatitude.\n";
  Diagnostics diags_b;
  SchemaDefinition a = convert(header + rows_a, diags);
  SchemaDefinition b = convert(header + rows_b, diags_b);
  CHECK(a == b);
}
