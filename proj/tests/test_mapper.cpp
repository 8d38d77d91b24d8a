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

#include "doctest.h"
#include "helpers.hpp"
#include "schemaforge/mapper.hpp"
#include "schemaforge/validator.hpp"

using namespace schemaforge;
using test_support::compile_fixture;
using test_support::merge;
using test_support::parse;
using test_support::read_file;

namespace {

TransformSpec fixture_spec(Diagnostics& diags) {
  return parse_transform_spec(
      read_file(test_support::fixtures_dir() / "legacy_to_curated.transform.yaml"), diags);
}

SchemaDefinition legacy_schema() {
  Diagnostics diags;
  return load_schema_file(test_support::fixtures_dir() / "legacy_sample.yaml", diags);
}

}  // namespace

TEST_CASE("parsing transformation specs") {
  Diagnostics diags;
  SUBCASE("a rename spec yields one rule") {
    TransformSpec spec = parse_transform_spec("transformations:\n"
                                              "- class: Sample\n"
                                              "  rules:\n"
                                              "  - rename_slot:\n"
                                              "      from: environment_type\n"
                                              "      to: sample_type\n",
                                              diags);
    REQUIRE(spec.bindings.size() == 1);
    REQUIRE(spec.bindings[0].rules.size() == 1);
    CHECK(spec.bindings[0].rules[0].kind == TransformRule::Kind::RenameSlot);
    CHECK(spec.bindings[0].rules[0].from == "environment_type");
    CHECK(spec.bindings[0].rules[0].to == "sample_type");
  }
  SUBCASE("a split spec yields ordered targets") {
    TransformSpec spec = fixture_spec(diags);
    const TransformRule& split = spec.bindings[0].rules[0];
    CHECK(split.kind == TransformRule::Kind::SplitSlot);
    REQUIRE(split.targets.size() == 2);
    CHECK(split.targets[0].slot == "latitude");
    CHECK(split.targets[1].slot == "longitude");
    CHECK(split.targets[0].type == "float");
  }
  SUBCASE("an empty rule list is the identity transform") {
    TransformSpec spec = parse_transform_spec("transformations:\n- class: Sample\n", diags);
    REQUIRE(spec.bindings.size() == 1);
    CHECK(spec.bindings[0].rules.empty());
  }
  SUBCASE("unknown rule kinds are errors") {
    CHECK_THROWS_AS(parse_transform_spec("transformations:\n"
                                         "- class: Sample\n"
                                         "  rules:\n"
                                         "  - merge_slots: {}\n",
                                         diags),
                    TransformError);
  }
  SUBCASE("a self-referential rename warns") {
    Diagnostics local;
    parse_transform_spec("transformations:\n"
                         "- class: Sample\n"
                         "  rules:\n"
                         "  - rename_slot: {from: depth, to: depth}\n",
                         local);
    REQUIRE(local.size() == 1);
    CHECK(local[0].message.find("no-op") != std::string::npos);
  }
  SUBCASE("split needs exactly one of separator and pattern") {
    CHECK_THROWS_AS(parse_transform_spec("transformations:\n"
                                         "- class: Sample\n"
                                         "  rules:\n"
                                         "  - split_slot:\n"
                                         "      from: position\n"
                                         "      targets:\n"
                                         "      - {slot: a}\n"
                                         "      - {slot: b}\n",
                                         diags),
                    TransformError);
  }
}

TEST_CASE("spec validation against the source schema") {
  Diagnostics diags;
  SchemaDefinition source = legacy_schema();
  SUBCASE("unknown class") {
    TransformSpec spec = parse_transform_spec("transformations:\n- class: Ghost\n", diags);
    CHECK_THROWS_AS(validate_transform_spec(spec, source), TransformError);
  }
  SUBCASE("unknown slot") {
    TransformSpec spec = parse_transform_spec("transformations:\n"
                                              "- class: Sample\n"
                                              "  rules:\n"
                                              "  - drop_slot: {name: ghost}\n",
                                              diags);
    CHECK_THROWS_AS(validate_transform_spec(spec, source), TransformError);
  }
  SUBCASE("one slot consumed twice") {
    TransformSpec spec = parse_transform_spec("transformations:\n"
                                              "- class: Sample\n"
                                              "  rules:\n"
                                              "  - rename_slot: {from: depth, to: depth2}\n"
                                              "  - drop_slot: {name: depth}\n",
                                              diags);
    CHECK_THROWS_AS(validate_transform_spec(spec, source), TransformError);
  }
  SUBCASE("duplicate split targets") {
    TransformSpec spec = parse_transform_spec("transformations:\n"
                                              "- class: Sample\n"
                                              "  rules:\n"
                                              "  - split_slot:\n"
                                              "      from: position\n"
                                              "      separator: \" \"\n"
                                              "      targets:\n"
                                              "      - {slot: same}\n"
                                              "      - {slot: same}\n",
                                              diags);
    CHECK_THROWS_AS(validate_transform_spec(spec, source), TransformError);
  }
  SUBCASE("pattern capture count must match target count") {
    TransformSpec spec = parse_transform_spec("transformations:\n"
                                              "- class: Sample\n"
                                              "  rules:\n"
                                              "  - split_slot:\n"
                                              "      from: position\n"
                                              "      pattern: \"(a)(b)(c)\"\n"
                                              "      targets:\n"
                                              "      - {slot: a}\n"
                                              "      - {slot: b}\n",
                                              diags);
    CHECK_THROWS_AS(validate_transform_spec(spec, source), TransformError);
  }
  SUBCASE("empty subset keep list") {
    CHECK_THROWS_AS(parse_transform_spec("transformations:\n"
                                         "- class: Sample\n"
                                         "  rules:\n"
                                         "  - subset_classes: {keep: []}\n",
                                         diags),
                    TransformError);
  }
}

TEST_CASE("deriving the target schema") {
  Diagnostics diags;
  SchemaDefinition source = legacy_schema();
  TransformSpec spec = fixture_spec(diags);
  SchemaDefinition derived = derive_schema(spec, source, diags);
  const ClassDefinition* sample = derived.classes.find("Sample");
  REQUIRE(sample != nullptr);

  SUBCASE("split replaces the source slot with typed targets") {
    CHECK_FALSE(sample->attributes.contains("position"));
    REQUIRE(sample->attributes.contains("latitude"));
    REQUIRE(sample->attributes.contains("longitude"));
    CHECK(sample->attributes.find("latitude")->range == "float");
    CHECK(sample->attributes.find("longitude")->range == "float");
  }
  SUBCASE("rename keeps everything except the name") {
    CHECK_FALSE(sample->attributes.contains("environment_type"));
    const SlotDefinition* renamed = sample->attributes.find("sample_type");
    REQUIRE(renamed != nullptr);
    CHECK(renamed->description == "The environment entry as free text.");
    CHECK(renamed->range == "string");
  }
  SUBCASE("dropped slots are gone") { CHECK_FALSE(sample->attributes.contains("depth")); }
  SUBCASE("the derived schema passes structural validation and compiles") {
    Diagnostics local;
    CompiledSchema compiled = compile_schema(merge(derived), local);
    CHECK(compiled.find_slot("Sample", "latitude")->effective_range.base == BaseKind::Float);
  }
}

TEST_CASE("rename preserves an enum range and slot_uri, flagging the latter") {
  Diagnostics diags;
  SchemaDefinition source = parse("id: https://example.org/r\n"
                                  "name: r\n"
                                  "prefixes:\n"
                                  "  ex: https://example.org/ns/\n"
                                  "enums:\n"
                                  "  EnvironmentTypeEnum:\n"
                                  "    permissible_values:\n"
                                  "      soil:\n"
                                  "classes:\n"
                                  "  Sample:\n"
                                  "    attributes:\n"
                                  "      environment_type:\n"
                                  "        range: EnvironmentTypeEnum\n"
                                  "        slot_uri: ex:environment_type\n");
  TransformSpec spec = parse_transform_spec("transformations:\n"
                                            "- class: Sample\n"
                                            "  rules:\n"
                                            "  - rename_slot:\n"
                                            "      from: environment_type\n"
                                            "      to: sample_type\n",
                                            diags);
  SchemaDefinition derived = derive_schema(spec, source, diags);
  const SlotDefinition* renamed = derived.classes.find("Sample")->attributes.find("sample_type");
  REQUIRE(renamed != nullptr);
  CHECK(renamed->range == "EnvironmentTypeEnum");
  CHECK(renamed->slot_uri == "ex:environment_type");
  bool flagged = false;
  for (const auto& d : diags)
    if (d.message.find("slot_uri") != std::string::npos) flagged = true;
  CHECK(flagged);
}

TEST_CASE("an identity spec derives a structurally equal schema") {
  Diagnostics diags;
  SchemaDefinition source = legacy_schema();
  TransformSpec identity = parse_transform_spec("transformations:\n- class: Sample\n", diags);
  CHECK(derive_schema(identity, source, diags) == source);
}

TEST_CASE("subset keeps listed classes, ancestors, and referenced ranges") {
  Diagnostics diags;
  SchemaDefinition source = parse("id: https://example.org/s\n"
                                  "name: s\n"
                                  "enums:\n"
                                  "  KeptEnum:\n"
                                  "    permissible_values:\n"
                                  "      a:\n"
                                  "  DroppedEnum:\n"
                                  "    permissible_values:\n"
                                  "      b:\n"
                                  "classes:\n"
                                  "  Root:\n"
                                  "    attributes:\n"
                                  "      tag: {range: KeptEnum}\n"
                                  "  Kept:\n"
                                  "    is_a: Root\n"
                                  "    attributes:\n"
                                  "      friend: {range: Referenced}\n"
                                  "  Referenced:\n"
                                  "  Dropped:\n"
                                  "    attributes:\n"
                                  "      other: {range: DroppedEnum}\n");
  TransformSpec spec = parse_transform_spec("transformations:\n"
                                            "- class: Kept\n"
                                            "  rules:\n"
                                            "  - subset_classes: {keep: [Kept]}\n",
                                            diags);
  SchemaDefinition derived = derive_schema(spec, source, diags);
  CHECK(derived.classes.contains("Kept"));
  CHECK(derived.classes.contains("Root"));        // ancestor closure
  CHECK(derived.classes.contains("Referenced"));  // class range
  CHECK_FALSE(derived.classes.contains("Dropped"));
  CHECK(derived.enums.contains("KeptEnum"));  // range of an inherited slot
  CHECK_FALSE(derived.enums.contains("DroppedEnum"));
}

TEST_CASE("transforming records") {
  Diagnostics diags;
  TransformSpec spec = fixture_spec(diags);
  auto records =
      load_records_file(test_support::fixtures_dir() / "legacy_samples.tsv", "Sample");
  REQUIRE(records.size() == 7);

  SUBCASE("the first row splits and renames into the frozen expectation") {
    DataRecord out = transform_record(spec, records[0]);
    DataRecord expected;
    expected.asserted_class = "Sample";
    expected.set("id", Value("S1"));
    expected.set("latitude", Value(36.1069));
    expected.set("longitude", Value(-112.1129));
    expected.set("sample_type", Value("soil"));
    expected.set("K", Value(220.8));
    CHECK(out == expected);
  }
  SUBCASE("a missing source slot yields missing targets, never fabricated values") {
    DataRecord out = transform_record(spec, records[2]);  // S3 has no position
    CHECK(out.find("latitude") == nullptr);
    CHECK(out.find("longitude") == nullptr);
    CHECK(out.find("sample_type")->as_string() == "forest");
  }
  SUBCASE("an unsplittable value fails naming the value") {
    try {
      transform_record(spec, records[5]);  // 66.5° varies
      FAIL("expected TransformError");
    } catch (const TransformError& e) {
      CHECK(std::string(e.what()).find("66.5\u00b0 varies") != std::string::npos);
    }
  }
  SUBCASE("collections preserve record count with per-record failures") {
    auto outcomes = transform_collection(spec, records);
    REQUIRE(outcomes.size() == 7);
    int ok = 0, failed = 0;
    for (const auto& o : outcomes) o.ok() ? ++ok : ++failed;
    CHECK(ok == 5);
    CHECK(failed == 2);  // the prose position and the "varies" position
  }
  SUBCASE("records of unbound classes pass through unchanged") {
    DataRecord other;
    other.asserted_class = "Other";
    other.set("anything", Value(1));
    CHECK(transform_record(spec, other) == other);
  }
}

TEST_CASE("conformance transport: transformed rows validate against the derived schema") {
  Diagnostics diags;
  TransformSpec spec = fixture_spec(diags);
  SchemaDefinition source = legacy_schema();
  CompiledSchema derived = [&] {
    Diagnostics local;
    return compile_schema(merge(derive_schema(spec, source, local)), local);
  }();
  auto records =
      load_records_file(test_support::fixtures_dir() / "legacy_samples.tsv", "Sample");
  auto outcomes = transform_collection(spec, records);
  int transported = 0;
  for (const auto& outcome : outcomes) {
    if (!outcome.ok()) continue;
    ValidationReport report = validate_record(derived, *outcome.record);
    CAPTURE(report_to_text(report));
    CHECK(report.valid());
    ++transported;
  }
  CHECK(transported == 5);
}

TEST_CASE("separator splits and target type parsing") {
  Diagnostics diags;
  SchemaDefinition source = parse("id: https://example.org/sep\n"
                                  "name: sep\n"
                                  "classes:\n"
                                  "  Row:\n"
                                  "    attributes:\n"
                                  "      pair: {}\n");
  TransformSpec spec = parse_transform_spec("transformations:\n"
                                            "- class: Row\n"
                                            "  rules:\n"
                                            "  - split_slot:\n"
                                            "      from: pair\n"
                                            "      separator: \"|\"\n"
                                            "      targets:\n"
                                            "      - {slot: count, type: integer}\n"
                                            "      - {slot: label, type: string}\n",
                                            diags);
  validate_transform_spec(spec, source);

  DataRecord row;
  row.asserted_class = "Row";
  row.set("pair", Value("42|answer"));
  DataRecord out = transform_record(spec, row);
  CHECK(out.find("count")->as_integer() == 42);
  CHECK(out.find("label")->as_string() == "answer");

  SUBCASE("wrong part count is a split failure") {
    DataRecord bad;
    bad.asserted_class = "Row";
    bad.set("pair", Value("a|b|c"));
    CHECK_THROWS_AS(transform_record(spec, bad), TransformError);
  }
  SUBCASE("an unparseable target type is reported") {
    DataRecord bad;
    bad.asserted_class = "Row";
    bad.set("pair", Value("not_a_number|label"));
    try {
      transform_record(spec, bad);
      FAIL("expected TransformError");
    } catch (const TransformError& e) {
      CHECK(std::string(e.what()).find("not_a_number") != std::string::npos);
      CHECK(std::string(e.what()).find("count") != std::string::npos);
    }
  }
}

TEST_CASE("copy_slot is an explicit identity that still counts as consumption") {
  Diagnostics diags;
  SchemaDefinition source = legacy_schema();
  SUBCASE("copying carries the slot through unchanged") {
    TransformSpec spec = parse_transform_spec("transformations:\n"
                                              "- class: Sample\n"
                                              "  rules:\n"
                                              "  - copy_slot: {name: K}\n",
                                              diags);
    SchemaDefinition derived = derive_schema(spec, source, diags);
    CHECK(derived.classes.find("Sample")->attributes.contains("K"));
    DataRecord r;
    r.asserted_class = "Sample";
    r.set("K", Value(1.5));
    CHECK(transform_record(spec, r) == r);
  }
  SUBCASE("copying and renaming the same slot conflict") {
    TransformSpec spec = parse_transform_spec("transformations:\n"
                                              "- class: Sample\n"
                                              "  rules:\n"
                                              "  - copy_slot: {name: depth}\n"
                                              "  - rename_slot: {from: depth, to: d2}\n",
                                              diags);
    CHECK_THROWS_AS(validate_transform_spec(spec, source), TransformError);
  }
}

TEST_CASE("class renames update every reference") {
  Diagnostics diags;
  SchemaDefinition source = parse("id: https://example.org/c\n"
                                  "name: c\n"
                                  "classes:\n"
                                  "  Old:\n"
                                  "  Holder:\n"
                                  "    attributes:\n"
                                  "      ref: {range: Old}\n"
                                  "  Child:\n"
                                  "    is_a: Old\n");
  TransformSpec spec = parse_transform_spec("transformations:\n"
                                            "- class: Old\n"
                                            "  target: New\n",
                                            diags);
  SchemaDefinition derived = derive_schema(spec, source, diags);
  CHECK_FALSE(derived.classes.contains("Old"));
  CHECK(derived.classes.contains("New"));
  CHECK(derived.classes.find("Holder")->attributes.find("ref")->range == "New");
  CHECK(derived.classes.find("Child")->is_a == "New");
}
