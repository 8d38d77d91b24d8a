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

#include <optional>
#include <string>
#include <vector>

#include "schemaforge/metamodel.hpp"
#include "schemaforge/values.hpp"

namespace schemaforge {

struct SplitTarget {
  std::string slot;
  std::string type;  // range of the new slot; base-kind names drive value parsing

  bool operator==(const SplitTarget&) const = default;
};

struct TransformRule {
  enum class Kind { RenameSlot, SplitSlot, CopySlot, DropSlot, SubsetClasses };
  Kind kind = Kind::RenameSlot;
  std::string from;                       // rename/split source slot
  std::string to;                         // rename target
  std::string name;                       // copy/drop subject
  std::optional<std::string> separator;   // split: literal separator
  std::optional<std::string> pattern;     // split: full-match pattern with capture groups
  std::vector<SplitTarget> targets;       // split
  std::vector<std::string> keep;          // subset

  bool operator==(const TransformRule&) const = default;
};

struct ClassBinding {
  std::string source_class;
  std::optional<std::string> target_class;  // rename of the class itself
  std::vector<TransformRule> rules;

  bool operator==(const ClassBinding&) const = default;
};

/// Declarative schema/data transformation: per-class rule lists under a
/// top-level `transformations` key.
struct TransformSpec {
  std::vector<ClassBinding> bindings;

  const ClassBinding* binding_for(std::string_view source_class) const {
    for (const auto& b : bindings)
      if (b.source_class == source_class) return &b;
    return nullptr;
  }

  bool operator==(const TransformSpec&) const = default;
};

/// Parses a transformation document. Unknown rule kinds are errors; a
/// self-referential rename (from == to) is a warning.
TransformSpec parse_transform_spec(std::string_view text, Diagnostics& diags);

/// Checks the spec against a source schema: classes and slots resolve,
/// split targets are distinct, and no source slot is consumed by more than
/// one rule. Throws TransformError.
void validate_transform_spec(const TransformSpec& spec, const SchemaDefinition& source);

/// The target schema: renamed slots keep all metadata except the name, split
/// sources are replaced by their typed targets, dropped slots are gone, and
/// a subset keeps the listed classes plus their ancestor closure and
/// referenced ranges.
SchemaDefinition derive_schema(const TransformSpec& spec, const SchemaDefinition& source,
                               Diagnostics& diags);

/// Applies the spec to one record. Rename moves the value, split parses it
/// into the ordered targets, drop removes it, everything else passes through
/// unchanged; missing sources yield missing targets. Throws TransformError
/// on a split or target-type parse failure, naming the offending value.
DataRecord transform_record(const TransformSpec& spec, const DataRecord& record);

/// Per-record outcome of a collection transform; exactly one entry per input
/// record, failures reported in place rather than dropped.
struct TransformOutcome {
  std::optional<DataRecord> record;
  std::string error;

  bool ok() const { return record.has_value(); }
};

std::vector<TransformOutcome> transform_collection(const TransformSpec& spec,
                                                   const std::vector<DataRecord>& records);

}  // namespace schemaforge
