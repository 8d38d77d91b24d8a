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

#include <stdexcept>
#include <string>
#include <vector>

namespace schemaforge {

enum class Severity { Warning, Error };

inline const char* severity_name(Severity s) {
  return s == Severity::Error ? "error" : "warning";
}

/// A non-fatal message produced while loading, converting, or compiling a
/// schema. Fatal conditions are exceptions instead.
struct Diagnostic {
  Severity severity = Severity::Warning;
  std::string message;
  std::string context;  // element name, document path, or cell reference

  bool operator==(const Diagnostic&) const = default;
};

using Diagnostics = std::vector<Diagnostic>;

inline void warn(Diagnostics& diags, std::string message, std::string context = {}) {
  diags.push_back({Severity::Warning, std::move(message), std::move(context)});
}

//
// Error taxonomy. Every hard failure raised by the library derives from
// SchemaError so callers can catch one type at the boundary.
//

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in an input document, annotated with a 1-based position.
class ParseError : public SchemaError {
 public:
  ParseError(const std::string& msg, int line, int column)
      : SchemaError(msg + " (line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  explicit ParseError(const std::string& msg) : SchemaError(msg), line_(0), column_(0) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A schema value violates a structural invariant of the metamodel.
class InvariantError : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

/// An import reference cannot be resolved to a document.
class ImportError : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

/// A cycle in imports or in the class inheritance graph.
class CycleError : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

/// Two declarations disagree in a way that has no defined winner.
class ConflictError : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

/// A reference failed to resolve or merge during schema compilation.
class CompileError : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

/// A transformation spec is malformed or does not fit the source schema.
class TransformError : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

/// A tool configuration file is malformed.
class ConfigError : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

}  // namespace schemaforge
