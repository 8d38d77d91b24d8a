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

namespace schemaforge {

// Exit codes shared by every subcommand.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFindings = 1;  // validation or lint errors in the input data/schema
inline constexpr int kUsage = 2;
inline constexpr int kInput = 3;  // parse or I/O failure
}  // namespace exit_code

/// Entry point behind the schemaforge binary. `args` excludes the program
/// name. Reports and generator outputs go to standard output; diagnostics
/// and errors go to standard error.
int run(std::vector<std::string> args);

}  // namespace schemaforge
