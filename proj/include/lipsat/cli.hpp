// Copyright 2026 The lipsat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "lipsat/field.hpp"

namespace lipsat::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Field element as expression text with rational content pulled out, so
/// polynomial factors such as (1 - 2*t^3) stay visible.
std::string expression_text(const FieldElem& e);

enum ExitCode { kPass = 0, kFail = 1, kIndeterminate = 2, kError = 3 };

/// Runs one command line (without the program name), writes the certificate
/// to out and diagnostics to err, returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lipsat::cli
