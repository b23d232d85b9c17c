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

#include <stdexcept>
#include <string>
#include <string_view>

namespace lipsat {

enum class ErrorKind {
  UnknownSymbol,
  DivisionByZero,
  UnsupportedExtension,
  NotAUnit,
  PrecisionExceeded,
  NotIsolated,
  IndeterminateOrder,
  HypothesisUnmet,
  InternalCriterionMismatch,
  NotAFiberPair,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure surfaced by the engine carries one of the kinds above; the
/// CLI maps them onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace lipsat
