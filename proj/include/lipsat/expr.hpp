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

#include <memory>
#include <string>
#include <vector>

#include "lipsat/bipoly.hpp"
#include "lipsat/polar.hpp"

namespace lipsat {

/// Polynomial expression tree. x and y are the germ variables, zeta_N is a
/// primitive N-th root of unity, every other identifier is a parameter.
struct PolyExpr {
  enum class Kind { Number, Ident, Neg, Add, Sub, Mul, Pow };
  Kind kind = Kind::Number;
  Rational value = 0;       // Number
  std::string name;         // Ident
  unsigned exponent = 0;    // Pow
  std::vector<PolyExpr> args;

  friend bool operator==(const PolyExpr& a, const PolyExpr& b);
};

PolyExpr parse_poly(const std::string& text);
/// Minimal-parenthesis rendering that parses back to the same tree.
std::string to_string(const PolyExpr& e);
BiPoly to_bipoly(const PolyExpr& e);
BiPoly parse_bipoly(const std::string& text);
/// A constant expression (no x, y) as a field element.
FieldElem parse_constant(const std::string& text);

/// One line `x1=...; y1=...; x2=...; y2=...` with terms `coef*t^(num/den)`.
PairCurve parse_pair_line(const std::string& line);
std::vector<PairCurve> parse_pairs(const std::string& text);
std::vector<PairCurve> parse_pairs_file(const std::string& path);

}  // namespace lipsat
